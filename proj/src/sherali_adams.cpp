#include "gaplab/sherali_adams.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gaplab {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string joinInts(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::vector<int> splitInts(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

// All subsets of {0..n-1} with size <= r, ordered by (size, lex).
std::vector<std::vector<int>> subsetsUpTo(int n, int r) {
  std::vector<std::vector<int>> out;
  out.push_back({});
  for (int size = 1; size <= std::min(n, r); ++size) {
    std::vector<int> comb(size);
    std::function<void(int, int)> gen = [&](int start, int pos) {
      if (pos == size) {
        out.emplace_back(comb);
        return;
      }
      for (int i = start; i < n; ++i) {
        comb[pos] = i;
        gen(i + 1, pos + 1);
      }
    };
    gen(0, 0);
  }
  return out;
}

std::vector<int> setUnion(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> setInsert(const std::vector<int>& a, int x) {
  std::vector<int> out = a;
  auto it = std::lower_bound(out.begin(), out.end(), x);
  if (it == out.end() || *it != x) out.insert(it, x);
  return out;
}

}  // namespace

std::string saKey(const SetAssignment& sa) { return joinInts(sa.vars) + "|" + joinInts(sa.vals); }

SetAssignment saKeyParse(const std::string& key) {
  auto bar = key.find('|');
  if (bar == std::string::npos) throw GaplabError("SA key without '|': " + key);
  SetAssignment sa;
  sa.vars = splitInts(key.substr(0, bar));
  sa.vals = splitInts(key.substr(bar + 1));
  if (sa.vars.size() != sa.vals.size()) throw GaplabError("SA key arity mismatch: " + key);
  return sa;
}

Rational LocalDistributionFamily::mass(const std::vector<int>& vars, const Tuple& vals) const {
  auto it = dists.find(vars);
  if (it == dists.end()) throw GaplabError("family has no distribution for the requested set");
  auto jt = it->second.find(vals);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

std::optional<std::string> familyViolation(const LocalDistributionFamily& fam) {
  if (fam.dists.find(std::vector<int>{}) == fam.dists.end())
    return "family misses the empty set distribution";
  for (const auto& [vars, dist] : fam.dists) {
    if (static_cast<int>(vars.size()) > fam.rounds)
      return "set {" + joinInts(vars) + "} exceeds the round bound";
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] < 0 || vars[i] >= fam.numVars) return "set index out of range";
      if (i > 0 && vars[i] <= vars[i - 1]) return "set not strictly ascending";
    }
    Rational total = 0;
    for (const auto& [vals, mass] : dist) {
      if (vals.size() != vars.size()) return "assignment arity mismatch on {" + joinInts(vars) + "}";
      for (int v : vals)
        if (v < 0 || v >= fam.domainSize) return "assignment value out of range";
      if (mass < 0) return "negative mass on {" + joinInts(vars) + "}";
      total += mass;
    }
    if (total != 1) return "masses on {" + joinInts(vars) + "} sum to " + toString(total);
  }
  // Marginal agreement with every immediate subset; implies full consistency.
  for (const auto& [vars, dist] : fam.dists) {
    for (std::size_t drop = 0; drop < vars.size(); ++drop) {
      std::vector<int> sub = vars;
      sub.erase(sub.begin() + drop);
      auto it = fam.dists.find(sub);
      if (it == fam.dists.end())
        return "family misses subset {" + joinInts(sub) + "} of {" + joinInts(vars) + "}";
      std::map<Tuple, Rational> marg;
      for (const auto& [vals, mass] : dist) {
        if (mass == 0) continue;
        Tuple sv = vals;
        sv.erase(sv.begin() + drop);
        marg[sv] += mass;
      }
      for (const auto& [vals, mass] : it->second) {
        Rational lhs = marg.count(vals) ? marg[vals] : Rational(0);
        if (lhs != mass)
          return "marginal of {" + joinInts(vars) + "} onto {" + joinInts(sub) +
                 "} disagrees at " + joinInts(vals);
      }
      for (const auto& [vals, mass] : marg) {
        auto jt = it->second.find(vals);
        Rational rhs = jt == it->second.end() ? Rational(0) : jt->second;
        if (mass != rhs)
          return "marginal of {" + joinInts(vars) + "} onto {" + joinInts(sub) +
                 "} disagrees at " + joinInts(vals);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> saFeasibilityViolation(const SaSolution& x) {
  const int n = x.numVars, R = x.domainSize, r = x.rounds;
  SetAssignment empty;
  auto root = x.entries.find(empty);
  if (root == x.entries.end() || root->second != 1) return "X_(0,0) must equal 1";
  for (const auto& [key, val] : x.entries) {
    if (val < 0) return "negative entry at " + saKey(key);
  }
  auto lookup = [&](const SetAssignment& sa) -> const Rational* {
    auto it = x.entries.find(sa);
    return it == x.entries.end() ? nullptr : &it->second;
  };
  for (const auto& S : subsetsUpTo(n, std::min(r, n))) {
    std::uint64_t count = powWithin(R, static_cast<unsigned>(S.size()), std::uint64_t(1) << 30);
    if (count == 0) return "assignment space too large to validate";
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      SetAssignment sa{S, tupleFromIndex(idx, static_cast<int>(S.size()), R)};
      const Rational* base = lookup(sa);
      if (!base) return "missing entry " + saKey(sa);
      if (static_cast<int>(S.size()) >= r) continue;
      for (int j = 0; j < n; ++j) {
        if (std::binary_search(S.begin(), S.end(), j)) continue;
        auto pos = std::lower_bound(S.begin(), S.end(), j) - S.begin();
        Rational sum = 0;
        for (int u = 0; u < R; ++u) {
          SetAssignment ext;
          ext.vars = setInsert(S, j);
          ext.vals = sa.vals;
          ext.vals.insert(ext.vals.begin() + pos, u);
          const Rational* e = lookup(ext);
          if (!e) return "missing entry " + saKey(ext);
          sum += *e;
        }
        if (sum != *base)
          return "junction equality violated at " + saKey(sa) + " with variable " +
                 std::to_string(j);
      }
    }
  }
  return std::nullopt;
}

LinearProgram buildSaLp(const CspInstance& inst, int rounds) {
  int maxArity = 0;
  for (const auto& c : inst.constraints)
    maxArity = std::max(maxArity, static_cast<int>(c.support.size()));
  if (rounds < maxArity)
    throw GaplabError("SA rounds must be at least the maximum constraint arity");

  const int n = inst.numVars, R = inst.domainSize;
  LinearProgram lp;
  lp.sense = Sense::Maximize;

  auto subsets = subsetsUpTo(n, std::min(rounds, n));
  for (const auto& S : subsets) {
    std::uint64_t count = powWithin(R, static_cast<unsigned>(S.size()), std::uint64_t(1) << 30);
    if (count == 0) throw GaplabError("SA variable space too large");
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      SetAssignment sa{S, tupleFromIndex(idx, static_cast<int>(S.size()), R)};
      lp.addVariable("X[" + saKey(sa) + "]");
    }
  }
  auto var = [&](const SetAssignment& sa) {
    int id = lp.variableIndex("X[" + saKey(sa) + "]");
    if (id < 0) throw GaplabError("internal: SA variable not declared");
    return id;
  };

  for (const auto& c : inst.constraints) {
    std::uint64_t count =
        powWithin(R, static_cast<unsigned>(c.support.size()), std::uint64_t(1) << 30);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      SetAssignment sa{c.support, tupleFromIndex(idx, static_cast<int>(c.support.size()), R)};
      if (std::binary_search(c.accepting.begin(), c.accepting.end(), sa.vals)) {
        int id = var(sa);
        lp.setObjective(id, lp.objective[id] + c.weight);
      }
    }
  }

  // Junction equalities, nonnegativity, X_(0,0) = 1, exactly as displayed.
  for (const auto& S : subsets) {
    if (static_cast<int>(S.size()) >= rounds) continue;
    std::uint64_t count = powWithin(R, static_cast<unsigned>(S.size()), std::uint64_t(1) << 30);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      SetAssignment sa{S, tupleFromIndex(idx, static_cast<int>(S.size()), R)};
      for (int j = 0; j < n; ++j) {
        if (std::binary_search(S.begin(), S.end(), j)) continue;
        auto pos = std::lower_bound(S.begin(), S.end(), j) - S.begin();
        std::vector<std::pair<int, Rational>> row;
        for (int u = 0; u < R; ++u) {
          SetAssignment ext;
          ext.vars = setInsert(S, j);
          ext.vals = sa.vals;
          ext.vals.insert(ext.vals.begin() + pos, u);
          row.emplace_back(var(ext), Rational(1));
        }
        row.emplace_back(var(sa), Rational(-1));
        lp.addConstraint(std::move(row), Rel::Eq, Rational(0));
      }
    }
  }
  for (const auto& S : subsets) {
    std::uint64_t count = powWithin(R, static_cast<unsigned>(S.size()), std::uint64_t(1) << 30);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      SetAssignment sa{S, tupleFromIndex(idx, static_cast<int>(S.size()), R)};
      lp.addConstraint({{var(sa), Rational(1)}}, Rel::Ge, Rational(0));
    }
  }
  lp.addConstraint({{var(SetAssignment{}), Rational(1)}}, Rel::Eq, Rational(1));
  return lp;
}

SaSolution localToSa(const LocalDistributionFamily& fam) {
  if (auto why = familyViolation(fam)) throw GaplabError("inconsistent family: " + *why);
  SaSolution x;
  x.rounds = fam.rounds;
  x.domainSize = fam.domainSize;
  x.numVars = fam.numVars;
  for (const auto& [vars, dist] : fam.dists) {
    std::uint64_t count =
        powWithin(fam.domainSize, static_cast<unsigned>(vars.size()), std::uint64_t(1) << 30);
    if (count == 0) throw GaplabError("assignment space too large to expand");
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Tuple vals = tupleFromIndex(idx, static_cast<int>(vars.size()), fam.domainSize);
      auto it = dist.find(vals);
      x.entries[SetAssignment{vars, vals}] = it == dist.end() ? Rational(0) : it->second;
    }
  }
  return x;
}

LocalDistributionFamily saToLocal(const SaSolution& x) {
  if (auto why = saFeasibilityViolation(x)) throw GaplabError("infeasible SA point: " + *why);
  LocalDistributionFamily fam;
  fam.rounds = x.rounds;
  fam.domainSize = x.domainSize;
  fam.numVars = x.numVars;
  for (const auto& S : subsetsUpTo(x.numVars, std::min(x.rounds, x.numVars)))
    fam.dists[S] = {};
  for (const auto& [key, val] : x.entries) {
    if (val != 0) fam.dists[key.vars][key.vals] = val;
  }
  return fam;
}

Rational saValue(const CspInstance& inst, const LocalDistributionFamily& fam) {
  if (inst.constraints.empty()) return 1;
  Rational val = 0;
  for (const auto& c : inst.constraints) {
    auto it = fam.dists.find(c.support);
    if (it == fam.dists.end())
      throw GaplabError("family misses the support {" + joinInts(c.support) + "}");
    Rational p = 0;
    for (const auto& a : c.accepting) {
      auto jt = it->second.find(a);
      if (jt != it->second.end()) p += jt->second;
    }
    val += c.weight * p;
  }
  return val;
}

SaSolution saFromLpPoint(const CspInstance& inst, int rounds, const LinearProgram& lp,
                         const std::vector<Rational>& point) {
  SaSolution x;
  x.rounds = rounds;
  x.domainSize = inst.domainSize;
  x.numVars = inst.numVars;
  for (std::size_t j = 0; j < lp.variables.size(); ++j) {
    const std::string& name = lp.variables[j];
    if (name.size() < 3 || name.front() != 'X') continue;
    x.entries[saKeyParse(name.substr(2, name.size() - 3))] = point[j];
  }
  return x;
}

SaOptimum saOptimum(const CspInstance& inst, int rounds) {
  LinearProgram lp = buildSaLp(inst, rounds);
  LpSolution sol = solve(lp);
  if (sol.status != LpStatus::Optimal)
    throw GaplabError("SA relaxation did not solve to optimality");
  SaOptimum out;
  out.value = inst.constraints.empty() ? Rational(1) : sol.value;
  out.point = saFromLpPoint(inst, rounds, lp, sol.point);
  out.lpSize = lp.size();
  out.lpVariables = lp.variables.size();
  return out;
}

LocalDistributionFamily pointFamily(const CspInstance& inst, const Assignment& x, int rounds) {
  LocalDistributionFamily fam;
  fam.rounds = rounds;
  fam.domainSize = inst.domainSize;
  fam.numVars = inst.numVars;
  for (const auto& S : subsetsUpTo(inst.numVars, std::min(rounds, inst.numVars))) {
    Tuple vals;
    for (int v : S) vals.push_back(x.values[v]);
    fam.dists[S][vals] = 1;
  }
  return fam;
}

LocalDistributionFamily uniformFamily(int numVars, int domainSize, int rounds) {
  LocalDistributionFamily fam;
  fam.rounds = rounds;
  fam.domainSize = domainSize;
  fam.numVars = numVars;
  for (const auto& S : subsetsUpTo(numVars, std::min(rounds, numVars))) {
    std::uint64_t count =
        powWithin(domainSize, static_cast<unsigned>(S.size()), std::uint64_t(1) << 30);
    if (count == 0) throw GaplabError("assignment space too large for a uniform family");
    Rational mass = Rational(1) / Rational(static_cast<long>(count));
    for (std::uint64_t idx = 0; idx < count; ++idx)
      fam.dists[S][tupleFromIndex(idx, static_cast<int>(S.size()), domainSize)] = mass;
  }
  return fam;
}

// ---- generic lift ----

namespace {

class LiftBuilder {
 public:
  LiftBuilder(int universe, int rounds, Sense sense) : universe_(universe), rounds_(rounds) {
    lp_.sense = sense;
    for (const auto& H : subsetsUpTo(universe, rounds))
      lp_.addVariable("y[" + joinInts(H) + "]");
  }

  int var(const std::vector<int>& H) {
    int id = lp_.variableIndex("y[" + joinInts(H) + "]");
    if (id < 0) throw GaplabError("internal: lifted variable y[" + joinInts(H) + "] missing");
    return id;
  }

  void addRow(const std::map<int, Rational>& coeffs, Rel rel, const Rational& rhs) {
    std::vector<std::pair<int, Rational>> row;
    std::string fingerprint;
    for (const auto& [v, c] : coeffs) {
      if (c == 0) continue;
      row.emplace_back(v, c);
      fingerprint += std::to_string(v) + "*" + toString(c) + ";";
    }
    fingerprint += "#" + std::to_string(static_cast<int>(rel)) + "#" + toString(rhs);
    if (row.empty()) {
      bool holds = rel == Rel::Le ? !(Rational(0) > rhs)
                 : rel == Rel::Ge ? !(Rational(0) < rhs)
                                  : rhs == 0;
      if (holds) return;  // vacuous row
    }
    if (!seen_.insert(fingerprint).second) return;
    lp_.addConstraint(row, rel, rhs);
  }

  // Enumerates disjoint S, T with |S u T| < rounds.
  template <typename F>
  void forEachSt(bool tEmptyOnly, F&& f) {
    for (const auto& S : subsetsUpTo(universe_, rounds_ - 1)) {
      if (tEmptyOnly) {
        f(S, std::vector<int>{});
        continue;
      }
      std::vector<int> rest;
      for (int i = 0; i < universe_; ++i)
        if (!std::binary_search(S.begin(), S.end(), i)) rest.push_back(i);
      int room = rounds_ - 1 - static_cast<int>(S.size());
      for (const auto& Tidx : subsetsUpTo(static_cast<int>(rest.size()), room)) {
        std::vector<int> T;
        for (int p : Tidx) T.push_back(rest[p]);
        std::sort(T.begin(), T.end());
        f(S, T);
      }
    }
  }

  // All (H, (-1)^|H|) for H subset of T.
  static std::vector<std::pair<std::vector<int>, int>> signedSubsets(const std::vector<int>& T) {
    std::vector<std::pair<std::vector<int>, int>> out;
    const int t = static_cast<int>(T.size());
    for (int mask = 0; mask < (1 << t); ++mask) {
      std::vector<int> H;
      for (int i = 0; i < t; ++i)
        if (mask & (1 << i)) H.push_back(T[i]);
      out.emplace_back(std::move(H), __builtin_popcount(mask) % 2 == 0 ? 1 : -1);
    }
    return out;
  }

  LinearProgram take() { return std::move(lp_); }

 private:
  int universe_;
  int rounds_;
  LinearProgram lp_;
  std::set<std::string> seen_;
};

}  // namespace

LinearProgram genericSaLift(const LinearProgram& blp, int rounds) {
  if (rounds < 1) throw GaplabError("generic SA lift needs at least one round");
  blp.validate();
  const int n = static_cast<int>(blp.variables.size());

  // Normalize every inequality to Le; equalities stay.
  struct NRow {
    std::vector<std::pair<int, Rational>> coeffs;
    Rational rhs;
    bool equality;
  };
  std::vector<NRow> base;
  for (const auto& c : blp.constraints) {
    NRow row{c.coeffs, c.rhs, c.rel == Rel::Eq};
    if (c.rel == Rel::Ge) {
      for (auto& [v, coef] : row.coeffs) coef = -coef;
      row.rhs = -row.rhs;
    }
    base.push_back(std::move(row));
  }

  LiftBuilder lb(n, rounds, blp.sense);
  lb.forEachSt(false, [&](const std::vector<int>& S, const std::vector<int>& T) {
    auto signedH = LiftBuilder::signedSubsets(T);
    for (const auto& row : base) {
      std::map<int, Rational> coeffs;
      for (const auto& [H, sign] : signedH) {
        std::vector<int> HS = setUnion(H, S);
        for (const auto& [j, a] : row.coeffs) coeffs[lb.var(setInsert(HS, j))] += sign * a;
        coeffs[lb.var(HS)] -= sign * row.rhs;
      }
      lb.addRow(coeffs, row.equality ? Rel::Eq : Rel::Le, Rational(0));
    }
    for (int j = 0; j < n; ++j) {
      std::map<int, Rational> expr;
      for (const auto& [H, sign] : signedH)
        expr[lb.var(setInsert(setUnion(H, S), j))] += sign;
      lb.addRow(expr, Rel::Ge, Rational(0));
      lb.addRow(expr, Rel::Le, Rational(1));
    }
  });

  LinearProgram lp = lb.take();
  lp.addConstraint({{lp.variableIndex("y[]"), Rational(1)}}, Rel::Eq, Rational(1));
  for (int j = 0; j < n; ++j) {
    if (blp.objective[j] != 0)
      lp.setObjective(lp.variableIndex("y[" + std::to_string(j) + "]"), blp.objective[j]);
  }
  lp.objectiveConstant = blp.objectiveConstant;
  return lp;
}

LinearProgram cspBinaryEncoding(const CspInstance& inst) {
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  for (int j = 0; j < inst.numVars; ++j)
    for (int u = 0; u < inst.domainSize; ++u)
      lp.addVariable("x(" + std::to_string(j) + "," + std::to_string(u) + ")");
  for (int j = 0; j < inst.numVars; ++j) {
    std::vector<std::pair<int, Rational>> row;
    for (int u = 0; u < inst.domainSize; ++u)
      row.emplace_back(j * inst.domainSize + u, Rational(1));
    lp.addConstraint(std::move(row), Rel::Eq, Rational(1));
  }
  return lp;
}

LinearProgram cspGenericSaLift(const CspInstance& inst, int rounds, bool tEmptyOnly) {
  if (rounds < 1) throw GaplabError("generic SA lift needs at least one round");
  int maxArity = 0;
  for (const auto& c : inst.constraints)
    maxArity = std::max(maxArity, static_cast<int>(c.support.size()));
  if (rounds < maxArity)
    throw GaplabError("SA rounds must be at least the maximum constraint arity");

  const int n = inst.numVars, R = inst.domainSize;
  const int universe = n * R;  // item j*R+u stands for the indicator x(j,u)
  LiftBuilder lb(universe, rounds, Sense::Maximize);

  lb.forEachSt(tEmptyOnly, [&](const std::vector<int>& S, const std::vector<int>& T) {
    auto signedH = LiftBuilder::signedSubsets(T);
    for (int j = 0; j < n; ++j) {
      std::map<int, Rational> coeffs;
      for (const auto& [H, sign] : signedH) {
        std::vector<int> HS = setUnion(H, S);
        for (int u = 0; u < R; ++u) coeffs[lb.var(setInsert(HS, j * R + u))] += sign;
        coeffs[lb.var(HS)] -= sign;
      }
      lb.addRow(coeffs, Rel::Eq, Rational(0));
    }
    for (int item = 0; item < universe; ++item) {
      std::map<int, Rational> expr;
      for (const auto& [H, sign] : signedH)
        expr[lb.var(setInsert(setUnion(H, S), item))] += sign;
      lb.addRow(expr, Rel::Ge, Rational(0));
    }
  });

  LinearProgram lp = lb.take();
  lp.addConstraint({{lp.variableIndex("y[]"), Rational(1)}}, Rel::Eq, Rational(1));

  // Degree-k objective: one monomial per accepting tuple of each constraint.
  for (const auto& c : inst.constraints) {
    for (const auto& a : c.accepting) {
      std::vector<int> items;
      for (std::size_t i = 0; i < c.support.size(); ++i)
        items.push_back(c.support[i] * R + a[i]);
      std::sort(items.begin(), items.end());
      int id = lp.variableIndex("y[" + joinInts(items) + "]");
      if (id < 0) throw GaplabError("internal: objective monomial variable missing");
      lp.setObjective(id, lp.objective[id] + c.weight);
    }
  }
  return lp;
}

AppendixAReport verifyAppendixAEquivalence(const CspInstance& inst, int rounds) {
  AppendixAReport rep;
  LinearProgram generic = cspGenericSaLift(inst, rounds, false);
  LinearProgram tempty = cspGenericSaLift(inst, rounds, true);
  LinearProgram canonical = buildSaLp(inst, rounds);

  LpSolution a = solve(generic);
  LpSolution b = solve(tempty);
  LpSolution c = solve(canonical);
  if (a.status != LpStatus::Optimal || b.status != LpStatus::Optimal ||
      c.status != LpStatus::Optimal)
    throw GaplabError("generic lift did not solve to optimality");
  rep.genericOpt = a.value;
  rep.tEmptyOpt = b.value;
  rep.canonicalOpt = c.value;
  rep.optimaEqual = a.value == c.value && b.value == c.value;

  // Contradictory pair variables must be forced to zero by the lifted system.
  rep.contradictoryForcedZero = true;
  if (rounds >= 2) {
    const int R = inst.domainSize;
    for (int j = 0; j < inst.numVars && rep.contradictoryForcedZero; ++j) {
      for (int u1 = 0; u1 < R && rep.contradictoryForcedZero; ++u1) {
        for (int u2 = u1 + 1; u2 < R && rep.contradictoryForcedZero; ++u2) {
          LinearProgram probe = generic;
          for (auto& coef : probe.objective) coef = 0;
          std::string name =
              "y[" + std::to_string(j * R + u1) + "," + std::to_string(j * R + u2) + "]";
          probe.setObjective(probe.variableIndex(name), Rational(1));
          probe.sense = Sense::Maximize;
          LpSolution s = solve(probe);
          if (s.status != LpStatus::Optimal || s.value != 0) {
            rep.contradictoryForcedZero = false;
            rep.detail = name + " maximizes to " +
                         (s.status == LpStatus::Optimal ? toString(s.value) : "non-optimal");
          }
        }
      }
    }
  }
  if (rep.detail.empty()) {
    rep.detail = "generic=" + toString(rep.genericOpt) + " tEmpty=" + toString(rep.tEmptyOpt) +
                 " canonical=" + toString(rep.canonicalOpt);
  }
  return rep;
}

std::string saSolutionToJson(const SaSolution& x) {
  ordered_json j;
  j["rounds"] = x.rounds;
  j["R"] = x.domainSize;
  j["n"] = x.numVars;
  ordered_json entries = ordered_json::object();
  for (const auto& [key, val] : x.entries) entries[saKey(key)] = toString(val);
  j["entries"] = entries;
  return j.dump(2);
}

SaSolution saSolutionFromJson(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  SaSolution x;
  x.rounds = j.at("rounds").get<int>();
  x.domainSize = j.at("R").get<int>();
  x.numVars = j.at("n").get<int>();
  for (auto it = j.at("entries").begin(); it != j.at("entries").end(); ++it)
    x.entries[saKeyParse(it.key())] = parseRational(it.value().get<std::string>());
  return x;
}

std::string familyToJson(const LocalDistributionFamily& fam) {
  ordered_json j;
  j["rounds"] = fam.rounds;
  j["R"] = fam.domainSize;
  j["n"] = fam.numVars;
  ordered_json masses = ordered_json::object();
  for (const auto& [vars, dist] : fam.dists) {
    for (const auto& [vals, mass] : dist)
      masses[saKey(SetAssignment{vars, vals})] = toString(mass);
  }
  j["masses"] = masses;
  return j.dump(2);
}

LocalDistributionFamily familyFromJson(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  LocalDistributionFamily fam;
  fam.rounds = j.at("rounds").get<int>();
  fam.domainSize = j.at("R").get<int>();
  fam.numVars = j.at("n").get<int>();
  for (auto it = j.at("masses").begin(); it != j.at("masses").end(); ++it) {
    SetAssignment sa = saKeyParse(it.key());
    Rational mass = parseRational(it.value().get<std::string>());
    fam.dists[sa.vars];
    if (mass != 0) fam.dists[sa.vars][sa.vals] = mass;
  }
  return fam;
}

}  // namespace gaplab
