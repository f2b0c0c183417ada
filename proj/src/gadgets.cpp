#include "gaplab/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "json.hpp"

namespace gaplab {

using ordered_json = nlohmann::ordered_json;

int freeIndexCount(const ReductionParams& p) {
  Rational m = p.eps * p.labelSize;
  if (m.get_den() != 1 || m < 0) throw GaplabError("eps * R must be a nonnegative integer");
  if (m >= p.labelSize)
    throw GaplabError("eps * R must be below R (the two sub-cubes would coincide)");
  return static_cast<int>(m.get_num().get_si());
}

bool SubCube::contains(const Tuple& z) const {
  if (z.size() != base.size()) return false;
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (std::binary_search(freeSet.begin(), freeSet.end(), static_cast<int>(j))) continue;
    if (z[j] != base[j]) return false;
  }
  return true;
}

namespace {

std::uint64_t boundedRand(std::mt19937_64& rng, std::uint64_t n) {
  // rejection sampling keeps the stream portable across standard libraries
  const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

struct Sides {
  std::vector<int> sideV, sideW;
  // neighbor list per vertex id: (w vertex id, permutation v-labels -> w-labels)
  std::vector<std::vector<std::pair<int, std::vector<int>>>> nbr;
  int degree = 0;
};

Sides splitSides(const UgInstance& u) {
  validateUg(u);
  auto parts = bipartition(u);
  if (!parts) throw GaplabError("reduction needs a bipartite Unique Games instance");
  auto deg = regularDegree(u);
  if (!deg || *deg == 0) throw GaplabError("reduction needs a regular instance with edges");
  Sides s;
  s.degree = *deg;
  s.nbr.resize(u.vertices.size());
  for (std::size_t i = 0; i < u.vertices.size(); ++i) {
    ((*parts)[i] == 0 ? s.sideV : s.sideW).push_back(static_cast<int>(i));
  }
  for (const auto& e : u.edges) {
    s.nbr[e.u].emplace_back(e.v, e.pi);
    s.nbr[e.v].emplace_back(e.u, inversePermutation(e.pi));
  }
  for (auto& lst : s.nbr)
    std::sort(lst.begin(), lst.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  return s;
}

// z with z[pi[l]] = y[l]: the string y re-indexed from v-labels to w-labels.
Tuple relabel(const Tuple& y, const std::vector<int>& pi) {
  Tuple z(y.size());
  for (std::size_t l = 0; l < y.size(); ++l) z[pi[l]] = y[l];
  return z;
}

template <typename F>
void forEachSubcubePoint(const Tuple& base, const std::vector<int>& freeSet, int q, F&& f) {
  const int k = static_cast<int>(freeSet.size());
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(q);
  Tuple y = base;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Tuple freeVals = tupleFromIndex(idx, k, q);
    for (int i = 0; i < k; ++i) y[freeSet[i]] = freeVals[i];
    f(y);
  }
}

// Walks the outcome distribution of the reductions: (v, ordered neighbor
// tuple, x in Z_q^R, ordered index tuple). Enumerate mode is exhaustive with
// the exact outcome probability; sample mode draws `sampleCount` outcomes of
// weight 1/count each.
template <typename F>
std::uint64_t forEachOutcome(const UgInstance& u, const Sides& s, const ReductionParams& p,
                             F&& emit) {
  const int R = p.labelSize;
  const int m = freeIndexCount(p);
  const int t = p.t;
  if (t < 1) throw GaplabError("repetition count t must be at least 1");
  if (R != u.labelSize) throw GaplabError("params label size does not match the instance");

  if (p.mode == ReductionMode::Sample) {
    if (p.sampleCount == 0) throw GaplabError("sample mode needs a positive draw count");
    std::mt19937_64 rng(p.seed);
    Rational w = Rational(1) / Rational(static_cast<long>(p.sampleCount));
    for (std::uint64_t draw = 0; draw < p.sampleCount; ++draw) {
      int v = s.sideV[boundedRand(rng, s.sideV.size())];
      std::vector<int> wChoice(t);
      for (int i = 0; i < t; ++i)
        wChoice[i] = static_cast<int>(boundedRand(rng, s.nbr[v].size()));
      Tuple x(R);
      for (int j = 0; j < R; ++j) x[j] = static_cast<int>(boundedRand(rng, p.q));
      std::vector<int> idxTuple(m);
      for (int i = 0; i < m; ++i) idxTuple[i] = static_cast<int>(boundedRand(rng, R));
      emit(v, wChoice, x, idxTuple, w);
    }
    return p.sampleCount;
  }

  std::uint64_t total = s.sideV.size();
  auto mulWithin = [&](std::uint64_t f) {
    if (f == 0 || total > p.budget / f)
      throw GaplabError("reduction outcome space exceeds budget");
    total *= f;
  };
  const std::uint64_t qR = powWithin(p.q, R, p.budget);
  const std::uint64_t Rm = powWithin(R, m, p.budget);
  std::uint64_t degPowT = 1;
  for (int i = 0; i < t; ++i) {
    if (degPowT > p.budget / s.degree)
      throw GaplabError("reduction outcome space exceeds budget");
    degPowT *= static_cast<std::uint64_t>(s.degree);
  }
  mulWithin(degPowT);
  mulWithin(qR);
  mulWithin(Rm);
  Rational w = Rational(1) / Rational(static_cast<long>(total));

  for (int v : s.sideV) {
    for (std::uint64_t wIdx = 0; wIdx < degPowT; ++wIdx) {
      std::vector<int> wChoice(t);
      std::uint64_t tmp = wIdx;
      for (int i = t - 1; i >= 0; --i) {
        wChoice[i] = static_cast<int>(tmp % s.degree);
        tmp /= s.degree;
      }
      for (std::uint64_t xIdx = 0; xIdx < qR; ++xIdx) {
        Tuple x = tupleFromIndex(xIdx, R, p.q);
        for (std::uint64_t iIdx = 0; iIdx < Rm; ++iIdx) {
          Tuple idxTuple = tupleFromIndex(iIdx, m, R);
          emit(v, wChoice, x, idxTuple, w);
        }
      }
    }
  }
  return total;
}

std::vector<int> sortedUnique(const Tuple& xs) {
  std::vector<int> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int sideIndex(const std::vector<int>& side, int vertex) {
  auto it = std::lower_bound(side.begin(), side.end(), vertex);
  if (it == side.end() || *it != vertex) throw GaplabError("vertex is not on the W side");
  return static_cast<int>(it - side.begin());
}

}  // namespace

int Reduction1f::varIndex(int w, const Tuple& x) const {
  const std::uint64_t block = std::uint64_t(1) << params.labelSize;
  return static_cast<int>(sideIndex(sideW, w) * block + indexFromTuple(x, 2));
}

int ReductionNe::varIndex(int w, const Tuple& zRep) const {
  std::uint64_t block = 1;
  for (int i = 1; i < params.labelSize; ++i) block *= static_cast<std::uint64_t>(params.q);
  Tuple tail(zRep.begin() + 1, zRep.end());
  return static_cast<int>(sideIndex(sideW, w) * block + indexFromTuple(tail, params.q));
}

Reduction1f ugTo1fCsp(const UgInstance& u, const ReductionParams& p) {
  if (p.q != 2) throw GaplabError("the one-free-bit reduction is binary (q = 2)");
  Sides s = splitSides(u);
  const int R = p.labelSize;

  Reduction1f red;
  red.source = u;
  red.sideV = s.sideV;
  red.sideW = s.sideW;
  red.params = p;
  const std::uint64_t block = std::uint64_t(1) << R;
  for (int w : s.sideW) {
    for (std::uint64_t xIdx = 0; xIdx < block; ++xIdx)
      red.varMeta.push_back(Var1f{w, tupleFromIndex(xIdx, R, 2)});
  }

  std::vector<CspConstraint> out;
  red.rawOutcomes = forEachOutcome(
      u, s, p,
      [&](int v, const std::vector<int>& wChoice, const Tuple& x, const Tuple& idxTuple,
          const Rational& weight) {
        std::vector<int> S = sortedUnique(idxTuple);
        Tuple xbar(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) xbar[j] = 1 - x[j];
        std::map<int, int> group;  // variable -> 1 (C_{x,S} side) or 2
        for (int i : wChoice) {
          const auto& [wVtx, pi] = s.nbr[v][i];
          forEachSubcubePoint(x, S, 2, [&](const Tuple& y) {
            group.emplace(red.varIndex(wVtx, relabel(y, pi)), 1);
          });
          forEachSubcubePoint(xbar, S, 2, [&](const Tuple& y) {
            auto [it, inserted] = group.emplace(red.varIndex(wVtx, relabel(y, pi)), 2);
            if (!inserted && it->second != 2)
              throw GaplabError("internal: sub-cube images overlap");
          });
        }
        CspConstraint c;
        c.weight = weight;
        Tuple acceptZero, acceptOne;
        for (const auto& [var, g] : group) {
          c.support.push_back(var);
          acceptZero.push_back(g == 1 ? 0 : 1);
          acceptOne.push_back(g == 1 ? 1 : 0);
        }
        c.accepting = {acceptZero, acceptOne};
        out.push_back(std::move(c));
      });
  red.inst = makeCsp(2, static_cast<int>(red.varMeta.size()), std::move(out));
  return red;
}

ReductionNe ugToNeCsp(const UgInstance& u, const ReductionParams& p) {
  if (p.q < 2) throw GaplabError("Not-Equal reduction needs q >= 2");
  Sides s = splitSides(u);
  const int R = p.labelSize;
  const int q = p.q;

  ReductionNe red;
  red.source = u;
  red.sideV = s.sideV;
  red.sideW = s.sideW;
  red.params = p;
  std::uint64_t block = 1;
  for (int i = 1; i < R; ++i) block *= static_cast<std::uint64_t>(q);
  for (int w : s.sideW) {
    for (std::uint64_t zIdx = 0; zIdx < block; ++zIdx) {
      Tuple z = tupleFromIndex(zIdx, R - 1, q);
      z.insert(z.begin(), 0);
      red.varMeta.push_back(VarNe{w, std::move(z)});
    }
  }

  std::vector<CspConstraint> out;
  red.rawOutcomes = forEachOutcome(
      u, s, p,
      [&](int v, const std::vector<int>& wChoice, const Tuple& x, const Tuple& idxTuple,
          const Rational& weight) {
        std::vector<int> S = sortedUnique(idxTuple);
        std::map<int, int> forbidden;  // variable -> z_1
        for (int i : wChoice) {
          const auto& [wVtx, pi] = s.nbr[v][i];
          forEachSubcubePoint(x, S, q, [&](const Tuple& y) {
            Tuple z = relabel(y, pi);
            const int z1 = z[0];
            Tuple rep(z.size());
            for (std::size_t j = 0; j < z.size(); ++j) rep[j] = ((z[j] - z1) % q + q) % q;
            auto [it, inserted] = forbidden.emplace(red.varIndex(wVtx, rep), z1);
            if (!inserted && it->second != z1)
              throw GaplabError("internal: conflicting folded constraints");
          });
        }
        NotEqualTemplate t;
        for (const auto& [var, a] : forbidden) {
          t.support.push_back(var);
          t.forbidden.push_back(a);
        }
        out.push_back(expandNotEqual(t, q, weight));
      });
  red.inst = makeCsp(q, static_cast<int>(red.varMeta.size()), std::move(out));
  return red;
}

std::vector<int> encodeLongCode1f(int ell, int R) {
  if (ell < 0 || ell >= R) throw GaplabError("long-code label out of range");
  const std::uint64_t block = std::uint64_t(1) << R;
  std::vector<int> values(block);
  for (std::uint64_t xIdx = 0; xIdx < block; ++xIdx)
    values[xIdx] = tupleFromIndex(xIdx, R, 2)[ell];
  return values;
}

FoldedTruthTable encodeFoldedDictator(int ell, int q, int R) {
  return encodeTable(foldedDictator(ell, q, R));
}

Assignment assignment1fFromLabeling(const Reduction1f& red, const Labeling& lab) {
  if (lab.labels.size() != red.source.vertices.size())
    throw GaplabError("labeling misses vertices");
  Assignment a;
  a.values.reserve(red.varMeta.size());
  for (const auto& meta : red.varMeta) a.values.push_back(meta.x[lab.labels[meta.w]]);
  return a;
}

Assignment assignmentNeFromLabeling(const ReductionNe& red, const Labeling& lab) {
  if (lab.labels.size() != red.source.vertices.size())
    throw GaplabError("labeling misses vertices");
  const int q = red.params.q;
  Assignment a;
  a.values.reserve(red.varMeta.size());
  for (const auto& meta : red.varMeta) {
    int zl = meta.zRep[lab.labels[meta.w]];
    a.values.push_back((q - zl % q) % q);
  }
  return a;
}

namespace {

// Shared engine behind both completeness checks. satisfies(x, S) must
// evaluate the encoded assignment against the constraint of outcome (x, S);
// subEvent(x, S) names the conditioning event of the claim.
CompletenessReport completenessScan(const UgInstance& u, int v, const std::vector<int>& ws,
                                    const Labeling& lab, const ReductionParams& p,
                                    const Rational& bound,
                                    const std::function<bool(const Tuple&, const std::vector<int>&)>& satisfies,
                                    const std::function<bool(const Tuple&, const std::vector<int>&)>& subEvent) {
  Sides s = splitSides(u);
  // precondition: the labeling satisfies every edge v-w_i
  for (int w : ws) {
    bool found = false;
    for (const auto& [nbrW, pi] : s.nbr[v]) {
      if (nbrW != w) continue;
      found = true;
      if (pi[lab.labels[v]] != lab.labels[w])
        throw GaplabError("labeling does not satisfy edge " + u.vertices[v] + "-" +
                          u.vertices[w]);
    }
    if (!found) throw GaplabError("vertex " + u.vertices[w] + " is not a neighbor of v");
  }
  const int R = p.labelSize;
  const int m = freeIndexCount(p);
  const std::uint64_t qR = powWithin(p.q, R, p.budget);
  const std::uint64_t Rm = powWithin(R, m, p.budget);
  if (qR == 0 || Rm == 0) throw GaplabError("completeness outcome space exceeds budget");

  std::uint64_t sat = 0, sub = 0, satInSub = 0;
  for (std::uint64_t xIdx = 0; xIdx < qR; ++xIdx) {
    Tuple x = tupleFromIndex(xIdx, R, p.q);
    for (std::uint64_t iIdx = 0; iIdx < Rm; ++iIdx) {
      std::vector<int> S = sortedUnique(tupleFromIndex(iIdx, m, R));
      bool ok = satisfies(x, S);
      bool inSub = subEvent(x, S);
      sat += ok;
      sub += inSub;
      satInSub += ok && inSub;
    }
  }
  const std::uint64_t total = qR * Rm;
  CompletenessReport rep;
  rep.probability = ratio(static_cast<long>(sat), static_cast<long>(total));
  rep.subEventProbability = ratio(static_cast<long>(sub), static_cast<long>(total));
  rep.conditional =
      sub == 0 ? Rational(0) : ratio(static_cast<long>(satInSub), static_cast<long>(sub));
  rep.bound = bound;
  rep.conditionalIsOne = sub > 0 && satInSub == sub;
  rep.overallBoundHolds = rep.probability >= bound;
  return rep;
}

}  // namespace

CompletenessReport verifyCompleteness1f(const UgInstance& u, int v, const std::vector<int>& ws,
                                        const Labeling& lab, const ReductionParams& p) {
  Sides s = splitSides(u);
  auto piOf = [&](int w) -> const std::vector<int>& {
    for (const auto& entry : s.nbr[v])
      if (entry.first == w) return entry.second;
    throw GaplabError("not a neighbor");
  };
  auto satisfies = [&](const Tuple& x, const std::vector<int>& S) {
    Tuple xbar(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) xbar[j] = 1 - x[j];
    // all <w_i, z> with pi^-1(z) in C_{x,S} equal b, the complement side b+1
    int b = -1;
    bool ok = true;
    for (int w : ws) {
      const auto& pi = piOf(w);
      int ell = lab.labels[w];
      forEachSubcubePoint(x, S, 2, [&](const Tuple& y) {
        int val = relabel(y, pi)[ell];
        if (b < 0) b = val;
        ok = ok && val == b;
      });
      if (!ok) return false;
      forEachSubcubePoint(xbar, S, 2, [&](const Tuple& y) {
        int val = relabel(y, pi)[ell];
        ok = ok && val == 1 - b;
      });
      if (!ok) return false;
    }
    return ok;
  };
  auto subEvent = [&](const Tuple&, const std::vector<int>& S) {
    return !std::binary_search(S.begin(), S.end(), lab.labels[v]);
  };
  Rational bound = Rational(1) - p.eps;
  return completenessScan(u, v, ws, lab, p, bound, satisfies, subEvent);
}

CompletenessReport verifyCompletenessNe(const UgInstance& u, int v, const std::vector<int>& ws,
                                        const Labeling& lab, const ReductionParams& p) {
  Sides s = splitSides(u);
  auto piOf = [&](int w) -> const std::vector<int>& {
    for (const auto& entry : s.nbr[v])
      if (entry.first == w) return entry.second;
    throw GaplabError("not a neighbor");
  };
  const int q = p.q;
  auto satisfies = [&](const Tuple& x, const std::vector<int>& S) {
    // folded dictator of lab(w_i) evaluated on the image sub-cube: nonzero
    // everywhere iff z_{lab(w_i)} != 0 for every image point z
    for (int w : ws) {
      const auto& pi = piOf(w);
      int ell = lab.labels[w];
      bool ok = true;
      forEachSubcubePoint(x, S, q, [&](const Tuple& y) {
        ok = ok && relabel(y, pi)[ell] != 0;
      });
      if (!ok) return false;
    }
    return true;
  };
  auto subEvent = [&](const Tuple& x, const std::vector<int>& S) {
    return !std::binary_search(S.begin(), S.end(), lab.labels[v]) && x[lab.labels[v]] != 0;
  };
  Rational bound = (Rational(1) - p.eps) * ratio(q - 1, q);
  return completenessScan(u, v, ws, lab, p, bound, satisfies, subEvent);
}

namespace {

// Pushforward of mu through a per-variable decoding map: sigma(S) is the image
// of mu(T_S) where T_S collects the W-vertices behind the variables in S.
template <typename Red, typename ValueOf>
TransferReport transferCommon(const LocalDistributionFamily& mu, const Red& red, int rounds,
                              const Rational& boundFactor, ValueOf&& valueOf) {
  if (auto why = familyViolation(mu))
    throw GaplabError("inconsistent Unique Games family: " + *why);
  if (mu.numVars != static_cast<int>(red.source.vertices.size()) ||
      mu.domainSize != red.params.labelSize)
    throw GaplabError("family does not match the Unique Games instance");
  if (mu.rounds < std::max(rounds, 2))
    throw GaplabError("source family has too few rounds");
  int maxSupport = 0;
  for (const auto& c : red.inst.constraints)
    maxSupport = std::max(maxSupport, static_cast<int>(c.support.size()));
  if (rounds < maxSupport)
    throw GaplabError("rounds " + std::to_string(rounds) +
                      " below the largest constraint support " + std::to_string(maxSupport));

  const int N = red.inst.numVars;
  std::uint64_t sets = 0;
  for (int sSize = 0; sSize <= rounds; ++sSize) sets += binomial(N, sSize);
  if (sets > (std::uint64_t(1) << 22)) throw GaplabError("transfer set space exceeds budget");

  TransferReport rep;
  rep.family.rounds = rounds;
  rep.family.domainSize = red.inst.domainSize;
  rep.family.numVars = N;

  std::vector<int> cur;
  std::function<void(int, int)> walk = [&](int start, int room) {
    // T_S and the pushforward of mu(T_S)
    std::vector<int> tset;
    for (int var : cur) tset.push_back(red.varMeta[var].w);
    std::sort(tset.begin(), tset.end());
    tset.erase(std::unique(tset.begin(), tset.end()), tset.end());
    auto it = mu.dists.find(tset);
    if (it == mu.dists.end()) throw GaplabError("family misses a needed vertex set");
    auto& target = rep.family.dists[cur];
    for (const auto& [labels, mass] : it->second) {
      if (mass == 0) continue;
      Tuple alpha;
      alpha.reserve(cur.size());
      for (int var : cur) {
        auto pos = std::lower_bound(tset.begin(), tset.end(), red.varMeta[var].w) - tset.begin();
        alpha.push_back(valueOf(red.varMeta[var], labels[pos]));
      }
      target[alpha] += mass;
    }
    if (room == 0) return;
    for (int i = start; i < N; ++i) {
      cur.push_back(i);
      walk(i + 1, room - 1);
      cur.pop_back();
    }
  };
  walk(0, rounds);

  rep.consistent = !familyViolation(rep.family).has_value();
  rep.value = saValue(red.inst, rep.family);

  // E_{vw in E}[Pr_{mu({v,w})}[edge violated]]
  Rational viol = 0;
  for (const auto& e : red.source.edges) {
    std::vector<int> pairSet{std::min(e.u, e.v), std::max(e.u, e.v)};
    auto distIt = mu.dists.find(pairSet);
    if (distIt == mu.dists.end()) throw GaplabError("family misses an edge pair set");
    const auto& dist = distIt->second;
    for (const auto& [vals, mass] : dist) {
      int labU = e.u < e.v ? vals[0] : vals[1];
      int labV = e.u < e.v ? vals[1] : vals[0];
      if (e.pi[labU] != labV) viol += mass;
    }
  }
  rep.edgeViolation = viol / Rational(static_cast<long>(red.source.edges.size()));
  rep.bound = boundFactor * (Rational(1) - Rational(red.params.t) * rep.edgeViolation);
  rep.holds = rep.value >= rep.bound;
  return rep;
}

}  // namespace

TransferReport transferSa1f(const LocalDistributionFamily& mu, const Reduction1f& red,
                            int rounds) {
  Rational factor = Rational(1) - red.params.eps;
  return transferCommon(mu, red, rounds, factor,
                        [](const Var1f& meta, int label) { return meta.x[label]; });
}

TransferReport transferSaNe(const LocalDistributionFamily& mu, const ReductionNe& red,
                            int rounds) {
  const int q = red.params.q;
  Rational factor = (Rational(1) - red.params.eps) * ratio(q - 1, q);
  return transferCommon(mu, red, rounds, factor, [q](const VarNe& meta, int label) {
    return (q - meta.zRep[label] % q) % q;
  });
}

namespace {

DecodeResult decodeFromFunctions(const std::vector<ZqFunction>& tables, int d, double theta,
                                 std::uint64_t seed) {
  if (theta <= 0) throw GaplabError("decode threshold must be positive");
  DecodeResult out;
  std::mt19937_64 rng(seed);
  for (const auto& f : tables) {
    if (d < 0 || d > f.R) throw GaplabError("decode degree out of range");
    FourierExpansion e = fourierExpand(f);
    std::vector<int> L;
    for (int i = 0; i < f.R; ++i) {
      if (degreeDInfluence(e, i, d) >= theta) L.push_back(i);
    }
    if (static_cast<double>(L.size()) * theta > d + 1e-9) out.candidateBoundHolds = false;
    int label = L.empty() ? 0 : L[boundedRand(rng, L.size())];
    out.candidates.push_back(std::move(L));
    out.labels.push_back(label);
  }
  return out;
}

}  // namespace

DecodeResult decodeLabeling(const std::vector<ZqFunction>& tables, int d, double theta,
                            std::uint64_t seed) {
  return decodeFromFunctions(tables, d, theta, seed);
}

DecodeResult decodeLabelingFolded(const std::vector<FoldedTruthTable>& tables, int d,
                                  double theta, std::uint64_t seed) {
  std::vector<ZqFunction> fs;
  fs.reserve(tables.size());
  for (const auto& t : tables) fs.push_back(decodeTable(t));
  return decodeFromFunctions(fs, d, theta, seed);
}

std::string reductionProvenance(const std::string& kind, const ReductionParams& p,
                                std::uint64_t rawOutcomes, std::size_t mergedConstraints) {
  ordered_json j;
  j["kind"] = kind;
  j["R"] = p.labelSize;
  j["eps"] = toString(p.eps);
  j["t"] = p.t;
  j["q"] = p.q;
  j["mode"] = p.mode == ReductionMode::Enumerate ? "enumerate" : "sample";
  if (p.mode == ReductionMode::Sample) {
    j["seed"] = p.seed;
    j["count"] = p.sampleCount;
  }
  j["rawOutcomes"] = rawOutcomes;
  j["constraints"] = mergedConstraints;
  return j.dump(2);
}

}  // namespace gaplab
