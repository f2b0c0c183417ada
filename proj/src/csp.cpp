#include "gaplab/csp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

namespace gaplab {

using ordered_json = nlohmann::ordered_json;

Tuple tupleFromIndex(std::uint64_t idx, int len, int radix) {
  Tuple t(len, 0);
  for (int i = len - 1; i >= 0; --i) {
    t[i] = static_cast<int>(idx % radix);
    idx /= radix;
  }
  return t;
}

std::uint64_t indexFromTuple(const Tuple& t, int radix) {
  std::uint64_t idx = 0;
  for (int v : t) idx = idx * radix + static_cast<std::uint64_t>(v);
  return idx;
}

namespace {

CspConstraint canonicalize(const CspConstraint& c, int domainSize, int numVars) {
  if (c.support.empty()) throw GaplabError("constraint with empty support");
  std::vector<int> order(c.support.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return c.support[a] < c.support[b]; });
  CspConstraint out;
  out.weight = c.weight;
  out.support.reserve(c.support.size());
  for (int pos : order) {
    int v = c.support[pos];
    if (v < 0 || v >= numVars) throw GaplabError("support index out of range");
    if (!out.support.empty() && out.support.back() == v)
      throw GaplabError("support indices must be distinct");
    out.support.push_back(v);
  }
  std::set<Tuple> tuples;
  for (const auto& a : c.accepting) {
    if (a.size() != c.support.size())
      throw GaplabError("accepting tuple length does not match arity");
    Tuple b(a.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      int val = a[order[i]];
      if (val < 0 || val >= domainSize) throw GaplabError("accepting value out of range");
      b[i] = val;
    }
    tuples.insert(std::move(b));
  }
  out.accepting.assign(tuples.begin(), tuples.end());
  return out;
}

}  // namespace

CspInstance makeCsp(int domainSize, int numVars, std::vector<CspConstraint> constraints) {
  if (domainSize < 2) throw GaplabError("domain size must be at least 2");
  if (numVars < 0) throw GaplabError("negative variable count");
  CspInstance inst;
  inst.domainSize = domainSize;
  inst.numVars = numVars;

  std::map<std::pair<std::vector<int>, std::vector<Tuple>>, Rational> merged;
  for (const auto& raw : constraints) {
    if (raw.weight <= 0) throw GaplabError("constraint weights must be positive");
    CspConstraint c = canonicalize(raw, domainSize, numVars);
    merged[{c.support, c.accepting}] += c.weight;
  }
  Rational total = 0;
  for (const auto& [key, w] : merged) total += w;
  for (auto& [key, w] : merged) {
    CspConstraint c;
    c.support = key.first;
    c.accepting = key.second;
    c.weight = w / total;
    inst.constraints.push_back(std::move(c));
  }
  return inst;
}

Rational evaluate(const CspInstance& inst, const Assignment& x) {
  if (static_cast<int>(x.values.size()) != inst.numVars)
    throw GaplabError("assignment length does not match variable count");
  for (int v : x.values)
    if (v < 0 || v >= inst.domainSize) throw GaplabError("assignment value out of range");
  if (inst.constraints.empty()) return 1;  // vacuously satisfied
  Rational val = 0;
  Tuple restricted;
  for (const auto& c : inst.constraints) {
    restricted.clear();
    for (int v : c.support) restricted.push_back(x.values[v]);
    if (std::binary_search(c.accepting.begin(), c.accepting.end(), restricted))
      val += c.weight;
  }
  return val;
}

std::pair<Rational, Assignment> bruteForceOpt(const CspInstance& inst, std::uint64_t budget) {
  std::uint64_t space = powWithin(inst.domainSize, inst.numVars, budget);
  if (space == 0)
    throw GaplabError("brute force space R^n exceeds budget; refusing to sample");
  Assignment best{Tuple(inst.numVars, 0)};
  Rational bestVal = evaluate(inst, best);
  Assignment cur = best;
  for (std::uint64_t idx = 1; idx < space; ++idx) {
    // odometer increment, last variable fastest
    for (int i = inst.numVars - 1; i >= 0; --i) {
      if (++cur.values[i] < inst.domainSize) break;
      cur.values[i] = 0;
    }
    Rational v = evaluate(inst, cur);
    if (v > bestVal) {
      bestVal = v;
      best = cur;
    }
  }
  return {bestVal, best};
}

OneFreeBitReport validateOneFreeBit(const CspInstance& inst, int arity) {
  OneFreeBitReport rep;
  if (inst.domainSize != 2) {
    rep.ok = false;
    rep.reason = "domain size must be 2";
    return rep;
  }
  for (std::size_t i = 0; i < inst.constraints.size(); ++i) {
    const auto& c = inst.constraints[i];
    if (static_cast<int>(c.support.size()) != arity) {
      rep.ok = false;
      rep.firstOffender = static_cast<int>(i);
      rep.reason = "constraint arity " + std::to_string(c.support.size()) +
                   " != " + std::to_string(arity);
      return rep;
    }
    if (c.accepting.size() != 2) {
      rep.ok = false;
      rep.firstOffender = static_cast<int>(i);
      rep.reason = "constraint has " + std::to_string(c.accepting.size()) +
                   " accepting configurations, want 2";
      return rep;
    }
  }
  return rep;
}

CspConstraint expandNotEqual(const NotEqualTemplate& t, int q, Rational weight) {
  if (q < 2) throw GaplabError("Not-Equal expansion needs q >= 2");
  if (t.forbidden.size() != t.support.size())
    throw GaplabError("forbidden vector length does not match support");
  for (int a : t.forbidden)
    if (a < 0 || a >= q) throw GaplabError("forbidden value out of range");
  CspConstraint c;
  c.support = t.support;
  c.weight = weight;
  const int k = static_cast<int>(t.support.size());
  std::uint64_t space = powWithin(q, k, std::uint64_t(1) << 30);
  if (space == 0) throw GaplabError("Not-Equal expansion too large");
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    Tuple z = tupleFromIndex(idx, k, q);
    bool accept = true;
    for (int i = 0; i < k && accept; ++i) accept = z[i] != t.forbidden[i];
    if (accept) c.accepting.push_back(std::move(z));
  }
  return c;
}

std::optional<Tuple> asNotEqual(const CspConstraint& c, int q) {
  const int k = static_cast<int>(c.support.size());
  std::uint64_t want = 1;
  for (int i = 0; i < k; ++i) want *= static_cast<std::uint64_t>(q - 1);
  if (c.accepting.size() != want) return std::nullopt;
  Tuple forbidden(k, -1);
  for (int i = 0; i < k; ++i) {
    std::set<int> seen;
    for (const auto& a : c.accepting) seen.insert(a[i]);
    if (static_cast<int>(seen.size()) != q - 1) return std::nullopt;
    for (int v = 0; v < q; ++v) {
      if (!seen.count(v)) {
        forbidden[i] = v;
        break;
      }
    }
  }
  NotEqualTemplate t{c.support, forbidden};
  CspConstraint expanded = expandNotEqual(t, q, c.weight);
  if (expanded.accepting != c.accepting) return std::nullopt;
  return forbidden;
}

std::string cspToJson(const CspInstance& inst) {
  ordered_json j;
  j["R"] = inst.domainSize;
  j["n"] = inst.numVars;
  ordered_json rows = ordered_json::array();
  for (const auto& c : inst.constraints) {
    ordered_json row;
    row["support"] = c.support;
    row["accepting"] = c.accepting;
    row["weight"] = toString(c.weight);
    rows.push_back(row);
  }
  j["constraints"] = rows;
  return j.dump(2);
}

CspInstance cspFromJson(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  int R = j.at("R").get<int>();
  int n = j.at("n").get<int>();
  std::vector<CspConstraint> cs;
  for (const auto& row : j.at("constraints")) {
    CspConstraint c;
    c.support = row.at("support").get<std::vector<int>>();
    if (row.contains("forbidden")) {
      NotEqualTemplate t{c.support, row["forbidden"].get<Tuple>()};
      Rational w = row.contains("weight") ? parseRational(row["weight"].get<std::string>())
                                          : Rational(1);
      cs.push_back(expandNotEqual(t, R, w));
      continue;
    }
    for (const auto& a : row.at("accepting")) c.accepting.push_back(a.get<Tuple>());
    if (row.contains("weight")) c.weight = parseRational(row["weight"].get<std::string>());
    cs.push_back(std::move(c));
  }
  return makeCsp(R, n, std::move(cs));
}

}  // namespace gaplab
