#include "gaplab/fglss.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace gaplab {

using ordered_json = nlohmann::ordered_json;

OneFreePredicate makeOneFreePredicate(std::vector<int> support, Tuple a1, Tuple a2) {
  if (support.empty()) throw GaplabError("predicate with empty support");
  if (a1.size() != support.size() || a2.size() != support.size())
    throw GaplabError("accepting tuple arity mismatch");
  std::vector<int> order(support.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return support[a] < support[b]; });
  OneFreePredicate p;
  for (int pos : order) {
    if (!p.support.empty() && p.support.back() == support[pos])
      throw GaplabError("support indices must be distinct");
    p.support.push_back(support[pos]);
    p.a1.push_back(a1[pos]);
    p.a2.push_back(a2[pos]);
  }
  if (p.a1 == p.a2) throw GaplabError("the two accepting assignments must differ");
  if (p.a2 < p.a1) std::swap(p.a1, p.a2);
  return p;
}

const Tuple& HostGraph::assignmentOf(int vid) const {
  const Vertex& v = vertices[vid];
  return v.side == 0 ? preds[v.pred].a1 : preds[v.pred].a2;
}

const std::vector<int>& HostGraph::supportOf(int vid) const {
  return preds[vertices[vid].pred].support;
}

bool HostGraph::conflict(int v1, int v2) const {
  const auto& s1 = supportOf(v1);
  const auto& s2 = supportOf(v2);
  const auto& a1 = assignmentOf(v1);
  const auto& a2 = assignmentOf(v2);
  std::size_t i = 0, j = 0;
  while (i < s1.size() && j < s2.size()) {
    if (s1[i] < s2[j]) {
      ++i;
    } else if (s1[i] > s2[j]) {
      ++j;
    } else {
      if (a1[i] != a2[j]) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

int HostGraph::predicateIndex(const OneFreePredicate& p) const {
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (preds[i].support == p.support && preds[i].a1 == p.a1 && preds[i].a2 == p.a2)
      return static_cast<int>(i);
  }
  return -1;
}

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> comb(k);
  std::function<void(int, int)> gen = [&](int start, int pos) {
    if (pos == k) {
      out.push_back(comb);
      return;
    }
    for (int i = start; i < n; ++i) {
      comb[pos] = i;
      gen(i + 1, pos + 1);
    }
  };
  gen(0, 0);
  return out;
}

}  // namespace

HostGraph buildHostGraph(int n, int k, std::uint64_t vertexBudget) {
  if (k < 1 || k > n) throw GaplabError("host graph needs 1 <= k <= n");
  std::uint64_t tuples = std::uint64_t(1) << k;
  std::uint64_t count = 2 * (tuples * (tuples - 1) / 2) * binomial(n, k);
  if (count == 0 || count > vertexBudget) throw GaplabError("host graph exceeds vertex budget");
  HostGraph g;
  g.n = n;
  g.k = k;
  for (const auto& S : combinations(n, k)) {
    for (std::uint64_t i = 0; i < tuples; ++i) {
      for (std::uint64_t j = i + 1; j < tuples; ++j) {
        OneFreePredicate p;
        p.support = S;
        p.a1 = tupleFromIndex(i, k, 2);
        p.a2 = tupleFromIndex(j, k, 2);
        g.preds.push_back(std::move(p));
      }
    }
  }
  for (std::size_t pi = 0; pi < g.preds.size(); ++pi) {
    g.vertices.push_back(HostGraph::Vertex{static_cast<int>(pi), 0});
    g.vertices.push_back(HostGraph::Vertex{static_cast<int>(pi), 1});
  }
  return g;
}

std::vector<std::pair<int, int>> hostGraphEdges(const HostGraph& g, std::uint64_t budget) {
  const std::uint64_t v = g.vertices.size();
  if (v * (v - 1) / 2 > budget) throw GaplabError("host graph edge enumeration exceeds budget");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(v); ++i)
    for (int j = i + 1; j < static_cast<int>(v); ++j)
      if (g.conflict(i, j)) edges.emplace_back(i, j);
  return edges;
}

HostHypergraph buildHostHypergraph(int n, int q, int k, std::uint64_t vertexBudget) {
  if (q < 2) throw GaplabError("host hypergraph needs q >= 2");
  if (k < 1 || k > n) throw GaplabError("host hypergraph needs 1 <= k <= n");
  std::uint64_t qk = powWithin(q, k, vertexBudget);
  if (qk == 0 || qk * binomial(n, k) > vertexBudget)
    throw GaplabError("host hypergraph exceeds vertex budget");
  HostHypergraph h;
  h.n = n;
  h.q = q;
  h.k = k;
  for (const auto& S : combinations(n, k)) {
    for (std::uint64_t a = 0; a < qk; ++a)
      h.vertices.push_back(HostHypergraph::Vertex{S, tupleFromIndex(a, k, q)});
  }
  return h;
}

int HostHypergraph::vertexIndex(const std::vector<int>& support, const Tuple& forbidden) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].support == support && vertices[i].forbidden == forbidden)
      return static_cast<int>(i);
  }
  return -1;
}

namespace {

// Hyperedges among an explicit list of (support, forbidden) vertices: for each
// shared variable, pick q of them with pairwise distinct forbidden values.
std::vector<std::vector<int>> hyperedgesAmong(
    int n, int q, const std::vector<HostHypergraph::Vertex>& verts,
    const std::vector<int>& ids) {
  std::set<std::vector<int>> found;
  for (int var = 0; var < n; ++var) {
    std::vector<std::vector<int>> byValue(q);
    for (std::size_t pos = 0; pos < ids.size(); ++pos) {
      const auto& vtx = verts[ids[pos]];
      auto it = std::lower_bound(vtx.support.begin(), vtx.support.end(), var);
      if (it == vtx.support.end() || *it != var) continue;
      byValue[vtx.forbidden[it - vtx.support.begin()]].push_back(static_cast<int>(pos));
    }
    bool possible = true;
    for (int a = 0; a < q; ++a) possible = possible && !byValue[a].empty();
    if (!possible) continue;
    std::vector<int> pick(q, 0);
    while (true) {
      std::vector<int> edge;
      for (int a = 0; a < q; ++a) edge.push_back(byValue[a][pick[a]]);
      std::sort(edge.begin(), edge.end());
      found.insert(edge);
      int a = q - 1;
      while (a >= 0 && ++pick[a] == static_cast<int>(byValue[a].size())) pick[a--] = 0;
      if (a < 0) break;
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<std::vector<int>> hostHypergraphEdges(const HostHypergraph& h, std::uint64_t budget) {
  // budget guards the product enumeration per shared variable
  std::uint64_t worst = 0;
  for (int var = 0; var < h.n; ++var) {
    std::vector<std::uint64_t> byValue(h.q, 0);
    for (const auto& vtx : h.vertices) {
      auto it = std::lower_bound(vtx.support.begin(), vtx.support.end(), var);
      if (it != vtx.support.end() && *it == var) ++byValue[vtx.forbidden[it - vtx.support.begin()]];
    }
    std::uint64_t prod = 1;
    for (int a = 0; a < h.q; ++a) {
      if (byValue[a] != 0 && prod > budget / byValue[a])
        throw GaplabError("host hypergraph edge enumeration exceeds budget");
      prod *= byValue[a];
    }
    worst += prod;
    if (worst > budget) throw GaplabError("host hypergraph edge enumeration exceeds budget");
  }
  std::vector<int> all(h.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return hyperedgesAmong(h.n, h.q, h.vertices, all);
}

std::vector<std::vector<int>> inducedHyperedges(const HostHypergraph& h,
                                                const std::vector<int>& vids) {
  auto local = hyperedgesAmong(h.n, h.q, h.vertices, vids);
  // map back to host vertex ids
  for (auto& e : local)
    for (auto& pos : e) pos = vids[pos];
  for (auto& e : local) std::sort(e.begin(), e.end());
  std::sort(local.begin(), local.end());
  return local;
}

Induced1f mapInstance1f(int n, int k, const std::vector<OneFreePredicate>& preds) {
  Induced1f inst;
  inst.n = n;
  inst.k = k;
  std::set<std::pair<std::vector<int>, std::pair<Tuple, Tuple>>> seen;
  for (const auto& raw : preds) {
    OneFreePredicate p = makeOneFreePredicate(raw.support, raw.a1, raw.a2);
    if (static_cast<int>(p.support.size()) != k)
      throw GaplabError("predicate arity does not match k");
    for (int v : p.support)
      if (v < 0 || v >= n) throw GaplabError("predicate support out of range");
    if (!seen.insert({p.support, {p.a1, p.a2}}).second)
      throw GaplabError("duplicate predicate in the instance set");
    inst.preds.push_back(std::move(p));
  }
  const int m = static_cast<int>(inst.preds.size());
  auto assign = [&](int vid) -> const Tuple& {
    return vid % 2 == 0 ? inst.preds[vid / 2].a1 : inst.preds[vid / 2].a2;
  };
  for (int v1 = 0; v1 < 2 * m; ++v1) {
    for (int v2 = v1 + 1; v2 < 2 * m; ++v2) {
      const auto& s1 = inst.preds[v1 / 2].support;
      const auto& s2 = inst.preds[v2 / 2].support;
      const auto& a1 = assign(v1);
      const auto& a2 = assign(v2);
      bool conflict = false;
      std::size_t i = 0, j = 0;
      while (i < s1.size() && j < s2.size()) {
        if (s1[i] < s2[j]) {
          ++i;
        } else if (s1[i] > s2[j]) {
          ++j;
        } else {
          if (a1[i] != a2[j]) {
            conflict = true;
            break;
          }
          ++i;
          ++j;
        }
      }
      if (conflict) inst.edges.emplace_back(v1, v2);
    }
  }
  return inst;
}

CspInstance cspOf1f(const Induced1f& inst) {
  std::vector<CspConstraint> cs;
  for (const auto& p : inst.preds) {
    CspConstraint c;
    c.support = p.support;
    c.accepting = {p.a1, p.a2};
    cs.push_back(std::move(c));
  }
  return makeCsp(2, inst.n, std::move(cs));
}

namespace {

bool extends(const Assignment& x, const std::vector<int>& support, const Tuple& alpha) {
  for (std::size_t i = 0; i < support.size(); ++i)
    if (x.values[support[i]] != alpha[i]) return false;
  return true;
}

}  // namespace

std::vector<int> mapSolution1f(const Induced1f& inst, const Assignment& x) {
  std::vector<int> cover;
  for (int vid = 0; vid < 2 * static_cast<int>(inst.preds.size()); ++vid) {
    const auto& p = inst.preds[vid / 2];
    const Tuple& alpha = vid % 2 == 0 ? p.a1 : p.a2;
    if (!extends(x, p.support, alpha)) cover.push_back(vid);
  }
  return cover;
}

std::vector<int> independentOf1f(const Induced1f& inst, const Assignment& x) {
  std::vector<int> is;
  for (int vid = 0; vid < 2 * static_cast<int>(inst.preds.size()); ++vid) {
    const auto& p = inst.preds[vid / 2];
    const Tuple& alpha = vid % 2 == 0 ? p.a1 : p.a2;
    if (extends(x, p.support, alpha)) is.push_back(vid);
  }
  return is;
}

InducedNe mapInstanceNe(int n, int q, int k, const std::vector<NotEqualTemplate>& preds) {
  InducedNe inst;
  inst.n = n;
  inst.q = q;
  inst.k = k;
  std::set<std::pair<std::vector<int>, Tuple>> seen;
  for (const auto& raw : preds) {
    if (static_cast<int>(raw.support.size()) != k)
      throw GaplabError("predicate arity does not match k");
    NotEqualTemplate p = raw;
    std::vector<std::size_t> order(p.support.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return p.support[a] < p.support[b]; });
    NotEqualTemplate c;
    for (std::size_t pos : order) {
      if (p.support[pos] < 0 || p.support[pos] >= n)
        throw GaplabError("predicate support out of range");
      if (p.forbidden[pos] < 0 || p.forbidden[pos] >= q)
        throw GaplabError("forbidden value out of range");
      c.support.push_back(p.support[pos]);
      c.forbidden.push_back(p.forbidden[pos]);
    }
    if (!seen.insert({c.support, c.forbidden}).second)
      throw GaplabError("duplicate predicate in the instance set");
    inst.preds.push_back(std::move(c));
  }
  std::vector<HostHypergraph::Vertex> verts;
  std::vector<int> ids;
  for (std::size_t i = 0; i < inst.preds.size(); ++i) {
    verts.push_back(HostHypergraph::Vertex{inst.preds[i].support, inst.preds[i].forbidden});
    ids.push_back(static_cast<int>(i));
  }
  inst.hyperedges = hyperedgesAmong(n, q, verts, ids);
  return inst;
}

CspInstance cspOfNe(const InducedNe& inst) {
  std::vector<CspConstraint> cs;
  for (const auto& p : inst.preds) cs.push_back(expandNotEqual(p, inst.q, Rational(1)));
  return makeCsp(inst.q, inst.n, std::move(cs));
}

std::vector<int> mapSolutionNe(const InducedNe& inst, const Assignment& x) {
  std::vector<int> cover;
  for (std::size_t i = 0; i < inst.preds.size(); ++i) {
    const auto& p = inst.preds[i];
    bool satisfied = true;
    for (std::size_t j = 0; j < p.support.size(); ++j)
      satisfied = satisfied && x.values[p.support[j]] != p.forbidden[j];
    if (!satisfied) cover.push_back(static_cast<int>(i));
  }
  return cover;
}

namespace {

// Smallest-cardinality cover of an explicit edge system over `nv` vertices.
std::pair<int, std::vector<int>> minCover(int nv, const std::vector<std::vector<int>>& edges,
                                          std::uint64_t budget) {
  if (powWithin(2, nv, budget) == 0) throw GaplabError("cover enumeration exceeds budget");
  int bestSize = nv + 1;
  std::uint64_t bestMask = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nv); ++mask) {
    int size = __builtin_popcountll(mask);
    if (size >= bestSize) continue;
    bool covers = true;
    for (const auto& e : edges) {
      bool hit = false;
      for (int v : e) hit = hit || ((mask >> v) & 1);
      if (!hit) {
        covers = false;
        break;
      }
    }
    if (covers) {
      bestSize = size;
      bestMask = mask;
    }
  }
  std::vector<int> cover;
  for (int v = 0; v < nv; ++v)
    if ((bestMask >> v) & 1) cover.push_back(v);
  return {bestSize, cover};
}

bool isCover(const std::vector<int>& cover, const std::vector<std::vector<int>>& edges) {
  for (const auto& e : edges) {
    bool hit = false;
    for (int v : e)
      hit = hit || std::binary_search(cover.begin(), cover.end(), v);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

ExactnessReport verifyExactness1f(const Induced1f& inst, std::uint64_t budget) {
  ExactnessReport rep;
  const int m = static_cast<int>(inst.preds.size());
  if (m == 0) throw GaplabError("exactness check needs a nonempty predicate set");
  rep.mu = 2;
  rep.zeta = ratio(1, m);
  CspInstance csp = cspOf1f(inst);

  std::vector<std::vector<int>> edgeSets;
  for (auto [a, b] : inst.edges) edgeSets.push_back({a, b});

  std::uint64_t space = powWithin(2, inst.n, budget);
  if (space == 0) throw GaplabError("assignment enumeration exceeds budget");
  rep.valIdentity = true;
  Rational bestVal;
  Assignment bestX{Tuple(inst.n, 0)};
  bool first = true;
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    Assignment x{tupleFromIndex(idx, inst.n, 2)};
    std::vector<int> cover = mapSolution1f(inst, x);
    if (!isCover(cover, edgeSets)) {
      rep.valIdentity = false;
      rep.detail = "U(x) fails to cover the induced edges";
      break;
    }
    Rational val = evaluate(csp, x);
    Rational rhs = rep.mu - rep.zeta * Rational(static_cast<long>(cover.size()));
    if (val != rhs) {
      rep.valIdentity = false;
      rep.detail = "value identity fails at assignment " + std::to_string(idx);
      break;
    }
    if (first || val > bestVal) {
      bestVal = val;
      bestX = x;
      first = false;
    }
  }
  auto [optCover, cover] = minCover(2 * m, edgeSets, budget);
  rep.opt1 = bestVal;
  rep.opt2 = optCover;
  rep.optIdentity = rep.valIdentity && bestVal == rep.mu - rep.zeta * Rational(optCover);
  rep.coverOfFormUx =
      rep.valIdentity &&
      static_cast<int>(mapSolution1f(inst, bestX).size()) == optCover;

  // every cover contains some U(x): compatible partial assignments extend
  rep.extraction = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (2 * m)) && rep.extraction; ++mask) {
    std::vector<int> U;
    for (int v = 0; v < 2 * m; ++v)
      if ((mask >> v) & 1) U.push_back(v);
    if (!isCover(U, edgeSets)) continue;
    // complement is independent; extend its assignments to a total x
    Assignment x{Tuple(inst.n, 0)};
    std::vector<char> fixed(inst.n, 0);
    bool compatible = true;
    for (int v = 0; v < 2 * m && compatible; ++v) {
      if ((mask >> v) & 1) continue;
      const auto& p = inst.preds[v / 2];
      const Tuple& alpha = v % 2 == 0 ? p.a1 : p.a2;
      for (std::size_t i = 0; i < p.support.size(); ++i) {
        if (fixed[p.support[i]] && x.values[p.support[i]] != alpha[i]) compatible = false;
        x.values[p.support[i]] = alpha[i];
        fixed[p.support[i]] = 1;
      }
    }
    if (!compatible) {
      rep.extraction = false;
      rep.detail = "independent complement carries incompatible assignments";
      break;
    }
    std::vector<int> ux = mapSolution1f(inst, x);
    if (!std::includes(U.begin(), U.end(), ux.begin(), ux.end())) {
      rep.extraction = false;
      rep.detail = "U(x) not contained in a cover";
    }
  }
  return rep;
}

ExactnessReport verifyExactnessNe(const InducedNe& inst, std::uint64_t budget) {
  ExactnessReport rep;
  const int m = static_cast<int>(inst.preds.size());
  if (m == 0) throw GaplabError("exactness check needs a nonempty predicate set");
  rep.mu = 1;
  rep.zeta = ratio(1, m);
  CspInstance csp = cspOfNe(inst);

  std::uint64_t space = powWithin(inst.q, inst.n, budget);
  if (space == 0) throw GaplabError("assignment enumeration exceeds budget");
  rep.valIdentity = true;
  Rational bestVal;
  Assignment bestX{Tuple(inst.n, 0)};
  bool first = true;
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    Assignment x{tupleFromIndex(idx, inst.n, inst.q)};
    std::vector<int> cover = mapSolutionNe(inst, x);
    if (!isCover(cover, inst.hyperedges)) {
      rep.valIdentity = false;
      rep.detail = "U(x) fails to cover the induced hyperedges";
      break;
    }
    Rational val = evaluate(csp, x);
    Rational rhs = rep.mu - rep.zeta * Rational(static_cast<long>(cover.size()));
    if (val != rhs) {
      rep.valIdentity = false;
      rep.detail = "value identity fails at assignment " + std::to_string(idx);
      break;
    }
    if (first || val > bestVal) {
      bestVal = val;
      bestX = x;
      first = false;
    }
  }
  auto [optCover, cover] = minCover(m, inst.hyperedges, budget);
  rep.opt1 = bestVal;
  rep.opt2 = optCover;
  rep.optIdentity = rep.valIdentity && bestVal == rep.mu - rep.zeta * Rational(optCover);
  rep.coverOfFormUx =
      rep.valIdentity && static_cast<int>(mapSolutionNe(inst, bestX).size()) == optCover;

  // cover extraction via the free-value argument: for every variable under
  // the independent complement there is a value no predicate forbids
  rep.extraction = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m) && rep.extraction; ++mask) {
    std::vector<int> U;
    for (int v = 0; v < m; ++v)
      if ((mask >> v) & 1) U.push_back(v);
    if (!isCover(U, inst.hyperedges)) continue;
    Assignment x{Tuple(inst.n, 0)};
    for (int var = 0; var < inst.n; ++var) {
      std::vector<char> checked(inst.q, 0);
      for (int v = 0; v < m; ++v) {
        if ((mask >> v) & 1) continue;
        const auto& p = inst.preds[v];
        auto it = std::lower_bound(p.support.begin(), p.support.end(), var);
        if (it != p.support.end() && *it == var)
          checked[p.forbidden[it - p.support.begin()]] = 1;
      }
      for (int a = 0; a < inst.q; ++a) {
        if (!checked[a]) {
          x.values[var] = a;
          break;
        }
      }
    }
    std::vector<int> ux = mapSolutionNe(inst, x);
    if (!std::includes(U.begin(), U.end(), ux.begin(), ux.end())) {
      rep.extraction = false;
      rep.detail = "U(x) not contained in a hypergraph cover";
    }
  }
  return rep;
}

ExactnessReport verifyExactnessIs(const Induced1f& inst, std::uint64_t budget) {
  ExactnessReport rep;
  const int m = static_cast<int>(inst.preds.size());
  if (m == 0) throw GaplabError("exactness check needs a nonempty predicate set");
  rep.mu = 0;
  rep.zeta = ratio(1, m);
  CspInstance csp = cspOf1f(inst);

  std::vector<std::vector<int>> edgeSets;
  for (auto [a, b] : inst.edges) edgeSets.push_back({a, b});

  std::uint64_t space = powWithin(2, inst.n, budget);
  if (space == 0) throw GaplabError("assignment enumeration exceeds budget");
  rep.valIdentity = true;
  Rational bestVal;
  bool first = true;
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    Assignment x{tupleFromIndex(idx, inst.n, 2)};
    std::vector<int> is = independentOf1f(inst, x);
    Rational val = evaluate(csp, x);
    if (val != rep.zeta * Rational(static_cast<long>(is.size()))) {
      rep.valIdentity = false;
      rep.detail = "independent-set value identity fails";
      break;
    }
    if (first || val > bestVal) {
      bestVal = val;
      first = false;
    }
  }
  // maximum independent set of the induced graph
  int bestIs = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (2 * m)); ++mask) {
    bool indep = true;
    for (const auto& e : edgeSets) {
      if (((mask >> e[0]) & 1) && ((mask >> e[1]) & 1)) {
        indep = false;
        break;
      }
    }
    if (indep) bestIs = std::max(bestIs, __builtin_popcountll(mask));
  }
  rep.opt1 = bestVal;
  rep.opt2 = bestIs;
  rep.optIdentity = rep.valIdentity && bestVal == rep.zeta * Rational(bestIs);
  rep.coverOfFormUx = rep.optIdentity;
  rep.extraction = true;
  return rep;
}

Rational bundleLpValue(const LpRelaxationBundle& b, const std::vector<int>& instanceId) {
  LinearProgram lp = b.system;
  lp.sense = b.sense;
  for (auto& c : lp.objective) c = 0;
  AffineFunction f = b.objectivize(instanceId);
  for (const auto& [v, coef] : f.coeffs) lp.setObjective(v, coef);
  lp.objectiveConstant = f.constant;
  LpSolution sol = solve(lp);
  if (sol.status != LpStatus::Optimal)
    throw GaplabError("bundle LP did not solve to optimality");
  return sol.value;
}

Rational rhoMaxToMin(const Rational& mu, const Rational& c, const Rational& s) {
  if (!(mu > c)) throw GaplabError("transfer factor needs mu > c");
  if (!(c >= s)) throw GaplabError("transfer factor needs c >= s");
  return (mu - s) / (mu - c);
}

Rational rhoMaxToMax(const Rational& mu, const Rational& c, const Rational& s) {
  if (!(c >= s)) throw GaplabError("transfer factor needs c >= s");
  if (!(mu + s > 0)) throw GaplabError("transfer factor needs mu + s > 0");
  return (mu + c) / (mu + s);
}

LpRelaxationBundle transferLpRelaxation(const LpRelaxationBundle& b2, const ReductionSpec& red) {
  LpRelaxationBundle b1;
  b1.system = b2.system;  // same inequality system, size preserved
  b1.sense = Sense::Maximize;
  auto realize2 = b2.realize;
  auto solutionMap = red.solutionMap;
  b1.realize = [realize2, solutionMap](const std::vector<int>& s1) {
    return realize2(solutionMap(s1));
  };
  auto objectivize2 = b2.objectivize;
  auto instanceMap = red.instanceMap;
  Rational mu = red.mu;
  auto zeta = red.zeta;
  b1.objectivize = [objectivize2, instanceMap, mu, zeta](const std::vector<int>& i1) {
    AffineFunction f2 = objectivize2(instanceMap(i1));
    Rational z = zeta(i1);
    AffineFunction f1;
    f1.constant = mu - z * f2.constant;
    for (const auto& [v, coef] : f2.coeffs) f1.coeffs.emplace_back(v, -z * coef);
    return f1;
  };
  return b1;
}

GuaranteeReport checkTransferGuarantee(
    const LpRelaxationBundle& b1, const std::vector<std::vector<int>>& family,
    const std::function<Rational(const std::vector<int>&)>& optOracle, const Rational& c1,
    const Rational& s1) {
  GuaranteeReport rep;
  rep.lpSize = b1.system.size();
  rep.holds = true;
  for (const auto& inst : family) {
    GuaranteeItem item;
    item.instanceId = inst;
    item.opt = optOracle(inst);
    item.lpValue = bundleLpValue(b1, inst);
    if (item.opt <= s1 && item.lpValue > c1) rep.holds = false;
    rep.items.push_back(std::move(item));
  }
  return rep;
}

std::string hostGraphToJson(const HostGraph& g, std::uint64_t edgeBudget) {
  ordered_json j;
  j["n"] = g.n;
  j["k"] = g.k;
  ordered_json verts = ordered_json::array();
  for (std::size_t vid = 0; vid < g.vertices.size(); ++vid) {
    ordered_json v;
    v["support"] = g.supportOf(static_cast<int>(vid));
    v["assignment"] = g.assignmentOf(static_cast<int>(vid));
    const auto& p = g.preds[g.vertices[vid].pred];
    v["accepting"] = ordered_json::array({p.a1, p.a2});
    verts.push_back(v);
  }
  j["vertices"] = verts;
  j["edges"] = hostGraphEdges(g, edgeBudget);
  return j.dump(2);
}

std::string hostHypergraphToJson(const HostHypergraph& h, std::uint64_t edgeBudget) {
  ordered_json j;
  j["n"] = h.n;
  j["q"] = h.q;
  j["k"] = h.k;
  ordered_json verts = ordered_json::array();
  for (const auto& vtx : h.vertices) {
    ordered_json v;
    v["support"] = vtx.support;
    v["forbidden"] = vtx.forbidden;
    verts.push_back(v);
  }
  j["vertices"] = verts;
  j["hyperedges"] = hostHypergraphEdges(h, edgeBudget);
  return j.dump(2);
}

}  // namespace gaplab
