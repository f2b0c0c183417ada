#include "gaplab/relaxations.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace gaplab {

using ordered_json = nlohmann::ordered_json;

Graph makeGraph(int n, std::vector<std::pair<int, int>> edges) {
  Graph g;
  for (int i = 0; i < n; ++i) g.names.push_back("v" + std::to_string(i));
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw GaplabError("edge endpoint out of range");
    if (a == b) throw GaplabError("self-loops are not allowed");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) throw GaplabError("duplicate edge");
    g.edges.emplace_back(a, b);
  }
  return g;
}

Graph completeGraph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return makeGraph(n, std::move(edges));
}

Graph cycleGraph(int n) {
  if (n < 3) throw GaplabError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return makeGraph(n, std::move(edges));
}

Hypergraph makeHypergraph(int n, std::vector<std::vector<int>> edges, int uniform) {
  Hypergraph h;
  for (int i = 0; i < n; ++i) h.names.push_back("v" + std::to_string(i));
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw GaplabError("hyperedge with repeated vertex");
    for (int v : e)
      if (v < 0 || v >= n) throw GaplabError("hyperedge endpoint out of range");
    if (uniform > 0 && static_cast<int>(e.size()) != uniform)
      throw GaplabError("hyperedge is not " + std::to_string(uniform) + "-uniform");
    h.edges.push_back(std::move(e));
  }
  return h;
}

CostVector unitCosts(int n) { return CostVector(n, Rational(1)); }

namespace {

void checkCosts(const CostVector& costs, int n) {
  if (static_cast<int>(costs.size()) != n) throw GaplabError("cost vector length mismatch");
  for (const auto& c : costs)
    if (c < 0) throw GaplabError("costs must be nonnegative");
}

LinearProgram coveringLp(const std::vector<std::string>& names,
                         const std::vector<std::vector<int>>& edges, const CostVector& costs) {
  LinearProgram lp;
  lp.sense = Sense::Minimize;
  for (const auto& name : names) lp.addVariable(name);
  for (std::size_t v = 0; v < names.size(); ++v) lp.setObjective(static_cast<int>(v), costs[v]);
  for (const auto& e : edges) {
    std::vector<std::pair<int, Rational>> row;
    for (int v : e) row.emplace_back(v, Rational(1));
    lp.addConstraint(std::move(row), Rel::Ge, Rational(1));
  }
  for (std::size_t v = 0; v < names.size(); ++v) {
    lp.addConstraint({{static_cast<int>(v), Rational(1)}}, Rel::Ge, Rational(0));
    lp.addConstraint({{static_cast<int>(v), Rational(1)}}, Rel::Le, Rational(1));
  }
  return lp;
}

}  // namespace

LinearProgram basicVcLp(const Graph& g, const CostVector& costs) {
  checkCosts(costs, g.n());
  std::vector<std::vector<int>> edges;
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  return coveringLp(g.names, edges, costs);
}

LpConstraint oddCycleCut(const Graph& g, const std::vector<int>& cycleVertices) {
  const std::size_t len = cycleVertices.size();
  if (len < 3 || len % 2 == 0) throw GaplabError("odd cycle inequality needs an odd cycle");
  std::set<int> cset(cycleVertices.begin(), cycleVertices.end());
  if (cset.size() != len) throw GaplabError("cycle vertices must be distinct");
  // the induced subgraph on C must be exactly a cycle: every vertex degree 2,
  // connected, |E(C)| == |C|
  std::vector<std::vector<int>> adj(g.n());
  std::size_t inside = 0;
  for (auto [a, b] : g.edges) {
    if (cset.count(a) && cset.count(b)) {
      adj[a].push_back(b);
      adj[b].push_back(a);
      ++inside;
    }
  }
  if (inside != len) throw GaplabError("vertex set does not induce a cycle");
  for (int v : cycleVertices)
    if (adj[v].size() != 2) throw GaplabError("vertex set does not induce a cycle");
  std::vector<int> stack{cycleVertices[0]};
  std::set<int> seen{cycleVertices[0]};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (seen.insert(y).second) stack.push_back(y);
  }
  if (seen.size() != len) throw GaplabError("vertex set does not induce a cycle");

  LpConstraint cut;
  for (int v : cycleVertices) cut.coeffs.emplace_back(v, Rational(1));
  std::sort(cut.coeffs.begin(), cut.coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  cut.rel = Rel::Ge;
  cut.rhs = ratio(static_cast<long>(len) + 1, 2);
  return cut;
}

LinearProgram hypergraphVcLp(const Hypergraph& h, const CostVector& costs) {
  checkCosts(costs, h.n());
  return coveringLp(h.names, h.edges, costs);
}

std::pair<Rational, std::vector<int>> bruteForceVc(int n,
                                                   const std::vector<std::vector<int>>& edges,
                                                   const CostVector& costs,
                                                   std::uint64_t budget) {
  checkCosts(costs, n);
  if (powWithin(2, n, budget) == 0) throw GaplabError("cover enumeration exceeds budget");
  bool found = false;
  Rational best;
  std::uint64_t bestMask = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    bool covers = true;
    for (const auto& e : edges) {
      bool hit = false;
      for (int v : e) hit = hit || ((mask >> v) & 1);
      if (!hit) {
        covers = false;
        break;
      }
    }
    if (!covers) continue;
    Rational cost = 0;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) cost += costs[v];
    if (!found || cost < best) {
      best = cost;
      bestMask = mask;
      found = true;
    }
  }
  std::vector<int> cover;
  for (int v = 0; v < n; ++v)
    if ((bestMask >> v) & 1) cover.push_back(v);
  return {best, cover};
}

std::pair<Rational, std::vector<int>> bruteForceVc(const Graph& g, const CostVector& costs,
                                                   std::uint64_t budget) {
  std::vector<std::vector<int>> edges;
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  return bruteForceVc(g.n(), edges, costs, budget);
}

std::pair<Rational, std::vector<int>> bruteForceVc(const Hypergraph& h, const CostVector& costs,
                                                   std::uint64_t budget) {
  return bruteForceVc(h.n(), h.edges, costs, budget);
}

namespace {

std::vector<std::uint64_t> adjacencyMasks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.n(), 0);
  for (auto [a, b] : g.edges) {
    adj[a] |= std::uint64_t(1) << b;
    adj[b] |= std::uint64_t(1) << a;
  }
  return adj;
}

std::vector<int> maskToList(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1) out.push_back(v);
  return out;
}

}  // namespace

std::vector<int> maxIndependentSet(const Graph& g, const std::vector<char>& alive) {
  const int n = g.n();
  if (n > 62) throw GaplabError("independent set enumeration limited to 62 vertices");
  auto adj = adjacencyMasks(g);
  std::uint64_t aliveMask = 0;
  for (int v = 0; v < n; ++v)
    if (alive[v]) aliveMask |= std::uint64_t(1) << v;
  int bestSize = -1;
  std::vector<int> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    if ((mask & ~aliveMask) != 0) continue;
    bool indep = true;
    for (int v = 0; v < n && indep; ++v)
      if ((mask >> v) & 1) indep = (adj[v] & mask) == 0;
    if (!indep) continue;
    int size = __builtin_popcountll(mask);
    if (size < bestSize) continue;
    std::vector<int> list = maskToList(mask, n);
    if (size > bestSize || list < best) {
      bestSize = size;
      best = std::move(list);
    }
  }
  return best;
}

std::vector<int> maxIndependentSet(const Graph& g) {
  return maxIndependentSet(g, std::vector<char>(g.n(), 1));
}

GreedyColoring greedyColoring(const Graph& g) {
  GreedyColoring coloring;
  std::vector<char> alive(g.n(), 1);
  int remaining = g.n();
  while (remaining > 0) {
    std::vector<int> cls = maxIndependentSet(g, alive);
    if (cls.empty()) throw GaplabError("internal: empty color class");
    for (int v : cls) {
      alive[v] = 0;
      --remaining;
    }
    coloring.classes.push_back(std::move(cls));
  }
  return coloring;
}

std::uint64_t twoSqrtFloor(std::uint64_t n) { return isqrt(4 * n); }

SqrtLp buildSqrtLp(const Graph& g, const GreedyColoring& coloring) {
  const int n = g.n();
  SqrtLp out;
  out.n = n;
  out.k = static_cast<int>(coloring.classes.size());
  out.classOf.assign(n, -1);
  for (int j = 0; j < out.k; ++j) {
    for (int v : coloring.classes[j]) {
      if (v < 0 || v >= n || out.classOf[v] != -1)
        throw GaplabError("coloring does not partition the vertex set");
      out.classOf[v] = j;
    }
  }
  for (int v = 0; v < n; ++v)
    if (out.classOf[v] < 0) throw GaplabError("coloring does not cover the vertex set");

  LinearProgram lp;
  lp.sense = Sense::Maximize;
  for (const auto& name : g.names) lp.addVariable(name);
  for (int j = 0; j < out.k; ++j) lp.addVariable("y" + std::to_string(j));
  for (int v = 0; v < n; ++v) {
    lp.addConstraint({{v, Rational(1)}}, Rel::Ge, Rational(0));
    lp.addConstraint({{v, Rational(1)}, {n + out.classOf[v], Rational(-1)}}, Rel::Le,
                     Rational(0));
  }
  for (int j = 0; j < out.k; ++j)
    lp.addConstraint({{n + j, Rational(1)}}, Rel::Le, Rational(1));
  std::vector<std::pair<int, Rational>> budgetRow;
  for (int j = 0; j < out.k; ++j) budgetRow.emplace_back(n + j, Rational(1));
  lp.addConstraint(std::move(budgetRow), Rel::Le,
                   Rational(static_cast<long>(twoSqrtFloor(n))));
  out.system = std::move(lp);
  return out;
}

AffineFunction sqrtLpObjective(const SqrtLp& lp, const std::vector<int>& subset) {
  AffineFunction f;
  f.constant = 0;
  for (int v : subset) {
    if (v < 0 || v >= lp.n) throw GaplabError("subset vertex out of range");
    f.coeffs.emplace_back(v, Rational(1));
  }
  return f;
}

LpRelaxationBundle sqrtBundle(const Graph& g, const GreedyColoring& coloring) {
  SqrtLp lp = buildSqrtLp(g, coloring);
  LpRelaxationBundle bundle;
  bundle.system = lp.system;
  bundle.sense = Sense::Maximize;
  const int n = lp.n, k = lp.k;
  std::vector<int> classOf = lp.classOf;
  bundle.realize = [n, k, classOf](const std::vector<int>& indep) {
    std::vector<Rational> point(n + k, Rational(0));
    for (int v : indep) {
      point[v] = 1;
      point[n + classOf[v]] = 1;
    }
    return point;
  };
  SqrtLp lpCopy = lp;
  bundle.objectivize = [lpCopy](const std::vector<int>& subset) {
    return sqrtLpObjective(lpCopy, subset);
  };
  return bundle;
}

Lemma51Report verifyLemma51(const Graph& g, const GreedyColoring& coloring) {
  const int n = g.n();
  if (n > 62) throw GaplabError("independent set enumeration limited to 62 vertices");
  SqrtLp lp = buildSqrtLp(g, coloring);  // validates the coloring, gives classOf
  auto adj = adjacencyMasks(g);
  Lemma51Report rep;
  rep.bound = twoSqrtFloor(n);
  rep.holds = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    bool indep = true;
    for (int v = 0; v < n && indep; ++v)
      if ((mask >> v) & 1) indep = (adj[v] & mask) == 0;
    if (!indep) continue;
    std::set<int> met;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) met.insert(lp.classOf[v]);
    int count = static_cast<int>(met.size());
    if (count > rep.worstClassesMet) {
      rep.worstClassesMet = count;
      rep.counterexample = maskToList(mask, n);
    }
  }
  rep.holds = static_cast<std::uint64_t>(rep.worstClassesMet) <= rep.bound;
  if (rep.holds) rep.counterexample.clear();
  return rep;
}

Lemma52Report verifyLemma52(const Graph& g, const GreedyColoring& coloring,
                            std::size_t lpSolveSample) {
  const int n = g.n();
  if (n > 30) throw GaplabError("subgraph enumeration limited to 30 vertices");
  SqrtLp lp = buildSqrtLp(g, coloring);
  auto adj = adjacencyMasks(g);
  const std::uint64_t B = twoSqrtFloor(n);

  Lemma52Report rep;
  rep.bound = B;
  rep.holds = true;

  const std::uint64_t total = std::uint64_t(1) << n;
  const std::uint64_t stride = lpSolveSample == 0 ? 1 : std::max<std::uint64_t>(total / lpSolveSample, 1);

  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<int> subset = maskToList(mask, n);
    // OPT(I(H)): maximum independent set inside the subgraph
    int opt = 0;
    for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
      bool indep = true;
      for (int v = 0; v < n && indep; ++v)
        if ((sub >> v) & 1) indep = (adj[v] & sub) == 0;
      if (indep) opt = std::max(opt, __builtin_popcountll(sub));
      if (sub == 0) break;
    }
    // budgeted classes decouple, so the optimum is attained at 0/1 y and the
    // LP value is the sum of the floor(2 sqrt n) largest weights |I_j cap V(H)|
    std::vector<int> classWeight(lp.k, 0);
    for (int v : subset) ++classWeight[lp.classOf[v]];
    std::sort(classWeight.rbegin(), classWeight.rend());
    std::uint64_t closed = 0;
    for (std::uint64_t j = 0; j < std::min<std::uint64_t>(B, classWeight.size()); ++j)
      closed += static_cast<std::uint64_t>(classWeight[j]);

    if (closed > B * static_cast<std::uint64_t>(opt)) {
      rep.holds = false;
      rep.detail = "factor exceeded on subgraph mask " + std::to_string(mask);
      return rep;
    }
    ++rep.subgraphsChecked;

    if (mask % stride == 0 || mask + 1 == total) {
      LinearProgram probe = lp.system;
      AffineFunction f = sqrtLpObjective(lp, subset);
      for (const auto& [v, coef] : f.coeffs) probe.setObjective(v, coef);
      probe.sense = Sense::Maximize;
      LpSolution sol = solve(probe);
      if (sol.status != LpStatus::Optimal ||
          sol.value != Rational(static_cast<long>(closed))) {
        rep.zeroOneYOptimal = false;
        rep.detail = "closed form disagrees with the exact LP on mask " + std::to_string(mask);
      }
      ++rep.lpSolvesChecked;
    }
  }
  rep.holds = rep.holds && rep.zeroOneYOptimal;
  return rep;
}

std::string graphToJson(const Graph& g) {
  ordered_json j;
  j["vertices"] = g.names;
  ordered_json edges = ordered_json::array();
  for (auto [a, b] : g.edges) edges.push_back(ordered_json::array({g.names[a], g.names[b]}));
  j["edges"] = edges;
  return j.dump(2);
}

Graph graphFromJson(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Graph g;
  for (const auto& name : j.at("vertices")) g.names.push_back(name.get<std::string>());
  auto indexOf = [&](const std::string& name) {
    for (std::size_t i = 0; i < g.names.size(); ++i)
      if (g.names[i] == name) return static_cast<int>(i);
    throw GaplabError("edge references unknown vertex " + name);
  };
  for (const auto& e : j.at("edges")) {
    int a = indexOf(e.at(0).get<std::string>());
    int b = indexOf(e.at(1).get<std::string>());
    g.edges.emplace_back(a, b);
  }
  Graph checked = makeGraph(g.n(), g.edges);
  checked.names = g.names;
  return checked;
}

std::string hypergraphToJson(const Hypergraph& h) {
  ordered_json j;
  j["vertices"] = h.names;
  ordered_json edges = ordered_json::array();
  for (const auto& e : h.edges) {
    ordered_json edge = ordered_json::array();
    for (int v : e) edge.push_back(h.names[v]);
    edges.push_back(edge);
  }
  j["hyperedges"] = edges;
  return j.dump(2);
}

Hypergraph hypergraphFromJson(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Hypergraph h;
  for (const auto& name : j.at("vertices")) h.names.push_back(name.get<std::string>());
  auto indexOf = [&](const std::string& name) {
    for (std::size_t i = 0; i < h.names.size(); ++i)
      if (h.names[i] == name) return static_cast<int>(i);
    throw GaplabError("hyperedge references unknown vertex " + name);
  };
  std::vector<std::vector<int>> edges;
  for (const auto& e : j.at("hyperedges")) {
    std::vector<int> edge;
    for (const auto& name : e) edge.push_back(indexOf(name.get<std::string>()));
    edges.push_back(std::move(edge));
  }
  Hypergraph checked = makeHypergraph(h.n(), std::move(edges));
  checked.names = h.names;
  return checked;
}

std::string costsToJson(const CostVector& c) {
  ordered_json j = ordered_json::array();
  for (const auto& x : c) j.push_back(toString(x));
  return j.dump(2);
}

CostVector costsFromJson(const std::string& text, int n) {
  ordered_json j = ordered_json::parse(text);
  CostVector c;
  for (const auto& x : j) c.push_back(parseRational(x.get<std::string>()));
  if (static_cast<int>(c.size()) != n) throw GaplabError("cost vector length mismatch");
  return c;
}

}  // namespace gaplab
