#include "gaplab/harness.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "gaplab/fglss.hpp"
#include "gaplab/fourier.hpp"
#include "gaplab/gadgets.hpp"
#include "gaplab/sherali_adams.hpp"
#include "json.hpp"

namespace gaplab {

using ordered_json = nlohmann::ordered_json;

std::string digestOf(const std::string& payload) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string gapReportToJson(const GapReport& r) {
  ordered_json j;
  j["type"] = "gap";
  j["digest"] = r.digest;
  j["lpValue"] = toString(r.lpValue);
  j["opt"] = toString(r.opt);
  j["ratio"] = toString(r.ratio);
  j["sizes"] = ordered_json{{"constraints", r.size}, {"variables", r.variables}};
  j["provenance"] = ordered_json::parse(r.provenance);
  return j.dump();
}

namespace {

std::uint64_t boundedRand(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

std::vector<int> randomPermutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(p[i], p[boundedRand(rng, static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

std::vector<int> randomSubset(std::mt19937_64& rng, int n, int k) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < k; ++i)
    std::swap(pool[i], pool[i + boundedRand(rng, static_cast<std::uint64_t>(n - i))]);
  std::vector<int> out(pool.begin(), pool.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Graph randomGraph(int n, const Rational& p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw GaplabError("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  const std::uint64_t den = p.get_den().get_ui();
  const std::uint64_t num = p.get_num().get_ui();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (boundedRand(rng, den) < num) edges.emplace_back(i, j);
    }
  }
  return makeGraph(n, std::move(edges));
}

CostVector randomCosts(int n, std::uint64_t seed, int denominatorBound) {
  std::mt19937_64 rng(seed);
  CostVector c;
  for (int i = 0; i < n; ++i) {
    long den = static_cast<long>(boundedRand(rng, denominatorBound)) + 1;
    long num = static_cast<long>(boundedRand(rng, 2 * denominatorBound)) + 1;
    c.push_back(ratio(num, den));
  }
  return c;
}

UgInstance randomUg(int verticesPerSide, int labelSize, int degree, std::uint64_t seed) {
  if (degree < 1 || degree > verticesPerSide)
    throw GaplabError("degree must lie in [1, verticesPerSide]");
  std::mt19937_64 rng(seed);
  UgInstance u;
  u.labelSize = labelSize;
  for (int i = 0; i < verticesPerSide; ++i) u.vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i < verticesPerSide; ++i) u.vertices.push_back("w" + std::to_string(i));
  // union of `degree` perfect matchings, re-drawn on collisions
  std::set<std::pair<int, int>> seen;
  for (int d = 0; d < degree; ++d) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000) throw GaplabError("failed to draw a simple regular graph");
      std::vector<int> match = randomPermutation(rng, verticesPerSide);
      bool fresh = true;
      for (int i = 0; i < verticesPerSide && fresh; ++i)
        fresh = !seen.count({i, match[i]});
      if (!fresh) continue;
      for (int i = 0; i < verticesPerSide; ++i) {
        seen.insert({i, match[i]});
        UgEdge e;
        e.u = i;
        e.v = verticesPerSide + match[i];
        e.pi = randomPermutation(rng, labelSize);
        u.edges.push_back(std::move(e));
      }
      break;
    }
  }
  validateUg(u);
  return u;
}

CspInstance random1fCsp(int n, int k, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CspConstraint> cs;
  for (int i = 0; i < m; ++i) {
    CspConstraint c;
    c.support = randomSubset(rng, n, k);
    std::uint64_t space = std::uint64_t(1) << k;
    std::uint64_t t1 = boundedRand(rng, space);
    std::uint64_t t2 = boundedRand(rng, space - 1);
    if (t2 >= t1) ++t2;
    c.accepting.push_back(tupleFromIndex(t1, k, 2));
    c.accepting.push_back(tupleFromIndex(t2, k, 2));
    cs.push_back(std::move(c));
  }
  return makeCsp(2, n, std::move(cs));
}

CspInstance randomNeCsp(int n, int k, int q, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CspConstraint> cs;
  for (int i = 0; i < m; ++i) {
    NotEqualTemplate t;
    t.support = randomSubset(rng, n, k);
    for (int j = 0; j < k; ++j)
      t.forbidden.push_back(static_cast<int>(boundedRand(rng, q)));
    cs.push_back(expandNotEqual(t, q, Rational(1)));
  }
  return makeCsp(q, n, std::move(cs));
}

CspInstance randomCsp(int n, int domainSize, int arity, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CspConstraint> cs;
  for (int i = 0; i < m; ++i) {
    CspConstraint c;
    c.support = randomSubset(rng, n, arity);
    std::uint64_t space = 1;
    for (int j = 0; j < arity; ++j) space *= static_cast<std::uint64_t>(domainSize);
    for (std::uint64_t t = 0; t < space; ++t)
      if (boundedRand(rng, 2) == 1) c.accepting.push_back(tupleFromIndex(t, arity, domainSize));
    if (c.accepting.empty())
      c.accepting.push_back(tupleFromIndex(boundedRand(rng, space), arity, domainSize));
    cs.push_back(std::move(c));
  }
  return makeCsp(domainSize, n, std::move(cs));
}

// ---- pipeline ----

namespace {

struct PipelineState {
  std::optional<Graph> graph;
  std::optional<Hypergraph> hypergraph;
  std::optional<CostVector> costs;
  std::optional<CspInstance> csp;
  std::optional<UgInstance> ug;
  std::optional<Reduction1f> red1f;
  std::optional<ReductionNe> redNe;
  ordered_json chain = ordered_json::array();
};

CspInstance maxCutTriangle() {
  std::vector<CspConstraint> cs;
  for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
    CspConstraint c;
    c.support = {a, b};
    c.accepting = {{0, 1}, {1, 0}};
    cs.push_back(std::move(c));
  }
  return makeCsp(2, 3, std::move(cs));
}

GapReport finishReport(const Rational& lp, const Rational& opt, bool minimization,
                       std::size_t size, std::size_t variables, const ordered_json& chain) {
  GapReport rep;
  rep.lpValue = lp;
  rep.opt = opt;
  const Rational& den = minimization ? lp : opt;
  if (den == 0) {
    if ((minimization ? opt : lp) != 0) throw GaplabError("gap ratio undefined at zero");
    rep.ratio = 1;
  } else {
    rep.ratio = minimization ? opt / lp : lp / opt;
  }
  rep.size = size;
  rep.variables = variables;
  rep.provenance = chain.dump();
  rep.digest = digestOf(rep.provenance + "|" + toString(lp) + "|" + toString(opt));
  return rep;
}

ReductionParams paramsFromStage(const ordered_json& stage, int labelSize) {
  ReductionParams p;
  p.labelSize = labelSize;
  if (stage.contains("eps")) p.eps = parseRational(stage["eps"].get<std::string>());
  p.t = stage.value("t", 1);
  p.q = stage.value("q", 2);
  std::string mode = stage.value("mode", "enumerate");
  if (mode == "enumerate") {
    p.mode = ReductionMode::Enumerate;
  } else if (mode.rfind("sample:", 0) == 0) {
    p.mode = ReductionMode::Sample;
    auto rest = mode.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw GaplabError("sample mode wants sample:SEED:COUNT");
    p.seed = std::stoull(rest.substr(0, colon));
    p.sampleCount = std::stoull(rest.substr(colon + 1));
  } else {
    throw GaplabError("unknown reduction mode " + mode);
  }
  return p;
}

}  // namespace

std::vector<std::string> runPipeline(const std::string& configJson) {
  ordered_json config = ordered_json::parse(configJson);
  PipelineState st;
  std::vector<std::string> out;
  if (config.contains("meta")) st.chain.push_back(ordered_json{{"meta", config["meta"]}});

  for (const auto& stage : config.at("stages")) {
    const std::string kind = stage.at("kind").get<std::string>();
    st.chain.push_back(stage);

    if (kind == "complete-graph") {
      st.graph = completeGraph(stage.at("n").get<int>());
    } else if (kind == "cycle-graph") {
      st.graph = cycleGraph(stage.at("n").get<int>());
    } else if (kind == "gen-graph") {
      st.graph = randomGraph(stage.at("n").get<int>(),
                             parseRational(stage.at("p").get<std::string>()),
                             stage.at("seed").get<std::uint64_t>());
    } else if (kind == "graph-json") {
      st.graph = graphFromJson(stage.at("json").dump());
    } else if (kind == "hypergraph-json") {
      st.hypergraph = hypergraphFromJson(stage.at("json").dump());
    } else if (kind == "costs") {
      CostVector c;
      for (const auto& x : stage.at("values")) c.push_back(parseRational(x.get<std::string>()));
      st.costs = std::move(c);
    } else if (kind == "random-costs") {
      int n = st.graph ? st.graph->n() : (st.hypergraph ? st.hypergraph->n() : 0);
      st.costs = randomCosts(n, stage.at("seed").get<std::uint64_t>());
    } else if (kind == "maxcut-triangle") {
      st.csp = maxCutTriangle();
    } else if (kind == "csp-json") {
      st.csp = cspFromJson(stage.at("json").dump());
    } else if (kind == "gen-csp") {
      const std::string family = stage.at("family").get<std::string>();
      int n = stage.at("n").get<int>();
      int m = stage.at("m").get<int>();
      std::uint64_t seed = stage.at("seed").get<std::uint64_t>();
      if (family == "1f") {
        st.csp = random1fCsp(n, stage.at("k").get<int>(), m, seed);
      } else if (family == "ne") {
        st.csp = randomNeCsp(n, stage.at("k").get<int>(), stage.at("q").get<int>(), m, seed);
      } else {
        st.csp = randomCsp(n, stage.at("R").get<int>(), stage.at("k").get<int>(), m, seed);
      }
    } else if (kind == "gen-ug") {
      st.ug = randomUg(stage.at("n").get<int>(), stage.at("R").get<int>(),
                       stage.at("degree").get<int>(), stage.at("seed").get<std::uint64_t>());
    } else if (kind == "ug-json") {
      st.ug = ugFromJson(stage.at("json").dump());
    } else if (kind == "reduce") {
      if (!st.ug) throw GaplabError("reduce stage needs a Unique Games instance");
      const std::string target = stage.at("target").get<std::string>();
      ReductionParams p = paramsFromStage(stage, st.ug->labelSize);
      if (target == "1f") {
        p.q = 2;
        st.red1f = ugTo1fCsp(*st.ug, p);
        st.csp = st.red1f->inst;
      } else if (target == "ne") {
        st.redNe = ugToNeCsp(*st.ug, p);
        st.csp = st.redNe->inst;
      } else {
        throw GaplabError("unknown reduction target " + target);
      }
    } else if (kind == "gap") {
      const std::string relaxation = stage.at("relaxation").get<std::string>();
      const int rounds = stage.value("rounds", 0);
      if (relaxation == "vc") {
        if (!st.graph) throw GaplabError("vc gap needs a graph");
        CostVector costs = st.costs ? *st.costs : unitCosts(st.graph->n());
        LinearProgram lp = basicVcLp(*st.graph, costs);
        if (rounds > 0) lp = genericSaLift(lp, rounds);
        LpSolution sol = solve(lp);
        if (sol.status != LpStatus::Optimal) throw GaplabError("vc LP not optimal");
        auto [opt, cover] = bruteForceVc(*st.graph, costs);
        out.push_back(gapReportToJson(finishReport(sol.value, opt, true, lp.size(), lp.variables.size(), st.chain)));
      } else if (relaxation == "qvc") {
        if (!st.hypergraph) throw GaplabError("qvc gap needs a hypergraph");
        CostVector costs = st.costs ? *st.costs : unitCosts(st.hypergraph->n());
        LinearProgram lp = hypergraphVcLp(*st.hypergraph, costs);
        if (rounds > 0) lp = genericSaLift(lp, rounds);
        LpSolution sol = solve(lp);
        if (sol.status != LpStatus::Optimal) throw GaplabError("qvc LP not optimal");
        auto [opt, cover] = bruteForceVc(*st.hypergraph, costs);
        out.push_back(gapReportToJson(finishReport(sol.value, opt, true, lp.size(), lp.variables.size(), st.chain)));
      } else if (relaxation == "is-sqrt") {
        if (!st.graph) throw GaplabError("is-sqrt gap needs a graph");
        GreedyColoring coloring = greedyColoring(*st.graph);
        SqrtLp sq = buildSqrtLp(*st.graph, coloring);
        LinearProgram probe = sq.system;
        for (int v = 0; v < sq.n; ++v) probe.setObjective(v, Rational(1));
        LpSolution sol = solve(probe);
        if (sol.status != LpStatus::Optimal) throw GaplabError("sqrt LP not optimal");
        Rational opt = static_cast<long>(maxIndependentSet(*st.graph).size());
        out.push_back(
            gapReportToJson(finishReport(sol.value, opt, false, probe.size(), probe.variables.size(), st.chain)));
      } else {
        throw GaplabError("unknown relaxation " + relaxation);
      }
    } else if (kind == "sa-gap") {
      if (!st.csp) throw GaplabError("sa-gap needs a CSP");
      int rounds = stage.at("rounds").get<int>();
      SaOptimum sa = saOptimum(*st.csp, rounds);
      auto [opt, x] = bruteForceOpt(*st.csp);
      out.push_back(gapReportToJson(finishReport(sa.value, opt, false, sa.lpSize, sa.lpVariables, st.chain)));
    } else if (kind == "host-exactness") {
      const std::string target = stage.value("target", "1f");
      ordered_json line;
      line["type"] = "check";
      line["check"] = "host-exactness-" + target;
      if (target == "1f") {
        if (!st.red1f) throw GaplabError("host-exactness 1f needs a reduce stage");
        const CspInstance& inst = st.red1f->inst;
        int arity = inst.constraints.empty()
                        ? 0
                        : static_cast<int>(inst.constraints.front().support.size());
        auto ofb = validateOneFreeBit(inst, arity);
        if (!ofb.ok) throw GaplabError("reduced instance is not one-free-bit: " + ofb.reason);
        std::vector<OneFreePredicate> preds;
        for (const auto& c : inst.constraints)
          preds.push_back(makeOneFreePredicate(c.support, c.accepting[0], c.accepting[1]));
        Induced1f induced = mapInstance1f(inst.numVars, arity, preds);
        ExactnessReport rep = verifyExactness1f(induced);
        line["exact"] = rep.valIdentity && rep.optIdentity && rep.coverOfFormUx && rep.extraction;
        line["mu"] = toString(rep.mu);
        line["zeta"] = toString(rep.zeta);
        line["opt1"] = toString(rep.opt1);
        line["opt2"] = toString(rep.opt2);
      } else {
        if (!st.redNe) throw GaplabError("host-exactness ne needs a reduce stage");
        const CspInstance& inst = st.redNe->inst;
        int arity = inst.constraints.empty()
                        ? 0
                        : static_cast<int>(inst.constraints.front().support.size());
        std::vector<NotEqualTemplate> preds;
        for (const auto& c : inst.constraints) {
          auto forb = asNotEqual(c, inst.domainSize);
          if (!forb) throw GaplabError("reduced instance is not a Not-Equal CSP");
          preds.push_back(NotEqualTemplate{c.support, *forb});
        }
        InducedNe induced = mapInstanceNe(inst.numVars, inst.domainSize, arity, preds);
        ExactnessReport rep = verifyExactnessNe(induced);
        line["exact"] = rep.valIdentity && rep.optIdentity && rep.coverOfFormUx && rep.extraction;
        line["mu"] = toString(rep.mu);
        line["zeta"] = toString(rep.zeta);
        line["opt1"] = toString(rep.opt1);
        line["opt2"] = toString(rep.opt2);
      }
      line["provenance"] = st.chain;
      line["digest"] = digestOf(st.chain.dump() + "|" + line["check"].get<std::string>());
      out.push_back(line.dump());
    } else if (kind == "verify") {
      const std::string suite = stage.at("suite").get<std::string>();
      SuiteResult res = verifySuite(suite);
      ordered_json line;
      line["type"] = "check";
      line["check"] = "suite-" + suite;
      line["pass"] = res.pass;
      line["detail"] = res.detail;
      line["provenance"] = st.chain;
      line["digest"] = digestOf(st.chain.dump() + "|" + suite + "|" + (res.pass ? "1" : "0"));
      out.push_back(line.dump());
    } else {
      throw GaplabError("unknown pipeline stage kind " + kind);
    }
  }
  return out;
}

// ---- verification suites ----

namespace {

SuiteResult pass() { return SuiteResult{true, "ok"}; }
SuiteResult fail(const std::string& detail) { return SuiteResult{false, detail}; }

SuiteResult suiteLemma21() {
  // random mixtures of point families are consistent; their SA points must be
  // feasible for the canonical relaxation
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    CspInstance inst = randomCsp(3, 2, 2, 3, seed);
    int rounds = 3;
    std::mt19937_64 rng(seed);
    LocalDistributionFamily mix;
    Rational weights[3] = {ratio(1, 2), ratio(1, 3), ratio(1, 6)};
    for (int rep = 0; rep < 3; ++rep) {
      Assignment x{tupleFromIndex(boundedRand(rng, 8), 3, 2)};
      LocalDistributionFamily f = pointFamily(inst, x, rounds);
      if (rep == 0) {
        mix = f;
        for (auto& [s, d] : mix.dists)
          for (auto& [vals, mass] : d) mass *= weights[0];
      } else {
        for (auto& [s, d] : f.dists)
          for (auto& [vals, mass] : d) mix.dists[s][vals] += mass * weights[rep];
      }
    }
    SaSolution x = localToSa(mix);
    if (auto why = saFeasibilityViolation(x)) return fail("seed " + std::to_string(seed) + ": " + *why);
    LinearProgram lp = buildSaLp(inst, rounds);
    std::vector<Rational> point(lp.variables.size(), Rational(0));
    for (const auto& [key, val] : x.entries) point[lp.variableIndex("X[" + saKey(key) + "]")] = val;
    if (!lp.satisfies(point)) return fail("localToSa point violates the SA LP");
  }
  return pass();
}

SuiteResult suiteLemma22() {
  for (std::uint64_t seed : {21u, 22u}) {
    CspInstance inst = randomCsp(3, 2, 2, 3, seed);
    SaOptimum sa = saOptimum(inst, 3);
    LocalDistributionFamily fam = saToLocal(sa.point);
    if (auto why = familyViolation(fam)) return fail(*why);
    SaSolution back = localToSa(fam);
    if (back.entries != sa.point.entries) return fail("round trip changed the SA point");
  }
  return pass();
}

UgInstance tinyUgForCompleteness(int R, std::uint64_t seed) { return randomUg(2, R, 2, seed); }

SuiteResult suiteClaim35() {
  for (std::uint64_t seed : {31u, 32u}) {
    UgInstance u = tinyUgForCompleteness(2, seed);
    ReductionParams p;
    p.labelSize = 2;
    p.eps = ratio(1, 2);
    p.t = 2;
    // v = first left vertex, its two neighbors with repetition patterns
    int v = 0;
    std::vector<int> nbrs;
    for (const auto& e : u.edges) {
      if (e.u == v) nbrs.push_back(e.v);
      if (e.v == v) nbrs.push_back(e.u);
    }
    for (int w1 : nbrs) {
      for (int w2 : nbrs) {
        // labelings satisfying both edges
        for (int lv = 0; lv < 2; ++lv) {
          Labeling lab{Tuple(u.vertices.size(), 0)};
          lab.labels[v] = lv;
          bool ok = true;
          for (const auto& e : u.edges) {
            int a = e.u, b = e.v;
            if (a == v) lab.labels[b] = e.pi[lv];
            if (b == v) lab.labels[a] = static_cast<int>(
                std::find(e.pi.begin(), e.pi.end(), lv) - e.pi.begin());
          }
          (void)ok;
          CompletenessReport rep = verifyCompleteness1f(u, v, {w1, w2}, lab, p);
          if (!rep.conditionalIsOne) return fail("conditional probability below 1");
          if (!rep.overallBoundHolds) return fail("overall probability below 1 - eps");
        }
      }
    }
  }
  return pass();
}

SuiteResult suiteClaim610() {
  UgInstance u = tinyUgForCompleteness(2, 61);
  ReductionParams p;
  p.labelSize = 2;
  p.eps = ratio(1, 2);
  p.t = 1;
  p.q = 3;
  int v = 0;
  std::vector<int> nbrs;
  for (const auto& e : u.edges) {
    if (e.u == v) nbrs.push_back(e.v);
    if (e.v == v) nbrs.push_back(e.u);
  }
  for (int w : nbrs) {
    for (int lv = 0; lv < 2; ++lv) {
      Labeling lab{Tuple(u.vertices.size(), 0)};
      lab.labels[v] = lv;
      for (const auto& e : u.edges) {
        if (e.u == v) lab.labels[e.v] = e.pi[lv];
        if (e.v == v)
          lab.labels[e.u] =
              static_cast<int>(std::find(e.pi.begin(), e.pi.end(), lv) - e.pi.begin());
      }
      CompletenessReport rep = verifyCompletenessNe(u, v, {w}, lab, p);
      if (!rep.conditionalIsOne) return fail("conditional probability below 1");
      if (!rep.overallBoundHolds) return fail("overall probability below (1-eps)(1-1/q)");
    }
  }
  return pass();
}

SuiteResult suiteLemma33() {
  UgInstance u = randomUg(2, 2, 1, 33);
  ReductionParams p;
  p.labelSize = 2;
  p.eps = 0;
  p.t = 1;
  Reduction1f red = ugTo1fCsp(u, p);
  int rounds = 3;
  auto [optVal, optLab] = bruteForceUgOpt(u);
  for (int mode = 0; mode < 2; ++mode) {
    LocalDistributionFamily mu =
        mode == 0 ? ugPointFamily(u, optLab, rounds) : ugUniformFamily(u, rounds);
    TransferReport rep = transferSa1f(mu, red, rounds);
    if (!rep.consistent) return fail("transferred family inconsistent");
    if (!rep.holds) return fail("transfer value bound fails");
  }
  return pass();
}

SuiteResult suiteLemma68() {
  UgInstance u = randomUg(2, 2, 1, 68);
  ReductionParams p;
  p.labelSize = 2;
  p.eps = ratio(1, 2);
  p.t = 1;
  p.q = 3;
  ReductionNe red = ugToNeCsp(u, p);
  int rounds = 3;
  auto [optVal, optLab] = bruteForceUgOpt(u);
  for (int mode = 0; mode < 2; ++mode) {
    LocalDistributionFamily mu =
        mode == 0 ? ugPointFamily(u, optLab, rounds) : ugUniformFamily(u, rounds);
    TransferReport rep = transferSaNe(mu, red, rounds);
    if (!rep.consistent) return fail("transferred family inconsistent");
    if (!rep.holds) return fail("transfer value bound fails");
  }
  return pass();
}

SuiteResult suiteAppendixA() {
  CspInstance single = makeCsp(2, 2, {CspConstraint{{0, 1}, {{0, 1}, {1, 0}}, Rational(1)}});
  for (const CspInstance& inst : {single, maxCutTriangle()}) {
    AppendixAReport rep = verifyAppendixAEquivalence(inst, 2);
    if (!rep.optimaEqual) return fail("optima differ: " + rep.detail);
    if (!rep.contradictoryForcedZero) return fail(rep.detail);
  }
  return pass();
}

SuiteResult suiteLemma51() {
  for (const Graph& g : {completeGraph(5), cycleGraph(5), randomGraph(8, ratio(1, 2), 51)}) {
    GreedyColoring coloring = greedyColoring(g);
    Lemma51Report rep = verifyLemma51(g, coloring);
    if (!rep.holds) return fail("independent set meets too many classes");
  }
  return pass();
}

SuiteResult suiteLemma52() {
  for (const Graph& g : {completeGraph(5), cycleGraph(5), randomGraph(8, ratio(1, 2), 52)}) {
    GreedyColoring coloring = greedyColoring(g);
    Lemma52Report rep = verifyLemma52(g, coloring, 8);
    if (!rep.holds) return fail(rep.detail);
  }
  return pass();
}

SuiteResult suiteExactness1f() {
  std::mt19937_64 rng(81);
  HostGraph host = buildHostGraph(3, 2);
  for (int trial = 0; trial < 10; ++trial) {
    int m = 1 + static_cast<int>(boundedRand(rng, 4));
    std::set<int> picked;
    while (static_cast<int>(picked.size()) < m)
      picked.insert(static_cast<int>(boundedRand(rng, host.preds.size())));
    std::vector<OneFreePredicate> preds;
    for (int id : picked) preds.push_back(host.preds[id]);
    ExactnessReport rep = verifyExactness1f(mapInstance1f(3, 2, preds));
    if (!(rep.valIdentity && rep.optIdentity && rep.coverOfFormUx && rep.extraction))
      return fail("trial " + std::to_string(trial) + ": " + rep.detail);
  }
  return pass();
}

SuiteResult suiteExactnessNe() {
  for (int q : {2, 3}) {
    HostHypergraph host = buildHostHypergraph(2, q, 1);
    std::mt19937_64 rng(90 + q);
    for (int trial = 0; trial < 10; ++trial) {
      int m = 1 + static_cast<int>(boundedRand(rng, host.vertices.size()));
      std::set<int> picked;
      while (static_cast<int>(picked.size()) < m)
        picked.insert(static_cast<int>(boundedRand(rng, host.vertices.size())));
      std::vector<NotEqualTemplate> preds;
      for (int id : picked)
        preds.push_back(
            NotEqualTemplate{host.vertices[id].support, host.vertices[id].forbidden});
      ExactnessReport rep = verifyExactnessNe(mapInstanceNe(2, q, 1, preds));
      if (!(rep.valIdentity && rep.optIdentity && rep.coverOfFormUx && rep.extraction))
        return fail("q=" + std::to_string(q) + " trial " + std::to_string(trial) + ": " +
                    rep.detail);
    }
  }
  return pass();
}

SuiteResult suiteRho() {
  for (long den : {10l, 100l}) {
    Rational eps = ratio(1, den);
    Rational rho = rhoMaxToMin(Rational(2), 1 - eps, eps);
    if (rho != (2 - eps) / (1 + eps)) return fail("vc factor formula");
    if (!(rho >= 2 - 3 * eps)) return fail("vc factor bound 2 - 3eps");
  }
  for (int q : {2, 3}) {
    Rational eps = ratio(1, 20);
    Rational rho = rhoMaxToMin(Rational(1), 1 - ratio(1, q) - eps, eps);
    Rational constant = Rational(q) * (q + 1);
    if (!(rho >= Rational(q) - constant * eps)) return fail("qvc factor bound");
  }
  Rational eps = ratio(1, 10);
  Rational rho = rhoMaxToMax(Rational(0), 1 - eps, eps);
  if (rho != (1 - eps) / eps) return fail("is factor formula");
  if (!(rho >= 1 / (2 * eps))) return fail("is factor bound");
  return pass();
}

SuiteResult suiteObs63() {
  std::mt19937_64 rng(63);
  for (int q : {2, 3}) {
    for (int R : {2, 3}) {
      std::uint64_t size = 1;
      for (int i = 0; i < R; ++i) size *= static_cast<std::uint64_t>(q);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> table(size);
        for (auto& v : table) v = static_cast<int>(boundedRand(rng, 2));
        ZqFunction f = makeZqFunction(q, R, table);
        FourierExpansion e = fourierExpand(f);
        for (int d = 0; d <= R; ++d) {
          double sum = 0;
          for (int i = 0; i < R; ++i) sum += degreeDInfluence(e, i, d);
          if (sum > d + 1e-9) return fail("degree-d influence sum exceeds d");
        }
      }
    }
  }
  return pass();
}

SuiteResult suiteFolding() {
  std::mt19937_64 rng(14);
  for (int q : {2, 3}) {
    for (int R : {1, 2, 3}) {
      for (int ell = 0; ell < R; ++ell) {
        ZqFunction f = foldedDictator(ell, q, R);
        if (!isFolded(f)) return fail("dictator not folded");
        if (expectationExact(f) != 1 - ratio(1, q)) return fail("dictator expectation");
        ZqFunction back = decodeTable(encodeTable(f));
        if (back.table != f.table) return fail("dictator round trip");
      }
      // random folded functions: choose the zero per line
      std::uint64_t reps = 1;
      for (int i = 0; i < R - 1; ++i) reps *= static_cast<std::uint64_t>(q);
      for (int trial = 0; trial < 3; ++trial) {
        FoldedTruthTable t;
        t.q = q;
        t.R = R;
        for (std::uint64_t i = 0; i < reps; ++i)
          t.entries.push_back(static_cast<int>(boundedRand(rng, q)));
        ZqFunction f = decodeTable(t);
        if (!isFolded(f)) return fail("random table not folded");
        if (expectationExact(f) != 1 - ratio(1, q)) return fail("random folded expectation");
        FoldedTruthTable t2 = encodeTable(f);
        if (t2.entries != t.entries) return fail("random table round trip");
      }
    }
  }
  return pass();
}

}  // namespace

std::vector<std::string> suiteNames() {
  return {"lemma21",  "lemma22",  "claim35",     "claim610",    "lemma33",
          "lemma68",  "appendixA", "lemma51",     "lemma52",     "exactness1f",
          "exactnessNe", "rho",   "obs63",       "folding"};
}

SuiteResult verifySuite(const std::string& name) {
  if (name == "lemma21") return suiteLemma21();
  if (name == "lemma22") return suiteLemma22();
  if (name == "claim35") return suiteClaim35();
  if (name == "claim610") return suiteClaim610();
  if (name == "lemma33") return suiteLemma33();
  if (name == "lemma68") return suiteLemma68();
  if (name == "appendixA") return suiteAppendixA();
  if (name == "lemma51") return suiteLemma51();
  if (name == "lemma52") return suiteLemma52();
  if (name == "exactness1f") return suiteExactness1f();
  if (name == "exactnessNe") return suiteExactnessNe();
  if (name == "rho") return suiteRho();
  if (name == "obs63") return suiteObs63();
  if (name == "folding") return suiteFolding();
  throw GaplabError("unknown suite " + name);
}

}  // namespace gaplab
