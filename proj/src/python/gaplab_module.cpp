#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaplab/fglss.hpp"
#include "gaplab/fourier.hpp"
#include "gaplab/gadgets.hpp"
#include "gaplab/harness.hpp"
#include "gaplab/sherali_adams.hpp"

namespace py = pybind11;
using namespace gaplab;

namespace {

ReductionParams paramsOf(int labelSize, const std::string& eps, int t, int q,
                         const std::string& mode) {
  ReductionParams p;
  p.labelSize = labelSize;
  p.eps = parseRational(eps);
  p.t = t;
  p.q = q;
  if (mode == "enumerate") {
    p.mode = ReductionMode::Enumerate;
  } else if (mode.rfind("sample:", 0) == 0) {
    auto rest = mode.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw GaplabError("mode must be enumerate or sample:SEED:COUNT");
    p.mode = ReductionMode::Sample;
    p.seed = std::stoull(rest.substr(0, colon));
    p.sampleCount = std::stoull(rest.substr(colon + 1));
  } else {
    throw GaplabError("mode must be enumerate or sample:SEED:COUNT");
  }
  return p;
}

}  // namespace

PYBIND11_MODULE(_gaplab, m) {
  m.doc() = "exact LP relaxations, Sherali-Adams lifts and gadget reductions";

  py::register_exception<GaplabError>(m, "GaplabError");

  // Everything crosses the boundary as JSON or "p/q" strings; exactness is
  // preserved end to end.
  m.def("solve_lp", [](const std::string& lpJson) {
    LinearProgram lp = lpFromJson(lpJson);
    return solutionToJson(lp, solve(lp));
  });
  m.def("lp_size", [](const std::string& lpJson) { return lpFromJson(lpJson).size(); });

  m.def("csp_evaluate", [](const std::string& cspJson, const std::vector<int>& x) {
    return toString(evaluate(cspFromJson(cspJson), Assignment{x}));
  });
  m.def("csp_brute_force_opt", [](const std::string& cspJson) {
    auto [val, x] = bruteForceOpt(cspFromJson(cspJson));
    return py::make_tuple(toString(val), x.values);
  });
  m.def("sa_lift", [](const std::string& cspJson, int rounds) {
    return lpToJson(buildSaLp(cspFromJson(cspJson), rounds));
  });
  m.def("sa_optimum", [](const std::string& cspJson, int rounds) {
    return toString(saOptimum(cspFromJson(cspJson), rounds).value);
  });

  m.def("ug_value", [](const std::string& ugJson, const std::vector<int>& labels) {
    return toString(ugValue(ugFromJson(ugJson), Labeling{labels}));
  });
  m.def("ug_brute_force_opt", [](const std::string& ugJson) {
    auto [val, lab] = bruteForceUgOpt(ugFromJson(ugJson));
    return py::make_tuple(toString(val), lab.labels);
  });
  m.def("ug_double_cover",
        [](const std::string& ugJson) { return ugToJson(bipartiteDoubleCover(ugFromJson(ugJson))); });

  m.def("reduce_ug", [](const std::string& kind, const std::string& ugJson,
                        const std::string& eps, int t, int q, const std::string& mode) {
    UgInstance u = ugFromJson(ugJson);
    ReductionParams p = paramsOf(u.labelSize, eps, t, q, mode);
    if (kind == "1f") {
      p.q = 2;
      return cspToJson(ugTo1fCsp(u, p).inst);
    }
    if (kind == "ne") return cspToJson(ugToNeCsp(u, p).inst);
    throw GaplabError("kind must be 1f or ne");
  },
        py::arg("kind"), py::arg("ug_json"), py::arg("eps") = "0", py::arg("t") = 1,
        py::arg("q") = 2, py::arg("mode") = "enumerate");

  m.def("host_graph_json",
        [](int n, int k) { return hostGraphToJson(buildHostGraph(n, k), std::uint64_t(1) << 22); });
  m.def("host_hypergraph_json", [](int n, int q, int k) {
    return hostHypergraphToJson(buildHostHypergraph(n, q, k), std::uint64_t(1) << 22);
  });
  m.def("host_graph_vertex_count",
        [](int n, int k) { return buildHostGraph(n, k).vertices.size(); });
  m.def("host_hypergraph_vertex_count",
        [](int n, int q, int k) { return buildHostHypergraph(n, q, k).vertices.size(); });

  m.def("gen_graph", [](int n, const std::string& p, std::uint64_t seed) {
    return graphToJson(randomGraph(n, parseRational(p), seed));
  });
  m.def("gen_ug", [](int n, int labelSize, int degree, std::uint64_t seed) {
    return ugToJson(randomUg(n, labelSize, degree, seed));
  });

  m.def("vc_gap", [](const std::string& graphJson) {
    Graph g = graphFromJson(graphJson);
    LinearProgram lp = basicVcLp(g, unitCosts(g.n()));
    LpSolution sol = solve(lp);
    auto [opt, cover] = bruteForceVc(g, unitCosts(g.n()));
    return py::make_tuple(toString(sol.value), toString(opt));
  });

  m.def("rho_max_to_min", [](const std::string& mu, const std::string& c, const std::string& s) {
    return toString(rhoMaxToMin(parseRational(mu), parseRational(c), parseRational(s)));
  });
  m.def("rho_max_to_max", [](const std::string& mu, const std::string& c, const std::string& s) {
    return toString(rhoMaxToMax(parseRational(mu), parseRational(c), parseRational(s)));
  });

  m.def("folded_dictator_table", [](int ell, int q, int R) {
    return truthTableToJson(encodeFoldedDictator(ell, q, R));
  });
  m.def("influence", [](int q, int R, const std::vector<int>& table, int i) {
    return toString(influenceExact(makeZqFunction(q, R, table), i));
  });

  m.def("run_pipeline", [](const std::string& configJson) { return runPipeline(configJson); });
  m.def("verify_suite", [](const std::string& name) {
    SuiteResult res = verifySuite(name);
    return py::make_tuple(res.pass, res.detail);
  });
  m.def("suite_names", []() { return suiteNames(); });
}
