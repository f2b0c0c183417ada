#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gaplab/fglss.hpp"
#include "gaplab/gadgets.hpp"
#include "gaplab/harness.hpp"
#include "gaplab/sherali_adams.hpp"
#include "json.hpp"

// Exit codes: 0 all checks pass, 1 counterexample found, 2 usage/budget error.

namespace {

using namespace gaplab;
using ordered_json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GaplabError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw GaplabError("cannot write " + path);
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

void emit(const std::string& outPath, const std::string& text) {
  if (outPath.empty()) {
    std::cout << text << "\n";
  } else {
    spill(outPath, text);
  }
}

ReductionMode parseMode(const std::string& mode, std::uint64_t* seed, std::uint64_t* count) {
  if (mode == "enumerate") return ReductionMode::Enumerate;
  if (mode.rfind("sample:", 0) == 0) {
    auto rest = mode.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw GaplabError("sample mode must look like sample:SEED:COUNT");
    *seed = std::stoull(rest.substr(0, colon));
    *count = std::stoull(rest.substr(colon + 1));
    return ReductionMode::Sample;
  }
  throw GaplabError("unknown mode " + mode);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for LP relaxations, Sherali-Adams lifts and gadget reductions"};
  app.require_subcommand(0, 1);

  std::string configPath;
  app.add_option("--config", configPath, "run a pipeline described by a JSON config");
  std::string outPath;
  app.add_option("-o,--out", outPath, "output file (stdout when omitted)");

  // gen-ug
  auto* genUg = app.add_subcommand("gen-ug", "seeded random regular bipartite Unique Games");
  int ugN = 2, ugR = 2, ugDeg = 1;
  std::uint64_t ugSeed = 0;
  genUg->add_option("--n", ugN, "vertices per side")->required();
  genUg->add_option("--R", ugR, "label set size")->required();
  genUg->add_option("--degree", ugDeg, "degree");
  genUg->add_option("--seed", ugSeed, "seed")->required();

  // gen-graph
  auto* genGraph = app.add_subcommand("gen-graph", "seeded G(n,p) with exact rational p");
  int gN = 4;
  std::string gP = "1/2";
  std::uint64_t gSeed = 0;
  genGraph->add_option("--n", gN)->required();
  genGraph->add_option("--p", gP, "edge probability p/q");
  genGraph->add_option("--seed", gSeed)->required();

  // gen-csp
  auto* genCsp = app.add_subcommand("gen-csp", "seeded random CSP instances");
  std::string family = "general";
  int cN = 4, cK = 2, cM = 3, cQ = 2, cR = 2;
  std::uint64_t cSeed = 0;
  genCsp->add_option("--family", family, "1f | ne | general");
  genCsp->add_option("--n", cN)->required();
  genCsp->add_option("--k", cK);
  genCsp->add_option("--m", cM)->required();
  genCsp->add_option("--q", cQ);
  genCsp->add_option("--R", cR);
  genCsp->add_option("--seed", cSeed)->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Unique Games gadget reductions");
  std::string target;
  reduce->add_option("target", target, "1f | ne")->required();
  std::string ugPath, epsStr = "0", modeStr = "enumerate", sidecar;
  int rT = 1, rQ = 3;
  reduce->add_option("--ug", ugPath, "Unique Games JSON")->required();
  reduce->add_option("--eps", epsStr, "freeness, eps*R integral");
  reduce->add_option("--t", rT, "repetitions");
  reduce->add_option("--q", rQ, "domain size (ne)");
  reduce->add_option("--mode", modeStr, "enumerate | sample:SEED:COUNT");
  reduce->add_option("--sidecar", sidecar, "provenance sidecar path");

  // sa-lift
  auto* saLift = app.add_subcommand("sa-lift", "canonical Sherali-Adams relaxation of a CSP");
  std::string cspPath;
  int rounds = 1;
  saLift->add_option("--csp", cspPath)->required();
  saLift->add_option("--rounds", rounds)->required();

  // host-graph
  auto* host = app.add_subcommand("host-graph", "universal FGLSS host (hyper)graph");
  int hN = 2, hK = 1, hQ = 0;
  host->add_option("--n", hN)->required();
  host->add_option("--k", hK)->required();
  host->add_option("--q", hQ, "build the q-uniform host hypergraph");

  // solve
  auto* solveCmd = app.add_subcommand("solve", "solve an LP JSON exactly");
  std::string lpPath;
  solveCmd->add_option("--lp", lpPath)->required();

  // gap
  auto* gap = app.add_subcommand("gap", "gap report for a relaxation");
  std::string gapKind, graphPath, costsPath;
  int gapRounds = 0;
  gap->add_option("kind", gapKind, "vc | is | qvc")->required();
  gap->add_option("--graph", graphPath, "graph (vc, is) or hypergraph (qvc) JSON")->required();
  gap->add_option("--costs", costsPath, "rational cost vector JSON");
  gap->add_option("--rounds", gapRounds, "generic SA lift rounds (vc, qvc)");

  // verify
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suiteName;
  verify->add_option("suite", suiteName, "suite name or 'all'")->required();

  // report
  auto* report = app.add_subcommand("report", "inspect or re-derive a JSONL report stream");
  std::string reportPath;
  bool check = false;
  report->add_option("file", reportPath)->required();
  report->add_flag("--check", check, "re-run every provenance chain and compare");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!configPath.empty()) {
      auto lines = runPipeline(slurp(configPath));
      std::string joined;
      for (const auto& line : lines) joined += line + "\n";
      if (outPath.empty()) {
        std::cout << joined;
      } else {
        std::ofstream outF(outPath, std::ios::app);
        outF << joined;
      }
      return 0;
    }
    if (*genUg) {
      emit(outPath, ugToJson(randomUg(ugN, ugR, ugDeg, ugSeed)));
      return 0;
    }
    if (*genGraph) {
      emit(outPath, graphToJson(randomGraph(gN, parseRational(gP), gSeed)));
      return 0;
    }
    if (*genCsp) {
      CspInstance inst = family == "1f" ? random1fCsp(cN, cK, cM, cSeed)
                       : family == "ne" ? randomNeCsp(cN, cK, cQ, cM, cSeed)
                                        : randomCsp(cN, cR, cK, cM, cSeed);
      emit(outPath, cspToJson(inst));
      return 0;
    }
    if (*reduce) {
      UgInstance u = ugFromJson(slurp(ugPath));
      ReductionParams p;
      p.labelSize = u.labelSize;
      p.eps = parseRational(epsStr);
      p.t = rT;
      p.mode = parseMode(modeStr, &p.seed, &p.sampleCount);
      std::string provenance;
      std::string csp;
      if (target == "1f") {
        p.q = 2;
        Reduction1f red = ugTo1fCsp(u, p);
        csp = cspToJson(red.inst);
        provenance =
            reductionProvenance("1f", p, red.rawOutcomes, red.inst.constraints.size());
      } else if (target == "ne") {
        p.q = rQ;
        ReductionNe red = ugToNeCsp(u, p);
        csp = cspToJson(red.inst);
        provenance =
            reductionProvenance("ne", p, red.rawOutcomes, red.inst.constraints.size());
      } else {
        throw GaplabError("reduce target must be 1f or ne");
      }
      emit(outPath, csp);
      if (sidecar.empty() && !outPath.empty()) sidecar = outPath + ".provenance.json";
      if (!sidecar.empty()) spill(sidecar, provenance);
      return 0;
    }
    if (*saLift) {
      CspInstance inst = cspFromJson(slurp(cspPath));
      emit(outPath, lpToJson(buildSaLp(inst, rounds)));
      return 0;
    }
    if (*host) {
      if (hQ > 0) {
        emit(outPath, hostHypergraphToJson(buildHostHypergraph(hN, hQ, hK),
                                           std::uint64_t(1) << 22));
      } else {
        emit(outPath, hostGraphToJson(buildHostGraph(hN, hK), std::uint64_t(1) << 22));
      }
      return 0;
    }
    if (*solveCmd) {
      LinearProgram lp = lpFromJson(slurp(lpPath));
      emit(outPath, solutionToJson(lp, solve(lp)));
      return 0;
    }
    if (*gap) {
      ordered_json config;
      config["stages"] = ordered_json::array();
      if (gapKind == "qvc") {
        config["stages"].push_back(
            {{"kind", "hypergraph-json"}, {"json", ordered_json::parse(slurp(graphPath))}});
      } else {
        config["stages"].push_back(
            {{"kind", "graph-json"}, {"json", ordered_json::parse(slurp(graphPath))}});
      }
      if (!costsPath.empty())
        config["stages"].push_back(
            {{"kind", "costs"}, {"values", ordered_json::parse(slurp(costsPath))}});
      ordered_json gapStage{{"kind", "gap"},
                            {"relaxation", gapKind == "is" ? "is-sqrt" : gapKind}};
      if (gapRounds > 0) gapStage["rounds"] = gapRounds;
      config["stages"].push_back(gapStage);
      auto lines = runPipeline(config.dump());
      std::string joined;
      for (const auto& line : lines) joined += line + "\n";
      if (outPath.empty()) {
        std::cout << joined;
      } else {
        std::ofstream outF(outPath, std::ios::app);
        outF << joined;
      }
      return 0;
    }
    if (*verify) {
      int rc = 0;
      auto runOne = [&](const std::string& name) {
        SuiteResult res = verifySuite(name);
        std::cout << (res.pass ? "PASS " : "FAIL ") << name << ": " << res.detail << "\n";
        if (!res.pass) rc = 1;
      };
      if (suiteName == "all") {
        for (const auto& name : suiteNames()) runOne(name);
      } else {
        runOne(suiteName);
      }
      return rc;
    }
    if (*report) {
      std::ifstream in(reportPath);
      if (!in) throw GaplabError("cannot read " + reportPath);
      std::string line;
      int rc = 0, lineNo = 0;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++lineNo;
        ordered_json j = ordered_json::parse(line);
        std::cout << "line " << lineNo << ": " << j.value("type", "?") << " digest "
                  << j.value("digest", "?");
        if (j.contains("ratio")) std::cout << " ratio " << j["ratio"].get<std::string>();
        if (!check) {
          std::cout << "\n";
          continue;
        }
        ordered_json config;
        config["stages"] = ordered_json::array();
        for (const auto& entry : j.at("provenance")) {
          if (entry.contains("meta")) {
            config["meta"] = entry["meta"];
          } else {
            config["stages"].push_back(entry);
          }
        }
        auto lines = runPipeline(config.dump());
        bool found = false;
        for (const auto& candidate : lines) found = found || candidate == line;
        std::cout << (found ? " re-derived" : " MISMATCH") << "\n";
        if (!found) rc = 1;
      }
      return rc;
    }
    std::cerr << app.help() << "\n";
    return 2;
  } catch (const GaplabError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
