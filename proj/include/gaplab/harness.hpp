#pragma once

#include <string>
#include <vector>

#include "gaplab/csp.hpp"
#include "gaplab/relaxations.hpp"
#include "gaplab/unique_games.hpp"

namespace gaplab {

// One line of a gap report stream. Ratios are exact: opt/lpValue for
// minimization, lpValue/opt for maximization.
struct GapReport {
  std::string digest;
  Rational lpValue;
  Rational opt;
  Rational ratio;
  std::size_t size = 0;       // relaxation size: number of constraints
  std::size_t variables = 0;
  std::string provenance;  // JSON chain that re-derives the report
};

std::string gapReportToJson(const GapReport& r);

// Runs a pipeline described by a JSON config (see README for the schema);
// returns one JSON-lines report per reporting stage. Deterministic given the
// seeds recorded in the config.
std::vector<std::string> runPipeline(const std::string& configJson);

struct SuiteResult {
  bool pass = false;
  std::string detail;
};

// Named verification suites over bundled instances: lemma21 lemma22 claim35
// claim610 lemma33 lemma68 appendixA lemma51 lemma52 exactness1f exactnessNe
// rho obs63 folding.
SuiteResult verifySuite(const std::string& name);
std::vector<std::string> suiteNames();

Graph randomGraph(int n, const Rational& p, std::uint64_t seed);
CostVector randomCosts(int n, std::uint64_t seed, int denominatorBound = 10);
UgInstance randomUg(int verticesPerSide, int labelSize, int degree, std::uint64_t seed);
CspInstance random1fCsp(int n, int k, int m, std::uint64_t seed);
CspInstance randomNeCsp(int n, int k, int q, int m, std::uint64_t seed);
CspInstance randomCsp(int n, int domainSize, int arity, int m, std::uint64_t seed);

// Deterministic digest of a canonical string (FNV-1a, hex).
std::string digestOf(const std::string& payload);

}  // namespace gaplab
