#pragma once

#include <string>
#include <vector>

#include "gaplab/fglss.hpp"
#include "gaplab/linprog.hpp"

namespace gaplab {

struct Graph {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;

  int n() const { return static_cast<int>(names.size()); }
};

Graph makeGraph(int n, std::vector<std::pair<int, int>> edges);
Graph completeGraph(int n);
Graph cycleGraph(int n);

struct Hypergraph {
  std::vector<std::string> names;
  std::vector<std::vector<int>> edges;

  int n() const { return static_cast<int>(names.size()); }
};

Hypergraph makeHypergraph(int n, std::vector<std::vector<int>> edges, int uniform = 0);

using CostVector = std::vector<Rational>;
CostVector unitCosts(int n);

// min c.x  s.t.  x_u + x_v >= 1 per edge, 0 <= x <= 1.
LinearProgram basicVcLp(const Graph& g, const CostVector& costs);

// sum_{v in C} x_v >= (|C|+1)/2; C must induce an odd cycle. The row indexes
// variables by vertex id, matching basicVcLp's variable order.
LpConstraint oddCycleCut(const Graph& g, const std::vector<int>& cycleVertices);

LinearProgram hypergraphVcLp(const Hypergraph& h, const CostVector& costs);

// Exact min-cost cover by subset enumeration (works for graphs via 2-element
// edges). Ties break toward the smallest bitmask.
std::pair<Rational, std::vector<int>> bruteForceVc(int n,
                                                   const std::vector<std::vector<int>>& edges,
                                                   const CostVector& costs,
                                                   std::uint64_t budget = kDefaultBruteForceBudget);
std::pair<Rational, std::vector<int>> bruteForceVc(const Graph& g, const CostVector& costs,
                                                   std::uint64_t budget = kDefaultBruteForceBudget);
std::pair<Rational, std::vector<int>> bruteForceVc(const Hypergraph& h, const CostVector& costs,
                                                   std::uint64_t budget = kDefaultBruteForceBudget);

// Largest independent set; among maximum ones the lexicographically smallest
// vertex list. Deterministic.
std::vector<int> maxIndependentSet(const Graph& g, const std::vector<char>& alive);
std::vector<int> maxIndependentSet(const Graph& g);

struct GreedyColoring {
  std::vector<std::vector<int>> classes;  // I_1, I_2, ... disjoint, covering V
};

// Peel off maximum independent sets until the graph is exhausted.
GreedyColoring greedyColoring(const Graph& g);

// floor(2 sqrt(n)) by integer arithmetic.
std::uint64_t twoSqrtFloor(std::uint64_t n);

struct SqrtLp {
  LinearProgram system;  // constraints only: 0 <= x_v <= y_j <= 1, sum y <= floor(2 sqrt n)
  int n = 0;
  int k = 0;  // color classes
  std::vector<int> classOf;
};

SqrtLp buildSqrtLp(const Graph& g, const GreedyColoring& coloring);

// LP objective for the induced subgraph on `subset`: sum_{v in subset} x_v.
AffineFunction sqrtLpObjective(const SqrtLp& lp, const std::vector<int>& subset);

// Bundle view so the transfer machinery treats this relaxation uniformly.
LpRelaxationBundle sqrtBundle(const Graph& g, const GreedyColoring& coloring);

struct Lemma51Report {
  bool holds = false;
  int worstClassesMet = 0;
  std::uint64_t bound = 0;
  std::vector<int> counterexample;
};

// Every independent set meets at most floor(2 sqrt n) color classes.
Lemma51Report verifyLemma51(const Graph& g, const GreedyColoring& coloring);

struct Lemma52Report {
  bool holds = false;          // LP(I(H)) <= floor(2 sqrt n) * OPT(I(H)) for all H
  bool zeroOneYOptimal = true; // exact LP solves matched the 0/1-y closed form
  std::uint64_t bound = 0;
  std::size_t subgraphsChecked = 0;
  std::size_t lpSolvesChecked = 0;
  std::string detail;
};

// Checks every induced subgraph via the 0/1-y closed form and cross-checks
// that form against exact LP solves on `lpSolveSample` of the subgraphs
// (0 = all).
Lemma52Report verifyLemma52(const Graph& g, const GreedyColoring& coloring,
                            std::size_t lpSolveSample = 16);

std::string graphToJson(const Graph& g);
Graph graphFromJson(const std::string& text);
std::string hypergraphToJson(const Hypergraph& h);
Hypergraph hypergraphFromJson(const std::string& text);
std::string costsToJson(const CostVector& c);
CostVector costsFromJson(const std::string& text, int n);

}  // namespace gaplab
