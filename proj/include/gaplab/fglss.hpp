#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gaplab/csp.hpp"
#include "gaplab/linprog.hpp"

namespace gaplab {

// A one-free-bit predicate: support of size k with its two accepting partial
// assignments, a1 < a2 lexicographically.
struct OneFreePredicate {
  std::vector<int> support;
  Tuple a1, a2;
};

OneFreePredicate makeOneFreePredicate(std::vector<int> support, Tuple a1, Tuple a2);

// Universal host graph G*(n,k): two vertices per one-free-bit predicate, one
// per satisfying partial assignment; edges join incompatible assignments
// (some shared variable assigned differently), across all vertex pairs.
struct HostGraph {
  int n = 0, k = 0;
  std::vector<OneFreePredicate> preds;  // the full predicate universe
  struct Vertex {
    int pred = 0;
    int side = 0;  // 0 -> a1, 1 -> a2
  };
  std::vector<Vertex> vertices;

  const Tuple& assignmentOf(int vid) const;
  const std::vector<int>& supportOf(int vid) const;
  bool conflict(int v1, int v2) const;
  int predicateIndex(const OneFreePredicate& p) const;  // -1 when absent
};

HostGraph buildHostGraph(int n, int k, std::uint64_t vertexBudget = 1u << 20);
std::vector<std::pair<int, int>> hostGraphEdges(const HostGraph& g, std::uint64_t budget);

// Universal host hypergraph H*(n,q,k): one vertex per Not-Equal predicate
// (S, A); q vertices sharing a variable with pairwise distinct forbidden
// values there form a hyperedge.
struct HostHypergraph {
  int n = 0, q = 2, k = 0;
  struct Vertex {
    std::vector<int> support;
    Tuple forbidden;
  };
  std::vector<Vertex> vertices;

  int vertexIndex(const std::vector<int>& support, const Tuple& forbidden) const;
};

HostHypergraph buildHostHypergraph(int n, int q, int k, std::uint64_t vertexBudget = 1u << 20);
std::vector<std::vector<int>> hostHypergraphEdges(const HostHypergraph& h, std::uint64_t budget);
// Hyperedges lying inside a vertex subset; cheap for small subsets.
std::vector<std::vector<int>> inducedHyperedges(const HostHypergraph& h,
                                                const std::vector<int>& vids);

// ---- instance and solution maps of the main reductions ----

// Induced instance on the host graph: the predicate list P, its 2m host
// vertices (locally numbered 2*j+side) and the conflict edges among them.
struct Induced1f {
  int n = 0, k = 0;
  std::vector<OneFreePredicate> preds;
  std::vector<std::pair<int, int>> edges;  // local vertex ids
};

Induced1f mapInstance1f(int n, int k, const std::vector<OneFreePredicate>& preds);
CspInstance cspOf1f(const Induced1f& inst);

// U(x): local vertices whose partial assignment is not extended by x.
std::vector<int> mapSolution1f(const Induced1f& inst, const Assignment& x);
// I(x): the complement, vertices extended by x.
std::vector<int> independentOf1f(const Induced1f& inst, const Assignment& x);

struct InducedNe {
  int n = 0, q = 2, k = 0;
  std::vector<NotEqualTemplate> preds;
  std::vector<std::vector<int>> hyperedges;  // local vertex ids, one per predicate
};

InducedNe mapInstanceNe(int n, int q, int k, const std::vector<NotEqualTemplate>& preds);
CspInstance cspOfNe(const InducedNe& inst);
std::vector<int> mapSolutionNe(const InducedNe& inst, const Assignment& x);

struct ExactnessReport {
  Rational mu;
  Rational zeta;
  bool valIdentity = false;    // Val(x) = mu - zeta Cost(U(x)) for every x
  bool optIdentity = false;    // OPT identity
  bool coverOfFormUx = false;  // some optimal cover equals U(x*)
  bool extraction = false;     // every cover contains some U(x)
  Rational opt1, opt2;
  std::string detail;
};

ExactnessReport verifyExactness1f(const Induced1f& inst,
                                  std::uint64_t budget = kDefaultBruteForceBudget);
ExactnessReport verifyExactnessNe(const InducedNe& inst,
                                  std::uint64_t budget = kDefaultBruteForceBudget);
// Independent-set form: Val(x) = 0 + (1/m) Val_IS(I(x)).
ExactnessReport verifyExactnessIs(const Induced1f& inst,
                                  std::uint64_t budget = kDefaultBruteForceBudget);

// ---- the generic LP-relaxation transfer ----

struct AffineFunction {
  std::vector<std::pair<int, Rational>> coeffs;  // over system variables
  Rational constant;
};

// An LP relaxation in the realization sense: a feasible region, one point per
// feasible solution, one affine objective per instance. Solutions and
// instances are referred to by integer-vector ids.
struct LpRelaxationBundle {
  LinearProgram system;
  Sense sense = Sense::Minimize;
  std::function<std::vector<Rational>(const std::vector<int>&)> realize;
  std::function<AffineFunction(const std::vector<int>&)> objectivize;
};

struct ReductionSpec {
  std::function<std::vector<int>(const std::vector<int>&)> instanceMap;
  std::function<std::vector<int>(const std::vector<int>&)> solutionMap;
  Rational mu;
  std::function<Rational(const std::vector<int>&)> zeta;
  bool exact = true;
};

Rational bundleLpValue(const LpRelaxationBundle& b, const std::vector<int>& instanceId);

// Hardness factors of the transfer theorem.
Rational rhoMaxToMin(const Rational& mu, const Rational& c, const Rational& s);
Rational rhoMaxToMax(const Rational& mu, const Rational& c, const Rational& s);

// Same inequality system, composed realizations, affine objective
// mu - zeta_I * f_{I2}; the relaxation size is preserved exactly.
LpRelaxationBundle transferLpRelaxation(const LpRelaxationBundle& b2, const ReductionSpec& red);

struct GuaranteeItem {
  std::vector<int> instanceId;
  Rational opt;
  Rational lpValue;
};

struct GuaranteeReport {
  Rational rho;
  std::size_t lpSize = 0;
  std::vector<GuaranteeItem> items;
  bool holds = false;  // OPT <= s implies LP <= c on the whole family
};

// Checks OPT(I1) <= s1 => LP(I1) <= c1 over a finite instance family; the
// universal statement is untestable, so the report names the family size.
GuaranteeReport checkTransferGuarantee(
    const LpRelaxationBundle& b1, const std::vector<std::vector<int>>& family,
    const std::function<Rational(const std::vector<int>&)>& optOracle, const Rational& c1,
    const Rational& s1);

std::string hostGraphToJson(const HostGraph& g, std::uint64_t edgeBudget);
std::string hostHypergraphToJson(const HostHypergraph& h, std::uint64_t edgeBudget);

}  // namespace gaplab
