#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaplab/csp.hpp"
#include "gaplab/linprog.hpp"

namespace gaplab {

// Key of an SA variable: a set of CSP variables (strictly ascending) together
// with an assignment to them, aligned positionally.
struct SetAssignment {
  std::vector<int> vars;
  Tuple vals;
  auto operator<=>(const SetAssignment&) const = default;
};

std::string saKey(const SetAssignment& sa);           // "1,3|0,2"; "|" when empty
SetAssignment saKeyParse(const std::string& key);

// A point of the r-round SA relaxation: one entry per (S, alpha) with
// |S| <= r. Feasibility (marginalization, nonnegativity, X_(0,0) = 1) is
// checked by saFeasibilityViolation.
struct SaSolution {
  int rounds = 0;
  int domainSize = 2;
  int numVars = 0;
  std::map<SetAssignment, Rational> entries;
};

// The equivalent view: one local distribution D(S) over [R]^S per set S with
// |S| <= r. Zero masses may be omitted.
struct LocalDistributionFamily {
  int rounds = 0;
  int domainSize = 2;
  int numVars = 0;
  std::map<std::vector<int>, std::map<Tuple, Rational>> dists;

  Rational mass(const std::vector<int>& vars, const Tuple& vals) const;
};

// Empty result means consistent: every D(S) is a distribution and marginals
// of immediate supersets agree. Otherwise describes the first violated pair
// (S', S).
std::optional<std::string> familyViolation(const LocalDistributionFamily& fam);

// Same for SA feasibility of the canonical relaxation.
std::optional<std::string> saFeasibilityViolation(const SaSolution& x);

// The canonical r-round SA relaxation of a CSP: variables X_(S,alpha) for all
// |S| <= r, junction equalities, nonnegativity, X_(0,0) = 1, objective
// sum_i w_i sum_alpha C_i(alpha) X_(S_i,alpha). Requires r >= max arity.
LinearProgram buildSaLp(const CspInstance& inst, int rounds);

SaSolution localToSa(const LocalDistributionFamily& fam);
LocalDistributionFamily saToLocal(const SaSolution& x);

// Value of an SA solution given as a family: E_C Pr_{D(S_C)}[alpha sat C].
// The family must carry a distribution for every constraint support.
Rational saValue(const CspInstance& inst, const LocalDistributionFamily& fam);

struct SaOptimum {
  Rational value;       // 1 by convention for a constraint-free instance
  SaSolution point;
  std::size_t lpSize = 0;
  std::size_t lpVariables = 0;
};
SaOptimum saOptimum(const CspInstance& inst, int rounds);

// Reads a solved LP point back into an SaSolution (variables named by saKey).
SaSolution saFromLpPoint(const CspInstance& inst, int rounds, const LinearProgram& lp,
                         const std::vector<Rational>& point);

// Point-mass family of a single assignment, and the uniform family.
LocalDistributionFamily pointFamily(const CspInstance& inst, const Assignment& x, int rounds);
LocalDistributionFamily uniformFamily(int numVars, int domainSize, int rounds);

// ---- Generic Sherali-Adams lift of a binary linear program ----
//
// The input program is read as: linear objective, rows over 0/1-intended
// variables. Ge rows are normalized to Le; Eq rows stay equalities. The lift
// multiplies every row by prod_{s in S} x_s prod_{t in T} (1-x_t) over all
// disjoint S, T with |S u T| < r, linearizes monomials into y_H variables
// (|H| <= r), adds 0 <= lift(x_j, S, T) <= 1 and y_() = 1. Duplicate rows are
// emitted once.
LinearProgram genericSaLift(const LinearProgram& blp, int rounds);

// The 0/1 indicator encoding x(j,u) of a CSP: partition rows sum_u x(j,u) = 1.
LinearProgram cspBinaryEncoding(const CspInstance& inst);

// Generic lift of the binary encoding with the degree-k objective
// sum_i w_i sum_{alpha in A_i} y_{(j,alpha_j): j in S_i}. When tEmptyOnly is
// set, only the T = {} rows are emitted.
LinearProgram cspGenericSaLift(const CspInstance& inst, int rounds, bool tEmptyOnly = false);

struct AppendixAReport {
  Rational genericOpt;
  Rational canonicalOpt;
  Rational tEmptyOpt;
  bool optimaEqual = false;
  bool contradictoryForcedZero = false;  // every y_{(j,u'),(j,u'')} maximizes to 0
  std::string detail;
};

// Solves the generic lift of the binary encoding, its T = {} restriction and
// the canonical relaxation, checks all three optima coincide and that
// contradictory pair variables are forced to zero by the lifted system.
AppendixAReport verifyAppendixAEquivalence(const CspInstance& inst, int rounds);

std::string saSolutionToJson(const SaSolution& x);
SaSolution saSolutionFromJson(const std::string& text);
std::string familyToJson(const LocalDistributionFamily& fam);
LocalDistributionFamily familyFromJson(const std::string& text);

}  // namespace gaplab
