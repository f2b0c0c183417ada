#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaplab/rational.hpp"

namespace gaplab {

using Tuple = std::vector<int>;

// Enumerate tuples of a fixed radix in lex order, first coordinate most
// significant (so tupleFromIndex(1, 2, 2) == {0,1}).
Tuple tupleFromIndex(std::uint64_t idx, int len, int radix);
std::uint64_t indexFromTuple(const Tuple& t, int radix);

// A constraint with an explicit accepting set. Supports are canonical
// (strictly ascending), accepting tuples are aligned with the support order,
// lex-sorted and distinct.
struct CspConstraint {
  std::vector<int> support;
  std::vector<Tuple> accepting;
  Rational weight = 1;
};

// Weighted CSP over domain {0,...,R-1}. Weights are normalized to sum to 1 at
// construction; constraints with identical (support, accepting set) are merged
// by adding weights. An instance with no constraints is vacuously satisfied
// (its value is 1 by convention).
struct CspInstance {
  int domainSize = 2;
  int numVars = 0;
  std::vector<CspConstraint> constraints;
};

struct Assignment {
  Tuple values;
};

struct NotEqualTemplate {
  std::vector<int> support;
  Tuple forbidden;
};

// Canonicalizes, validates, merges duplicates, normalizes weights.
// `weights` empty means uniform.
CspInstance makeCsp(int domainSize, int numVars, std::vector<CspConstraint> constraints);

Rational evaluate(const CspInstance& inst, const Assignment& x);

inline constexpr std::uint64_t kDefaultBruteForceBudget = std::uint64_t(1) << 24;

// Exact optimum by enumerating all R^n assignments; refuses (throws) when the
// space exceeds the budget. Ties break toward the lexicographically first
// maximizer.
std::pair<Rational, Assignment> bruteForceOpt(const CspInstance& inst,
                                              std::uint64_t budget = kDefaultBruteForceBudget);

struct OneFreeBitReport {
  bool ok = true;
  int firstOffender = -1;  // constraint index, -1 when the domain is wrong
  std::string reason;
};

// ok iff R == 2, every constraint has arity exactly k and exactly two
// accepting configurations.
OneFreeBitReport validateOneFreeBit(const CspInstance& inst, int arity);

CspConstraint expandNotEqual(const NotEqualTemplate& t, int q, Rational weight = 1);

// Recognizes a constraint as a Not-Equal expansion, returning the forbidden
// vector when it is one.
std::optional<Tuple> asNotEqual(const CspConstraint& c, int q);

std::string cspToJson(const CspInstance& inst);
CspInstance cspFromJson(const std::string& text);

}  // namespace gaplab
