#pragma once

#include <vector>

#include "gaplab/csp.hpp"
#include "gaplab/rational.hpp"

namespace gaplab {

// 0/1-valued function on Z_q^R, dense table indexed lexicographically
// (first coordinate most significant).
struct ZqFunction {
  int q = 2;
  int R = 1;
  std::vector<int> table;  // size q^R, entries in {0,1}

  int at(std::uint64_t idx) const { return table[idx]; }
  int at(const Tuple& x) const { return table[indexFromTuple(x, q)]; }
};

ZqFunction makeZqFunction(int q, int R, std::vector<int> table);

// Orthonormal basis phi_0 == 1, phi_1..phi_{q-1} on Z_q under the uniform
// measure. For q = 2 this is the +-1 character; for q >= 3 a deterministic
// Gram-Schmidt of the indicator basis (floating point, tolerance 1e-9).
std::vector<std::vector<double>> fourierBasis(int q);

struct FourierExpansion {
  int q = 2;
  int R = 1;
  std::vector<double> coeffs;  // indexed like the function table, by alpha
};

FourierExpansion fourierExpand(const ZqFunction& f);

// Variance route, exact: E_{x_-i}[ Var_{x_i} f ].
Rational influenceExact(const ZqFunction& f, int i);
// Fourier route: sum over alpha with alpha_i != 0 of fhat^2.
double influenceFourier(const FourierExpansion& e, int i);
// Degree-d influence: additionally |supp(alpha)| <= d.
double degreeDInfluence(const FourierExpansion& e, int i, int d);

Rational expectationExact(const ZqFunction& f);

// Folded: every line {a + lambda*1} carries exactly one zero of f.
bool isFolded(const ZqFunction& f);

// Truth table of a folded function: q^{R-1} entries, one per x with x_1 = 0,
// holding the unique lambda with f(x + lambda*1) = 0.
struct FoldedTruthTable {
  int q = 2;
  int R = 1;
  std::vector<int> entries;  // size q^{R-1}, indexed by (x_2..x_R) lex

  // Query rule: f(x) = 0 iff entries[x - x_1*1] == x_1.
  int eval(const Tuple& x) const;
};

FoldedTruthTable encodeTable(const ZqFunction& f);  // requires isFolded
ZqFunction decodeTable(const FoldedTruthTable& t);

// The folded dictator of coordinate ell: f(x) = 0 iff x_ell = 0.
ZqFunction foldedDictator(int ell, int q, int R);

struct SubcubeRestriction {
  std::vector<int> values;  // f over C_{x,S}, S-assignments in lex order
  bool allZero = false;
  bool allOne = false;
};

SubcubeRestriction subcubeRestriction(const ZqFunction& f, const Tuple& x,
                                      const std::vector<int>& S);

std::string truthTableToJson(const FoldedTruthTable& t);
FoldedTruthTable truthTableFromJson(const std::string& text);

}  // namespace gaplab
