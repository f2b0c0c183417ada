#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaplab/csp.hpp"
#include "gaplab/fourier.hpp"
#include "gaplab/sherali_adams.hpp"
#include "gaplab/unique_games.hpp"

namespace gaplab {

enum class ReductionMode { Enumerate, Sample };

struct ReductionParams {
  int labelSize = 2;   // R; must match the Unique Games instance
  Rational eps = 0;    // eps * R must be an integer, eps * R < R
  int t = 1;           // repetitions
  int q = 2;           // CSP domain (2 for the one-free-bit reduction)
  ReductionMode mode = ReductionMode::Enumerate;
  std::uint64_t seed = 0;
  std::uint64_t sampleCount = 0;
  std::uint64_t budget = std::uint64_t(1) << 24;
};

// Number of index draws per constraint, eps * R; throws unless integral and
// strictly below R (at eps*R = R the two sub-cubes would coincide).
int freeIndexCount(const ReductionParams& p);

struct SubCube {
  Tuple base;                // point in Z_q^R
  std::vector<int> freeSet;  // sorted free coordinates

  bool contains(const Tuple& z) const;
};

// Variables of the one-free-bit instance: <w, x> for w on the W side and
// x in {0,1}^R. Index = wPos * 2^R + lex(x).
struct Var1f {
  int w = 0;  // vertex id in the source instance
  Tuple x;
};

struct Reduction1f {
  CspInstance inst;
  UgInstance source;
  std::vector<int> sideV, sideW;  // vertex ids per side (ascending)
  std::vector<Var1f> varMeta;
  ReductionParams params;
  std::uint64_t rawOutcomes = 0;  // outcome-space size (enumerate mode)

  int varIndex(int w, const Tuple& x) const;
};

// Long-code test reduction from a regular bipartite Unique Games instance to
// a one-free-bit CSP. Enumerate mode produces the exact outcome distribution
// (ordered neighbor tuples, ordered index tuples); coinciding constraints are
// merged by adding weights.
Reduction1f ugTo1fCsp(const UgInstance& u, const ReductionParams& p);

// Variables of the Not-Equal instance: <w, z> in Z_q for z with z_1 = 0.
// Index = wPos * q^{R-1} + lex(z_2..z_R).
struct VarNe {
  int w = 0;
  Tuple zRep;  // full length R, first coordinate 0
};

struct ReductionNe {
  CspInstance inst;
  UgInstance source;
  std::vector<int> sideV, sideW;
  std::vector<VarNe> varMeta;
  ReductionParams params;
  std::uint64_t rawOutcomes = 0;

  int varIndex(int w, const Tuple& zRep) const;
};

ReductionNe ugToNeCsp(const UgInstance& u, const ReductionParams& p);

// Long code of a label: the dictator x -> x_ell over {0,1}^R in lex order.
std::vector<int> encodeLongCode1f(int ell, int R);

// Truth table of the folded dictator of ell over Z_q^R.
FoldedTruthTable encodeFoldedDictator(int ell, int q, int R);

// Assemble the full CSP assignment encoding a labeling of the W side.
Assignment assignment1fFromLabeling(const Reduction1f& red, const Labeling& lab);
Assignment assignmentNeFromLabeling(const ReductionNe& red, const Labeling& lab);

struct CompletenessReport {
  Rational probability;          // over (x, index tuple), exact
  Rational subEventProbability;  // Pr of the distinguished sub-event
  Rational conditional;          // Pr[satisfied | sub-event]
  Rational bound;                // 1-eps resp. (1-eps)(1-1/q)
  bool conditionalIsOne = false;
  bool overallBoundHolds = false;
};

// Exhaustive check of the completeness claims for a fixed (v, w_1..w_t) and a
// labeling satisfying all t edges; throws when the labeling violates one.
CompletenessReport verifyCompleteness1f(const UgInstance& u, int v, const std::vector<int>& ws,
                                        const Labeling& lab, const ReductionParams& p);
CompletenessReport verifyCompletenessNe(const UgInstance& u, int v, const std::vector<int>& ws,
                                        const Labeling& lab, const ReductionParams& p);

struct TransferReport {
  LocalDistributionFamily family;
  Rational value;          // SA value of the transferred family
  Rational edgeViolation;  // E_{vw in E} Pr_{mu({v,w})}[edge violated]
  Rational bound;
  bool holds = false;       // value >= bound
  bool consistent = false;  // family passes full validation
};

// Lemma-style SA transfer: push the Unique Games family through the long-code
// (resp. folded dictator) map. Requires rounds >= the largest constraint
// support of the reduced instance.
TransferReport transferSa1f(const LocalDistributionFamily& mu, const Reduction1f& red,
                            int rounds);
TransferReport transferSaNe(const LocalDistributionFamily& mu, const ReductionNe& red,
                            int rounds);

struct DecodeResult {
  std::vector<std::vector<int>> candidates;  // L[w] per table
  std::vector<int> labels;
  bool candidateBoundHolds = true;  // |L[w]| <= d / theta for every w
};

// Candidate-label sets via degree-d influences >= theta (closed comparison)
// and a seeded uniform pick; the smallest index 0 stands in for an empty set.
DecodeResult decodeLabeling(const std::vector<ZqFunction>& tables, int d, double theta,
                            std::uint64_t seed);
DecodeResult decodeLabelingFolded(const std::vector<FoldedTruthTable>& tables, int d,
                                  double theta, std::uint64_t seed);

// Parameters + outcome counts, for the provenance sidecar.
std::string reductionProvenance(const std::string& kind, const ReductionParams& p,
                                std::uint64_t rawOutcomes, std::size_t mergedConstraints);

}  // namespace gaplab
