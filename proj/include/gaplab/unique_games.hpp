#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaplab/csp.hpp"
#include "gaplab/sherali_adams.hpp"

namespace gaplab {

// Unique Games instance: a graph whose edges carry label bijections. The
// permutation pi is stored for one orientation only (u -> v); the inverse is
// always computed, never stored. An edge uv is satisfied by a labeling when
// pi_{u,v}(lab(u)) == lab(v).
struct UgEdge {
  int u = 0;
  int v = 0;
  std::vector<int> pi;  // image list of pi_{u,v}
};

struct UgInstance {
  int labelSize = 1;
  std::vector<std::string> vertices;
  std::vector<UgEdge> edges;
};

struct Labeling {
  std::vector<int> labels;
};

// Throws on self-loops, duplicate edges, or maps that are not bijections.
void validateUg(const UgInstance& u);

std::vector<int> inversePermutation(const std::vector<int>& pi);

// 2-coloring sides when bipartite (side of vertex 0 is 0).
std::optional<std::vector<int>> bipartition(const UgInstance& u);
// Common degree when the graph is regular.
std::optional<int> regularDegree(const UgInstance& u);

Rational ugValue(const UgInstance& u, const Labeling& lab);

std::pair<Rational, Labeling> bruteForceUgOpt(const UgInstance& u,
                                              std::uint64_t budget = kDefaultBruteForceBudget);

// Two copies of every vertex; edge uv becomes u1-v2 and u2-v1, both carrying
// pi_{u,v}. The result is bipartite and degree-preserving.
UgInstance bipartiteDoubleCover(const UgInstance& u);

// Unique Games as a CSP (one constraint per edge accepting {(a, pi(a))}),
// which is how SA values of UG solutions are computed.
CspInstance ugAsCsp(const UgInstance& u);

// Extends an r-round family for u to the double cover: both copies of a
// vertex receive perfectly correlated labels. The SA value is unchanged.
LocalDistributionFamily extendSaToCover(const UgInstance& u, const LocalDistributionFamily& fam,
                                        int rounds);

LocalDistributionFamily ugPointFamily(const UgInstance& u, const Labeling& lab, int rounds);
LocalDistributionFamily ugUniformFamily(const UgInstance& u, int rounds);

std::string ugToJson(const UgInstance& u);
UgInstance ugFromJson(const std::string& text);

}  // namespace gaplab
