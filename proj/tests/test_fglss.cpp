#include <random>
#include <set>

#include "doctest.h"
#include "gaplab/fglss.hpp"
#include "gaplab/relaxations.hpp"

using namespace gaplab;

TEST_CASE("host graph vertex counts match the closed form") {
  CHECK(buildHostGraph(2, 2).vertices.size() == 12);  // 2 C(4,2) C(2,2)
  CHECK(buildHostGraph(2, 1).vertices.size() == 4);   // 2 C(2,2) C(2,1)
  CHECK(buildHostGraph(3, 2).vertices.size() == 36);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= std::min(n, 3); ++k) {
      std::uint64_t tuples = std::uint64_t(1) << k;
      std::uint64_t want = 2 * (tuples * (tuples - 1) / 2) * binomial(n, k);
      CHECK(buildHostGraph(n, k).vertices.size() == want);
    }
  }
  CHECK_THROWS_AS(buildHostGraph(3, 0), GaplabError);
  CHECK_THROWS_AS(buildHostGraph(2, 3), GaplabError);
}

TEST_CASE("the two vertices of one predicate are always adjacent") {
  HostGraph g = buildHostGraph(3, 2);
  for (std::size_t pi = 0; pi < g.preds.size(); ++pi) {
    int v1 = static_cast<int>(2 * pi), v2 = v1 + 1;
    CHECK(g.conflict(v1, v2));
  }
  // disjoint supports are never adjacent
  HostGraph g31 = buildHostGraph(3, 1);
  for (std::size_t a = 0; a < g31.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < g31.vertices.size(); ++b) {
      if (g31.supportOf(a) != g31.supportOf(b) &&
          g31.supportOf(static_cast<int>(a))[0] != g31.supportOf(static_cast<int>(b))[0])
        CHECK_FALSE(g31.conflict(static_cast<int>(a), static_cast<int>(b)));
    }
  }
}

TEST_CASE("host hypergraph shapes") {
  HostHypergraph h1 = buildHostHypergraph(1, 2, 1);
  CHECK(h1.vertices.size() == 2);
  CHECK(hostHypergraphEdges(h1, 1 << 20).size() == 1);

  HostHypergraph h2 = buildHostHypergraph(2, 2, 1);
  CHECK(h2.vertices.size() == 4);
  CHECK(hostHypergraphEdges(h2, 1 << 20).size() == 2);

  HostHypergraph h3 = buildHostHypergraph(1, 3, 1);
  CHECK(h3.vertices.size() == 3);
  auto edges3 = hostHypergraphEdges(h3, 1 << 20);
  REQUIRE(edges3.size() == 1);
  CHECK(edges3[0].size() == 3);

  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= std::min(n, 3); ++k) {
      for (int q = 2; q <= 3; ++q) {
        std::uint64_t want = powWithin(q, k, 1 << 30) * binomial(n, k);
        CHECK(buildHostHypergraph(n, q, k).vertices.size() == want);
      }
    }
  }
}

TEST_CASE("solution map identities for the one-free-bit reduction") {
  HostGraph host = buildHostGraph(3, 2);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    int m = 1 + static_cast<int>(rng() % 4);
    std::set<int> picked;
    while (static_cast<int>(picked.size()) < m)
      picked.insert(static_cast<int>(rng() % host.preds.size()));
    std::vector<OneFreePredicate> preds;
    for (int id : picked) preds.push_back(host.preds[id]);
    Induced1f inst = mapInstance1f(3, 2, preds);
    CspInstance csp = cspOf1f(inst);

    for (int idx = 0; idx < 8; ++idx) {
      Assignment x{tupleFromIndex(idx, 3, 2)};
      auto cover = mapSolution1f(inst, x);
      auto indep = independentOf1f(inst, x);
      CHECK(cover.size() + indep.size() == 2 * preds.size());
      // satisfied predicates contribute one vertex, violated ones two
      Rational val = evaluate(csp, x);
      CHECK(Rational(static_cast<long>(cover.size())) ==
            Rational(2 * m) - Rational(m) * val);
      // the complement is an independent set
      for (std::size_t a = 0; a < indep.size(); ++a)
        for (std::size_t b = a + 1; b < indep.size(); ++b)
          for (auto [e1, e2] : inst.edges)
            CHECK_FALSE((e1 == indep[a] && e2 == indep[b]));
    }

    ExactnessReport rep = verifyExactness1f(inst);
    CHECK(rep.mu == 2);
    CHECK(rep.zeta == ratio(1, m));
    CHECK(rep.valIdentity);
    CHECK(rep.optIdentity);
    CHECK(rep.coverOfFormUx);
    CHECK(rep.extraction);

    ExactnessReport is = verifyExactnessIs(inst);
    CHECK(is.mu == 0);
    CHECK(is.valIdentity);
    CHECK(is.optIdentity);
  }
}

TEST_CASE("fully satisfied and fully violated assignments") {
  // single predicate: satisfying x covers exactly one of its two vertices
  OneFreePredicate p = makeOneFreePredicate({0, 1}, {0, 0}, {1, 1});
  Induced1f inst = mapInstance1f(2, 2, {p});
  CHECK(mapSolution1f(inst, Assignment{{0, 0}}).size() == 1);
  CHECK(mapSolution1f(inst, Assignment{{0, 1}}).size() == 2);  // violated: both
}

TEST_CASE("solution map identities for the not-equal reduction") {
  for (int q : {2, 3}) {
    HostHypergraph host = buildHostHypergraph(2, q, 1);
    std::mt19937_64 rng(52 + q);
    for (int trial = 0; trial < 20; ++trial) {
      int m = 1 + static_cast<int>(rng() % host.vertices.size());
      std::set<int> picked;
      while (static_cast<int>(picked.size()) < m)
        picked.insert(static_cast<int>(rng() % host.vertices.size()));
      std::vector<NotEqualTemplate> preds;
      for (int id : picked)
        preds.push_back(NotEqualTemplate{host.vertices[id].support,
                                         host.vertices[id].forbidden});
      InducedNe inst = mapInstanceNe(2, q, 1, preds);
      CspInstance csp = cspOfNe(inst);
      std::uint64_t space = powWithin(q, 2, 1 << 20);
      for (std::uint64_t idx = 0; idx < space; ++idx) {
        Assignment x{tupleFromIndex(idx, 2, q)};
        auto cover = mapSolutionNe(inst, x);
        Rational val = evaluate(csp, x);
        CHECK(val == 1 - ratio(1, m) * Rational(static_cast<long>(cover.size())));
      }
      ExactnessReport rep = verifyExactnessNe(inst);
      CHECK(rep.mu == 1);
      CHECK(rep.valIdentity);
      CHECK(rep.optIdentity);
      CHECK(rep.coverOfFormUx);
      CHECK(rep.extraction);
    }
  }
}

TEST_CASE("transfer factors") {
  CHECK(rhoMaxToMin(2, 1 - ratio(1, 10), ratio(1, 10)) == ratio(19, 11));
  CHECK(rhoMaxToMin(1, 1 - ratio(1, 2) - ratio(1, 20), ratio(1, 20)) == ratio(19, 11));
  CHECK(rhoMaxToMax(0, 1 - ratio(1, 10), ratio(1, 10)) == 9);
  CHECK_THROWS_AS(rhoMaxToMin(1, 2, ratio(1, 2)), GaplabError);  // mu <= c
  CHECK_THROWS_AS(rhoMaxToMin(2, ratio(1, 4), ratio(1, 2)), GaplabError);  // c < s
}

namespace {

// Vertex-cover relaxation bundle over the host graph: Eq-(1)-style system on
// all host vertices, cover indicators as realizations, induced-subgraph
// objectives.
LpRelaxationBundle hostVcBundle(const HostGraph& host) {
  Graph g = makeGraph(static_cast<int>(host.vertices.size()),
                      hostGraphEdges(host, std::uint64_t(1) << 22));
  LpRelaxationBundle b;
  b.system = basicVcLp(g, unitCosts(g.n()));
  b.sense = Sense::Minimize;
  int n = g.n();
  b.realize = [n](const std::vector<int>& cover) {
    std::vector<Rational> x(n, Rational(0));
    for (int v : cover) x[v] = 1;
    return x;
  };
  b.objectivize = [](const std::vector<int>& vertexSet) {
    AffineFunction f;
    f.constant = 0;
    for (int v : vertexSet) f.coeffs.emplace_back(v, Rational(1));
    return f;
  };
  return b;
}

}  // namespace

TEST_CASE("LP relaxation transfer keeps the system and satisfies the guarantee") {
  HostGraph host = buildHostGraph(3, 2);
  LpRelaxationBundle vc = hostVcBundle(host);

  // reduction spec: instances are predicate index lists, solutions are
  // assignments; U(x) is taken over the whole universe
  ReductionSpec red;
  red.mu = 2;
  red.zeta = [](const std::vector<int>& preds) {
    return ratio(1, static_cast<long>(preds.size()));
  };
  red.instanceMap = [&host](const std::vector<int>& preds) {
    std::vector<int> verts;
    for (int p : preds) {
      verts.push_back(2 * p);
      verts.push_back(2 * p + 1);
    }
    return verts;
  };
  red.solutionMap = [&host](const std::vector<int>& xdigits) {
    Assignment x{xdigits};
    std::vector<int> cover;
    for (std::size_t vid = 0; vid < host.vertices.size(); ++vid) {
      const auto& support = host.supportOf(static_cast<int>(vid));
      const auto& alpha = host.assignmentOf(static_cast<int>(vid));
      bool extends = true;
      for (std::size_t i = 0; i < support.size(); ++i)
        extends = extends && x.values[support[i]] == alpha[i];
      if (!extends) cover.push_back(static_cast<int>(vid));
    }
    return cover;
  };

  LpRelaxationBundle b1 = transferLpRelaxation(vc, red);
  CHECK(b1.system.size() == vc.system.size());

  std::mt19937_64 rng(61);
  std::vector<std::vector<int>> family;
  for (int trial = 0; trial < 6; ++trial) {
    std::set<int> picked;
    int m = 2 + static_cast<int>(rng() % 3);
    while (static_cast<int>(picked.size()) < m)
      picked.insert(static_cast<int>(rng() % host.preds.size()));
    family.emplace_back(picked.begin(), picked.end());
  }
  // a known conflicting pair: same support, disjoint accepting pairs
  {
    OneFreePredicate a = makeOneFreePredicate({0, 1}, {0, 0}, {0, 1});
    OneFreePredicate b = makeOneFreePredicate({0, 1}, {1, 0}, {1, 1});
    family.push_back({host.predicateIndex(a), host.predicateIndex(b)});
  }

  auto optOracle = [&](const std::vector<int>& predIds) {
    std::vector<OneFreePredicate> preds;
    for (int p : predIds) preds.push_back(host.preds[p]);
    CspInstance csp = cspOf1f(mapInstance1f(3, 2, preds));
    return bruteForceOpt(csp).first;
  };

  // realization identity: f_I1(x^S1) = Val(x) for every assignment
  for (const auto& inst : family) {
    AffineFunction f = b1.objectivize(inst);
    for (int idx = 0; idx < 8; ++idx) {
      std::vector<int> digits = tupleFromIndex(idx, 3, 2);
      std::vector<Rational> point = b1.realize(digits);
      Rational val = f.constant;
      for (const auto& [v, coef] : f.coeffs) val += coef * point[v];
      std::vector<OneFreePredicate> preds;
      for (int p : inst) preds.push_back(host.preds[p]);
      CHECK(val == evaluate(cspOf1f(mapInstance1f(3, 2, preds)), Assignment{digits}));
    }
  }

  // with rho = (mu - s)/(mu - c) = 2, the factor-2 relaxation satisfies the
  // implication on the family
  Rational c1 = ratio(5, 4), s1 = ratio(1, 2);
  CHECK(rhoMaxToMin(2, c1, s1) == 2);
  GuaranteeReport rep = checkTransferGuarantee(b1, family, optOracle, c1, s1);
  CHECK(rep.lpSize == vc.system.size());
  CHECK(rep.holds);
  // the conflicting pair makes the check non-vacuous
  bool sawLowOpt = false;
  for (const auto& item : rep.items) sawLowOpt = sawLowOpt || item.opt <= s1;
  CHECK(sawLowOpt);
  // transferred LP upper-bounds the true optimum on every family member
  for (const auto& item : rep.items) CHECK(item.lpValue >= item.opt);
}
