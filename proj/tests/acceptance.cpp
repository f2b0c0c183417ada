// Acceptance suite: one pass/fail line per criterion, every tolerance pinned
// in code. Exit code is the number of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gaplab/fglss.hpp"
#include "gaplab/fourier.hpp"
#include "gaplab/gadgets.hpp"
#include "gaplab/harness.hpp"
#include "gaplab/relaxations.hpp"
#include "gaplab/sherali_adams.hpp"

using namespace gaplab;

namespace {

int failures = 0;

struct Criterion {
  int id;
  std::string name;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  Criterion(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }

  ~Criterion() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("%s criterion %2d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                static_cast<long long>(ms), ok ? "" : " -- ", ok ? "" : detail.c_str());
    if (!ok) ++failures;
  }
};

CspInstance maxCutTriangle() {
  std::vector<CspConstraint> cs;
  for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
    CspConstraint c;
    c.support = {a, b};
    c.accepting = {{0, 1}, {1, 0}};
    cs.push_back(std::move(c));
  }
  return makeCsp(2, 3, std::move(cs));
}

void criterion1() {
  Criterion c(1, "basic vertex cover LP on complete graphs: LP n/2 vs OPT n-1");
  Rational last = 0;
  for (int n = 4; n <= 8; ++n) {
    Graph kn = completeGraph(n);
    LpSolution sol = solve(basicVcLp(kn, unitCosts(n)));
    c.require(sol.status == LpStatus::Optimal && sol.value == ratio(n, 2),
              "LP value differs from n/2 at n=" + std::to_string(n));
    Rational opt = bruteForceVc(kn, unitCosts(n)).first;
    c.require(opt == n - 1, "OPT differs from n-1 at n=" + std::to_string(n));
    Rational gap = opt / sol.value;
    c.require(gap == 2 - ratio(2, n), "ratio is not 2 - 2/n at n=" + std::to_string(n));
    c.require(gap > last, "ratio fails to increase toward 2");
    last = gap;
  }
}

void criterion2() {
  Criterion c(2, "factor-2 guarantee and half-integral optimum on 50 seeded graphs");
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 6 + static_cast<int>(seed % 7);  // 6..12
    Graph g = randomGraph(n, ratio(1, 2), seed);
    CostVector costs = randomCosts(n, seed * 7919);
    LpSolution sol = solve(basicVcLp(g, costs));
    c.require(sol.status == LpStatus::Optimal, "LP not optimal");
    auto [opt, cover] = bruteForceVc(g, costs);
    c.require(sol.value <= opt && opt <= 2 * sol.value,
              "factor-2 bound fails at seed " + std::to_string(seed));

    // half-integral optimum: exact integer search over {0, 1/2, 1}^n
    long lcm = 1;
    for (const auto& cost : costs)
      lcm = std::lcm(lcm, static_cast<long>(cost.get_den().get_si()));
    std::vector<long> scaled(n);
    for (int v = 0; v < n; ++v) {
      Rational scaledCost = costs[v] * lcm;
      scaled[v] = static_cast<long>(scaledCost.get_num().get_si());
    }
    long best = -1;
    const std::uint64_t space = powWithin(3, n, 1 << 24);
    std::vector<int> halves(n, 0);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
      if (idx > 0) {
        for (int i = n - 1; i >= 0; --i) {
          if (++halves[i] < 3) break;
          halves[i] = 0;
        }
      }
      bool feasible = true;
      for (auto [a, b] : g.edges) {
        if (halves[a] + halves[b] < 2) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      long value = 0;
      for (int v = 0; v < n; ++v) value += scaled[v] * halves[v];
      if (best < 0 || value < best) best = value;
    }
    c.require(best >= 0 && ratio(best, 2 * lcm) == sol.value,
              "no half-integral optimum at seed " + std::to_string(seed));
  }
}

struct SaCase {
  int R, n, k, m;
  std::uint64_t seed;
};

std::vector<SaCase> saCases() {
  return {{2, 2, 2, 2, 1},  {2, 3, 2, 3, 2},  {2, 3, 2, 4, 3},  {2, 4, 2, 4, 4},
          {2, 4, 3, 3, 5},  {2, 4, 2, 5, 6},  {3, 2, 2, 2, 7},  {3, 2, 2, 3, 8},
          {3, 3, 2, 3, 9},  {3, 3, 2, 4, 10}, {3, 3, 3, 2, 11}, {4, 2, 2, 3, 12},
          {4, 2, 2, 2, 13}, {5, 2, 2, 3, 14}, {6, 2, 2, 2, 15}, {2, 4, 2, 3, 16},
          {2, 3, 3, 2, 17}, {3, 2, 1, 3, 18}, {2, 4, 4, 2, 19}, {9, 2, 2, 2, 20}};
}

std::vector<std::pair<CspInstance, SaCase>> saInstances() {
  std::vector<std::pair<CspInstance, SaCase>> out;
  for (const auto& sc : saCases())
    out.emplace_back(randomCsp(sc.n, sc.R, sc.k, sc.m, sc.seed), sc);
  return out;
}

void criterion3(std::vector<std::pair<SaOptimum, CspInstance>>* solved) {
  Criterion c(3, "SA at full rounds matches brute force; rounds are monotone");
  for (const auto& [inst, sc] : saInstances()) {
    c.require(powWithin(sc.R, sc.n, 1 << 12) != 0, "case exceeds the R^n budget");
    auto [opt, witness] = bruteForceOpt(inst);
    Rational last;
    bool haveLast = false;
    SaOptimum atN;
    for (int r = sc.k; r <= sc.n; ++r) {
      SaOptimum sa = saOptimum(inst, r);
      if (haveLast)
        c.require(sa.value <= last, "SA value increased with rounds at seed " +
                                        std::to_string(sc.seed));
      last = sa.value;
      haveLast = true;
      atN = std::move(sa);
    }
    c.require(atN.value == opt,
              "full-round SA differs from OPT at seed " + std::to_string(sc.seed));
    solved->emplace_back(std::move(atN), inst);
  }
}

void criterion4(const std::vector<std::pair<SaOptimum, CspInstance>>& solved) {
  Criterion c(4, "saToLocal / localToSa round trip on solver optima");
  for (const auto& [sa, inst] : solved) {
    LocalDistributionFamily fam = saToLocal(sa.point);
    c.require(!familyViolation(fam).has_value(), "family fails consistency validation");
    SaSolution back = localToSa(fam);
    c.require(back.entries == sa.point.entries, "round trip changed the point");
  }
}

void criterion5() {
  Criterion c(5, "generic SA lift of the binary encoding matches the canonical LP");
  struct Case {
    CspInstance inst;
    int rounds;
  };
  std::vector<Case> cases;
  cases.push_back({makeCsp(2, 1, {}), 1});
  CspInstance single = makeCsp(2, 2, {CspConstraint{{0, 1}, {{0, 1}, {1, 0}}, Rational(1)}});
  cases.push_back({single, 2});
  cases.push_back({single, 3});
  cases.push_back({maxCutTriangle(), 2});
  cases.push_back({maxCutTriangle(), 3});
  cases.push_back({random1fCsp(3, 2, 2, 55), 2});
  for (const auto& [inst, rounds] : cases) {
    AppendixAReport rep = verifyAppendixAEquivalence(inst, rounds);
    c.require(rep.optimaEqual, "optima differ: " + rep.detail);
    c.require(rep.contradictoryForcedZero, "contradictory variable not forced to 0");
  }
}

void criterion6() {
  Criterion c(6, "completeness claims: conditional probability exactly 1");
  // one-free-bit side at R=2, eps=1/2, t in {1,2}
  UgInstance u = randomUg(2, 2, 2, 600);
  int v = 0;
  std::vector<int> nbrs;
  for (const auto& e : u.edges) {
    if (e.u == v) nbrs.push_back(e.v);
    if (e.v == v) nbrs.push_back(e.u);
  }
  auto labelingFor = [&](int lv) {
    Labeling lab{Tuple(u.vertices.size(), 0)};
    lab.labels[v] = lv;
    for (const auto& e : u.edges) {
      if (e.u == v) lab.labels[e.v] = e.pi[lv];
      if (e.v == v)
        lab.labels[e.u] =
            static_cast<int>(std::find(e.pi.begin(), e.pi.end(), lv) - e.pi.begin());
    }
    return lab;
  };
  ReductionParams p1;
  p1.labelSize = 2;
  p1.eps = ratio(1, 2);
  for (int t : {1, 2}) {
    p1.t = t;
    for (int w1 : nbrs) {
      for (int w2 : nbrs) {
        std::vector<int> ws{w1};
        if (t == 2) ws.push_back(w2);
        for (int lv = 0; lv < 2; ++lv) {
          CompletenessReport rep = verifyCompleteness1f(u, v, ws, labelingFor(lv), p1);
          c.require(rep.conditionalIsOne, "1f conditional below 1");
          c.require(rep.probability >= 1 - p1.eps, "1f overall bound fails");
        }
        if (t == 1) break;
      }
      if (t == 1) break;
    }
  }
  // not-equal side at q=3, R=2, eps=1/2, t=1
  ReductionParams p2;
  p2.labelSize = 2;
  p2.eps = ratio(1, 2);
  p2.t = 1;
  p2.q = 3;
  for (int w : nbrs) {
    for (int lv = 0; lv < 2; ++lv) {
      CompletenessReport rep = verifyCompletenessNe(u, v, {w}, labelingFor(lv), p2);
      c.require(rep.conditionalIsOne, "ne conditional below 1");
      c.require(rep.probability >= (1 - p2.eps) * ratio(2, 3), "ne overall bound fails");
    }
  }
}

void criterion7() {
  Criterion c(7, "SA transfer: consistency and the exact value inequality");
  for (std::uint64_t seed : {70u, 71u, 72u}) {
    UgInstance u = randomUg(3, 2, 1, seed);  // 6 vertices, matching
    ReductionParams p;
    p.labelSize = 2;
    p.eps = 0;
    p.t = 1;
    Reduction1f red = ugTo1fCsp(u, p);
    auto [opt, lab] = bruteForceUgOpt(u);
    for (int rounds : {2, 3}) {
      TransferReport det = transferSa1f(ugPointFamily(u, lab, rounds), red, rounds);
      c.require(det.consistent, "deterministic transfer family inconsistent");
      c.require(det.holds, "deterministic transfer bound fails");
      TransferReport uni = transferSa1f(ugUniformFamily(u, rounds), red, rounds);
      c.require(uni.consistent, "uniform transfer family inconsistent");
      c.require(uni.holds, "uniform transfer bound fails");
    }

    ReductionParams pn;
    pn.labelSize = 2;
    pn.eps = ratio(1, 2);
    pn.t = 1;
    pn.q = 3;
    ReductionNe ne = ugToNeCsp(u, pn);
    TransferReport det = transferSaNe(ugPointFamily(u, lab, 3), ne, 3);
    c.require(det.consistent && det.holds, "ne deterministic transfer fails");
    TransferReport uni = transferSaNe(ugUniformFamily(u, 3), ne, 3);
    c.require(uni.consistent && uni.holds, "ne uniform transfer fails");
  }

  // a degree-2 instance that is not fully satisfiable: the deterministic
  // family sees a nonzero edge-violation term
  {
    UgInstance u = randomUg(2, 2, 2, 73);
    auto [opt, lab] = bruteForceUgOpt(u);
    ReductionParams pn;
    pn.labelSize = 2;
    pn.eps = ratio(1, 2);
    pn.t = 1;
    pn.q = 3;
    ReductionNe ne = ugToNeCsp(u, pn);
    TransferReport det = transferSaNe(ugPointFamily(u, lab, 3), ne, 3);
    c.require(det.consistent && det.holds, "degree-2 ne deterministic transfer fails");
    c.require(det.edgeViolation == 1 - opt, "edge violation should match 1 - OPT");
    TransferReport uni = transferSaNe(ugUniformFamily(u, 3), ne, 3);
    c.require(uni.consistent && uni.holds, "degree-2 ne uniform transfer fails");
  }
}

void criterion8() {
  Criterion c(8, "reduction exactness: Val = mu - zeta Cost, optimal cover of form U(x)");
  HostGraph host = buildHostGraph(3, 2);
  std::mt19937_64 rng(800);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 1 + static_cast<int>(rng() % 4);
    std::set<int> picked;
    while (static_cast<int>(picked.size()) < m)
      picked.insert(static_cast<int>(rng() % host.preds.size()));
    std::vector<OneFreePredicate> preds;
    for (int id : picked) preds.push_back(host.preds[id]);
    ExactnessReport rep = verifyExactness1f(mapInstance1f(3, 2, preds));
    c.require(rep.valIdentity && rep.optIdentity && rep.coverOfFormUx && rep.extraction,
              "1f exactness fails on trial " + std::to_string(trial));
  }
  for (int q : {2, 3}) {
    HostHypergraph host2 = buildHostHypergraph(2, q, 1);
    std::mt19937_64 rng2(810 + q);
    for (int trial = 0; trial < 50; ++trial) {
      int m = 1 + static_cast<int>(rng2() % host2.vertices.size());
      std::set<int> picked;
      while (static_cast<int>(picked.size()) < m)
        picked.insert(static_cast<int>(rng2() % host2.vertices.size()));
      std::vector<NotEqualTemplate> preds;
      for (int id : picked)
        preds.push_back(
            NotEqualTemplate{host2.vertices[id].support, host2.vertices[id].forbidden});
      ExactnessReport rep = verifyExactnessNe(mapInstanceNe(2, q, 1, preds));
      c.require(rep.valIdentity && rep.optIdentity && rep.coverOfFormUx && rep.extraction,
                "ne exactness fails at q=" + std::to_string(q));
    }
  }
}

void criterion9() {
  Criterion c(9, "transfer factor formulas reproduce the stated instantiations");
  for (long den : {10l, 100l}) {
    Rational eps = ratio(1, den);
    Rational rho = rhoMaxToMin(2, 1 - eps, eps);
    c.require(rho == (2 - eps) / (1 + eps), "vc formula mismatch");
    c.require(rho >= 2 - 3 * eps, "vc bound 2 - 3 eps fails");
  }
  for (int q : {2, 3}) {
    Rational eps = ratio(1, 20);
    Rational rho = rhoMaxToMin(1, 1 - ratio(1, q) - eps, eps);
    // explicit constant: rho >= q - q(q+1) eps
    c.require(rho >= Rational(q) - Rational(q) * (q + 1) * eps,
              "qvc bound q - q(q+1) eps fails at q=" + std::to_string(q));
  }
  for (long den : {10l, 100l}) {
    Rational eps = ratio(1, den);
    Rational rho = rhoMaxToMax(0, 1 - eps, eps);
    c.require(rho == (1 - eps) / eps, "is formula mismatch");
    c.require(rho >= 1 / (2 * eps), "is bound 1/(2 eps) fails");
  }
}

void criterion10() {
  Criterion c(10, "host sizes match the closed-form counts");
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= std::min(n, 3); ++k) {
      std::uint64_t tuples = std::uint64_t(1) << k;
      std::uint64_t want = 2 * (tuples * (tuples - 1) / 2) * binomial(n, k);
      c.require(buildHostGraph(n, k).vertices.size() == want, "graph count n=" +
                    std::to_string(n) + " k=" + std::to_string(k));
      for (int q = 2; q <= 3; ++q) {
        std::uint64_t wantH = powWithin(q, k, 1 << 30) * binomial(n, k);
        c.require(buildHostHypergraph(n, q, k).vertices.size() == wantH,
                  "hypergraph count n=" + std::to_string(n));
      }
    }
  }
}

void criterion11() {
  Criterion c(11, "size-O(n) independent-set LP: class bound and exact sqrt factor");
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);  // 4..12
    Graph g = randomGraph(n, ratio(1, 2), seed * 31);
    GreedyColoring coloring = greedyColoring(g);
    SqrtLp lp = buildSqrtLp(g, coloring);
    c.require(lp.system.size() <= 3 * static_cast<std::size_t>(n) + 1,
              "LP size above 3n + 1");
    Lemma51Report l51 = verifyLemma51(g, coloring);
    c.require(l51.holds, "class-meeting bound fails at seed " + std::to_string(seed));
    Lemma52Report l52 = verifyLemma52(g, coloring, 8);
    c.require(l52.holds && l52.zeroOneYOptimal,
              "sqrt-factor check fails at seed " + std::to_string(seed) + ": " + l52.detail);
  }
}

void criterion12() {
  Criterion c(12, "Fourier suite: folding, influences, degree-d sums, round trips");
  const double tol = 1e-9;
  std::mt19937_64 rng(1200);
  for (int q : {2, 3}) {
    for (int R = 1; R <= 4; ++R) {
      // random folded functions: exact expectation and exact round trip
      std::uint64_t reps = 1;
      for (int i = 0; i < R - 1; ++i) reps *= static_cast<std::uint64_t>(q);
      for (int trial = 0; trial < 3; ++trial) {
        FoldedTruthTable t;
        t.q = q;
        t.R = R;
        for (std::uint64_t i = 0; i < reps; ++i)
          t.entries.push_back(static_cast<int>(rng() % q));
        ZqFunction f = decodeTable(t);
        c.require(isFolded(f), "decoded table is not folded");
        c.require(expectationExact(f) == 1 - ratio(1, q), "folded expectation differs");
        c.require(encodeTable(f).entries == t.entries, "round trip not exact");
      }
      // random tables: influence routes and observation bound
      std::uint64_t size = 1;
      for (int i = 0; i < R; ++i) size *= static_cast<std::uint64_t>(q);
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<int> table(size);
        for (auto& v : table) v = static_cast<int>(rng() % 2);
        ZqFunction f = makeZqFunction(q, R, table);
        FourierExpansion e = fourierExpand(f);
        for (int i = 0; i < R; ++i) {
          c.require(std::abs(toDouble(influenceExact(f, i)) - influenceFourier(e, i)) <= tol,
                    "influence routes disagree");
        }
        for (int d = 0; d <= R; ++d) {
          double sum = 0;
          for (int i = 0; i < R; ++i) sum += degreeDInfluence(e, i, d);
          c.require(sum <= d + tol, "degree-d influence sum exceeds d");
        }
      }
    }
  }
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  std::vector<std::pair<SaOptimum, CspInstance>> solved;
  criterion3(&solved);
  criterion4(solved);
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  std::printf("%s\n", failures == 0 ? "acceptance: all criteria pass"
                                    : "acceptance: FAILURES present");
  return failures;
}
