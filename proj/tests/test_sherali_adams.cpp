#include "doctest.h"
#include "gaplab/harness.hpp"
#include "gaplab/sherali_adams.hpp"

using namespace gaplab;

namespace {

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

CspInstance singleMaxCut() {
  return makeCsp(2, 2, {CspConstraint{{0, 1}, {{0, 1}, {1, 0}}, Rational(1)}});
}

// the pairwise family that is uniform on {01,10} over every edge and uniform
// on singletons: feasible for 2 rounds on the triangle with SA value 1
LocalDistributionFamily triangleFamily() {
  LocalDistributionFamily fam;
  fam.rounds = 2;
  fam.domainSize = 2;
  fam.numVars = 3;
  fam.dists[{}] = {{{}, Rational(1)}};
  for (int v = 0; v < 3; ++v)
    fam.dists[{v}] = {{{0}, ratio(1, 2)}, {{1}, ratio(1, 2)}};
  for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}})
    fam.dists[{a, b}] = {{{0, 1}, ratio(1, 2)}, {{1, 0}, ratio(1, 2)}};
  return fam;
}

std::vector<Rational> pointOf(const LinearProgram& lp, const SaSolution& x) {
  std::vector<Rational> point(lp.variables.size(), Rational(0));
  for (const auto& [key, val] : x.entries) {
    int id = lp.variableIndex("X[" + saKey(key) + "]");
    REQUIRE(id >= 0);
    point[id] = val;
  }
  return point;
}

}  // namespace

TEST_CASE("buildSaLp shapes") {
  CspInstance free1 = makeCsp(2, 1, {});
  LinearProgram lp = buildSaLp(free1, 1);
  CHECK(lp.variables.size() == 3);  // X[|], X[0|0], X[0|1]

  CspInstance free2 = makeCsp(2, 2, {});
  CHECK(buildSaLp(free2, 2).variables.size() == 9);  // 1 + 4 + 4

  CHECK_THROWS_AS(buildSaLp(singleMaxCut(), 1), GaplabError);  // r below arity
}

TEST_CASE("triangle at two rounds: SA value 1 against true optimum 2/3") {
  CspInstance tri = maxCutTriangle();

  // the hand-built family is feasible and has objective 1
  LocalDistributionFamily fam = triangleFamily();
  CHECK_FALSE(familyViolation(fam).has_value());
  SaSolution point = localToSa(fam);
  LinearProgram lp = buildSaLp(tri, 2);
  CHECK(lp.satisfies(pointOf(lp, point)));
  CHECK(saValue(tri, fam) == 1);

  SaOptimum sa = saOptimum(tri, 2);
  CHECK(sa.value == 1);
  CHECK(bruteForceOpt(tri).first == ratio(2, 3));
}

TEST_CASE("localToSa on point, uniform and triangle families") {
  CspInstance tri = maxCutTriangle();
  Assignment x{{0, 1, 0}};
  LocalDistributionFamily pf = pointFamily(tri, x, 2);
  SaSolution sa = localToSa(pf);
  for (const auto& [key, val] : sa.entries) CHECK((val == 0 || val == 1));
  CHECK(saValue(tri, pf) == evaluate(tri, x));

  LocalDistributionFamily uni = uniformFamily(3, 2, 2);
  SaSolution usa = localToSa(uni);
  for (const auto& [key, val] : usa.entries) {
    Rational expect = ratio(1, 1);
    for (std::size_t i = 0; i < key.vars.size(); ++i) expect /= 2;
    CHECK(val == expect);
  }

  LinearProgram lp = buildSaLp(tri, 2);
  CHECK(lp.satisfies(pointOf(lp, localToSa(triangleFamily()))));
}

TEST_CASE("localToSa rejects inconsistent families naming the pair") {
  LocalDistributionFamily bad = uniformFamily(2, 2, 2);
  bad.dists[{0}] = {{{0}, Rational(1)}};  // marginal of {0,1} no longer matches
  CHECK_THROWS_WITH_AS(localToSa(bad), doctest::Contains("marginal"), GaplabError);
}

TEST_CASE("saToLocal round trips and rejections") {
  CspInstance tri = maxCutTriangle();

  // integral SA point -> point-mass family
  SaSolution integral = localToSa(pointFamily(tri, Assignment{{1, 0, 1}}, 2));
  LocalDistributionFamily back = saToLocal(integral);
  CHECK_FALSE(familyViolation(back).has_value());
  for (const auto& [vars, dist] : back.dists) {
    REQUIRE(dist.size() == 1);
    CHECK(dist.begin()->second == 1);
  }

  // solver-produced optimum -> consistent family, exact round trip
  SaOptimum sa = saOptimum(tri, 2);
  LocalDistributionFamily fam = saToLocal(sa.point);
  CHECK_FALSE(familyViolation(fam).has_value());
  SaSolution again = localToSa(fam);
  CHECK(again.entries == sa.point.entries);

  // negative entry rejected
  SaSolution bad = integral;
  bad.entries[SetAssignment{{0}, {0}}] = -1;
  CHECK_THROWS_AS(saToLocal(bad), GaplabError);
}

TEST_CASE("saValue collapses correctly") {
  CspInstance cut = singleMaxCut();
  Assignment x{{0, 1}};
  CHECK(saValue(cut, pointFamily(cut, x, 2)) == evaluate(cut, x));
  CHECK(saValue(cut, uniformFamily(2, 2, 2)) == ratio(1, 2));
  CHECK(saValue(maxCutTriangle(), triangleFamily()) == 1);
}

TEST_CASE("full hierarchy is exact and rounds are monotone") {
  for (std::uint64_t seed : {3u, 4u, 5u}) {
    CspInstance inst = randomCsp(3, 2, 2, 3, seed);
    auto [opt, x] = bruteForceOpt(inst);
    Rational last;
    bool haveLast = false;
    for (int r = 2; r <= 3; ++r) {
      SaOptimum sa = saOptimum(inst, r);
      if (haveLast) CHECK(sa.value <= last);
      last = sa.value;
      haveLast = true;
      CHECK(sa.value >= opt);
    }
    CHECK(last == opt);  // r = n
  }
}

TEST_CASE("constraint-free optimum reports 1 by convention") {
  CspInstance empty = makeCsp(2, 2, {});
  CHECK(saOptimum(empty, 1).value == 1);
}

TEST_CASE("generic lift rows match the hand expansions") {
  // single constraint x0 <= 1 at one round
  LinearProgram blp;
  blp.sense = Sense::Maximize;
  blp.addVariable("x0");
  blp.setObjective(0, 1);
  blp.addConstraint({{0, Rational(1)}}, Rel::Le, 1);
  LinearProgram lift = genericSaLift(blp, 1);
  // rows: y_{0} - y_{} <= 0, y_{0} >= 0, y_{0} <= 1, y_{} = 1
  REQUIRE(lift.size() == 4);
  int y0 = lift.variableIndex("y[0]");
  int ye = lift.variableIndex("y[]");
  REQUIRE(y0 >= 0);
  REQUIRE(ye >= 0);
  bool sawUpper = false, sawLower = false, sawRow = false, sawUnit = false;
  for (const auto& c : lift.constraints) {
    if (c.coeffs.size() == 2 && c.rel == Rel::Le) sawRow = true;
    if (c.coeffs.size() == 1 && c.coeffs[0].first == y0 && c.rel == Rel::Ge) sawLower = true;
    if (c.coeffs.size() == 1 && c.coeffs[0].first == y0 && c.rel == Rel::Le && c.rhs == 1)
      sawUpper = true;
    if (c.coeffs.size() == 1 && c.coeffs[0].first == ye && c.rel == Rel::Eq) sawUnit = true;
  }
  CHECK(sawRow);
  CHECK(sawLower);
  CHECK(sawUpper);
  CHECK(sawUnit);

  // x0 + x1 <= 1 multiplied by x0 gives y_{01} <= 0
  LinearProgram blp2;
  blp2.sense = Sense::Maximize;
  blp2.addVariable("x0");
  blp2.addVariable("x1");
  blp2.addConstraint({{0, Rational(1)}, {1, Rational(1)}}, Rel::Le, 1);
  LinearProgram lift2 = genericSaLift(blp2, 2);
  int y01 = lift2.variableIndex("y[0,1]");
  REQUIRE(y01 >= 0);
  bool sawPacking = false;
  for (const auto& c : lift2.constraints) {
    if (c.rel == Rel::Le && c.rhs == 0 && c.coeffs.size() == 1 &&
        c.coeffs[0].first == y01 && c.coeffs[0].second == 1)
      sawPacking = true;
  }
  CHECK(sawPacking);

  // multiplied by (1 - x0): y_{1} - y_{01} <= 1 - y_{0}
  int y1 = lift2.variableIndex("y[1]");
  int y0b = lift2.variableIndex("y[0]");
  int yeb = lift2.variableIndex("y[]");
  bool sawComplement = false;
  for (const auto& c : lift2.constraints) {
    if (c.rel != Rel::Le || c.coeffs.size() != 4) continue;
    auto coefOf = [&](int v) {
      for (const auto& [var, coef] : c.coeffs)
        if (var == v) return coef;
      return Rational(0);
    };
    if (coefOf(y1) == 1 && coefOf(y01) == -1 && coefOf(y0b) == 1 && coefOf(yeb) == -1 &&
        c.rhs == 0)
      sawComplement = true;
  }
  CHECK(sawComplement);

  CHECK_THROWS_AS(genericSaLift(blp, 0), GaplabError);
}

TEST_CASE("generic-lift equivalence on small instances") {
  // no constraints: vacuous objective on both sides
  CspInstance empty = makeCsp(2, 1, {});
  AppendixAReport a = verifyAppendixAEquivalence(empty, 1);
  CHECK(a.optimaEqual);
  CHECK(a.genericOpt == 0);

  AppendixAReport b = verifyAppendixAEquivalence(singleMaxCut(), 2);
  CHECK(b.optimaEqual);
  CHECK(b.canonicalOpt == 1);
  CHECK(b.contradictoryForcedZero);

  AppendixAReport c = verifyAppendixAEquivalence(maxCutTriangle(), 2);
  CHECK(c.optimaEqual);
  CHECK(c.canonicalOpt == 1);
  CHECK(c.contradictoryForcedZero);
}

TEST_CASE("sa solution json round trip") {
  CspInstance tri = maxCutTriangle();
  SaOptimum sa = saOptimum(tri, 2);
  SaSolution back = saSolutionFromJson(saSolutionToJson(sa.point));
  CHECK(back.entries == sa.point.entries);
  LocalDistributionFamily fam = saToLocal(sa.point);
  LocalDistributionFamily famBack = familyFromJson(familyToJson(fam));
  CHECK_FALSE(familyViolation(famBack).has_value());
  CHECK(saValue(tri, famBack) == saValue(tri, fam));
}
