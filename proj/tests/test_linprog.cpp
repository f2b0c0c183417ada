#include <random>

#include "doctest.h"
#include "gaplab/linprog.hpp"
#include "oracles.hpp"

using namespace gaplab;

namespace {

LinearProgram boxLp() {
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  int x = lp.addVariable("x");
  lp.setObjective(x, 1);
  lp.addConstraint({{x, Rational(1)}}, Rel::Ge, 0);
  lp.addConstraint({{x, Rational(1)}}, Rel::Le, 1);
  return lp;
}

LinearProgram triangleVc() {
  LinearProgram lp;
  lp.sense = Sense::Minimize;
  for (const char* name : {"x0", "x1", "x2"}) lp.addVariable(name);
  for (int v = 0; v < 3; ++v) lp.setObjective(v, 1);
  lp.addConstraint({{0, Rational(1)}, {1, Rational(1)}}, Rel::Ge, 1);
  lp.addConstraint({{1, Rational(1)}, {2, Rational(1)}}, Rel::Ge, 1);
  lp.addConstraint({{0, Rational(1)}, {2, Rational(1)}}, Rel::Ge, 1);
  for (int v = 0; v < 3; ++v) {
    lp.addConstraint({{v, Rational(1)}}, Rel::Ge, 0);
    lp.addConstraint({{v, Rational(1)}}, Rel::Le, 1);
  }
  return lp;
}

}  // namespace

TEST_CASE("box maximum") {
  LpSolution sol = solve(boxLp());
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 1);
  CHECK(sol.point[0] == 1);
  CHECK(verifyCertificate(boxLp(), sol));
}

TEST_CASE("triangle vertex cover LP has value 3/2 at the all-half point") {
  LinearProgram lp = triangleVc();
  // oracle: enumerate the polytope vertices by constraint intersection
  auto oracleBest = oracle::bestVertexValue(lp);
  REQUIRE(oracleBest.has_value());
  CHECK(*oracleBest == ratio(3, 2));

  LpSolution sol = solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == ratio(3, 2));
  for (int v = 0; v < 3; ++v) CHECK(sol.point[v] == ratio(1, 2));
  CHECK(verifyCertificate(lp, sol));
}

TEST_CASE("contradictory bounds give a verified Farkas certificate") {
  LinearProgram lp;
  int x = lp.addVariable("x");
  lp.setObjective(x, 1);
  lp.addConstraint({{x, Rational(1)}}, Rel::Ge, 1);
  lp.addConstraint({{x, Rational(1)}}, Rel::Le, 0);
  LpSolution sol = solve(lp);
  REQUIRE(sol.status == LpStatus::Infeasible);
  CHECK(verifyCertificate(lp, sol));
}

TEST_CASE("unbounded direction is certified by a ray") {
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  int x = lp.addVariable("x");
  int y = lp.addVariable("y");
  lp.setObjective(x, 1);
  lp.setObjective(y, -1);
  lp.addConstraint({{x, Rational(1)}, {y, Rational(-1)}}, Rel::Ge, 0);
  lp.addConstraint({{y, Rational(1)}}, Rel::Ge, 0);
  LpSolution sol = solve(lp);
  REQUIRE(sol.status == LpStatus::Unbounded);
  CHECK(verifyCertificate(lp, sol));
}

TEST_CASE("empty constraint set") {
  LinearProgram lp;
  lp.addVariable("x");
  LpSolution sol = solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 0);

  lp.setObjective(0, 2);
  sol = solve(lp);
  CHECK(sol.status == LpStatus::Unbounded);
  CHECK(verifyCertificate(lp, sol));
}

TEST_CASE("redundant equalities are handled and get zero duals") {
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  int x = lp.addVariable("x");
  int y = lp.addVariable("y");
  lp.setObjective(x, 1);
  lp.setObjective(y, 1);
  lp.addConstraint({{x, Rational(1)}, {y, Rational(1)}}, Rel::Eq, 1);
  lp.addConstraint({{x, Rational(1)}, {y, Rational(1)}}, Rel::Eq, 1);
  lp.addConstraint({{x, Rational(1)}}, Rel::Ge, 0);
  lp.addConstraint({{y, Rational(1)}}, Rel::Ge, 0);
  LpSolution sol = solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 1);
  CHECK(verifyCertificate(lp, sol));
}

TEST_CASE("objective constant flows through values and certificates") {
  LinearProgram lp = boxLp();
  lp.objectiveConstant = ratio(5, 3);
  LpSolution sol = solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 1 + ratio(5, 3));
  CHECK(verifyCertificate(lp, sol));
}

TEST_CASE("determinism: identical inputs give identical solutions") {
  LinearProgram lp = triangleVc();
  LpSolution a = solve(lp);
  LpSolution b = solve(lp);
  CHECK(a.point == b.point);
  CHECK(a.dual == b.dual);
}

TEST_CASE("malformed rows are rejected") {
  LinearProgram lp;
  lp.addVariable("x");
  CHECK_THROWS_AS(lp.addConstraint({{1, Rational(1)}}, Rel::Le, 1), GaplabError);
  CHECK_THROWS_AS(lp.addConstraint({{0, Rational(1)}, {0, Rational(2)}}, Rel::Le, 1),
                  GaplabError);
  CHECK_THROWS_AS(
      lpFromJson(R"({"sense":"maximize","variables":["x"],
        "objective":{"coeffs":{"zz":"1"},"constant":"0"},"constraints":[]})"),
      GaplabError);
}

TEST_CASE("json round trip") {
  LinearProgram lp = triangleVc();
  LinearProgram back = lpFromJson(lpToJson(lp));
  CHECK(back.variables == lp.variables);
  CHECK(back.size() == lp.size());
  LpSolution a = solve(lp);
  LpSolution b = solve(back);
  CHECK(a.value == b.value);
  CHECK(a.point == b.point);
}

TEST_CASE("empty-row constraints") {
  LinearProgram lp;
  lp.addVariable("x");
  lp.addConstraint({}, Rel::Le, -1);  // 0 <= -1
  LpSolution sol = solve(lp);
  CHECK(sol.status == LpStatus::Infeasible);
  CHECK(verifyCertificate(lp, sol));

  LinearProgram ok;
  ok.addVariable("x");
  ok.addConstraint({}, Rel::Le, 1);
  ok.addConstraint({{0, Rational(1)}}, Rel::Eq, 2);
  LpSolution sol2 = solve(ok);
  CHECK(sol2.status == LpStatus::Optimal);
  CHECK(sol2.point[0] == 2);
}

TEST_CASE("fuzz with free variables, equalities and negative sides") {
  // the in-solver certificate check is a complete oracle: a verified dual
  // proves optimality, a verified Farkas vector proves infeasibility, a
  // verified ray proves unboundedness. solve() throws if its own certificate
  // fails, so this fuzz only needs to exercise the paths.
  std::mt19937_64 rng(4096);
  int statuses[3] = {0, 0, 0};
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = static_cast<int>(rng() % 5);
    LinearProgram lp;
    lp.sense = rng() % 2 ? Sense::Maximize : Sense::Minimize;
    for (int v = 0; v < n; ++v) lp.addVariable("x" + std::to_string(v));
    for (int v = 0; v < n; ++v)
      lp.setObjective(v, ratio(static_cast<long>(rng() % 9) - 4, 1));
    for (int c = 0; c < m; ++c) {
      std::vector<std::pair<int, Rational>> row;
      for (int v = 0; v < n; ++v) {
        long coef = static_cast<long>(rng() % 7) - 3;
        if (coef != 0) row.emplace_back(v, Rational(coef));
      }
      Rel rel = rng() % 3 == 0 ? Rel::Eq : (rng() % 2 ? Rel::Le : Rel::Ge);
      lp.addConstraint(std::move(row), rel, ratio(static_cast<long>(rng() % 11) - 5, 1));
    }
    LpSolution sol = solve(lp);  // internal exact verification throws on any bug
    CHECK(verifyCertificate(lp, sol));
    ++statuses[static_cast<int>(sol.status)];
  }
  // all three paths exercised
  CHECK(statuses[0] > 0);
  CHECK(statuses[1] > 0);
  CHECK(statuses[2] > 0);
}

TEST_CASE("fuzz with deliberately dependent rows") {
  // exercises the redundant-row drop in phase 1 and its zero duals
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    LinearProgram lp;
    lp.sense = rng() % 2 ? Sense::Maximize : Sense::Minimize;
    for (int v = 0; v < n; ++v) lp.addVariable("x" + std::to_string(v));
    for (int v = 0; v < n; ++v)
      lp.setObjective(v, ratio(static_cast<long>(rng() % 7) - 3, 1));
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (int c = 0; c < 2; ++c) {
      std::vector<Rational> row(n);
      for (int v = 0; v < n; ++v) row[v] = ratio(static_cast<long>(rng() % 5) - 2, 1);
      rows.push_back(row);
      rhs.push_back(ratio(static_cast<long>(rng() % 7) - 3, 1));
    }
    // third equality = sum of the first two
    std::vector<Rational> sum(n);
    for (int v = 0; v < n; ++v) sum[v] = rows[0][v] + rows[1][v];
    rows.push_back(sum);
    rhs.push_back(rhs[0] + rhs[1]);
    for (int c = 0; c < 3; ++c) {
      std::vector<std::pair<int, Rational>> sparse;
      for (int v = 0; v < n; ++v)
        if (rows[c][v] != 0) sparse.emplace_back(v, rows[c][v]);
      lp.addConstraint(std::move(sparse), Rel::Eq, rhs[c]);
    }
    for (int v = 0; v < n; ++v) {
      lp.addConstraint({{v, Rational(1)}}, Rel::Ge, -3);
      lp.addConstraint({{v, Rational(1)}}, Rel::Le, 3);
    }
    LpSolution sol = solve(lp);
    CHECK(verifyCertificate(lp, sol));
  }
}

TEST_CASE("fuzz against the vertex enumeration oracle on boxed LPs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    LinearProgram lp;
    lp.sense = trial % 2 == 0 ? Sense::Maximize : Sense::Minimize;
    for (int v = 0; v < n; ++v) lp.addVariable("x" + std::to_string(v));
    for (int v = 0; v < n; ++v)
      lp.setObjective(v, ratio(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3));
    for (int v = 0; v < n; ++v) {
      lp.addConstraint({{v, Rational(1)}}, Rel::Ge, 0);
      lp.addConstraint({{v, Rational(1)}}, Rel::Le, ratio(1 + static_cast<long>(rng() % 4), 1));
    }
    const int extra = static_cast<int>(rng() % 3);
    for (int c = 0; c < extra; ++c) {
      std::vector<std::pair<int, Rational>> row;
      for (int v = 0; v < n; ++v) {
        long coef = static_cast<long>(rng() % 7) - 3;
        if (coef != 0) row.emplace_back(v, Rational(coef));
      }
      if (row.empty()) continue;
      lp.addConstraint(std::move(row), rng() % 2 ? Rel::Le : Rel::Ge,
                       ratio(static_cast<long>(rng() % 9) - 2, 1));
    }
    LpSolution sol = solve(lp);
    auto oracleBest = oracle::bestVertexValue(lp);
    if (sol.status == LpStatus::Optimal) {
      REQUIRE(oracleBest.has_value());
      CHECK(sol.value == *oracleBest);
      CHECK(verifyCertificate(lp, sol));
    } else {
      REQUIRE(sol.status == LpStatus::Infeasible);
      CHECK_FALSE(oracleBest.has_value());
      CHECK(verifyCertificate(lp, sol));
    }
  }
}
