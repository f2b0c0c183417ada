#include <algorithm>
#include <vector>

#include "gaplab/linprog.hpp"

// Two-phase primal simplex on a dense tableau of exact rationals.
//
// Internal form: minimize c~.z subject to D z = d, z >= 0 where every original
// variable is split x = p - q, every inequality gets a slack, every row gets an
// artificial, and rows are scaled so d >= 0. Row 0 of the tableau holds the
// reduced costs; the artificial columns stay in the tableau after phase 1 (they
// may never re-enter the basis) because column k of the artificial block equals
// B^-1 e_k, which is exactly what the dual extraction needs.

namespace gaplab {

namespace {

struct Tableau {
  int rows = 0;  // constraint rows, excluding the cost row
  int cols = 0;  // columns excluding rhs
  std::vector<std::vector<Rational>> t;  // (rows+1) x (cols+1), [0] = cost row
  std::vector<int> basis;                // basic column per constraint row
  std::vector<char> enterable;           // column may enter the basis

  Rational& at(int r, int c) { return t[r][c]; }
  Rational& rhs(int r) { return t[r][cols]; }

  void pivot(int pr, int pc) {
    std::vector<int> nz;
    nz.reserve(cols + 1);
    const Rational piv = t[pr][pc];
    for (int c = 0; c <= cols; ++c) {
      if (t[pr][c] != 0) {
        t[pr][c] /= piv;
        nz.push_back(c);
      }
    }
    for (int r = 0; r <= rows; ++r) {
      if (r == pr) continue;
      const Rational factor = t[r][pc];
      if (factor == 0) continue;
      for (int c : nz) {
        if (c == pc) continue;
        t[r][c] -= factor * t[pr][c];
      }
      t[r][pc] = 0;
    }
    basis[pr - 1] = pc;
  }

  // Bland: smallest enterable column with negative reduced cost; leaving row is
  // the ratio-test minimum, ties broken on the smallest basic column index.
  // Returns false at optimality; throws the entering column via *unboundedCol
  // when no ratio limits the step.
  bool step(int* unboundedCol) {
    int pc = -1;
    for (int c = 0; c < cols; ++c) {
      if (enterable[c] && sgn(t[0][c]) < 0) {
        pc = c;
        break;
      }
    }
    if (pc < 0) return false;
    int pr = -1;
    Rational best;
    for (int r = 1; r <= rows; ++r) {
      if (sgn(t[r][pc]) <= 0) continue;
      Rational ratio = t[r][cols] / t[r][pc];
      if (pr < 0 || ratio < best || (ratio == best && basis[r - 1] < basis[pr - 1])) {
        pr = r;
        best = ratio;
      }
    }
    if (pr < 0) {
      *unboundedCol = pc;
      return false;
    }
    pivot(pr, pc);
    *unboundedCol = -1;
    return true;
  }
};

}  // namespace

LpSolution solve(const LinearProgram& lp, std::uint64_t cellBudget) {
  lp.validate();
  const int n = static_cast<int>(lp.variables.size());
  const int m = static_cast<int>(lp.constraints.size());
  const bool maximize = lp.sense == Sense::Maximize;

  // Internal minimization costs on the split variables.
  std::vector<Rational> cost(2 * n, Rational(0));
  for (int j = 0; j < n; ++j) {
    cost[j] = maximize ? Rational(-lp.objective[j]) : lp.objective[j];
    cost[n + j] = -cost[j];
  }

  if (m == 0) {
    // No rows: any variable with a nonzero objective makes the LP unbounded.
    LpSolution sol;
    sol.point.assign(n, Rational(0));
    for (int j = 0; j < n; ++j) {
      if (lp.objective[j] == 0) continue;
      sol.status = LpStatus::Unbounded;
      sol.ray.assign(n, Rational(0));
      const bool up = lp.objective[j] > 0;
      sol.ray[j] = (up == maximize) ? 1 : -1;
      return sol;
    }
    sol.status = LpStatus::Optimal;
    sol.value = lp.objectiveConstant;
    return sol;
  }

  // Column layout: [p 0..n) [q n..2n) [slack 2n..2n+s) [artificial ...).
  int numSlacks = 0;
  for (const auto& c : lp.constraints)
    if (c.rel != Rel::Eq) ++numSlacks;
  const int slackBase = 2 * n;
  const int artBase = slackBase + numSlacks;
  const int cols = artBase + m;
  if (static_cast<std::uint64_t>(m + 1) * (cols + 1) > cellBudget)
    throw GaplabError("LP tableau exceeds the dense solver budget");

  Tableau tab;
  tab.rows = m;
  tab.cols = cols;
  tab.t.assign(m + 1, std::vector<Rational>(cols + 1, Rational(0)));
  tab.basis.assign(m, 0);
  tab.enterable.assign(cols, 1);

  std::vector<int> rowSign(m, 1);
  std::vector<int> slackOf(m, -1);
  {
    int s = 0;
    for (int i = 0; i < m; ++i) {
      const auto& c = lp.constraints[i];
      int sign = c.rhs < 0 ? -1 : 1;
      rowSign[i] = sign;
      for (const auto& [v, coef] : c.coeffs) {
        tab.at(i + 1, v) = sign * coef;
        tab.at(i + 1, n + v) = -sign * coef;
      }
      if (c.rel != Rel::Eq) {
        slackOf[i] = slackBase + s;
        tab.at(i + 1, slackBase + s) = Rational(sign * (c.rel == Rel::Le ? 1 : -1));
        ++s;
      }
      tab.at(i + 1, artBase + i) = 1;
      tab.rhs(i + 1) = sign * c.rhs;
      tab.basis[i] = artBase + i;
    }
  }

  // Phase 1: minimize the artificial sum. Cost row starts as -(sum of rows).
  for (int c = 0; c <= cols; ++c) {
    Rational acc = 0;
    for (int r = 1; r <= m; ++r) acc += tab.at(r, c);
    tab.at(0, c) = -acc;
  }
  for (int i = 0; i < m; ++i) tab.at(0, artBase + i) = 0;
  for (int i = 0; i < m; ++i) tab.enterable[artBase + i] = 0;

  int unbounded = -1;
  while (tab.step(&unbounded)) {
  }
  if (unbounded >= 0)
    throw GaplabError("internal: phase-1 objective cannot be unbounded");
  // Phase-1 objective value is -rhs of the cost row.
  if (-tab.rhs(0) != 0) {
    // Infeasible. Internal dual y_k = (phase-1 costs)_B . B^-1 e_k, read off
    // as 1 - reducedcost(artificial k); certificate sign wants sum f.b < 0
    // flipped to > 0, which the phase-1 dual provides directly.
    LpSolution sol;
    sol.status = LpStatus::Infeasible;
    sol.farkas.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
      Rational y = Rational(1) - tab.at(0, artBase + i);
      sol.farkas[i] = rowSign[i] * y;
    }
    std::string why;
    if (!verifyCertificate(lp, sol, &why))
      throw GaplabError("internal: farkas certificate failed: " + why);
    return sol;
  }

  // Drive any basic artificial out at value zero; a row with no eligible pivot
  // is redundant and is removed.
  std::vector<char> dropped(m, 0);
  for (int r = 1; r <= m; ++r) {
    if (tab.basis[r - 1] < artBase) continue;
    int pc = -1;
    for (int c = 0; c < artBase; ++c) {
      if (tab.at(r, c) != 0) {
        pc = c;
        break;
      }
    }
    if (pc >= 0) {
      tab.pivot(r, pc);
    } else {
      dropped[tab.basis[r - 1] - artBase] = 1;
    }
  }
  if (std::any_of(dropped.begin(), dropped.end(), [](char d) { return d != 0; })) {
    Tableau compact;
    compact.cols = cols;
    compact.t.push_back(tab.t[0]);
    for (int r = 1; r <= m; ++r) {
      if (tab.basis[r - 1] >= artBase && dropped[tab.basis[r - 1] - artBase]) continue;
      compact.t.push_back(std::move(tab.t[r]));
      compact.basis.push_back(tab.basis[r - 1]);
    }
    compact.rows = static_cast<int>(compact.basis.size());
    compact.enterable = tab.enterable;
    tab = std::move(compact);
  }

  // Phase 2: real costs. Rebuild the reduced-cost row from scratch.
  for (int c = 0; c <= cols; ++c) tab.at(0, c) = 0;
  for (int c = 0; c < artBase; ++c) tab.at(0, c) = c < 2 * n ? cost[c] : Rational(0);
  for (int r = 1; r <= tab.rows; ++r) {
    const int b = tab.basis[r - 1];
    const Rational cb = b < 2 * n ? cost[b] : Rational(0);
    if (cb == 0) continue;
    for (int c = 0; c <= cols; ++c) {
      if (tab.at(r, c) != 0) tab.at(0, c) -= cb * tab.at(r, c);
    }
  }

  unbounded = -1;
  while (tab.step(&unbounded)) {
  }

  auto pointFromBasis = [&]() {
    std::vector<Rational> z(cols, Rational(0));
    for (int r = 1; r <= tab.rows; ++r) z[tab.basis[r - 1]] = tab.rhs(r);
    std::vector<Rational> x(n);
    for (int j = 0; j < n; ++j) x[j] = z[j] - z[n + j];
    return x;
  };

  if (unbounded >= 0) {
    LpSolution sol;
    sol.status = LpStatus::Unbounded;
    sol.point = pointFromBasis();
    std::vector<Rational> dz(cols, Rational(0));
    dz[unbounded] = 1;
    for (int r = 1; r <= tab.rows; ++r) dz[tab.basis[r - 1]] = -tab.at(r, unbounded);
    sol.ray.assign(n, Rational(0));
    for (int j = 0; j < n; ++j) sol.ray[j] = dz[j] - dz[n + j];
    std::string why;
    if (!verifyCertificate(lp, sol, &why))
      throw GaplabError("internal: unbounded certificate failed: " + why);
    return sol;
  }

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.point = pointFromBasis();
  sol.value = lp.objectiveValue(sol.point);
  sol.dual.assign(m, Rational(0));
  {
    // Internal dual y_k = -reducedcost(artificial k); rows dropped as
    // redundant keep dual zero.
    std::vector<int> rowOf(m, -1);
    for (int i = 0, r = 0; i < m; ++i) {
      if (!dropped[i]) rowOf[i] = r++;
    }
    for (int i = 0; i < m; ++i) {
      if (rowOf[i] < 0) continue;
      Rational y = -tab.at(0, artBase + i);
      sol.dual[i] = (maximize ? -1 : 1) * rowSign[i] * y;
    }
  }
  std::string why;
  if (!verifyCertificate(lp, sol, &why))
    throw GaplabError("internal: optimality certificate failed: " + why);
  return sol;
}

}  // namespace gaplab
