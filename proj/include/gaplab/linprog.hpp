#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gaplab/rational.hpp"

namespace gaplab {

enum class Sense { Maximize, Minimize };
enum class Rel { Le, Eq, Ge };

// One linear constraint: sparse coefficient row, relation, right-hand side.
struct LpConstraint {
  std::vector<std::pair<int, Rational>> coeffs;  // sorted by variable index
  Rel rel = Rel::Le;
  Rational rhs;
};

// A finite LP over named variables. The relaxation "size" reported throughout
// the toolkit is constraints.size(). Variables carry no implicit bounds; every
// bound that should hold must appear as a constraint.
struct LinearProgram {
  Sense sense = Sense::Maximize;
  std::vector<std::string> variables;
  std::vector<Rational> objective;  // dense, one entry per variable
  Rational objectiveConstant = 0;
  std::vector<LpConstraint> constraints;

  int addVariable(const std::string& name);
  int variableIndex(const std::string& name) const;  // -1 when absent
  void setObjective(int var, const Rational& c);
  void addConstraint(std::vector<std::pair<int, Rational>> coeffs, Rel rel, Rational rhs);
  std::size_t size() const { return constraints.size(); }

  // Throws GaplabError on undeclared variable references or duplicate columns
  // within a row.
  void validate() const;

  bool satisfies(const std::vector<Rational>& point) const;
  Rational objectiveValue(const std::vector<Rational>& point) const;

 private:
  std::map<std::string, int> index_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

// Exact solver output. Exactly one certificate is populated:
//   Optimal    -> point + dual multipliers with zero duality gap
//   Infeasible -> farkas multipliers proving 0 >= positive
//   Unbounded  -> feasible point + improving ray
//
// Dual sign conventions, per constraint i (maximize / minimize):
//   Le: dual >= 0 / dual <= 0,  Ge: dual <= 0 / dual >= 0,  Eq: free,
// with sum_i dual_i * row_i == objective coefficients and
// dual . rhs == value - objectiveConstant.
// Farkas multipliers use: Le: <= 0, Ge: >= 0, Eq free,
// sum_i farkas_i * row_i == 0 and farkas . rhs > 0.
struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  Rational value;
  std::vector<Rational> point;
  std::vector<Rational> dual;
  std::vector<Rational> farkas;
  std::vector<Rational> ray;
};

// Two-phase primal simplex over exact rationals, Bland's anticycling rule,
// dense tableau. Deterministic: identical inputs give identical solutions.
// Instances whose tableau would exceed `cellBudget` cells are refused with an
// error; the solver is for desk-scale systems by design.
inline constexpr std::uint64_t kDefaultSolverCellBudget = std::uint64_t(1) << 22;
LpSolution solve(const LinearProgram& lp,
                 std::uint64_t cellBudget = kDefaultSolverCellBudget);

// Exact certificate check (no tolerances). Returns false with a reason via
// *why when the certificate does not prove the claimed status.
bool verifyCertificate(const LinearProgram& lp, const LpSolution& sol,
                       std::string* why = nullptr);

std::string lpToJson(const LinearProgram& lp);
LinearProgram lpFromJson(const std::string& text);
std::string solutionToJson(const LinearProgram& lp, const LpSolution& sol);

}  // namespace gaplab
