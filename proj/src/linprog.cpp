#include "gaplab/linprog.hpp"

#include <algorithm>

#include "json.hpp"

namespace gaplab {

using ordered_json = nlohmann::ordered_json;

int LinearProgram::addVariable(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(variables.size());
  variables.push_back(name);
  objective.emplace_back(0);
  index_.emplace(name, id);
  return id;
}

int LinearProgram::variableIndex(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

void LinearProgram::setObjective(int var, const Rational& c) {
  if (var < 0 || var >= static_cast<int>(variables.size()))
    throw GaplabError("objective references undeclared variable");
  objective[var] = c;
}

void LinearProgram::addConstraint(std::vector<std::pair<int, Rational>> coeffs, Rel rel,
                                  Rational rhs) {
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].first < 0 || coeffs[i].first >= static_cast<int>(variables.size()))
      throw GaplabError("constraint references undeclared variable");
    if (i > 0 && coeffs[i].first == coeffs[i - 1].first)
      throw GaplabError("duplicate variable in constraint row");
  }
  constraints.push_back(LpConstraint{std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::validate() const {
  if (objective.size() != variables.size())
    throw GaplabError("objective length does not match variable count");
  for (const auto& c : constraints) {
    int prev = -1;
    for (const auto& [v, coef] : c.coeffs) {
      (void)coef;
      if (v < 0 || v >= static_cast<int>(variables.size()))
        throw GaplabError("constraint references undeclared variable");
      if (v <= prev) throw GaplabError("constraint row not strictly sorted");
      prev = v;
    }
  }
}

bool LinearProgram::satisfies(const std::vector<Rational>& point) const {
  if (point.size() != variables.size()) return false;
  for (const auto& c : constraints) {
    Rational lhs = 0;
    for (const auto& [v, coef] : c.coeffs) lhs += coef * point[v];
    if (c.rel == Rel::Le && lhs > c.rhs) return false;
    if (c.rel == Rel::Ge && lhs < c.rhs) return false;
    if (c.rel == Rel::Eq && lhs != c.rhs) return false;
  }
  return true;
}

Rational LinearProgram::objectiveValue(const std::vector<Rational>& point) const {
  Rational v = objectiveConstant;
  for (std::size_t j = 0; j < objective.size(); ++j) v += objective[j] * point[j];
  return v;
}

bool verifyCertificate(const LinearProgram& lp, const LpSolution& sol, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t n = lp.variables.size();
  const std::size_t m = lp.constraints.size();
  const bool maximize = lp.sense == Sense::Maximize;

  if (sol.status == LpStatus::Optimal) {
    if (sol.point.size() != n || sol.dual.size() != m) return fail("certificate shape");
    if (!lp.satisfies(sol.point)) return fail("point violates a constraint");
    if (lp.objectiveValue(sol.point) != sol.value) return fail("objective mismatch");
    // Dual feasibility: sign conditions and sum_i y_i a_i = c.
    std::vector<Rational> combo(n, Rational(0));
    Rational bound = lp.objectiveConstant;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = lp.constraints[i];
      const Rational& y = sol.dual[i];
      if (c.rel == Rel::Le && (maximize ? y < 0 : y > 0)) return fail("dual sign (Le)");
      if (c.rel == Rel::Ge && (maximize ? y > 0 : y < 0)) return fail("dual sign (Ge)");
      for (const auto& [v, coef] : c.coeffs) combo[v] += y * coef;
      bound += y * c.rhs;
    }
    for (std::size_t j = 0; j < n; ++j)
      if (combo[j] != lp.objective[j]) return fail("dual combination misses objective");
    if (bound != sol.value) return fail("duality gap nonzero");
    return true;
  }

  if (sol.status == LpStatus::Infeasible) {
    if (sol.farkas.size() != m) return fail("certificate shape");
    std::vector<Rational> combo(n, Rational(0));
    Rational rhs = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& c = lp.constraints[i];
      const Rational& y = sol.farkas[i];
      if (c.rel == Rel::Le && y > 0) return fail("farkas sign (Le)");
      if (c.rel == Rel::Ge && y < 0) return fail("farkas sign (Ge)");
      for (const auto& [v, coef] : c.coeffs) combo[v] += y * coef;
      rhs += y * c.rhs;
    }
    for (std::size_t j = 0; j < n; ++j)
      if (combo[j] != 0) return fail("farkas combination not identically zero");
    if (!(rhs > 0)) return fail("farkas right-hand side not positive");
    return true;
  }

  // Unbounded: feasible point plus a ray that stays feasible and improves.
  if (sol.point.size() != n || sol.ray.size() != n) return fail("certificate shape");
  if (!lp.satisfies(sol.point)) return fail("witness point infeasible");
  Rational gain = 0;
  for (std::size_t j = 0; j < n; ++j) gain += lp.objective[j] * sol.ray[j];
  if (maximize ? !(gain > 0) : !(gain < 0)) return fail("ray does not improve objective");
  for (const auto& c : lp.constraints) {
    Rational along = 0;
    for (const auto& [v, coef] : c.coeffs) along += coef * sol.ray[v];
    if (c.rel == Rel::Le && along > 0) return fail("ray leaves Le constraint");
    if (c.rel == Rel::Ge && along < 0) return fail("ray leaves Ge constraint");
    if (c.rel == Rel::Eq && along != 0) return fail("ray leaves Eq constraint");
  }
  return true;
}

namespace {

std::string relToString(Rel r) {
  switch (r) {
    case Rel::Le: return "<=";
    case Rel::Eq: return "=";
    default: return ">=";
  }
}

Rel relFromString(const std::string& s) {
  if (s == "<=") return Rel::Le;
  if (s == "=") return Rel::Eq;
  if (s == ">=") return Rel::Ge;
  throw GaplabError("unknown relation: " + s);
}

}  // namespace

std::string lpToJson(const LinearProgram& lp) {
  ordered_json j;
  j["sense"] = lp.sense == Sense::Maximize ? "maximize" : "minimize";
  j["variables"] = lp.variables;
  ordered_json coeffs = ordered_json::object();
  for (std::size_t v = 0; v < lp.variables.size(); ++v)
    if (lp.objective[v] != 0) coeffs[lp.variables[v]] = toString(lp.objective[v]);
  j["objective"] = {{"coeffs", coeffs}, {"constant", toString(lp.objectiveConstant)}};
  ordered_json rows = ordered_json::array();
  for (const auto& c : lp.constraints) {
    ordered_json row;
    ordered_json rc = ordered_json::object();
    for (const auto& [v, coef] : c.coeffs) rc[lp.variables[v]] = toString(coef);
    row["coeffs"] = rc;
    row["rel"] = relToString(c.rel);
    row["rhs"] = toString(c.rhs);
    rows.push_back(row);
  }
  j["constraints"] = rows;
  return j.dump(2);
}

LinearProgram lpFromJson(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  LinearProgram lp;
  lp.sense = j.at("sense").get<std::string>() == "minimize" ? Sense::Minimize : Sense::Maximize;
  for (const auto& name : j.at("variables")) lp.addVariable(name.get<std::string>());
  if (j.contains("objective")) {
    const auto& obj = j["objective"];
    if (obj.contains("coeffs")) {
      for (auto it = obj["coeffs"].begin(); it != obj["coeffs"].end(); ++it) {
        int v = lp.variableIndex(it.key());
        if (v < 0) throw GaplabError("objective references undeclared variable " + it.key());
        lp.setObjective(v, parseRational(it.value().get<std::string>()));
      }
    }
    if (obj.contains("constant")) lp.objectiveConstant = parseRational(obj["constant"]);
  }
  for (const auto& row : j.at("constraints")) {
    std::vector<std::pair<int, Rational>> coeffs;
    for (auto it = row.at("coeffs").begin(); it != row.at("coeffs").end(); ++it) {
      int v = lp.variableIndex(it.key());
      if (v < 0) throw GaplabError("constraint references undeclared variable " + it.key());
      coeffs.emplace_back(v, parseRational(it.value().get<std::string>()));
    }
    lp.addConstraint(std::move(coeffs), relFromString(row.at("rel").get<std::string>()),
                     parseRational(row.at("rhs").get<std::string>()));
  }
  return lp;
}

std::string solutionToJson(const LinearProgram& lp, const LpSolution& sol) {
  ordered_json j;
  switch (sol.status) {
    case LpStatus::Optimal: j["status"] = "optimal"; break;
    case LpStatus::Infeasible: j["status"] = "infeasible"; break;
    case LpStatus::Unbounded: j["status"] = "unbounded"; break;
  }
  auto pointOf = [&](const std::vector<Rational>& xs) {
    ordered_json p = ordered_json::object();
    for (std::size_t v = 0; v < xs.size(); ++v) p[lp.variables[v]] = toString(xs[v]);
    return p;
  };
  if (sol.status == LpStatus::Optimal) {
    j["value"] = toString(sol.value);
    j["point"] = pointOf(sol.point);
    ordered_json d = ordered_json::array();
    for (const auto& y : sol.dual) d.push_back(toString(y));
    j["dual"] = d;
  } else if (sol.status == LpStatus::Infeasible) {
    ordered_json f = ordered_json::array();
    for (const auto& y : sol.farkas) f.push_back(toString(y));
    j["farkas"] = f;
  } else {
    j["point"] = pointOf(sol.point);
    j["ray"] = pointOf(sol.ray);
  }
  return j.dump(2);
}

}  // namespace gaplab
