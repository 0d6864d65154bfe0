#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hornlab/polytope.hpp"

namespace hornlab {

/// minimize objective(x) subject to every row of `constraints`; x is free.
struct LPProblem {
  int num_vars = 0;
  LinearForm objective;
  ConstraintSystem constraints;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

std::string to_text(LPStatus status);
LPStatus parse_status(std::string_view text);

/// Optimal: `point`, `value`, and row multipliers y with sum y_i grad_i = grad(objective),
///   y_i >= 0 on inequalities and y_i = 0 off the tight rows.
/// Infeasible: multipliers y (>= 0 on inequalities) with sum y_i grad_i = 0 and
///   sum y_i const_i < 0.
/// Unbounded: a feasible `point` and a `ray` r with grad_i . r >= 0 (= 0 on equalities)
///   and grad(objective) . r < 0.
struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  std::vector<Rational> point;
  Rational value;
  std::vector<Rational> multipliers;
  std::vector<Rational> ray;
  std::size_t pivots = 0;

  friend bool operator==(const LPOutcome& a, const LPOutcome& b) {
    return a.status == b.status && a.point == b.point && a.value == b.value && a.multipliers == b.multipliers &&
           a.ray == b.ray;
  }
};

/// Exact simplex with Bland's rule, run on the dual problem (one equation per
/// variable, one column per row), so the basis stays num_vars wide however
/// many rows there are. Throws std::invalid_argument if a row or the
/// objective references a variable >= num_vars.
LPOutcome solve(const LPProblem& problem);

/// Verifies the outcome's claim with exact arithmetic, using only the problem
/// data and the certificate.
bool check_certificate(const LPProblem& problem, const LPOutcome& outcome);

/// Substitutes beta = alpha in a problem over (alpha, beta, gamma), giving one
/// over (alpha, gamma).
LPProblem identify_alpha_beta(const LPProblem& problem, int n);
std::vector<Rational> expand_identified(std::span<const Rational> x, int n);

LPProblem problem_from_file(const SystemFile& file);

/// HORNLAB-LP v1 outcome text.
std::string write_outcome(const LPOutcome& outcome);
LPOutcome read_outcome(std::istream& in);

}  // namespace hornlab
