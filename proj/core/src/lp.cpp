#include "hornlab/lp.hpp"

#include <stdexcept>

namespace hornlab {

namespace {

// One column of the dual problem: sign * (gradient of row src), cost sign * const.
struct Column {
  int src = 0;
  int sign = 1;
  Rational cost;
};

enum class DualKind { Optimal, Unbounded, Infeasible };

struct DualResult {
  DualKind kind = DualKind::Optimal;
  std::vector<Rational> y;    // per column
  std::vector<Rational> pi;   // row prices in the unflipped row space
  std::vector<Rational> ray;  // per column, when Unbounded
  std::size_t pivots = 0;
};

// min cost.y  s.t.  sum_j y_j column_j = rhs,  y >= 0.
class DualSimplex {
 public:
  DualSimplex(const LPProblem& p, const std::vector<Column>& cols, std::vector<Rational> rhs)
      : problem_(p), cols_(cols), m_(p.num_vars), ncols_(static_cast<int>(cols.size())) {
    flip_.assign(static_cast<std::size_t>(m_), 1);
    for (int k = 0; k < m_; ++k) {
      if (rhs[static_cast<std::size_t>(k)] < 0) {
        flip_[static_cast<std::size_t>(k)] = -1;
        rhs[static_cast<std::size_t>(k)] = -rhs[static_cast<std::size_t>(k)];
      }
    }
    binv_.assign(static_cast<std::size_t>(m_), std::vector<Rational>(static_cast<std::size_t>(m_)));
    for (int k = 0; k < m_; ++k) {
      binv_[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
      basis_.push_back(ncols_ + k);
    }
    xb_ = std::move(rhs);
  }

  DualResult run() {
    DualResult res;
    phase_one_ = true;
    iterate(res);
    Rational infeasibility;
    for (int k = 0; k < m_; ++k) {
      if (basis_[static_cast<std::size_t>(k)] >= ncols_) infeasibility += xb_[static_cast<std::size_t>(k)];
    }
    if (infeasibility > 0) {
      res.kind = DualKind::Infeasible;
      res.pi = unflipped_prices();
      return res;
    }
    drive_out_artificials(res);
    phase_one_ = false;
    if (iterate(res)) {
      res.kind = DualKind::Unbounded;
      return res;
    }
    res.kind = DualKind::Optimal;
    res.y.assign(static_cast<std::size_t>(ncols_), Rational(0));
    for (int k = 0; k < m_; ++k) {
      const int b = basis_[static_cast<std::size_t>(k)];
      if (b < ncols_) res.y[static_cast<std::size_t>(b)] = xb_[static_cast<std::size_t>(k)];
    }
    res.pi = unflipped_prices();
    return res;
  }

 private:
  const Rational& cost(int j) const {
    static const Rational zero(0), one(1);
    if (j >= ncols_) return phase_one_ ? one : zero;
    return phase_one_ ? zero : cols_[static_cast<std::size_t>(j)].cost;
  }

  // Working-space column j (rows flipped so the right-hand side is >= 0).
  std::vector<Rational> column(int j) const {
    std::vector<Rational> out(static_cast<std::size_t>(m_));
    if (j >= ncols_) {
      out[static_cast<std::size_t>(j - ncols_)] = 1;
      return out;
    }
    const auto& c = cols_[static_cast<std::size_t>(j)];
    for (const auto& [v, a] : problem_.constraints.rows[static_cast<std::size_t>(c.src)].form.terms) {
      out[static_cast<std::size_t>(v)] = a * (c.sign * flip_[static_cast<std::size_t>(v)]);
    }
    return out;
  }

  std::vector<Rational> prices() const {
    std::vector<Rational> pi(static_cast<std::size_t>(m_));
    for (int k = 0; k < m_; ++k) {
      const Rational& cb = cost(basis_[static_cast<std::size_t>(k)]);
      if (cb == 0) continue;
      for (int i = 0; i < m_; ++i) pi[static_cast<std::size_t>(i)] += cb * binv_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    }
    return pi;
  }

  std::vector<Rational> unflipped_prices() const {
    auto pi = prices();
    for (int k = 0; k < m_; ++k) pi[static_cast<std::size_t>(k)] *= flip_[static_cast<std::size_t>(k)];
    return pi;
  }

  Rational reduced_cost(int j, const std::vector<Rational>& pi) const {
    Rational rc = cost(j);
    if (j >= ncols_) return rc - pi[static_cast<std::size_t>(j - ncols_)];
    const auto& c = cols_[static_cast<std::size_t>(j)];
    for (const auto& [v, a] : problem_.constraints.rows[static_cast<std::size_t>(c.src)].form.terms) {
      rc -= pi[static_cast<std::size_t>(v)] * a * (c.sign * flip_[static_cast<std::size_t>(v)]);
    }
    return rc;
  }

  std::vector<Rational> solve_column(int j) const {
    const auto col = column(j);
    std::vector<Rational> d(static_cast<std::size_t>(m_));
    for (int k = 0; k < m_; ++k) {
      Rational s;
      for (int i = 0; i < m_; ++i) {
        const auto& ci = col[static_cast<std::size_t>(i)];
        if (ci != 0) s += binv_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] * ci;
      }
      d[static_cast<std::size_t>(k)] = std::move(s);
    }
    return d;
  }

  void pivot(int row, int entering, const std::vector<Rational>& d, DualResult& res) {
    const auto r = static_cast<std::size_t>(row);
    const Rational piv = d[r];
    for (auto& v : binv_[r]) v /= piv;
    xb_[r] /= piv;
    for (int k = 0; k < m_; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      if (k == row || d[kk] == 0) continue;
      const Rational f = d[kk];
      for (int i = 0; i < m_; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        if (binv_[r][ii] != 0) binv_[kk][ii] -= f * binv_[r][ii];
      }
      xb_[kk] -= f * xb_[r];
    }
    basis_[r] = entering;
    ++res.pivots;
  }

  // Bland's rule. Returns true when the problem is unbounded (ray stored in res).
  bool iterate(DualResult& res) {
    for (;;) {
      const auto pi = prices();
      int entering = -1;
      for (int j = 0; j < ncols_; ++j) {
        if (in_basis(j)) continue;
        if (reduced_cost(j, pi) < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return false;
      const auto d = solve_column(entering);
      int leave = -1;
      Rational best;
      for (int k = 0; k < m_; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        if (d[kk] <= 0) continue;
        Rational ratio = xb_[kk] / d[kk];
        if (leave < 0 || ratio < best || (ratio == best && basis_[kk] < basis_[static_cast<std::size_t>(leave)])) {
          leave = k;
          best = std::move(ratio);
        }
      }
      if (leave < 0) {
        res.ray.assign(static_cast<std::size_t>(ncols_), Rational(0));
        res.ray[static_cast<std::size_t>(entering)] = 1;
        for (int k = 0; k < m_; ++k) {
          const int b = basis_[static_cast<std::size_t>(k)];
          if (b < ncols_) res.ray[static_cast<std::size_t>(b)] = -d[static_cast<std::size_t>(k)];
        }
        return true;
      }
      pivot(leave, entering, d, res);
    }
  }

  bool in_basis(int j) const {
    for (int b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  // Artificials still basic after phase one sit at zero; swap them for any
  // structural column with a nonzero entry in their row. Rows with none are
  // redundant and keep their artificial, which can never leave or grow.
  void drive_out_artificials(DualResult& res) {
    for (int k = 0; k < m_; ++k) {
      if (basis_[static_cast<std::size_t>(k)] < ncols_) continue;
      for (int j = 0; j < ncols_; ++j) {
        if (in_basis(j)) continue;
        const auto d = solve_column(j);
        if (d[static_cast<std::size_t>(k)] != 0) {
          pivot(k, j, d, res);
          break;
        }
      }
    }
  }

  const LPProblem& problem_;
  const std::vector<Column>& cols_;
  int m_;
  int ncols_;
  bool phase_one_ = true;
  std::vector<int> flip_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<Rational> xb_;
  std::vector<int> basis_;
};

void validate(const LPProblem& p) {
  if (p.num_vars < 0) throw std::invalid_argument("negative variable count");
  if (p.objective.span_size() > p.num_vars) throw std::invalid_argument("objective references an unknown variable");
  for (const auto& row : p.constraints.rows) {
    if (row.form.span_size() > p.num_vars) throw std::invalid_argument("row references an unknown variable");
  }
}

std::vector<Column> dual_columns(const LPProblem& p) {
  std::vector<Column> cols;
  for (std::size_t i = 0; i < p.constraints.rows.size(); ++i) {
    const auto& row = p.constraints.rows[i];
    cols.push_back({static_cast<int>(i), 1, row.form.constant});
    if (row.kind == RowKind::Eq) cols.push_back({static_cast<int>(i), -1, -row.form.constant});
  }
  return cols;
}

std::vector<Rational> row_multipliers(const LPProblem& p, const std::vector<Column>& cols,
                                      const std::vector<Rational>& y) {
  std::vector<Rational> out(p.constraints.rows.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (y[j] != 0) out[static_cast<std::size_t>(cols[j].src)] += y[j] * cols[j].sign;
  }
  return out;
}

std::vector<Rational> gradient(const LinearForm& f, int n) {
  std::vector<Rational> g(static_cast<std::size_t>(n));
  for (const auto& [v, a] : f.terms) g[static_cast<std::size_t>(v)] = a;
  return g;
}

std::vector<Rational> negated(std::vector<Rational> v) {
  for (auto& x : v) x = -x;
  return v;
}

Rational dot_gradient(const LinearForm& f, std::span<const Rational> x) {
  Rational s;
  for (const auto& [v, a] : f.terms) s += a * x[static_cast<std::size_t>(v)];
  return s;
}

bool feasible(const LPProblem& p, std::span<const Rational> x) {
  if (x.size() != static_cast<std::size_t>(p.num_vars)) return false;
  for (const auto& row : p.constraints.rows) {
    const Rational v = row.form.evaluate(x);
    if (row.kind == RowKind::Eq ? v != 0 : v < 0) return false;
  }
  return true;
}

}  // namespace

std::string to_text(LPStatus status) {
  switch (status) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
  }
  return "?";
}

LPStatus parse_status(std::string_view text) {
  if (text == "optimal") return LPStatus::Optimal;
  if (text == "infeasible") return LPStatus::Infeasible;
  if (text == "unbounded") return LPStatus::Unbounded;
  throw ParseError("unknown LP status: " + std::string(text));
}

LPOutcome solve(const LPProblem& problem) {
  validate(problem);
  const auto cols = dual_columns(problem);
  LPOutcome out;
  DualSimplex main(problem, cols, gradient(problem.objective, problem.num_vars));
  auto res = main.run();
  out.pivots = res.pivots;
  switch (res.kind) {
    case DualKind::Optimal:
      out.status = LPStatus::Optimal;
      out.point = negated(std::move(res.pi));
      out.value = problem.objective.evaluate(out.point);
      out.multipliers = row_multipliers(problem, cols, res.y);
      return out;
    case DualKind::Unbounded:
      out.status = LPStatus::Infeasible;
      out.multipliers = row_multipliers(problem, cols, res.ray);
      return out;
    case DualKind::Infeasible:
      break;
  }
  // The dual has no feasible point, so the primal is unbounded or infeasible.
  // Phase-one prices give the descent direction; a zero-objective solve decides
  // feasibility.
  out.ray = negated(std::move(res.pi));
  DualSimplex zero(problem, cols, std::vector<Rational>(static_cast<std::size_t>(problem.num_vars)));
  auto feas = zero.run();
  out.pivots += feas.pivots;
  if (feas.kind == DualKind::Unbounded) {
    out.status = LPStatus::Infeasible;
    out.ray.clear();
    out.multipliers = row_multipliers(problem, cols, feas.ray);
    return out;
  }
  out.status = LPStatus::Unbounded;
  out.point = negated(std::move(feas.pi));
  return out;
}

bool check_certificate(const LPProblem& problem, const LPOutcome& outcome) {
  try {
    validate(problem);
  } catch (const std::invalid_argument&) {
    return false;
  }
  const auto& rows = problem.constraints.rows;
  const auto n = static_cast<std::size_t>(problem.num_vars);
  auto combine = [&](std::vector<Rational>& grad, Rational& constant) {
    grad.assign(n, Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& y = outcome.multipliers[i];
      if (y == 0) continue;
      if (rows[i].kind == RowKind::Ge && y < 0) return false;
      for (const auto& [v, a] : rows[i].form.terms) grad[static_cast<std::size_t>(v)] += y * a;
      constant += y * rows[i].form.constant;
    }
    return true;
  };
  switch (outcome.status) {
    case LPStatus::Optimal: {
      if (!feasible(problem, outcome.point) || outcome.multipliers.size() != rows.size()) return false;
      std::vector<Rational> grad;
      Rational constant;
      if (!combine(grad, constant)) return false;
      if (grad != gradient(problem.objective, problem.num_vars)) return false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (outcome.multipliers[i] != 0 && rows[i].form.evaluate(outcome.point) != 0) return false;
      }
      // With the slackness above, objective(x) = objective const - sum y_i const_i.
      const Rational value = problem.objective.evaluate(outcome.point);
      return value == outcome.value && value == problem.objective.constant - constant;
    }
    case LPStatus::Infeasible: {
      if (outcome.multipliers.size() != rows.size()) return false;
      std::vector<Rational> grad;
      Rational constant;
      if (!combine(grad, constant)) return false;
      for (const auto& g : grad) {
        if (g != 0) return false;
      }
      return constant < 0;
    }
    case LPStatus::Unbounded: {
      if (!feasible(problem, outcome.point) || outcome.ray.size() != n) return false;
      for (const auto& row : rows) {
        const Rational slope = dot_gradient(row.form, outcome.ray);
        if (row.kind == RowKind::Eq ? slope != 0 : slope < 0) return false;
      }
      return dot_gradient(problem.objective, outcome.ray) < 0;
    }
  }
  return false;
}

LPProblem identify_alpha_beta(const LPProblem& problem, int n) {
  if (problem.num_vars != 3 * n) throw std::invalid_argument("identify_alpha_beta needs a problem over 3n variables");
  auto map_form = [n](const LinearForm& f) {
    LinearForm g;
    g.constant = f.constant;
    for (const auto& [v, a] : f.terms) g.add(v < 2 * n ? v % n : v - n, a);
    return g;
  };
  LPProblem out;
  out.num_vars = 2 * n;
  out.objective = map_form(problem.objective);
  out.constraints.num_vars = 2 * n;
  for (const auto& row : problem.constraints.rows) out.constraints.rows.push_back({row.kind, map_form(row.form), row.origin});
  return out;
}

std::vector<Rational> expand_identified(std::span<const Rational> x, int n) {
  if (x.size() != static_cast<std::size_t>(2 * n)) throw std::invalid_argument("expand_identified: wrong length");
  std::vector<Rational> out(x.begin(), x.begin() + n);
  out.insert(out.end(), x.begin(), x.begin() + n);
  out.insert(out.end(), x.begin() + n, x.end());
  return out;
}

LPProblem problem_from_file(const SystemFile& file) {
  LPProblem p;
  p.num_vars = file.num_vars;
  p.objective = file.objective.value_or(LinearForm{});
  p.constraints = file.system;
  p.constraints.num_vars = file.num_vars;
  validate(p);
  return p;
}

}  // namespace hornlab
