#include <gtest/gtest.h>

#include <sstream>

#include "hornlab/lp.hpp"
#include "hornlab/scanner.hpp"
#include "lp_fixtures.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hornlab;

namespace {

Rational dot(const LinearForm& f, const std::vector<Rational>& x) { return f.evaluate(x) - f.constant; }

LPProblem random_bounded_lp(std::mt19937_64& rng, int nv, int extra) {
  // Box [-3, 3]^nv plus random rows that keep a random interior point feasible.
  std::uniform_int_distribution<int> coef(-4, 4), off(0, 3);
  LPProblem p;
  p.num_vars = nv;
  p.constraints.num_vars = nv;
  std::vector<Rational> center(static_cast<std::size_t>(nv));
  for (auto& c : center) c = make_rational(coef(rng), 3);
  for (int v = 0; v < nv; ++v) {
    Row lo, hi;
    lo.form.constant = 3;
    lo.form.add(v, 1);
    hi.form.constant = 3;
    hi.form.add(v, -1);
    p.constraints.rows.push_back(lo);
    p.constraints.rows.push_back(hi);
  }
  for (int i = 0; i < extra; ++i) {
    Row row;
    for (int v = 0; v < nv; ++v) row.form.add(v, coef(rng));
    row.form.constant = off(rng) - dot(row.form, center);
    p.constraints.rows.push_back(row);
    if (i % 3 == 0) p.constraints.rows.push_back(row);  // duplicates
  }
  for (int v = 0; v < nv; ++v) p.objective.add(v, coef(rng));
  return p;
}

}  // namespace

TEST(LpFixtures, SuiteSolvesWithValidCertificates) {
  const auto fixtures = testutil::lp_fixtures();
  ASSERT_GE(fixtures.size(), 20u);
  for (const auto& f : fixtures) {
    SCOPED_TRACE(f.name);
    const auto out = solve(f.problem);
    EXPECT_EQ(out.status, f.expected);
    EXPECT_TRUE(check_certificate(f.problem, out));
    if (f.value) EXPECT_EQ(out.value, *f.value);
    if (out.status == LPStatus::Optimal && f.problem.num_vars <= 4) {
      const auto brute = oracle::vertex_minimum(f.problem);
      ASSERT_TRUE(brute.has_value());
      EXPECT_EQ(*brute, out.value);
    }
    if (out.status == LPStatus::Infeasible && f.problem.num_vars <= 4) {
      EXPECT_FALSE(oracle::vertex_minimum(f.problem).has_value());
    }
    std::istringstream text(write_outcome(out));
    EXPECT_EQ(read_outcome(text), out);
  }
}

TEST(Lp, MinimizeSingleBound) {
  LPProblem p;
  p.num_vars = 1;
  p.objective.add(0, 1);
  Row r;
  r.form.add(0, 1);
  p.constraints.rows.push_back(r);
  const auto out = solve(p);
  ASSERT_EQ(out.status, LPStatus::Optimal);
  EXPECT_EQ(out.value, 0);
  EXPECT_EQ(out.multipliers, std::vector<Rational>{1});
}

TEST(Lp, NegatedMultiplierIsRejected) {
  for (const auto& f : testutil::lp_fixtures()) {
    auto out = solve(f.problem);
    if (out.status == LPStatus::Unbounded) continue;
    for (auto& m : out.multipliers) {
      if (m != 0 && out.status != LPStatus::Optimal) {
        m = -m;
        EXPECT_FALSE(check_certificate(f.problem, out)) << f.name;
        break;
      }
      if (m > 0) {
        m = -m;
        EXPECT_FALSE(check_certificate(f.problem, out)) << f.name;
        break;
      }
    }
  }
}

TEST(Lp, HandBuiltFarkasWitness) {
  LPProblem p;
  p.num_vars = 1;
  Row a, b;
  a.form.constant = -1;
  a.form.add(0, 1);
  b.form.add(0, -1);
  p.constraints.rows = {a, b};
  LPOutcome claim;
  claim.status = LPStatus::Infeasible;
  claim.multipliers = {1, 1};
  EXPECT_TRUE(check_certificate(p, claim));
  claim.multipliers = {1, 2};
  EXPECT_FALSE(check_certificate(p, claim));
  claim.multipliers = {-1, -1};
  EXPECT_FALSE(check_certificate(p, claim));
}

TEST(Lp, TamperedClaimsAreRejected) {
  for (const auto& f : testutil::lp_fixtures()) {
    const auto out = solve(f.problem);
    if (out.status == LPStatus::Optimal) {
      auto wrong = out;
      wrong.value += 1;
      EXPECT_FALSE(check_certificate(f.problem, wrong)) << f.name;
    } else if (out.status == LPStatus::Unbounded) {
      auto wrong = out;
      for (auto& r : wrong.ray) r = -r;
      EXPECT_FALSE(check_certificate(f.problem, wrong)) << f.name;
      auto claim_optimal = out;
      claim_optimal.status = LPStatus::Optimal;
      EXPECT_FALSE(check_certificate(f.problem, claim_optimal)) << f.name;
    }
  }
}

TEST(Lp, RandomProblemsAgreeWithVertexEnumeration) {
  std::mt19937_64 rng(testutil::seed());
  for (int i = 0; i < 60; ++i) {
    const int nv = 2 + i % 3;
    const auto p = random_bounded_lp(rng, nv, 3 + i % 4);
    const auto out = solve(p);
    ASSERT_EQ(out.status, LPStatus::Optimal);
    EXPECT_TRUE(check_certificate(p, out));
    EXPECT_EQ(out.value, *oracle::vertex_minimum(p));
    for (const auto& row : p.constraints.rows) EXPECT_GE(row.form.evaluate(out.point), 0);
  }
}

TEST(Lp, ScalingRowsKeepsTheOptimalPoint) {
  std::mt19937_64 rng(testutil::seed() + 1);
  std::uniform_int_distribution<int> num(1, 9), den(1, 5);
  for (int i = 0; i < 30; ++i) {
    const auto p = random_bounded_lp(rng, 3, 4);
    auto scaled = p;
    std::vector<Rational> factors;
    for (auto& row : scaled.constraints.rows) {
      factors.push_back(make_rational(num(rng), den(rng)));
      row.form *= factors.back();
    }
    const auto a = solve(p), b = solve(scaled);
    ASSERT_EQ(a.status, LPStatus::Optimal);
    ASSERT_EQ(b.status, LPStatus::Optimal);
    EXPECT_EQ(a.point, b.point);
    EXPECT_EQ(a.value, b.value);
    for (std::size_t r = 0; r < factors.size(); ++r) EXPECT_EQ(b.multipliers[r] * factors[r], a.multipliers[r]);
    EXPECT_TRUE(check_certificate(scaled, b));
  }
}

TEST(Lp, DimensionMismatchIsAnError) {
  LPProblem p;
  p.num_vars = 1;
  Row r;
  r.form.add(3, 1);
  p.constraints.rows.push_back(r);
  EXPECT_THROW(solve(p), std::invalid_argument);
}

TEST(Lp, IdentifyAlphaBeta) {
  const int n = 3;
  LPProblem p;
  p.num_vars = 3 * n;
  p.objective.add(0, 1);
  p.objective.add(3, 2);
  p.objective.add(6, 5);
  const auto q = identify_alpha_beta(p, n);
  EXPECT_EQ(q.num_vars, 2 * n);
  EXPECT_EQ(q.objective.coeff(0), 3);
  EXPECT_EQ(q.objective.coeff(3), 5);
  const std::vector<Rational> x{1, 2, 3, 4, 5, 6};
  EXPECT_EQ(expand_identified(x, n), (std::vector<Rational>{1, 2, 3, 1, 2, 3, 4, 5, 6}));
}

TEST(Lp, OutcomeTextIsStable) {
  LPOutcome out;
  out.status = LPStatus::Optimal;
  out.point = {make_rational(1, 2), 0};
  out.value = make_rational(-1, 17);
  out.multipliers = {0, 3, make_rational(2, 5)};
  EXPECT_EQ(write_outcome(out), "HORNLAB-LP v1 status=optimal vars=2 rows=3\nvalue -1/17\npoint 1/2 0\ncert 2 3\ncert 3 2/5\n");
}

TEST(Lp, RosterRelaxationAtFifteen) {
  SeparationConfig cfg;
  cfg.n = 15;
  cfg.objective = read_index_file(testutil::data_path("t0.idx")).at(0);
  for (const auto& t : read_index_file(testutil::data_path("roster.idx"))) {
    cfg.indices.push_back(t);
    if (t.a != t.b) cfg.indices.push_back(swap_ab(t));
  }
  cfg.translate = true;
  // Build and solve directly, skipping the n = 15 DeltaK verification.
  LPProblem full;
  full.num_vars = 45;
  full.objective = halfspace_form(cfg.objective);
  full.constraints = alcove_constraints(15);
  for (const auto& t : cfg.indices) {
    for (const auto& g : group_elements(15, Group::G)) {
      full.constraints.rows.push_back({RowKind::Ge, AffineAction(g, 15).pull_back(halfspace_form(t)), {}});
    }
  }
  const auto reduced = identify_alpha_beta(full, 15);
  const auto out = solve(reduced);
  ASSERT_EQ(out.status, LPStatus::Optimal);
  EXPECT_TRUE(check_certificate(reduced, out));
  EXPECT_LE(out.value, make_rational(-1, 17));
}
