#include <gtest/gtest.h>

#include <map>

#include "hornlab/scanner.hpp"
#include "hornlab/schubert.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hornlab;

namespace {

using Poly = std::map<std::pair<Partition, int>, Integer>;

Poly to_poly(const ProductExpansion& e, int shift = 0, const Integer& scale = 1) {
  Poly out;
  for (const auto& t : e) out[{t.c, t.d + shift}] += t.coeff * scale;
  return out;
}

Poly times(const Poly& p, const Partition& c) {
  Poly out;
  for (const auto& [key, coeff] : p) {
    for (const auto& [k2, v] : to_poly(*quantum_product(key.first, c), key.second, coeff)) out[k2] += v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TEST(QuantumProduct, SmallKnownProducts) {
  // P^1: sigma_1^2 = q.
  auto p1 = quantum_product(Partition(1, 1, {1}), Partition(1, 1, {1}));
  ASSERT_EQ(p1->size(), 1u);
  EXPECT_EQ((*p1)[0].c, Partition::empty(1, 1));
  EXPECT_EQ((*p1)[0].d, 1);
  EXPECT_EQ((*p1)[0].coeff, 1);

  // G(2,4): sigma_22^2 = q^2, sigma_1 sigma_21 = sigma_22 + q.
  auto sq = quantum_product(Partition(2, 2, {2, 2}), Partition(2, 2, {2, 2}));
  ASSERT_EQ(sq->size(), 1u);
  EXPECT_EQ((*sq)[0].c, Partition::empty(2, 2));
  EXPECT_EQ((*sq)[0].d, 2);
  auto mix = quantum_product(Partition(2, 2, {1}), Partition(2, 2, {2, 1}));
  Poly expect{{{Partition::empty(2, 2), 1}, 1}, {{Partition(2, 2, {2, 2}), 0}, 1}};
  EXPECT_EQ(to_poly(*mix), expect);
}

TEST(QuantumProduct, MatchesRimHookOracleUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    for (int r = 1; r < n; ++r) {
      const int k = n - r;
      const auto all = enumerate_partitions(r, k);
      for (const auto& a : all) {
        for (const auto& b : all) {
          auto expected = oracle::quantum_product(a.parts(), b.parts(), r, k);
          std::map<std::pair<std::vector<int>, int>, long long> got;
          for (const auto& t : compute_quantum_product(a, b)) got[{t.c.parts(), t.d}] = t.coeff.get_si();
          ASSERT_EQ(got, expected) << "n=" << n << " a=" << to_text(a) << " b=" << to_text(b);
        }
      }
    }
  }
}

TEST(QuantumProduct, RimHookReductionAgreesWithOracle) {
  for (int r = 1; r <= 4; ++r) {
    for (int k = 1; k <= 4; ++k) {
      // Every shape with at most r rows and first part at most 2(r+k).
      for (const auto& big : enumerate_partitions(r, 2 * (r + k))) {
        auto shape = big.parts();
        auto mine = reduce_to_box(shape, r, k);
        auto ref = oracle::rim_hook_reduce(shape, r, k);
        ASSERT_EQ(mine.has_value(), ref.has_value()) << to_text(big);
        if (!mine) continue;
        EXPECT_EQ(mine->c.parts(), ref->c);
        EXPECT_EQ(mine->d, ref->d);
        EXPECT_EQ(mine->sign, ref->sign);
      }
    }
  }
}

TEST(QuantumProduct, CommutativeAndAssociative) {
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r < n; ++r) {
      const auto all = enumerate_partitions(r, n - r);
      for (const auto& a : all) {
        for (const auto& b : all) {
          ASSERT_EQ(*quantum_product(a, b), *quantum_product(b, a));
          for (const auto& c : all) {
            ASSERT_EQ(times(to_poly(*quantum_product(a, b)), c), times(to_poly(*quantum_product(b, c)), a))
                << to_text(a) << " " << to_text(b) << " " << to_text(c);
          }
        }
      }
    }
  }
}

TEST(QuantumLR, DirectRouteEqualsProductRoute) {
  for (int n = 2; n <= 6; ++n) {
    for (int r = 1; r < n; ++r) {
      const auto all = enumerate_partitions(r, n - r);
      for (const auto& a : all) {
        for (const auto& b : all) {
          for (const auto& c : all) {
            const int diff = a.weight() + b.weight() - c.weight();
            if (diff < 0 || diff % n != 0) continue;
            const QIndex t{r, n - r, a, b, c, diff / n};
            ASSERT_EQ(quantum_lr(t), quantum_lr_from_product(t)) << to_text(t);
            if (t.d == 0) ASSERT_EQ(quantum_lr(t), classical_lr(a, b, c));
          }
        }
      }
    }
  }
}

TEST(QuantumLR, DegreeInconsistentIsZero) {
  const QIndex t{2, 2, Partition(2, 2, {1}), Partition(2, 2, {1}), Partition(2, 2, {1}), 0};
  EXPECT_FALSE(t.degree_consistent());
  EXPECT_EQ(quantum_lr(t), 0);
  QIndex neg = t;
  neg.d = -1;
  EXPECT_EQ(quantum_lr(neg), 0);
}

TEST(QuantumLR, FixtureIndicesHaveCoefficientOne) {
  EXPECT_EQ(quantum_lr(read_index_file(testutil::data_path("t0.idx")).at(0)), 1);
  for (const auto& t : read_index_file(testutil::data_path("roster.idx"))) EXPECT_EQ(quantum_lr(t), 1) << to_text(t);
}

TEST(QIndexText, RoundTripAndOrder) {
  std::mt19937_64 rng(testutil::seed());
  for (int i = 0; i < 200; ++i) {
    const auto t = testutil::random_index(rng, 7);
    EXPECT_EQ(parse_qindex(to_text(t)), t);
  }
  const auto t0 = parse_qindex("6 9 ; 663300 ; 663300 ; 666300 ; 1");
  EXPECT_EQ(to_text(t0), "6 9 ; 6,6,3,3,0,0 ; 6,6,3,3,0,0 ; 6,6,6,3,0,0 ; 1");
  EXPECT_THROW(parse_qindex("6 9 ; 663300 ; 663300 ; 666300"), ParseError);
  auto lower = t0;
  lower.d = 0;
  EXPECT_LT(lower, t0);
}

TEST(UnitStream, ResumeReproducesTail) {
  UnitIndexStream full(5, all_strata(5), false);
  std::vector<QIndex> all;
  std::vector<UnitIndexStream::Cursor> cursors;
  while (true) {
    cursors.push_back(full.cursor());
    auto t = full.next();
    if (!t) break;
    all.push_back(*t);
  }
  ASSERT_GT(all.size(), 10u);
  for (std::size_t cut : {std::size_t{0}, all.size() / 3, all.size() - 1}) {
    const auto token = cursors[cut].to_text();
    UnitIndexStream resumed(5, all_strata(5), false, UnitIndexStream::Cursor::parse(token));
    std::vector<QIndex> tail;
    while (auto t = resumed.next()) tail.push_back(*t);
    EXPECT_EQ(tail, std::vector<QIndex>(all.begin() + static_cast<long>(cut), all.end()));
  }
  for (const auto& t : all) EXPECT_EQ(quantum_lr(t), 1);
}

TEST(UnitStream, DegreeZeroOnlyIsClassicalSlice) {
  UnitIndexStream full(5, all_strata(5), false);
  UnitIndexStream classical(5, all_strata(5), true);
  std::vector<QIndex> expect, got;
  while (auto t = full.next()) {
    if (t->d == 0) expect.push_back(*t);
  }
  while (auto t = classical.next()) got.push_back(*t);
  EXPECT_EQ(got, expect);
}
