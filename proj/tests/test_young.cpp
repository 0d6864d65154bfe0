#include <gtest/gtest.h>

#include "hornlab/young.hpp"

using namespace hornlab;

namespace {

long long binomial(int n, int r) {
  long long v = 1;
  for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

}  // namespace

TEST(Partition, EnumerationCountsAndOrder) {
  for (int r = 1; r <= 5; ++r) {
    for (int k = 1; k <= 5; ++k) {
      const auto all = enumerate_partitions(r, k);
      EXPECT_EQ(static_cast<long long>(all.size()), binomial(r + k, r));
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
      EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
    }
  }
}

TEST(Partition, ConjugateAndComplementAreInvolutions) {
  for (const auto& a : enumerate_partitions(4, 3)) {
    const auto c = conjugate(a);
    EXPECT_EQ(c.rows(), 3);
    EXPECT_EQ(c.cols(), 4);
    EXPECT_EQ(c.weight(), a.weight());
    EXPECT_EQ(conjugate(c), a);
    EXPECT_EQ(complement(complement(a)), a);
    EXPECT_EQ(complement(a).weight(), 12 - a.weight());
  }
}

TEST(Partition, ConjugateExample) {
  EXPECT_EQ(conjugate(Partition(2, 13, {9, 5})), parse_partition("2,2,2,2,2,1,1,1,1,0,0,0,0", 13, 2));
}

TEST(Partition, RejectsBadShapes) {
  EXPECT_THROW(Partition(2, 3, {1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition(2, 3, {4, 0}), std::invalid_argument);
  EXPECT_THROW(Partition(2, 3, {1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(Partition(2, 3, {-1}), std::invalid_argument);
}

TEST(Partition, TextRoundTrip) {
  for (const auto& a : enumerate_partitions(3, 4)) EXPECT_EQ(parse_partition(to_text(a), 3, 4), a);
  EXPECT_EQ(parse_partition("663300", 6, 9), Partition(6, 9, {6, 6, 3, 3}));
  EXPECT_EQ(parse_partition("6,6,3,3", 6, 9), Partition(6, 9, {6, 6, 3, 3}));
  EXPECT_EQ(parse_partition("12", 1, 14), Partition(1, 14, {12}));
  EXPECT_THROW(parse_partition("6,x", 2, 9), std::exception);
}

TEST(Partition, WeightAndLength) {
  const Partition a(5, 4, {4, 2, 2});
  EXPECT_EQ(a.weight(), 8);
  EXPECT_EQ(a.length(), 3);
  EXPECT_EQ(a.parts(), (std::vector<int>{4, 2, 2, 0, 0}));
}
