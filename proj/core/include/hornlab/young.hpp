#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hornlab {

/// Largest n = r + k supported by the fixed-width partition storage.
inline constexpr int kMaxN = 32;

/// A Young diagram inscribed in an r x k rectangle, stored as exactly r
/// weakly decreasing parts in [0, k]. Ordering is lexicographic on the
/// zero-padded part vector.
class Partition {
 public:
  Partition() = default;

  /// `parts` may be shorter than `rows`; missing parts are zero.
  /// Throws std::invalid_argument if the parts do not fit the r x k box
  /// or are not weakly decreasing.
  Partition(int rows, int cols, std::span<const int> parts);
  Partition(int rows, int cols, std::initializer_list<int> parts)
      : Partition(rows, cols, std::span<const int>(parts.begin(), parts.size())) {}

  static Partition empty(int rows, int cols) { return Partition(rows, cols, std::span<const int>{}); }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int operator[](int i) const noexcept { return parts_[static_cast<std::size_t>(i)]; }
  int weight() const noexcept;
  /// Number of nonzero parts.
  int length() const noexcept;
  std::vector<int> parts() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint8_t, kMaxN> parts_{};
  std::uint8_t rows_ = 0;
  std::uint8_t cols_ = 0;
};

/// All of P_{r,k} in lexicographically increasing order of the padded
/// part vector; exactly binomial(r+k, r) elements.
std::vector<Partition> enumerate_partitions(int rows, int cols);

/// Transposed diagram: a*_i = max{j : a_j >= i}, living in P_{k,r}.
Partition conjugate(const Partition& a);

/// (k - a_r, ..., k - a_1), the complementary diagram in the same box.
Partition complement(const Partition& a);

/// Canonical comma form, e.g. `6,6,3,3,0,0`.
std::string to_text(const Partition& a);

/// Accepts the canonical comma form or, when every part is at most 9, the
/// compact digit form `663300`. Shorter inputs are zero-padded to `rows`.
Partition parse_partition(std::string_view text, int rows, int cols);

}  // namespace hornlab

template <>
struct std::hash<hornlab::Partition> {
  std::size_t operator()(const hornlab::Partition& p) const noexcept { return p.hash(); }
};
