#include "hornlab/littlewood_richardson.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hornlab {

Shape normalize_shape(std::span<const int> parts) {
  Shape out(parts.begin(), parts.end());
  while (!out.empty() && out.back() == 0) out.pop_back();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0 || (i > 0 && out[i] > out[i - 1])) {
      throw std::invalid_argument("shape parts must be non-negative and weakly decreasing");
    }
  }
  return out;
}

namespace {

// Row-by-row enumeration of LR tableaux on outer/inner with content b.
// Rows are filled top to bottom; inside a row the letters are weakly
// increasing left to right, so a row is a run of m_1 ones, m_2 twos, ...
// Reading right to left puts all copies of L before any L-1 of the same
// row, so the lattice condition for the row is count_before[L] + m_L <=
// count_before[L-1].
//
// Every completed tableau adds exactly one to a counter, so uint64 counts
// cannot overflow within any feasible running time.
class LrFiller {
 public:
  LrFiller(const Shape& inner, const Shape& content, int rows, const Shape* fixed_outer)
      : content_(content), rows_(rows), fixed_(fixed_outer) {
    inner_.assign(static_cast<std::size_t>(rows_), 0);
    std::copy(inner.begin(), inner.end(), inner_.begin());
    outer_.assign(static_cast<std::size_t>(rows_), 0);
    letters_.assign(static_cast<std::size_t>(rows_), {});
    count_.assign(content_.size() + 1, 0);
    remaining_ = std::accumulate(content_.begin(), content_.end(), 0);
    if (fixed_) {
      fixed_padded_.assign(static_cast<std::size_t>(rows_), 0);
      std::copy(fixed_->begin(), fixed_->end(), fixed_padded_.begin());
    }
  }

  template <class OnComplete>
  void run(OnComplete&& on_complete) {
    fill_row(0, on_complete);
  }

 private:
  int above_letter(int row, int col) const {
    // row >= 0; columns left of the inner shape carry no letter.
    const auto r = static_cast<std::size_t>(row);
    if (col < inner_[r]) return 0;
    return letters_[r][static_cast<std::size_t>(col - inner_[r])];
  }

  int cap_for_row(int i) const {
    if (fixed_) return fixed_padded_[static_cast<std::size_t>(i)];
    if (i == 0) return std::numeric_limits<int>::max() / 2;
    return outer_[static_cast<std::size_t>(i - 1)];
  }

  template <class OnComplete>
  void fill_row(int i, OnComplete& on_complete) {
    if (remaining_ == 0) {
      for (int j = i; j < rows_; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        if (fixed_ && fixed_padded_[jj] != inner_[jj]) return;
        outer_[jj] = inner_[jj];
      }
      on_complete(outer_);
      return;
    }
    if (i >= rows_) return;
    // Capacity of the rows still to be filled.
    long capacity = 0;
    const long cap = cap_for_row(i);
    for (int j = i; j < rows_; ++j) {
      const long row_cap = fixed_ ? fixed_padded_[static_cast<std::size_t>(j)] : cap;
      capacity += std::max(0L, row_cap - inner_[static_cast<std::size_t>(j)]);
    }
    if (capacity < remaining_) return;
    if (inner_[static_cast<std::size_t>(i)] > cap) return;
    prev_.push_back(count_);
    place(i, 1, inner_[static_cast<std::size_t>(i)], on_complete);
    prev_.pop_back();
  }

  template <class OnComplete>
  void place(int i, int letter, int pos, OnComplete& on_complete) {
    const auto row = static_cast<std::size_t>(i);
    const int cap = cap_for_row(i);
    if (letter > static_cast<int>(content_.size())) {
      if (fixed_ && pos != cap) return;
      outer_[row] = pos;
      fill_row(i + 1, on_complete);
      return;
    }
    const auto L = static_cast<std::size_t>(letter);
    const auto& before = prev_.back();
    long max_m = content_[L - 1] - count_[L];
    if (letter >= 2) max_m = std::min<long>(max_m, before[L - 1] - before[L]);
    max_m = std::min<long>(max_m, static_cast<long>(cap) - pos);
    if (i > 0) {
      // Column strictness against the row above.
      int limit = pos;
      const int above_end = outer_[row - 1];
      while (limit < above_end && limit < pos + max_m && above_letter(i - 1, limit) < letter) ++limit;
      max_m = std::min<long>(max_m, limit - pos);
    }
    for (long m = max_m; m >= 0; --m) {
      for (long t = 0; t < m; ++t) letters_[row].push_back(static_cast<std::uint8_t>(letter));
      count_[L] += static_cast<int>(m);
      remaining_ -= static_cast<int>(m);
      place(i, letter + 1, pos + static_cast<int>(m), on_complete);
      remaining_ += static_cast<int>(m);
      count_[L] -= static_cast<int>(m);
      letters_[row].resize(letters_[row].size() - static_cast<std::size_t>(m));
    }
  }

  Shape inner_;
  Shape content_;
  int rows_;
  const Shape* fixed_;
  Shape fixed_padded_;
  std::vector<int> outer_;
  std::vector<std::vector<std::uint8_t>> letters_;
  std::vector<int> count_;
  std::vector<std::vector<int>> prev_;
  int remaining_ = 0;
};

int total(const Shape& s) { return std::accumulate(s.begin(), s.end(), 0); }

}  // namespace

Integer classical_lr(std::span<const int> inner, std::span<const int> content,
                     std::span<const int> outer) {
  const Shape a = normalize_shape(inner);
  const Shape b = normalize_shape(content);
  const Shape c = normalize_shape(outer);
  if (total(a) + total(b) != total(c)) return 0;
  if (a.size() > c.size()) return 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > c[i]) return 0;
  }
  std::uint64_t count = 0;
  LrFiller filler(a, b, static_cast<int>(c.size()), &c);
  filler.run([&](const std::vector<int>&) { ++count; });
  return Integer(static_cast<unsigned long>(count));
}

std::map<Shape, Integer> classical_product(std::span<const int> a_parts, std::span<const int> b_parts,
                                           int max_rows) {
  const Shape a = normalize_shape(a_parts);
  const Shape b = normalize_shape(b_parts);
  int rows = static_cast<int>(a.size() + b.size());
  if (max_rows > 0) rows = std::min(rows, max_rows);
  std::map<Shape, Integer> out;
  if (static_cast<int>(a.size()) > rows) return out;
  std::map<Shape, std::uint64_t> counts;
  LrFiller filler(a, b, std::max(rows, 1), nullptr);
  filler.run([&](const std::vector<int>& outer) { ++counts[normalize_shape(outer)]; });
  for (auto& [shape, cnt] : counts) out.emplace(shape, Integer(static_cast<unsigned long>(cnt)));
  return out;
}

}  // namespace hornlab
