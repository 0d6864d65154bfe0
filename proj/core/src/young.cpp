#include "hornlab/young.hpp"

#include <stdexcept>

#include "hornlab/rational.hpp"

namespace hornlab {

Partition::Partition(int rows, int cols, std::span<const int> parts) {
  if (rows < 1 || cols < 0 || rows + cols > kMaxN) {
    throw std::invalid_argument("partition box " + std::to_string(rows) + "x" + std::to_string(cols) +
                                " out of range");
  }
  if (static_cast<int>(parts.size()) > rows) {
    // Trailing zeros beyond the box are harmless padding.
    for (std::size_t i = static_cast<std::size_t>(rows); i < parts.size(); ++i) {
      if (parts[i] != 0) throw std::invalid_argument("partition has more than r nonzero parts");
    }
    parts = parts.first(static_cast<std::size_t>(rows));
  }
  rows_ = static_cast<std::uint8_t>(rows);
  cols_ = static_cast<std::uint8_t>(cols);
  int prev = cols;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0 || parts[i] > prev) {
      throw std::invalid_argument("parts must be weakly decreasing within [0, k]");
    }
    parts_[i] = static_cast<std::uint8_t>(parts[i]);
    prev = parts[i];
  }
}

int Partition::weight() const noexcept {
  int w = 0;
  for (int i = 0; i < rows_; ++i) w += parts_[static_cast<std::size_t>(i)];
  return w;
}

int Partition::length() const noexcept {
  int len = 0;
  while (len < rows_ && parts_[static_cast<std::size_t>(len)] != 0) ++len;
  return len;
}

std::vector<int> Partition::parts() const {
  return std::vector<int>(parts_.begin(), parts_.begin() + rows_);
}

std::size_t Partition::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(rows_) * 131u + cols_;
  for (int i = 0; i < rows_; ++i) h = h * 1000003u ^ parts_[static_cast<std::size_t>(i)];
  return h;
}

std::vector<Partition> enumerate_partitions(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> parts(static_cast<std::size_t>(rows), 0);
  // Lexicographic order: odometer on parts, last part fastest, subject to
  // the weakly decreasing constraint.
  std::function<void(int, int)> rec = [&](int i, int bound) {
    if (i == rows) {
      out.emplace_back(rows, cols, parts);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      parts[static_cast<std::size_t>(i)] = v;
      rec(i + 1, v);
    }
  };
  rec(0, cols);
  return out;
}

Partition conjugate(const Partition& a) {
  std::vector<int> conj(static_cast<std::size_t>(a.cols()), 0);
  for (int i = 1; i <= a.cols(); ++i) {
    int j = 0;
    while (j < a.rows() && a[j] >= i) ++j;
    conj[static_cast<std::size_t>(i - 1)] = j;
  }
  return Partition(a.cols(), a.rows(), conj);
}

Partition complement(const Partition& a) {
  std::vector<int> comp(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) comp[static_cast<std::size_t>(i)] = a.cols() - a[a.rows() - 1 - i];
  return Partition(a.rows(), a.cols(), comp);
}

std::string to_text(const Partition& a) {
  std::string out;
  for (int i = 0; i < a.rows(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(a[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text, int rows, int cols) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty partition");
  std::vector<int> parts;
  if (text.find(',') != std::string_view::npos || rows == 1) {
    for (auto tok : split(text, ',')) parts.push_back(parse_int(tok));
  } else if (text.size() == 1 || static_cast<int>(text.size()) == rows) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw ParseError("malformed partition '" + std::string(text) + "'");
      parts.push_back(ch - '0');
    }
  } else {
    throw ParseError("compact partition '" + std::string(text) + "' must have exactly r digits");
  }
  try {
    return Partition(rows, cols, parts);
  } catch (const std::invalid_argument& e) {
    throw ParseError("partition '" + std::string(text) + "': " + e.what());
  }
}

}  // namespace hornlab
