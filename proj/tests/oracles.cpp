#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

namespace {

Shape trimmed(Shape s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

int at(const Shape& s, std::size_t i) { return i < s.size() ? s[i] : 0; }

}  // namespace

long long lr_by_tableaux(const Shape& inner_in, const Shape& content_in, const Shape& outer_in) {
  const Shape inner = trimmed(inner_in), content = trimmed(content_in), outer = trimmed(outer_in);
  int cells = 0;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (at(inner, i) > outer[i]) return 0;
    cells += outer[i] - at(inner, i);
  }
  if (inner.size() > outer.size()) return 0;
  int weight = 0;
  for (int c : content) weight += c;
  if (weight != cells) return 0;

  // Cells in reading order: rows top to bottom, each right to left.
  std::vector<std::pair<int, int>> order;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    for (int j = outer[i] - 1; j >= at(inner, i); --j) order.emplace_back(static_cast<int>(i), j);
  }
  std::map<std::pair<int, int>, int> fill;
  std::vector<int> used(content.size() + 1, 0);
  const int labels = static_cast<int>(content.size());
  long long count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t pos) {
    if (pos == order.size()) {
      ++count;
      return;
    }
    const auto [i, j] = order[pos];
    for (int v = 1; v <= labels; ++v) {
      if (used[static_cast<std::size_t>(v)] == content[static_cast<std::size_t>(v - 1)]) continue;
      // Reading word must stay a lattice word.
      if (v > 1 && used[static_cast<std::size_t>(v)] + 1 > used[static_cast<std::size_t>(v - 1)]) continue;
      // Row weakly increasing left to right: the cell to the right was filled already.
      auto right = fill.find({i, j + 1});
      if (right != fill.end() && right->second < v) continue;
      auto above = fill.find({i - 1, j});
      if (above != fill.end() && above->second >= v) continue;
      fill[{i, j}] = v;
      ++used[static_cast<std::size_t>(v)];
      go(pos + 1);
      --used[static_cast<std::size_t>(v)];
      fill.erase({i, j});
    }
  };
  go(0);
  return count;
}

std::optional<Reduced> rim_hook_reduce(Shape s, int r, int k) {
  const int n = r + k;
  Reduced out;
  s = trimmed(s);
  if (static_cast<int>(s.size()) > r) return std::nullopt;
  while (!s.empty() && s[0] > k) {
    bool removed = false;
    for (std::size_t h = 1; h <= s.size() && !removed; ++h) {
      // Strip covering rows 0..h-1, head at the end of row 0.
      Shape m = s;
      int taken = 0;
      for (std::size_t i = 0; i + 1 < h; ++i) {
        m[i] = s[i + 1] - 1;
        taken += s[i] - m[i];
      }
      const int last = s[h - 1] - (n - taken);
      if (last < at(s, h) || last >= s[h - 1]) continue;
      bool ok = true;
      for (std::size_t i = 0; i + 1 < h; ++i) ok = ok && m[i] >= 0 && m[i] < s[i];
      if (!ok) continue;
      m[h - 1] = last;
      s = trimmed(m);
      out.d += 1;
      if ((r - static_cast<int>(h)) % 2 != 0) out.sign = -out.sign;
      removed = true;
    }
    if (!removed) return std::nullopt;
  }
  out.c = s;
  out.c.resize(static_cast<std::size_t>(r), 0);
  return out;
}

std::map<std::pair<Shape, int>, long long> quantum_product(const Shape& a, const Shape& b, int r, int k) {
  int total = 0;
  for (int x : a) total += x;
  for (int x : b) total += x;
  std::map<std::pair<Shape, int>, long long> out;
  // Every shape with <= r rows and weight |a| + |b| containing a.
  Shape nu(static_cast<std::size_t>(r), 0);
  std::function<void(std::size_t, int, int)> go = [&](std::size_t row, int left, int cap) {
    if (row == nu.size()) {
      if (left != 0) return;
      const long long c = lr_by_tableaux(a, b, nu);
      if (c == 0) return;
      auto red = rim_hook_reduce(nu, r, k);
      if (!red) return;
      out[{red->c, red->d}] += red->sign * c;
      return;
    }
    for (int v = std::min(cap, left); v >= at(a, row); --v) {
      nu[row] = v;
      go(row + 1, left - v, v);
    }
    nu[row] = 0;
  };
  go(0, total, total);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

using hornlab::Rational;

// Solves the square system exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

}  // namespace

std::optional<Rational> vertex_minimum(const hornlab::LPProblem& p) {
  const auto& rows = p.constraints.rows;
  const auto nv = static_cast<std::size_t>(p.num_vars);
  std::optional<Rational> best;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    if (pick.size() == nv) {
      std::vector<std::vector<Rational>> m;
      std::vector<Rational> rhs;
      for (auto i : pick) {
        std::vector<Rational> row(nv);
        for (const auto& [v, a] : rows[i].form.terms) row[static_cast<std::size_t>(v)] = a;
        m.push_back(row);
        rhs.push_back(-rows[i].form.constant);
      }
      auto x = solve_square(m, rhs);
      if (!x) return;
      for (const auto& row : rows) {
        const Rational v = row.form.evaluate(*x);
        if (row.kind == hornlab::RowKind::Eq ? v != 0 : v < 0) return;
      }
      const Rational val = p.objective.evaluate(*x);
      if (!best || val < *best) best = val;
      return;
    }
    for (std::size_t i = start; i < rows.size(); ++i) {
      pick.push_back(i);
      go(i + 1);
      pick.pop_back();
    }
  };
  go(0);
  return best;
}

std::size_t count_unit_indices(int n) {
  std::size_t count = 0;
  for (int r = 1; r < n; ++r) {
    const int k = n - r;
    for (const auto& a : hornlab::enumerate_partitions(r, k)) {
      for (const auto& b : hornlab::enumerate_partitions(r, k)) {
        const auto pa = a.parts(), pb = b.parts();
        const Shape sa = hornlab::normalize_shape(pa), sb = hornlab::normalize_shape(pb);
        for (const auto& [key, coeff] : quantum_product(sa, sb, r, k)) {
          if (coeff == 1) ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace oracle
