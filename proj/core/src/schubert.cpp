#include "hornlab/schubert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hornlab/product_cache.hpp"

namespace hornlab {

std::strong_ordering operator<=>(const QIndex& x, const QIndex& y) {
  if (auto cmp = x.d <=> y.d; cmp != 0) return cmp;
  if (auto cmp = x.r <=> y.r; cmp != 0) return cmp;
  if (auto cmp = x.k <=> y.k; cmp != 0) return cmp;
  if (auto cmp = x.a <=> y.a; cmp != 0) return cmp;
  if (auto cmp = x.b <=> y.b; cmp != 0) return cmp;
  return x.c <=> y.c;
}

std::size_t QIndex::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(r) * 31u + static_cast<std::size_t>(k);
  h = h * 0x9e3779b97f4a7c15ull ^ a.hash();
  h = h * 0x9e3779b97f4a7c15ull ^ b.hash();
  h = h * 0x9e3779b97f4a7c15ull ^ c.hash();
  return h * 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(d + 1024);
}

std::string to_text(const QIndex& t) {
  return std::to_string(t.r) + " " + std::to_string(t.k) + " ; " + to_text(t.a) + " ; " + to_text(t.b) +
         " ; " + to_text(t.c) + " ; " + std::to_string(t.d);
}

QIndex parse_qindex(std::string_view text) {
  auto fields = split(trim(text), ';');
  if (fields.size() != 5) throw ParseError("index needs 5 ';'-separated fields: '" + std::string(text) + "'");
  auto head = split_ws(fields[0]);
  if (head.size() != 2) throw ParseError("index must start with 'r k'");
  QIndex t;
  t.r = parse_int(head[0]);
  t.k = parse_int(head[1]);
  if (t.r < 1 || t.k < 1 || t.r + t.k > kMaxN) throw ParseError("index box out of range");
  t.a = parse_partition(fields[1], t.r, t.k);
  t.b = parse_partition(fields[2], t.r, t.k);
  t.c = parse_partition(fields[3], t.r, t.k);
  t.d = parse_int(fields[4]);
  return t;
}

namespace {

// Sorts `values` descending in place; returns the parity of the sorting
// permutation, or nullopt if two values coincide.
std::optional<int> sort_descending_with_sign(std::vector<int>& values) {
  int inversions = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) return std::nullopt;
      if (values[i] < values[j]) ++inversions;
    }
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return (inversions % 2 == 0) ? 1 : -1;
}

int wrap_sign(int r, int d) { return ((r - 1) * d) % 2 == 0 ? 1 : -1; }

}  // namespace

std::optional<BoxReduction> reduce_to_box(std::span<const int> shape, int r, int k) {
  const int n = r + k;
  const Shape s = normalize_shape(shape);
  if (static_cast<int>(s.size()) > r) return std::nullopt;
  std::vector<int> residues(static_cast<std::size_t>(r));
  int d = 0;
  for (int i = 0; i < r; ++i) {
    const int part = i < static_cast<int>(s.size()) ? s[static_cast<std::size_t>(i)] : 0;
    const int beta = part + r - 1 - i;
    d += beta / n;
    residues[static_cast<std::size_t>(i)] = beta % n;
  }
  auto parity = sort_descending_with_sign(residues);
  if (!parity) return std::nullopt;
  std::vector<int> parts(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) parts[static_cast<std::size_t>(i)] = residues[static_cast<std::size_t>(i)] - (r - 1 - i);
  return BoxReduction{Partition(r, k, parts), d, *parity * wrap_sign(r, d)};
}

ProductExpansion compute_quantum_product(const Partition& a, const Partition& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("quantum_product: partitions live in different rectangles");
  }
  const int r = a.rows();
  const int k = a.cols();
  std::map<std::pair<Partition, int>, Integer> acc;
  for (const auto& [shape, coeff] : classical_product(a.parts(), b.parts(), r)) {
    auto red = reduce_to_box(shape, r, k);
    if (!red) continue;
    auto& slot = acc[{red->c, red->d}];
    if (red->sign > 0) {
      slot += coeff;
    } else {
      slot -= coeff;
    }
  }
  ProductExpansion out;
  for (auto& [key, coeff] : acc) {
    if (coeff == 0) continue;
    if (coeff < 0) throw std::logic_error("negative quantum structure constant");
    out.push_back(ProductTerm{key.first, key.second, coeff});
  }
  return out;
}

std::shared_ptr<const ProductExpansion> quantum_product(const Partition& a, const Partition& b) {
  return ProductCache::global().get(a, b);
}

Integer classical_lr(const Partition& a, const Partition& b, const Partition& c) {
  return classical_lr(a.parts(), b.parts(), c.parts());
}

Integer quantum_lr(const QIndex& t) {
  if (!t.valid() || !t.degree_consistent()) return 0;
  const int r = t.r;
  const int n = t.n();
  std::vector<int> beta(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) beta[static_cast<std::size_t>(i)] = t.c[i] + r - 1 - i;
  const std::vector<int> a = t.a.parts();
  const std::vector<int> b = t.b.parts();
  Integer total = 0;
  // Distribute d wraps over the r abacus beads.
  std::vector<int> wraps(static_cast<std::size_t>(r), 0);
  auto visit = [&](auto&& self, int i, int left) -> void {
    if (i == r - 1) {
      wraps[static_cast<std::size_t>(i)] = left;
      std::vector<int> lifted(static_cast<std::size_t>(r));
      for (int j = 0; j < r; ++j) {
        lifted[static_cast<std::size_t>(j)] = beta[static_cast<std::size_t>(j)] + n * wraps[static_cast<std::size_t>(j)];
      }
      auto parity = sort_descending_with_sign(lifted);
      if (!parity) return;
      std::vector<int> nu(static_cast<std::size_t>(r));
      for (int j = 0; j < r; ++j) nu[static_cast<std::size_t>(j)] = lifted[static_cast<std::size_t>(j)] - (r - 1 - j);
      Integer value = hornlab::classical_lr(a, b, nu);
      if (value == 0) return;
      if (*parity * wrap_sign(r, t.d) > 0) {
        total += value;
      } else {
        total -= value;
      }
      return;
    }
    for (int m = 0; m <= left; ++m) {
      wraps[static_cast<std::size_t>(i)] = m;
      self(self, i + 1, left - m);
    }
  };
  visit(visit, 0, t.d);
  return total;
}

Integer quantum_lr_from_product(const QIndex& t) {
  if (!t.valid() || !t.degree_consistent()) return 0;
  auto product = quantum_product(t.a, t.b);
  for (const auto& term : *product) {
    if (term.c == t.c && term.d == t.d) return term.coeff;
  }
  return 0;
}

std::vector<Stratum> all_strata(int n) {
  std::vector<Stratum> out;
  for (int r = 1; r < n; ++r) out.push_back({r, n - r});
  return out;
}

std::vector<Stratum> reduced_strata(int n) {
  std::vector<Stratum> out;
  for (int r = 1; 2 * r <= n; ++r) out.push_back({r, n - r});
  return out;
}

std::string UnitIndexStream::Cursor::to_text() const {
  return std::to_string(stratum) + ":" + std::to_string(a) + ":" + std::to_string(b) + ":" + std::to_string(term);
}

UnitIndexStream::Cursor UnitIndexStream::Cursor::parse(std::string_view text) {
  auto f = split(trim(text), ':');
  if (f.size() != 4) throw ParseError("malformed stream cursor '" + std::string(text) + "'");
  Cursor c;
  c.stratum = static_cast<std::size_t>(parse_int(f[0]));
  c.a = static_cast<std::size_t>(parse_int(f[1]));
  c.b = static_cast<std::size_t>(parse_int(f[2]));
  c.term = static_cast<std::size_t>(parse_int(f[3]));
  return c;
}

UnitIndexStream::UnitIndexStream(int n, std::vector<Stratum> strata, bool degree_zero_only)
    : UnitIndexStream(n, std::move(strata), degree_zero_only, Cursor{}) {}

UnitIndexStream::UnitIndexStream(int n, std::vector<Stratum> strata, bool degree_zero_only, Cursor start)
    : n_(n), strata_(std::move(strata)), degree_zero_only_(degree_zero_only), cursor_(start) {
  for (const auto& s : strata_) {
    if (s.r < 1 || s.k < 1 || s.r + s.k != n_) throw std::invalid_argument("stratum does not match n");
  }
}

void UnitIndexStream::load_pair() {
  const Partition& a = parts_[cursor_.a];
  const Partition& b = parts_[cursor_.b];
  current_.clear();
  if (degree_zero_only_) {
    for (const auto& [shape, coeff] : classical_product(a.parts(), b.parts(), a.rows())) {
      if (coeff != 1 || (!shape.empty() && shape[0] > a.cols())) continue;
      current_.push_back(ProductTerm{Partition(a.rows(), a.cols(), shape), 0, coeff});
    }
    std::sort(current_.begin(), current_.end(), [](const ProductTerm& x, const ProductTerm& y) { return x.c < y.c; });
  } else {
    for (const auto& term : *quantum_product(a, b)) {
      if (term.coeff == 1) current_.push_back(term);
    }
  }
  loaded_ = true;
}

std::optional<QIndex> UnitIndexStream::next() {
  for (;;) {
    if (cursor_.stratum >= strata_.size()) return std::nullopt;
    if (parts_stratum_ != cursor_.stratum) {
      const auto& s = strata_[cursor_.stratum];
      parts_ = enumerate_partitions(s.r, s.k);
      parts_stratum_ = cursor_.stratum;
      loaded_ = false;
    }
    if (cursor_.a >= parts_.size()) {
      cursor_ = Cursor{cursor_.stratum + 1, 0, 0, 0};
      loaded_ = false;
      continue;
    }
    if (cursor_.b >= parts_.size()) {
      cursor_ = Cursor{cursor_.stratum, cursor_.a + 1, 0, 0};
      loaded_ = false;
      continue;
    }
    if (!loaded_) load_pair();
    if (cursor_.term < current_.size()) {
      const auto& term = current_[cursor_.term++];
      const auto& s = strata_[cursor_.stratum];
      return QIndex{s.r, s.k, parts_[cursor_.a], parts_[cursor_.b], term.c, term.d};
    }
    cursor_ = Cursor{cursor_.stratum, cursor_.a, cursor_.b + 1, 0};
    loaded_ = false;
  }
}

}  // namespace hornlab
