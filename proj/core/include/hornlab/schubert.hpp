#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hornlab/littlewood_richardson.hpp"
#include "hornlab/rational.hpp"
#include "hornlab/young.hpp"

namespace hornlab {

/// t = (r, k; a, b, c; d): the coefficient of sigma_c q^d in sigma_a * sigma_b
/// inside QH*(G_r(C^n)), n = r + k. A negative d marks an index produced by
/// a group action that left the valid region.
struct QIndex {
  int r = 0;
  int k = 0;
  Partition a;
  Partition b;
  Partition c;
  int d = 0;

  int n() const noexcept { return r + k; }
  bool valid() const noexcept { return d >= 0; }
  /// n d = |a| + |b| - |c|.
  bool degree_consistent() const noexcept { return n() * d == a.weight() + b.weight() - c.weight(); }

  friend bool operator==(const QIndex&, const QIndex&) = default;
  /// Canonical order: (d, r, k, a, b, c), partitions lexicographic.
  friend std::strong_ordering operator<=>(const QIndex& x, const QIndex& y);

  std::size_t hash() const noexcept;
};

/// Bit-exact text: `r k ; a ; b ; c ; d` with canonical partitions.
std::string to_text(const QIndex& t);
QIndex parse_qindex(std::string_view text);

/// A single (c, d) entry of a quantum product.
struct ProductTerm {
  Partition c;
  int d = 0;
  Integer coeff;
  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

/// Expansion of sigma_a * sigma_b, sorted by (c, d); coefficients are strictly positive.
using ProductExpansion = std::vector<ProductTerm>;

/// Result of rewriting a Schur polynomial with at most r rows inside
/// QH*(G_r(C^n)): sigma_shape = sign * q^d * sigma_c.
struct BoxReduction {
  Partition c;
  int d = 0;
  int sign = 1;
};

/// n-rim-hook reduction via the abacus: beta_i = shape_i + r - i is reduced
/// modulo n, each wrap contributing (-1)^(r-1) q; the residues are sorted with
/// the permutation sign. Returns nullopt when residues collide (the class is 0).
std::optional<BoxReduction> reduce_to_box(std::span<const int> shape, int r, int k);

/// Full expansion through classical LR + rim-hook reduction (no cache).
ProductExpansion compute_quantum_product(const Partition& a, const Partition& b);

/// Memoized wrapper around compute_quantum_product; see ProductCache.
std::shared_ptr<const ProductExpansion> quantum_product(const Partition& a, const Partition& b);

/// Classical coefficient N_{ab}^c (d = 0 slice).
Integer classical_lr(const Partition& a, const Partition& b, const Partition& c);

/// N_t computed directly: sum over all lifts nu of c by d rim hooks of
/// +-c^nu_{ab}. Zero for degree-inconsistent or invalid indices.
Integer quantum_lr(const QIndex& t);

/// Same value read off the (cached) product expansion.
Integer quantum_lr_from_product(const QIndex& t);

struct Stratum {
  int r = 0;
  int k = 0;
  friend bool operator==(const Stratum&, const Stratum&) = default;
  friend auto operator<=>(const Stratum&, const Stratum&) = default;
};

/// Every (r, k) with r + k = n.
std::vector<Stratum> all_strata(int n);
/// Only r <= k; the rest is recovered through conjugation.
std::vector<Stratum> reduced_strata(int n);

/// Resumable enumeration of every t with N_t = 1 over the given strata, in
/// deterministic order (stratum, a, b, then (c, d)).
class UnitIndexStream {
 public:
  struct Cursor {
    std::size_t stratum = 0;
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t term = 0;
    std::string to_text() const;
    static Cursor parse(std::string_view text);
    friend bool operator==(const Cursor&, const Cursor&) = default;
  };

  /// degree_zero_only restricts to classical coefficients (d = 0).
  UnitIndexStream(int n, std::vector<Stratum> strata, bool degree_zero_only);
  UnitIndexStream(int n, std::vector<Stratum> strata, bool degree_zero_only, Cursor start);

  std::optional<QIndex> next();
  const Cursor& cursor() const noexcept { return cursor_; }

 private:
  void load_pair();

  int n_;
  std::vector<Stratum> strata_;
  bool degree_zero_only_;
  Cursor cursor_;
  std::vector<Partition> parts_;
  std::size_t parts_stratum_ = static_cast<std::size_t>(-1);
  ProductExpansion current_;
  bool loaded_ = false;
};

}  // namespace hornlab

template <>
struct std::hash<hornlab::QIndex> {
  std::size_t operator()(const hornlab::QIndex& t) const noexcept { return t.hash(); }
};
