#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hornlab/schubert.hpp"
#include "hornlab/spectrum.hpp"

namespace hornlab {

enum class Group { G, GTilde };

/// An element of G~ = (Z_n x Z_n) . G0. The pure part (i, j) is the central
/// element (w^i, w^j); the flags select a member of G0 = S3 x Z2 generated by
/// conjugation (star), a <-> b (swap) and Poincare duality (dual, order 3).
///
/// Action on indices and on points is
///   g . x = shift_{i,j}( star^s( swap^w( dual^p(x) ) ) ).
struct GroupElement {
  int i = 0;
  int j = 0;
  bool star = false;
  bool swap = false;
  int dual = 0;

  bool in_G() const noexcept { return !star && !swap && dual == 0; }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// `i,j` followed by `s`, `w`, `p` letters (e.g. `3,7sp`, `0,0pp`).
std::string to_text(const GroupElement& g);
GroupElement parse_group_element(std::string_view text, int n);

/// Product in G (pure elements only): (g h)(x) = g(h(x)).
GroupElement compose(const GroupElement& g, const GroupElement& h, int n);
GroupElement inverse(const GroupElement& g, int n);

/// All n^2 (G) or 12 n^2 (G~) elements in a fixed order.
std::vector<GroupElement> group_elements(int n, Group group);

/// Omega(x) = (x_2, ..., x_n, x_1 - 1) + (1/n, ..., 1/n).
std::vector<Rational> omega(std::span<const Rational> x);
/// Omega^power, any integer power (Omega^n is the identity).
std::vector<Rational> omega_power(std::span<const Rational> x, int power);

SpectrumTriple act_on_point(const GroupElement& g, const SpectrumTriple& p);

/// The point map matching act_on_index on facets:
/// h_{g.t}(transport_point(g, x)) = h_t(x) exactly. It is act_on_point with
/// the shift (i, j) replaced by (-i, -j).
SpectrumTriple transport_point(const GroupElement& g, const SpectrumTriple& p);

struct PieriShift {
  Partition a;
  int degree = 0;
};

/// sigma_k^i sigma_a = sigma_{a'} q^{degree}. Negative i is reduced with
/// sigma_k^n = q^k, which may give a negative degree.
PieriShift pieri_shift(const Partition& a, int i);

/// Quantum Pieri action of g on t; G0 flags are applied first. The result
/// may have d < 0 (see QIndex::valid), which is never clamped.
QIndex act_on_index(const GroupElement& g, const QIndex& t);

/// (r,k; a,b,c; d) -> (k,r; a*,b*,c*; d).
QIndex star(const QIndex& t);
/// (r,k; a,b,c; d) -> (r,k; b,a,c; d).
QIndex swap_ab(const QIndex& t);
/// (r,k; a,b,c; d) -> (r,k; b, complement(c), complement(a); d).
QIndex poincare_dual(const QIndex& t);

struct Orbit {
  /// Valid images, sorted by the canonical order, deduplicated.
  std::vector<QIndex> members;
  /// Some image had d < 0.
  bool left_valid_region = false;
};

Orbit orbit(const QIndex& t, Group group);

/// g . t for every g in the group, in group_elements order. Indices with a
/// nontrivial stabilizer appear several times.
std::vector<std::pair<GroupElement, QIndex>> orbit_images(const QIndex& t, Group group);

/// Minimum of the orbit under the canonical (d, r, k, a, b, c) order.
QIndex canonical_rep(const QIndex& t, Group group);

/// canonical_rep(t) == t, with early exit on the first smaller image.
bool is_canonical_rep(const QIndex& t, Group group);

/// Does the G-orbit of t contain an index with d = 0?
bool reaches_degree_zero(const QIndex& t);

}  // namespace hornlab
