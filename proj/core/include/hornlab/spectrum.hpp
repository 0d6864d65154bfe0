#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hornlab/rational.hpp"

namespace hornlab {

/// A point (alpha, beta, gamma) of Q^{3n}. Chamber/alcove membership is
/// checked on demand, not at construction.
struct SpectrumTriple {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  std::vector<Rational> gamma;

  int n() const noexcept { return static_cast<int>(alpha.size()); }
  std::vector<Rational>& component(int which);
  const std::vector<Rational>& component(int which) const;

  /// Concatenation alpha | beta | gamma.
  std::vector<Rational> flat() const;
  static SpectrumTriple from_flat(std::span<const Rational> values);

  /// Sum zero and weakly decreasing, per component.
  bool in_chamber() const;
  /// Chamber plus first - last <= 1.
  bool in_alcove() const;
  /// Sorts each component into weakly decreasing order; true if anything moved.
  bool normalize();

  friend bool operator==(const SpectrumTriple&, const SpectrumTriple&) = default;
};

SpectrumTriple origin_triple(int n);

/// x* = (-x_n, ..., -x_1).
std::vector<Rational> reflect(std::span<const Rational> x);

/// `HORNLAB-PT v1 n=<n>` followed by three lines of n rationals. Lines starting
/// with '#' and blank lines are ignored on input.
std::string write_point(const SpectrumTriple& p);
/// Sorts components into decreasing order; `reordered` reports whether that changed anything.
SpectrumTriple read_point(std::istream& in, bool* reordered = nullptr);
SpectrumTriple read_point_file(const std::string& path, bool* reordered = nullptr);

}  // namespace hornlab
