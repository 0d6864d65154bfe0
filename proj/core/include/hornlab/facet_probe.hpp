#pragma once

#include <span>
#include <vector>

#include "hornlab/polytope.hpp"

namespace hornlab {

/// Membership against the facet system of `mode` without materializing it.
///
/// Every facet value is d + Gamma(c) - A(a) - B(b) where A, B, Gamma are
/// per-partition sums of point coordinates. For each pair (a, b) and degree d
/// only the c with Gamma(c) <= A(a) + B(b) - d can give a tight or violated
/// row, and only those candidates have their coefficient computed. The result
/// agrees with membership() over generate_system(n, mode) on the tight and
/// violated lists. `rows_checked` counts candidates, not rows.
///
/// Coordinates are scaled to a common denominator and evaluated in 64-bit
/// integers; std::range_error is thrown if the point's denominators or
/// numerators exceed 2^40.
Verdict implicit_membership(const SpectrumTriple& p, SystemMode mode, int workers = 1,
                            std::size_t report_limit = kAllReports);

/// Every t with N_t = 1 (all strata of n) such that h_t vanishes at every
/// anchor, sorted by the canonical order. At most three anchors.
std::vector<QIndex> tight_indices(int n, std::span<const SpectrumTriple> anchors, int workers = 1);

}  // namespace hornlab
