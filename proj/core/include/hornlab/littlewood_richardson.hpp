#pragma once

#include <map>
#include <span>
#include <vector>

#include "hornlab/rational.hpp"

namespace hornlab {

/// An unbounded partition: weakly decreasing positive parts, no trailing zeros.
using Shape = std::vector<int>;

/// Strips trailing zeros; throws std::invalid_argument if not weakly decreasing
/// or if a part is negative.
Shape normalize_shape(std::span<const int> parts);

/// Classical Littlewood-Richardson coefficient c^{outer}_{inner, content}:
/// the number of LR skew tableaux of shape outer/inner with the given content.
/// Zero when |inner| + |content| != |outer| or inner is not contained in outer.
Integer classical_lr(std::span<const int> inner, std::span<const int> content,
                     std::span<const int> outer);

/// s_a * s_b expanded in Schur functions, keeping only shapes with at most
/// `max_rows` rows (max_rows <= 0 means no restriction).
std::map<Shape, Integer> classical_product(std::span<const int> a, std::span<const int> b,
                                           int max_rows = 0);

}  // namespace hornlab
