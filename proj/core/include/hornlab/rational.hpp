#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hornlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for any malformed textual input (indices, partitions, files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical text: `p/q` in lowest terms with q > 0, or `p` when q == 1.
std::string to_text(const Rational& q);
std::string to_text(const Integer& z);

/// num/den in lowest terms (gmpxx does not reduce on construction).
Rational make_rational(long num, long den);

/// Accepts `p`, `-p`, `p/q`; the result is canonicalized.
Rational parse_rational(std::string_view text);

std::string join_rationals(std::span<const Rational> values, char sep = ' ');

// Small string helpers shared by the text formats.
std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
std::vector<std::string_view> split_ws(std::string_view s);
int parse_int(std::string_view s);

}  // namespace hornlab
