#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace reeb {

/// Exact value type used for every function value, distance and bound.
using Rational = mpq_class;

/// Parses "12", "-0.25", "3.140" or "7/3". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: a terminating decimal without trailing zeros when the
/// denominator is of the form 2^a 5^b, "p/q" otherwise. parse ∘ format = id.
std::string format_rational(const Rational& value);

/// Nearest double, for human-readable summaries only.
double to_double(const Rational& value);

inline Rational abs_diff(const Rational& a, const Rational& b) {
  Rational d = a - b;
  return d < 0 ? Rational(-d) : d;
}

inline Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

}  // namespace reeb
