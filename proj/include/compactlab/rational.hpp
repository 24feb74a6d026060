#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace compactlab {

// Exact rational arithmetic everywhere in the core; no floating point.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p" or "p/q" (optional sign on p). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& r);

}  // namespace compactlab
