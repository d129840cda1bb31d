#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jmkit {

// Exact rational scalar, always in canonical reduced form with a positive
// denominator. Arithmetic results from GMP are canonical already; anything
// constructed from raw numerator/denominator goes through make_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "a" or "a/b" in base 10.
inline Rational parse_rational(const std::string& text) {
  Rational r;
  try {
    r = Rational(text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

// "a" when the denominator is 1, otherwise "a/b".
inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

}  // namespace jmkit
