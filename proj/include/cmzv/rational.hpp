#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cmzv {

// Exact arbitrary-precision rational; GMP keeps values in lowest terms with
// positive denominator once canonicalized.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p" or "p/q".
inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0 || (r.get_den() == 0))
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// n^-k as an exact rational, n >= 1, k >= 1.
inline Rational inv_pow(long n, int k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(k));
  return Rational(mpz_class(1), den);
}

}  // namespace cmzv
