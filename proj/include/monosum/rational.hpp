#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace monosum {

// Exact rational arithmetic. Denominators in the density recurrences grow
// multiplicatively with the iteration count, so this is GMP-backed rather
// than a fixed-width fraction type.
using Rational = mpq_class;

inline Rational make_rational(long long num, long long den = 1) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline long double to_long_double(const Rational& q) {
  // mpq_get_d rounds to 53 bits; split num/den to keep 64-bit mantissa.
  return static_cast<long double>(mpf_class(q.get_num(), 128).get_d()) /
         static_cast<long double>(mpf_class(q.get_den(), 128).get_d());
}

// Prints canonical "num/den", or just "num" for integers.
inline std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// b^e for integer e (e may be negative; b must be nonzero then).
inline Rational rational_pow(const Rational& b, long e) {
  Rational acc(1);
  Rational base = b;
  bool inv = e < 0;
  unsigned long k = inv ? -static_cast<unsigned long>(e) : e;
  for (; k; k >>= 1) {
    if (k & 1) acc *= base;
    base *= base;
  }
  if (inv) acc = 1 / acc;
  return acc;
}

}  // namespace monosum
