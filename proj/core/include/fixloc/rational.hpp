#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fixloc {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Non-negative remainder for a positive modulus.
inline long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace fixloc
