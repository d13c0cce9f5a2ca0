// Exact rational arithmetic substrate. GMP-backed: mpq_class canonicalizes
// (positive denominator, reduced) after every operation, which is exactly
// the invariant the rest of the library relies on.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace enriques {

using Int = mpz_class;
using Rat = mpq_class;

inline Int numer(const Rat& q) { return q.get_num(); }
inline Int denom(const Rat& q) { return q.get_den(); }

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

// Least common multiple of denominators, for clearing a row of rationals.
inline Int denominator_lcm(const std::vector<Rat>& v) {
  Int l = 1;
  for (const Rat& q : v) {
    Int d = q.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  return l;
}

// n! / (n-k)!
inline Int falling_factorial(long n, long k) {
  Int r = 1;
  for (long i = 0; i < k; ++i) r *= (n - i);
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace enriques
