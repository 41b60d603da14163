#pragma once
// Arbitrary-precision integer alias and small helpers on top of GMP.
#include <gmpxx.h>
#include <string>
#include <vector>
#include <stdexcept>

namespace mg {

using Int = mpz_class;

inline Int igcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int ilcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Nonnegative representative of a mod m (m > 0).
inline Int imod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline Int next_prime_geq(const Int& n) {
  Int p = n;
  if (p < 2) p = 2;
  while (!is_probable_prime(p)) ++p;
  return p;
}

inline std::string istr(const Int& v) { return v.get_str(); }

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer too large for machine word: " + istr(v));
  return v.get_si();
}

}  // namespace mg
