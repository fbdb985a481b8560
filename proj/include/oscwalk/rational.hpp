#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace oscwalk {

// Arbitrary-precision integer / rational. Rationals are kept canonical by GMP,
// so equality is exact structural equality.
using Int = mpz_class;
using Rational = mpq_class;

// mpq_class's two-argument constructor does not canonicalize; every ratio
// must be built through this helper so that equality stays structural.
inline Rational frac(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("frac: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational frac(long num, long den) { return frac(Int(num), Int(den)); }

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// m!! with the (-1)!! = 0!! = 1 convention used by the tableau count.
inline Int double_factorial(long m) {
  if (m == -1 || m == 0) return 1;
  if (m < -1) throw std::domain_error("double_factorial: undefined for m < -1");
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational rational_pow(Rational base, unsigned long exp) {
  Rational r(1);
  while (exp != 0) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Always "num/den", e.g. "4/3", "2/1", "0/1".
inline std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace oscwalk
