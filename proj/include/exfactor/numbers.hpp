#pragma once

#include <gmpxx.h>

#include "exfactor/errors.hpp"

namespace exfactor {

using BigInt = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }

/// Sign of the leading coefficient; for scalars, the scalar's sign.
inline int lead_sign(const BigInt& v) { return sgn(v); }
inline int lead_sign(const Rational& v) { return sgn(v); }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Exact quotient; throws NotDivisible when b does not divide a.
inline BigInt divexact(const BigInt& a, const BigInt& b) {
  if (is_zero(b) || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw Error(Errc::NotDivisible, "integer quotient is not exact");
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Rational divexact(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw Error(Errc::NotDivisible, "division by zero");
  return Rational(a / b);
}

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
  return Rational(pow(BigInt(base.get_num()), e), pow(BigInt(base.get_den()), e));
}

/// ceil(sqrt(n)) for n >= 0.
inline BigInt ceil_sqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) ++r;
  return r;
}

/// Nearest integer, halves rounded away from zero.
inline BigInt round_nearest(const Rational& q) {
  BigInt two_num = 2 * q.get_num() + (sgn(q) >= 0 ? q.get_den() : BigInt(-q.get_den()));
  BigInt den = 2 * q.get_den();
  BigInt r;
  mpz_tdiv_q(r.get_mpz_t(), two_num.get_mpz_t(), den.get_mpz_t());
  return r;
}

}  // namespace exfactor
