#include "exfactor/bigfloat.hpp"

#include <algorithm>
#include <climits>
#include <vector>

namespace exfactor {

namespace {

mpfr_prec_t clamp_prec(long prec) {
  return static_cast<mpfr_prec_t>(std::max<long>(prec, MPFR_PREC_MIN));
}

long max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

BigFloat::BigFloat(long prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, long prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& v, long prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& v, long prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_prec(long prec) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long BigFloat::exponent() const {
  if (mpfr_zero_p(v_)) return LONG_MIN / 4;
  return static_cast<long>(mpfr_get_exp(v_));
}

BigInt BigFloat::round() const {
  BigInt r;
  mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::ldexp(long k) const {
  BigFloat r(prec());
  mpfr_mul_2si(r.v_, v_, k, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& v) {
  BigFloat r(v.prec());
  mpfr_abs(r.get(), v.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& v) {
  BigFloat r(v.prec());
  mpfr_sqrt(r.get(), v.get(), MPFR_RNDN);
  return r;
}

BigFloat exp2_int(long k, long prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.get(), 1, k, MPFR_RNDN);
  return r;
}

PrecComplex::PrecComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}

PrecComplex operator/(const PrecComplex& a, const PrecComplex& b) {
  const BigFloat den = b.norm();
  const BigFloat re = (a.re_ * b.re_ + a.im_ * b.im_) / den;
  const BigFloat im = (a.im_ * b.re_ - a.re_ * b.im_) / den;
  return {re, im};
}

}  // namespace exfactor
