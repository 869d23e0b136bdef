#pragma once

// Multi-precision real and complex numbers over MPFR.
//
// Precision is a property of each value. Binary operations run at the larger
// precision of their operands, with round-to-nearest; there is no global
// default precision anywhere in this interface.

#include <mpfr.h>

#include <complex>
#include <string>

#include "exfactor/numbers.hpp"

namespace exfactor {

class BigFloat {
 public:
  explicit BigFloat(long prec = 53);
  BigFloat(double v, long prec);
  BigFloat(const BigInt& v, long prec);
  BigFloat(const Rational& v, long prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long prec() const { return static_cast<long>(mpfr_get_prec(v_)); }
  /// Copy rounded (or widened) to `prec` bits.
  BigFloat with_prec(long prec) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 2^(e-1) <= |v| < 2^e; a large negative value for zero.
  long exponent() const;
  /// Nearest integer.
  BigInt round() const;
  /// Scale by 2^k exactly.
  BigFloat ldexp(long k) const;
  std::string to_string(int digits = 20) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& v);
BigFloat sqrt(const BigFloat& v);
/// 2^k at the given precision.
BigFloat exp2_int(long k, long prec);

class PrecComplex {
 public:
  explicit PrecComplex(long prec = 53) : re_(prec), im_(prec) {}
  PrecComplex(BigFloat re, BigFloat im);
  PrecComplex(std::complex<double> v, long prec) : re_(v.real(), prec), im_(v.imag(), prec) {}
  PrecComplex(const Rational& re, long prec) : re_(re, prec), im_(prec) {}

  long prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }
  PrecComplex with_prec(long prec) const { return {re_.with_prec(prec), im_.with_prec(prec)}; }

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat abs() const { return sqrt(norm()); }
  PrecComplex conj() const { return {re_, -im_}; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  friend PrecComplex operator+(const PrecComplex& a, const PrecComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend PrecComplex operator-(const PrecComplex& a, const PrecComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend PrecComplex operator*(const PrecComplex& a, const PrecComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend PrecComplex operator*(const PrecComplex& a, const BigFloat& s) { return {a.re_ * s, a.im_ * s}; }
  friend PrecComplex operator/(const PrecComplex& a, const PrecComplex& b);
  PrecComplex operator-() const { return {-re_, -im_}; }

 private:
  BigFloat re_;
  BigFloat im_;
};

}  // namespace exfactor
