#pragma once

#include <array>
#include <map>
#include <utility>

#include "exfactor/poly.hpp"

namespace exfactor {

enum class Var { X, Y };

/// Z[y][x]: outer index is the power of x, inner polynomials are in y.
using XPoly = Poly<UniPolyZ>;

/// Sparse bivariate polynomial with integer coefficients.
///
/// Terms are keyed by (i, j) for x^i y^j. The map order is lex with x > y,
/// so the last entry is the leading term.
class BivarPolyZ {
 public:
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, BigInt>;

  BivarPolyZ() = default;
  explicit BivarPolyZ(TermMap terms);

  static BivarPolyZ constant(const BigInt& c);
  static BivarPolyZ monomial(const BigInt& c, int i, int j);
  static BivarPolyZ x() { return monomial(1, 1, 0); }
  static BivarPolyZ y() { return monomial(1, 0, 1); }
  /// Embed a univariate polynomial in the given variable.
  static BivarPolyZ from_univariate(const UniPolyZ& p, Var var);

  const TermMap& terms() const { return terms_; }
  BigInt coeff(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0}); }
  std::size_t term_count() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  int deg_x() const;
  int deg_y() const;
  std::array<int, 2> degree() const { return {deg_x(), deg_y()}; }

  /// Leading coefficient in lex order x > y.
  const BigInt& lead_coeff() const { return terms_.rbegin()->second; }

  BivarPolyZ derivative(Var var) const;
  BivarPolyZ swapped() const;

  /// If the polynomial involves only `var`, its univariate form.
  bool is_univariate_in(Var var) const;
  UniPolyZ to_univariate(Var var) const;

  BivarPolyZ operator-() const;
  BivarPolyZ& operator+=(const BivarPolyZ& o);
  BivarPolyZ& operator-=(const BivarPolyZ& o);
  friend BivarPolyZ operator+(BivarPolyZ a, const BivarPolyZ& b) { return a += b; }
  friend BivarPolyZ operator-(BivarPolyZ a, const BivarPolyZ& b) { return a -= b; }
  friend BivarPolyZ operator*(const BivarPolyZ& a, const BivarPolyZ& b);
  friend BivarPolyZ operator*(const BivarPolyZ& a, const BigInt& s);
  friend bool operator==(const BivarPolyZ& a, const BivarPolyZ& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BivarPolyZ& a, const BivarPolyZ& b) { return !(a == b); }

 private:
  TermMap terms_;
};

BivarPolyZ pow(const BivarPolyZ& p, unsigned e);

/// Recursive dense view, x outermost.
XPoly to_xpoly(const BivarPolyZ& f);
BivarPolyZ from_xpoly(const XPoly& p);

}  // namespace exfactor
