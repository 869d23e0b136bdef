#pragma once

// Exact reductions on uni- and bivariate integer polynomials: content and
// primitive part, specialization, gcd, square-free decomposition, exact
// division and coefficient bounds for integer factors.

#include <vector>

#include "exfactor/bivar.hpp"

namespace exfactor {

template <class P>
struct ContentPrimitive {
  BigInt content;
  P primitive;
};

/// content * primitive == f; the primitive part has coprime coefficients and
/// a positive leading coefficient (lex x > y), so the content carries the sign.
ContentPrimitive<UniPolyZ> content_primitive(const UniPolyZ& f);
ContentPrimitive<BivarPolyZ> content_primitive(const BivarPolyZ& f);

/// Clears denominators: the primitive integer polynomial with the roots of f.
UniPolyZ primitive_from_rational(const UniPolyQ& f);

/// Exact substitution of `value` for `var`; the result is in the other variable.
UniPolyQ specialize(const BivarPolyZ& f, Var var, const Rational& value);

/// Primitive gcd over Q[x,y] with positive leading coefficient.
BivarPolyZ gcd_bivariate(const BivarPolyZ& f, const BivarPolyZ& g);

/// Content of f as a polynomial in x over Z[y] (and symmetrically), normalized.
UniPolyZ content_in_x(const BivarPolyZ& f);
UniPolyZ content_in_y(const BivarPolyZ& f);

struct SquarefreeFactor {
  BivarPolyZ factor;
  int multiplicity;
};

struct SquarefreeDecomposition {
  BigInt content;
  /// Pairwise coprime, square-free, primitive; ascending multiplicity.
  std::vector<SquarefreeFactor> factors;
};

SquarefreeDecomposition squarefree_decompose(const BivarPolyZ& f);

struct UniSquarefreeFactor {
  UniPolyZ factor;
  int multiplicity;
};

/// Yun decomposition of a nonconstant integer polynomial; f = content * prod.
std::vector<UniSquarefreeFactor> squarefree_decompose(const UniPolyZ& f, BigInt* content = nullptr);

struct ExactQuotient {
  /// Primitive, positive leading coefficient.
  BivarPolyZ quotient;
  /// f == scale * quotient * g.
  Rational scale;
};

/// Throws NotDivisible when g does not divide f over Q[x,y].
ExactQuotient exact_divide(const BivarPolyZ& f, const BivarPolyZ& g);

/// Upper bound on the height of any integer factor of f: ceil(2^d * ||f||_2).
BigInt height_bound(const UniPolyZ& f);

/// True when gcd(f, f') is constant.
bool is_squarefree(const UniPolyZ& f);

}  // namespace exfactor
