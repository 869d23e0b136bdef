#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// Poly<BigInt> and Poly<Rational> are the univariate currency of the library;
// Poly<Poly<BigInt>> is the recursive view of Z[y][x] used internally for
// bivariate gcd, exact division and square-free decomposition.

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "exfactor/numbers.hpp"

namespace exfactor {

template <class R>
class Poly;

template <class R>
bool is_zero(const Poly<R>& p);
template <class R>
int lead_sign(const Poly<R>& p);

template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;
  explicit Poly(R c) {
    if (!is_zero(c)) c_.push_back(std::move(c));
  }
  /// Coefficients in ascending powers; trailing zeros are trimmed.
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(R c, int k) {
    if (is_zero(c)) return Poly();
    std::vector<R> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const R& lead() const { return c_.back(); }
  const std::vector<R>& coeffs() const { return c_; }

  R coeff(int i) const {
    if (i < 0 || i > degree()) return R();
    return c_[static_cast<std::size_t>(i)];
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      d[i - 1] = R(c_[i] * R(BigInt(static_cast<long>(i))));
    }
    return Poly(std::move(d));
  }

  /// Coefficients reversed: x^deg * p(1/x).
  Poly reversed() const {
    std::vector<R> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
  }

  /// Horner evaluation in any type T that accepts R-coefficient arithmetic.
  template <class T>
  T eval(const T& at) const {
    T acc = T();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = T(acc * at + *it);
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = R(-v);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = R(c_[i] + o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = R(c_[i] - o.c_[i]);
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<R> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = R(v[i + j] + a.c_[i] * b.c_[j]);
    }
    return Poly(std::move(v));
  }

  friend Poly operator*(const Poly& a, const R& s) {
    Poly r = a;
    for (auto& v : r.c_) v = R(v * s);
    r.trim();
    return r;
  }
  friend Poly operator*(const R& s, const Poly& a) { return a * s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

using UniPolyZ = Poly<BigInt>;
using UniPolyQ = Poly<Rational>;

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.zero();
}

template <class R>
int lead_sign(const Poly<R>& p) {
  return p.zero() ? 0 : lead_sign(p.lead());
}

template <class R>
Poly<R> pow(const Poly<R>& p, unsigned e) {
  Poly<R> result(R(BigInt(1)));
  Poly<R> base = p;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

/// Exact division of every coefficient by a ring element.
template <class R>
Poly<R> divexact(const Poly<R>& a, const R& s) {
  std::vector<R> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(divexact(c, s));
  return Poly<R>(std::move(v));
}

/// Exact polynomial quotient a / b; throws NotDivisible if b does not divide a.
template <class R>
Poly<R> divexact(const Poly<R>& a, const Poly<R>& b) {
  if (b.zero()) throw Error(Errc::NotDivisible, "division by the zero polynomial");
  if (a.zero()) return Poly<R>();
  if (a.degree() < b.degree()) throw Error(Errc::NotDivisible, "divisor degree exceeds dividend");
  std::vector<R> rem = a.coeffs();
  std::vector<R> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const R& top = rem[static_cast<std::size_t>(k + db)];
    if (is_zero(top)) continue;
    R q = divexact(top, b.lead());
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k + j)];
      slot = R(slot - q * b.coeffs()[static_cast<std::size_t>(j)]);
    }
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& r : rem) {
    if (!is_zero(r)) throw Error(Errc::NotDivisible, "nonzero remainder");
  }
  return Poly<R>(std::move(quot));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
template <class R>
Poly<R> prem(const Poly<R>& a, const Poly<R>& b) {
  if (b.zero()) throw Error(Errc::NotDivisible, "pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  Poly<R> r = a;
  const int db = b.degree();
  int e = a.degree() - db + 1;
  while (!r.zero() && r.degree() >= db) {
    Poly<R> t = Poly<R>::monomial(r.lead(), r.degree() - db);
    r = r * b.lead() - t * b;
    --e;
  }
  if (e > 0) r = r * pow(b.lead(), static_cast<unsigned>(e));
  return r;
}

/// Unit normal form: leading base coefficient positive.
template <class R>
Poly<R> normalize(const Poly<R>& p) {
  return lead_sign(p) < 0 ? -p : p;
}
inline BigInt normalize(const BigInt& v) { return abs(v); }

template <class R>
Poly<R> gcd(const Poly<R>& a, const Poly<R>& b);

/// Gcd of all coefficients, unit normal. Zero for the zero polynomial.
template <class R>
R content(const Poly<R>& p) {
  R g = R();
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if constexpr (std::is_same_v<R, BigInt>) {
      if (g == 1) break;
    } else {
      if (g.degree() == 0 && g.lead() == 1) break;
    }
  }
  return g;
}

/// p / content(p), with positive leading base coefficient.
template <class R>
Poly<R> primitive_part(const Poly<R>& p) {
  if (p.zero()) return p;
  return normalize(divexact(p, content(p)));
}

/// Gcd over a UFD via the subresultant polynomial remainder sequence.
/// Result is unit normal.
template <class R>
Poly<R> gcd(const Poly<R>& a, const Poly<R>& b) {
  if (a.zero()) return normalize(b);
  if (b.zero()) return normalize(a);
  Poly<R> A = a;
  Poly<R> B = b;
  if (B.degree() > A.degree()) std::swap(A, B);
  const R ca = content(A);
  const R cb = content(B);
  const R d = gcd(ca, cb);
  A = divexact(A, ca);
  B = divexact(B, cb);
  R g(BigInt(1));
  R h(BigInt(1));
  for (;;) {
    const int delta = A.degree() - B.degree();
    Poly<R> r = prem(A, B);
    if (r.zero()) break;
    if (r.degree() == 0) {
      B = Poly<R>(R(BigInt(1)));
      break;
    }
    A = B;
    B = divexact(r, R(g * pow(h, static_cast<unsigned>(delta))));
    g = A.lead();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = divexact(R(pow(g, static_cast<unsigned>(delta))), R(pow(h, static_cast<unsigned>(delta - 1))));
    }
  }
  return normalize(primitive_part(B) * d);
}

/// Yun's square-free decomposition of a primitive polynomial.
/// Returns (a_i, i) with deg a_i > 0 such that f = +-prod a_i^i.
template <class R>
std::vector<std::pair<Poly<R>, int>> yun(const Poly<R>& f) {
  std::vector<std::pair<Poly<R>, int>> out;
  if (f.degree() <= 0) return out;
  const Poly<R> fp = f.derivative();
  Poly<R> a = gcd(f, fp);
  Poly<R> b = divexact(f, a);
  Poly<R> c = divexact(fp, a);
  Poly<R> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divexact(b, a);
    c = divexact(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

/// Euclidean norm squared of the coefficient vector.
inline BigInt norm2_squared(const UniPolyZ& p) {
  BigInt s = 0;
  for (const auto& c : p.coeffs()) s += c * c;
  return s;
}

/// Max-norm (height) of the coefficient vector.
inline BigInt height(const UniPolyZ& p) {
  BigInt h = 0;
  for (const auto& c : p.coeffs()) {
    if (abs(c) > h) h = abs(c);
  }
  return h;
}

}  // namespace exfactor
