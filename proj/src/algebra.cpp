#include "exfactor/algebra.hpp"

#include <algorithm>
#include <map>

namespace exfactor {

ContentPrimitive<UniPolyZ> content_primitive(const UniPolyZ& f) {
  if (f.zero()) throw Error(Errc::ZeroPolynomial, "content of the zero polynomial");
  BigInt c = content(f);
  if (sgn(f.lead()) < 0) c = -c;
  return {c, divexact(f, c)};
}

ContentPrimitive<BivarPolyZ> content_primitive(const BivarPolyZ& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "content of the zero polynomial");
  BigInt c = 0;
  for (const auto& [e, v] : f.terms()) {
    c = gcd(c, v);
    if (c == 1) break;
  }
  if (sgn(f.lead_coeff()) < 0) c = -c;
  BivarPolyZ::TermMap t;
  for (const auto& [e, v] : f.terms()) t.emplace(e, divexact(v, c));
  return {c, BivarPolyZ(std::move(t))};
}

UniPolyZ primitive_from_rational(const UniPolyQ& f) {
  if (f.zero()) throw Error(Errc::ZeroPolynomial, "primitive part of the zero polynomial");
  BigInt den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.emplace_back(c.get_num() * (den / c.get_den()));
  return content_primitive(UniPolyZ(std::move(v))).primitive;
}

UniPolyQ specialize(const BivarPolyZ& f, Var var, const Rational& value) {
  const int d = var == Var::Y ? f.deg_x() : f.deg_y();
  if (d < 0) return UniPolyQ();
  const int dv = var == Var::Y ? f.deg_y() : f.deg_x();
  std::vector<Rational> powers(static_cast<std::size_t>(std::max(dv, 0)) + 1);
  powers[0] = 1;
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * value;
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
  for (const auto& [e, c] : f.terms()) {
    const int keep = var == Var::Y ? e.first : e.second;
    const int sub = var == Var::Y ? e.second : e.first;
    out[static_cast<std::size_t>(keep)] += Rational(c) * powers[static_cast<std::size_t>(sub)];
  }
  return UniPolyQ(std::move(out));
}

BivarPolyZ gcd_bivariate(const BivarPolyZ& f, const BivarPolyZ& g) {
  if (f.is_zero() && g.is_zero()) throw Error(Errc::ZeroPolynomial, "gcd(0, 0)");
  BivarPolyZ r = from_xpoly(gcd(to_xpoly(f), to_xpoly(g)));
  return content_primitive(r).primitive;
}

UniPolyZ content_in_x(const BivarPolyZ& f) { return content(to_xpoly(f)); }

UniPolyZ content_in_y(const BivarPolyZ& f) { return content(to_xpoly(f.swapped())); }

std::vector<UniSquarefreeFactor> squarefree_decompose(const UniPolyZ& f, BigInt* content_out) {
  auto [c, p] = content_primitive(f);
  if (content_out) *content_out = c;
  std::vector<UniSquarefreeFactor> out;
  for (auto& [a, i] : yun(p)) out.push_back({a, i});
  return out;
}

SquarefreeDecomposition squarefree_decompose(const BivarPolyZ& f) {
  auto [c, prim] = content_primitive(f);
  const XPoly xp = to_xpoly(prim);
  // Split off the y-only content so Yun runs on a polynomial primitive in x.
  const UniPolyZ ycont = content(xp);
  const XPoly rest = divexact(xp, ycont);

  std::map<int, BivarPolyZ> by_mult;
  auto accumulate = [&by_mult](const BivarPolyZ& p, int m) {
    auto [it, inserted] = by_mult.try_emplace(m, p);
    if (!inserted) it->second = it->second * p;
  };
  if (ycont.degree() > 0) {
    for (auto& [a, i] : yun(ycont)) accumulate(BivarPolyZ::from_univariate(a, Var::Y), i);
  }
  for (auto& [a, i] : yun(rest)) accumulate(from_xpoly(a), i);

  SquarefreeDecomposition out;
  BivarPolyZ product = BivarPolyZ::constant(1);
  for (auto& [m, p] : by_mult) {
    BivarPolyZ n = content_primitive(p).primitive;
    product = product * pow(n, static_cast<unsigned>(m));
    out.factors.push_back({std::move(n), m});
  }
  // Fix the overall sign so content * prod == f exactly.
  out.content = c;
  if (!out.factors.empty() && sgn(product.lead_coeff()) < 0) out.content = -out.content;
  return out;
}

ExactQuotient exact_divide(const BivarPolyZ& f, const BivarPolyZ& g) {
  if (g.is_zero()) throw Error(Errc::NotDivisible, "division by the zero polynomial");
  if (f.is_zero()) return {BivarPolyZ(), Rational(0)};
  auto [cg, pg] = content_primitive(g);
  if (f.deg_x() < pg.deg_x() || f.deg_y() < pg.deg_y()) {
    throw Error(Errc::NotDivisible, "divisor degree exceeds dividend");
  }
  // Gauss: a primitive divisor over Q divides over Z.
  BivarPolyZ q = from_xpoly(divexact(to_xpoly(f), to_xpoly(pg)));
  auto [cq, pq] = content_primitive(q);
  Rational scale(cq, cg);
  scale.canonicalize();
  return {pq, scale};
}

BigInt height_bound(const UniPolyZ& f) {
  if (f.zero()) throw Error(Errc::ZeroPolynomial, "height bound of the zero polynomial");
  const int d = f.degree();
  BigInt scaled = norm2_squared(f);
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * d));
  return ceil_sqrt(scaled);
}

bool is_squarefree(const UniPolyZ& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace exfactor
