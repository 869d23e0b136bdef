#include "exfactor/bivar.hpp"

#include <algorithm>

namespace exfactor {

BivarPolyZ::BivarPolyZ(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

BivarPolyZ BivarPolyZ::constant(const BigInt& c) { return monomial(c, 0, 0); }

BivarPolyZ BivarPolyZ::monomial(const BigInt& c, int i, int j) {
  BivarPolyZ p;
  if (sgn(c) != 0) p.terms_.emplace(Exponent{i, j}, c);
  return p;
}

BivarPolyZ BivarPolyZ::from_univariate(const UniPolyZ& p, Var var) {
  TermMap t;
  for (int k = 0; k <= p.degree(); ++k) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    t.emplace(var == Var::X ? Exponent{k, 0} : Exponent{0, k}, c);
  }
  return BivarPolyZ(std::move(t));
}

BigInt BivarPolyZ::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int BivarPolyZ::deg_x() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.first;
}

int BivarPolyZ::deg_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

BivarPolyZ BivarPolyZ::derivative(Var var) const {
  TermMap t;
  for (const auto& [e, c] : terms_) {
    const int k = var == Var::X ? e.first : e.second;
    if (k == 0) continue;
    const Exponent ne = var == Var::X ? Exponent{e.first - 1, e.second} : Exponent{e.first, e.second - 1};
    t.emplace(ne, BigInt(c * k));
  }
  return BivarPolyZ(std::move(t));
}

BivarPolyZ BivarPolyZ::swapped() const {
  TermMap t;
  for (const auto& [e, c] : terms_) t.emplace(Exponent{e.second, e.first}, c);
  return BivarPolyZ(std::move(t));
}

bool BivarPolyZ::is_univariate_in(Var var) const {
  return std::all_of(terms_.begin(), terms_.end(), [var](const auto& kv) {
    return var == Var::X ? kv.first.second == 0 : kv.first.first == 0;
  });
}

UniPolyZ BivarPolyZ::to_univariate(Var var) const {
  const int d = var == Var::X ? deg_x() : deg_y();
  std::vector<BigInt> v(static_cast<std::size_t>(std::max(d, 0)) + 1);
  for (const auto& [e, c] : terms_) {
    const int other = var == Var::X ? e.second : e.first;
    if (other != 0) throw Error(Errc::Inconsistent, "polynomial is not univariate");
    v[static_cast<std::size_t>(var == Var::X ? e.first : e.second)] = c;
  }
  return UniPolyZ(std::move(v));
}

BivarPolyZ BivarPolyZ::operator-() const {
  BivarPolyZ r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BivarPolyZ& BivarPolyZ::operator+=(const BivarPolyZ& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

BivarPolyZ& BivarPolyZ::operator-=(const BivarPolyZ& o) { return *this += -o; }

BivarPolyZ operator*(const BivarPolyZ& a, const BivarPolyZ& b) {
  BivarPolyZ::TermMap t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      t[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    }
  }
  return BivarPolyZ(std::move(t));
}

BivarPolyZ operator*(const BivarPolyZ& a, const BigInt& s) {
  BivarPolyZ::TermMap t;
  for (const auto& [e, c] : a.terms_) t.emplace(e, BigInt(c * s));
  return BivarPolyZ(std::move(t));
}

BivarPolyZ pow(const BivarPolyZ& p, unsigned e) {
  BivarPolyZ r = BivarPolyZ::constant(1);
  for (unsigned k = 0; k < e; ++k) r = r * p;
  return r;
}

XPoly to_xpoly(const BivarPolyZ& f) {
  if (f.is_zero()) return XPoly();
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(f.deg_x()) + 1);
  for (const auto& [e, c] : f.terms()) {
    auto& row = rows[static_cast<std::size_t>(e.first)];
    if (row.size() <= static_cast<std::size_t>(e.second)) row.resize(static_cast<std::size_t>(e.second) + 1);
    row[static_cast<std::size_t>(e.second)] = c;
  }
  std::vector<UniPolyZ> coeffs;
  coeffs.reserve(rows.size());
  for (auto& row : rows) coeffs.emplace_back(std::move(row));
  return XPoly(std::move(coeffs));
}

BivarPolyZ from_xpoly(const XPoly& p) {
  BivarPolyZ::TermMap t;
  for (int i = 0; i <= p.degree(); ++i) {
    const UniPolyZ& c = p.coeffs()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= c.degree(); ++j) {
      const BigInt& v = c.coeffs()[static_cast<std::size_t>(j)];
      if (sgn(v) != 0) t.emplace(BivarPolyZ::Exponent{i, j}, v);
    }
  }
  return BivarPolyZ(std::move(t));
}

}  // namespace exfactor
