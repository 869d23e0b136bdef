#include "exfactor/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "exfactor/algebra.hpp"

namespace exfactor {

namespace {

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

// Solves V^T u = e_i with V rows (y^k, ..., y, 1).
std::vector<Rational> inverse_row(const std::vector<Rational>& nodes, std::size_t i) {
  const std::size_t k1 = nodes.size();
  RationalMatrix aug(k1, std::vector<Rational>(k1 + 1));
  for (std::size_t r = 0; r < k1; ++r) {
    // Row r of V^T is column r of V: y_l^(k - r).
    for (std::size_t l = 0; l < k1; ++l) aug[r][l] = pow(nodes[l], static_cast<unsigned long>(k1 - 1 - r));
    aug[r][k1] = r == i ? 1 : 0;
  }
  const auto piv = rref(aug);
  if (piv.size() != k1 || piv.back() != k1 - 1) throw Error(Errc::Inconsistent, "interpolation nodes are not distinct");
  std::vector<Rational> u(k1);
  for (std::size_t r = 0; r < k1; ++r) u[r] = aug[r][k1];
  return u;
}

UniPolyQ to_rational(const UniPolyZ& p) {
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  return UniPolyQ(std::move(v));
}

}  // namespace

double rounding_threshold(int m, double r_mag, const BigInt& alpha) {
  if (m < 1 || r_mag < 0 || alpha < 1) throw std::invalid_argument("rounding_threshold: need m >= 1, r >= 0, alpha >= 1");
  double M = 0.0;
  for (int i = 1; i <= m; ++i) M = std::max(M, i * std::pow(r_mag, i - 1) * binom(m, i));
  M += 1.0;
  return 1.0 / (2.0 * alpha.get_d() * M);
}

double perturbation_bound(int m, double r_mag, double delta) {
  if (m < 1 || r_mag < 0 || delta < 0) throw std::invalid_argument("perturbation_bound: bad arguments");
  double c = 0.0;
  for (int i = 1; i <= m; ++i) c = std::max(c, std::pow(r_mag, i - 1) * binom(m - 1, i - 1) * m);
  return (c + 1.0) * delta;
}

UniPolyZ node_polynomial(const std::vector<ApproxRoot>& roots, const BigInt& alpha) {
  if (roots.empty()) throw std::invalid_argument("node_polynomial: no roots");
  if (alpha < 1) throw std::invalid_argument("node_polynomial: alpha must be positive");
  long prec = 64;
  for (const auto& r : roots) prec = std::max(prec, r.value.prec());
  prec += static_cast<long>(mpz_sizeinbase(alpha.get_mpz_t(), 2)) + 2 * static_cast<long>(roots.size()) + 16;

  // Ascending coefficients of alpha * prod (x - r).
  std::vector<PrecComplex> c{PrecComplex(Rational(alpha), prec)};
  for (const auto& r : roots) {
    const PrecComplex z = r.value.with_prec(prec);
    std::vector<PrecComplex> next(c.size() + 1, PrecComplex(prec));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = next[i + 1] + c[i];
      next[i] = next[i] - c[i] * z;
    }
    c = std::move(next);
  }

  const BigFloat quarter(0.25, 64);
  std::vector<BigInt> out;
  out.reserve(c.size());
  for (const auto& v : c) {
    const BigInt nearest = v.re().round();
    const BigFloat off = abs(v.re() - BigFloat(nearest, prec)).with_prec(64);
    if (off > quarter || abs(v.im()).with_prec(64) > quarter) {
      throw Error(Errc::PrecisionTooLow, "node polynomial coefficient not near an integer");
    }
    out.push_back(nearest);
  }
  UniPolyZ p(std::move(out));
  if (p.degree() != static_cast<int>(roots.size())) throw Error(Errc::PrecisionTooLow, "node polynomial lost its degree");
  return content_primitive(p).primitive;
}

int required_nodes(int r_rank, int n) {
  if (r_rank < 2) throw Error(Errc::RankOne, "coefficient matrix of rank " + std::to_string(r_rank));
  if (n < 1) throw std::invalid_argument("required_nodes: n must be >= 1");
  return (r_rank * n + r_rank - 2) / (r_rank - 1);
}

int matrix_rank(RationalMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Rational>> nullspace(RationalMatrix m) {
  std::vector<std::vector<Rational>> basis;
  if (m.empty()) return basis;
  const std::size_t cols = m.front().size();
  const auto piv = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

ScalingSystem make_scaling_system(const std::vector<NodeRecord>& records, int n) {
  ScalingSystem sys;
  sys.n = n;
  int m = 0;
  for (const auto& r : records) m = std::max(m, r.node_poly.degree());
  for (const auto& r : records) {
    sys.nodes.push_back(r.y);
    std::vector<Rational> row(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= r.node_poly.degree(); ++j) row[static_cast<std::size_t>(j)] = r.node_poly.coeff(j);
    sys.A.push_back(std::move(row));
  }
  return sys;
}

std::vector<Rational> scaling_constants(const ScalingSystem& sys) {
  const std::size_t k1 = sys.nodes.size();
  if (k1 < 2 || sys.A.size() != k1) throw std::invalid_argument("scaling_constants: need matching nodes and rows");
  const int k = static_cast<int>(k1) - 1;
  if (sys.n < 1) throw std::invalid_argument("scaling_constants: n must be >= 1");
  if (k > 2 * sys.n) throw Error(Errc::Inconsistent, "more than 2n nodes");
  if (k <= sys.n) throw Error(Errc::NeedMoreNodes, "need more than n nodes");
  const std::size_t cols = sys.A.front().size();

  RationalMatrix M;
  for (int i = 0; i < k - sys.n; ++i) {
    const auto u = inverse_row(sys.nodes, static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Rational> eq(k1);
      for (std::size_t l = 0; l < k1; ++l) eq[l] = u[l] * sys.A[l][j];
      M.push_back(std::move(eq));
    }
  }
  const auto ns = nullspace(std::move(M));
  if (ns.empty()) throw Error(Errc::Inconsistent, "scaling system has only the trivial solution");
  if (ns.size() > 1) throw Error(Errc::NeedMoreNodes, "scaling system nullity " + std::to_string(ns.size()));
  const auto& v = ns.front();
  if (sgn(v[0]) == 0) throw Error(Errc::Inconsistent, "scaling solution has lambda_0 = 0");
  std::vector<Rational> out;
  for (std::size_t l = 1; l < k1; ++l) {
    Rational lam = v[l] / v[0];
    if (sgn(lam) == 0) throw Error(Errc::Inconsistent, "zero scaling constant");
    out.push_back(lam);
  }
  return out;
}

BivarPolyZ assemble_factor(const std::vector<Rational>& nodes, const std::vector<UniPolyQ>& polys,
                           const std::vector<Rational>& lambda, int n) {
  const std::size_t k1 = nodes.size();
  if (polys.size() != k1 || lambda.size() != k1 || k1 == 0) {
    throw std::invalid_argument("assemble_factor: nodes, polynomials and constants must match");
  }
  int m = 0;
  for (const auto& p : polys) m = std::max(m, p.degree());

  // coeff[j][e]: coefficient of x^j y^e.
  std::vector<std::vector<Rational>> coeff(static_cast<std::size_t>(m) + 1, std::vector<Rational>(k1));
  for (std::size_t i = 0; i < k1; ++i) {
    UniPolyQ ell(Rational(1));
    Rational den = 1;
    for (std::size_t l = 0; l < k1; ++l) {
      if (l == i) continue;
      ell = ell * UniPolyQ(std::vector<Rational>{Rational(-nodes[l]), Rational(1)});
      den *= nodes[i] - nodes[l];
    }
    if (sgn(den) == 0) throw Error(Errc::Inconsistent, "interpolation nodes are not distinct");
    const Rational scale = lambda[i] / den;
    for (int j = 0; j <= polys[i].degree(); ++j) {
      const Rational a = polys[i].coeff(j) * scale;
      if (sgn(a) == 0) continue;
      for (int e = 0; e <= ell.degree(); ++e) {
        coeff[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)] += a * ell.coeff(e);
      }
    }
  }

  BigInt lcm = 1;
  for (std::size_t j = 0; j < coeff.size(); ++j) {
    for (std::size_t e = 0; e < k1; ++e) {
      if (sgn(coeff[j][e]) == 0) continue;
      if (static_cast<int>(e) > n) throw Error(Errc::DegreeOverflow, "nonzero coefficient of y^" + std::to_string(e));
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), coeff[j][e].get_den_mpz_t());
    }
  }
  BivarPolyZ::TermMap terms;
  for (std::size_t j = 0; j < coeff.size(); ++j) {
    for (std::size_t e = 0; e < k1; ++e) {
      if (sgn(coeff[j][e]) == 0) continue;
      const Rational v = coeff[j][e] * lcm;
      terms.emplace(BivarPolyZ::Exponent{static_cast<int>(j), static_cast<int>(e)}, v.get_num());
    }
  }
  BivarPolyZ f(std::move(terms));
  if (f.is_zero()) throw Error(Errc::Inconsistent, "assembled factor is zero");
  return content_primitive(f).primitive;
}

BivarPolyZ assemble_factor(const std::vector<NodeRecord>& records, const std::vector<Rational>& lambda, int n) {
  std::vector<Rational> nodes;
  std::vector<UniPolyQ> polys;
  for (const auto& r : records) {
    nodes.push_back(r.y);
    polys.push_back(to_rational(r.node_poly));
  }
  return assemble_factor(nodes, polys, lambda, n);
}

}  // namespace exfactor
