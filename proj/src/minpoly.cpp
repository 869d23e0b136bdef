#include "exfactor/minpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "exfactor/algebra.hpp"

namespace exfactor {

namespace {

constexpr long kBoundPrec = 64;

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Nearest integer to a / b for b > 0.
BigInt round_div(const BigInt& a, const BigInt& b) {
  BigInt num = 2 * a + b;
  BigInt den = 2 * b;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Cohen, integral LLL. Indices are 1-based; d[0] = 1.
class IntegralLll {
 public:
  explicit IntegralLll(std::vector<std::vector<BigInt>> rows)
      : b_(std::move(rows)), n_(static_cast<int>(b_.size())), d_(n_ + 1), lam_(n_ + 1, std::vector<BigInt>(n_ + 1)) {}

  std::vector<std::vector<BigInt>> run() {
    if (n_ == 0) return b_;
    d_[0] = 1;
    d_[1] = dot(row(1), row(1));
    if (d_[1] == 0) throw std::invalid_argument("lll_reduce: zero basis vector");
    int k = 2;
    int kmax = 1;
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        for (int j = 1; j <= k; ++j) {
          BigInt u = dot(row(k), row(j));
          for (int i = 1; i <= j - 1; ++i) u = BigInt((d_[i] * u - lam_[k][i] * lam_[j][i]) / d_[i - 1]);
          if (j < k) {
            lam_[k][j] = u;
          } else {
            if (u == 0) throw std::invalid_argument("lll_reduce: rows are linearly dependent");
            d_[k] = u;
          }
        }
      }
      for (;;) {
        red(k, k - 1);
        const BigInt& l = lam_[k][k - 1];
        if (4 * d_[k] * d_[k - 2] < 3 * d_[k - 1] * d_[k - 1] - 4 * l * l) {
          swap(k, kmax);
          k = std::max(2, k - 1);
          continue;
        }
        for (int l2 = k - 2; l2 >= 1; --l2) red(k, l2);
        ++k;
        break;
      }
    }
    return b_;
  }

 private:
  std::vector<BigInt>& row(int i) { return b_[static_cast<std::size_t>(i - 1)]; }

  void red(int k, int l) {
    if (2 * abs(lam_[k][l]) <= d_[l]) return;
    const BigInt q = round_div(lam_[k][l], d_[l]);
    auto& bk = row(k);
    const auto& bl = row(l);
    for (std::size_t c = 0; c < bk.size(); ++c) bk[c] -= q * bl[c];
    lam_[k][l] -= q * d_[l];
    for (int i = 1; i <= l - 1; ++i) lam_[k][i] -= q * lam_[l][i];
  }

  void swap(int k, int kmax) {
    std::swap(row(k), row(k - 1));
    for (int j = 1; j <= k - 2; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
    const BigInt l = lam_[k][k - 1];
    const BigInt B = (d_[k - 2] * d_[k] + l * l) / d_[k - 1];
    for (int i = k + 1; i <= kmax; ++i) {
      const BigInt t = lam_[i][k];
      lam_[i][k] = (d_[k] * lam_[i][k - 1] - l * t) / d_[k - 1];
      lam_[i][k - 1] = (B * t + l * lam_[i][k]) / d_[k];
    }
    d_[k - 1] = B;
  }

  std::vector<std::vector<BigInt>> b_;
  int n_;
  std::vector<BigInt> d_;
  std::vector<std::vector<BigInt>> lam_;
};

BigFloat norm1(const UniPolyZ& p) {
  BigFloat s(kBoundPrec);
  for (const auto& c : p.coeffs()) s += abs(BigFloat(c, kBoundPrec));
  return s;
}

// Bound on |p(x~)| when x~ is within err of a root of p, plus rounding slack.
BigFloat membership_threshold(const UniPolyZ& p, const ApproxRoot& r) {
  const int m = p.degree();
  BigFloat reach = r.value.abs().with_prec(kBoundPrec) + r.err_bound;
  if (reach < BigFloat(1.0, kBoundPrec)) reach = BigFloat(1.0, kBoundPrec);
  BigFloat growth(1.0, kBoundPrec);
  for (int i = 1; i < m; ++i) growth *= reach;
  return norm1(p) * BigFloat(static_cast<double>(2 * m), kBoundPrec) * r.err_bound * growth +
         evaluation_error(p, r.value);
}

bool satisfies(const UniPolyZ& p, const ApproxRoot& r) {
  return evaluate(p, r.value).abs().with_prec(kBoundPrec) <= membership_threshold(p, r);
}

}  // namespace

long required_bits(int d, const BigInt& H) {
  if (d < 1 || H < 1) throw std::invalid_argument("required_bits: need d >= 1 and H >= 1");
  // Squared form: 4^s > 2^(d^2) (d+1)^(3d+4) H^(4d).
  BigInt rhs = pow(BigInt(d + 1), static_cast<unsigned long>(3 * d + 4)) * pow(H, static_cast<unsigned long>(4 * d));
  mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(d) * static_cast<mp_bitcnt_t>(d));
  long s = std::max<long>(1, static_cast<long>(mpz_sizeinbase(rhs.get_mpz_t(), 2)) / 2 - 1);
  for (;; ++s) {
    BigInt lhs = 1;
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * s));
    if (lhs > rhs) return s;
  }
}

LatticeBasis build_lattice(const PrecComplex& a, int n, long s) {
  if (n < 1 || s < 1) throw std::invalid_argument("build_lattice: need n >= 1 and s >= 1");
  long extra = 16;
  for (int v = n; v > 0; v >>= 1) extra += 2;
  const long prec = std::max(a.prec(), s + extra);
  const PrecComplex base = a.with_prec(prec);
  PrecComplex power(BigFloat(1.0, prec), BigFloat(prec));

  LatticeBasis out;
  const std::size_t width = static_cast<std::size_t>(n) + 3;
  for (int i = 0; i <= n; ++i) {
    std::vector<BigInt> row(width, BigInt(0));
    row[static_cast<std::size_t>(i)] = 1;
    row[width - 2] = power.re().ldexp(s).round();
    row[width - 1] = power.im().ldexp(s).round();
    out.rows.push_back(std::move(row));
    power = power * base;
  }
  return out;
}

LatticeBasis lll_reduce(const LatticeBasis& basis) {
  if (!basis.rows.empty()) {
    const std::size_t w = basis.rows.front().size();
    for (const auto& r : basis.rows) {
      if (r.size() != w) throw std::invalid_argument("lll_reduce: ragged basis");
    }
  }
  return LatticeBasis{IntegralLll(basis.rows).run()};
}

UniPolyZ minimal_polynomial(const ApproxRoot& a, int d, const BigInt& H) {
  if (d < 1 || H < 1) throw std::invalid_argument("minimal_polynomial: need d >= 1 and H >= 1");
  const BigFloat mag = a.value.abs().with_prec(kBoundPrec);
  if (mag > BigFloat(1.0, kBoundPrec)) {
    // Work with 1/a inside the unit disk and reverse the result.
    if (!(a.err_bound < mag)) throw Error(Errc::PrecisionTooLow, "approximation error exceeds |a|");
    const long prec = a.value.prec() + 16;
    const PrecComplex one(BigFloat(1.0, prec), BigFloat(prec));
    const PrecComplex inv = one / a.value.with_prec(prec);
    const BigFloat err = a.err_bound / (mag * (mag - a.err_bound)) + exp2_int(-(prec - 4), kBoundPrec);
    ApproxRoot b{inv, err, a.path_index};
    return normalize(minimal_polynomial(b, d, H).reversed());
  }

  const long s = required_bits(d, H);
  const BigFloat allowed = exp2_int(-s, kBoundPrec) / BigFloat(static_cast<double>(12 * d), kBoundPrec);
  if (a.err_bound > allowed) throw Error(Errc::PrecisionTooLow, "root approximation too coarse for s = " + std::to_string(s));

  // Acceptance: |v|^2 <= 2^d (d+1)^2 H^2.
  BigInt accept = BigInt(d + 1) * BigInt(d + 1) * H * H;
  mpz_mul_2exp(accept.get_mpz_t(), accept.get_mpz_t(), static_cast<mp_bitcnt_t>(d));

  for (int n = 1; n <= d; ++n) {
    const LatticeBasis reduced = lll_reduce(build_lattice(a.value, n, s));
    const auto& v = reduced.rows.front();
    if (dot(v, v) > accept) continue;
    UniPolyZ cand(std::vector<BigInt>(v.begin(), v.begin() + n + 1));
    if (cand.degree() < 1) continue;
    cand = content_primitive(cand).primitive;
    if (!satisfies(cand, a)) continue;
    return cand;
  }
  throw Error(Errc::NoCandidateFound, "no lattice vector within the acceptance bound up to degree " + std::to_string(d));
}

std::vector<RootGroup> group_roots(const std::vector<ApproxRoot>& roots, int d, const BigInt& H) {
  if (static_cast<int>(roots.size()) != d) throw std::invalid_argument("group_roots: need exactly d roots");
  std::vector<bool> used(roots.size(), false);
  std::vector<RootGroup> groups;
  int total = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    RootGroup g;
    g.min_poly = minimal_polynomial(roots[i], d, H);
    for (std::size_t j = i; j < roots.size(); ++j) {
      if (!used[j] && satisfies(g.min_poly, roots[j])) {
        used[j] = true;
        g.root_indices.push_back(static_cast<int>(j));
      }
    }
    if (static_cast<int>(g.root_indices.size()) != g.min_poly.degree() || g.root_indices.front() != static_cast<int>(i)) {
      throw Error(Errc::InconsistentGrouping,
                  "group of size " + std::to_string(g.root_indices.size()) + " for a minimal polynomial of degree " +
                      std::to_string(g.min_poly.degree()));
    }
    total += g.min_poly.degree();
    groups.push_back(std::move(g));
  }
  if (total != d) throw Error(Errc::InconsistentGrouping, "group degrees do not sum to the polynomial degree");
  return groups;
}

}  // namespace exfactor
