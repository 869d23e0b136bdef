#include "exfactor/rootsolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "exfactor/algebra.hpp"

namespace exfactor {

namespace {

constexpr long kBoundPrec = 64;

struct Derivatives {
  PrecComplex value;
  PrecComplex first;
  PrecComplex second;
};

Derivatives eval_derivatives(const UniPolyZ& p, const PrecComplex& z, long prec, bool with_second) {
  Derivatives r{PrecComplex(prec), PrecComplex(prec), PrecComplex(prec)};
  const BigFloat zero(prec);
  for (int i = p.degree(); i >= 0; --i) {
    if (with_second) r.second = r.second * z + r.first;
    r.first = r.first * z + r.value;
    r.value = r.value * z + PrecComplex(BigFloat(p.coeffs()[static_cast<std::size_t>(i)], prec), zero);
  }
  r.second = r.second * BigFloat(2.0, prec);
  return r;
}

// sum |c_i| |z|^i, rounded up loosely.
BigFloat abs_sum(const UniPolyZ& p, const BigFloat& zabs) {
  BigFloat acc(kBoundPrec);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * zabs + abs(BigFloat(p.coeffs()[static_cast<std::size_t>(i)], kBoundPrec));
  }
  return acc;
}

long bit_length(long v) {
  long b = 0;
  while (v > 0) {
    ++b;
    v >>= 1;
  }
  return b;
}

long coeff_bits(const UniPolyZ& p) {
  long b = 0;
  for (const auto& c : p.coeffs()) b = std::max<long>(b, static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)));
  return b;
}

class UnivariateHomotopy final : public Homotopy<1> {
 public:
  UnivariateHomotopy(const UniPolyZ& p, double theta) : gamma_(std::polar(1.0, theta)), d_(p.degree()) {
    const BigInt& lc = p.lead();
    for (const auto& c : p.coeffs()) a_.push_back(Rational(Rational(c) / lc).get_d());
  }

  HomotopyEval<1> eval(const std::array<cplx, 1>& zv, double t) const override {
    const cplx z = zv[0];
    cplx f = 0.0;
    cplx fp = 0.0;
    for (int i = d_; i >= 0; --i) {
      fp = fp * z + f;
      f = f * z + a_[static_cast<std::size_t>(i)];
    }
    const cplx zd1 = std::pow(z, d_ - 1);
    const cplx g = zd1 * z - 1.0;
    const cplx gp = static_cast<double>(d_) * zd1;
    HomotopyEval<1> e;
    e.value[0] = t * f + gamma_ * (1.0 - t) * g;
    e.jacobian[0][0] = t * fp + gamma_ * (1.0 - t) * gp;
    e.dt[0] = f - gamma_ * g;
    return e;
  }

 private:
  cplx gamma_;
  int d_;
  std::vector<double> a_;
};

cplx track_one(const UniPolyZ& p, int k, const TrackerConfig& cfg) {
  UnivariateHomotopy h(p, cfg.gamma_angle);
  const double ang = 2.0 * M_PI * k / p.degree();
  return track_path<1>(h, {std::polar(1.0, ang)}, cfg).end[0];
}

bool too_close(cplx a, cplx b) {
  return std::abs(a - b) < std::ldexp(1.0, -20) * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

PrecComplex evaluate(const UniPolyZ& p, const PrecComplex& z) {
  return eval_derivatives(p, z, z.prec(), false).value;
}

BigFloat evaluation_error(const UniPolyZ& p, const PrecComplex& z) {
  const long d = std::max(p.degree(), 1);
  BigFloat s = abs_sum(p, z.abs().with_prec(kBoundPrec));
  return s * BigFloat(static_cast<double>(2 * d + 2), kBoundPrec) * exp2_int(-z.prec(), kBoundPrec);
}

bool meets_bits(const ApproxRoot& r, long bits) { return r.err_bound <= exp2_int(-bits, kBoundPrec); }

std::vector<PrecComplex> start_roots(int d, long prec) {
  if (d < 1) throw std::invalid_argument("start_roots: degree must be >= 1");
  std::vector<PrecComplex> out;
  out.reserve(static_cast<std::size_t>(d));
  BigFloat pi(prec + 16);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  for (int k = 0; k < d; ++k) {
    if ((4 * k) % d == 0) {
      // Quarter turns are exact.
      static constexpr double kRe[] = {1, 0, -1, 0};
      static constexpr double kIm[] = {0, 1, 0, -1};
      const int q = (4 * k) / d;
      out.emplace_back(BigFloat(kRe[q], prec), BigFloat(kIm[q], prec));
      continue;
    }
    BigFloat ang = pi * BigFloat(Rational(2 * k) / d, prec + 16);
    BigFloat s(prec);
    BigFloat c(prec);
    mpfr_sin_cos(s.get(), c.get(), ang.get(), MPFR_RNDN);
    out.emplace_back(c, s);
  }
  return out;
}

ApproxRoot newton_refine(const UniPolyZ& p, const ApproxRoot& z, long target_bits) {
  const int d = p.degree();
  if (d < 1) throw std::invalid_argument("newton_refine: degree must be >= 1");

  const double zabs0 = z.value.abs().to_double();
  const long mag_bits = std::max<long>(0, static_cast<long>(std::ceil(std::log2(2.0 + zabs0))));
  const long cbits = coeff_bits(p);
  const long prec0 = std::max<long>(128, 2 * cbits + 64 + d * mag_bits);

  const PrecComplex z0 = z.value.with_prec(std::max(prec0, z.value.prec()));
  const Derivatives e0 = eval_derivatives(p, z0, z0.prec(), true);
  const BigFloat d1 = e0.first.abs();
  if (d1.is_zero()) throw Error(Errc::NotConverging, "derivative vanishes at the start point");
  if (!e0.value.is_zero() && !(e0.value.abs() * e0.second.abs() < d1 * d1)) {
    throw Error(Errc::NotConverging, "start point outside the Newton basin");
  }

  const BigFloat sum = abs_sum(p, BigFloat(zabs0 + 1.0, kBoundPrec));
  const long cond_bits = std::max<long>(0, sum.exponent() - d1.exponent()) + 8;
  const long overhead = cond_bits + mag_bits + bit_length(d) + 32;
  const long final_prec = target_bits + overhead;
  const BigFloat target = exp2_int(-target_bits, kBoundPrec);
  const BigFloat degree(static_cast<double>(d), kBoundPrec);

  PrecComplex cur = z0;
  long acc = 40;
  long prec = std::min(final_prec, acc + overhead);
  if (z0.prec() >= final_prec) prec = final_prec;

  for (int it = 0; it < 400; ++it) {
    const PrecComplex zz = cur.with_prec(prec);
    const Derivatives e = eval_derivatives(p, zz, prec, false);
    if (e.first.is_zero()) throw Error(Errc::NotConverging, "derivative vanishes during refinement");
    const PrecComplex delta = e.value / e.first;
    const BigFloat dabs = delta.abs().with_prec(kBoundPrec);
    const BigFloat slack = evaluation_error(p, zz) / e.first.abs().with_prec(kBoundPrec);
    const BigFloat err = degree * (dabs + slack);
    if (prec >= final_prec && err <= target) {
      return ApproxRoot{zz, err, z.path_index};
    }
    cur = zz - delta;
    const long gained = dabs.is_zero() ? final_prec : -dabs.exponent();
    acc = std::max(acc, 2 * gained);
    prec = std::min(final_prec, std::max(prec, acc + overhead));
  }
  throw Error(Errc::NotConverging, "Newton iteration did not reach the requested accuracy");
}

std::vector<ApproxRoot> refine_all(const UniPolyZ& p, const std::vector<ApproxRoot>& roots, long target_bits) {
  std::vector<ApproxRoot> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(meets_bits(r, target_bits) ? r : newton_refine(p, r, target_bits));
  return out;
}

std::vector<ApproxRoot> solve_univariate(const UniPolyZ& p, const TrackerConfig& cfg, long target_bits) {
  cfg.validate();
  const int d = p.degree();
  if (d < 1) throw std::invalid_argument("solve_univariate: degree must be >= 1");
  if (!is_squarefree(p)) throw Error(Errc::NotSquareFree, "input polynomial has repeated roots");

  std::vector<cplx> ends(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) ends[static_cast<std::size_t>(k)] = track_one(p, k, cfg);

  // Near-coincident endpoints: re-track both paths with tighter control.
  std::vector<bool> suspect(ends.size(), false);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (too_close(ends[i], ends[j])) suspect[i] = suspect[j] = true;
    }
  }
  const TrackerConfig tight = cfg.refined();
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (suspect[i]) ends[i] = track_one(p, static_cast<int>(i), tight);
  }

  const BigFloat norm2 = sqrt(BigFloat(norm2_squared(p), kBoundPrec));
  std::vector<ApproxRoot> roots;
  roots.reserve(ends.size());
  for (std::size_t k = 0; k < ends.size(); ++k) {
    ApproxRoot start{PrecComplex(ends[k], 53), BigFloat(1.0, kBoundPrec), static_cast<int>(k)};
    ApproxRoot r = [&] {
      try {
        return newton_refine(p, start, target_bits);
      } catch (const Error& e) {
        if (e.code() != Errc::NotConverging) throw;
        start.value = PrecComplex(track_one(p, static_cast<int>(k), tight), 53);
        return newton_refine(p, start, target_bits);
      }
    }();
    // Residual requirement relative to ||p||_2.
    const BigFloat bound = norm2 * exp2_int(-target_bits, kBoundPrec);
    for (int extra = 0; extra < 8; ++extra) {
      const BigFloat res = evaluate(p, r.value).abs().with_prec(kBoundPrec);
      if (res <= bound) break;
      const long more = std::max<long>(4, res.exponent() - bound.exponent() + 2);
      r = newton_refine(p, r, target_bits + more * (extra + 1));
    }
    roots.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const BigFloat dist = (roots[i].value - roots[j].value).abs().with_prec(kBoundPrec);
      if (dist <= roots[i].err_bound + roots[j].err_bound) {
        throw Error(Errc::PathFailure, "two paths converged to the same root");
      }
    }
  }
  return roots;
}

}  // namespace exfactor
