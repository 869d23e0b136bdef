#include "exfactor/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace exfactor {

CurveEvaluator::CurveEvaluator(const BivarPolyZ& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "curve of the zero polynomial");
  BigInt top = 0;
  for (const auto& [e, c] : f.terms()) {
    if (abs(c) > top) top = abs(c);
  }
  coeff_.assign(static_cast<std::size_t>(f.deg_x()) + 1, std::vector<double>(static_cast<std::size_t>(f.deg_y()) + 1));
  for (const auto& [e, c] : f.terms()) {
    coeff_[static_cast<std::size_t>(e.first)][static_cast<std::size_t>(e.second)] = Rational(Rational(c) / top).get_d();
  }
}

CurveEvaluator::Values CurveEvaluator::operator()(cplx x, cplx y) const {
  // Horner in x over rows evaluated in y.
  Values v{0.0, 0.0, 0.0};
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    cplx p = 0.0;
    cplx dp = 0.0;
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) {
      dp = dp * y + p;
      p = p * y + *jt;
    }
    v.fx = v.fx * x + v.f;
    v.f = v.f * x + p;
    v.fy = v.fy * x + dp;
  }
  return v;
}

namespace {

class TransportHomotopy final : public Homotopy<1> {
 public:
  TransportHomotopy(const CurveEvaluator& f, cplx y0, cplx y1, cplx gamma) : f_(f), y0_(y0), y1_(y1), gamma_(gamma) {}

  HomotopyEval<1> eval(const std::array<cplx, 1>& z, double t) const override {
    const cplx num = (1.0 - t) * y0_ + t * gamma_ * y1_;
    const cplx den = (1.0 - t) + t * gamma_;
    const cplx dnum = gamma_ * y1_ - y0_;
    const cplx dden = gamma_ - 1.0;
    const cplx y = num / den;
    const cplx dy = (dnum * den - num * dden) / (den * den);
    const auto v = f_(z[0], y);
    HomotopyEval<1> e;
    e.value[0] = v.f;
    e.jacobian[0][0] = v.fx;
    e.dt[0] = v.fy * dy;
    return e;
  }

 private:
  const CurveEvaluator& f_;
  cplx y0_, y1_, gamma_;
};

class LineHomotopy final : public Homotopy<2> {
 public:
  LineHomotopy(const CurveEvaluator& f, cplx x0, cplx y0, cplx gamma) : f_(f), x0_(x0), y0_(y0), gamma_(gamma) {}

  HomotopyEval<2> eval(const std::array<cplx, 2>& z, double t) const override {
    const auto v = f_(z[0], z[1]);
    HomotopyEval<2> e;
    e.value[0] = v.f;
    e.value[1] = (1.0 - t) * (z[1] - y0_) + t * gamma_ * (z[0] - x0_);
    e.jacobian[0][0] = v.fx;
    e.jacobian[0][1] = v.fy;
    e.jacobian[1][0] = t * gamma_;
    e.jacobian[1][1] = 1.0 - t;
    e.dt[0] = 0.0;
    e.dt[1] = -(z[1] - y0_) + gamma_ * (z[0] - x0_);
    return e;
  }

 private:
  const CurveEvaluator& f_;
  cplx x0_, y0_, gamma_;
};

}  // namespace

std::vector<ApproxRoot> transport_group(const BivarPolyZ& f, const std::vector<ApproxRoot>& roots, const Rational& y0,
                                        const Rational& y1, cplx gamma, const TrackerConfig& cfg) {
  const CurveEvaluator ev(f);
  std::vector<ApproxRoot> out;
  out.reserve(roots.size());
  if (y0 == y1) {
    for (const auto& r : roots) out.push_back({PrecComplex(r.value.to_complex(), 53), BigFloat(1.0, 64), r.path_index});
    return out;
  }
  const TransportHomotopy h(ev, y0.get_d(), y1.get_d(), gamma);
  for (const auto& r : roots) {
    const auto res = track_path<1>(h, {r.value.to_complex()}, cfg);
    out.push_back({PrecComplex(res.end[0], 53), BigFloat(1.0, 64), r.path_index});
  }
  return out;
}

std::vector<std::array<int, 2>> detect_degrees(const BivarPolyZ& f, const std::vector<RootGroup>& x_groups,
                                               const std::vector<ApproxRoot>& x_roots,
                                               const std::vector<RootGroup>& y_groups,
                                               const std::vector<ApproxRoot>& y_roots, const Rational& x0,
                                               const Rational& y0, cplx gamma, const TrackerConfig& cfg) {
  if (x_groups.empty() || y_groups.empty()) throw std::invalid_argument("detect_degrees: empty grouping");

  // Which y-group owns each y-root, and the matching radius.
  std::vector<int> owner(y_roots.size(), -1);
  for (std::size_t g = 0; g < y_groups.size(); ++g) {
    for (int idx : y_groups[g].root_indices) owner.at(static_cast<std::size_t>(idx)) = static_cast<int>(g);
  }
  std::vector<cplx> ys;
  for (const auto& r : y_roots) ys.push_back(r.value.to_complex());
  double radius = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = i + 1; j < ys.size(); ++j) radius = std::min(radius, std::abs(ys[i] - ys[j]) / 2);
  }
  if (!std::isfinite(radius)) radius = 0.5 * std::max(1.0, std::abs(ys.front()));
  radius = std::max(radius, std::ldexp(1.0, -20));

  const CurveEvaluator ev(f);
  const LineHomotopy h(ev, x0.get_d(), y0.get_d(), gamma);
  std::vector<std::optional<int>> match(x_groups.size());
  std::vector<int> claims(y_groups.size(), 0);
  int lost = 0;
  for (std::size_t g = 0; g < x_groups.size(); ++g) {
    // Members of one group can diverge individually; the first finite endpoint decides.
    std::optional<std::array<cplx, 2>> found;
    for (int idx : x_groups[g].root_indices) {
      const cplx xs = x_roots.at(static_cast<std::size_t>(idx)).value.to_complex();
      try {
        found = track_path<2>(h, {xs, y0.get_d()}, cfg).end;
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::PathFailure) throw;
      }
    }
    if (!found) {
      ++lost;
      continue;
    }
    const std::array<cplx, 2> end = *found;
    std::size_t best = 0;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (std::abs(end[1] - ys[i]) < dist) {
        dist = std::abs(end[1] - ys[i]);
        best = i;
      }
    }
    if (!(dist <= radius)) throw Error(Errc::UnmatchedEndpoint, "endpoint matches no y-root");
    const int yg = owner[best];
    if (yg < 0) throw Error(Errc::UnmatchedEndpoint, "endpoint matches an ungrouped y-root");
    match[g] = yg;
    ++claims[static_cast<std::size_t>(yg)];
  }

  for (int c : claims) {
    if (c > 1) throw Error(Errc::UnmatchedEndpoint, "two x-groups reached the same y-group");
  }
  if (lost > 0) {
    const auto unclaimed = std::count(claims.begin(), claims.end(), 0);
    if (lost != 1 || unclaimed != 1) throw Error(Errc::PathFailure, "degree-detection paths lost to infinity");
    const int free_group = static_cast<int>(std::find(claims.begin(), claims.end(), 0) - claims.begin());
    for (auto& m : match) {
      if (!m) m = free_group;
    }
  }

  std::vector<std::array<int, 2>> out;
  out.reserve(x_groups.size());
  for (std::size_t g = 0; g < x_groups.size(); ++g) {
    out.push_back({x_groups[g].min_poly.degree(), y_groups[static_cast<std::size_t>(*match[g])].min_poly.degree()});
  }
  return out;
}

}  // namespace exfactor
