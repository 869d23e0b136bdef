#include "exfactor/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "exfactor/errors.hpp"

namespace exfactor {

void TrackerConfig::validate() const {
  if (!(min_step > 0.0 && min_step <= initial_step && initial_step < 1.0)) {
    throw std::invalid_argument("tracker config: need 0 < min_step <= initial_step < 1");
  }
  if (max_corrector_iters < 1) throw std::invalid_argument("tracker config: max_corrector_iters must be >= 1");
  if (!(gamma_angle >= -M_PI && gamma_angle <= M_PI)) {
    throw std::invalid_argument("tracker config: gamma_angle must lie in [-pi, pi]");
  }
  if (!(corrector_tol > 0.0)) throw std::invalid_argument("tracker config: corrector_tol must be positive");
}

TrackerConfig TrackerConfig::refined() const {
  TrackerConfig c = *this;
  c.initial_step = initial_step / 4;
  c.max_step = max_step / 4;
  c.min_step = std::min(min_step, c.initial_step);
  c.corrector_tol = corrector_tol / 16;
  return c;
}

namespace {

template <std::size_t N>
using Vec = std::array<cplx, N>;

template <std::size_t N>
double norm(const Vec<N>& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

template <std::size_t N>
bool finite(const Vec<N>& v) {
  return std::all_of(v.begin(), v.end(), [](const cplx& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

// Solves J x = b for N = 1 or 2.
template <std::size_t N>
std::optional<Vec<N>> solve(const std::array<Vec<N>, N>& j, const Vec<N>& b) {
  if constexpr (N == 1) {
    if (std::abs(j[0][0]) == 0.0) return std::nullopt;
    return Vec<1>{b[0] / j[0][0]};
  } else {
    static_assert(N == 2);
    const cplx det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
    const double scale = std::max({std::abs(j[0][0]), std::abs(j[0][1]), std::abs(j[1][0]), std::abs(j[1][1])});
    if (std::abs(det) <= 1e-300 || std::abs(det) <= 1e-15 * scale * scale) return std::nullopt;
    return Vec<2>{(b[0] * j[1][1] - j[0][1] * b[1]) / det, (j[0][0] * b[1] - b[0] * j[1][0]) / det};
  }
}

template <std::size_t N>
Vec<N> axpy(const Vec<N>& z, double h, const Vec<N>& k) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = z[i] + h * k[i];
  return r;
}

// Tangent dz/dt = -H_z^{-1} H_t.
template <std::size_t N>
std::optional<Vec<N>> tangent(const Homotopy<N>& h, const Vec<N>& z, double t) {
  const auto e = h.eval(z, t);
  auto s = solve<N>(e.jacobian, e.dt);
  if (!s) return std::nullopt;
  for (auto& c : *s) c = -c;
  return s;
}

struct CorrectorOutcome {
  bool converged = false;
  double last = 0.0;
};

template <std::size_t N>
CorrectorOutcome correct(const Homotopy<N>& h, Vec<N>& z, double t, int iters, double tol, double scale) {
  CorrectorOutcome out;
  double prev = 0.0;
  for (int it = 0; it < iters; ++it) {
    const auto e = h.eval(z, t);
    auto d = solve<N>(e.jacobian, e.value);
    if (!d || !finite(*d)) return out;
    for (std::size_t i = 0; i < N; ++i) z[i] -= (*d)[i];
    const double dn = norm(*d);
    out.last = dn;
    // A first correction this large means the predictor left the path.
    if (it == 0 && dn > 0.05 * scale) return out;
    if (it > 0 && dn > 0.5 * prev && dn > tol * scale) return out;
    if (dn <= tol * scale) {
      out.converged = true;
      return out;
    }
    prev = dn;
  }
  return out;
}

}  // namespace

template <std::size_t N>
TrackResult<N> track_path(const Homotopy<N>& h, const std::array<cplx, N>& start, const TrackerConfig& cfg) {
  cfg.validate();
  Vec<N> z = start;
  double t = 0.0;
  double step = cfg.initial_step;
  int streak = 0;
  TrackResult<N> result;

  while (t < 1.0) {
    step = std::min(step, 1.0 - t);
    const double t1 = (1.0 - t - step < 1e-14) ? 1.0 : t + step;
    const double hs = t1 - t;
    bool ok = false;
    Vec<N> zc{};
    if (auto k1 = tangent(h, z, t)) {
      if (auto k2 = tangent(h, axpy(z, hs / 2, *k1), t + hs / 2)) {
        if (auto k3 = tangent(h, axpy(z, hs / 2, *k2), t + hs / 2)) {
          if (auto k4 = tangent(h, axpy(z, hs, *k3), t1)) {
            for (std::size_t i = 0; i < N; ++i) {
              zc[i] = z[i] + hs / 6.0 * ((*k1)[i] + 2.0 * (*k2)[i] + 2.0 * (*k3)[i] + (*k4)[i]);
            }
            if (finite(zc)) {
              const double scale = 1.0 + norm(z);
              ok = correct(h, zc, t1, cfg.max_corrector_iters, cfg.corrector_tol, scale).converged;
            }
          }
        }
      }
    }
    if (ok) {
      t = t1;
      z = zc;
      ++result.steps;
      if (norm(z) > cfg.divergence_limit) throw Error(Errc::PathFailure, "path diverges to infinity");
      if (++streak >= 3) {
        step = std::min(2.0 * step, cfg.max_step);
        streak = 0;
      }
    } else {
      step /= 2.0;
      streak = 0;
      if (step < cfg.min_step) throw Error(Errc::PathFailure, "step size underflow at t = " + std::to_string(t));
    }
  }

  // Polish the endpoint on the target system.
  double last = 0.0;
  for (int it = 0; it < 8; ++it) {
    const auto e = h.eval(z, 1.0);
    auto d = solve<N>(e.jacobian, e.value);
    if (!d || !finite(*d)) break;
    for (std::size_t i = 0; i < N; ++i) z[i] -= (*d)[i];
    last = norm(*d);
    if (last <= 1e-15 * (1.0 + norm(z))) break;
  }
  result.end = z;
  result.last_correction = last;
  return result;
}

template TrackResult<1> track_path<1>(const Homotopy<1>&, const std::array<cplx, 1>&, const TrackerConfig&);
template TrackResult<2> track_path<2>(const Homotopy<2>&, const std::array<cplx, 2>&, const TrackerConfig&);

}  // namespace exfactor
