#pragma once

// Predictor-corrector path tracking in hardware double precision.
//
// A homotopy H(z, t) = 0 with z in C^N is followed from t = 0 to t = 1 by
// integrating the Davidenko equation dz/dt = -H_z^{-1} H_t with classical
// RK4, then correcting with a few Newton steps at fixed t.

#include <array>
#include <complex>
#include <cstddef>

namespace exfactor {

using cplx = std::complex<double>;

struct TrackerConfig {
  double initial_step = 0.02;
  double min_step = 1e-12;
  double corrector_tol = 1e-10;
  int max_corrector_iters = 3;
  /// Angle of the gamma-trick constant e^{i theta}, theta in [-pi, pi].
  double gamma_angle = 0.0;
  /// Upper bound on the step after successful growth.
  double max_step = 0.1;
  /// |z| beyond this is treated as a path diverging to infinity.
  double divergence_limit = 1e12;

  /// Throws std::invalid_argument when the invariants do not hold.
  void validate() const;

  /// Tighter variant used when two endpoints come out too close.
  TrackerConfig refined() const;
};

template <std::size_t N>
struct HomotopyEval {
  std::array<cplx, N> value;
  /// jacobian[r][c] = dH_r / dz_c
  std::array<std::array<cplx, N>, N> jacobian;
  std::array<cplx, N> dt;
};

template <std::size_t N>
class Homotopy {
 public:
  virtual ~Homotopy() = default;
  virtual HomotopyEval<N> eval(const std::array<cplx, N>& z, double t) const = 0;
};

template <std::size_t N>
struct TrackResult {
  std::array<cplx, N> end;
  /// Size of the last Newton correction at t = 1.
  double last_correction = 0.0;
  int steps = 0;
};

/// Throws Error(PathFailure) on step underflow or divergence.
template <std::size_t N>
TrackResult<N> track_path(const Homotopy<N>& h, const std::array<cplx, N>& start, const TrackerConfig& cfg);

extern template TrackResult<1> track_path<1>(const Homotopy<1>&, const std::array<cplx, 1>&, const TrackerConfig&);
extern template TrackResult<2> track_path<2>(const Homotopy<2>&, const std::array<cplx, 2>&, const TrackerConfig&);

}  // namespace exfactor
