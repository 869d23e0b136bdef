#pragma once

// Continuation on the curve f(x, y) = 0: moving the x-roots of one group
// between specialization nodes, and linking x-specialization groups to
// y-specialization groups to read off each factor's degree pair.

#include <array>
#include <vector>

#include "exfactor/bivar.hpp"
#include "exfactor/minpoly.hpp"
#include "exfactor/rootsolve.hpp"

namespace exfactor {

/// f and its partials in double precision, with coefficients scaled by 1/|f|_inf.
class CurveEvaluator {
 public:
  explicit CurveEvaluator(const BivarPolyZ& f);

  struct Values {
    cplx f;
    cplx fx;
    cplx fy;
  };
  Values operator()(cplx x, cplx y) const;

 private:
  // coeff_[i][j] multiplies x^i y^j.
  std::vector<std::vector<double>> coeff_;
};

/// Moves roots of f(., y0) to roots of f(., y1) along
/// y(t) = ((1-t) y0 + t gamma y1) / ((1-t) + t gamma).
/// Output i is the endpoint of the path started at roots[i]; values are
/// double-precision seeds (err_bound 1) for later refinement.
/// Throws PathFailure.
std::vector<ApproxRoot> transport_group(const BivarPolyZ& f, const std::vector<ApproxRoot>& roots, const Rational& y0,
                                        const Rational& y1, cplx gamma, const TrackerConfig& cfg);

/// Degree pair [a_i, b_j] for each x-group, where x_groups index into x_roots
/// (roots of f(x, y0)) and y_groups index into y_roots (roots of f(x0, y)).
/// Members of each x-group are tracked in turn on
///   { f(x, y) = 0, (1-t)(y - y0) + t gamma (x - x0) = 0 }.
/// A single path lost to infinity is completed when exactly one y-group is
/// left unclaimed. Throws UnmatchedEndpoint or PathFailure.
std::vector<std::array<int, 2>> detect_degrees(const BivarPolyZ& f, const std::vector<RootGroup>& x_groups,
                                               const std::vector<ApproxRoot>& x_roots,
                                               const std::vector<RootGroup>& y_groups,
                                               const std::vector<ApproxRoot>& y_roots, const Rational& x0,
                                               const Rational& y0, cplx gamma, const TrackerConfig& cfg);

}  // namespace exfactor
