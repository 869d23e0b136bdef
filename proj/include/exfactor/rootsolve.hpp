#pragma once

// All complex roots of an exact univariate polynomial, by total-degree
// homotopy continuation in double precision followed by multi-precision
// Newton refinement.

#include <vector>

#include "exfactor/bigfloat.hpp"
#include "exfactor/poly.hpp"
#include "exfactor/tracker.hpp"

namespace exfactor {

struct ApproxRoot {
  PrecComplex value;
  /// Upper bound on the distance to the associated exact root.
  BigFloat err_bound;
  /// Index k of the start root the path began from.
  int path_index = 0;
};

/// The d-th roots of unity e^{2 k pi i / d}, k = 0..d-1, at `prec` bits.
std::vector<PrecComplex> start_roots(int d, long prec = 53);

/// Roots of a square-free p, each with |p(z)| <= 2^-target_bits * ||p||_2 and
/// err_bound <= 2^-target_bits, ordered by path index.
/// Throws NotSquareFree or PathFailure (resample the gamma angle).
std::vector<ApproxRoot> solve_univariate(const UniPolyZ& p, const TrackerConfig& cfg, long target_bits);

/// Newton iteration with doubling working precision until err_bound <= 2^-target_bits.
/// Throws NotConverging when z fails the basin check or iteration stalls.
ApproxRoot newton_refine(const UniPolyZ& p, const ApproxRoot& z, long target_bits);

/// Refines every root; keeps roots already at the target untouched.
std::vector<ApproxRoot> refine_all(const UniPolyZ& p, const std::vector<ApproxRoot>& roots, long target_bits);

/// p(z) at the working precision of z, with coefficients rounded to that precision.
PrecComplex evaluate(const UniPolyZ& p, const PrecComplex& z);

/// Bound on the rounding error of evaluate(p, z).
BigFloat evaluation_error(const UniPolyZ& p, const PrecComplex& z);

/// True when err_bound <= 2^-bits.
bool meets_bits(const ApproxRoot& r, long bits);

}  // namespace exfactor
