#pragma once

// Minimal polynomials of algebraic numbers from numerical approximations,
// via integral LLL on the classical power-basis lattice.

#include <array>
#include <vector>

#include "exfactor/rootsolve.hpp"

namespace exfactor {

struct LatticeBasis {
  std::vector<std::vector<BigInt>> rows;
};

struct RootGroup {
  std::vector<int> root_indices;
  UniPolyZ min_poly;
  /// [deg_x, deg_y] of the factor; filled by detect_degrees.
  std::array<int, 2> degree_pair{0, 0};
};

/// Smallest s >= 1 with 2^s > 2^(d^2/2) (d+1)^((3d+4)/2) H^(2d).
long required_bits(int d, const BigInt& H);

/// Rows e_i | round(2^s Re a^i) | round(2^s Im a^i), i = 0..n.
LatticeBasis build_lattice(const PrecComplex& a, int n, long s);

/// Integral LLL with delta = 3/4. Throws std::invalid_argument on dependent rows.
LatticeBasis lll_reduce(const LatticeBasis& basis);

/// Throws PrecisionTooLow when a.err_bound > 2^-s / (12 d), NoCandidateFound
/// when no degree up to d passes the acceptance bound.
UniPolyZ minimal_polynomial(const ApproxRoot& a, int d, const BigInt& H);

/// Partitions `roots` (all roots of one square-free polynomial of degree d)
/// by minimal polynomial. Throws InconsistentGrouping.
std::vector<RootGroup> group_roots(const std::vector<ApproxRoot>& roots, int d, const BigInt& H);

}  // namespace exfactor
