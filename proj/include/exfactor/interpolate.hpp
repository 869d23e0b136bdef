#pragma once

// From approximate roots to exact node polynomials, and from node
// polynomials at several y-nodes to the bivariate factor.

#include <vector>

#include "exfactor/bivar.hpp"
#include "exfactor/rootsolve.hpp"

namespace exfactor {

struct NodeRecord {
  Rational y;
  /// Primitive, positive leading coefficient.
  UniPolyZ node_poly;
  BigInt alpha_used;
};

struct ScalingSystem {
  std::vector<Rational> nodes;
  /// Row i holds node i's polynomial coefficients, ascending powers of x.
  std::vector<std::vector<Rational>> A;
  /// Degree of the factor in y.
  int n = 0;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// 1 / (2 alpha M) with M = max_i i r^(i-1) C(m, i) + 1.
double rounding_threshold(int m, double r_mag, const BigInt& alpha);

/// First-order coefficient perturbation bound for a monic degree-m
/// polynomial whose roots (modulus <= r_mag) each move by at most delta:
/// (max_i r^(i-1) C(m-1, i-1) m + 1) delta.
double perturbation_bound(int m, double r_mag, double delta);

/// Primitive part of round(alpha * prod (x - x_i)). Throws PrecisionTooLow
/// when a coefficient is more than 1/4 from an integer or has a large
/// imaginary part.
UniPolyZ node_polynomial(const std::vector<ApproxRoot>& roots, const BigInt& alpha);

/// ceil(r n / (r - 1)). Throws RankOne for r < 2.
int required_nodes(int r_rank, int n);

/// Exact rank over Q.
int matrix_rank(RationalMatrix m);

/// Basis of the right nullspace over Q.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

ScalingSystem make_scaling_system(const std::vector<NodeRecord>& records, int n);

/// lambda_1..lambda_k with lambda_0 = 1.
/// Throws NeedMoreNodes (nullity > 1) or Inconsistent.
std::vector<Rational> scaling_constants(const ScalingSystem& sys);

/// sum lambda_i f_i(x) l_i(y) over the Lagrange basis of the nodes, as a
/// primitive integer polynomial. `lambda` includes lambda_0.
/// Throws DegreeOverflow when a power of y above n survives.
BivarPolyZ assemble_factor(const std::vector<Rational>& nodes, const std::vector<UniPolyQ>& polys,
                           const std::vector<Rational>& lambda, int n);
BivarPolyZ assemble_factor(const std::vector<NodeRecord>& records, const std::vector<Rational>& lambda, int n);

}  // namespace exfactor
