#pragma once

// End-to-end factorization: exact reductions, numerical root groups,
// degree detection, node reconstruction, interpolation, and an exact
// verification gate on every returned factor.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "exfactor/bivar.hpp"
#include "exfactor/tracker.hpp"

namespace exfactor {

struct FactorizeOptions {
  int max_restarts = 5;
  long max_bits = 65536;
  /// Factor F(y, x) and swap back.
  bool swap_vars = false;
  TrackerConfig tracker;
  /// Pinned base nodes for the first attempt (sampled when absent).
  std::optional<Rational> base_y;
  std::optional<Rational> base_x;
};

struct Factor {
  BivarPolyZ poly;
  int multiplicity = 1;
};

struct FactorTrace {
  BivarPolyZ factor;
  UniPolyZ min_poly;
  std::vector<int> group;
  std::array<int, 2> degree_pair{0, 0};
  int mu = 0;
  std::vector<Rational> nodes;
  std::vector<UniPolyZ> node_polys;
  /// lambda_1..lambda_k.
  std::vector<Rational> lambda;
};

struct PartTrace {
  BivarPolyZ part;
  Rational y0;
  Rational x0;
  std::vector<UniPolyZ> x_min_polys;
  std::vector<UniPolyZ> y_min_polys;
  std::vector<FactorTrace> factors;
  int attempts = 0;
  std::vector<std::string> failures;
};

struct FactorizationStats {
  int retries = 0;
  long max_precision_bits = 0;
  std::vector<int> nodes_per_factor;
  double wall_seconds = 0.0;
  std::vector<PartTrace> parts;
};

struct FactorizationResult {
  Rational content;
  /// Primitive, positive leading coefficient, sorted by degree pair then terms.
  std::vector<Factor> factors;
  FactorizationStats stats;
};

/// Seeded source of sample nodes and gamma angles; the same seed yields the
/// same sequence on every platform.
class RngState {
 public:
  explicit RngState(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws() const { return draws_; }

  /// p / 101 with p uniform in [51, 202], in lowest terms; never equal to the
  /// previous value.
  Rational sample_rational();
  /// Uniform in [-pi, pi).
  double sample_angle();

 private:
  std::uint64_t below(std::uint64_t n);

  std::mt19937_64 engine_;
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
  std::optional<Rational> last_;
};

inline Rational sample_rational(RngState& rng) { return rng.sample_rational(); }

struct ReducedInput {
  BigInt content;
  /// x and y with their multiplicities.
  std::vector<Factor> units;
  /// Square-free primitive polynomials in a single variable.
  std::vector<Factor> univariate;
  /// Square-free primitive parts involving both variables, free of
  /// univariate factors.
  std::vector<Factor> parts;
};

/// Throws ZeroPolynomial for F = 0.
ReducedInput reduce_input(const BivarPolyZ& F);

/// Throws FactorizationFailed when restarts or the precision cap are exhausted.
FactorizationResult factorize(const BivarPolyZ& F, std::uint64_t seed, const FactorizeOptions& opts = {});

/// content * prod factor^mult == F, exactly.
bool verify(const BivarPolyZ& F, const FactorizationResult& result);

/// Canonical order used for factor lists.
bool canonical_less(const Factor& a, const Factor& b);

}  // namespace exfactor
