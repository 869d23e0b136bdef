#include <doctest.h>

#include <algorithm>
#include <random>

#include "exfactor/algebra.hpp"
#include "exfactor/rootsolve.hpp"
#include "oracles.hpp"

using namespace exfactor;

namespace {

UniPolyZ Z(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return UniPolyZ(std::move(v));
}

TrackerConfig cfg_with(double theta) {
  TrackerConfig c;
  c.gamma_angle = theta;
  return c;
}

std::vector<cplx> sorted_values(const std::vector<ApproxRoot>& r) {
  std::vector<cplx> v;
  for (const auto& a : r) v.push_back(a.value.to_complex());
  std::sort(v.begin(), v.end(), [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  return v;
}

}  // namespace

TEST_CASE("start roots") {
  auto one = start_roots(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_complex() == cplx(1, 0));
  auto two = start_roots(2);
  CHECK(two[1].to_complex() == cplx(-1, 0));
  auto four = start_roots(4, 200);
  CHECK(four[1].to_complex() == cplx(0, 1));
  CHECK(four[2].to_complex() == cplx(-1, 0));
  CHECK(four[3].to_complex() == cplx(0, -1));
  auto six = start_roots(6, 128);
  CHECK(std::abs(six[1].to_complex() - std::polar(1.0, M_PI / 3)) < 1e-15);
  CHECK_THROWS_AS(start_roots(0), std::invalid_argument);
}

TEST_CASE("tracker config validation") {
  TrackerConfig c;
  CHECK_NOTHROW(c.validate());
  c.min_step = 0.5;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = TrackerConfig{};
  c.max_corrector_iters = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = TrackerConfig{};
  c.gamma_angle = 4.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("solve simple polynomials") {
  auto r = sorted_values(solve_univariate(Z({-1, 0, 1}), cfg_with(0.7), 60));
  CHECK(std::abs(r[0] + 1.0) < 1e-15);
  CHECK(std::abs(r[1] - 1.0) < 1e-15);

  const auto unity = solve_univariate(Z({-1, 0, 0, 0, 0, 1}), cfg_with(-1.1), 60);
  const auto starts = start_roots(5, 80);
  for (const auto& a : unity) {
    CHECK(std::abs(a.value.to_complex() - starts[static_cast<std::size_t>(a.path_index)].to_complex()) < 1e-14);
  }
}

TEST_CASE("worked-example cubic matches radicals") {
  const UniPolyZ p = Z({159984, -76824, -2060602, 989497});
  const auto roots = solve_univariate(p, cfg_with(2.3), 120);
  REQUIRE(roots.size() == 3);
  // 202/97 and +-sqrt(792)/101, compared at 100 bits.
  const oracle::Q s = oracle::sqrt_bisect(oracle::Q(792), 110) / 101;
  std::vector<oracle::Q> expect{oracle::Q(202, 97), s, -s};
  for (const auto& a : roots) {
    CHECK(std::abs(a.value.im().to_double()) < 1e-30);
    bool hit = false;
    for (const auto& e : expect) {
      const BigFloat diff = abs(a.value.re() - BigFloat(Rational(e), 300));
      if (diff < exp2_int(-100, 64)) hit = true;
    }
    CHECK(hit);
    CHECK(meets_bits(a, 120));
  }
}

TEST_CASE("newton refinement") {
  ApproxRoot z{PrecComplex(cplx(1.4, 0), 53), BigFloat(1.0, 64), 0};
  const auto r = newton_refine(Z({-2, 0, 1}), z, 40);
  CHECK(meets_bits(r, 40));
  const oracle::Q root = oracle::sqrt_bisect(oracle::Q(2), 60);
  CHECK(abs(r.value.re() - BigFloat(Rational(root), 128)) < exp2_int(-40, 64));

  ApproxRoot one{PrecComplex(cplx(1, 0), 53), BigFloat(1.0, 64), 0};
  const auto u = newton_refine(Z({-1, 1}), one, 50);
  CHECK(u.value.to_complex() == cplx(1, 0));
  CHECK(meets_bits(u, 50));

  ApproxRoot c{PrecComplex(cplx(-0.2786, 0), 53), BigFloat(1.0, 64), 0};
  const auto w = newton_refine(Z({-792, 0, 10201}), c, 200);
  const oracle::Q s = oracle::sqrt_bisect(oracle::Q(792), 220) / 101;
  CHECK(abs(w.value.re() + BigFloat(Rational(s), 300)) < exp2_int(-200, 64));

  ApproxRoot far{PrecComplex(cplx(0.0, 0), 53), BigFloat(1.0, 64), 0};
  CHECK_THROWS_AS(newton_refine(Z({-2, 0, 1}), far, 40), Error);
}

TEST_CASE("solver rejects repeated roots") {
  CHECK_THROWS_AS(solve_univariate(Z({1, 2, 1}), TrackerConfig{}, 40), Error);
}

TEST_CASE("real polynomials give conjugate-closed roots; solving is deterministic") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<BigInt> c;
    const int d = 2 + static_cast<int>(rng() % 7);
    for (int i = 0; i <= d; ++i) c.emplace_back(static_cast<long>(rng() % 41) - 20);
    c.back() = 1 + static_cast<long>(rng() % 9);
    const UniPolyZ p(c);
    if (!is_squarefree(p) || p.coeff(0) == 0) continue;
    const auto a = solve_univariate(p, cfg_with(0.4), 60);
    const auto b = solve_univariate(p, cfg_with(0.4), 60);
    REQUIRE(a.size() == static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].path_index == static_cast<int>(i));
      CHECK(a[i].value.re() == b[i].value.re());
      CHECK(a[i].value.im() == b[i].value.im());
      const cplx z = a[i].value.to_complex();
      const bool closed = std::any_of(a.begin(), a.end(), [&](const ApproxRoot& w) {
        return std::abs(std::conj(z) - w.value.to_complex()) <= 1e-15 * (1 + std::abs(z));
      });
      CHECK(closed);
    }
  }
}
