#include <doctest.h>

#include <random>

#include "exfactor/algebra.hpp"
#include "exfactor/minpoly.hpp"
#include "oracles.hpp"

using namespace exfactor;

namespace {

UniPolyZ Z(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return UniPolyZ(std::move(v));
}

std::vector<BigInt> row(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return v;
}

// Root of p near `guess`, refined to `bits`.
ApproxRoot root_near(const UniPolyZ& p, cplx guess, long bits) {
  return newton_refine(p, ApproxRoot{PrecComplex(guess, 53), BigFloat(1.0, 64), 0}, bits);
}

long bits_for(int d, const BigInt& H) { return required_bits(d, H) + 12; }

}  // namespace

TEST_CASE("required bits") {
  CHECK(required_bits(1, 1) == 5);
  CHECK(required_bits(2, 2) == 14);
  CHECK(required_bits(2, 1) == 10);
  // Independent check of minimality: 4^s > 2^(d^2) (d+1)^(3d+4) H^(4d).
  for (int d = 1; d <= 6; ++d) {
    for (long h : {1L, 3L, 1000L}) {
      const long s = required_bits(d, h);
      oracle::Z rhs = oracle::Z(1) << (d * d);
      for (int i = 0; i < 3 * d + 4; ++i) rhs *= d + 1;
      for (int i = 0; i < 4 * d; ++i) rhs *= h;
      CHECK((oracle::Z(1) << (2 * s)) > rhs);
      CHECK_FALSE((oracle::Z(1) << (2 * (s - 1))) > rhs);
    }
  }
}

TEST_CASE("lattice construction") {
  auto b = build_lattice(PrecComplex(cplx(1, 0), 64), 1, 4);
  CHECK(b.rows == std::vector<std::vector<BigInt>>{row({1, 0, 16, 0}), row({0, 1, 16, 0})});
  auto i = build_lattice(PrecComplex(cplx(0, 1), 64), 2, 4);
  CHECK(i.rows == std::vector<std::vector<BigInt>>{row({1, 0, 0, 16, 0}), row({0, 1, 0, 0, 16}), row({0, 0, 1, -16, 0})});
  auto h = build_lattice(PrecComplex(cplx(0.5, 0), 64), 1, 8);
  CHECK(h.rows == std::vector<std::vector<BigInt>>{row({1, 0, 256, 0}), row({0, 1, 128, 0})});
}

TEST_CASE("LLL small cases") {
  LatticeBasis id{{row({1, 0, 0}), row({0, 1, 0}), row({0, 0, 1})}};
  CHECK(lll_reduce(id).rows == id.rows);

  auto r = lll_reduce(LatticeBasis{{row({2, 0}), row({1, 1})}});
  CHECK(r.rows[0] == row({1, 1}));
  CHECK(r.rows[1] == row({1, -1}));

  CHECK_THROWS_AS(lll_reduce(LatticeBasis{{row({1, 2}), row({2, 4})}}), std::invalid_argument);
}

TEST_CASE("LLL on scrambled bases satisfies both conditions") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    // Unimodular scrambling of a diagonal-ish basis.
    std::vector<std::vector<BigInt>> b(4, std::vector<BigInt>(4));
    for (int i = 0; i < 4; ++i) b[i][i] = 1 + static_cast<long>(rng() % 50);
    for (int k = 0; k < 12; ++k) {
      const int i = static_cast<int>(rng() % 4);
      const int j = static_cast<int>(rng() % 4);
      if (i == j) continue;
      const long q = static_cast<long>(rng() % 21) - 10;
      for (int c = 0; c < 4; ++c) b[i][c] += q * b[j][c];
    }
    const auto out = lll_reduce(LatticeBasis{b}).rows;
    const auto gs = oracle::gram_schmidt(out);
    CHECK(oracle::size_reduced(gs));
    CHECK(oracle::lovasz(gs));
    CHECK(oracle::gram_determinant(out) == oracle::gram_determinant(b));
  }
}

TEST_CASE("minimal polynomials") {
  const BigInt H2 = 2;
  CHECK(minimal_polynomial(root_near(Z({-2, 0, 1}), 1.414, bits_for(2, H2)), 2, H2) == Z({-2, 0, 1}));
  CHECK(minimal_polynomial(ApproxRoot{PrecComplex(cplx(0.5, 0), 64), BigFloat(0.0, 64), 0}, 1, 2) == Z({-1, 2}));

  const UniPolyZ cubic = Z({159984, -76824, -2060602, 989497});
  const BigInt H = height_bound(cubic);
  const auto r = root_near(cubic, 2.08247, bits_for(3, H));
  CHECK(minimal_polynomial(r, 3, H) == Z({-202, 97}));

  const auto coarse = root_near(Z({-2, 0, 1}), 1.414, 8);
  CHECK_THROWS_AS(minimal_polynomial(coarse, 2, H2), Error);
}

TEST_CASE("reciprocal path agrees with the direct one") {
  // 3/2 and 2/3 have reversed minimal polynomials.
  const UniPolyZ p = Z({-3, 2});
  const BigInt H = height_bound(Z({-3, 2}) * Z({1, 0, 1}));
  const auto big = root_near(p, 1.5, bits_for(3, H));
  const auto small = root_near(p.reversed(), 0.667, bits_for(3, H));
  CHECK(minimal_polynomial(big, 3, H) == Z({-3, 2}));
  CHECK(minimal_polynomial(small, 3, H) == Z({-2, 3}));
  CHECK(normalize(minimal_polynomial(small, 3, H).reversed()) == minimal_polynomial(big, 3, H));
}

TEST_CASE("grouping roots") {
  const UniPolyZ cubic = Z({159984, -76824, -2060602, 989497});
  const BigInt H = height_bound(cubic);
  TrackerConfig cfg;
  cfg.gamma_angle = 0.9;
  const auto roots = solve_univariate(cubic, cfg, bits_for(3, H));
  const auto groups = group_roots(roots, 3, H);
  REQUIRE(groups.size() == 2);
  UniPolyZ prod(BigInt(1));
  bool saw_circle = false;
  bool saw_line = false;
  for (const auto& g : groups) {
    CHECK(static_cast<int>(g.root_indices.size()) == g.min_poly.degree());
    saw_circle = saw_circle || g.min_poly == Z({-792, 0, 10201});
    saw_line = saw_line || g.min_poly == Z({-202, 97});
    prod = prod * g.min_poly;
  }
  CHECK(saw_circle);
  CHECK(saw_line);
  CHECK(prod == cubic);

  const auto sq = group_roots(solve_univariate(Z({-2, 0, 1}), cfg, bits_for(2, 2)), 2, 2);
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].min_poly == Z({-2, 0, 1}));

  const UniPolyZ two = Z({2, -3, 1});
  const BigInt H2 = height_bound(two);
  const auto lin = group_roots(solve_univariate(two, cfg, bits_for(2, H2)), 2, H2);
  REQUIRE(lin.size() == 2);
  CHECK(lin[0].min_poly * lin[1].min_poly == two);
}
