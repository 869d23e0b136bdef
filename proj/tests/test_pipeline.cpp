#include <doctest.h>

#include <set>

#include "exfactor/format.hpp"
#include "exfactor/parse.hpp"
#include "exfactor/pipeline.hpp"

using namespace exfactor;

namespace {

BivarPolyZ P(const char* s) { return parse_poly(s); }

std::set<std::pair<std::string, int>> factor_set(const FactorizationResult& r) {
  std::set<std::pair<std::string, int>> s;
  for (const auto& f : r.factors) s.emplace(to_string(f.poly), f.multiplicity);
  return s;
}

}  // namespace

TEST_CASE("sample_rational") {
  RngState rng(1);
  Rational prev = sample_rational(rng);
  for (int i = 0; i < 10000; ++i) {
    const Rational q = sample_rational(rng);
    CHECK(q != prev);
    CHECK(q >= Rational(1, 2));
    CHECK(q <= 2);
    Rational scaled = q * 101;
    scaled.canonicalize();
    CHECK(scaled.get_den() == 1);
    prev = q;
  }
  RngState a(42);
  RngState b(42);
  for (int i = 0; i < 20; ++i) CHECK(sample_rational(a) == sample_rational(b));
  for (int i = 0; i < 20; ++i) {
    const double t = a.sample_angle();
    CHECK(t >= -M_PI);
    CHECK(t < M_PI);
  }
}

TEST_CASE("reduce_input") {
  const auto r = reduce_input(P("6*x*(x*y-2)^2"));
  CHECK(r.content == 6);
  REQUIRE(r.units.size() == 1);
  CHECK(r.units[0].poly == P("x"));
  CHECK(r.units[0].multiplicity == 1);
  REQUIRE(r.parts.size() == 1);
  CHECK(r.parts[0].poly == P("x*y-2"));
  CHECK(r.parts[0].multiplicity == 2);

  const auto s = reduce_input(P("(x*y-2)*(x^2+y^2-1)"));
  CHECK(s.content == 1);
  CHECK(s.units.empty());
  REQUIRE(s.parts.size() == 1);
  CHECK(s.parts[0].poly == P("(x*y-2)*(x^2+y^2-1)"));

  const auto u = reduce_input(P("(y^2-2)*(x*y-2)"));
  REQUIRE(u.univariate.size() == 1);
  CHECK(u.univariate[0].poly == P("y^2-2"));
  REQUIRE(u.parts.size() == 1);
  CHECK(u.parts[0].poly == P("x*y-2"));

  CHECK_THROWS_AS(reduce_input(BivarPolyZ()), Error);
}

TEST_CASE("factorize small inputs") {
  const auto r = factorize(P("(x*y-2)*(x^2+y^2-1)"), 1);
  CHECK(r.content == 1);
  CHECK(factor_set(r) == std::set<std::pair<std::string, int>>{{"x*y-2", 1}, {"x^2+y^2-1", 1}});
  CHECK(verify(P("(x*y-2)*(x^2+y^2-1)"), r));

  const auto c = factorize(P("x^2+y^2-1"), 3);
  CHECK(factor_set(c) == std::set<std::pair<std::string, int>>{{"x^2+y^2-1", 1}});

  const auto m = factorize(P("x^2*y^2"), 1);
  CHECK(m.content == 1);
  CHECK(factor_set(m) == std::set<std::pair<std::string, int>>{{"x", 2}, {"y", 2}});

  const auto n = factorize(P("-6*x*(x*y-2)^2*(y^2-2)"), 5);
  CHECK(n.content == -6);
  CHECK(factor_set(n) == std::set<std::pair<std::string, int>>{{"x", 1}, {"x*y-2", 2}, {"y^2-2", 1}});

  const auto k = factorize(P("-4"), 1);
  CHECK(k.content == -4);
  CHECK(k.factors.empty());

  const auto uni = factorize(P("x^4-1"), 2);
  CHECK(factor_set(uni) == std::set<std::pair<std::string, int>>{{"x-1", 1}, {"x+1", 1}, {"x^2+1", 1}});

  CHECK_THROWS_AS(factorize(BivarPolyZ(), 1), Error);
}

TEST_CASE("factorize with swapped variables") {
  FactorizeOptions opts;
  opts.swap_vars = true;
  const BivarPolyZ F = P("(x+y)*(x^2+y-1)");
  const auto r = factorize(F, 9, opts);
  CHECK(factor_set(r) == std::set<std::pair<std::string, int>>{{"x+y", 1}, {"x^2+y-1", 1}});
  CHECK(verify(F, r));
}

TEST_CASE("verify") {
  const BivarPolyZ F = P("(x+1)*(x*y-2)");
  FactorizationResult good;
  good.content = 1;
  good.factors = {{P("x+1"), 1}, {P("x*y-2"), 1}};
  CHECK(verify(F, good));

  FactorizationResult flipped = good;
  flipped.factors[0].poly = P("-x-1");
  CHECK_FALSE(verify(F, flipped));

  FactorizationResult missing = good;
  missing.factors.pop_back();
  CHECK_FALSE(verify(F, missing));
}

TEST_CASE("factorization is deterministic for a seed") {
  const BivarPolyZ F = P("(x^2-y^3+2)*(x*y+y+3)");
  const auto a = factorize(F, 77);
  const auto b = factorize(F, 77);
  auto ja = to_json(a, 77, true);
  auto jb = to_json(b, 77, true);
  ja["stats"].erase("wall_seconds");
  jb["stats"].erase("wall_seconds");
  CHECK(ja == jb);
  CHECK(verify(F, a));
}

TEST_CASE("pinned base nodes are used") {
  FactorizeOptions opts;
  opts.base_y = Rational(97, 101);
  opts.base_x = Rational(113, 101);
  const auto r = factorize(P("(x*y-2)*(x^2+y^2-1)"), 1, opts);
  REQUIRE(r.stats.parts.size() == 1);
  CHECK(r.stats.parts[0].y0 == Rational(97, 101));
  CHECK(r.stats.parts[0].x0 == Rational(113, 101));
}
