// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "exfactor/algebra.hpp"
#include "exfactor/format.hpp"
#include "exfactor/interpolate.hpp"
#include "exfactor/minpoly.hpp"
#include "exfactor/parse.hpp"
#include "exfactor/pipeline.hpp"
#include "oracles.hpp"

using namespace exfactor;

namespace {

UniPolyZ Z(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return UniPolyZ(std::move(v));
}

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

int failures = 0;

void report(const char* id, const char* title, const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  std::cout << id << ' ' << (c.ok ? "PASS" : "FAIL") << "  " << title;
  if (!c.ok) std::cout << "  [" << c.why.str() << ']';
  std::cout << std::endl;
  if (!c.ok) ++failures;
}

oracle::Q to_q(const BigFloat& v) {
  oracle::Q q;
  mpfr_get_q(q.get_mpq_t(), v.get());
  return q;
}

// |p(z)|^2 in exact rational complex arithmetic.
oracle::Q residual_sq(const UniPolyZ& p, const PrecComplex& z) {
  const oracle::Q zr = to_q(z.re());
  const oracle::Q zi = to_q(z.im());
  oracle::Q re = 0;
  oracle::Q im = 0;
  for (int i = p.degree(); i >= 0; --i) {
    const oracle::Q nr = re * zr - im * zi + oracle::Q(p.coeff(i));
    const oracle::Q ni = re * zi + im * zr;
    re = nr;
    im = ni;
  }
  return re * re + im * im;
}

UniPolyZ golden_minpoly(const UniPolyZ& container, cplx target) {
  const int d = container.degree();
  const BigInt H = height_bound(container);
  TrackerConfig cfg;
  cfg.gamma_angle = 0.61;
  const auto roots = solve_univariate(container, cfg, required_bits(d, H) + 12);
  const auto it = std::min_element(roots.begin(), roots.end(), [&](const ApproxRoot& a, const ApproxRoot& b) {
    return std::abs(a.value.to_complex() - target) < std::abs(b.value.to_complex() - target);
  });
  return minimal_polynomial(*it, d, H);
}

void ac1() {
  report("AC1", "worked example: factors, golden intermediates, time", [](Check& c) {
    const BivarPolyZ F = parse_poly("x^3*y+x*y^3-x*y-2*x^2-2*y^2+2");
    c.expect(F == parse_poly("(x*y-2)*(x^2+y^2-1)"), "expanded input mismatch");

    const auto t0 = std::chrono::steady_clock::now();
    const auto free_run = factorize(F, 1);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::set<std::string> got;
    for (const auto& f : free_run.factors) got.insert(to_string(f.poly));
    c.expect(got == std::set<std::string>{"x*y-2", "x^2+y^2-1"}, "factor set");
    c.expect(secs < 10.0, "wall time " + std::to_string(secs));

    FactorizeOptions opts;
    opts.base_y = Rational(97, 101);
    opts.base_x = Rational(113, 101);
    const auto pinned = factorize(F, 1, opts);
    c.expect(verify(F, pinned), "pinned run verify");
    c.expect(pinned.stats.parts.size() == 1, "one part");
    if (pinned.stats.parts.size() != 1) return;
    const PartTrace& t = pinned.stats.parts[0];
    c.expect(t.y0 == Rational(97, 101), "y0 not pinned");
    std::set<std::string> mins;
    for (const auto& m : t.x_min_polys) mins.insert(to_string(m));
    c.expect(mins == std::set<std::string>{"10201*x^2-792", "97*x-202"}, "minimal polynomials");

    std::multiset<std::size_t> sizes;
    std::set<std::pair<std::string, std::array<int, 2>>> pairs;
    std::set<std::pair<std::string, int>> mus;
    for (const auto& f : t.factors) {
      sizes.insert(f.group.size());
      pairs.emplace(to_string(f.factor), f.degree_pair);
      mus.emplace(to_string(f.factor), f.mu);
    }
    c.expect(sizes == std::multiset<std::size_t>{1, 2}, "group sizes");
    c.expect(pairs == std::set<std::pair<std::string, std::array<int, 2>>>{{"x^2+y^2-1", {2, 2}}, {"x*y-2", {1, 1}}},
             "degree pairs");
    c.expect(mus == std::set<std::pair<std::string, int>>{{"x^2+y^2-1", 4}, {"x*y-2", 2}}, "mu values");

    // Injected node list for the circle factor.
    const std::vector<Rational> ys{Rational(97, 101), Rational(1), Rational(104, 101), Rational(123, 101),
                                   Rational(129, 101)};
    const std::vector<UniPolyZ> ps{Z({-792, 0, 10201}), Z({0, 0, 1}), Z({615, 0, 10201}), Z({4928, 0, 10201}),
                                   Z({6440, 0, 10201})};
    std::vector<NodeRecord> recs;
    for (std::size_t i = 0; i < ys.size(); ++i) recs.push_back({ys[i], ps[i], 1});
    auto lambda = scaling_constants(make_scaling_system(recs, 2));
    lambda.insert(lambda.begin(), Rational(1));
    c.expect(lambda == std::vector<Rational>{1, 10201, 1, 1, 1}, "lambda vector");
    c.expect(assemble_factor(recs, lambda, 2) == parse_poly("x^2+y^2-1"), "assembled circle");
  });
}

void ac2() {
  report("AC2", "Lagrange assembly of the circle from three nodes", [](Check& c) {
    const std::vector<UniPolyQ> polys{UniPolyQ(std::vector<Rational>{Rational(-3, 4), 0, 1}),
                                      UniPolyQ(std::vector<Rational>{-1, 0, 1}),
                                      UniPolyQ(std::vector<Rational>{Rational(-3, 4), 0, 1})};
    const auto f = assemble_factor({Rational(-1, 2), 0, Rational(1, 2)}, polys, {1, 1, 1}, 2);
    c.expect(f == parse_poly("x^2+y^2-1"), "got " + to_string(f));
  });
}

void ac3() {
  report("AC3", "scaling constants for xy-1", [](Check& c) {
    ScalingSystem sys;
    sys.nodes = {Rational(4), Rational(2), Rational(3)};
    sys.A = {{Rational(-1, 4), 1}, {Rational(-1, 2), 1}, {Rational(-1, 3), 1}};
    sys.n = 1;
    const auto lam = scaling_constants(sys);
    c.expect(lam == std::vector<Rational>{Rational(1, 2), Rational(3, 4)}, "lambda");
    const std::vector<UniPolyQ> polys{UniPolyQ(std::vector<Rational>{Rational(-1, 4), 1}),
                                      UniPolyQ(std::vector<Rational>{Rational(-1, 2), 1}),
                                      UniPolyQ(std::vector<Rational>{Rational(-1, 3), 1})};
    std::vector<Rational> full{1};
    full.insert(full.end(), lam.begin(), lam.end());
    const auto f = assemble_factor(sys.nodes, polys, full, 1);
    c.expect(f == parse_poly("x*y-1"), "got " + to_string(f));
  });
}

void ac4() {
  report("AC4", "minimal polynomial golden suite", [](Check& c) {
    const double phi = (1 + std::sqrt(5.0)) / 2;
    struct Golden {
      UniPolyZ container;
      cplx near;
      UniPolyZ expect;
    };
    const std::vector<Golden> cases{
        {Z({-2, 0, 1}) * Z({3, 1}), std::sqrt(2.0), Z({-2, 0, 1})},
        {Z({-1, -1, 1}) * Z({-1, 2}), phi, Z({-1, -1, 1})},
        {Z({159984, -76824, -2060602, 989497}), 202.0 / 97, Z({-202, 97})},
        {Z({1, 0, 1}) * Z({-5, 0, 1}), cplx(0, 1), Z({1, 0, 1})},
    };
    for (const auto& g : cases) {
      const auto got = golden_minpoly(g.container, g.near);
      c.expect(got == g.expect, "expected " + to_string(g.expect) + ", got " + to_string(got));
    }
  });
}

void ac5() {
  report("AC5", "round trip on 200 seeded products", [](Check& c) {
    std::ifstream in(CORPUS_PATH);
    c.expect(static_cast<bool>(in), "corpus missing");
    if (!in) return;
    const auto corpus = nlohmann::json::parse(in);
    int n = 0;
    int exact = 0;
    for (const auto& k : corpus.at("cases")) {
      const BivarPolyZ F = parse_poly(k.at("input").get<std::string>());
      std::set<std::string> want;
      for (const auto& f : k.at("factors")) want.insert(to_string(parse_poly(f.get<std::string>())));
      FactorizationResult r;
      try {
        r = factorize(F, 1000 + static_cast<std::uint64_t>(n));
      } catch (const Error& e) {
        c.expect(false, "case " + std::to_string(n) + ": " + e.what());
        ++n;
        continue;
      }
      c.expect(verify(F, r), "case " + std::to_string(n) + " does not re-multiply");
      std::set<std::string> got;
      for (const auto& f : r.factors) got.insert(to_string(f.poly));
      if (got == want && r.content == 1) {
        ++exact;
      } else {
        c.expect(false, "case " + std::to_string(n) + " factor set differs");
      }
      ++n;
    }
    c.expect(n == 200, "expected 200 cases, found " + std::to_string(n));
    c.expect(exact == n, std::to_string(exact) + "/" + std::to_string(n) + " exact");
  });
}

void ac6() {
  report("AC6", "LLL conditions on 100 random bases", [](Check& c) {
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<long> entry(-1000000, 1000000);
    int done = 0;
    while (done < 100) {
      const std::size_t dim = 2 + rng() % 7;
      const std::size_t cols = dim + rng() % 3;
      std::vector<std::vector<BigInt>> b(dim, std::vector<BigInt>(cols));
      for (auto& row : b) {
        for (auto& v : row) v = entry(rng);
      }
      const auto det = oracle::gram_determinant(b);
      if (det == 0) continue;
      const auto out = lll_reduce(LatticeBasis{b}).rows;
      const auto gs = oracle::gram_schmidt(out);
      c.expect(oracle::size_reduced(gs), "basis " + std::to_string(done) + " not size-reduced");
      c.expect(oracle::lovasz(gs), "basis " + std::to_string(done) + " fails Lovasz");
      c.expect(oracle::gram_determinant(out) == det, "basis " + std::to_string(done) + " determinant changed");
      ++done;
    }
  });
}

void ac7() {
  report("AC7", "homotopy residuals and exact reconstruction", [](Check& c) {
    std::mt19937_64 rng(707);
    std::uniform_int_distribution<long> coef(-50, 50);
    int done = 0;
    while (done < 100) {
      const int d = 1 + static_cast<int>(rng() % 12);
      std::vector<BigInt> v;
      for (int i = 0; i <= d; ++i) v.emplace_back(coef(rng));
      if (v.back() <= 0) v.back() = 1 + static_cast<long>(rng() % 50);
      const UniPolyZ p(v);
      if (content_primitive(p).content != 1 || !is_squarefree(p)) continue;

      TrackerConfig cfg;
      cfg.gamma_angle = std::uniform_real_distribution<double>(-M_PI, M_PI)(rng);
      auto roots = solve_univariate(p, cfg, 40);
      c.expect(static_cast<int>(roots.size()) == d, "root count");
      const oracle::Q bound = oracle::Q(norm2_squared(p)) / oracle::Q(oracle::Z(1) << 80);
      for (const auto& r : roots) c.expect(residual_sq(p, r.value) <= bound, "residual above 2^-40 |p|");

      double rmag = 0;
      for (const auto& r : roots) rmag = std::max(rmag, std::abs(r.value.to_complex()));
      const double thr = rounding_threshold(d, rmag + 1e-6, p.lead());
      const long bits = static_cast<long>(std::ceil(-std::log2(thr))) + 2;
      if (bits > 40) roots = solve_univariate(p, cfg, bits);
      c.expect(node_polynomial(roots, p.lead()) == p, "reconstruction of degree " + std::to_string(d));
      ++done;
    }
  });
}

void ac8() {
  report("AC8", "coefficient perturbation bound", [](Check& c) {
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> ang(-M_PI, M_PI);
    const double delta = 1e-6;
    for (int trial = 0; trial < 100; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 8);
      std::vector<std::complex<long double>> exact;
      std::vector<std::complex<long double>> moved;
      double r = 0;
      for (int i = 0; i < m; ++i) {
        const std::complex<long double> z(u(rng), u(rng));
        exact.push_back(z);
        moved.push_back(z + std::complex<long double>(std::polar(delta, ang(rng))));
        r = std::max({r, static_cast<double>(std::abs(z)), static_cast<double>(std::abs(moved.back()))});
      }
      const auto p = oracle::from_roots(exact);
      const auto q = oracle::from_roots(moved);
      long double worst = 0;
      for (std::size_t i = 0; i < p.size(); ++i) worst = std::max(worst, std::abs(p[i] - q[i]));
      c.expect(static_cast<double>(worst) <= perturbation_bound(m, r, delta), "trial " + std::to_string(trial));
    }
  });
}

}  // namespace

int main() {
  ac1();
  ac2();
  ac3();
  ac4();
  ac5();
  ac6();
  ac7();
  ac8();
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
