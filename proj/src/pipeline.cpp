#include "exfactor/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "exfactor/algebra.hpp"
#include "exfactor/continuation.hpp"
#include "exfactor/interpolate.hpp"
#include "exfactor/minpoly.hpp"
#include "exfactor/rootsolve.hpp"

namespace exfactor {

RngState::RngState(std::uint64_t seed) : engine_(seed), seed_(seed) {}

std::uint64_t RngState::below(std::uint64_t n) {
  // Rejection sampling keeps the result independent of the standard library.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    ++draws_;
    const std::uint64_t v = engine_();
    if (v < limit) return v % n;
  }
}

Rational RngState::sample_rational() {
  for (;;) {
    Rational v(static_cast<long>(51 + below(152)), 101);
    v.canonicalize();
    if (last_ && *last_ == v) continue;
    last_ = v;
    return v;
  }
}

double RngState::sample_angle() {
  ++draws_;
  const double u = std::ldexp(static_cast<double>(engine_() >> 11), -53);
  return -M_PI + 2.0 * M_PI * u;
}

namespace {

constexpr int kGammaTries = 8;
constexpr int kNodeTries = 64;

bool retryable(Errc c) { return c != Errc::FactorizationFailed && c != Errc::ZeroPolynomial; }

long ceil_log2(double v) { return static_cast<long>(std::ceil(std::log2(v))); }

class Budget {
 public:
  Budget(const FactorizeOptions& opts, int attempt, FactorizationStats& stats)
      : opts_(opts), attempt_(attempt), stats_(stats) {}

  long bits(long base) {
    const long b = base << attempt_;
    if (b > opts_.max_bits) {
      throw Error(Errc::FactorizationFailed,
                  "precision cap of " + std::to_string(opts_.max_bits) + " bits exceeded (" + std::to_string(b) + ")");
    }
    stats_.max_precision_bits = std::max(stats_.max_precision_bits, b);
    return b;
  }

 private:
  const FactorizeOptions& opts_;
  int attempt_;
  FactorizationStats& stats_;
};

long minpoly_bits(int d, const BigInt& H) { return required_bits(d, H) + ceil_log2(12.0 * d) + 4; }

std::vector<ApproxRoot> solve_resampling(const UniPolyZ& p, TrackerConfig cfg, long bits, RngState& rng) {
  std::string last;
  for (int i = 0; i < kGammaTries; ++i) {
    cfg.gamma_angle = rng.sample_angle();
    try {
      return solve_univariate(p, cfg, bits);
    } catch (const Error& e) {
      if (e.code() != Errc::PathFailure && e.code() != Errc::NotConverging) throw;
      last = e.what();
    }
  }
  throw Error(Errc::PathFailure, "root solve failed for every gamma: " + last);
}

// Groups roots of p; inflates H once when no candidate passes.
std::vector<RootGroup> group_checked(const UniPolyZ& p, std::vector<ApproxRoot>& roots, BigInt H, Budget& budget) {
  const int d = p.degree();
  std::vector<RootGroup> groups;
  try {
    groups = group_roots(roots, d, H);
  } catch (const Error& e) {
    if (e.code() != Errc::NoCandidateFound) throw;
    H *= 2;
    roots = refine_all(p, roots, budget.bits(minpoly_bits(d, H)));
    groups = group_roots(roots, d, H);
  }
  UniPolyZ prod(BigInt(1));
  for (const auto& g : groups) prod = prod * g.min_poly;
  if (prod != p) throw Error(Errc::InconsistentGrouping, "minimal polynomials do not multiply back to the specialization");
  return groups;
}

std::vector<UniPolyZ> factor_univariate(const UniPolyZ& p, const TrackerConfig& cfg, RngState& rng, Budget& budget) {
  const int d = p.degree();
  if (d <= 1) return {p};
  const BigInt H = height_bound(p);
  auto roots = solve_resampling(p, cfg, budget.bits(minpoly_bits(d, H)), rng);
  std::vector<UniPolyZ> out;
  for (const auto& g : group_checked(p, roots, H, budget)) out.push_back(g.min_poly);
  return out;
}

struct Node {
  Rational y;
  UniPolyZ spec;  // primitive F(x, y)
};

std::optional<UniPolyZ> admissible(const BivarPolyZ& f, Var var, const Rational& v) {
  const UniPolyQ q = specialize(f, var, v);
  const int expected = var == Var::Y ? f.deg_x() : f.deg_y();
  if (q.degree() != expected) return std::nullopt;
  UniPolyZ p = primitive_from_rational(q);
  if (!is_squarefree(p)) return std::nullopt;
  return p;
}

Node pick_node(const BivarPolyZ& f, Var var, RngState& rng, const std::vector<Rational>& avoid,
               const std::optional<Rational>& pinned) {
  if (pinned) {
    if (auto p = admissible(f, var, *pinned)) return {*pinned, *p};
  }
  for (int i = 0; i < kNodeTries; ++i) {
    const Rational v = rng.sample_rational();
    if (std::find(avoid.begin(), avoid.end(), v) != avoid.end()) continue;
    if (auto p = admissible(f, var, v)) return {v, *p};
  }
  throw Error(Errc::Inconsistent, "no admissible specialization node found");
}

class PartSolver {
 public:
  PartSolver(const BivarPolyZ& f, const FactorizeOptions& opts, RngState& rng, Budget& budget, PartTrace& trace,
             bool pin)
      : f_(f), opts_(opts), rng_(rng), budget_(budget), trace_(trace), pin_(pin) {}

  std::vector<BivarPolyZ> run() {
    const int m = f_.deg_x();
    const int n = f_.deg_y();
    const TrackerConfig& cfg = opts_.tracker;

    const Node base_y = pick_node(f_, Var::Y, rng_, {}, pin_ ? opts_.base_y : std::nullopt);
    const Node base_x = pick_node(f_, Var::X, rng_, {}, pin_ ? opts_.base_x : std::nullopt);
    trace_.y0 = base_y.y;
    trace_.x0 = base_x.y;
    shared_.push_back(base_y);

    const BigInt hx = height_bound(base_y.spec);
    auto roots_x = solve_resampling(base_y.spec, cfg, budget_.bits(minpoly_bits(m, hx)), rng_);
    const auto groups_x = group_checked(base_y.spec, roots_x, hx, budget_);
    const BigInt hy = height_bound(base_x.spec);
    auto roots_y = solve_resampling(base_x.spec, cfg, budget_.bits(minpoly_bits(n, hy)), rng_);
    const auto groups_y = group_checked(base_x.spec, roots_y, hy, budget_);
    for (const auto& g : groups_x) trace_.x_min_polys.push_back(g.min_poly);
    for (const auto& g : groups_y) trace_.y_min_polys.push_back(g.min_poly);

    if (groups_x.size() == 1 && groups_y.size() == 1) {
      FactorTrace t;
      t.factor = f_;
      t.min_poly = groups_x.front().min_poly;
      t.group = groups_x.front().root_indices;
      t.degree_pair = {m, n};
      trace_.factors.push_back(std::move(t));
      return {f_};
    }
    if (groups_x.size() != groups_y.size()) {
      throw Error(Errc::InconsistentGrouping, "x and y specializations split into different numbers of factors");
    }

    const auto degrees = detect_with_resampling(groups_x, roots_x, groups_y, roots_y, base_x.y, base_y.y);
    int sa = 0;
    int sb = 0;
    for (const auto& d : degrees) {
      sa += d[0];
      sb += d[1];
    }
    if (sa != m || sb != n) throw Error(Errc::InconsistentGrouping, "degree pairs do not add up to the degree of f");

    std::vector<BivarPolyZ> factors;
    BivarPolyZ product = BivarPolyZ::constant(1);
    for (std::size_t g = 0; g < groups_x.size(); ++g) {
      std::vector<ApproxRoot> roots;
      for (int idx : groups_x[g].root_indices) roots.push_back(roots_x[static_cast<std::size_t>(idx)]);
      BivarPolyZ h = reconstruct(groups_x[g], roots, degrees[g]);
      product = product * h;
      factors.push_back(std::move(h));
    }
    if (product != f_) throw Error(Errc::Inconsistent, "reconstructed factors do not multiply back to the part");
    return factors;
  }

 private:
  std::vector<std::array<int, 2>> detect_with_resampling(const std::vector<RootGroup>& gx,
                                                         const std::vector<ApproxRoot>& rx,
                                                         const std::vector<RootGroup>& gy,
                                                         const std::vector<ApproxRoot>& ry, const Rational& x0,
                                                         const Rational& y0) {
    std::string last;
    for (int i = 0; i < kGammaTries; ++i) {
      const cplx gamma = std::polar(1.0, rng_.sample_angle());
      try {
        return detect_degrees(f_, gx, rx, gy, ry, x0, y0, gamma, opts_.tracker);
      } catch (const Error& e) {
        if (e.code() != Errc::PathFailure && e.code() != Errc::UnmatchedEndpoint) throw;
        last = e.what();
      }
    }
    throw Error(Errc::UnmatchedEndpoint, "degree detection failed for every gamma: " + last);
  }

  // Node polynomial of the group at shared node j, or nullopt for a bad node.
  std::optional<NodeRecord> node_record(const std::vector<ApproxRoot>& roots, const Node& node, int a) {
    const Rational& y0 = shared_.front().y;
    std::optional<std::vector<ApproxRoot>> moved;
    for (int i = 0; i < kGammaTries / 2 && !moved; ++i) {
      const cplx gamma = std::polar(1.0, rng_.sample_angle());
      try {
        moved = transport_group(f_, roots, y0, node.y, gamma, opts_.tracker);
      } catch (const Error& e) {
        if (e.code() != Errc::PathFailure) throw;
      }
    }
    if (!moved) return std::nullopt;

    const BigInt& alpha = node.spec.lead();
    double rmag = 0.0;
    for (const auto& r : *moved) rmag = std::max(rmag, std::abs(r.value.to_complex()));
    const double delta = rounding_threshold(a, rmag + 1.0, alpha);
    const long bits = budget_.bits(std::max<long>(16, ceil_log2(1.0 / delta) + 4));
    std::vector<ApproxRoot> refined;
    try {
      for (const auto& r : *moved) refined.push_back(newton_refine(node.spec, r, bits));
      UniPolyZ q = node_polynomial(refined, alpha);
      if (q.degree() != a) return std::nullopt;
      divexact(node.spec, q);
      return NodeRecord{node.y, std::move(q), alpha};
    } catch (const Error& e) {
      if (e.code() == Errc::NotConverging || e.code() == Errc::PrecisionTooLow || e.code() == Errc::NotDivisible) {
        return std::nullopt;
      }
      throw;
    }
  }

  BivarPolyZ reconstruct(const RootGroup& group, const std::vector<ApproxRoot>& roots, std::array<int, 2> deg) {
    const int a = deg[0];
    const int b = deg[1];
    if (a < 1 || b < 1) throw Error(Errc::Inconsistent, "factor independent of one variable inside a part");

    std::vector<NodeRecord> records{{shared_.front().y, group.min_poly, shared_.front().spec.lead()}};
    std::size_t next = 1;
    int failures = 0;
    auto add_node = [&] {
      for (;;) {
        if (next == shared_.size()) {
          std::vector<Rational> avoid;
          for (const auto& s : shared_) avoid.push_back(s.y);
          shared_.push_back(pick_node(f_, Var::Y, rng_, avoid, std::nullopt));
        }
        const Node node = shared_[next++];
        if (auto rec = node_record(roots, node, a)) {
          records.push_back(std::move(*rec));
          return;
        }
        if (++failures > kNodeTries) throw Error(Errc::Inconsistent, "too many rejected interpolation nodes");
      }
    };
    auto as_matrix = [&] { return make_scaling_system(records, b).A; };

    int mu = required_nodes(std::min(a + 1, b + 1), b);
    std::vector<Rational> lambda;
    for (;;) {
      while (static_cast<int>(records.size()) < mu + 1) add_node();
      mu = required_nodes(matrix_rank(as_matrix()), b);
      if (static_cast<int>(records.size()) < mu + 1) continue;
      try {
        lambda = scaling_constants(make_scaling_system(records, b));
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::NeedMoreNodes) throw;
        if (static_cast<int>(records.size()) - 1 >= 2 * b) throw Error(Errc::Inconsistent, "nullity above one at 2n nodes");
        add_node();
      }
    }

    std::vector<Rational> full{Rational(1)};
    full.insert(full.end(), lambda.begin(), lambda.end());
    BivarPolyZ h = assemble_factor(records, full, b);
    if (h.deg_x() != a || h.deg_y() != b) throw Error(Errc::Inconsistent, "assembled factor has the wrong degree pair");
    exact_divide(f_, h);

    FactorTrace t;
    t.factor = h;
    t.min_poly = group.min_poly;
    t.group = group.root_indices;
    t.degree_pair = deg;
    t.mu = mu;
    for (const auto& r : records) {
      t.nodes.push_back(r.y);
      t.node_polys.push_back(r.node_poly);
    }
    t.lambda = lambda;
    trace_.factors.push_back(std::move(t));
    return h;
  }

  const BivarPolyZ& f_;
  const FactorizeOptions& opts_;
  RngState& rng_;
  Budget& budget_;
  PartTrace& trace_;
  bool pin_;
  std::vector<Node> shared_;
};

BivarPolyZ normalized(const BivarPolyZ& p, int mult, Rational& content) {
  if (sgn(p.lead_coeff()) > 0) return p;
  if (mult % 2 != 0) content = -content;
  return -p;
}

}  // namespace

ReducedInput reduce_input(const BivarPolyZ& F) {
  if (F.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
  auto [c, P] = content_primitive(F);
  ReducedInput out;
  out.content = c;

  int a = P.deg_x();
  int b = P.deg_y();
  for (const auto& [e, v] : P.terms()) {
    a = std::min(a, e.first);
    b = std::min(b, e.second);
  }
  if (a > 0) out.units.push_back({BivarPolyZ::x(), a});
  if (b > 0) out.units.push_back({BivarPolyZ::y(), b});
  if (a > 0 || b > 0) {
    BivarPolyZ::TermMap t;
    for (const auto& [e, v] : P.terms()) t.emplace(BivarPolyZ::Exponent{e.first - a, e.second - b}, v);
    P = BivarPolyZ(std::move(t));
  }
  if (P.is_constant()) return out;

  const auto sq = squarefree_decompose(P);
  out.content *= sq.content;
  for (const auto& [Q, mult] : sq.factors) {
    if (Q.deg_x() == 0 || Q.deg_y() == 0) {
      out.univariate.push_back({Q, mult});
      continue;
    }
    BivarPolyZ rest = Q;
    for (Var v : {Var::X, Var::Y}) {
      // For square-free Q, gcd(Q, dQ/dv) collects the factors free of v.
      const BivarPolyZ g = gcd_bivariate(rest, rest.derivative(v));
      if (g.is_constant()) continue;
      out.univariate.push_back({g, mult});
      rest = exact_divide(rest, g).quotient;
    }
    out.parts.push_back({rest, mult});
  }
  return out;
}

bool canonical_less(const Factor& a, const Factor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  if (a.poly.terms() != b.poly.terms()) return a.poly.terms() < b.poly.terms();
  return a.multiplicity < b.multiplicity;
}

bool verify(const BivarPolyZ& F, const FactorizationResult& result) {
  BivarPolyZ prod = BivarPolyZ::constant(result.content.get_num());
  for (const auto& f : result.factors) {
    if (f.multiplicity < 1) return false;
    prod = prod * pow(f.poly, static_cast<unsigned>(f.multiplicity));
  }
  return prod == F * BigInt(result.content.get_den());
}

FactorizationResult factorize(const BivarPolyZ& F, std::uint64_t seed, const FactorizeOptions& opts) {
  opts.tracker.validate();
  if (opts.max_restarts < 0) throw std::invalid_argument("max_restarts must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  RngState rng(seed);
  FactorizationResult result;
  auto& stats = result.stats;

  const BivarPolyZ G = opts.swap_vars ? F.swapped() : F;
  const ReducedInput red = reduce_input(G);
  result.content = red.content;
  std::vector<Factor> found = red.units;

  for (const auto& [piece, mult] : red.univariate) {
    const Var var = piece.deg_x() > 0 ? Var::X : Var::Y;
    const UniPolyZ p = piece.to_univariate(var);
    std::string last;
    bool done = false;
    for (int attempt = 0; attempt <= opts.max_restarts && !done; ++attempt) {
      Budget budget(opts, attempt, stats);
      try {
        for (const auto& q : factor_univariate(p, opts.tracker, rng, budget)) {
          found.push_back({BivarPolyZ::from_univariate(q, var), mult});
        }
        done = true;
      } catch (const Error& e) {
        if (!retryable(e.code())) throw;
        last = e.what();
        ++stats.retries;
      }
    }
    if (!done) throw Error(Errc::FactorizationFailed, "univariate factor: " + last);
  }

  for (const auto& [part, mult] : red.parts) {
    PartTrace trace;
    trace.part = part;
    std::vector<BivarPolyZ> pieces;
    bool done = false;
    for (int attempt = 0; attempt <= opts.max_restarts && !done; ++attempt) {
      Budget budget(opts, attempt, stats);
      PartTrace t;
      t.part = part;
      try {
        pieces = PartSolver(part, opts, rng, budget, t, attempt == 0).run();
        t.attempts = attempt + 1;
        t.failures = trace.failures;
        trace = std::move(t);
        done = true;
      } catch (const Error& e) {
        if (!retryable(e.code())) throw;
        trace.failures.push_back(e.what());
        ++stats.retries;
      }
    }
    if (!done) {
      std::string msg = "restarts exhausted";
      for (const auto& s : trace.failures) msg += "; " + s;
      throw Error(Errc::FactorizationFailed, msg);
    }
    for (auto& p : pieces) found.push_back({std::move(p), mult});
    for (const auto& ft : trace.factors) stats.nodes_per_factor.push_back(static_cast<int>(ft.nodes.size()));
    stats.parts.push_back(std::move(trace));
  }

  Rational content(result.content);
  for (auto& f : found) {
    if (opts.swap_vars) f.poly = f.poly.swapped();
    f.poly = normalized(f.poly, f.multiplicity, content);
  }
  std::sort(found.begin(), found.end(), canonical_less);
  result.content = content;
  result.factors = std::move(found);
  if (!verify(F, result)) throw Error(Errc::FactorizationFailed, "final product check failed");
  stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace exfactor
