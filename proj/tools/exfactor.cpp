// exfactor: exact factorization of bivariate integer polynomials.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "exfactor/format.hpp"
#include "exfactor/parse.hpp"
#include "exfactor/pipeline.hpp"

namespace {

enum Exit { kOk = 0, kParse = 2, kFailed = 3, kMismatch = 4 };

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

exfactor::FactorizationResult load_factors(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (!j.is_discarded()) return exfactor::factors_from_json(j);
  return exfactor::factors_from_text(text);
}

void print_stats(const exfactor::FactorizationStats& s) {
  std::cout << "# retries " << s.retries << "\n# max_precision_bits " << s.max_precision_bits << "\n# nodes_per_factor";
  for (int k : s.nodes_per_factor) std::cout << ' ' << k;
  std::cout << "\n# wall_seconds " << s.wall_seconds << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact factorization of bivariate polynomials over Q"};
  std::string input = "-";
  std::string expr;
  std::uint64_t seed = 1;
  exfactor::FactorizeOptions opts;
  bool json = false;
  bool stats = false;
  std::string verify_file;
  app.add_option("input", input, "Polynomial file, or - for stdin");
  app.add_option("--expr", expr, "Polynomial given on the command line");
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--max-restarts", opts.max_restarts, "Restarts before giving up")->capture_default_str();
  app.add_option("--max-bits", opts.max_bits, "Precision cap in bits")->capture_default_str();
  app.add_flag("--swap-vars", opts.swap_vars, "Use y as the main variable");
  app.add_flag("--json", json, "JSON output");
  app.add_flag("--stats", stats, "Include run statistics");
  app.add_option("--verify-only", verify_file, "Check a factor list against the input instead of factoring");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  exfactor::BivarPolyZ f;
  try {
    f = exfactor::parse_poly(expr.empty() ? slurp(input) : expr);
  } catch (const exfactor::ParseError& e) {
    std::cerr << "parse error at column " << e.column() << ": " << e.message() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kParse;
  }

  if (!verify_file.empty()) {
    try {
      const auto claimed = load_factors(slurp(verify_file));
      const bool ok = exfactor::verify(f, claimed);
      std::cout << (ok ? "ok" : "mismatch") << '\n';
      return ok ? kOk : kMismatch;
    } catch (const std::exception& e) {
      std::cerr << "cannot read factors: " << e.what() << '\n';
      return kParse;
    }
  }

  try {
    const auto result = exfactor::factorize(f, seed, opts);
    if (json) {
      std::cout << exfactor::to_json(result, seed, stats).dump(2) << '\n';
    } else {
      std::cout << exfactor::to_text(result);
      if (stats) print_stats(result.stats);
    }
  } catch (const exfactor::Error& e) {
    std::cerr << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}
