#include "exfactor/format.hpp"

#include <regex>
#include <sstream>

#include "exfactor/parse.hpp"

namespace exfactor {

namespace {

std::string monomial(const BigInt& abs_c, int i, int j, char xv = 'x', char yv = 'y') {
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += '*';
    out += s;
  };
  if (abs_c != 1 || (i == 0 && j == 0)) append(abs_c.get_str());
  if (i > 0) append(i == 1 ? std::string(1, xv) : std::string(1, xv) + "^" + std::to_string(i));
  if (j > 0) append(j == 1 ? std::string(1, yv) : std::string(1, yv) + "^" + std::to_string(j));
  return out;
}

void append_term(std::string& out, const BigInt& c, const std::string& mono) {
  if (out.empty()) {
    if (sgn(c) < 0) out += '-';
  } else {
    out += sgn(c) < 0 ? '-' : '+';
  }
  out += mono;
}

nlohmann::json poly_json(const BivarPolyZ& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({it->first.first, it->first.second, it->second.get_str()});
  }
  return terms;
}

nlohmann::json strings(const std::vector<UniPolyZ>& v, char var) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& p : v) a.push_back(to_string(p, var));
  return a;
}

nlohmann::json strings(const std::vector<Rational>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

BivarPolyZ poly_from_json(const nlohmann::json& terms) {
  if (!terms.is_array()) throw ParseError(1, "factor terms must be an array");
  BivarPolyZ::TermMap map;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() || !t[2].is_string()) {
      throw ParseError(1, "term must be [i, j, \"coeff\"]");
    }
    const int i = t[0].get<int>();
    const int j = t[1].get<int>();
    if (i < 0 || j < 0) throw ParseError(1, "negative exponent");
    BigInt c;
    if (c.set_str(t[2].get<std::string>(), 10) != 0) throw ParseError(1, "bad coefficient " + t[2].get<std::string>());
    map[{i, j}] += c;
  }
  return BivarPolyZ(std::move(map));
}

}  // namespace

std::string to_string(const BivarPolyZ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_term(out, it->second, monomial(abs(it->second), it->first.first, it->first.second));
  }
  return out;
}

std::string to_string(const UniPolyZ& p, char var) {
  if (p.zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    append_term(out, c, monomial(abs(c), i, 0, var));
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  static const std::regex re(R"(\s*(-?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError(1, "expected a rational number, got '" + s + "'");
  const BigInt num(m[1].str());
  const BigInt den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw ParseError(1, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

nlohmann::json to_json(const FactorizationResult& r, std::uint64_t seed, bool with_stats) {
  nlohmann::json j;
  j["content"] = to_string(r.content);
  j["factors"] = nlohmann::json::array();
  for (const auto& f : r.factors) j["factors"].push_back({{"terms", poly_json(f.poly)}, {"multiplicity", f.multiplicity}});
  j["seed"] = seed;
  if (with_stats) {
    const auto& s = r.stats;
    nlohmann::json st;
    st["retries"] = s.retries;
    st["max_precision_bits"] = s.max_precision_bits;
    st["nodes_per_factor"] = s.nodes_per_factor;
    st["wall_seconds"] = s.wall_seconds;
    st["parts"] = nlohmann::json::array();
    for (const auto& p : s.parts) {
      nlohmann::json pj;
      pj["part"] = to_string(p.part);
      pj["y0"] = to_string(p.y0);
      pj["x0"] = to_string(p.x0);
      pj["x_min_polys"] = strings(p.x_min_polys, 'x');
      pj["y_min_polys"] = strings(p.y_min_polys, 'y');
      pj["attempts"] = p.attempts;
      pj["failures"] = p.failures;
      pj["factors"] = nlohmann::json::array();
      for (const auto& f : p.factors) {
        pj["factors"].push_back({{"factor", to_string(f.factor)},
                                 {"min_poly", to_string(f.min_poly, 'x')},
                                 {"group", f.group},
                                 {"degree_pair", f.degree_pair},
                                 {"mu", f.mu},
                                 {"nodes", strings(f.nodes)},
                                 {"node_polys", strings(f.node_polys, 'x')},
                                 {"lambda", strings(f.lambda)}});
      }
      st["parts"].push_back(std::move(pj));
    }
    j["stats"] = std::move(st);
  } else {
    j["stats"] = {{"retries", r.stats.retries}, {"max_precision_bits", r.stats.max_precision_bits}};
  }
  return j;
}

std::string to_text(const FactorizationResult& r) {
  std::ostringstream os;
  os << to_string(r.content) << '\n';
  for (const auto& f : r.factors) os << '(' << to_string(f.poly) << ")^" << f.multiplicity << '\n';
  return os.str();
}

FactorizationResult factors_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("content") || !j.contains("factors")) {
    throw ParseError(1, "expected an object with content and factors");
  }
  FactorizationResult r;
  r.content = parse_rational(j["content"].is_string() ? j["content"].get<std::string>() : j["content"].dump());
  for (const auto& f : j["factors"]) {
    const int mult = f.value("multiplicity", 1);
    r.factors.push_back({poly_from_json(f.at("terms")), mult});
  }
  return r;
}

FactorizationResult factors_from_text(const std::string& text) {
  static const std::regex line_re(R"(\s*\((.*)\)\^(\d+)\s*)");
  std::istringstream is(text);
  std::string line;
  FactorizationResult r;
  bool have_content = false;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!have_content) {
      r.content = parse_rational(line);
      have_content = true;
      continue;
    }
    std::smatch m;
    if (!std::regex_match(line, m, line_re)) throw ParseError(1, "expected '(<expr>)^<mult>', got '" + line + "'");
    r.factors.push_back({parse_poly(m[1].str()), std::stoi(m[2].str())});
  }
  if (!have_content) throw ParseError(1, "missing content line");
  return r;
}

}  // namespace exfactor
