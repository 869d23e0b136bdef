#pragma once

// Canonical text forms and the JSON result format.

#include <string>

#include <json.hpp>

#include "exfactor/pipeline.hpp"

namespace exfactor {

/// Terms in descending lex order (x > y), e.g. "x^2+y^2-1", "x*y-2"; "0" for zero.
/// The output parses back to the same polynomial.
std::string to_string(const BivarPolyZ& p);
std::string to_string(const UniPolyZ& p, char var = 'x');
std::string to_string(const Rational& q);

/// Throws ParseError on a malformed rational.
Rational parse_rational(const std::string& s);

nlohmann::json to_json(const FactorizationResult& r, std::uint64_t seed, bool with_stats);

/// Content line then one "(<expr>)^<mult>" line per factor.
std::string to_text(const FactorizationResult& r);

/// Accepts either format produced above; text lines starting with # are skipped.
/// Throws ParseError.
FactorizationResult factors_from_json(const nlohmann::json& j);
FactorizationResult factors_from_text(const std::string& text);

}  // namespace exfactor
