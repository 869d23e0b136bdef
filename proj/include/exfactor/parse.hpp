#pragma once

#include <string_view>

#include "exfactor/bivar.hpp"

namespace exfactor {

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('-' | '+') unary | power
///   power  := atom ('^' INTEGER)?
///   atom   := INTEGER | 'x' | 'y' | '(' expr ')'
/// Whitespace is ignored. Throws ParseError with a 1-based column.
BivarPolyZ parse_poly(std::string_view text);

}  // namespace exfactor
