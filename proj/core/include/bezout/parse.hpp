#pragma once

#include <bezout/poly.hpp>

#include <string_view>

namespace bezout {

// Grammar (whitespace insignificant):
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | 'x' | 'y' | 'X1' | 'X2' | '(' expr ')'
// Throws ParseError on malformed text and Errc::degree_overflow when the
// parsed degree exceeds dbound.
BivarPoly parse_poly(std::string_view text, int dbound);

// Parses without a declared bound; the result's bound is its degree (0 for
// the zero polynomial).
BivarPoly parse_poly(std::string_view text);

}  // namespace bezout
