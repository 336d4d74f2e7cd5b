#pragma once

#include <string_view>

#include "weyl/bipoly.hpp"
#include "weyl/unipoly.hpp"

namespace weyl {

// Grammar (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | 'X' | 'Y' | '(' expr ')'
// Products are evaluated left to right in A_1 and normal-ordered.
// Throws ParseError (with the offending position).
WeylElement parse_element(std::string_view text);

// Same grammar with a single commutative variable, spelled x, y or z
// (one of them per input).
UniPoly parse_unipoly(std::string_view text);

}  // namespace weyl
