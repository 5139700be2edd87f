#pragma once

// Text forms for points and parameters.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := number | name | sqrt '(' expr ')' | '(' expr [',' expr] ')' | '[' expr (',' expr)* ']'
//
// Names: i, z (zeta_m), lambda, phi, sqrt3, P<n>, Q, R, S, C, H.v1..H.v6.
// "(x, y)" is x + i*y with real x, y; "[c0, c1, ...]" lists power-basis
// coefficients. sqrt accepts 2+phi, 3, 5 and squares of rationals.

#include <string_view>
#include <utility>

#include "pwrot/cyclo.hpp"
#include "pwrot/geometry.hpp"

namespace pwrot {

/// Throws ParseError with the offending character position.
CycloNum parse_point(const FieldPtr& field, std::string_view text);

/// "p/q" -> (p, q); validity of the pair is checked by make_field.
std::pair<int, int> parse_alpha(std::string_view text);

Rational parse_rational(std::string_view text);

/// "x0,y0,x1,y1".
Box parse_box(std::string_view text);

}  // namespace pwrot
