#ifndef DLIN_PARSE_HPP
#define DLIN_PARSE_HPP

#include "dlin/hurwitz.hpp"
#include "dlin/ore.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dlin {

/// expr := term (('+'|'-') term)*
/// term := unary (('*'|'/') unary)*
/// unary := ('-'|'+') unary | power
/// power := atom ('^' ['-'] integer)*
/// atom := integer | 'z' | 'Y' | '(' expr ')'
///
/// 'z' exists only over Q(z); 'Y' only in skew polynomials. Division and
/// negative powers need a field element. Products are taken in K[Y; d], so a
/// coefficient left of Y is moved to the right: z*Y = Y*z + 1.
/// Throws SyntaxError with the byte offset of the offending token.
FieldElem parse_field_expr(std::string_view text, Field field);
OrePoly parse_ore_expr(std::string_view text, Field field);

/// Highest power first, e.g. "Y^2 - Y*(1/(z-1)) + 1/(z^2-2*z+1)".
std::string to_string(const OrePoly& p);

/// Splits on `sep` outside parentheses and brackets; pieces are trimmed.
std::vector<std::string> split_top_level(std::string_view text, char sep);

/// "a, b, c" as field elements.
std::vector<FieldElem> parse_csv(std::string_view text, Field field);

/// "[a, b, c]"; the brackets are optional.
Seq parse_seq(std::string_view text, Field field);

} // namespace dlin

#endif
