#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leibniz/field_element.hpp"

namespace leibniz {

/// Parses an expression over the given ring.
///
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := base ("^" signed-integer)?
///   base   := integer | identifier | "(" expr ")" | "-" factor
///
/// "p/q" rationals fall out of the term rule. Throws ParseError with the
/// offending position, or DivisionByZero.
FieldElement parse_expr(std::string_view text, const RingPtr& ring);

/// Convenience overload that builds a fresh ring from `generators`.
FieldElement parse_expr(std::string_view text, const std::vector<std::string>& generators);

}  // namespace leibniz
