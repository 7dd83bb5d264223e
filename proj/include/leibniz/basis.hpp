#pragma once

#include <cstdint>
#include <vector>

#include "leibniz/field_element.hpp"

namespace leibniz {

/// Monomials t^a with |a| <= bound followed by their reciprocals for |a| >= 1.
/// Within a degree, earlier generators come first ([s,t], bound 1 gives
/// 1, s, t, 1/s, 1/t).
std::vector<FieldElement> enumerate_basis(const RingPtr& ring, std::uint32_t total_degree_bound);

/// Exponent vectors of total degree exactly `degree`, in enumeration order.
std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t degree);

}  // namespace leibniz
