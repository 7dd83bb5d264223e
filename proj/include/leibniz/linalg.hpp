#pragma once

#include <vector>

#include "leibniz/field_element.hpp"

namespace leibniz {

using RationalMatrix = std::vector<std::vector<Rational>>;
using FieldMatrix = std::vector<std::vector<FieldElement>>;

/// Basis of {c : A c = 0} over Q from the reduced row echelon form of A,
/// one vector per free column in column order.
std::vector<std::vector<Rational>> null_space(RationalMatrix rows, std::size_t columns);

/// Exact determinant of a square matrix over Q(t_1, ..., t_m) by Gaussian
/// elimination. Requires at least one row so the ring is known.
FieldElement determinant(FieldMatrix matrix);

/// Scales v to coprime integers with the first nonzero entry positive.
std::vector<Rational> primitive_integer_vector(std::vector<Rational> v);

}  // namespace leibniz
