#include "leibniz/linalg.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

std::vector<std::vector<Rational>> null_space(RationalMatrix rows, std::size_t columns) {
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = rows[rank][col].inverse();
    for (auto& entry : rows[rank]) entry *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < columns; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    pivot_columns.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(columns, false);
  for (std::size_t c : pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivot_columns.size(); ++r) v[pivot_columns[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldElement determinant(FieldMatrix m) {
  if (m.empty()) throw Error("determinant of an empty matrix needs a ring");
  const std::size_t size = m.size();
  for (const auto& row : m)
    if (row.size() != size) throw Error("determinant of a non-square matrix");
  FieldElement det(m[0][0].ring(), Rational(1));
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && m[pivot][col].is_zero()) ++pivot;
    if (pivot == size) return FieldElement(m[0][0].ring());
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const FieldElement inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < size; ++r) {
      if (m[r][col].is_zero()) continue;
      const FieldElement factor = m[r][col] * inv;
      for (std::size_t c = col + 1; c < size; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

std::vector<Rational> primitive_integer_vector(std::vector<Rational> v) {
  Rational g(0);
  for (const auto& x : v) g = rational_gcd(g, x);
  if (g.is_zero()) return v;
  for (const auto& x : v)
    if (!x.is_zero()) {
      if (x.sign() < 0) g = -g;
      break;
    }
  for (auto& x : v) x /= g;
  return v;
}

}  // namespace leibniz
