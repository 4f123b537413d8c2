#pragma once

#include "k3/exactnum.hpp"

#include <utility>
#include <vector>

namespace k3 {

/// P^T * M * P = diag(diagonal), P invertible over the field.
template <typename Field>
struct CongruenceDiagonalization {
  Matrix<Field> P;
  std::vector<Field> diagonal;
};

/// Symmetric Gaussian elimination by congruence over an exact field.
///
/// A zero pivot with a nonzero entry m(k, j), j > k, is repaired by adding
/// (or, if that cancels, subtracting) row/column j to row/column k, taking
/// the lowest such j. A zero row is a zero diagonal entry when
/// `allow_singular` is set and an InvalidInput error otherwise.
template <typename Field>
CongruenceDiagonalization<Field> diagonalize_symmetric(Matrix<Field> m, bool allow_singular = false) {
  const Index n = m.rows();
  if (m.cols() != n) throw InvalidInput("diagonalize_symmetric: matrix not square");
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (!(m(i, j) == m(j, i))) throw InvalidInput("diagonalize_symmetric: matrix not symmetric");

  const Field zero(0);
  Matrix<Field> p(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) p(i, j) = Field(i == j ? 1 : 0);

  auto add_multiple = [&](Index target, Index source, const Field& f) {
    // column/row target += f * column/row source
    for (Index r = 0; r < n; ++r) m(r, target) = m(r, target) + f * m(r, source);
    for (Index c = 0; c < n; ++c) m(target, c) = m(target, c) + f * m(source, c);
    for (Index r = 0; r < n; ++r) p(r, target) = p(r, target) + f * p(r, source);
  };

  for (Index k = 0; k < n; ++k) {
    if (m(k, k) == zero) {
      Index j = k + 1;
      while (j < n && m(k, j) == zero) ++j;
      if (j == n) {
        if (!allow_singular) throw InvalidInput("diagonalize_symmetric: singular matrix");
        continue;
      }
      if (m(k, k) + Field(2) * m(k, j) + m(j, j) == zero) {
        add_multiple(k, j, Field(-1));
      } else {
        add_multiple(k, j, Field(1));
      }
    }
    const Field pivot = m(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (m(i, k) == zero) continue;
      add_multiple(i, k, -(m(i, k) / pivot));
    }
  }

  std::vector<Field> diag;
  diag.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) diag.push_back(m(i, i));
  return {std::move(p), std::move(diag)};
}

}  // namespace k3
