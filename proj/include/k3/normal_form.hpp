#pragma once

#include "k3/exactnum.hpp"

namespace k3 {

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<Integer> diagonal() const;
};

/// Smallest-absolute-value pivoting; the input is never modified.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form: U * M = H, H in row echelon form with
/// positive pivots and entries above each pivot reduced into [0, pivot).
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix U;
  Index rank = 0;
};

HermiteDecomposition hermite_normal_form(const IntMatrix& m);

/// Canonical basis of the lattice spanned by the columns of `basis`
/// (zero columns dropped), returned as columns.
IntMatrix canonical_basis(const IntMatrix& basis);

/// Basis (as columns, Hermite-canonical) of {x in Z^n : M x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

}  // namespace k3
