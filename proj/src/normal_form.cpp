#include "k3/normal_form.hpp"

#include <utility>

namespace k3 {
namespace {

// Position of the smallest nonzero |entry| in m[from:, from:], or {-1, -1}.
std::pair<Index, Index> smallest_nonzero(const IntMatrix& m, Index from) {
  std::pair<Index, Index> best{-1, -1};
  Integer best_abs = 0;
  for (Index i = from; i < m.rows(); ++i) {
    for (Index j = from; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Integer a = abs(m(i, j));
      if (best.first < 0 || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  const Index k = std::min(D.rows(), D.cols());
  out.reserve(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = identity_matrix(rows);
  IntMatrix v = identity_matrix(cols);

  for (Index t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      auto [pi, pj] = smallest_nonzero(a, t);
      if (pi < 0) return {u, a, v};  // remaining block is zero
      if (pi != t) {
        a.row(t).swap(a.row(pi));
        u.row(t).swap(u.row(pi));
      }
      if (pj != t) {
        a.col(t).swap(a.col(pj));
        v.col(t).swap(v.col(pj));
      }

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = a(i, t) / a(t, t);
        a.row(i) -= q * a.row(t);
        u.row(i) -= q * u.row(t);
        if (a(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = a(t, j) / a(t, t);
        a.col(j) -= q * a.col(t);
        v.col(j) -= q * v.col(t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: pull an offending row into row t and start over.
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      a.row(t) += a.row(bad);
      u.row(t) += u.row(bad);
    }
    if (a(t, t) < 0) {
      a.row(t) = -a.row(t);
      u.row(t) = -u.row(t);
    }
  }
  return {u, a, v};
}

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  IntMatrix h = m;
  IntMatrix u = identity_matrix(rows);
  Index r = 0;
  for (Index col = 0; col < cols && r < rows; ++col) {
    while (true) {
      Index pivot = -1;
      Integer best = 0;
      for (Index i = r; i < rows; ++i) {
        if (h(i, col) == 0) continue;
        Integer a = abs(h(i, col));
        if (pivot < 0 || a < best) {
          pivot = i;
          best = a;
        }
      }
      if (pivot < 0) break;
      if (pivot != r) {
        h.row(r).swap(h.row(pivot));
        u.row(r).swap(u.row(pivot));
      }
      bool clean = true;
      for (Index i = r + 1; i < rows; ++i) {
        if (h(i, col) == 0) continue;
        const Integer q = h(i, col) / h(r, col);
        h.row(i) -= q * h.row(r);
        u.row(i) -= q * u.row(r);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      h.row(r) = -h.row(r);
      u.row(r) = -u.row(r);
    }
    for (Index i = 0; i < r; ++i) {
      const Integer q = floor_div(h(i, col), h(r, col));
      if (q == 0) continue;
      h.row(i) -= q * h.row(r);
      u.row(i) -= q * u.row(r);
    }
    ++r;
  }
  return {h, u, r};
}

IntMatrix canonical_basis(const IntMatrix& basis) {
  auto hnf = hermite_normal_form(basis.transpose());
  return hnf.H.topRows(hnf.rank).transpose();
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const Index n = m.cols();
  auto hnf = hermite_normal_form(m.transpose());
  // Rows of U past the rank annihilate m; U unimodular makes them a basis.
  IntMatrix kernel = hnf.U.bottomRows(n - hnf.rank).transpose();
  if (kernel.cols() == 0) return IntMatrix(n, 0);
  return canonical_basis(kernel);
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return abs(determinant(m)) == 1;
}

}  // namespace k3
