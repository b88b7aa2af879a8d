#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace cob2 {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using DenseRowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

/// Gauss-Jordan reduction over an exact field scalar; pivots are the first
/// nonzero candidates, no magnitude heuristics. Returns the pivot columns.
template <class Scalar>
std::vector<Eigen::Index> rref_in_place(DenseMatrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (!(m(r, col) == Scalar(0))) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != row) m.row(pivot_row).swap(m.row(row));
    Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      Scalar f = m(r, col);
      if (f == Scalar(0)) continue;
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        m(r, c) = m(r, c) - f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Columns spanning the null space of m, in the standard free-variable form.
template <class Scalar>
DenseMatrix<Scalar> kernel_basis(const DenseMatrix<Scalar>& m) {
  DenseMatrix<Scalar> r = m;
  std::vector<Eigen::Index> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Eigen::Index c : pivots) is_pivot[c] = true;
  Eigen::Index free_count = m.cols() - static_cast<Eigen::Index>(pivots.size());
  DenseMatrix<Scalar> basis = DenseMatrix<Scalar>::Zero(m.cols(), free_count);
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis(c, k) = Scalar(1);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      basis(pivots[pr], k) = -r(static_cast<Eigen::Index>(pr), c);
    ++k;
  }
  return basis;
}

/// Exact inverse; empty when singular.
template <class Scalar>
std::optional<DenseMatrix<Scalar>> exact_inverse(const DenseMatrix<Scalar>& m) {
  Eigen::Index n = m.rows();
  if (n != m.cols()) return std::nullopt;
  DenseMatrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = DenseMatrix<Scalar>::Identity(n, n);
  std::vector<Eigen::Index> pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != n || (n > 0 && pivots.back() >= n))
    return std::nullopt;
  return DenseMatrix<Scalar>(aug.rightCols(n));
}

/// One solution of a x = b (free variables set to zero); empty if inconsistent.
template <class Scalar>
std::optional<DenseVector<Scalar>> solve_exact(const DenseMatrix<Scalar>& a,
                                               const DenseVector<Scalar>& b) {
  DenseMatrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Eigen::Index> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  DenseVector<Scalar> x = DenseVector<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
  return x;
}

/// Sparse-aware exact product; worthwhile because TQFT generator matrices are
/// mostly zeros and scalar multiplication dominates the cost.
template <class Scalar>
DenseMatrix<Scalar> matmul(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> r = DenseMatrix<Scalar>::Zero(a.rows(), b.cols());
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Scalar& aik = a(i, k);
      if (aik == Scalar(0)) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj == Scalar(0)) continue;
        r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

/// Kronecker product with the FIRST factor as the most significant index
/// block: e_i (x) e_k maps to slot i * b.rows() + k.
template <class Scalar>
DenseMatrix<Scalar> kron(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> r = DenseMatrix<Scalar>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) == Scalar(0)) continue;
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  return r;
}

template <class Scalar>
DenseMatrix<Scalar> identity_matrix(Eigen::Index n) {
  return DenseMatrix<Scalar>::Identity(n, n);
}

template <class Scalar>
bool exact_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// The transposition map on a two-fold tensor power: e_i (x) e_j -> e_j (x) e_i.
template <class Scalar>
DenseMatrix<Scalar> transposition_matrix(Eigen::Index n) {
  DenseMatrix<Scalar> s = DenseMatrix<Scalar>::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) s(j * n + i, i * n + j) = Scalar(1);
  return s;
}

}  // namespace cob2
