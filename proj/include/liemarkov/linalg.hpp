#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "liemarkov/scalar.hpp"

namespace liemarkov {

/// Row-major flattening of a square matrix into a row vector of length k^2.
template <typename Derived>
Matrix<typename Derived::Scalar> vectorize(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> row(1, m.rows() * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) row(0, i * m.cols() + j) = m(i, j);
  }
  return row;
}

/// Inverse of vectorize for a k x k matrix.
template <typename Derived>
Matrix<typename Derived::Scalar> unvectorize(const Eigen::MatrixBase<Derived>& row,
                                             Eigen::Index k) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) m(i, j) = row(i * k + j);
  }
  return m;
}

template <typename Scalar>
struct Echelon {
  Matrix<Scalar> rows;        // nonzero rows of the reduced row echelon form
  std::vector<int> pivots;    // pivot column of each row
};

/// Gauss-Jordan reduction. Exact when Scalar is exact (Rational); the result
/// is unique for the row space, so equal spans give equal `rows`.
template <typename Scalar>
Echelon<Scalar> reduced_row_echelon(Matrix<Scalar> a) {
  const Eigen::Index n_rows = a.rows();
  const Eigen::Index n_cols = a.cols();
  const Scalar zero(0);
  Echelon<Scalar> out;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n_cols && r < n_rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < n_rows && a(pivot, c) == zero) ++pivot;
    if (pivot == n_rows) continue;
    a.row(r).swap(a.row(pivot));
    const Scalar lead = a(r, c);
    for (Eigen::Index j = c; j < n_cols; ++j) a(r, j) /= lead;
    for (Eigen::Index i = 0; i < n_rows; ++i) {
      if (i == r || a(i, c) == zero) continue;
      const Scalar factor = a(i, c);
      for (Eigen::Index j = c; j < n_cols; ++j) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  out.rows = a.topRows(r);
  return out;
}

/// Finds c with sum_j c_j * columns[:, j] == rhs exactly, choosing zero for
/// free variables. Returns nullopt when rhs is outside the column space.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_exact(const Matrix<Scalar>& columns,
                                          const Vector<Scalar>& rhs) {
  const Eigen::Index n = columns.cols();
  Matrix<Scalar> augmented(columns.rows(), n + 1);
  augmented.leftCols(n) = columns;
  augmented.col(n) = rhs;
  const Echelon<Scalar> e = reduced_row_echelon<Scalar>(std::move(augmented));
  Vector<Scalar> x = Vector<Scalar>::Constant(n, Scalar(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == n) return std::nullopt;
    x(e.pivots[r]) = e.rows(static_cast<Eigen::Index>(r), n);
  }
  return x;
}

/// Basis of the null space {x : a x = 0}, one column per free variable.
template <typename Scalar>
Matrix<Scalar> null_space(const Matrix<Scalar>& a) {
  const Echelon<Scalar> e = reduced_row_echelon<Scalar>(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  }
  Matrix<Scalar> basis = Matrix<Scalar>::Constant(n, static_cast<Eigen::Index>(free.size()),
                                                  Scalar(0));
  for (std::size_t f = 0; f < free.size(); ++f) {
    const auto col = static_cast<Eigen::Index>(f);
    basis(free[f], col) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis(e.pivots[r], col) = -e.rows(static_cast<Eigen::Index>(r), free[f]);
    }
  }
  return basis;
}

inline RatMatrix to_rational(const IntMatrix& m) {
  return m.unaryExpr([](std::int64_t v) { return Rational(v); });
}

inline Eigen::MatrixXd to_double(const IntMatrix& m) { return m.cast<double>(); }

inline Eigen::MatrixXd to_double(const RatMatrix& m) {
  return m.unaryExpr([](const Rational& v) { return boost::rational_cast<double>(v); });
}

}  // namespace liemarkov
