#pragma once

#include <initializer_list>

#include "gmf/gmf.hpp"
#include "gmf/oracle.hpp"

namespace gmf::testing {

/// Row-major literal.
inline Matrix mat(Eigen::Index rows, Eigen::Index cols, std::initializer_list<double> values) {
  Matrix m(rows, cols);
  auto it = values.begin();
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = *it++;
  return m;
}

inline Matrix col(std::initializer_list<double> values) {
  return mat(static_cast<Eigen::Index>(values.size()), 1, values);
}

inline Matrix diag(std::initializer_list<double> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  Matrix m = Matrix::Zero(n, n);
  Eigen::Index i = 0;
  for (double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

inline Matrix scalar(double v) { return Matrix::Constant(1, 1, v); }

/// n = m = 1, no constraints.
inline ConstraintPair scalar_pair() { return ConstraintPair::unconstrained(1, 1); }

/// A = [1 0], B = 0 (n = 2, m = 1): ker A = span{e2}.
inline ConstraintPair coordinate_pair() { return ConstraintPair(mat(1, 2, {1, 0}), Matrix::Zero(1, 1)); }

/// A = 0 (1 x 1), B = 0: ker A = R.
inline ConstraintPair zero_row_pair() { return ConstraintPair(Matrix::Zero(1, 1), Matrix::Zero(1, 1)); }

}  // namespace gmf::testing
