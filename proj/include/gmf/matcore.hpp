#pragma once

// Dense numerical kernel shared by every other header: symmetric spectral
// decompositions, pseudoinverses, kernel bases and the tolerance-governed
// range / semidefiniteness tests.
//
// Every rank decision uses one relative cutoff, rank_tol times the largest
// singular value (or |eigenvalue|) of the matrix at hand.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gmf/errors.hpp"

namespace gmf {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct ToleranceConfig {
  double rank_tol = 1e-10;
  double psd_tol = 1e-9;
  double range_tol = 1e-9;
  double eq_tol = 1e-8;
  double feas_tol = 1e-9;

  /// Throws ArgumentError unless every field lies in (0, 1).
  void validate() const {
    auto check = [](double v, const char* name) {
      if (!(v > 0.0 && v < 1.0)) {
        throw ArgumentError(std::string("tolerance ") + name + " must lie in (0,1)");
      }
    };
    check(rank_tol, "rank_tol");
    check(psd_tol, "psd_tol");
    check(range_tol, "range_tol");
    check(eq_tol, "eq_tol");
    check(feas_tol, "feas_tol");
  }
};

/// Frobenius inner product tr(X^T Y).
inline double inner(const Matrix& x, const Matrix& y) {
  detail::require_dims(x.rows() == y.rows() && x.cols() == y.cols(),
                       "inner product of differently shaped matrices");
  return x.cwiseProduct(y).sum();
}

inline Matrix symmetrize(const Matrix& s) {
  detail::require_dims(s.rows() == s.cols(), "symmetric input must be square");
  return 0.5 * (s + s.transpose());
}

/// max(1, x): the hybrid relative/absolute scale used by all equality tests.
inline double unit_floor(double x) { return std::max(1.0, x); }

struct SpectralData {
  Vector eigenvalues;   // descending
  Matrix eigenvectors;  // orthonormal columns, matching eigenvalues
};

/// Eigendecomposition of (S + S^T)/2, eigenvalues in descending order.
inline SpectralData sym_eig(const Matrix& s) {
  detail::require_dims(s.rows() == s.cols(), "sym_eig: matrix must be square");
  const Eigen::Index n = s.rows();
  SpectralData out;
  if (n == 0) {
    out.eigenvalues.resize(0);
    out.eigenvectors.resize(0, 0);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrize(s));
  // Eigen returns ascending order.
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

inline double lambda_max(const Matrix& s) {
  const auto spec = sym_eig(s);
  return spec.eigenvalues.size() == 0 ? 0.0 : spec.eigenvalues(0);
}

inline double lambda_min(const Matrix& s) {
  const auto spec = sym_eig(s);
  const auto k = spec.eigenvalues.size();
  return k == 0 ? 0.0 : spec.eigenvalues(k - 1);
}

/// Moore-Penrose pseudoinverse of a symmetric matrix. Eigenvalues with
/// |λ| ≤ rank_tol·max|λ| are treated as zero.
inline Matrix pinv(const Matrix& m, const ToleranceConfig& tol = {}) {
  detail::require_dims(m.rows() == m.cols(), "pinv: matrix must be square");
  const Eigen::Index k = m.rows();
  if (k == 0) return Matrix(0, 0);
  const auto spec = sym_eig(m);
  const double scale = spec.eigenvalues.cwiseAbs().maxCoeff();
  Vector inv = Vector::Zero(k);
  if (scale > 0.0) {
    const double cutoff = tol.rank_tol * scale;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (std::abs(spec.eigenvalues(i)) > cutoff) inv(i) = 1.0 / spec.eigenvalues(i);
    }
  }
  return spec.eigenvectors * inv.asDiagonal() * spec.eigenvectors.transpose();
}

/// Orthogonal projector onto rge M for symmetric M (equals M M†).
inline Matrix range_projector(const Matrix& m, const ToleranceConfig& tol = {}) {
  detail::require_dims(m.rows() == m.cols(), "range_projector: matrix must be square");
  const Eigen::Index k = m.rows();
  if (k == 0) return Matrix(0, 0);
  const auto spec = sym_eig(m);
  const double scale = spec.eigenvalues.cwiseAbs().maxCoeff();
  Matrix proj = Matrix::Zero(k, k);
  if (scale == 0.0) return proj;
  const double cutoff = tol.rank_tol * scale;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (std::abs(spec.eigenvalues(i)) > cutoff) {
      proj.noalias() += spec.eigenvectors.col(i) * spec.eigenvectors.col(i).transpose();
    }
  }
  return proj;
}

/// Orthonormal basis of a subspace S of R^n together with its projector.
/// A basis with zero columns encodes S = {0}.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;

  /// `basis` must have orthonormal columns; the projector is formed here.
  explicit SubspaceBasis(Matrix basis)
      : basis_(std::move(basis)), projector_(basis_ * basis_.transpose()) {}

  static SubspaceBasis full(Eigen::Index n) { return SubspaceBasis(Matrix::Identity(n, n)); }
  static SubspaceBasis trivial(Eigen::Index n) { return SubspaceBasis(Matrix(n, 0)); }

  Eigen::Index ambient_dim() const { return basis_.rows(); }
  Eigen::Index dim() const { return basis_.cols(); }
  bool is_trivial() const { return basis_.cols() == 0; }

  const Matrix& basis() const { return basis_; }
  const Matrix& projector() const { return projector_; }

 private:
  Matrix basis_;
  Matrix projector_;
};

namespace detail {

struct ThinSvd {
  Matrix u;  // n x r
  Vector s;  // r, descending, all above the cutoff
  Matrix v;  // m x r
};

/// Reduced SVD keeping only singular values above rank_tol·σ_max.
inline ThinSvd thin_svd(const Matrix& a, const ToleranceConfig& tol) {
  ThinSvd out;
  if (a.size() == 0) {
    out.u.resize(a.rows(), 0);
    out.s.resize(0);
    out.v.resize(a.cols(), 0);
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sv = svd.singularValues();
  Eigen::Index r = 0;
  if (sv(0) > 0.0) {
    const double cutoff = tol.rank_tol * sv(0);
    while (r < sv.size() && sv(r) > cutoff) ++r;
  }
  out.u = svd.matrixU().leftCols(r);
  out.s = sv.head(r);
  out.v = svd.matrixV().leftCols(r);
  return out;
}

}  // namespace detail

/// Numerical rank with the rank_tol cutoff.
inline Eigen::Index numerical_rank(const Matrix& a, const ToleranceConfig& tol = {}) {
  return detail::thin_svd(a, tol).s.size();
}

/// Orthonormal basis of ker A. A with zero rows (no constraints) yields I_n.
inline SubspaceBasis kernel_basis(const Matrix& a, const ToleranceConfig& tol = {}) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0 || n == 0) return SubspaceBasis::full(n);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  Eigen::Index r = 0;
  if (sv(0) > 0.0) {
    const double cutoff = tol.rank_tol * sv(0);
    while (r < sv.size() && sv(r) > cutoff) ++r;
  }
  return SubspaceBasis(svd.matrixV().rightCols(n - r));
}

/// Minimum-norm least-squares solution of A Y = B.
inline Matrix min_norm_solve(const Matrix& a, const Matrix& b, const ToleranceConfig& tol = {}) {
  detail::require_dims(a.rows() == b.rows(), "min_norm_solve: A and B row counts differ");
  const auto svd = detail::thin_svd(a, tol);
  Matrix y = Matrix::Zero(a.cols(), b.cols());
  if (svd.s.size() == 0) return y;
  y.noalias() = svd.v * svd.s.cwiseInverse().asDiagonal() * (svd.u.transpose() * b);
  return y;
}

/// Orthogonal projector onto rge A for a general (rectangular) A.
inline Matrix column_space_projector(const Matrix& a, const ToleranceConfig& tol = {}) {
  const auto svd = detail::thin_svd(a, tol);
  return svd.u * svd.u.transpose();
}

/// rge C ⊂ rge M for symmetric M: ‖M M† C − C‖_F ≤ range_tol·max(1, ‖C‖_F).
inline bool range_inclusion(const Matrix& c, const Matrix& m, const ToleranceConfig& tol = {}) {
  detail::require_dims(m.rows() == m.cols(), "range_inclusion: M must be square");
  detail::require_dims(c.rows() == m.rows(), "range_inclusion: C and M row counts differ");
  if (c.size() == 0) return true;
  const Matrix residual = range_projector(symmetrize(m), tol) * c - c;
  return residual.norm() <= tol.range_tol * unit_floor(c.norm());
}

/// Eigenvalue slack for sign tests on a matrix of Frobenius norm `norm`.
inline double psd_slack(const ToleranceConfig& tol, double norm) { return tol.psd_tol * unit_floor(norm); }

/// Non-strict: λ_min(Q^T V Q) ≥ −slack. Strict: λ_min(Q^T V Q) > slack, with
/// slack = psd_tol·max(1, ‖V‖_F).
/// Both hold vacuously on S = {0}.
inline bool psd_on_subspace(const Matrix& v, const SubspaceBasis& s, bool strict,
                            const ToleranceConfig& tol = {}) {
  detail::require_dims(v.rows() == v.cols() && v.rows() == s.ambient_dim(),
                       "psd_on_subspace: V must be n x n with n the ambient dimension");
  if (s.is_trivial()) return true;
  const Matrix& q = s.basis();
  const Matrix vs = symmetrize(v);
  const double lmin = lambda_min(q.transpose() * vs * q);
  const double slack = psd_slack(tol, vs.norm());
  return strict ? lmin > slack : lmin >= -slack;
}

}  // namespace gmf
