#pragma once

// Value types shared across the library: the constraint pair (A, B), points
// of E = R^{n×m} × S^n on the dual (X, V) and primal (Y, W) side, and an
// extended real for values that may be +∞.

#include <cmath>
#include <concepts>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "gmf/cones.hpp"
#include "gmf/matcore.hpp"

namespace gmf {

/// A value in R ∪ {+∞}. +∞ is a flag, never a floating-point infinity.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double v) : value_(v), finite_(true) {}

  static constexpr ExtendedReal infinity() {
    ExtendedReal r;
    r.finite_ = false;
    return r;
  }

  constexpr bool is_finite() const { return finite_; }

  /// Finite value; throws std::logic_error on +∞.
  double value() const {
    if (!finite_) throw std::logic_error("ExtendedReal: value() of +inf");
    return value_;
  }

  /// this ≤ bound, with +∞ never below a real bound.
  constexpr bool at_most(double bound) const { return finite_ && value_ <= bound; }

  /// Floating-point view for arithmetic-free reporting (+∞ maps to HUGE_VAL).
  double as_double() const { return finite_ ? value_ : std::numeric_limits<double>::infinity(); }

 private:
  double value_ = 0.0;
  bool finite_ = true;
};

/// A point (X, V) of E at which the support function is evaluated.
struct DualPoint {
  Matrix x;  // n x m
  Matrix v;  // n x n, symmetric

  DualPoint() = default;
  DualPoint(Matrix x_in, const Matrix& v_in) : x(std::move(x_in)), v(symmetrize(v_in)) {}
};

/// A point (Y, W) of E tested against Ω(A,B), normal cones and gauges.
struct PrimalPoint {
  Matrix y;  // n x m
  Matrix w;  // n x n, symmetric

  PrimalPoint() = default;
  PrimalPoint(Matrix y_in, const Matrix& w_in) : y(std::move(y_in)), w(symmetrize(w_in)) {}

  /// ½ Y Y^T + W, the matrix whose membership in K_A° decides Ω(A,B).
  Matrix lifted_residual() const { return symmetrize(0.5 * y * y.transpose() + w); }
};

template <class Point>
concept EPoint = std::same_as<Point, DualPoint> || std::same_as<Point, PrimalPoint>;

inline DualPoint operator+(const DualPoint& a, const DualPoint& b) {
  return {a.x + b.x, a.v + b.v};
}
inline DualPoint operator-(const DualPoint& a, const DualPoint& b) {
  return {a.x - b.x, a.v - b.v};
}
inline DualPoint operator*(double t, const DualPoint& a) { return {t * a.x, t * a.v}; }

inline PrimalPoint operator+(const PrimalPoint& a, const PrimalPoint& b) {
  return {a.y + b.y, a.w + b.w};
}
inline PrimalPoint operator-(const PrimalPoint& a, const PrimalPoint& b) {
  return {a.y - b.y, a.w - b.w};
}
inline PrimalPoint operator*(double t, const PrimalPoint& a) { return {t * a.y, t * a.w}; }

/// ⟨(Y,W),(X,V)⟩ = tr(Y^T X) + tr(W V).
inline double pairing(const PrimalPoint& p, const DualPoint& d) {
  return inner(p.y, d.x) + inner(p.w, d.v);
}

/// Frobenius norm on E.
template <EPoint Point>
double norm(const Point& p) {
  if constexpr (std::same_as<Point, DualPoint>) {
    return std::sqrt(p.x.squaredNorm() + p.v.squaredNorm());
  } else {
    return std::sqrt(p.y.squaredNorm() + p.w.squaredNorm());
  }
}

inline double distance(const PrimalPoint& a, const PrimalPoint& b) { return norm(a - b); }

/// The pair (A, B) defining D(A,B) = {(Y, −½YY^T) : AY = B}. Construction
/// enforces rge B ⊂ rge A and caches ker A and the minimum-norm solution of
/// AY = B. Zero rows (p = 0) encode the unconstrained case.
class ConstraintPair {
 public:
  ConstraintPair(Matrix a, Matrix b, ToleranceConfig tol = {})
      : a_(std::move(a)), b_(std::move(b)), tol_(tol) {
    tol_.validate();
    detail::require_dims(a_.rows() == b_.rows(), "ConstraintPair: A and B must have equal row counts");
    if (b_.size() != 0) {
      const Matrix residual = column_space_projector(a_, tol_) * b_ - b_;
      if (residual.norm() > tol_.range_tol * unit_floor(b_.norm())) {
        throw PreconditionError("ConstraintPair: rge B is not contained in rge A");
      }
    }
    cone_ = ConeContext{kernel_basis(a_, tol_), tol_};
    y0_ = min_norm_solve(a_, b_, tol_);
  }

  static ConstraintPair unconstrained(Eigen::Index n, Eigen::Index m, ToleranceConfig tol = {}) {
    return ConstraintPair(Matrix(0, n), Matrix(0, m), tol);
  }

  Eigen::Index n() const { return a_.cols(); }
  Eigen::Index m() const { return b_.cols(); }
  Eigen::Index p() const { return a_.rows(); }

  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  const ToleranceConfig& tol() const { return tol_; }

  const SubspaceBasis& kernel() const { return cone_.subspace; }
  /// K_A = K_{ker A} with this pair's tolerances.
  const ConeContext& cone() const { return cone_; }
  /// Minimum-norm Y with AY = B.
  const Matrix& min_norm_solution() const { return y0_; }

  bool homogeneous() const { return b_.size() == 0 || b_.norm() <= tol_.feas_tol; }

  /// ‖AY − B‖_F ≤ feas_tol·max(1, ‖B‖_F).
  bool feasible(const Matrix& y) const {
    detail::require_dims(y.rows() == n() && y.cols() == m(), "feasible: Y must be n x m");
    if (p() == 0) return true;
    return (a_ * y - b_).norm() <= tol_.feas_tol * unit_floor(b_.norm());
  }

  void check_dual(const DualPoint& d) const {
    detail::require_dims(d.x.rows() == n() && d.x.cols() == m(), "dual point: X must be n x m");
    detail::require_dims(d.v.rows() == n() && d.v.cols() == n(), "dual point: V must be n x n");
  }
  void check_primal(const PrimalPoint& pt) const {
    detail::require_dims(pt.y.rows() == n() && pt.y.cols() == m(), "primal point: Y must be n x m");
    detail::require_dims(pt.w.rows() == n() && pt.w.cols() == n(), "primal point: W must be n x n");
  }

 private:
  Matrix a_;
  Matrix b_;
  ToleranceConfig tol_;
  ConeContext cone_;
  Matrix y0_;
};

}  // namespace gmf
