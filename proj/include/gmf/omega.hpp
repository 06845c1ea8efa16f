#pragma once

// Ω(A,B) = {(Y,W) : AY = B, ½YY^T + W ∈ K_A°}, the closed convex hull of
// D(A,B), with its relative interior, affine hull, polar and horizon cones,
// and the ε-Carathéodory construction that exhibits any member as a limit of
// convex combinations of points of D(A,B).

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gmf/cones.hpp"
#include "gmf/matcore.hpp"
#include "gmf/problem.hpp"
#include "gmf/support.hpp"

namespace gmf {

inline bool in_omega(const PrimalPoint& pt, const ConstraintPair& cp) {
  cp.check_primal(pt);
  return cp.feasible(pt.y) && in_polar_cone(pt.lifted_residual(), cp.cone());
}

inline bool in_rint_omega(const PrimalPoint& pt, const ConstraintPair& cp) {
  cp.check_primal(pt);
  return cp.feasible(pt.y) && in_rint_polar(pt.lifted_residual(), cp.cone());
}

inline bool in_aff_omega(const PrimalPoint& pt, const ConstraintPair& cp) {
  cp.check_primal(pt);
  return cp.feasible(pt.y) && in_aff_polar(pt.lifted_residual(), cp.cone());
}

/// Unconstrained case (A,B) = (0,0): Ω is {W + ½YY^T ⪯ 0} and its interior
/// {W + ½YY^T ≺ 0}. `interior` selects the strict test.
inline bool in_omega_zero_special(const PrimalPoint& pt, bool interior = false,
                                  const ToleranceConfig& tol = {}) {
  detail::require_dims(pt.w.rows() == pt.w.cols() && pt.w.rows() == pt.y.rows(),
                       "in_omega_zero_special: W must be n x n with n = rows(Y)");
  const Matrix lifted = pt.lifted_residual();
  const double top = lambda_max(lifted);
  const double slack = psd_slack(tol, lifted.norm());
  return interior ? top < -slack : top <= slack;
}

/// Ω° = {(X,V) : σ_{D(A,B)}(X,V) ≤ 1}.
inline bool in_omega_polar(const DualPoint& pt, const ConstraintPair& cp) {
  return eval_support(pt, cp).value.at_most(1.0 + cp.tol().eq_tol);
}

/// Ω^∞ = {0} × K_A°.
inline bool in_horizon_omega(const PrimalPoint& pt, const ConstraintPair& cp) {
  cp.check_primal(pt);
  return pt.y.norm() <= cp.tol().eq_tol && in_polar_cone(pt.w, cp.cone());
}

/// (Ω°)^∞ = {(X,V) : σ_{D(A,B)}(X,V) ≤ 0}.
inline bool in_horizon_omega_polar(const DualPoint& pt, const ConstraintPair& cp) {
  return eval_support(pt, cp).value.at_most(cp.tol().eq_tol);
}

/// Convex combination Σ λ_i (Y_i, −½ Y_i Y_i^T) with every A Y_i = B.
struct ConvexWitness {
  std::vector<double> weights;
  std::vector<Matrix> points;
  double epsilon = 0.0;

  /// (Σ λ_i Y_i, −½ Σ λ_i Y_i Y_i^T), a point of conv D(A,B).
  PrimalPoint induced_point() const {
    if (points.empty()) throw std::logic_error("ConvexWitness: empty witness");
    Matrix y = Matrix::Zero(points.front().rows(), points.front().cols());
    Matrix w = Matrix::Zero(y.rows(), y.rows());
    for (std::size_t i = 0; i < points.size(); ++i) {
      y.noalias() += weights[i] * points[i];
      w.noalias() -= 0.5 * weights[i] * (points[i] * points[i].transpose());
    }
    return {y, w};
  }
};

struct WitnessOptions {
  /// Draw each anchor Z_i uniformly-at-random on {AZ = B} instead of using
  /// the minimum-norm solution for all of them.
  bool randomize_anchors = false;
  std::uint64_t seed = 0;
};

/// Number of rank-one terms the construction reserves: n(n+1)/2 + 1.
inline Eigen::Index caratheodory_terms(Eigen::Index n) { return n * (n + 1) / 2 + 1; }

/// Builds N+1 points of D(A,B) and weights whose convex combination lies
/// within O(√ε) of `pt`.
///
/// Write −(½YY^T + W) = Σ_{i≤N} μ_i v_i v_i^T with v_i ∈ ker A (spectral
/// decomposition, zero-padded to N terms). With λ = ε/N the witness is
///
///     weights  (1−ε, λ, ..., λ)
///     Y_1      = Y_0 + (Y − Y_0)/√(1−ε)
///     Y_{i+1}  = Z_i + [√(2μ_i/λ) v_i, 0, ..., 0]
///
/// where Y_0 is the minimum-norm solution of AY = B and A Z_i = B.
inline ConvexWitness caratheodory_witness(const PrimalPoint& pt, const ConstraintPair& cp,
                                          double epsilon, const WitnessOptions& opts = {}) {
  cp.check_primal(pt);
  if (cp.m() == 0) throw DimensionError("caratheodory_witness: needs m >= 1 columns");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ArgumentError("caratheodory_witness: epsilon must lie in (0,1)");
  }
  if (!in_omega(pt, cp)) throw PreconditionError("caratheodory_witness: point is not in Omega(A,B)");

  const Eigen::Index n = cp.n();
  const Eigen::Index terms = caratheodory_terms(n);
  const Matrix& proj = cp.kernel().projector();
  const Matrix& y0 = cp.min_norm_solution();

  const auto spec = sym_eig(proj * (-pt.lifted_residual()) * proj);
  // Eigenvalues inside the psd_tol slack of the membership test count as zero.
  const double mu_cutoff =
      spec.eigenvalues.size() == 0
          ? 0.0
          : std::max(psd_slack(cp.tol(), pt.lifted_residual().norm()), cp.tol().rank_tol * spec.eigenvalues.cwiseAbs().maxCoeff());

  ConvexWitness out;
  out.epsilon = epsilon;
  out.weights.assign(static_cast<std::size_t>(terms + 1), epsilon / static_cast<double>(terms));
  out.weights[0] = 1.0 - epsilon;
  out.points.reserve(static_cast<std::size_t>(terms + 1));
  out.points.push_back(y0 + (pt.y - y0) / std::sqrt(1.0 - epsilon));

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Matrix& q = cp.kernel().basis();
  const double lambda = epsilon / static_cast<double>(terms);

  for (Eigen::Index i = 0; i < terms; ++i) {
    Matrix anchor = y0;
    if (opts.randomize_anchors && q.cols() > 0) {
      Matrix g(q.cols(), cp.m());
      for (Eigen::Index r = 0; r < g.rows(); ++r)
        for (Eigen::Index c = 0; c < g.cols(); ++c) g(r, c) = normal(rng);
      anchor += q * g;
    }
    // Padding terms and round-off eigenvalues carry μ_i = 0; the latter may
    // have eigenvectors outside ker A.
    const double mu = i < spec.eigenvalues.size() ? spec.eigenvalues(i) : 0.0;
    if (mu > mu_cutoff) {
      anchor.col(0) += std::sqrt(2.0 * mu / lambda) * (proj * spec.eigenvectors.col(i));
    }
    out.points.push_back(std::move(anchor));
  }
  return out;
}

}  // namespace gmf
