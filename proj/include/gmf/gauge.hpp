#pragma once

// Gauge calculus for B = 0, where 0 ∈ Ω(A,0):
//
//   tΩ(A,0) = {(Y,W) : AY = 0, ½YY^T + tW ∈ K_A°}
//   γ_Ω(Y,W) = ½ / σ_min(C)  if rge Y ⊂ ker A ∩ rge W and W ∈ K_A°, else +∞
//   γ_{Ω°}(X,V) = σ_Ω(X,V)
//
// With the reduced SVD Y = UΣV^T the critical matrix is
//
//   C = Σ^{-1} (U^T (−W)^† U)^{-1} Σ^{-1},
//
// which equals −Y^† W (Y^†)^T whenever rge Y is an invariant subspace of W.
// Without that invariance the compressed matrix −Σ^{-1}U^T W U Σ^{-1} only
// bounds the gauge from below, because ½YY^T + tW ⪯ 0 also constrains the
// directions that W couples to rge Y.

#include <optional>

#include "gmf/cones.hpp"
#include "gmf/matcore.hpp"
#include "gmf/problem.hpp"
#include "gmf/support.hpp"

namespace gmf {

struct GaugeResult {
  ExtendedReal value = ExtendedReal::infinity();
  /// r x r critical matrix (r = rank Y); empty when Y = 0 or the gauge is +∞.
  Matrix critical_matrix;
  /// Smallest nonzero singular value of the critical matrix; nullopt encodes +∞.
  std::optional<double> sigma_min;
};

namespace detail {

inline void require_homogeneous(const ConstraintPair& cp, const char* op) {
  if (!cp.homogeneous()) throw ConfigurationError(std::string(op) + ": gauge calculus needs B = 0");
}

}  // namespace detail

/// (Y,W) ∈ tΩ(A,0). Throws ConfigurationError if B ≠ 0, ArgumentError if t < 0.
inline bool in_t_omega(const PrimalPoint& pt, double t, const ConstraintPair& cp) {
  detail::require_homogeneous(cp, "in_t_omega");
  if (!(t >= 0.0)) throw ArgumentError("in_t_omega: t must be nonnegative");
  cp.check_primal(pt);
  if (!cp.feasible(pt.y)) return false;
  return in_polar_cone(symmetrize(0.5 * pt.y * pt.y.transpose() + t * pt.w), cp.cone());
}

inline GaugeResult eval_gauge(const PrimalPoint& pt, const ConstraintPair& cp) {
  detail::require_homogeneous(cp, "eval_gauge");
  cp.check_primal(pt);
  const ToleranceConfig& tol = cp.tol();
  GaugeResult out;

  if (!in_polar_cone(pt.w, cp.cone())) return out;
  if (!range_inclusion(pt.y, cp.kernel().projector(), tol)) return out;
  if (!range_inclusion(pt.y, pt.w, tol)) return out;

  const auto svd = detail::thin_svd(pt.y, tol);
  if (pt.y.norm() <= tol.eq_tol || svd.s.size() == 0) {
    out.value = ExtendedReal(0.0);
    return out;
  }

  // (−W)^† restricted to rge U; SPD because rge U ⊂ rge W and W ⪯ 0.
  const Matrix inv_neg_w = pinv(-pt.w, tol);
  const Matrix compressed_inverse = svd.u.transpose() * inv_neg_w * svd.u;
  const Matrix sigma_inv = svd.s.cwiseInverse().asDiagonal();
  out.critical_matrix = symmetrize(sigma_inv * pinv(symmetrize(compressed_inverse), tol) * sigma_inv);

  const Eigen::JacobiSVD<Matrix> csvd(out.critical_matrix);
  const Vector& sv = csvd.singularValues();
  const double cutoff = tol.rank_tol * sv(0);
  std::optional<double> smallest;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff && sv(i) > 0.0) smallest = sv(i);
  }
  if (!smallest) {
    // No nonzero singular value: ½/∞ = 0.
    out.value = ExtendedReal(0.0);
    return out;
  }
  out.sigma_min = smallest;
  out.value = ExtendedReal(0.5 / *smallest);
  return out;
}

/// γ_{Ω(A,0)°}(X,V), which coincides with σ_{Ω(A,0)}(X,V).
inline ExtendedReal eval_polar_gauge(const DualPoint& pt, const ConstraintPair& cp) {
  detail::require_homogeneous(cp, "eval_polar_gauge");
  return eval_support(pt, cp).value;
}

}  // namespace gmf
