#pragma once

// Normal cone of Ω(A,B) and subdifferential of σ_{D(A,B)}.
//
// At (Y,W) ∈ Ω(A,B), (X,V) is normal iff V ∈ K_A, ⟨V, ½YY^T + W⟩ = 0 and
// rge(X − VY) ⊂ (ker A)^⊥. The subdifferential at (X,V) is the set of
// members of Ω at which (X,V) is normal.

#include <cmath>

#include "gmf/cones.hpp"
#include "gmf/matcore.hpp"
#include "gmf/omega.hpp"
#include "gmf/problem.hpp"
#include "gmf/support.hpp"

namespace gmf {

struct SubgradientResult {
  PrimalPoint point;      // (Y*, −½ Y* Y*^T)
  Matrix certificate_z;   // Z* with X = V Y* + A^T Z*
  double value = 0.0;     // σ_{D(A,B)}(X,V) = ⟨X,Y*⟩ + ⟨V,W*⟩
};

namespace detail {

inline bool normal_cone_conditions(const DualPoint& dual, const PrimalPoint& base,
                                   const ConstraintPair& cp) {
  const ToleranceConfig& tol = cp.tol();
  if (!in_cone(dual.v, cp.cone())) return false;

  const Matrix residual = base.lifted_residual();
  const double complementarity = inner(dual.v, residual);
  if (std::abs(complementarity) > tol.eq_tol * unit_floor(dual.v.norm() * residual.norm())) {
    return false;
  }

  // ∃Z : X − VY = A^T Z  ⇔  P(X − VY) = 0, as rge A^T = (ker A)^⊥.
  const Matrix gap = dual.x - dual.v * base.y;
  return (cp.kernel().projector() * gap).norm() <= tol.range_tol * unit_floor(gap.norm());
}

}  // namespace detail

/// Throws PreconditionError when `base` is not in Ω(A,B).
inline bool in_normal_cone(const DualPoint& dual, const PrimalPoint& base, const ConstraintPair& cp) {
  cp.check_dual(dual);
  if (!in_omega(base, cp)) throw PreconditionError("in_normal_cone: base point is not in Omega(A,B)");
  return detail::normal_cone_conditions(dual, base, cp);
}

/// The element (Y*, −½Y*Y*^T) ∈ ∂σ(X,V) ∩ D(A,B) with (Y*; Z*) = M(V)†(X; B).
/// Throws PreconditionError outside dom σ.
inline SubgradientResult canonical_subgradient(const DualPoint& dual, const ConstraintPair& cp) {
  const SupportResult sr = eval_support(dual, cp);
  if (!sr.is_finite()) throw PreconditionError("canonical_subgradient: point is outside dom sigma");
  SubgradientResult out;
  out.point = PrimalPoint(sr.maximizer, -0.5 * sr.maximizer * sr.maximizer.transpose());
  out.certificate_z = sr.multiplier;
  out.value = sr.value.value();
  return out;
}

/// Throws PreconditionError when `dual` is outside dom σ.
inline bool in_subdifferential(const PrimalPoint& candidate, const DualPoint& dual,
                               const ConstraintPair& cp) {
  cp.check_primal(candidate);
  if (!in_domain(dual, cp)) throw PreconditionError("in_subdifferential: dual point is outside dom sigma");
  if (!in_omega(candidate, cp)) return false;
  return detail::normal_cone_conditions(dual, candidate, cp);
}

}  // namespace gmf
