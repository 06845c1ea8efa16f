#pragma once

// The generalized matrix-fractional function: the support function of
// D(A,B) evaluated in closed form through the saddle matrix
//
//     M(V) = [ V  A^T ]
//            [ A   0  ]
//
// as ½ tr((X;B)^T M(V)† (X;B)) on its domain
//     {(X,V) : V ∈ K_A, rge (X;B) ⊂ rge M(V)}
// and +∞ elsewhere. The domain is not closed: with A = B = 0 and X ≠ 0 every
// (X, ηI), η > 0, belongs to it but (X, 0) does not.

#include "gmf/cones.hpp"
#include "gmf/matcore.hpp"
#include "gmf/problem.hpp"

namespace gmf {

struct SupportResult {
  ExtendedReal value = ExtendedReal::infinity();
  Matrix maximizer;   // Y*, n x m; empty when the value is +∞
  Matrix multiplier;  // Z*, p x m; empty when the value is +∞

  bool is_finite() const { return value.is_finite(); }
};

inline Matrix saddle_matrix(const Matrix& v, const ConstraintPair& cp) {
  const Eigen::Index n = cp.n();
  const Eigen::Index p = cp.p();
  detail::require_dims(v.rows() == n && v.cols() == n, "saddle_matrix: V must be n x n");
  Matrix m = Matrix::Zero(n + p, n + p);
  m.topLeftCorner(n, n) = symmetrize(v);
  m.topRightCorner(n, p) = cp.a().transpose();
  m.bottomLeftCorner(p, n) = cp.a();
  return m;
}

namespace detail {

/// The stacked right-hand side (X; B).
inline Matrix stacked_rhs(const DualPoint& pt, const ConstraintPair& cp) {
  Matrix rhs(cp.n() + cp.p(), cp.m());
  rhs.topRows(cp.n()) = pt.x;
  rhs.bottomRows(cp.p()) = cp.b();
  return rhs;
}

}  // namespace detail

inline bool in_domain(const DualPoint& pt, const ConstraintPair& cp) {
  cp.check_dual(pt);
  if (!in_cone(pt.v, cp.cone())) return false;
  return range_inclusion(detail::stacked_rhs(pt, cp), saddle_matrix(pt.v, cp), cp.tol());
}

/// Support function value together with the canonical KKT solution
/// (Y*; Z*) = M(V)†(X; B). Outside the domain the value is +∞ and the
/// matrices are left empty.
inline SupportResult eval_support(const DualPoint& pt, const ConstraintPair& cp) {
  SupportResult out;
  if (!in_domain(pt, cp)) return out;
  const Matrix rhs = detail::stacked_rhs(pt, cp);
  const Matrix m = saddle_matrix(pt.v, cp);
  const Matrix m_pinv = pinv(m, cp.tol());
  Matrix sol = m_pinv * rhs;
  // Iterative refinement: recovers digits lost to an ill-conditioned M(V).
  for (int i = 0; i < 2; ++i) sol += m_pinv * (rhs - m * sol);
  out.value = ExtendedReal(0.5 * inner(rhs, sol));
  out.maximizer = sol.topRows(cp.n());
  out.multiplier = sol.bottomRows(cp.p());
  return out;
}

}  // namespace gmf
