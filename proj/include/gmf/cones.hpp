#pragma once

// The cone K_S = {V ∈ S^n : u^T V u ≥ 0 for all u ∈ S} of symmetric matrices
// that are positive semidefinite on a subspace S, and membership tests for
// its interior and for its polar K_S° = {W : W = PWP ⪯ 0} together with the
// polar's affine hull and relative interior. P is the projector onto S.

#include <cstdint>
#include <random>
#include <vector>

#include "gmf/matcore.hpp"

namespace gmf {

struct ConeContext {
  SubspaceBasis subspace;
  ToleranceConfig tol;
};

inline bool in_cone(const Matrix& v, const ConeContext& ctx) {
  return psd_on_subspace(v, ctx.subspace, /*strict=*/false, ctx.tol);
}

/// u^T V u > 0 on S∖{0}, with the psd_slack margin.
inline bool in_int_cone(const Matrix& v, const ConeContext& ctx) {
  return psd_on_subspace(v, ctx.subspace, /*strict=*/true, ctx.tol);
}

/// W = PWP within eq_tol and λ_max(W) ≤ psd_slack, both relative to max(1, ‖W‖_F).
inline bool in_polar_cone(const Matrix& w, const ConeContext& ctx) {
  detail::require_dims(w.rows() == w.cols() && w.rows() == ctx.subspace.ambient_dim(),
                       "in_polar_cone: W must be n x n");
  const Matrix ws = symmetrize(w);
  const Matrix& p = ctx.subspace.projector();
  const double wnorm = ws.norm();
  if ((ws - p * ws * p).norm() > ctx.tol.eq_tol * unit_floor(wnorm)) return false;
  return lambda_max(ws) <= psd_slack(ctx.tol, wnorm);
}

/// aff K_S° = span{vv^T : v ∈ S} = {W : rge W ⊂ S}; no sign condition.
inline bool in_aff_polar(const Matrix& w, const ConeContext& ctx) {
  detail::require_dims(w.rows() == w.cols() && w.rows() == ctx.subspace.ambient_dim(),
                       "in_aff_polar: W must be n x n");
  return range_inclusion(symmetrize(w), ctx.subspace.projector(), ctx.tol);
}

/// rint K_S°: polar members whose form is strictly negative on S∖{0}. For
/// S = {0} the polar is {0} and so is its relative interior.
inline bool in_rint_polar(const Matrix& w, const ConeContext& ctx) {
  detail::require_dims(w.rows() == w.cols() && w.rows() == ctx.subspace.ambient_dim(),
                       "in_rint_polar: W must be n x n");
  if (ctx.subspace.is_trivial()) return symmetrize(w).norm() <= ctx.tol.eq_tol;
  if (!in_polar_cone(w, ctx)) return false;
  const Matrix& q = ctx.subspace.basis();
  const Matrix ws = symmetrize(w);
  return lambda_max(q.transpose() * ws * q) < -psd_slack(ctx.tol, ws.norm());
}

/// Draws one W = −Σ_{i≤r} λ_i v_i v_i^T with λ_i = |N(0,1)| and v_i = Q g_i,
/// g_i ~ N(0, I_k).
template <class Rng>
Matrix sample_polar_one(const ConeContext& ctx, int generators, Rng& rng) {
  const Eigen::Index n = ctx.subspace.ambient_dim();
  const Eigen::Index k = ctx.subspace.dim();
  Matrix w = Matrix::Zero(n, n);
  if (k == 0) return w;
  std::normal_distribution<double> normal(0.0, 1.0);
  const Matrix& q = ctx.subspace.basis();
  for (int i = 0; i < generators; ++i) {
    Vector g(k);
    for (Eigen::Index j = 0; j < k; ++j) g(j) = normal(rng);
    const Vector v = q * g;
    const double weight = std::abs(normal(rng));
    w.noalias() -= weight * (v * v.transpose());
  }
  return symmetrize(w);
}

/// `count` independent samples of K_S°, each built from `generators`
/// rank-one terms. Deterministic given the seed.
inline std::vector<Matrix> sample_polar(const ConeContext& ctx, int generators, int count,
                                        std::uint64_t seed) {
  if (generators < 1) throw ArgumentError("sample_polar: need at least one generator");
  if (count < 0) throw ArgumentError("sample_polar: negative sample count");
  std::mt19937_64 rng(seed);
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(sample_polar_one(ctx, generators, rng));
  return out;
}

}  // namespace gmf
