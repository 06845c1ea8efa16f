#pragma once

// Brute-force verifiers. Nothing here evaluates the closed forms it is used
// to check: the support value is bounded below by sampling the definition
// sup_{AY=B} ⟨X,Y⟩ − ½⟨V,YY^T⟩, gauges come from bisection over a
// membership predicate, and convexity is fuzzed through caller-supplied
// predicates and samplers.
//
// All randomness flows from an explicit 64-bit seed; `make_rng(seed, stream)`
// derives independent substreams for batch partitions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "gmf/cones.hpp"
#include "gmf/matcore.hpp"
#include "gmf/problem.hpp"

namespace gmf::oracle {

using Rng = std::mt19937_64;

struct SampleConfig {
  int count = 1000;
  std::uint64_t seed = 0;
  double scale = 1.0;
};

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

inline Matrix gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Matrix g(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) g(r, c) = normal(rng);
  return g;
}

inline Matrix gaussian_symmetric(Eigen::Index n, Rng& rng, double scale = 1.0) {
  return symmetrize(gaussian(n, n, rng, scale));
}

/// One Y = Y_0 + Q G with AY = B; Y_0 minimum-norm, G ~ N(0, scale²).
inline Matrix sample_feasible_one(const ConstraintPair& cp, Rng& rng, double scale = 1.0) {
  const Matrix& q = cp.kernel().basis();
  return cp.min_norm_solution() + q * gaussian(q.cols(), cp.m(), rng, scale);
}

inline std::vector<Matrix> sample_feasible(const ConstraintPair& cp, const SampleConfig& sc) {
  Rng rng = make_rng(sc.seed);
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(std::max(sc.count, 0)));
  for (int i = 0; i < sc.count; ++i) out.push_back(sample_feasible_one(cp, rng, sc.scale));
  return out;
}

/// ⟨X,Y⟩ − ½⟨V,YY^T⟩, the objective whose supremum over AY = B is σ_{D(A,B)}.
inline double support_objective(const DualPoint& dual, const Matrix& y) {
  return (dual.x.cwiseProduct(y)).sum() - 0.5 * (dual.v.cwiseProduct(y * y.transpose())).sum();
}

/// Max of the objective over sampled feasible Y: a certified lower bound on
/// the support value. With a feasible `center`, half of the samples are
/// perturbations of it with radii spread log-uniformly over [1e-6, 1]·scale,
/// and the center itself is sample zero.
inline double support_lower_bound(const DualPoint& dual, const ConstraintPair& cp,
                                  const SampleConfig& sc,
                                  const std::optional<Matrix>& center = std::nullopt) {
  cp.check_dual(dual);
  Rng rng = make_rng(sc.seed, 1);
  double best = -std::numeric_limits<double>::infinity();
  int global = sc.count;
  if (center) {
    detail::require_dims(center->rows() == cp.n() && center->cols() == cp.m(),
                         "support_lower_bound: center must be n x m");
    best = support_objective(dual, *center);
    const int local = sc.count / 2;
    global = sc.count - local;
    const Matrix& q = cp.kernel().basis();
    std::uniform_real_distribution<double> expo(-6.0, 0.0);
    for (int i = 0; i < local; ++i) {
      const double radius = sc.scale * std::pow(10.0, expo(rng));
      const Matrix y = *center + q * gaussian(q.cols(), cp.m(), rng, radius);
      best = std::max(best, support_objective(dual, y));
    }
  }
  for (int i = 0; i < global; ++i) {
    best = std::max(best, support_objective(dual, sample_feasible_one(cp, rng, sc.scale)));
  }
  return best;
}

/// inf{t ≥ 0 : member(t)} for an upward-closed membership set: t = 0 is
/// tried first, then t doubles from 1 until membership (+∞ past t_max),
/// then `steps` bisections of the bracket.
template <class MemberAt>
ExtendedReal gauge_bisection(MemberAt&& member, int steps = 100, double t_max = 1e12) {
  if (member(0.0)) return ExtendedReal(0.0);
  double hi = 1.0;
  while (!member(hi)) {
    hi *= 2.0;
    if (hi > t_max) return ExtendedReal::infinity();
  }
  double lo = hi > 1.0 ? hi / 2.0 : 0.0;
  for (int i = 0; i < steps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (member(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return ExtendedReal(hi);
}

/// Gauge of Ω(A,0) at (Y,W) by bisection over t > 0 of the membership test
/// AY = 0, W = PWP ⪯ 0, ½YY^T + tW ⪯ 0. With R an orthonormal eigenbasis of
/// rge W the last condition is R^T(½YY^T + tW)R ⪯ 0 together with
/// rge Y ⊂ rge W; it is evaluated in extended precision so that points whose
/// gauge hinges on a small eigenvalue of W are still resolved accurately.
inline ExtendedReal gauge_bisection(const PrimalPoint& pt, const ConstraintPair& cp) {
  using LMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  if (!cp.homogeneous()) throw ConfigurationError("gauge_bisection: needs B = 0");
  cp.check_primal(pt);
  const auto inf = ExtendedReal::infinity();
  if (cp.p() > 0 && (cp.a() * pt.y).norm() > cp.tol().feas_tol * unit_floor(cp.a().norm() * pt.y.norm())) {
    return inf;
  }

  const LMatrix w = (0.5L * (pt.w.cast<long double>() + pt.w.cast<long double>().transpose())).eval();
  const LMatrix proj = cp.kernel().projector().cast<long double>();
  const long double wnorm = std::max(1.0L, w.norm());
  if ((w - proj * w * proj).norm() > 1e-10L * wnorm) return inf;
  const Eigen::SelfAdjointEigenSolver<LMatrix> es(w);
  const auto& evals = es.eigenvalues();  // ascending
  if (evals.size() > 0 && evals(evals.size() - 1) > 1e-13L * wnorm) return inf;

  // For t > 0, (0,W) ∈ tΩ iff W ∈ K_A°.
  if (pt.y.norm() <= cp.tol().eq_tol) return ExtendedReal(0.0);

  const long double cutoff = 1e-12L * wnorm;
  Eigen::Index r = 0;
  while (r < evals.size() && evals(r) < -cutoff) ++r;
  const LMatrix basis = es.eigenvectors().leftCols(r);
  const LMatrix y = pt.y.cast<long double>();
  const LMatrix coords = basis.transpose() * y;
  // A component of Y outside rge W meets a zero block of W: never in tΩ.
  if ((y - basis * coords).norm() > 1e-10L * y.norm()) return inf;

  const LMatrix half_yyt = 0.5L * coords * coords.transpose();
  const LMatrix w_diag = evals.head(r).asDiagonal();
  auto member = [&](double t) {
    if (t <= 0.0) return false;
    const LMatrix f = half_yyt + static_cast<long double>(t) * w_diag;
    const Eigen::SelfAdjointEigenSolver<LMatrix> fs(f, Eigen::EigenvaluesOnly);
    return fs.eigenvalues()(r - 1) <= 1e-17L * f.norm();
  };
  return gauge_bisection(member);
}

struct FuzzReport {
  int trials = 0;
  int failures = 0;
};

/// Samples member pairs (a, b) and λ ~ U(0,1) and counts combinations
/// (1−λ)a + λb rejected by `member`. `sample(rng)` must return members.
template <class Point, class Member, class Sampler>
FuzzReport convexity_fuzz(Member&& member, Sampler&& sample, const SampleConfig& sc) {
  Rng rng = make_rng(sc.seed, 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  FuzzReport report;
  for (int i = 0; i < sc.count; ++i) {
    const Point a = sample(rng);
    const Point b = sample(rng);
    const double lambda = unit(rng);
    const Point combo = (1.0 - lambda) * a + lambda * b;
    ++report.trials;
    if (!member(combo)) ++report.failures;
  }
  return report;
}

/// (Y,W) ∈ D(A,B): AY = B and W = −½YY^T. Not convex for n·m ≥ 1.
inline bool in_graph(const PrimalPoint& pt, const ConstraintPair& cp) {
  cp.check_primal(pt);
  const Matrix lifted = pt.lifted_residual();
  return cp.feasible(pt.y) && lifted.norm() <= cp.tol().eq_tol * unit_floor(pt.w.norm());
}

// ---------------------------------------------------------------------------
// Random instance generators used by the test and acceptance suites.

/// A with p rows; full row rank unless `rank` < p is given, in which case
/// A = L R has exactly that rank. B = A Y_true so rge B ⊂ rge A.
inline ConstraintPair random_constraint_pair(Eigen::Index n, Eigen::Index m, Eigen::Index p, Rng& rng,
                                             std::optional<Eigen::Index> rank = std::nullopt,
                                             bool homogeneous = false, const ToleranceConfig& tol = {}) {
  Matrix a;
  if (rank && *rank < p) {
    a = gaussian(p, *rank, rng) * gaussian(*rank, n, rng);
  } else {
    a = gaussian(p, n, rng);
  }
  Matrix b = homogeneous ? Matrix::Zero(p, m) : Matrix(a * gaussian(n, m, rng));
  return ConstraintPair(std::move(a), std::move(b), tol);
}

/// V ∈ K_A: G G^T plus terms A^T C + C^T A that vanish on ker A. With
/// `psd_rank` < n the ker-A block may be singular.
inline Matrix random_cone_member(const ConstraintPair& cp, Rng& rng,
                                 std::optional<Eigen::Index> psd_rank = std::nullopt) {
  const Eigen::Index n = cp.n();
  const Eigen::Index r = psd_rank.value_or(n);
  const Matrix g = gaussian(n, r, rng);
  Matrix v = g * g.transpose();
  if (cp.p() > 0) {
    const Matrix c = gaussian(cp.p(), n, rng);
    v += cp.a().transpose() * c + c.transpose() * cp.a();
  }
  return symmetrize(v);
}

/// An in-domain (X,V): X = VY + A^T Z for feasible Y, so (X;B) = M(V)(Y;Z)
/// lies in rge M(V) even when M(V) is singular.
inline DualPoint random_in_domain_dual(const ConstraintPair& cp, Rng& rng,
                                       std::optional<Eigen::Index> psd_rank = std::nullopt) {
  const Matrix v = random_cone_member(cp, rng, psd_rank);
  const Matrix y = sample_feasible_one(cp, rng);
  Matrix x = v * y;
  if (cp.p() > 0) x += cp.a().transpose() * gaussian(cp.p(), cp.m(), rng);
  return {x, v};
}

/// (Y, −½YY^T + T) with T a random element of K_A° (T = 0 with probability
/// `graph_fraction`, giving a point of D(A,B)).
inline PrimalPoint random_omega_member(const ConstraintPair& cp, Rng& rng, double graph_fraction = 0.25) {
  const Matrix y = sample_feasible_one(cp, rng);
  Matrix w = -0.5 * y * y.transpose();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) >= graph_fraction) {
    std::uniform_int_distribution<int> gens(1, static_cast<int>(cp.n()) + 1);
    w += sample_polar_one(cp.cone(), gens(rng), rng);
  }
  return {y, w};
}

}  // namespace gmf::oracle
