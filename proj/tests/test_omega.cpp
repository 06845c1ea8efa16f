#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fixtures.hpp"

namespace gmf {
namespace {

using testing::col;
using testing::diag;
using testing::mat;
using testing::scalar;

const Matrix kY = testing::col({0, 1});

TEST(InOmega, GraphPointsAreMembers) {
  auto rng = oracle::make_rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto cp = oracle::random_constraint_pair(4, 2, i % 4, rng);
    const Matrix y = oracle::sample_feasible_one(cp, rng);
    EXPECT_TRUE(in_omega(PrimalPoint(y, -0.5 * y * y.transpose()), cp));
  }
}

TEST(InOmega, CoordinateExamples) {
  const auto cp = testing::coordinate_pair();
  EXPECT_TRUE(in_omega(PrimalPoint(kY, diag({0, -1})), cp));
  EXPECT_FALSE(in_omega(PrimalPoint(kY, Matrix::Zero(2, 2)), cp));
}

TEST(InOmega, ScalarParabola) {
  const auto cp = testing::zero_row_pair();
  for (double y : {-2.0, 0.0, 0.7})
    for (double w : {-3.0, -0.5 * y * y, -0.5 * y * y + 0.1}) {
      EXPECT_EQ(in_omega(PrimalPoint(scalar(y), scalar(w)), cp), w <= -0.5 * y * y) << y << " " << w;
    }
}

TEST(InOmega, InfeasibleYRejected) {
  EXPECT_FALSE(in_omega(PrimalPoint(col({1, 0}), diag({0, -5})), testing::coordinate_pair()));
}

TEST(InOmega, DimensionMismatchThrows) {
  EXPECT_THROW(in_omega(PrimalPoint(col({1, 0, 0}), Matrix::Zero(3, 3)), testing::coordinate_pair()),
               DimensionError);
}

TEST(RintAff, CoordinateExamples) {
  const auto cp = testing::coordinate_pair();
  EXPECT_TRUE(in_rint_omega(PrimalPoint(kY, diag({0, -1})), cp));
  EXPECT_TRUE(in_omega(PrimalPoint(kY, diag({0, -0.5})), cp));
  EXPECT_FALSE(in_rint_omega(PrimalPoint(kY, diag({0, -0.5})), cp));
  EXPECT_TRUE(in_aff_omega(PrimalPoint(kY, diag({0, 7})), cp));
  EXPECT_FALSE(in_omega(PrimalPoint(kY, diag({0, 7})), cp));
}

TEST(ZeroSpecial, Examples) {
  EXPECT_TRUE(in_omega_zero_special(PrimalPoint(Matrix::Zero(2, 1), Matrix::Zero(2, 2))));
  EXPECT_FALSE(in_omega_zero_special(PrimalPoint(Matrix::Zero(2, 1), Matrix::Zero(2, 2)), true));
  EXPECT_TRUE(in_omega_zero_special(PrimalPoint(Matrix::Zero(2, 1), -Matrix::Identity(2, 2)), true));
  EXPECT_TRUE(in_omega_zero_special(PrimalPoint(scalar(1), scalar(-1))));
  EXPECT_FALSE(in_omega_zero_special(PrimalPoint(scalar(1), scalar(-0.4))));
}

TEST(ZeroSpecial, AgreesWithGeneralTest) {
  auto rng = oracle::make_rng(22);
  for (int i = 0; i < 300; ++i) {
    const ConstraintPair cp(Matrix::Zero(1, 3), Matrix::Zero(1, 2));
    const Matrix y = oracle::gaussian(3, 2, rng);
    const Matrix w = -0.5 * y * y.transpose() + oracle::gaussian_symmetric(3, rng, 0.5);
    const PrimalPoint pt(y, w);
    EXPECT_EQ(in_omega_zero_special(pt), in_omega(pt, cp));
    EXPECT_EQ(in_omega_zero_special(pt, true), in_rint_omega(pt, cp));
  }
}

TEST(OmegaPolar, Examples) {
  const auto cp = testing::zero_row_pair();
  EXPECT_TRUE(in_omega_polar(DualPoint(scalar(0), scalar(0)), cp));
  EXPECT_TRUE(in_omega_polar(DualPoint(scalar(1), scalar(0.5)), cp));
  EXPECT_FALSE(in_omega_polar(DualPoint(scalar(1), scalar(0.25)), cp));
  EXPECT_FALSE(in_omega_polar(DualPoint(scalar(1), scalar(0)), cp));
}

TEST(Horizon, Examples) {
  const auto cp = testing::coordinate_pair();
  EXPECT_TRUE(in_horizon_omega(PrimalPoint(Matrix::Zero(2, 1), Matrix::Zero(2, 2)), cp));
  EXPECT_TRUE(in_horizon_omega(PrimalPoint(Matrix::Zero(2, 1), diag({0, -4})), cp));
  EXPECT_FALSE(in_horizon_omega(PrimalPoint(kY, -Matrix::Identity(2, 2)), cp));
}

TEST(HorizonPolar, HomogeneousExamples) {
  const auto cp = testing::coordinate_pair();
  EXPECT_TRUE(in_horizon_omega_polar(DualPoint(Matrix::Zero(2, 1), diag({-3, 2})), cp));
  const auto scalar_cp = testing::zero_row_pair();
  for (double v : {0.0, 0.5, 3.0}) EXPECT_FALSE(in_horizon_omega_polar(DualPoint(scalar(1), scalar(v)), scalar_cp));
}

TEST(HorizonPolar, NonHomogeneousValueIsNegative) {
  // With B = [1] the support at (0, I) is −½ ≤ 0, so the point is a member.
  const ConstraintPair cp(mat(1, 2, {1, 0}), scalar(1));
  const DualPoint d(Matrix::Zero(2, 1), Matrix::Identity(2, 2));
  EXPECT_NEAR(eval_support(d, cp).value.value(), -0.5, 1e-12);
  EXPECT_TRUE(in_horizon_omega_polar(d, cp));
}

TEST(Witness, Structure) {
  const auto cp = testing::coordinate_pair();
  const ConvexWitness w = caratheodory_witness(PrimalPoint(kY, diag({0, -1})), cp, 1e-2);
  ASSERT_EQ(static_cast<Eigen::Index>(w.points.size()), caratheodory_terms(2) + 1);
  double total = 0.0;
  for (double l : w.weights) {
    EXPECT_GT(l, 0.0);
    total += l;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  for (const Matrix& y : w.points) EXPECT_TRUE(cp.feasible(y));
}

TEST(Witness, GraphPointIsReproducedUpToEpsilon) {
  auto rng = oracle::make_rng(23);
  const auto cp = oracle::random_constraint_pair(3, 2, 1, rng);
  const Matrix y = oracle::sample_feasible_one(cp, rng);
  const PrimalPoint pt(y, -0.5 * y * y.transpose());
  double previous = std::numeric_limits<double>::infinity();
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double d = distance(caratheodory_witness(pt, cp, eps).induced_point(), pt);
    EXPECT_LT(d, previous);
    EXPECT_LE(d, 10.0 * std::sqrt(eps) * (1.0 + norm(pt)));
    previous = d;
  }
}

TEST(Witness, SqrtEpsilonRateOnReferencePoint) {
  const auto cp = testing::coordinate_pair();
  const PrimalPoint pt(kY, diag({0, -1}));
  std::vector<double> dist;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const PrimalPoint induced = caratheodory_witness(pt, cp, eps).induced_point();
    EXPECT_TRUE(in_omega(induced, cp));
    dist.push_back(distance(induced, pt));
  }
  EXPECT_LE(dist.back(), 1e-1);
  for (std::size_t i = 1; i < dist.size(); ++i) EXPECT_LT(dist[i], dist[i - 1]);
  // Least-squares slope over the four decades; the last decade is closest
  // to the asymptotic √ε regime.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double x = -1.0 - static_cast<double>(i);
    const double y = std::log10(dist[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
  EXPECT_GE(slope, 0.4);
  EXPECT_LE(slope, 0.6);
  EXPECT_NEAR(std::log10(dist[2] / dist[3]), 0.5, 0.05);
}

TEST(Witness, NonHomogeneousAnchorsStayFeasible) {
  auto rng = oracle::make_rng(24);
  const auto cp = oracle::random_constraint_pair(4, 2, 2, rng);
  const PrimalPoint pt = oracle::random_omega_member(cp, rng, 0.0);
  const ConvexWitness w = caratheodory_witness(pt, cp, 1e-3, {true, 5});
  for (const Matrix& y : w.points) EXPECT_TRUE(cp.feasible(y));
  EXPECT_TRUE(in_omega(w.induced_point(), cp));
}

TEST(Witness, Errors) {
  const auto cp = testing::coordinate_pair();
  const PrimalPoint good(kY, diag({0, -1}));
  EXPECT_THROW(caratheodory_witness(good, cp, 0.0), ArgumentError);
  EXPECT_THROW(caratheodory_witness(good, cp, 1.0), ArgumentError);
  EXPECT_THROW(caratheodory_witness(PrimalPoint(kY, Matrix::Zero(2, 2)), cp, 0.1), PreconditionError);
}

}  // namespace
}  // namespace gmf
