#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace gmf {
namespace {

using testing::col;
using testing::diag;
using testing::scalar;

const Matrix kY = testing::col({0, 1});

TEST(NormalCone, ZeroIsNormalEverywhere) {
  auto rng = oracle::make_rng(31);
  const auto cp = oracle::random_constraint_pair(3, 2, 1, rng);
  for (int i = 0; i < 20; ++i) {
    const PrimalPoint base = oracle::random_omega_member(cp, rng);
    EXPECT_TRUE(in_normal_cone(DualPoint(Matrix::Zero(3, 2), Matrix::Zero(3, 3)), base, cp));
  }
}

TEST(NormalCone, CoordinateExamples) {
  const auto cp = testing::coordinate_pair();
  const PrimalPoint base(kY, diag({0, -0.5}));
  EXPECT_TRUE(in_normal_cone(DualPoint(col({3, 0}), diag({1, 0})), base, cp));
  EXPECT_FALSE(in_normal_cone(DualPoint(col({0, 1}), Matrix::Zero(2, 2)), base, cp));
}

TEST(NormalCone, PositiveExampleSatisfiesPolarity) {
  const auto cp = testing::coordinate_pair();
  const PrimalPoint base(kY, diag({0, -0.5}));
  const DualPoint dual(col({3, 0}), diag({1, 0}));
  auto rng = oracle::make_rng(32);
  for (int i = 0; i < 1000; ++i) {
    const PrimalPoint omega = oracle::random_omega_member(cp, rng);
    EXPECT_LE(pairing(omega - base, dual), 1e-8 * std::max(1.0, norm(omega - base) * norm(dual)));
  }
}

TEST(NormalCone, BaseOutsideOmegaThrows) {
  EXPECT_THROW(in_normal_cone(DualPoint(col({0, 0}), Matrix::Zero(2, 2)), PrimalPoint(kY, Matrix::Zero(2, 2)),
                              testing::coordinate_pair()),
               PreconditionError);
}

TEST(CanonicalSubgradient, ZeroDual) {
  const auto cp = testing::coordinate_pair();
  const SubgradientResult r = canonical_subgradient(DualPoint(Matrix::Zero(2, 1), diag({1, 1})), cp);
  EXPECT_EQ(r.point.y, Matrix::Zero(2, 1));
  EXPECT_EQ(r.point.w, Matrix::Zero(2, 2));
  EXPECT_EQ(r.value, 0.0);
}

TEST(CanonicalSubgradient, CoordinateKkt) {
  const auto cp = testing::coordinate_pair();
  for (double x2 : {1.0, -3.0}) {
    const DualPoint dual(col({2, x2}), Matrix::Identity(2, 2));
    const SubgradientResult r = canonical_subgradient(dual, cp);
    EXPECT_NEAR(r.point.y(1, 0), x2, 1e-12);
    EXPECT_NEAR(r.point.w(1, 1), -0.5 * x2 * x2, 1e-12);
    EXPECT_NEAR(pairing(r.point, dual), 0.5 * x2 * x2, 1e-12);
    EXPECT_NEAR(r.value, 0.5 * x2 * x2, 1e-12);
  }
}

TEST(CanonicalSubgradient, ScalarCalculus) {
  const auto cp = testing::zero_row_pair();
  const double x = 1.5, v = 2.0;
  const SubgradientResult r = canonical_subgradient(DualPoint(scalar(x), scalar(v)), cp);
  EXPECT_NEAR(r.point.y(0, 0), x / v, 1e-14);
  EXPECT_NEAR(r.point.w(0, 0), -x * x / (2 * v * v), 1e-14);
  EXPECT_NEAR(r.value, x * x / (2 * v), 1e-14);
}

TEST(CanonicalSubgradient, OutsideDomainThrows) {
  EXPECT_THROW(canonical_subgradient(DualPoint(scalar(1), scalar(0)), testing::zero_row_pair()), PreconditionError);
}

TEST(Subdifferential, CanonicalElementBelongs) {
  auto rng = oracle::make_rng(33);
  for (int i = 0; i < 200; ++i) {
    const auto cp = oracle::random_constraint_pair(4, 2, i % 4, rng);
    const auto rank = (i % 3 == 0) ? std::optional<Eigen::Index>(1) : std::nullopt;
    const DualPoint dual = oracle::random_in_domain_dual(cp, rng, rank);
    const SubgradientResult r = canonical_subgradient(dual, cp);
    EXPECT_TRUE(in_subdifferential(r.point, dual, cp));
    EXPECT_NEAR(pairing(r.point, dual), r.value, 1e-8 * std::max(1.0, norm(r.point) * norm(dual)));
  }
}

TEST(Subdifferential, ComplementarityViolated) {
  const auto cp = testing::coordinate_pair();
  const DualPoint dual(kY, Matrix::Identity(2, 2));
  EXPECT_FALSE(in_subdifferential(PrimalPoint(kY, diag({0, -0.5}) + diag({0, -1})), dual, cp));
}

TEST(Subdifferential, CandidateOutsideOmega) {
  const auto cp = testing::coordinate_pair();
  EXPECT_FALSE(in_subdifferential(PrimalPoint(kY, Matrix::Zero(2, 2)), DualPoint(kY, Matrix::Identity(2, 2)), cp));
}

TEST(Subdifferential, SubgradientInequality) {
  auto rng = oracle::make_rng(34);
  const auto cp = oracle::random_constraint_pair(3, 2, 1, rng);
  const DualPoint dual = oracle::random_in_domain_dual(cp, rng);
  const SubgradientResult r = canonical_subgradient(dual, cp);
  for (int j = 0; j < 500; ++j) {
    const DualPoint other = oracle::random_in_domain_dual(cp, rng);
    const double lhs = eval_support(other, cp).value.value();
    const double rhs = r.value + pairing(r.point, other - dual);
    EXPECT_GE(lhs, rhs - 1e-8 * std::max({1.0, std::abs(lhs), norm(r.point) * norm(other - dual)}));
  }
}

}  // namespace
}  // namespace gmf
