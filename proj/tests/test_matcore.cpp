#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace gmf {
namespace {

using testing::diag;
using testing::mat;

TEST(ToleranceConfig, DefaultsAreValid) {
  const ToleranceConfig tol;
  EXPECT_DOUBLE_EQ(tol.rank_tol, 1e-10);
  EXPECT_DOUBLE_EQ(tol.psd_tol, 1e-9);
  EXPECT_DOUBLE_EQ(tol.range_tol, 1e-9);
  EXPECT_DOUBLE_EQ(tol.eq_tol, 1e-8);
  EXPECT_DOUBLE_EQ(tol.feas_tol, 1e-9);
  EXPECT_NO_THROW(tol.validate());
}

TEST(ToleranceConfig, RejectsOutOfRange) {
  ToleranceConfig tol;
  tol.psd_tol = 0.0;
  EXPECT_THROW(tol.validate(), ArgumentError);
  tol.psd_tol = 1.0;
  EXPECT_THROW(tol.validate(), ArgumentError);
}

TEST(SymEig, DiagonalIsSortedDescending) {
  const auto s = sym_eig(diag({2, 1}));
  EXPECT_NEAR(s.eigenvalues(0), 2.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues(1), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(s.eigenvectors(0, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(s.eigenvectors(1, 1)), 1.0, 1e-14);
}

TEST(SymEig, ZeroMatrix) {
  const auto s = sym_eig(Matrix::Zero(2, 2));
  EXPECT_EQ(s.eigenvalues, Vector::Zero(2));
}

TEST(SymEig, OffDiagonalSwap) {
  const auto s = sym_eig(mat(2, 2, {0, 1, 1, 0}));
  EXPECT_NEAR(s.eigenvalues(0), 1.0, 1e-14);
  EXPECT_NEAR(s.eigenvalues(1), -1.0, 1e-14);
  EXPECT_NEAR(lambda_min(mat(2, 2, {0, 1, 1, 0})), -1.0, 1e-14);
}

TEST(SymEig, RejectsNonSquare) { EXPECT_THROW(sym_eig(Matrix::Zero(2, 3)), DimensionError); }

TEST(Pinv, Identity) { EXPECT_TRUE(pinv(Matrix::Identity(3, 3)).isApprox(Matrix::Identity(3, 3))); }

TEST(Pinv, SingularDiagonal) {
  const Matrix p = pinv(diag({2, 0}));
  EXPECT_NEAR(p(0, 0), 0.5, 1e-15);
  EXPECT_EQ(p(1, 1), 0.0);
}

TEST(Pinv, InvertibleSaddleMatrix) {
  const Matrix m = mat(3, 3, {1, 0, 1, 0, 1, 0, 1, 0, 0});
  EXPECT_LE((m * pinv(m) - Matrix::Identity(3, 3)).norm(), 1e-12);
}

TEST(Pinv, MoorePenroseIdentities) {
  auto rng = oracle::make_rng(5);
  for (int i = 0; i < 50; ++i) {
    const Matrix g = oracle::gaussian(5, 3, rng);
    const Matrix m = g * oracle::gaussian_symmetric(3, rng) * g.transpose();  // rank ≤ 3
    const Matrix p = pinv(m);
    const double s = m.norm();
    EXPECT_LE((m * p * m - m).norm(), 1e-9 * s);
    EXPECT_LE((p * m * p - p).norm(), 1e-9 * std::max(1.0, p.norm()));
    EXPECT_LE((m * p - (m * p).transpose()).norm(), 1e-9);
  }
}

TEST(KernelBasis, CoordinateKernel) {
  const SubspaceBasis k = kernel_basis(mat(1, 2, {1, 0}));
  EXPECT_EQ(k.dim(), 1);
  EXPECT_LE((k.projector() - diag({0, 1})).norm(), 1e-14);
}

TEST(KernelBasis, ZeroMap) {
  const SubspaceBasis k = kernel_basis(Matrix::Zero(1, 1));
  EXPECT_EQ(k.dim(), 1);
  EXPECT_NEAR(k.projector()(0, 0), 1.0, 1e-15);
}

TEST(KernelBasis, RankDeficient) {
  const SubspaceBasis k = kernel_basis(mat(2, 2, {1, 1, 1, 1}));
  ASSERT_EQ(k.dim(), 1);
  const Vector v = k.basis().col(0);
  EXPECT_NEAR(std::abs(v(0)), 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(v(0), -v(1), 1e-14);
}

TEST(KernelBasis, EmptyMapGivesWholeSpace) {
  const SubspaceBasis k = kernel_basis(Matrix(0, 3));
  EXPECT_EQ(k.dim(), 3);
  EXPECT_TRUE(k.projector().isApprox(Matrix::Identity(3, 3)));
}

TEST(KernelBasis, OrthonormalProjectorInvariants) {
  auto rng = oracle::make_rng(6);
  for (int i = 0; i < 50; ++i) {
    const Matrix a = oracle::gaussian(2, 5, rng);
    const SubspaceBasis k = kernel_basis(a);
    ASSERT_EQ(k.dim(), 3);
    const Matrix& q = k.basis();
    const Matrix& p = k.projector();
    EXPECT_LE((q.transpose() * q - Matrix::Identity(3, 3)).norm(), 1e-8);
    EXPECT_LE((p - p.transpose()).norm(), 1e-12);
    EXPECT_LE((p * p - p).norm(), 1e-8);
    EXPECT_LE((a * q).norm(), 1e-10 * a.norm());
  }
}

TEST(SubspaceBasis, TrivialHasZeroProjector) {
  const SubspaceBasis s = SubspaceBasis::trivial(3);
  EXPECT_TRUE(s.is_trivial());
  EXPECT_EQ(s.projector(), Matrix::Zero(3, 3));
}

TEST(RangeInclusion, Examples) {
  EXPECT_TRUE(range_inclusion(Matrix::Zero(2, 1), Matrix::Random(2, 2)));
  EXPECT_TRUE(range_inclusion(testing::col({1, 0}), diag({1, 0})));
  EXPECT_FALSE(range_inclusion(testing::col({0, 1}), diag({1, 0})));
}

TEST(RangeInclusion, SingularSaddleMatrix) {
  // A = 0 (1 x 1), V = 0: M(V) = 0, so (X; 0) with X ≠ 0 is outside its range.
  const Matrix rhs = testing::col({1, 0});
  EXPECT_FALSE(range_inclusion(rhs, Matrix::Zero(2, 2)));
}

TEST(PsdOnSubspace, Examples) {
  const SubspaceBasis e2(testing::col({0, 1}));
  const ToleranceConfig tol;
  EXPECT_TRUE(psd_on_subspace(Matrix::Identity(2, 2), e2, false, tol));
  EXPECT_TRUE(psd_on_subspace(Matrix::Identity(2, 2), e2, true, tol));
  EXPECT_TRUE(psd_on_subspace(diag({-5, 1}), e2, false, tol));
  EXPECT_FALSE(psd_on_subspace(diag({5, -1}), e2, false, tol));
  EXPECT_FALSE(psd_on_subspace(mat(2, 2, {0, 1, 1, 0}), SubspaceBasis::full(2), false, tol));
}

TEST(MinNormSolve, SolvesConsistentSystem) {
  auto rng = oracle::make_rng(7);
  const Matrix a = oracle::gaussian(2, 4, rng);
  const Matrix b = a * oracle::gaussian(4, 3, rng);
  const Matrix y = min_norm_solve(a, b);
  EXPECT_LE((a * y - b).norm(), 1e-10 * b.norm());
  // Minimum norm: orthogonal to ker A.
  EXPECT_LE((kernel_basis(a).projector() * y).norm(), 1e-10);
}

}  // namespace
}  // namespace gmf
