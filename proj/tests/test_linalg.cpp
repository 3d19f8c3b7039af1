#include <unsupported/Eigen/MatrixFunctions>

#include "test_support.hpp"

using namespace projrep;
using namespace testing_support;

TEST(NumericalRank, RelativeCutoff) {
  Mat a = Mat::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1e-3;
  a(2, 2) = 1e-12;
  EXPECT_EQ(numerical_rank(a), 2);
}

TEST(NumericalRank, AbsoluteFloorDiscardsRoundoff) {
  Mat a = Mat::Zero(2, 2);
  a(0, 0) = 3e-13;
  a(1, 1) = 1e-14;
  EXPECT_EQ(numerical_rank(a), 0);
  EXPECT_EQ(numerical_rank(Mat::Zero(4, 3)), 0);
}

TEST(NumericalRank, RandomProductsHaveExpectedRank) {
  std::mt19937_64 rng(11);
  for (Index r = 1; r <= 4; ++r) {
    const Mat a = random_cmat(rng, 6, r) * random_cmat(rng, r, 5);
    EXPECT_EQ(numerical_rank(a), r);
  }
}

TEST(Subspaces, NullSpaceIsOrthonormalKernel) {
  std::mt19937_64 rng(3);
  const Mat a = random_cmat(rng, 3, 2) * random_cmat(rng, 2, 6);
  const Mat n = null_space(a);
  ASSERT_EQ(n.cols(), 4);
  EXPECT_LT((a * n).norm(), 1e-12);
  EXPECT_LT((n.adjoint() * n - Mat::Identity(4, 4)).norm(), 1e-12);
}

TEST(Subspaces, IntersectionAndComplement) {
  Mat xy = Mat::Zero(3, 2), yz = Mat::Zero(3, 2);
  xy(0, 0) = xy(1, 1) = 1.0;
  yz(1, 0) = yz(2, 1) = 1.0;
  const Mat cap = intersect_spans(xy, yz);
  ASSERT_EQ(cap.cols(), 1);
  EXPECT_NEAR(std::abs(cap(1, 0)), 1.0, 1e-12);
  const Mat rest = complement_in(xy, yz);
  ASSERT_EQ(rest.cols(), 1);
  EXPECT_NEAR(std::abs(rest(0, 0)), 1.0, 1e-12);
  std::mt19937_64 rng(5);
  EXPECT_EQ(range_basis(xy * random_cmat(rng, 2, 4)).cols(), 2);
}

TEST(Expm, NilpotentAndDiagonal) {
  Mat n = Mat::Zero(2, 2);
  n(0, 1) = 2.0;
  const Mat e = expm(n);
  EXPECT_NEAR(std::abs(e(0, 1) - 2.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(e(0, 0) - 1.0), 0.0, 1e-14);
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = kI * kPi;
  d(1, 1) = 0.5;
  const Mat ed = expm(d);
  EXPECT_NEAR(std::abs(ed(0, 0) + 1.0), 0.0, 1e-14);
  EXPECT_NEAR(ed(1, 1).real(), std::exp(0.5), 1e-14);
}

TEST(Expm, SkewVariantIsUnitaryAndAgrees) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat a = random_skew(rng, 7);
    const Mat u = expm_skew(a);
    EXPECT_LT((u.adjoint() * u - Mat::Identity(7, 7)).norm(), 1e-13);
    EXPECT_LT((u - a.exp()).norm(), 1e-11);
    EXPECT_LT((u - expm(a)).norm(), 1e-11);
  }
}
