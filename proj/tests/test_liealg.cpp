#include "projrep/cohomology.hpp"
#include "projrep/liealg.hpp"
#include "projrep/models.hpp"
#include "test_support.hpp"

using namespace projrep;
using namespace testing_support;

TEST(LieAlgebraTest, So3Brackets) {
  const AlgebraPtr g = so3_algebra();
  ASSERT_EQ(g->dim(), 3);
  EXPECT_LT((g->bracket_basis(0, 1) - Vec::Unit(3, 2)).norm(), 1e-14);
  EXPECT_LT((g->bracket_basis(1, 0) + Vec::Unit(3, 2)).norm(), 1e-14);
  EXPECT_LT(g->jacobi_residual(), 1e-14);
  EXPECT_TRUE(g->real_structure());
}

TEST(LieAlgebraTest, BilinearBracketAndAdjoint) {
  std::mt19937_64 rng(1);
  const AlgebraPtr g = su3_algebra();
  const Vec x = random_rvec(rng, 8), y = random_rvec(rng, 8);
  EXPECT_LT((g->bracket(x, y) + g->bracket(y, x)).norm(), 1e-12);
  EXPECT_LT((g->adjoint(x) * y - g->bracket(x, y)).norm(), 1e-12);
  EXPECT_LT((adjoint_action(*g, x) - g->adjoint(x)).norm(), 1e-14);
}

TEST(LieAlgebraTest, HeisenbergBracketIsTheForm) {
  // [(0,q), (0,p)] = (ω(q,p), 0) with ω(q,p) = 1
  const AlgebraPtr h = heisenberg3_algebra();
  EXPECT_LT((h->bracket_basis(0, 1) - Vec::Unit(3, 2)).norm(), 1e-15);
  EXPECT_LT(h->bracket_basis(0, 2).norm(), 1e-15);
  EXPECT_LT(h->bracket_basis(1, 2).norm(), 1e-15);
}

TEST(LieAlgebraTest, JacobiViolationRejected) {
  const std::vector<StructureConstant> bad{{0, 1, 1, 1.0}, {0, 2, 2, 1.0}, {1, 2, 0, 1.0}};
  EXPECT_ERROR_KIND(LieAlgebra({"a", "b", "c"}, Field::Real, bad), JacobiViolation);
  const LieAlgebra unchecked({"a", "b", "c"}, Field::Real, bad, std::nullopt, 1e-9, false);
  EXPECT_NEAR(unchecked.jacobi_residual(), 2.0, 1e-12);
  const auto worst = unchecked.worst_jacobi_triple();
  EXPECT_EQ(worst[0], 0);
  EXPECT_EQ(worst[2], 2);
}

TEST(LieAlgebraTest, ConstructionErrors) {
  EXPECT_ERROR_KIND(LieAlgebra({"a", "b"}, Field::Real, {{0, 1, 1, cplx(0, 1)}}), InvalidArgument);
  EXPECT_ERROR_KIND(LieAlgebra({"a", "b"}, Field::Real, {{0, 3, 1, 1.0}}), InvalidArgument);
  EXPECT_ERROR_KIND(LieAlgebra({}, Field::Real, {}), InvalidArgument);
}

TEST(Truncation, WittRangeConvention) {
  const WittModel w = make_witt(6);
  const auto& g = *w.algebra;
  auto idx = [](int m) { return m + 6; };
  EXPECT_TRUE(g.pair_in_range(idx(6), idx(-1)));
  EXPECT_FALSE(g.pair_in_range(idx(6), idx(1)));
  EXPECT_FALSE(g.triple_in_range(idx(3), idx(2), idx(2)));
  EXPECT_TRUE(g.triple_in_range(idx(3), idx(2), idx(-2)));
  EXPECT_LT(g.jacobi_residual(), 1e-12);
}

TEST(Derivations, InnerDerivationsSatisfyLeibniz) {
  std::mt19937_64 rng(2);
  const AlgebraPtr g = su3_algebra();
  EXPECT_LT(leibniz_residual(*g, g->adjoint(random_rvec(rng, 8))), 1e-12);
  EXPECT_GT(leibniz_residual(*g, Mat::Identity(8, 8)), 0.1);
}

TEST(Derivations, SemidirectBracketAppliesD) {
  // [(0,1), (x',0)] = (Dx', 0) with D = ad(e3) on so(3)
  const AlgebraPtr g = so3_algebra();
  const Mat d = g->adjoint(Vec::Unit(3, 2));
  const AlgebraPtr s = semidirect_with_derivation(*g, d);
  ASSERT_EQ(s->dim(), 4);
  for (int k = 0; k < 3; ++k) {
    const Vec expected = (Vec(4) << d.col(k), 0.0).finished();
    EXPECT_LT((s->bracket_basis(3, k) - expected).norm(), 1e-14);
  }
  EXPECT_LT(s->jacobi_residual(), 1e-12);
}

TEST(Derivations, RemovingTheCentreOfHeisenberg) {
  const AlgebraPtr q = remove_basis_element(*heisenberg3_algebra(), 2);
  ASSERT_EQ(q->dim(), 2);
  EXPECT_LT(q->bracket_basis(0, 1).norm(), 1e-15);
  EXPECT_ERROR_KIND(remove_basis_element(*q, 5), InvalidArgument);
}

TEST(Admissible, WittGradingByMode) {
  const WittModel w = make_witt(4);
  const GradedDecomposition gd = check_admissible_periodic(*w.algebra, witt_derivation(w), kWittPeriod);
  EXPECT_EQ(gd.eigenspaces.size(), 9u);
  for (int k = -4; k <= 4; ++k) EXPECT_EQ(gd.block_dim(k), 1);
  EXPECT_NEAR((gd.ker_projector + gd.im_projector - Mat::Identity(9, 9)).norm(), 0.0, 1e-12);
  // D⁻¹ on the image undoes D there
  const Mat d = witt_derivation(w);
  EXPECT_LT((d * gd.inverse_on_image - gd.im_projector).norm(), 1e-12);
}

TEST(Admissible, IrrationalRotationRejected) {
  // eigenvalues ±2πiτ with τ = √2
  const AlgebraPtr g = abelian_algebra(2);
  const double tau = std::sqrt(2.0);
  Mat d = Mat::Zero(2, 2);
  d(0, 1) = -2 * kPi * tau;
  d(1, 0) = 2 * kPi * tau;
  EXPECT_ERROR_KIND(check_admissible_periodic(*g, d, 1.0), NonPeriodicDerivation);
  EXPECT_ERROR_KIND(check_admissible_periodic(*so3_algebra(), Mat::Identity(3, 3), 1.0), LeibnizViolation);
}

TEST(Admissible, SmallDivisorsGrowOnlyForIrrationalRatios) {
  const double golden = 0.5 * (1.0 + std::sqrt(5.0));
  EXPECT_GT(small_divisor_inverse_norm(golden, 40), 3.0 * small_divisor_inverse_norm(golden, 3));
  EXPECT_NEAR(small_divisor_inverse_norm(0.5, 40), small_divisor_inverse_norm(0.5, 3), 1e-12);
}
