#include <Eigen/Eigenvalues>

#include "projrep/models.hpp"
#include "projrep/unirep.hpp"
#include "test_support.hpp"

using namespace projrep;
using namespace testing_support;

namespace {

struct Fock {
  HeisenbergModel model = make_heisenberg(1, {1.0}, 40);
  Representation rep = fock_representation(model);
  Vec vac = fock_vacuum(model);
  // total coordinates (c, q, p)
  static Vec q() { return Vec::Unit(3, 1); }
  static Vec p() { return Vec::Unit(3, 2); }
};

// Eigenvector of J₃ = iπ(e₃) with the largest eigenvalue.
Vec highest_weight(const Representation& rep) {
  const Mat j3 = kI * rep.basis(3);
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (j3 + j3.adjoint()));
  return es.eigenvectors().col(es.eigenvalues().size() - 1);
}

}  // namespace

TEST(PiN, IdentityAndOrdering) {
  const Representation rep = spin_representation(1.0);
  std::mt19937_64 rng(1);
  const Vec psi = random_cvec(rng, 3);
  EXPECT_LT((pi_n(rep, {}, psi) - psi).norm(), 1e-15);
  EXPECT_LT((pi_zero(2.0, psi) - 2.0 * psi).norm(), 1e-15);
  const Vec x1 = Vec::Unit(4, 1), x2 = Vec::Unit(4, 2);
  EXPECT_LT((pi_n(rep, {x1, x2}, psi) - rep.basis(2) * (rep.basis(1) * psi)).norm(), 1e-13);
}

TEST(Seminorms, WeakAndStrong) {
  const Representation rep = spin_representation(1.5);
  std::mt19937_64 rng(2);
  const Vec psi = random_cvec(rng, 4);
  EXPECT_NEAR(seminorm_weak(rep, {}, psi), psi.norm(), 1e-14);
  const std::vector<std::vector<Vec>> sample{{Vec::Unit(4, 1)}, {Vec::Unit(4, 2), Vec::Unit(4, 3)}, {}};
  double worst = 0.0;
  for (const auto& xs : sample) worst = std::max(worst, seminorm_weak(rep, xs, psi));
  EXPECT_NEAR(seminorm_strong(rep, sample, psi), worst, 1e-14);
  EXPECT_ERROR_KIND(seminorm_strong(rep, {}, psi), InvalidArgument);
}

TEST(LocalLift, PositiveExpectation) {
  std::mt19937_64 rng(3);
  const Mat u = expm_skew(random_skew(rng, 5));
  const Vec psi = random_cvec(rng, 5).normalized();
  const Mat l = local_lift(u, psi);
  const cplx z = psi.dot(l * psi);
  EXPECT_GT(z.real(), 0.0);
  EXPECT_NEAR(z.imag(), 0.0, 1e-14);
  EXPECT_LT(unitarity_defect(l), 1e-12);
  Mat swap = Mat::Zero(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  EXPECT_ERROR_KIND(local_lift(swap, Vec::Unit(2, 0)), OutsideUPsi);
}

TEST(LocalCocycle, TrivialOnTheIdentity) {
  const Fock f;
  const GroupWord g = GroupWord::exp(0.3 * Fock::q() + 0.2 * Fock::p());
  EXPECT_LT(std::abs(local_cocycle(f.rep, f.vac, g, GroupWord()) - 1.0), 1e-12);
  EXPECT_LT(std::abs(local_cocycle(f.rep, f.vac, GroupWord(), g) - 1.0), 1e-12);
}

TEST(LocalCocycle, WeylPhaseOnHeisenbergWords) {
  const Fock f;
  const RVec v = (RVec(2) << 0.3, -0.1).finished(), w = (RVec(2) << 0.05, 0.25).finished();
  auto total = [](const RVec& x) { return (Vec(3) << 0.0, x(0), x(1)).finished(); };
  const cplx val = local_cocycle(f.rep, f.vac, GroupWord::exp(total(v)), GroupWord::exp(total(w)));
  EXPECT_LT(std::abs(val - weyl_phase(f.model, v, w)), 1e-9);
  const LocalCocycleTable t = local_cocycle_table(f.rep, f.vac, {GroupWord(), GroupWord::exp(total(v))});
  EXPECT_LT(std::abs(t.values(0, 1) - 1.0), 1e-12);
}

TEST(LocalCocycle, ScalarMismatchForUnrelatedUnitaries) {
  std::mt19937_64 rng(4);
  const Mat a = expm_skew(0.3 * random_skew(rng, 4)), b = expm_skew(0.3 * random_skew(rng, 4));
  const Vec psi = Vec::Unit(4, 0);
  // the lifts of a, b and ab differ by a phase only
  const cplx f = local_cocycle(a, b, a * b, psi);
  EXPECT_NEAR(std::abs(f), 1.0, 1e-12);
  EXPECT_LT(std::abs(local_cocycle(a, b, std::polar(1.0, 0.8) * a * b, psi) - f), 1e-12);
  EXPECT_ERROR_KIND(local_cocycle(a, b, b * a, psi), ScalarMismatch);
}

TEST(Extraction, FockVacuumMatchesModel) {
  const Fock f;
  const ExtractedForms e = omega_from_rep(f.rep, f.vac);
  EXPECT_NEAR(e.omega.at(0, 1).real(), 1.0, 1e-10);
  EXPECT_LT(max_abs(e.h - f.model.h), 1e-10);
  EXPECT_LT(e.lambda.norm(), 1e-12);
  EXPECT_LT(e.polarisation_residual, 1e-10);
  EXPECT_LT(e.bracket_form_residual, 1e-9);
}

TEST(Extraction, VacuumConditions) {
  // ⟨Ω, π(σξ)Ω⟩ = 0 and ⟨π(σξ)Ω, π(ση)Ω⟩ = 2π·H(ξ, η)
  const Fock f;
  const ExtractedForms e = omega_from_rep(f.rep, f.vac);
  for (int i = 0; i < 2; ++i) {
    const Vec a = f.rep.basis(i + 1) * f.vac + 2.0 * kPi * kI * e.lambda(i) * f.vac;
    EXPECT_LT(std::abs(f.vac.dot(a)), 1e-12);
    for (int j = 0; j < 2; ++j) {
      const Vec b = f.rep.basis(j + 1) * f.vac + 2.0 * kPi * kI * e.lambda(j) * f.vac;
      EXPECT_LT(std::abs(a.dot(b) / (2.0 * kPi) - f.model.h(i, j)), 1e-8);
    }
  }
}

TEST(Extraction, SpinHighestWeightCurvature) {
  // ω(e₁, e₂) = −j/2π, derived in tests/oracles/derive_values.py
  for (double j : {0.5, 1.0, 1.5}) {
    const Representation rep = spin_representation(j);
    const ExtractedForms e = omega_from_rep(rep, highest_weight(rep));
    EXPECT_NEAR(e.omega.at(0, 1).real(), -j / (2.0 * kPi), 1e-12);
    EXPECT_NEAR(e.omega.at(1, 2).real(), 0.0, 1e-12);
    EXPECT_LT(e.polarisation_residual, 1e-12);
    EXPECT_LT(e.bracket_form_residual, 1e-12);
  }
}

TEST(Extraction, CommonEigenvectorOfAbelianRepHasNoCurvature) {
  const AlgebraPtr g = abelian_algebra(3);
  const Mat c = 2.0 * kPi * kI * Mat::Identity(3, 3);
  const Mat a = kI * RVec::LinSpaced(3, 1.0, 2.0).asDiagonal().toDenseMatrix().cast<cplx>();
  const Mat b = kI * RVec::LinSpaced(3, -1.0, 0.5).asDiagonal().toDenseMatrix().cast<cplx>();
  const Representation rep(g, {c, a, b}, CentralData{0, 1.0});
  const ExtractedForms e = omega_from_rep(rep, Vec::Unit(3, 1));
  EXPECT_LT(e.omega.max_abs(), 1e-15);
  EXPECT_LT(max_abs(e.h), 1e-15);
}

TEST(Extraction, PreconditionErrors) {
  const Representation zero = spin_representation(0.5, 0.0);
  EXPECT_ERROR_KIND(omega_from_rep(zero, Vec::Unit(2, 0)), ZeroLevel);
  const Representation plain(su2_algebra(), spin_matrices(0.5));
  EXPECT_ERROR_KIND(omega_from_rep(plain, Vec::Unit(2, 0)), InvalidArgument);
}

TEST(Extraction, HermitianFormIsPositiveAndBoundsCurvature) {
  std::mt19937_64 rng(5);
  const Fock f;
  const Representation spin = spin_representation(1.5);
  for (int k = 0; k < 10; ++k) {
    const Vec psi = random_cvec(rng, 4).normalized();
    const ExtractedForms e = omega_from_rep(spin, psi);
    Eigen::SelfAdjointEigenSolver<Mat> es(e.h);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12);
    EXPECT_LT(e.polarisation_residual, 1e-12);
    for (int t = 0; t < 10; ++t)
      EXPECT_GE(uncertainty_slack(e, random_rvec(rng, 3), random_rvec(rng, 3)), -1e-12);
  }
  const ExtractedForms ef = omega_from_rep(f.rep, f.vac);
  // the vacuum saturates the uncertainty relation for the conjugate pair
  EXPECT_NEAR(uncertainty_slack(ef, Vec::Unit(2, 0), Vec::Unit(2, 1)), 0.0, 1e-10);
}

TEST(Extraction, FiniteDifferenceAgreesWithBracketFormula) {
  const Fock f;
  const cplx fd = omega_from_group_cocycle(f.rep, f.vac, Fock::q(), Fock::p());
  EXPECT_LT(std::abs(fd - 1.0), 5e-4);
  EXPECT_LT(std::abs(omega_from_group_cocycle(f.rep, f.vac, Fock::q(), Fock::q())), 1e-8);
}

TEST(Covariance, TranslatedVacuum) {
  const Fock f;
  std::mt19937_64 rng(6);
  const GroupWord g = GroupWord::exp(Fock::q());
  const CovarianceResidual r = covariance_check(f.rep, g, f.vac, random_rvec(rng, 2), random_rvec(rng, 2));
  EXPECT_LT(r.max(), 1e-6);
  const CovarianceResidual id = covariance_check(f.rep, GroupWord(), f.vac, Vec::Unit(2, 0), Vec::Unit(2, 1));
  EXPECT_LT(id.max(), 1e-14);
}

TEST(Covariance, StabiliserLeavesFormsFixed) {
  const Fock f;
  const ExtractedForms e0 = omega_from_rep(f.rep, f.vac);
  const Vec moved = realize(f.rep, GroupWord::exp(0.4 * Vec::Unit(3, 0))) * f.vac;
  const ExtractedForms e1 = omega_from_rep(f.rep, moved);
  EXPECT_LT(max_abs(e1.omega.matrix() - e0.omega.matrix()), 1e-8);
  EXPECT_LT(max_abs(e1.h - e0.h), 1e-8);
}

TEST(Intertwiner, ConjugateRepresentation) {
  std::mt19937_64 rng(7);
  const Representation a = spin_representation(1.0);
  const Mat u = expm_skew(random_skew(rng, 3));
  std::vector<Mat> mats;
  for (int i = 0; i < 4; ++i) mats.push_back(u * a.basis(i) * u.adjoint());
  const Representation b(a.algebra(), mats, a.central());
  EXPECT_LT(intertwiner_check(a, b, u), 1e-12);
  EXPECT_GT(intertwiner_check(a, b, expm_skew(random_skew(rng, 3))), 1e-2);
  EXPECT_ERROR_KIND(intertwiner_check(a, b, 2.0 * u), NonIsometry);
}
