#include <Eigen/Eigenvalues>

#include "projrep/models.hpp"
#include "test_support.hpp"

using namespace projrep;
using namespace testing_support;

// ---- matrix algebras and spin --------------------------------------------------

TEST(MatrixAlgebras, Su2AndSu3) {
  const AlgebraPtr s2 = su2_algebra(), s3 = su3_algebra();
  EXPECT_EQ(s2->dim(), 3);
  EXPECT_EQ(s3->dim(), 8);
  EXPECT_LT(s3->jacobi_residual(), 1e-12);
  // e₁ = −(i/2)σ₁ etc. close like so(3)
  EXPECT_LT((s2->bracket_basis(0, 1) - Vec::Unit(3, 2)).norm(), 1e-14);
}

TEST(Spin, CommutationAndDimension) {
  for (double j : {0.5, 1.0, 1.5, 2.0}) {
    const auto m = spin_matrices(j);
    ASSERT_EQ(m.front().rows(), static_cast<Index>(2 * j + 1));
    EXPECT_LT((m[0] * m[1] - m[1] * m[0] - m[2]).norm(), 1e-13);
    // Casimir −Σπ(e_a)² = j(j+1)
    const Mat cas = -(m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
    EXPECT_LT((cas - j * (j + 1) * Mat::Identity(cas.rows(), cas.cols())).norm(), 1e-12);
  }
  EXPECT_ERROR_KIND(spin_matrices(0.3), InvalidArgument);
  EXPECT_LT(spin_representation(1.0).homomorphism_residual(), 1e-12);
}

// ---- Heisenberg ----------------------------------------------------------------

TEST(Heisenberg, StandardForm) {
  const HeisenbergModel m = make_heisenberg(2, {1.0, 2.5});
  EXPECT_EQ(m.omega(0, 1), 1.0);
  EXPECT_EQ(m.omega(2, 3), 2.5);
  EXPECT_EQ(m.omega(1, 0), -1.0);
  EXPECT_NEAR(std::abs(m.h(2, 3) - cplx(0, -1.25)), 0.0, 1e-15);
  EXPECT_NO_THROW(validate_heisenberg(m));
  HeisenbergModel bad = m;
  bad.h(0, 1) = cplx(0.0, -0.1);
  bad.h(1, 0) = cplx(0.0, 0.1);
  EXPECT_ERROR_KIND(validate_heisenberg(bad), PolarisationMismatch);
  EXPECT_ERROR_KIND(make_heisenberg(1, {-1.0}), InvalidArgument);
}

TEST(Heisenberg, ProductCommutatorPhase) {
  // (1,q)·(1,p) and (1,p)·(1,q) differ by exp(iω(q,p))
  const HeisenbergModel m = make_heisenberg(1, {1.7});
  const HeisenbergElement q{1.0, RVec::Unit(2, 0)}, p{1.0, RVec::Unit(2, 1)};
  const cplx ratio = heisenberg_product(m, q, p).z / heisenberg_product(m, p, q).z;
  EXPECT_LT(std::abs(ratio - std::exp(kI * 1.7)), 1e-14);
}

TEST(Heisenberg, GroupAxioms) {
  std::mt19937_64 rng(1);
  const HeisenbergModel m = make_heisenberg(2);
  auto element = [&] {
    return HeisenbergElement{std::polar(1.0, random_rvec(rng, 1)(0).real()), random_rvec(rng, 4).real()};
  };
  for (int k = 0; k < 20; ++k) {
    const HeisenbergElement a = element(), b = element(), c = element();
    const HeisenbergElement l = heisenberg_product(m, heisenberg_product(m, a, b), c);
    const HeisenbergElement r = heisenberg_product(m, a, heisenberg_product(m, b, c));
    EXPECT_LT(std::abs(l.z - r.z), 1e-12);
    EXPECT_LT((l.v - r.v).norm(), 1e-12);
    const HeisenbergElement e = heisenberg_product(m, a, heisenberg_inverse(a));
    EXPECT_LT(std::abs(e.z - 1.0), 1e-12);
    EXPECT_LT(e.v.norm(), 1e-12);
  }
}

TEST(Heisenberg, QuasiFreeKernelIsPositive) {
  std::mt19937_64 rng(2);
  for (int modes : {1, 2}) {
    const HeisenbergModel m = make_heisenberg(modes);
    std::vector<HeisenbergElement> samples;
    for (int k = 0; k < 50; ++k)
      samples.push_back({std::polar(1.0, 0.1 * k), random_rvec(rng, 2 * modes).real()});
    const Mat g = quasifree_kernel(m, samples);
    EXPECT_LT((g - g.adjoint()).norm(), 1e-12);
    Eigen::SelfAdjointEigenSolver<Mat> es(g);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-10);
  }
  const HeisenbergModel m = make_heisenberg(1);
  const HeisenbergElement v{1.0, (RVec(2) << 0.5, -1.0).finished()};
  // H(v, v) = ½|v|² in the standard form
  EXPECT_NEAR(quasifree_function(m, v).real(), std::exp(-0.5 * 0.5 * 1.25), 1e-15);
}

TEST(Fock, LadderOperators) {
  const FockSpace fs = make_fock_space(2, 6);
  EXPECT_EQ(fs.dim(), 28);  // total occupation 0..6 in two modes
  EXPECT_EQ(fs.exact_dim, 21);
  for (int mode = 0; mode < 2; ++mode) {
    const Mat a = fs.annihilation(mode);
    const Mat comm = a * a.adjoint() - a.adjoint() * a;
    EXPECT_LT((comm.topLeftCorner(fs.exact_dim, fs.exact_dim) - Mat::Identity(fs.exact_dim, fs.exact_dim)).norm(),
              1e-12);
  }
  const Mat a0 = fs.annihilation(0), a1 = fs.annihilation(1);
  EXPECT_LT((a0 * a1 - a1 * a0).norm(), 1e-12);
}

TEST(Fock, RepresentationAndWeylRelation) {
  const HeisenbergModel m = make_heisenberg(1, {1.0}, 40);
  const Representation rep = fock_representation(m, 1.0);
  EXPECT_LT(rep.homomorphism_residual(), 1e-8);
  const Vec vac = fock_vacuum(m);
  const RVec v = (RVec(2) << 0.3, 0.2).finished(), w = (RVec(2) << -0.1, 0.4).finished();
  auto total = [](const RVec& x) { return (Vec(3) << 0.0, x(0), x(1)).finished(); };
  const Vec lhs = expm_skew(rep(total(v))) * (expm_skew(rep(total(w))) * vac);
  const Vec rhs = weyl_phase(m, v, w) * (expm_skew(rep(total(v + w))) * vac);
  EXPECT_LT((lhs - rhs).norm(), 1e-10);
  EXPECT_LT(std::abs(weyl_phase(m, v, w) - std::exp(kI * kPi * (0.3 * 0.4 + 0.2 * 0.1))), 1e-15);
  EXPECT_ERROR_KIND(fock_representation(m, 0.0), ZeroLevel);
  EXPECT_ERROR_KIND(fock_representation(make_heisenberg(1, {1.0}, 2)), InvalidArgument);
}

// ---- Witt and Gelfand-Fuks -------------------------------------------------------

// Values from tests/oracles/derive_values.py (adaptive quadrature): 2π, 16π, 54π.
TEST(Witt, GelfandFuksCubicLaw) {
  const WittModel w = make_witt(6);
  auto mode = [&](int m) { return Vec::Unit(13, m + 6); };
  EXPECT_NEAR(gelfand_fuks(w, mode(1), mode(-1)).real(), 6.283185307179586, 1e-10);
  EXPECT_NEAR(gelfand_fuks(w, mode(2), mode(-2)).real(), 50.26548245743669, 1e-9);
  EXPECT_NEAR(gelfand_fuks(w, mode(3), mode(-3)).real(), 169.6460032938488, 1e-9);
  EXPECT_LT(std::abs(gelfand_fuks(w, mode(2), mode(-1))), 1e-10);
  for (int n = 1; n <= 6; ++n) {
    const double expected = 2.0 * kPi * n * n * n;
    EXPECT_NEAR(gelfand_fuks(w, mode(n), mode(-n)).real() / expected, 1.0, 1e-8);
  }
}

TEST(Witt, BracketAndDerivation) {
  const WittModel w = make_witt(6);
  EXPECT_LT(witt_bracket_residual(w), 1e-10);
  const Cochain gf = gelfand_fuks_cochain(w);
  EXPECT_LT(differential(gf).max_abs(), 1e-8);
  EXPECT_LT(d_invariance_defect(gf, witt_derivation(w)), 1e-8);
  // L₁ has coefficient function i·e^{it}
  const Vec l1 = Vec::Unit(13, 7);
  EXPECT_LT(std::abs(witt_field(w, l1, 0.3) - kI * std::exp(kI * 0.3)), 1e-14);
  EXPECT_LT(std::abs(witt_field(w, l1, 0.3, 1) - kI * kI * std::exp(kI * 0.3)), 1e-14);
}

// ---- Bott cocycle ----------------------------------------------------------------

TEST(Bott, FrozenValue) {
  // adaptive quadrature value from tests/oracles/derive_values.py
  const CircleDiffeo phi = CircleDiffeo::fourier({0.2}, {0.3});
  const CircleDiffeo psi = CircleDiffeo::fourier({0.1, 0.05}, {1.0, 0.0});
  EXPECT_NEAR(bott_cocycle(phi, psi), -0.0199664920873765, 1e-10);
}

TEST(Bott, CocycleIdentityAndDeckTransformations) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> amp(-0.2, 0.2), ph(0.0, 2 * kPi);
  auto random_diffeo = [&] {
    return CircleDiffeo::fourier({amp(rng), 0.5 * amp(rng)}, {ph(rng), ph(rng)});
  };
  for (int k = 0; k < 10; ++k) {
    const CircleDiffeo a = random_diffeo(), b = random_diffeo(), c = random_diffeo();
    EXPECT_LT(std::abs(bott_identity_residual(a, b, c)), 1e-6);
    for (int n : {-1, 1, 2}) {
      EXPECT_LT(std::abs(bott_cocycle(a, CircleDiffeo::deck(n))), 1e-10);
      EXPECT_LT(std::abs(bott_cocycle(CircleDiffeo::deck(n), a)), 1e-10);
    }
  }
  EXPECT_EQ(bott_cocycle(CircleDiffeo::identity(), CircleDiffeo::identity()), 0.0);
}

TEST(Bott, CompositionAndMonotonicity) {
  const CircleDiffeo a = CircleDiffeo::fourier({0.3}, {0.0});
  const CircleDiffeo ab = compose(a, CircleDiffeo::deck(1));
  EXPECT_NEAR(ab.f(0.4), a.f(0.4 + 2 * kPi), 1e-14);
  EXPECT_NEAR(ab.f(0.4), a.f(0.4) + 2 * kPi, 1e-12);
  EXPECT_NO_THROW(validate_diffeo(a));
  EXPECT_ERROR_KIND(validate_diffeo(CircleDiffeo::fourier({1.5}, {0.0})), NonMonotone);
}

// ---- loop algebras -----------------------------------------------------------------

TEST(Loop, DimensionsAndTwist) {
  const LoopModel l = make_loop(LoopType::SU2, 1, 3);
  EXPECT_EQ(l.algebra->dim(), 21);
  EXPECT_DOUBLE_EQ(loop_period(l), 1.0);
  const LoopModel t = make_loop(LoopType::SU3, 2, 3);
  EXPECT_EQ(t.algebra->dim(), 51);
  EXPECT_DOUBLE_EQ(loop_period(t), 2.0);
  const std::vector<int> plus{1, 4, 6};
  for (int a = 0; a < 8; ++a)
    EXPECT_EQ(t.sigma_sign[static_cast<std::size_t>(a)],
              std::find(plus.begin(), plus.end(), a) != plus.end() ? 1 : -1);
  std::mt19937_64 rng(4);
  EXPECT_LT(twist_residual(t, random_rvec(rng, 51)), 1e-12);
  EXPECT_LT(t.algebra->jacobi_residual(), 1e-10);
  EXPECT_ERROR_KIND(make_loop(LoopType::SU2, 2, 3), InvalidArgument);
}

TEST(Loop, KacMoodyQuadratureMatchesClosedForm) {
  // ω(X₁z, X₁z⁻¹) = −i/8 for the default prefactor 1/8π (oracle script)
  const LoopModel l = make_loop(LoopType::SU2, 1, 3, 1.0 / (8.0 * kPi), 1.0, 512);
  int a = -1, b = -1;
  for (int i = 0; i < 21; ++i) {
    if (l.element[static_cast<std::size_t>(i)] == 0 && l.mode[static_cast<std::size_t>(i)] == 1.0) a = i;
    if (l.element[static_cast<std::size_t>(i)] == 0 && l.mode[static_cast<std::size_t>(i)] == -1.0) b = i;
  }
  ASSERT_GE(a, 0);
  ASSERT_GE(b, 0);
  const cplx v = km_cocycle(l, Vec::Unit(21, a), Vec::Unit(21, b));
  EXPECT_LT(std::abs(v - cplx(0.0, -0.125)), 1e-12);
  EXPECT_LT(std::abs(km_closed_form(l, 0, 0, 1.0) - v), 1e-12);
  // n·κ law on the first basis element
  for (int n = 1; n <= 3; ++n)
    EXPECT_LT(std::abs(km_closed_form(l, 0, 0, n) - static_cast<double>(n) * v), 1e-12);
}

TEST(Loop, KappaInvarianceAndCocycle) {
  const LoopModel l = make_loop(LoopType::SU3, 2, 2, 1.0 / (8.0 * kPi), 1.0, 512);
  EXPECT_LT(kappa_invariance_residual(l), 1e-12);
  EXPECT_NEAR(kappa(l, l.k_basis[0], l.k_basis[0]).real(), 0.5, 1e-14);
  const Cochain km = km_cochain(l);
  EXPECT_LT(differential(km).max_abs(), 1e-10);
  EXPECT_LT(d_invariance_defect(km, loop_derivation(l)), 1e-10);
}
