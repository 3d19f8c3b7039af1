#include <cmath>

#include "projrep/models.hpp"
#include "projrep/pathflow.hpp"
#include "projrep/unirep.hpp"
#include "test_support.hpp"

using namespace projrep;
using namespace testing_support;

namespace {

struct Fock {
  HeisenbergModel model = make_heisenberg(1, {1.0}, 40);
  Representation rep = fock_representation(model);
  Vec vac = fock_vacuum(model);
  static Vec c() { return Vec::Unit(3, 0); }
  static Vec q() { return Vec::Unit(3, 1); }
  static Vec p() { return Vec::Unit(3, 2); }
};

AlgebraPath constant_leg(const Vec& x) {
  return AlgebraPath::with_sitting_instants([x](double) { return x; }, 400);
}

}  // namespace

TEST(SittingProfile, EndpointsAndSymmetry) {
  EXPECT_EQ(sitting_profile(0.0), 0.0);
  EXPECT_EQ(sitting_profile(0.04), 0.0);
  EXPECT_EQ(sitting_profile(0.96), 1.0);
  EXPECT_NEAR(sitting_profile(0.5), 0.5, 1e-15);
  EXPECT_NEAR(sitting_profile_derivative(0.5), 140.0 / 64.0 / 0.9, 1e-13);
  for (double t : {0.1, 0.3, 0.7}) {
    EXPECT_NEAR(sitting_profile(t) + sitting_profile(1.0 - t), 1.0, 1e-14);
    const double h = 1e-6;
    EXPECT_NEAR(sitting_profile_derivative(t), (sitting_profile(t + h) - sitting_profile(t - h)) / (2 * h), 1e-7);
  }
}

TEST(AlgebraPathTest, CubicInterpolationIsExact) {
  const auto f = [](double t) -> Vec { return (Vec(2) << 1 + t - 2 * t * t * t, cplx(0, 1) * t * t).finished(); };
  const AlgebraPath p = AlgebraPath::from_function(f, 32);
  for (double t : {0.0, 0.013, 0.37, 0.5, 0.91, 1.0}) {
    EXPECT_LT((p.value(t) - f(t)).norm(), 1e-13);
    const Vec df = (Vec(2) << 1 - 6 * t * t, cplx(0, 2) * t).finished();
    EXPECT_LT((p.derivative(t) - df).norm(), 1e-11);
    const Vec ddf = (Vec(2) << -12 * t, cplx(0, 2)).finished();
    EXPECT_LT((p.second_derivative(t) - ddf).norm(), 1e-8);
  }
}

TEST(AlgebraPathTest, ConstructionChecks) {
  EXPECT_ERROR_KIND(AlgebraPath{std::vector<Vec>(16, Vec::Zero(2))}, InvalidArgument);
  std::vector<Vec> nodes(17, Vec::Ones(2));
  EXPECT_ERROR_KIND((AlgebraPath{nodes, true}), MissingSittingInstants);
  nodes[3] = Vec::Ones(3);
  EXPECT_ERROR_KIND(AlgebraPath{nodes}, DimensionMismatch);
  const AlgebraPath s = constant_leg(Vec::Ones(2));
  EXPECT_TRUE(s.sitting());
  EXPECT_EQ(s.sitting_defect(), 0.0);
}

TEST(Concatenation, RescaledLegs) {
  const AlgebraCurve h = [](double t) { return Vec::Constant(1, t); };
  const AlgebraCurve g = [](double t) { return Vec::Constant(1, 10 + t); };
  const AlgebraCurve hg = concatenate(h, g);
  EXPECT_NEAR(hg(0.25)(0).real(), 2 * 0.5, 1e-15);
  EXPECT_NEAR(hg(0.75)(0).real(), 2 * 10.5, 1e-15);
}

TEST(Integrator, ConstantPathMatchesExponential) {
  const Fock f;
  const Vec x = 0.7 * Fock::q() + 0.4 * Fock::p();
  const Vec exact = expm_skew(f.rep(x)) * f.vac;
  std::vector<double> errs;
  for (int steps : {250, 500, 1000}) {
    const Trajectory t = integrate_ode(f.rep, [&](double) { return x; }, f.vac, steps);
    errs.push_back((t.endpoint() - exact).norm());
    EXPECT_LT(t.max_drift, 1e-8);
    EXPECT_EQ(t.states.size(), static_cast<std::size_t>(steps + 1));
  }
  EXPECT_LT(errs[2], 1e-8);
  EXPECT_NEAR(std::log2(errs[0] / errs[1]), 4.0, 1.0);
  EXPECT_NEAR(std::log2(errs[1] / errs[2]), 4.0, 1.0);
}

TEST(Integrator, ZeroPathIsIdentity) {
  const Fock f;
  const Trajectory t = integrate_ode(f.rep, [](double) { return Vec::Zero(3); }, f.vac, 50);
  EXPECT_EQ((t.endpoint() - f.vac).norm(), 0.0);
}

TEST(Integrator, CentralDirectionGivesPhase) {
  const Fock f;
  const Trajectory t = integrate_ode(f.rep, [](double) -> Vec { return 0.25 * Fock::c(); }, f.vac, 1000);
  EXPECT_LT((t.endpoint() - std::exp(kI * 2.0 * kPi * 0.25) * f.vac).norm(), 1e-10);
}

TEST(Integrator, InnerProductConserved) {
  const Representation spin = spin_representation(1.5);
  std::mt19937_64 rng(1);
  const Vec a = random_cvec(rng, 4).normalized(), b = random_cvec(rng, 4).normalized();
  const AlgebraCurve xi = [](double t) -> Vec {
    return (Vec(4) << 0.0, std::sin(3 * t), 1.0 - t, t * t).finished();
  };
  const Trajectory ta = integrate_ode(spin, xi, a, 1000), tb = integrate_ode(spin, xi, b, 1000);
  const cplx start = inner(a, b);
  for (std::size_t k = 0; k < ta.states.size(); k += 100)
    EXPECT_LT(std::abs(inner(ta.states[k], tb.states[k]) - start), 1e-8);
}

TEST(Integrator, StiffPathLosesUnitarity) {
  const Fock f;
  EXPECT_ERROR_KIND(integrate_ode(f.rep, [](double) -> Vec { return 8.0 * Fock::q(); }, f.vac, 10), UnitarityLoss);
  EXPECT_ERROR_KIND(integrate_ode(f.rep, [](double) { return Fock::q(); }, Vec::Zero(5), 10), DimensionMismatch);
}

TEST(Integrator, EndpointUnitaryIsUnitary) {
  const Representation spin = spin_representation(1.0);
  const Mat u = endpoint_unitary(spin, [](double t) -> Vec { return (Vec(4) << 0.1, t, 0.3, -t).finished(); }, 500);
  EXPECT_LT(unitarity_defect(u), 1e-9);
}

TEST(GroupLaw, TrivialSecondLeg) {
  const Fock f;
  const GroupLawReport r = group_law_test(f.rep, constant_leg(0.5 * Fock::q()), constant_leg(Vec::Zero(3)), f.vac);
  EXPECT_LT(r.residual, 1e-10);
}

TEST(GroupLaw, CommutingLegs) {
  const Fock f;
  EXPECT_LT(group_law_test(f.rep, constant_leg(Fock::q()), constant_leg(Fock::q()), f.vac).residual, 1e-10);
}

TEST(GroupLaw, WeylPhaseBetweenQAndP) {
  const Fock f;
  const GroupLawReport r = group_law_test(f.rep, constant_leg(Fock::p()), constant_leg(Fock::q()), f.vac);
  EXPECT_LT(r.residual, 1e-6);
  const RVec vp = RVec::Unit(2, 1), vq = RVec::Unit(2, 0);
  EXPECT_LT(std::abs(weyl_phase(f.model, vp, vq) + 1.0), 1e-14);
  const Vec straight = expm_skew(f.rep(Fock::q() + Fock::p())) * f.vac;
  EXPECT_LT((r.composed - weyl_phase(f.model, vp, vq) * straight).norm(), 1e-6);
}

TEST(GroupLaw, NeedsSittingInstants) {
  const Fock f;
  const AlgebraPath plain = AlgebraPath::from_function([](double) { return Fock::q(); }, 64);
  EXPECT_ERROR_KIND(group_law_test(f.rep, plain, constant_leg(Fock::q()), f.vac), MissingSittingInstants);
}

TEST(Homotopy, RotationFamilyWithFixedEnds) {
  // exp(r(t)x)·exp(s·sin(πr(t))y): the detour closes at t = 1
  const Representation spin = spin_representation(1.0);
  const Vec x = Vec::Unit(4, 1), y = 0.7 * Vec::Unit(4, 2);
  auto r = [](double t) { return sitting_profile(t); };
  auto dr = [](double t) { return sitting_profile_derivative(t); };
  const GroupFamily fam(spin.algebra(),
                        {{x, [=](double, double t) { return r(t); }, [=](double, double t) { return dr(t); }},
                         {y, [=](double s, double t) { return s * std::sin(kPi * r(t)); },
                          [=](double s, double t) { return s * kPi * std::cos(kPi * r(t)) * dr(t); }}});
  const HomotopyReport h = homotopy_invariance_test(spin, fam, Vec::Unit(3, 0), 1000);
  EXPECT_EQ(h.endpoints.size(), 5u);
  EXPECT_LT(h.max_deviation, 1e-5);
  EXPECT_LT(h.endpoint_defect, 1e-10);
}

TEST(Homotopy, BrokenEndpointRejected) {
  const Representation spin = spin_representation(1.0);
  const Vec x = Vec::Unit(4, 1);
  const GroupFamily fam(spin.algebra(), {{x, [](double s, double t) { return (1 + s) * sitting_profile(t); },
                                          [](double s, double t) { return (1 + s) * sitting_profile_derivative(t); }}});
  EXPECT_ERROR_KIND(homotopy_invariance_test(spin, fam, Vec::Unit(3, 0), 200), EndpointMismatch);
}

TEST(GroupFamilyTest, VelocityMatchesLogDerivative) {
  const Representation spin = spin_representation(0.5);
  const Vec x = Vec::Unit(4, 1), y = Vec::Unit(4, 3);
  const GroupFamily fam(spin.algebra(), {{x, [](double, double t) { return t; }, [](double, double) { return 1.0; }},
                                         {y, [](double s, double t) { return s * t * t; },
                                          [](double s, double t) { return 2 * s * t; }}});
  const MatrixCurve gamma = [&](double t) { return realize(spin, fam.word(0.6, t)); };
  for (double t : {0.2, 0.5, 0.8})
    EXPECT_LT((log_derivative(gamma, t) - spin(fam.velocity(0.6, t))).norm(), 1e-7);
}

TEST(LogDerivative, OneParameterGroupAndSingularValue) {
  std::mt19937_64 rng(2);
  const Mat x = random_skew(rng, 3);
  const MatrixCurve g = [&](double t) { return expm(t * x); };
  EXPECT_LT((log_derivative(g, 0.4) - x).norm(), 1e-7);
  const MatrixCurve sing = [](double t) { return Mat(t * Mat::Ones(2, 2)); };
  EXPECT_ERROR_KIND(log_derivative(sing, 0.5), SingularMatrix);
}

TEST(MaurerCartan, ProductFamilyAndRefinement) {
  std::mt19937_64 rng(3);
  Mat x = random_skew(rng, 3), y = random_skew(rng, 3);
  x /= x.norm();
  y /= y.norm();
  auto family = [&](double s, double t) { return Mat(expm(s * x) * expm(t * y)); };
  const double r32 = maurer_cartan_residual(sample_family(family, 32));
  const double r64 = maurer_cartan_residual(sample_family(family, 64));
  EXPECT_LT(r64, 1e-3);
  EXPECT_LT(r64, 0.5 * r32);
  EXPECT_ERROR_KIND(maurer_cartan_residual(sample_family(family, 8)), InvalidArgument);
}

TEST(ProductRule, FirstAndSecondOrder) {
  const Representation spin = spin_representation(1.0);
  const Vec x = Vec::Unit(4, 1) + 0.5 * Vec::Unit(4, 2);
  const AlgebraPath xi = AlgebraPath::from_function([&](double t) -> Vec { return std::sin(2 * kPi * t) * x; }, 1000);
  const Trajectory tr = integrate_ode(spin, xi, Vec::Unit(3, 0), 1000);
  EXPECT_LT(product_rule_check(spin, xi, tr, 1), 1e-4);
  EXPECT_LT(product_rule_check(spin, xi, tr, 2), 1e-3);
  EXPECT_ERROR_KIND(product_rule_check(spin, xi, tr, 3), InvalidArgument);
}

TEST(Lipschitz, SmallPerturbationStaysClose) {
  const Representation spin = spin_representation(1.0);
  const AlgebraCurve xi = [](double t) -> Vec { return (Vec(4) << 0.0, 1.0, t, 0.0).finished(); };
  const AlgebraCurve eta = [](double) -> Vec { return (Vec(4) << 0.0, 0.0, 0.0, 1.0).finished(); };
  const double l = lipschitz_probe(spin, xi, eta, Vec::Unit(3, 0), 1e-4, 400);
  EXPECT_GT(l, 0.0);
  EXPECT_LT(l, 10.0);
}
