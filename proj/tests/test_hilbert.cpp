#include <cmath>

#include "projrep/hilbert.hpp"
#include "test_support.hpp"

using namespace projrep;
using namespace testing_support;

namespace {
Vec e(Index n, Index k) { return Vec::Unit(n, k); }
}  // namespace

TEST(Inner, AntilinearInFirstSlot) {
  std::mt19937_64 rng(1);
  const Vec a = random_cvec(rng, 4), b = random_cvec(rng, 4);
  const cplx z{0.3, -1.2};
  EXPECT_LT(std::abs(inner(z * a, b) - std::conj(z) * inner(a, b)), 1e-13);
  EXPECT_LT(std::abs(inner(a, z * b) - z * inner(a, b)), 1e-13);
}

TEST(RayTest, NormalisedRepresentative) {
  const Vec v = cplx(0.0, 2.0) * (e(3, 1) + e(3, 2));
  const Ray r(v);
  EXPECT_NEAR(r.rep().norm(), 1.0, 1e-15);
  EXPECT_EQ(r.rep()(0), cplx(0.0));
  EXPECT_GT(r.rep()(1).real(), 0.0);
  EXPECT_NEAR(r.rep()(1).imag(), 0.0, 1e-15);
  EXPECT_ERROR_KIND(Ray(Vec::Zero(3)), InvalidArgument);
}

TEST(RayTest, PhaseInvariantTransition) {
  std::mt19937_64 rng(2);
  const Vec a = random_cvec(rng, 5), b = random_cvec(rng, 5);
  const double p = transition_probability(Ray(a), Ray(b));
  EXPECT_NEAR(p, transition_probability(Ray(std::polar(1.0, 0.7) * a), Ray(b)), 1e-14);
  EXPECT_NEAR(p, transition_probability(Ray(b), Ray(a)), 1e-14);
  EXPECT_NEAR(transition_probability(Ray(a), Ray(cplx(0, 1) * a)), 1.0, 1e-14);
}

TEST(FubiniStudy, KnownAngles) {
  EXPECT_NEAR(fubini_study_distance(Ray(e(2, 0)), Ray(e(2, 0) + e(2, 1))), kPi / 4, 1e-15);
  EXPECT_NEAR(fubini_study_distance(Ray(e(2, 0)), Ray(e(2, 1))), kPi / 2, 1e-15);
  EXPECT_NEAR(fubini_study_distance(Ray(e(3, 2)), Ray(cplx(0, -1) * e(3, 2))), 0.0, 1e-15);
}

TEST(FubiniStudy, AccurateNearCoincidentRays) {
  const double eps = 1e-9;
  const Vec a = e(2, 0), b = std::cos(eps) * e(2, 0) + std::sin(eps) * e(2, 1);
  EXPECT_NEAR(fubini_study_distance(Ray(a), Ray(b)), eps, 1e-20);
}

TEST(CanonicalSection, ScalesSumOfOrthogonalVectors) {
  const Vec psi = e(2, 0);
  const Vec s = canonical_section(psi, Ray(e(2, 0) + e(2, 1)));
  EXPECT_LT((s - (e(2, 0) + e(2, 1)) / std::sqrt(2.0)).norm(), 1e-15);
}

TEST(CanonicalSection, PositiveOverlapForRandomRays) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 50; ++k) {
    const Vec psi = random_cvec(rng, 6).normalized();
    const Vec s = canonical_section(psi, Ray(random_cvec(rng, 6)));
    EXPECT_NEAR(s.norm(), 1.0, 1e-14);
    EXPECT_GT(inner(psi, s).real(), 0.0);
    EXPECT_NEAR(inner(psi, s).imag(), 0.0, 1e-14);
  }
}

TEST(CanonicalSection, PerpendicularRayRejected) {
  EXPECT_ERROR_KIND(canonical_section(e(2, 0), Ray(e(2, 1))), PerpendicularRay);
}

TEST(Geodesic, ArcLengthAndEndpoints) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const Index d = 2 + k % 15;
    const Ray a(random_cvec(rng, d)), b(random_cvec(rng, d));
    const double len = fubini_study_distance(a, b);
    for (double f : {0.0, 0.3, 0.6, 1.0})
      EXPECT_NEAR(fubini_study_distance(a, geodesic(a, b, f * len)), f * len, 1e-9);
    EXPECT_NEAR(transition_probability(geodesic(a, b, len), b), 1.0, 1e-9);
  }
}

TEST(Geodesic, Preconditions) {
  const Ray a(e(3, 0)), b(e(3, 0) + e(3, 1));
  EXPECT_ERROR_KIND(geodesic(a, b, 2.0), InvalidArgument);
  EXPECT_ERROR_KIND(geodesic(a, Ray(e(3, 1)), 0.1), PerpendicularRay);
}

TEST(Unitary, DefectAndCheckedConstruction) {
  std::mt19937_64 rng(6);
  const Mat a = random_skew(rng, 4);
  EXPECT_LT(unitarity_defect(expm_skew(a)), 1e-13);
  EXPECT_NO_THROW(UnitaryMatrix{expm_skew(a)});
  EXPECT_ERROR_KIND(UnitaryMatrix{2.0 * Mat::Identity(3, 3)}, NonIsometry);
  EXPECT_ERROR_KIND(UnitaryMatrix{Mat::Identity(3, 2)}, DimensionMismatch);
}
