#pragma once

#include "projrep/linalg.hpp"

namespace projrep {

inline constexpr double kTolPerp = 1e-10;

// A nonzero vector up to phase. The stored representative is unit and its
// first nonzero entry is real and positive.
class Ray {
 public:
  explicit Ray(const Vec& v);

  const Vec& rep() const { return rep_; }
  Index dim() const { return rep_.size(); }

 private:
  Vec rep_;
};

// Antilinear in the first argument.
cplx inner(const Vec& a, const Vec& b);

double transition_probability(const Ray& a, const Ray& b);
double fubini_study_distance(const Ray& a, const Ray& b);

// Unit representative of phi with <psi, result> real and strictly positive.
Vec canonical_section(const Vec& psi, const Ray& phi, double tol_perp = kTolPerp);

// Minimal geodesic from a towards b, parametrised by arc length t in [0, pi/2].
Ray geodesic(const Ray& a, const Ray& b, double t, double tol_perp = kTolPerp);

// ‖U*U − I‖_F.
double unitarity_defect(const Mat& u);

// Square matrix checked on construction: ‖U*U − I‖_F ≤ 1e-10 · dim.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Mat u);
  const Mat& matrix() const { return u_; }
  Index dim() const { return u_.rows(); }

 private:
  Mat u_;
};

}  // namespace projrep
