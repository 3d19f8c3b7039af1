#include "projrep/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "projrep/errors.hpp"

namespace projrep {

namespace {

void require_same_dim(Index a, Index b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimensions " + std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

Ray::Ray(const Vec& v) {
  if (v.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty vector");
  const double n = v.norm();
  if (!(n > 0.0)) throw Error(ErrorKind::InvalidArgument, "zero vector has no ray");
  rep_ = v / n;
  for (Index i = 0; i < rep_.size(); ++i) {
    const double m = std::abs(rep_(i));
    if (m > 1e-12) {
      rep_ *= std::conj(rep_(i)) / m;
      rep_(i) = cplx(std::abs(rep_(i)), 0.0);
      break;
    }
  }
}

cplx inner(const Vec& a, const Vec& b) {
  require_same_dim(a.size(), b.size());
  return a.dot(b);  // Eigen conjugates the left operand
}

double transition_probability(const Ray& a, const Ray& b) {
  const double p = std::norm(inner(a.rep(), b.rep()));
  return std::clamp(p, 0.0, 1.0);
}

// arccos √p written as atan2(‖b − <a,b>a‖, |<a,b>|), which keeps full
// precision when the rays nearly coincide.
double fubini_study_distance(const Ray& a, const Ray& b) {
  const cplx z = inner(a.rep(), b.rep());
  const double perp = (b.rep() - z * a.rep()).norm();
  return std::atan2(perp, std::abs(z));
}

Vec canonical_section(const Vec& psi, const Ray& phi, double tol_perp) {
  const cplx z = inner(psi, phi.rep());
  const double m = std::abs(z);
  if (m <= tol_perp) {
    throw Error(ErrorKind::PerpendicularRay, "|<psi,phi>| = " + std::to_string(m));
  }
  return phi.rep() * (std::conj(z) / m);
}

Ray geodesic(const Ray& a, const Ray& b, double t, double tol_perp) {
  if (!(t >= 0.0 && t <= kPi / 2)) {
    throw Error(ErrorKind::InvalidArgument, "t outside [0, pi/2]: " + std::to_string(t));
  }
  const Vec& psi = a.rep();
  const Vec phi = canonical_section(psi, b, tol_perp);
  Vec chi = phi - inner(psi, phi) * psi;
  const double cn = chi.norm();
  if (cn <= 1e-14) {
    // a == b: every direction is a geodesic, only the start point is defined.
    if (t == 0.0) return a;
    throw Error(ErrorKind::InvalidArgument, "geodesic direction undefined for identical rays");
  }
  chi /= cn;
  return Ray(std::cos(t) * psi + std::sin(t) * chi);
}

double unitarity_defect(const Mat& u) {
  return (u.adjoint() * u - Mat::Identity(u.cols(), u.cols())).norm();
}

UnitaryMatrix::UnitaryMatrix(Mat u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols()) throw Error(ErrorKind::DimensionMismatch, "unitary must be square");
  const double d = unitarity_defect(u_);
  if (d > 1e-10 * static_cast<double>(u_.rows())) {
    throw Error(ErrorKind::NonIsometry, "‖U*U − I‖_F = " + std::to_string(d));
  }
}

}  // namespace projrep
