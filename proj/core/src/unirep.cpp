#include "projrep/unirep.hpp"

#include <algorithm>
#include <cmath>

#include "projrep/errors.hpp"

namespace projrep {

Vec pi_n(const Representation& rep, const std::vector<Vec>& xs, const Vec& psi) {
  if (psi.size() != rep.dim()) throw Error(ErrorKind::DimensionMismatch, "state size");
  Vec v = psi;
  for (const auto& x : xs) v = rep.apply(x, v);
  return v;
}

Vec pi_zero(cplx lambda, const Vec& psi) { return lambda * psi; }

double seminorm_weak(const Representation& rep, const std::vector<Vec>& xs, const Vec& psi) {
  return pi_n(rep, xs, psi).norm();
}

double seminorm_strong(const Representation& rep, const std::vector<std::vector<Vec>>& sample,
                       const Vec& psi) {
  if (sample.empty()) throw Error(ErrorKind::InvalidArgument, "empty sample set");
  double m = 0.0;
  for (const auto& xs : sample) m = std::max(m, seminorm_weak(rep, xs, psi));
  return m;
}

Mat local_lift(const Mat& w, const Vec& psi, double tol_perp) {
  if (w.cols() != psi.size()) throw Error(ErrorKind::DimensionMismatch, "state size");
  const cplx z = psi.dot(w * psi);
  const double m = std::abs(z);
  if (m <= tol_perp) throw Error(ErrorKind::OutsideUPsi, "|<psi, W psi>| = " + std::to_string(m));
  return w * (std::conj(z) / m);
}

Mat local_lift(const Representation& rep, const GroupWord& g, const Vec& psi, double tol_perp) {
  return local_lift(realize(rep, g), psi, tol_perp);
}

cplx local_cocycle(const Mat& ug, const Mat& uh, const Mat& ugh, const Vec& psi, double residual_tol,
                   double tol_perp) {
  const Mat lg = local_lift(ug, psi, tol_perp);
  const Mat lh = local_lift(uh, psi, tol_perp);
  const Mat lgh = local_lift(ugh, psi, tol_perp);
  const Mat prod = lg * lh;
  const cplx z = (lgh * psi).dot(prod * psi);
  const cplx f = z / std::abs(z);
  const double residual = (prod - f * lgh).norm();
  if (!(residual <= residual_tol)) {
    throw Error(ErrorKind::ScalarMismatch, "‖ρψ(g)ρψ(h) − f ρψ(gh)‖ = " + std::to_string(residual));
  }
  return f;
}

cplx local_cocycle(const Representation& rep, const Vec& psi, const GroupWord& g, const GroupWord& h,
                   double residual_tol, double tol_perp) {
  const Mat ug = realize(rep, g);
  const Mat uh = realize(rep, h);
  return local_cocycle(ug, uh, ug * uh, psi, residual_tol, tol_perp);
}

LocalCocycleTable local_cocycle_table(const Representation& rep, const Vec& psi,
                                      const std::vector<GroupWord>& elements) {
  LocalCocycleTable t;
  t.elements = elements;
  const auto n = static_cast<Index>(elements.size());
  std::vector<Mat> u;
  u.reserve(elements.size());
  for (const auto& g : elements) u.push_back(realize(rep, g));
  t.values = Mat::Zero(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      t.values(a, b) = local_cocycle(u[a], u[b], u[a] * u[b], psi);
  return t;
}

ExtractedForms omega_from_rep(const Representation& rep, const Vec& psi) {
  if (!rep.central()) throw Error(ErrorKind::InvalidArgument, "representation has no central element");
  const double level = rep.central()->level;
  if (level == 0.0) throw Error(ErrorKind::ZeroLevel, "level must be nonzero");
  if (psi.size() != rep.dim()) throw Error(ErrorKind::DimensionMismatch, "state size");
  const LieAlgebra& total = *rep.algebra();
  const int c = rep.central()->index;

  AlgebraPtr base_alg = remove_basis_element(total, c);
  ExtractedForms out{base_alg, {}, Cochain(base_alg, 2), Mat(), Vec()};
  const int nt = static_cast<int>(total.dim());
  for (int i = 0; i < nt; ++i)
    if (i != c) out.base_to_total.push_back(i);
  const auto nb = static_cast<Index>(out.base_to_total.size());
  const double unit = 2.0 * kPi * level;

  std::vector<Mat> a(static_cast<std::size_t>(nb));
  Mat v(rep.dim(), nb);   // A_i ψ
  Mat u(rep.dim(), nb);   // A_i^* ψ
  out.lambda = Vec(nb);
  for (Index i = 0; i < nb; ++i) {
    const Mat& p = rep.basis(out.base_to_total[static_cast<std::size_t>(i)]);
    const cplx expect = psi.dot(p * psi);
    out.lambda(i) = -expect / cplx(0.0, unit);
    a[static_cast<std::size_t>(i)] = p - expect * Mat::Identity(rep.dim(), rep.dim());
    v.col(i) = a[static_cast<std::size_t>(i)] * psi;
    u.col(i) = a[static_cast<std::size_t>(i)].adjoint() * psi;
  }
  out.h = v.adjoint() * v / unit;
  Mat w = Mat::Zero(nb, nb);
  for (Index i = 0; i < nb; ++i)
    for (Index j = 0; j < nb; ++j) {
      const cplx comm = u.col(i).dot(v.col(j)) - u.col(j).dot(v.col(i));  // <ψ, [A_i, A_j] ψ>
      w(i, j) = -kI * comm / unit;
    }
  double scale = 1.0;
  for (Index i = 0; i < nb; ++i)
    for (Index j = i + 1; j < nb; ++j) {
      out.omega.set(static_cast<int>(i), static_cast<int>(j), w(i, j));
      out.max_imag_omega = std::max(out.max_imag_omega, std::abs(w(i, j).imag()));
      out.polarisation_residual =
          std::max(out.polarisation_residual, std::abs(w(i, j) + 2.0 * out.h(i, j).imag()));
      scale = std::max(scale, std::abs(out.h(i, j)));
    }
  if (!(out.polarisation_residual <= 1e-10 * scale)) {
    throw Error(ErrorKind::PolarisationMismatch,
                "|ω + 2 Im H| = " + std::to_string(out.polarisation_residual));
  }

  // Cross-check: i(A_[ξ,η] − [A_ξ, A_η]) must be the scalar ω(ξ,η)·1 on the
  // exact domain of the representation.
  const LieAlgebra& base = *out.base;
  const Index ex = rep.exact_dim();
  for (Index i = 0; i < nb; ++i)
    for (Index j = i + 1; j < nb; ++j) {
      if (!base.pair_in_range(static_cast<int>(i), static_cast<int>(j))) continue;
      const Vec b = base.bracket_basis(static_cast<int>(i), static_cast<int>(j));
      Vec bt = Vec::Zero(nt);
      for (Index k = 0; k < nb; ++k) bt(out.base_to_total[static_cast<std::size_t>(k)]) = b(k);
      const Mat pb = rep(bt);
      const Mat ab = pb - psi.dot(pb * psi) * Mat::Identity(rep.dim(), rep.dim());
      const Mat& ai = a[static_cast<std::size_t>(i)];
      const Mat& aj = a[static_cast<std::size_t>(j)];
      const Mat m = kI * (ab - (ai * aj - aj * ai)) / unit -
                    w(i, j) * Mat::Identity(rep.dim(), rep.dim());
      out.bracket_form_residual = std::max(out.bracket_form_residual, m.leftCols(ex).norm());
    }
  return out;
}

cplx omega_value(const ExtractedForms& f, const Vec& x, const Vec& y) { return f.omega.evaluate(x, y); }

cplx h_value(const ExtractedForms& f, const Vec& x, const Vec& y) { return x.dot(f.h * y); }

double uncertainty_slack(const ExtractedForms& f, const Vec& x, const Vec& y) {
  const double nx = std::sqrt(std::max(0.0, h_value(f, x, x).real()));
  const double ny = std::sqrt(std::max(0.0, h_value(f, y, y).real()));
  return nx * ny - 0.5 * std::abs(omega_value(f, x, y));
}

namespace {

cplx mixed_partial(const Representation& rep, const Vec& psi, const Vec& x, const Vec& y, double h) {
  auto f = [&](double t, double s) {
    return local_cocycle(rep, psi, GroupWord::exp(t * x), GroupWord::exp(s * y));
  };
  return (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4.0 * h * h);
}

}  // namespace

cplx omega_from_group_cocycle(const Representation& rep, const Vec& psi, const Vec& xi, const Vec& eta,
                              double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidArgument, "step must be positive");
  const cplx raw = -kI * (mixed_partial(rep, psi, xi, eta, h) - mixed_partial(rep, psi, eta, xi, h));
  return raw / (2.0 * kPi * rep.level());
}

CovarianceResidual covariance_check(const Representation& rep, const GroupWord& g, const Vec& psi,
                                    const Vec& xi, const Vec& eta) {
  const ExtractedForms here = omega_from_rep(rep, psi);
  const Vec moved = realize(rep, g) * psi;
  const ExtractedForms there = omega_from_rep(rep, moved);
  GroupWord projected;
  for (const auto& x : g.factors) {
    Vec b(static_cast<Index>(here.base_to_total.size()));
    for (std::size_t k = 0; k < here.base_to_total.size(); ++k) b(static_cast<Index>(k)) = x(here.base_to_total[k]);
    projected.factors.push_back(b);
  }
  const Mat ad = adjoint_inverse_realization(*here.base, projected);
  const Vec xi2 = ad * xi;
  const Vec eta2 = ad * eta;
  CovarianceResidual r;
  r.omega = std::abs(omega_value(there, xi, eta) - omega_value(here, xi2, eta2));
  r.h = std::abs(h_value(there, xi, eta) - h_value(here, xi2, eta2));
  return r;
}

double intertwiner_check(const Representation& a, const Representation& b, const Mat& u) {
  if (a.algebra()->dim() != b.algebra()->dim()) throw Error(ErrorKind::DimensionMismatch, "algebra dims differ");
  if (u.rows() != b.dim() || u.cols() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "U shape");
  const double iso = (u.adjoint() * u - Mat::Identity(a.dim(), a.dim())).norm();
  if (!(iso <= 1e-10)) throw Error(ErrorKind::NonIsometry, "‖U*U − I‖ = " + std::to_string(iso));
  double worst = 0.0;
  for (int i = 0; i < static_cast<int>(a.algebra()->dim()); ++i)
    worst = std::max(worst, (u * a.basis(i) - b.basis(i) * u).norm());
  return worst;
}

}  // namespace projrep
