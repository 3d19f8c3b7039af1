#include "projrep/pathflow.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "projrep/errors.hpp"

namespace projrep {

namespace {

constexpr double kSitLo = 0.05;
constexpr double kSitHi = 0.95;

double sit_coord(double t) { return std::clamp((t - kSitLo) / (kSitHi - kSitLo), 0.0, 1.0); }

// d^order/du^order of the Lagrange basis polynomials on nodes 0..3 at u.
std::array<double, 4> lagrange_weights(double u, int order) {
  std::array<double, 4> w{};
  for (int j = 0; j < 4; ++j) {
    // coefficients of Π_{m≠j}(u − m)/(j − m), lowest degree first
    std::array<double, 4> c{1.0, 0.0, 0.0, 0.0};
    double denom = 1.0;
    for (int m = 0; m < 4; ++m) {
      if (m == j) continue;
      for (int p = 3; p >= 1; --p) c[p] = c[p - 1] - m * c[p];
      c[0] = -m * c[0];
      denom *= (j - m);
    }
    double v = 0.0;
    for (int p = order; p < 4; ++p) {
      double f = 1.0;
      for (int q = 0; q < order; ++q) f *= (p - q);
      v += f * c[p] * std::pow(u, p - order);
    }
    w[j] = v / denom;
  }
  return w;
}

Mat inverse_checked(const Mat& g) {
  Eigen::PartialPivLU<Mat> lu(g);
  if (!(lu.rcond() > 1e-12)) throw Error(ErrorKind::SingularMatrix, "path value is not invertible");
  return lu.inverse();
}

}  // namespace

double sitting_profile(double t) {
  const double s = sit_coord(t);
  const double s4 = s * s * s * s;
  return s4 * (35.0 - 84.0 * s + 70.0 * s * s - 20.0 * s * s * s);
}

double sitting_profile_derivative(double t) {
  if (t <= kSitLo || t >= kSitHi) return 0.0;
  const double s = sit_coord(t);
  const double s3 = s * s * s;
  return 140.0 * s3 * (1.0 - s) * (1.0 - s) * (1.0 - s) / (kSitHi - kSitLo);
}

AlgebraPath::AlgebraPath(std::vector<Vec> nodes, bool sitting) : nodes_(std::move(nodes)), sitting_(sitting) {
  if (nodes_.size() < 17) throw Error(ErrorKind::InvalidArgument, "a path needs at least 16 intervals");
  for (const auto& v : nodes_)
    if (v.size() != nodes_.front().size()) throw Error(ErrorKind::DimensionMismatch, "path nodes differ in size");
  if (sitting_) {
    const double d = sitting_defect();
    if (d > 1e-12) {
      throw Error(ErrorKind::MissingSittingInstants, "path flagged sitting is nonzero near an end: " + std::to_string(d));
    }
  }
}

AlgebraPath AlgebraPath::from_function(const AlgebraCurve& f, int n, bool sitting) {
  std::vector<Vec> nodes;
  nodes.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) nodes.push_back(f(static_cast<double>(k) / n));
  return AlgebraPath(std::move(nodes), sitting);
}

AlgebraPath AlgebraPath::with_sitting_instants(const AlgebraCurve& f, int n) {
  std::vector<Vec> nodes;
  nodes.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) / n;
    const double dr = sitting_profile_derivative(t);
    Vec v = f(sitting_profile(t));
    nodes.push_back(dr == 0.0 ? Vec::Zero(v.size()).eval() : (dr * v).eval());
  }
  return AlgebraPath(std::move(nodes), true);
}

Vec AlgebraPath::interpolate(double t, int order) const {
  const int n = intervals();
  const double x = std::clamp(t, 0.0, 1.0) * n;
  const int k0 = std::clamp(static_cast<int>(std::floor(x)) - 1, 0, n - 3);
  const auto w = lagrange_weights(x - k0, order);
  Vec v = Vec::Zero(algebra_dim());
  for (int j = 0; j < 4; ++j) v += w[static_cast<std::size_t>(j)] * nodes_[static_cast<std::size_t>(k0 + j)];
  return v * std::pow(static_cast<double>(n), order);
}

Vec AlgebraPath::value(double t) const { return interpolate(t, 0); }
Vec AlgebraPath::derivative(double t) const { return interpolate(t, 1); }
Vec AlgebraPath::second_derivative(double t) const { return interpolate(t, 2); }

AlgebraCurve AlgebraPath::curve() const {
  return [self = *this](double t) { return self.value(t); };
}

double AlgebraPath::sitting_defect() const {
  const int n = intervals();
  double d = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) / n;
    if (t <= kSitLo || t >= kSitHi) d = std::max(d, nodes_[static_cast<std::size_t>(k)].norm());
  }
  return d;
}

AlgebraCurve concatenate(const AlgebraCurve& h, const AlgebraCurve& g) {
  return [h, g](double t) -> Vec {
    if (t <= 0.5) return 2.0 * h(2.0 * t);
    return 2.0 * g(2.0 * t - 1.0);
  };
}

Mat log_derivative(const MatrixCurve& gamma, double t, double h) {
  const Mat d = (gamma(t + h) - gamma(t - h)) / (2.0 * h);
  return d * inverse_checked(gamma(t));
}

MatrixGrid sample_family(const std::function<Mat(double, double)>& gamma, int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "grid too small");
  MatrixGrid g;
  g.n = n;
  g.values.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  const double h = g.step();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = gamma(i * h, j * h);
  return g;
}

double maurer_cartan_residual(const MatrixGrid& grid) {
  const int n = grid.n;
  if (n < 32) throw Error(ErrorKind::InvalidArgument, "Maurer-Cartan grid must be at least 32x32");
  const double h = grid.step();
  MatrixGrid rs{n, std::vector<Mat>(grid.values.size())};
  MatrixGrid rt{n, std::vector<Mat>(grid.values.size())};
  for (int i = 1; i < n - 1; ++i)
    for (int j = 1; j < n - 1; ++j) {
      const Mat inv = inverse_checked(grid.at(i, j));
      rs.at(i, j) = (grid.at(i + 1, j) - grid.at(i - 1, j)) / (2.0 * h) * inv;
      rt.at(i, j) = (grid.at(i, j + 1) - grid.at(i, j - 1)) / (2.0 * h) * inv;
    }
  double worst = 0.0;
  for (int i = 2; i < n - 2; ++i)
    for (int j = 2; j < n - 2; ++j) {
      const Mat ds_rt = (rt.at(i + 1, j) - rt.at(i - 1, j)) / (2.0 * h);
      const Mat dt_rs = (rs.at(i, j + 1) - rs.at(i, j - 1)) / (2.0 * h);
      const Mat& a = rs.at(i, j);
      const Mat& b = rt.at(i, j);
      worst = std::max(worst, (ds_rt - dt_rs - (a * b - b * a)).norm());
    }
  return worst;
}

Trajectory integrate_ode(const Representation& rep, const AlgebraCurve& xi, const Vec& psi0, int steps,
                         double drift_tol) {
  if (steps < 1) throw Error(ErrorKind::InvalidArgument, "steps must be positive");
  if (psi0.size() != rep.dim()) throw Error(ErrorKind::DimensionMismatch, "initial state size");
  const double h = 1.0 / steps;
  const double n0 = psi0.norm();
  Trajectory tr;
  tr.t.reserve(static_cast<std::size_t>(steps) + 1);
  tr.states.reserve(static_cast<std::size_t>(steps) + 1);
  tr.t.push_back(0.0);
  tr.states.push_back(psi0);
  Vec psi = psi0;
  for (int k = 0; k < steps; ++k) {
    const double t = k * h;
    const Mat a0 = rep(xi(t));
    const Mat am = rep(xi(t + 0.5 * h));
    const Mat a1 = rep(xi(t + h));
    const Vec k1 = a0 * psi;
    const Vec k2 = am * (psi + 0.5 * h * k1);
    const Vec k3 = am * (psi + 0.5 * h * k2);
    const Vec k4 = a1 * (psi + h * k3);
    psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double drift = std::abs(psi.norm() - n0);
    if (std::isnan(drift) || drift > tr.max_drift) tr.max_drift = drift;
    tr.t.push_back((k + 1) * h);
    tr.states.push_back(psi);
  }
  if (!(tr.max_drift <= 100.0 * drift_tol)) {
    throw Error(ErrorKind::UnitarityLoss,
                "norm drift " + std::to_string(tr.max_drift) + " at " + std::to_string(steps) + " steps");
  }
  return tr;
}

Trajectory integrate_ode(const Representation& rep, const AlgebraPath& xi, const Vec& psi0, int steps,
                         double drift_tol) {
  return integrate_ode(rep, xi.curve(), psi0, steps, drift_tol);
}

Mat endpoint_unitary(const Representation& rep, const AlgebraCurve& xi, int steps) {
  const Index n = rep.dim();
  Mat u(n, n);
  for (Index j = 0; j < n; ++j) u.col(j) = integrate_ode(rep, xi, Vec::Unit(n, j), steps).endpoint();
  return u;
}

GroupFamily::GroupFamily(AlgebraPtr alg, std::vector<ProfiledFactor> factors)
    : alg_(std::move(alg)), factors_(std::move(factors)) {
  for (const auto& f : factors_)
    if (f.x.size() != alg_->dim()) throw Error(ErrorKind::DimensionMismatch, "family factor size");
}

GroupWord GroupFamily::word(double s, double t) const {
  GroupWord g;
  for (const auto& f : factors_) g.factors.push_back(f.a(s, t) * f.x);
  return g;
}

Vec GroupFamily::velocity(double s, double t) const {
  const Index n = alg_->dim();
  Mat prefix = Mat::Identity(n, n);
  Vec v = Vec::Zero(n);
  for (const auto& f : factors_) {
    const double da = f.da(s, t);
    if (da != 0.0) v += da * (prefix * f.x);
    const double a = f.a(s, t);
    if (a != 0.0) prefix = prefix * expm(a * alg_->adjoint(f.x));
  }
  return v;
}

AlgebraCurve GroupFamily::curve(double s) const {
  return [self = *this, s](double t) { return self.velocity(s, t); };
}

HomotopyReport homotopy_invariance_test(const Representation& rep, const GroupFamily& family, const Vec& psi0,
                                        int steps, std::vector<double> s_samples, double endpoint_tol) {
  if (s_samples.empty()) throw Error(ErrorKind::InvalidArgument, "no homotopy samples");
  HomotopyReport r;
  r.s = std::move(s_samples);
  const Vec end0 = realize(rep, family.word(r.s.front(), 1.0)) * psi0;
  for (double s : r.s) {
    r.endpoint_defect = std::max(r.endpoint_defect, (realize(rep, family.word(s, 0.0)) * psi0 - psi0).norm());
    r.endpoint_defect = std::max(r.endpoint_defect, (realize(rep, family.word(s, 1.0)) * psi0 - end0).norm());
  }
  if (!(r.endpoint_defect <= endpoint_tol)) {
    throw Error(ErrorKind::EndpointMismatch,
                "family does not fix its endpoints: defect " + std::to_string(r.endpoint_defect));
  }
  for (double s : r.s) r.endpoints.push_back(integrate_ode(rep, family.curve(s), psi0, steps).endpoint());
  for (const auto& e : r.endpoints) r.max_deviation = std::max(r.max_deviation, (e - r.endpoints.front()).norm());
  return r;
}

GroupLawReport group_law_test(const Representation& rep, const AlgebraPath& path_g, const AlgebraPath& path_h,
                              const Vec& psi0, int steps) {
  if (!path_g.sitting() || !path_h.sitting()) {
    throw Error(ErrorKind::MissingSittingInstants, "concatenation needs paths with sitting instants");
  }
  GroupLawReport r;
  // Each leg of the concatenation lasts ½, so 2·steps keeps the step size equal on both sides.
  r.concatenated = integrate_ode(rep, concatenate(path_h.curve(), path_g.curve()), psi0, 2 * steps).endpoint();
  const Vec mid = integrate_ode(rep, path_h, psi0, steps).endpoint();
  r.composed = integrate_ode(rep, path_g, mid, steps).endpoint();
  r.residual = (r.concatenated - r.composed).norm();
  return r;
}

double product_rule_check(const Representation& rep, const AlgebraPath& xi, const Trajectory& traj, int k) {
  if (k != 1 && k != 2) throw Error(ErrorKind::InvalidArgument, "product rule order must be 1 or 2");
  const std::size_t n = traj.states.size();
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "trajectory too short");
  const double h = traj.t[1] - traj.t[0];
  std::vector<Vec> f(n);
  for (std::size_t j = 0; j < n; ++j) f[j] = rep.apply(xi.value(traj.t[j]), traj.states[j]);
  double worst = 0.0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const double t = traj.t[j];
    const Vec& psi = traj.states[j];
    const Vec dpsi = (traj.states[j + 1] - traj.states[j - 1]) / (2.0 * h);
    Vec lhs, rhs;
    if (k == 1) {
      lhs = (f[j + 1] - f[j - 1]) / (2.0 * h);
      rhs = rep.apply(xi.derivative(t), psi) + rep.apply(xi.value(t), dpsi);
    } else {
      const Vec ddpsi = (traj.states[j + 1] - 2.0 * psi + traj.states[j - 1]) / (h * h);
      lhs = (f[j + 1] - 2.0 * f[j] + f[j - 1]) / (h * h);
      rhs = rep.apply(xi.second_derivative(t), psi) + 2.0 * rep.apply(xi.derivative(t), dpsi) +
            rep.apply(xi.value(t), ddpsi);
    }
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

double lipschitz_probe(const Representation& rep, const AlgebraCurve& xi, const AlgebraCurve& eta, const Vec& psi0,
                       double eps, int steps) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  const Vec a = integrate_ode(rep, xi, psi0, steps).endpoint();
  const AlgebraCurve moved = [xi, eta, eps](double t) -> Vec { return xi(t) + eps * eta(t); };
  const Vec b = integrate_ode(rep, moved, psi0, steps).endpoint();
  return (b - a).norm() / eps;
}

}  // namespace projrep
