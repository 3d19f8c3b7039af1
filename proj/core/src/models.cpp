#include "projrep/models.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <cmath>
#include <map>
#include <string>

#include "projrep/errors.hpp"

namespace projrep {

AlgebraPtr matrix_algebra(std::vector<std::string> names, const std::vector<Mat>& basis) {
  const int n = static_cast<int>(basis.size());
  if (static_cast<int>(names.size()) != n) throw Error(ErrorKind::DimensionMismatch, "names and basis differ in size");
  std::vector<StructureConstant> constants;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Mat& x = basis[static_cast<std::size_t>(i)];
      const Mat& y = basis[static_cast<std::size_t>(j)];
      const Mat br = x * y - y * x;
      Mat rebuilt = Mat::Zero(br.rows(), br.cols());
      for (int k = 0; k < n; ++k) {
        const Mat& z = basis[static_cast<std::size_t>(k)];
        const double c = (z.adjoint() * br).trace().real() / (z.adjoint() * z).trace().real();
        rebuilt += c * z;
        if (std::abs(c) > 1e-14) constants.push_back({i, j, k, c});
      }
      if ((rebuilt - br).norm() > 1e-10) {
        throw Error(ErrorKind::InvalidArgument, "matrix basis is not closed under the commutator");
      }
    }
  return std::make_shared<LieAlgebra>(std::move(names), Field::Real, constants);
}

AlgebraPtr so3_algebra() {
  return std::make_shared<LieAlgebra>(std::vector<std::string>{"e1", "e2", "e3"}, Field::Real,
                                      std::vector<StructureConstant>{{0, 1, 2, 1.0}, {1, 2, 0, 1.0}, {2, 0, 1, 1.0}});
}

AlgebraPtr abelian_algebra(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return std::make_shared<LieAlgebra>(std::move(names), Field::Real, std::vector<StructureConstant>{});
}

AlgebraPtr heisenberg3_algebra() {
  return std::make_shared<LieAlgebra>(std::vector<std::string>{"q", "p", "c"}, Field::Real,
                                      std::vector<StructureConstant>{{0, 1, 2, 1.0}});
}

std::vector<Mat> su2_basis() {
  Mat s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -kI, kI, 0;
  s3 << 1, 0, 0, -1;
  return {-0.5 * kI * s1, -0.5 * kI * s2, -0.5 * kI * s3};
}

std::vector<Mat> su3_basis() {
  std::vector<Mat> l(8, Mat::Zero(3, 3));
  l[0](0, 1) = l[0](1, 0) = 1.0;
  l[1](0, 1) = -kI;
  l[1](1, 0) = kI;
  l[2](0, 0) = 1.0;
  l[2](1, 1) = -1.0;
  l[3](0, 2) = l[3](2, 0) = 1.0;
  l[4](0, 2) = -kI;
  l[4](2, 0) = kI;
  l[5](1, 2) = l[5](2, 1) = 1.0;
  l[6](1, 2) = -kI;
  l[6](2, 1) = kI;
  l[7](0, 0) = l[7](1, 1) = 1.0 / std::sqrt(3.0);
  l[7](2, 2) = -2.0 / std::sqrt(3.0);
  for (auto& m : l) m *= -0.5 * kI;
  return l;
}

AlgebraPtr su2_algebra() { return matrix_algebra({"e1", "e2", "e3"}, su2_basis()); }

AlgebraPtr su3_algebra() {
  return matrix_algebra({"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"}, su3_basis());
}

std::vector<Mat> spin_matrices(double j) {
  const double twice = 2.0 * j;
  if (j < 0.0 || std::abs(twice - std::round(twice)) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "spin must be a nonnegative half-integer");
  }
  const Index d = static_cast<Index>(std::lround(twice)) + 1;
  Mat jz = Mat::Zero(d, d);
  Mat jp = Mat::Zero(d, d);
  for (Index k = 0; k < d; ++k) {
    const double m = j - static_cast<double>(k);
    jz(k, k) = m;
    if (k > 0) jp(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const Mat jm = jp.adjoint();
  const Mat jx = 0.5 * (jp + jm);
  const Mat jy = (jp - jm) / (2.0 * kI);
  return {-kI * jx, -kI * jy, -kI * jz};
}

Representation spin_representation(double j, double level) {
  const AlgebraPtr base = su2_algebra();
  const CentralExtensionAlgebra ext = central_extension(base, Cochain(base, 2));
  std::vector<Mat> mats = spin_matrices(j);
  const Index d = mats.front().rows();
  mats.insert(mats.begin(), 2.0 * kPi * kI * level * Mat::Identity(d, d));
  return Representation(ext.total, std::move(mats), CentralData{0, level});
}

// ---- Heisenberg -------------------------------------------------------------

HeisenbergModel make_heisenberg(int modes, std::vector<double> scales, int fock_cutoff) {
  if (modes < 1) throw Error(ErrorKind::InvalidArgument, "at least one mode is required");
  if (scales.empty()) scales.assign(static_cast<std::size_t>(modes), 1.0);
  if (static_cast<int>(scales.size()) != modes) throw Error(ErrorKind::DimensionMismatch, "one scale per mode");
  HeisenbergModel m;
  m.modes = modes;
  m.fock_cutoff = fock_cutoff;
  m.scales = scales;
  m.omega = RMat::Zero(2 * modes, 2 * modes);
  m.h = Mat::Zero(2 * modes, 2 * modes);
  for (int j = 0; j < modes; ++j) {
    const double s = scales[static_cast<std::size_t>(j)];
    if (!(s > 0.0)) throw Error(ErrorKind::InvalidArgument, "scales must be positive");
    const int q = 2 * j;
    const int p = 2 * j + 1;
    m.omega(q, p) = s;
    m.omega(p, q) = -s;
    m.h(q, q) = m.h(p, p) = 0.5 * s;
    m.h(q, p) = -0.5 * kI * s;
    m.h(p, q) = 0.5 * kI * s;
  }
  validate_heisenberg(m);
  return m;
}

void validate_heisenberg(const HeisenbergModel& m) {
  const Index n = m.omega.rows();
  if (n != 2 * m.modes || m.omega.cols() != n || m.h.rows() != n || m.h.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "Heisenberg forms must be 2n x 2n");
  }
  if ((m.omega + m.omega.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorKind::InvalidArgument, "omega is not antisymmetric");
  }
  Eigen::JacobiSVD<RMat> svd(m.omega);
  if (!(svd.singularValues().minCoeff() > 1e-8)) throw Error(ErrorKind::InvalidArgument, "omega is degenerate");
  if ((m.h - m.h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw Error(ErrorKind::InvalidArgument, "H is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(m.h);
  if (es.eigenvalues().minCoeff() < -1e-12) throw Error(ErrorKind::InvalidArgument, "H is not positive");
  const double pol = (m.omega + 2.0 * m.h.imag()).cwiseAbs().maxCoeff();
  if (pol > 1e-12) throw Error(ErrorKind::PolarisationMismatch, "ω + 2 Im H = " + std::to_string(pol));
  if (m.fock_cutoff < 0) throw Error(ErrorKind::InvalidArgument, "negative Fock cutoff");
}

AlgebraPtr heisenberg_base(const HeisenbergModel& m) {
  std::vector<std::string> names;
  for (int j = 0; j < m.modes; ++j) {
    const std::string suffix = m.modes == 1 ? "" : std::to_string(j + 1);
    names.push_back("q" + suffix);
    names.push_back("p" + suffix);
  }
  return std::make_shared<LieAlgebra>(std::move(names), Field::Real, std::vector<StructureConstant>{});
}

Cochain heisenberg_cochain(const HeisenbergModel& m) {
  return Cochain::from_matrix(heisenberg_base(m), m.omega.cast<cplx>());
}

CentralExtensionAlgebra heisenberg_extension(const HeisenbergModel& m) {
  const Cochain w = heisenberg_cochain(m);
  return central_extension(w.algebra(), w);
}

HeisenbergElement heisenberg_identity(const HeisenbergModel& m) {
  return {cplx(1.0, 0.0), RVec::Zero(2 * m.modes)};
}

HeisenbergElement heisenberg_product(const HeisenbergModel& m, const HeisenbergElement& a,
                                     const HeisenbergElement& b) {
  if (a.v.size() != m.omega.rows() || b.v.size() != m.omega.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "Heisenberg element size");
  }
  const double w = a.v.dot(m.omega * b.v);
  return {a.z * b.z * std::exp(0.5 * kI * w), a.v + b.v};
}

HeisenbergElement heisenberg_inverse(const HeisenbergElement& a) { return {std::conj(a.z), -a.v}; }

cplx quasifree_function(const HeisenbergModel& m, const HeisenbergElement& g) {
  const Vec v = g.v.cast<cplx>();
  const double hv = v.dot(m.h * v).real();
  return g.z * std::exp(-0.5 * hv);
}

Mat quasifree_kernel(const HeisenbergModel& m, const std::vector<HeisenbergElement>& samples) {
  const auto n = static_cast<Index>(samples.size());
  Mat g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      g(i, j) = quasifree_function(m, heisenberg_product(m, heisenberg_inverse(samples[static_cast<std::size_t>(i)]),
                                                         samples[static_cast<std::size_t>(j)]));
  return g;
}

FockSpace make_fock_space(int modes, int cutoff) {
  if (modes < 1 || cutoff < 1) throw Error(ErrorKind::InvalidArgument, "Fock space needs modes >= 1, cutoff >= 1");
  FockSpace f;
  f.modes = modes;
  f.cutoff = cutoff;
  std::vector<int> occ(static_cast<std::size_t>(modes), 0);
  // compositions of each total, lexicographic in the first mode descending
  std::function<void(int, int)> fill = [&](int pos, int remaining) {
    if (pos == modes - 1) {
      occ[static_cast<std::size_t>(pos)] = remaining;
      f.states.push_back(occ);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      occ[static_cast<std::size_t>(pos)] = k;
      fill(pos + 1, remaining - k);
    }
  };
  for (int total = 0; total <= cutoff; ++total) {
    fill(0, total);
    if (total == cutoff - 1) f.exact_dim = f.dim();
  }
  return f;
}

Mat FockSpace::annihilation(int mode) const {
  std::map<std::vector<int>, Index> index;
  for (Index k = 0; k < dim(); ++k) index[states[static_cast<std::size_t>(k)]] = k;
  Mat a = Mat::Zero(dim(), dim());
  for (Index k = 0; k < dim(); ++k) {
    auto s = states[static_cast<std::size_t>(k)];
    const int n = s[static_cast<std::size_t>(mode)];
    if (n == 0) continue;
    s[static_cast<std::size_t>(mode)] = n - 1;
    a(index.at(s), k) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

Representation fock_representation(const HeisenbergModel& m, double level) {
  validate_heisenberg(m);
  if (m.scales.size() != static_cast<std::size_t>(m.modes)) {
    throw Error(ErrorKind::InvalidArgument, "the Fock realization needs a standard-form model");
  }
  if (m.fock_cutoff < 4) throw Error(ErrorKind::InvalidArgument, "Fock cutoff must be at least 4");
  if (level == 0.0) throw Error(ErrorKind::ZeroLevel, "level must be nonzero");
  if (level < 0.0) throw Error(ErrorKind::InvalidArgument, "the Fock realization needs a positive level");
  const CentralExtensionAlgebra ext = heisenberg_extension(m);
  const FockSpace fock = make_fock_space(m.modes, m.fock_cutoff);
  const Index d = fock.dim();
  std::vector<Mat> mats{2.0 * kPi * kI * level * Mat::Identity(d, d)};
  for (int j = 0; j < m.modes; ++j) {
    const Mat a = fock.annihilation(j);
    const Mat q = (a + a.adjoint()) / std::sqrt(2.0);
    const Mat p = (a - a.adjoint()) / (kI * std::sqrt(2.0));
    const double g = std::sqrt(2.0 * kPi * level * m.scales[static_cast<std::size_t>(j)]);
    mats.push_back(kI * g * q);
    mats.push_back(-kI * g * p);
  }
  return Representation(ext.total, std::move(mats), CentralData{0, level}, fock.exact_dim);
}

Vec fock_vacuum(const HeisenbergModel& m) {
  const FockSpace fock = make_fock_space(m.modes, m.fock_cutoff);
  return Vec::Unit(fock.dim(), 0);
}

cplx weyl_phase(const HeisenbergModel& m, const RVec& v, const RVec& w, double level) {
  return std::exp(kI * kPi * level * v.dot(m.omega * w));
}

// ---- Witt -------------------------------------------------------------------

WittModel make_witt(int n_max, int quadrature_points) {
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "Witt cutoff must be positive");
  if (quadrature_points < 4 * n_max + 4) throw Error(ErrorKind::InvalidArgument, "too few quadrature points");
  std::vector<std::string> names;
  Truncation tr;
  tr.cutoff = n_max;
  for (int m = -n_max; m <= n_max; ++m) {
    names.push_back("L" + std::to_string(m));
    tr.modes.push_back(m);
  }
  std::vector<StructureConstant> constants;
  for (int a = -n_max; a <= n_max; ++a)
    for (int b = a + 1; b <= n_max; ++b) {
      if (std::abs(a + b) > n_max) continue;
      constants.push_back({a + n_max, b + n_max, a + b + n_max, static_cast<double>(a - b)});
    }
  WittModel w;
  w.n_max = n_max;
  w.quadrature_points = quadrature_points;
  w.algebra = std::make_shared<LieAlgebra>(std::move(names), Field::Complex, constants, tr);
  return w;
}

Mat witt_derivation(const WittModel& m) {
  Mat d = Mat::Zero(m.algebra->dim(), m.algebra->dim());
  for (int k = -m.n_max; k <= m.n_max; ++k) d(k + m.n_max, k + m.n_max) = kI * static_cast<double>(k);
  return d;
}

cplx witt_field(const WittModel& m, const Vec& f, double t, int derivative) {
  if (f.size() != m.algebra->dim()) throw Error(ErrorKind::DimensionMismatch, "Witt mode vector size");
  cplx v = 0.0;
  for (int k = -m.n_max; k <= m.n_max; ++k) {
    const cplx c = f(k + m.n_max);
    if (c == 0.0) continue;
    v += c * kI * std::pow(kI * static_cast<double>(k), derivative) * std::exp(kI * static_cast<double>(k) * t);
  }
  return v;
}

cplx gelfand_fuks(const WittModel& m, const Vec& f, const Vec& g) {
  const int q = m.quadrature_points;
  const double w = 2.0 * kPi / q;
  cplx sum = 0.0;
  for (int k = 0; k < q; ++k) {
    const double t = k * w;
    sum += witt_field(m, f, t, 1) * witt_field(m, g, t, 2) - witt_field(m, g, t, 1) * witt_field(m, f, t, 2);
  }
  return -0.5 * kI * sum * w;
}

Cochain gelfand_fuks_cochain(const WittModel& m) {
  const Index n = m.algebra->dim();
  Cochain c(m.algebra, 2);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      c.set(static_cast<int>(i), static_cast<int>(j), gelfand_fuks(m, Vec::Unit(n, i), Vec::Unit(n, j)));
  return c;
}

double witt_bracket_residual(const WittModel& m) {
  const Index n = m.algebra->dim();
  const int q = m.quadrature_points;
  const double w = 2.0 * kPi / q;
  double worst = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (!m.algebra->pair_in_range(static_cast<int>(i), static_cast<int>(j))) continue;
      const Vec f = Vec::Unit(n, i);
      const Vec g = Vec::Unit(n, j);
      Vec proj = Vec::Zero(n);
      for (int k = 0; k < q; ++k) {
        const double t = k * w;
        const cplx field = witt_field(m, f, t) * witt_field(m, g, t, 1) - witt_field(m, g, t) * witt_field(m, f, t, 1);
        for (int mode = -m.n_max; mode <= m.n_max; ++mode)
          proj(mode + m.n_max) += field * std::exp(-kI * static_cast<double>(mode) * t);
      }
      proj *= w / (2.0 * kPi) / kI;  // coefficient of i·e^{imt}
      worst = std::max(worst, (proj - m.algebra->bracket_basis(static_cast<int>(i), static_cast<int>(j))).cwiseAbs().maxCoeff());
    }
  return worst;
}

// ---- circle diffeomorphisms ---------------------------------------------------

CircleDiffeo CircleDiffeo::identity() { return deck(0); }

CircleDiffeo CircleDiffeo::deck(int n) {
  const double shift = 2.0 * kPi * n;
  return {[shift](double t) { return t + shift; }, [](double) { return 1.0; }, [](double) { return 0.0; }};
}

CircleDiffeo CircleDiffeo::fourier(std::vector<double> a, std::vector<double> theta) {
  if (a.size() != theta.size()) throw Error(ErrorKind::DimensionMismatch, "amplitudes and phases differ in size");
  auto sum = [a, theta](double t, int deriv) {
    double v = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const double n = static_cast<double>(k + 1);
      const double x = n * t + theta[k];
      switch (deriv) {
        case 0: v += a[k] * std::sin(x); break;
        case 1: v += n * a[k] * std::cos(x); break;
        default: v -= n * n * a[k] * std::sin(x); break;
      }
    }
    return v;
  };
  return {[sum](double t) { return t + sum(t, 0); }, [sum](double t) { return 1.0 + sum(t, 1); },
          [sum](double t) { return sum(t, 2); }};
}

CircleDiffeo compose(const CircleDiffeo& phi, const CircleDiffeo& psi) {
  return {[phi, psi](double t) { return phi.f(psi.f(t)); },
          [phi, psi](double t) { return phi.d1(psi.f(t)) * psi.d1(t); },
          [phi, psi](double t) {
            const double d = psi.d1(t);
            return phi.d2(psi.f(t)) * d * d + phi.d1(psi.f(t)) * psi.d2(t);
          }};
}

void validate_diffeo(const CircleDiffeo& phi, int samples) {
  double min_slope = std::numeric_limits<double>::infinity();
  double equivariance = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * kPi * k / samples;
    min_slope = std::min(min_slope, phi.d1(t));
    if (k % 64 == 0) equivariance = std::max(equivariance, std::abs(phi.f(t + 2.0 * kPi) - phi.f(t) - 2.0 * kPi));
  }
  if (!(min_slope > 1e-6)) throw Error(ErrorKind::NonMonotone, "minimum slope " + std::to_string(min_slope));
  if (!(equivariance <= 1e-9)) {
    throw Error(ErrorKind::NonMonotone, "lift is not equivariant under t -> t + 2pi");
  }
}

double bott_cocycle(const CircleDiffeo& phi, const CircleDiffeo& psi, int samples) {
  validate_diffeo(phi, samples);
  validate_diffeo(psi, samples);
  const double w = 2.0 * kPi / samples;
  double sum = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = k * w;
    const double d = psi.d1(t);
    sum += std::log(phi.d1(psi.f(t)) * d) * psi.d2(t) / d;
  }
  return 0.5 * sum * w;
}

double bott_identity_residual(const CircleDiffeo& phi, const CircleDiffeo& psi, const CircleDiffeo& chi,
                              int samples) {
  return bott_cocycle(phi, psi, samples) + bott_cocycle(compose(phi, psi), chi, samples) -
         bott_cocycle(psi, chi, samples) - bott_cocycle(phi, compose(psi, chi), samples);
}

// ---- loop algebras ----------------------------------------------------------

LoopModel make_loop(LoopType type, int order, double n_max, double prefactor, double kappa_coefficient,
                    int quadrature_points) {
  if (order != 1 && order != 2) throw Error(ErrorKind::InvalidArgument, "twist order must be 1 or 2");
  if (order == 2 && type != LoopType::SU3) {
    throw Error(ErrorKind::InvalidArgument, "the order-2 twist is only bundled for su(3)");
  }
  if (!(n_max >= 0.0)) throw Error(ErrorKind::InvalidArgument, "negative Fourier cutoff");
  LoopModel m;
  m.type = type;
  m.order = order;
  m.n_max = n_max;
  m.prefactor = prefactor;
  m.kappa_coefficient = kappa_coefficient;
  m.quadrature_points = quadrature_points;
  m.k_basis = type == LoopType::SU2 ? su2_basis() : su3_basis();
  const int kd = static_cast<int>(m.k_basis.size());
  m.sigma_sign.assign(static_cast<std::size_t>(kd), 1);
  if (order == 2) {
    // complex conjugation fixes e2, e5, e7 and negates the rest
    for (int a = 0; a < kd; ++a) m.sigma_sign[static_cast<std::size_t>(a)] = (a == 1 || a == 4 || a == 6) ? 1 : -1;
  }
  const AlgebraPtr k = type == LoopType::SU2 ? su2_algebra() : su3_algebra();

  // modes are m = key/order; σ-sign −1 needs odd keys when order = 2
  const int kmax = static_cast<int>(std::floor(n_max * order + 1e-9));
  std::vector<std::string> names;
  Truncation tr;
  tr.cutoff = n_max;
  std::map<std::pair<int, int>, int> index;
  for (int key = -kmax; key <= kmax; ++key)
    for (int a = 0; a < kd; ++a) {
      const bool odd = (key % order) != 0;
      if (odd != (m.sigma_sign[static_cast<std::size_t>(a)] == -1)) continue;
      const double mode = static_cast<double>(key) / order;
      index[{a, key}] = static_cast<int>(names.size());
      char buf[64];
      std::snprintf(buf, sizeof(buf), "e%d@%g", a + 1, mode);
      names.emplace_back(buf);
      tr.modes.push_back(mode);
      m.element.push_back(a);
      m.mode.push_back(mode);
    }
  std::vector<StructureConstant> constants;
  for (const auto& [ka, i] : index)
    for (const auto& [kb, j] : index) {
      if (i >= j) continue;
      const int key = ka.second + kb.second;
      if (std::abs(key) > kmax) continue;
      const Vec br = k->bracket_basis(ka.first, kb.first);
      for (int c = 0; c < kd; ++c) {
        if (br(c) == 0.0) continue;
        const auto it = index.find({c, key});
        if (it == index.end()) throw Error(ErrorKind::InvalidArgument, "twist is not an automorphism");
        constants.push_back({i, j, it->second, br(c)});
      }
    }
  m.algebra = std::make_shared<LieAlgebra>(std::move(names), Field::Real, constants, tr);
  return m;
}

double loop_period(const LoopModel& m) { return static_cast<double>(m.order); }

cplx kappa(const LoopModel& m, const Mat& x, const Mat& y) { return -m.kappa_coefficient * (x * y).trace(); }

double kappa_invariance_residual(const LoopModel& m) {
  double worst = 0.0;
  for (const auto& x : m.k_basis)
    for (const auto& y : m.k_basis)
      for (const auto& z : m.k_basis)
        worst = std::max(worst, std::abs(kappa(m, x * y - y * x, z) + kappa(m, y, x * z - z * x)));
  return worst;
}

Mat loop_derivation(const LoopModel& m) {
  const Index n = m.algebra->dim();
  Mat d = Mat::Zero(n, n);
  for (Index i = 0; i < n; ++i) d(i, i) = 2.0 * kPi * kI * m.mode[static_cast<std::size_t>(i)];
  return d;
}

Mat loop_value(const LoopModel& m, const Vec& coeffs, double t, int derivative) {
  if (coeffs.size() != m.algebra->dim()) throw Error(ErrorKind::DimensionMismatch, "loop coefficient size");
  const Index kd = m.k_basis.front().rows();
  Mat v = Mat::Zero(kd, kd);
  for (Index i = 0; i < coeffs.size(); ++i) {
    if (coeffs(i) == 0.0) continue;
    const double mode = m.mode[static_cast<std::size_t>(i)];
    const cplx phase = std::pow(2.0 * kPi * kI * mode, derivative) * std::exp(2.0 * kPi * kI * mode * t);
    v += coeffs(i) * phase * m.k_basis[static_cast<std::size_t>(m.element[static_cast<std::size_t>(i)])];
  }
  return v;
}

double twist_residual(const LoopModel& m, const Vec& coeffs) {
  double worst = 0.0;
  for (double t : {0.0, 0.137, 0.5, 0.731}) {
    const Mat now = loop_value(m, coeffs, t);
    Mat twisted = Mat::Zero(now.rows(), now.cols());
    for (std::size_t a = 0; a < m.k_basis.size(); ++a) {
      const Mat& e = m.k_basis[a];
      const cplx c = (e.adjoint() * now).trace() / (e.adjoint() * e).trace();
      twisted += static_cast<double>(m.sigma_sign[a]) * c * e;  // σ is an involution
    }
    worst = std::max(worst, (loop_value(m, coeffs, t + 1.0) - twisted).norm());
  }
  return worst;
}

cplx km_cocycle(const LoopModel& m, const Vec& xi, const Vec& eta) {
  const int q = m.quadrature_points;
  const double period = loop_period(m);
  const double w = period / q;
  cplx sum = 0.0;
  for (int k = 0; k < q; ++k) {
    const double t = k * w;
    sum += kappa(m, loop_value(m, xi, t), loop_value(m, eta, t, 1));
  }
  return m.prefactor * sum * w;
}

Cochain km_cochain(const LoopModel& m) {
  const Index n = m.algebra->dim();
  const int q = m.quadrature_points;
  const double period = loop_period(m);
  const double w = period / q;
  Cochain c(m.algebra, 2);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const auto& ei = m.k_basis[static_cast<std::size_t>(m.element[static_cast<std::size_t>(i)])];
      const auto& ej = m.k_basis[static_cast<std::size_t>(m.element[static_cast<std::size_t>(j)])];
      const cplx kij = kappa(m, ei, ej);
      if (std::abs(kij) < 1e-15) continue;
      const double mi = m.mode[static_cast<std::size_t>(i)];
      const double mj = m.mode[static_cast<std::size_t>(j)];
      cplx sum = 0.0;
      for (int k = 0; k < q; ++k) sum += std::exp(2.0 * kPi * kI * (mi + mj) * (k * w));
      c.set(static_cast<int>(i), static_cast<int>(j), m.prefactor * kij * 2.0 * kPi * kI * mj * sum * w);
    }
  return c;
}

cplx km_closed_form(const LoopModel& m, int a, int b, double mode) {
  const auto& x = m.k_basis[static_cast<std::size_t>(a)];
  const auto& y = m.k_basis[static_cast<std::size_t>(b)];
  return m.prefactor * (-2.0 * kPi * kI * mode * loop_period(m)) * kappa(m, x, y);
}

}  // namespace projrep
