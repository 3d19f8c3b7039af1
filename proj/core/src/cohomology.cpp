#include "projrep/cohomology.hpp"

#include <algorithm>
#include <cmath>

#include "projrep/errors.hpp"

namespace projrep {

namespace {

// Pair coordinate index for every (i, j); -1 when the pair is out of range.
std::vector<int> pair_table(const LieAlgebra& alg, const std::vector<std::array<int, 2>>& pairs) {
  const int n = static_cast<int>(alg.dim());
  std::vector<int> t(static_cast<std::size_t>(n * n), -1);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    t[static_cast<std::size_t>(pairs[p][0] * n + pairs[p][1])] = static_cast<int>(p);
    t[static_cast<std::size_t>(pairs[p][1] * n + pairs[p][0])] = static_cast<int>(p);
  }
  return t;
}

}  // namespace

Cochain::Cochain(AlgebraPtr alg, int degree) : alg_(std::move(alg)), degree_(degree) {
  if (!alg_) throw Error(ErrorKind::InvalidArgument, "cochain needs an algebra");
  if (degree < 1 || degree > 3) {
    throw Error(ErrorKind::UnsupportedDegree, "degree " + std::to_string(degree));
  }
  n_ = alg_->dim();
  std::size_t size = 1;
  for (int d = 0; d < degree; ++d) size *= static_cast<std::size_t>(n_);
  c_.assign(size, cplx(0.0, 0.0));
}

std::size_t Cochain::idx(int i, int j, int k) const {
  const auto n = static_cast<std::size_t>(n_);
  if (degree_ == 1) return static_cast<std::size_t>(i);
  if (degree_ == 2) return static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j);
  return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
         static_cast<std::size_t>(k);
}

cplx Cochain::at(int i) const { return c_[idx(i)]; }
cplx Cochain::at(int i, int j) const { return c_[idx(i, j)]; }
cplx Cochain::at(int i, int j, int k) const { return c_[idx(i, j, k)]; }

void Cochain::set(int i, cplx v) {
  if (degree_ != 1) throw Error(ErrorKind::UnsupportedDegree, "set(i) on degree " + std::to_string(degree_));
  c_[idx(i)] = v;
}

void Cochain::set(int i, int j, cplx v) {
  if (degree_ != 2) throw Error(ErrorKind::UnsupportedDegree, "set(i,j) on degree " + std::to_string(degree_));
  if (i == j) return;
  c_[idx(i, j)] = v;
  c_[idx(j, i)] = -v;
}

void Cochain::set(int i, int j, int k, cplx v) {
  if (degree_ != 3) throw Error(ErrorKind::UnsupportedDegree, "set(i,j,k) on degree " + std::to_string(degree_));
  if (i == j || j == k || i == k) return;
  c_[idx(i, j, k)] = v;
  c_[idx(j, k, i)] = v;
  c_[idx(k, i, j)] = v;
  c_[idx(j, i, k)] = -v;
  c_[idx(i, k, j)] = -v;
  c_[idx(k, j, i)] = -v;
}

cplx Cochain::evaluate(const Vec& x) const {
  if (degree_ != 1) throw Error(ErrorKind::UnsupportedDegree, "evaluate(x) needs degree 1");
  if (x.size() != n_) throw Error(ErrorKind::DimensionMismatch, "argument size");
  return (vector().transpose() * x)(0);
}

cplx Cochain::evaluate(const Vec& x, const Vec& y) const {
  if (degree_ != 2) throw Error(ErrorKind::UnsupportedDegree, "evaluate(x,y) needs degree 2");
  if (x.size() != n_ || y.size() != n_) throw Error(ErrorKind::DimensionMismatch, "argument size");
  return (x.transpose() * matrix() * y)(0);
}

Vec Cochain::vector() const {
  if (degree_ != 1) throw Error(ErrorKind::UnsupportedDegree, "vector() needs degree 1");
  return Eigen::Map<const Vec>(c_.data(), n_);
}

Mat Cochain::matrix() const {
  if (degree_ != 2) throw Error(ErrorKind::UnsupportedDegree, "matrix() needs degree 2");
  Mat w(n_, n_);
  for (Index i = 0; i < n_; ++i)
    for (Index j = 0; j < n_; ++j) w(i, j) = c_[idx(static_cast<int>(i), static_cast<int>(j))];
  return w;
}

Cochain Cochain::from_vector(AlgebraPtr alg, const Vec& v) {
  Cochain c(std::move(alg), 1);
  if (v.size() != c.n_) throw Error(ErrorKind::DimensionMismatch, "vector size");
  for (Index i = 0; i < v.size(); ++i) c.c_[static_cast<std::size_t>(i)] = v(i);
  return c;
}

Cochain Cochain::from_matrix(AlgebraPtr alg, const Mat& w) {
  Cochain c(std::move(alg), 2);
  if (w.rows() != c.n_ || w.cols() != c.n_) throw Error(ErrorKind::DimensionMismatch, "matrix shape");
  for (int i = 0; i < c.n_; ++i)
    for (int j = i + 1; j < c.n_; ++j) c.set(i, j, 0.5 * (w(i, j) - w(j, i)));
  return c;
}

double Cochain::max_abs() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (o.degree_ != degree_ || o.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "cochain shapes");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cochain& Cochain::operator*=(cplx s) {
  for (auto& v : c_) v *= s;
  return *this;
}

std::vector<std::array<int, 2>> cochain_pairs(const LieAlgebra& alg) {
  std::vector<std::array<int, 2>> out;
  const int n = static_cast<int>(alg.dim());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (alg.pair_in_range(i, j)) out.push_back({i, j});
  return out;
}

std::vector<std::array<int, 3>> cochain_triples(const LieAlgebra& alg) {
  std::vector<std::array<int, 3>> out;
  const int n = static_cast<int>(alg.dim());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (alg.triple_in_range(i, j, k)) out.push_back({i, j, k});
  return out;
}

Vec to_pair_coords(const Cochain& c) {
  if (c.degree() != 2) throw Error(ErrorKind::UnsupportedDegree, "pair coordinates need degree 2");
  const auto pairs = cochain_pairs(*c.algebra());
  Vec v(static_cast<Index>(pairs.size()));
  for (std::size_t p = 0; p < pairs.size(); ++p) v(static_cast<Index>(p)) = c.at(pairs[p][0], pairs[p][1]);
  return v;
}

Cochain from_pair_coords(AlgebraPtr alg, const Vec& coords) {
  const auto pairs = cochain_pairs(*alg);
  if (coords.size() != static_cast<Index>(pairs.size())) {
    throw Error(ErrorKind::DimensionMismatch, "pair coordinate count");
  }
  Cochain c(std::move(alg), 2);
  for (std::size_t p = 0; p < pairs.size(); ++p) c.set(pairs[p][0], pairs[p][1], coords(static_cast<Index>(p)));
  return c;
}

Cochain differential(const Cochain& c) {
  const LieAlgebra& alg = *c.algebra();
  const int n = static_cast<int>(alg.dim());
  if (c.degree() == 1) {
    Cochain out(c.algebra(), 2);
    const Vec beta = c.vector();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        // δβ(e_i, e_j) = −β([e_i, e_j])
        out.set(i, j, -(beta.transpose() * alg.bracket_basis(i, j))(0));
      }
    return out;
  }
  if (c.degree() == 2) {
    Cochain out(c.algebra(), 3);
    const Mat w = c.matrix();
    // r(i,j) = row vector k ↦ ω([e_i,e_j], e_k)
    std::vector<Eigen::RowVectorXcd> r(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) r[static_cast<std::size_t>(i * n + j)] = alg.bracket_basis(i, j).transpose() * w;
    auto R = [&](int i, int j, int k) { return r[static_cast<std::size_t>(i * n + j)](k); };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          if (!alg.triple_in_range(i, j, k)) continue;
          out.set(i, j, k, -R(i, j, k) + R(i, k, j) - R(j, k, i));
        }
    return out;
  }
  throw Error(ErrorKind::UnsupportedDegree, "differential of a degree-3 cochain is not supported");
}

Mat delta1_matrix(const LieAlgebra& alg) {
  const auto pairs = cochain_pairs(alg);
  const Index n = alg.dim();
  Mat m = Mat::Zero(static_cast<Index>(pairs.size()), n);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    m.row(static_cast<Index>(p)) = -alg.bracket_basis(pairs[p][0], pairs[p][1]).transpose();
  return m;
}

Mat delta2_matrix(const LieAlgebra& alg) {
  const auto pairs = cochain_pairs(alg);
  const auto triples = cochain_triples(alg);
  const auto table = pair_table(alg, pairs);
  const int n = static_cast<int>(alg.dim());
  Mat m = Mat::Zero(static_cast<Index>(triples.size()), static_cast<Index>(pairs.size()));
  // adds sign·ω([e_a,e_b], e_l) to row t
  auto add = [&](Index t, int a, int b, int l, double sign) {
    const Vec br = alg.bracket_basis(a, b);
    for (int p = 0; p < n; ++p) {
      const cplx bp = br(p);
      if (bp == 0.0 || p == l) continue;
      const int col = table[static_cast<std::size_t>(p * n + l)];
      if (col < 0) continue;
      m(t, col) += sign * bp * (p < l ? 1.0 : -1.0);
    }
  };
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto [i, j, k] = triples[t];
    const auto row = static_cast<Index>(t);
    add(row, i, j, k, -1.0);
    add(row, i, k, j, +1.0);
    add(row, j, k, i, -1.0);
  }
  return m;
}

Mat d_action_degree1(const LieAlgebra& alg, const Mat& d) {
  if (d.rows() != alg.dim() || d.cols() != alg.dim()) throw Error(ErrorKind::DimensionMismatch, "derivation shape");
  return d.transpose();
}

Mat d_action_degree2(const LieAlgebra& alg, const Mat& d) {
  if (d.rows() != alg.dim() || d.cols() != alg.dim()) throw Error(ErrorKind::DimensionMismatch, "derivation shape");
  const auto pairs = cochain_pairs(alg);
  const auto np = static_cast<Index>(pairs.size());
  const Index n = alg.dim();
  Mat m = Mat::Zero(np, np);
  for (Index col = 0; col < np; ++col) {
    Mat w = Mat::Zero(n, n);
    w(pairs[col][0], pairs[col][1]) = 1.0;
    w(pairs[col][1], pairs[col][0]) = -1.0;
    const Mat dw = d.transpose() * w + w * d;
    for (Index row = 0; row < np; ++row) m(row, col) = dw(pairs[row][0], pairs[row][1]);
  }
  return m;
}

SubcomplexH2 h2_subcomplex(const LieAlgebra& alg, const Mat& c1_basis, const Mat& c2_basis) {
  SubcomplexH2 out;
  const Mat d1 = delta1_matrix(alg);
  const Mat d2 = delta2_matrix(alg);
  out.coboundaries = range_basis(d1 * c1_basis);
  if (c2_basis.cols() == 0) {
    out.cocycles = Mat(d1.rows(), 0);
  } else if (d2.rows() == 0) {
    out.cocycles = range_basis(c2_basis);
  } else {
    out.cocycles = range_basis(c2_basis * null_space(d2 * c2_basis));
  }
  out.cocycle_dim = out.cocycles.cols();
  out.coboundary_dim = out.coboundaries.cols();
  out.dimension = out.cocycle_dim - out.coboundary_dim;
  out.representatives = complement_in(out.cocycles, out.coboundaries);
  out.closure_residual = (d2.rows() == 0 || out.coboundaries.cols() == 0)
                             ? 0.0
                             : max_abs(d2 * out.coboundaries);
  return out;
}

namespace {

H2Result package(const AlgebraPtr& alg, SubcomplexH2 sub) {
  H2Result r;
  r.dimension = sub.dimension;
  for (Index c = 0; c < sub.representatives.cols(); ++c)
    r.cocycle_basis.push_back(from_pair_coords(alg, sub.representatives.col(c)));
  r.coboundary_projector = sub.coboundaries * sub.coboundaries.adjoint();
  r.detail = std::move(sub);
  return r;
}

}  // namespace

H2Result h2(const AlgebraPtr& alg) {
  const Index n = alg->dim();
  const auto np = static_cast<Index>(cochain_pairs(*alg).size());
  return package(alg, h2_subcomplex(*alg, Mat::Identity(n, n), Mat::Identity(np, np)));
}

H2Result h2_invariant(const AlgebraPtr& alg, const Mat& d) {
  const Mat c1 = null_space(d_action_degree1(*alg, d));
  const Mat c2 = null_space(d_action_degree2(*alg, d));
  return package(alg, h2_subcomplex(*alg, c1, c2));
}

CentralExtensionAlgebra central_extension(const AlgebraPtr& alg, const Cochain& omega, bool validate) {
  if (omega.degree() != 2 || omega.dim() != alg->dim()) {
    throw Error(ErrorKind::DimensionMismatch, "omega must be a 2-cochain on the base algebra");
  }
  const double defect = differential(omega).max_abs();
  if (validate && !(defect <= 1e-9)) {
    throw Error(ErrorKind::NotACocycle, "‖δω‖ = " + std::to_string(defect));
  }
  const int n = static_cast<int>(alg->dim());
  std::vector<std::string> names{"c"};
  for (const auto& s : alg->names()) names.push_back(s);
  std::vector<StructureConstant> constants;
  for (const auto& sc : alg->sparse_constants()) constants.push_back({sc.i + 1, sc.j + 1, sc.k + 1, sc.value});
  bool complex_values = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const cplx w = omega.at(i, j);
      if (w == 0.0) continue;
      if (w.imag() != 0.0) complex_values = true;
      constants.push_back({i + 1, j + 1, 0, w});
    }
  std::optional<Truncation> trunc = alg->truncation();
  if (trunc) trunc->modes.insert(trunc->modes.begin(), 0.0);
  const Field f = (alg->field() == Field::Complex || complex_values) ? Field::Complex : Field::Real;
  auto total = std::make_shared<LieAlgebra>(std::move(names), f, constants, std::move(trunc),
                                            alg->jacobi_tol(), validate);
  return CentralExtensionAlgebra{alg, omega, std::move(total), 0};
}

Mat shear_map(const CentralExtensionAlgebra& ext, const Cochain& beta) {
  if (beta.degree() != 1 || beta.dim() != ext.base->dim()) {
    throw Error(ErrorKind::DimensionMismatch, "beta must be a 1-cochain on the base");
  }
  const Index n = ext.total->dim();
  Mat phi = Mat::Identity(n, n);
  for (Index k = 0; k < ext.base->dim(); ++k) phi(0, k + 1) = beta.at(static_cast<int>(k));
  return phi;
}

double homomorphism_residual(const Mat& phi, const LieAlgebra& from, const LieAlgebra& to) {
  if (phi.cols() != from.dim() || phi.rows() != to.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "map shape");
  }
  double worst = 0.0;
  const int n = static_cast<int>(from.dim());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!from.pair_in_range(a, b)) continue;
      const Vec lhs = phi * from.bracket_basis(a, b);
      const Vec rhs = to.bracket(phi.col(a), phi.col(b));
      worst = std::max(worst, (lhs - rhs).norm());
    }
  return worst;
}

Vec extend_to_semidirect(const LieAlgebra& alg, const LieAlgebra& semidirect, const Vec& coords) {
  const auto pairs = cochain_pairs(alg);
  const auto spairs = cochain_pairs(semidirect);
  const auto table = pair_table(semidirect, spairs);
  const int sn = static_cast<int>(semidirect.dim());
  Vec out = Vec::Zero(static_cast<Index>(spairs.size()));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const int col = table[static_cast<std::size_t>(pairs[p][0] * sn + pairs[p][1])];
    if (col >= 0) out(col) = coords(static_cast<Index>(p));
  }
  return out;
}

namespace {

// γ(ω̃)(x) = ω̃(d, x) evaluated on the columns of `kernel`.
Vec gamma_values(const LieAlgebra& semidirect, const Vec& coords, const Mat& kernel) {
  const auto spairs = cochain_pairs(semidirect);
  const int d = static_cast<int>(semidirect.dim()) - 1;
  Vec row = Vec::Zero(d);  // row(j) = ω̃(d, e_j)
  for (std::size_t p = 0; p < spairs.size(); ++p) {
    if (spairs[p][1] == d) row(spairs[p][0]) = -coords(static_cast<Index>(p));
  }
  return kernel.transpose() * row;
}

Mat project_off(const Mat& q, const Mat& x) {
  if (q.cols() == 0) return x;
  return x - q * (q.adjoint() * x);
}

}  // namespace

ExactSequenceReport exact_sequence_report(const AlgebraPtr& alg, const Mat& d, double period) {
  const GradedDecomposition grading = check_admissible_periodic(*alg, d, period);
  ExactSequenceReport rep;
  const LieAlgebra& g = *alg;
  const Index n = g.dim();
  rep.semidirect = semidirect_with_derivation(g, d);
  const LieAlgebra& s = *rep.semidirect;

  const Mat c1 = null_space(d_action_degree1(g, d));
  const Mat a2 = d_action_degree2(g, d);
  const Mat c2 = null_space(a2);
  rep.invariant = h2_subcomplex(g, c1, c2);
  rep.dim_h2_invariant = rep.invariant.dimension;

  const auto snp = static_cast<Index>(cochain_pairs(s).size());
  rep.semidirect_h2 = h2_subcomplex(s, Mat::Identity(s.dim(), s.dim()), Mat::Identity(snp, snp));
  rep.dim_h2_semidirect = rep.semidirect_h2.dimension;

  // ((Dg ∩ [g,g]) / D[g,g])', realised as the orthogonal complement of D[g,g]
  // inside Dg ∩ [g,g]; u ↦ the functional x ↦ <u, x>.
  Mat brackets(n, n * n);
  for (int i = 0; i < n; ++i) brackets.middleCols(i * n, n) = g.ad_basis(i);
  const Mat comm = range_basis(brackets);
  const Mat image = range_basis(d);
  const Mat a = intersect_spans(image, comm);
  const Mat b = comm.cols() == 0 ? Mat(n, 0) : range_basis(d * comm);
  const Mat first = complement_in(a, b);
  rep.dim_first = first.cols();

  const Mat d1 = delta1_matrix(g);
  Mat alpha_images(d1.rows(), first.cols());
  for (Index c = 0; c < first.cols(); ++c) alpha_images.col(c) = d1 * first.col(c).conjugate();
  rep.alpha_invariance_residual = alpha_images.cols() == 0 ? 0.0 : max_abs(a2 * alpha_images);
  rep.rank_alpha = alpha_images.cols() == 0
                       ? 0
                       : numerical_rank(project_off(rep.invariant.coboundaries, alpha_images));

  // β: extend representatives of H²_D by zero on d.
  const Mat& reps = rep.invariant.representatives;
  Mat beta_images(snp, reps.cols());
  for (Index c = 0; c < reps.cols(); ++c) beta_images.col(c) = extend_to_semidirect(g, s, reps.col(c));
  const Mat d2s = delta2_matrix(s);
  rep.beta_cocycle_residual =
      (beta_images.cols() == 0 || d2s.rows() == 0) ? 0.0 : max_abs(d2s * beta_images);
  rep.rank_beta =
      beta_images.cols() == 0 ? 0 : numerical_rank(project_off(rep.semidirect_h2.coboundaries, beta_images));

  // β∘α: classes of the extended α images in H²(g ⋊_D R).
  for (Index c = 0; c < alpha_images.cols(); ++c) {
    const Vec ext = extend_to_semidirect(g, s, alpha_images.col(c));
    rep.beta_alpha_residual =
        std::max(rep.beta_alpha_residual, project_off(rep.semidirect_h2.coboundaries, ext).norm());
  }

  // γ: H²(g ⋊_D R) → H¹(ker D), ω̃ ↦ ω̃(d, ·) on ker D.
  const Mat kernel = range_basis(grading.ker_projector);
  const Index kdim = kernel.cols();
  Mat kbr(n, std::max<Index>(kdim * kdim, 1));
  kbr.setZero();
  for (Index i = 0; i < kdim; ++i)
    for (Index j = 0; j < kdim; ++j) kbr.col(i * kdim + j) = g.bracket(kernel.col(i), kernel.col(j));
  const Mat kcomm = range_basis(kbr);
  rep.dim_h1_kernel = kdim - kcomm.cols();
  const Mat& sreps = rep.semidirect_h2.representatives;
  Mat gamma_images(kdim, sreps.cols());
  for (Index c = 0; c < sreps.cols(); ++c) gamma_images.col(c) = gamma_values(s, sreps.col(c), kernel);
  rep.rank_gamma = (gamma_images.size() == 0) ? 0 : numerical_rank(gamma_images);
  // A functional in H¹(ker D) vanishes on [ker D, ker D].
  if (kcomm.cols() > 0 && gamma_images.cols() > 0) {
    const Mat coords_in_kernel = kernel.adjoint() * kcomm;  // [k,k] inside ker D coordinates
    rep.gamma_target_residual = max_abs(coords_in_kernel.transpose() * gamma_images);
  }
  for (Index c = 0; c < beta_images.cols(); ++c) {
    rep.gamma_beta_residual =
        std::max(rep.gamma_beta_residual, gamma_values(s, beta_images.col(c), kernel).norm());
  }

  rep.dim_h2_invariant_from_sequence = rep.rank_alpha + rep.dim_h2_semidirect - rep.rank_gamma;
  rep.exact_at_h2_invariant = (rep.dim_h2_invariant - rep.rank_beta) == rep.rank_alpha;
  rep.exact_at_h2_semidirect = rep.rank_beta == rep.dim_h2_semidirect - rep.rank_gamma;
  return rep;
}

double semidirect_class_norm(const ExactSequenceReport& rep, const Cochain& omega) {
  const LieAlgebra& g = *omega.algebra();
  const Vec ext = extend_to_semidirect(g, *rep.semidirect, to_pair_coords(omega));
  return project_off(rep.semidirect_h2.coboundaries, ext).norm();
}

double d_invariance_defect(const Cochain& omega, const Mat& d) {
  if (omega.degree() != 2) throw Error(ErrorKind::UnsupportedDegree, "defect needs a 2-cochain");
  const LieAlgebra& alg = *omega.algebra();
  if (d.rows() != alg.dim() || d.cols() != alg.dim()) throw Error(ErrorKind::DimensionMismatch, "derivation shape");
  const Mat w = omega.matrix();
  const Mat dw = d.transpose() * w + w * d;
  double worst = 0.0;
  const int n = static_cast<int>(alg.dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (alg.pair_in_range(i, j)) worst = std::max(worst, std::abs(dw(i, j)));
  return worst;
}

}  // namespace projrep
