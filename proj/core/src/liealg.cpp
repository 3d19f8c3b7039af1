#include "projrep/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "projrep/errors.hpp"

namespace projrep {

namespace {

constexpr double kModeEps = 1e-9;

void require_dim(const Vec& x, Index n) {
  if (x.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector of size " + std::to_string(x.size()) + " for algebra of dim " +
                    std::to_string(n));
  }
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> names, Field field,
                       const std::vector<StructureConstant>& constants,
                       std::optional<Truncation> truncation, double jacobi_tol, bool validate)
    : names_(std::move(names)),
      field_(field),
      truncation_(std::move(truncation)),
      jacobi_tol_(jacobi_tol) {
  const Index n = dim();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty basis");
  if (truncation_ && static_cast<Index>(truncation_->modes.size()) != n) {
    throw Error(ErrorKind::DimensionMismatch, "mode labels do not match basis size");
  }
  ad_.assign(static_cast<std::size_t>(n), Mat::Zero(n, n));
  for (const auto& sc : constants) {
    if (sc.i < 0 || sc.j < 0 || sc.k < 0 || sc.i >= n || sc.j >= n || sc.k >= n) {
      throw Error(ErrorKind::InvalidArgument, "structure constant index out of range");
    }
    if (sc.i == sc.j) {
      if (sc.value != 0.0) {
        throw Error(ErrorKind::InvalidArgument,
                    "[e_i, e_i] must vanish (i = " + std::to_string(sc.i) + ")");
      }
      continue;
    }
    if (field_ == Field::Real && sc.value.imag() != 0.0) {
      throw Error(ErrorKind::InvalidArgument, "complex structure constant on a real algebra");
    }
    const int a = std::min(sc.i, sc.j);
    const int b = std::max(sc.i, sc.j);
    const cplx v = sc.i < sc.j ? sc.value : -sc.value;
    ad_[static_cast<std::size_t>(a)](sc.k, b) = v;
    ad_[static_cast<std::size_t>(b)](sc.k, a) = -v;
  }
  if (validate) {
    const double r = jacobi_residual();
    if (!(r <= jacobi_tol_)) {
      const auto t = worst_jacobi_triple(true);
      std::ostringstream os;
      os << "Jacobi residual " << r << " exceeds " << jacobi_tol_ << " at triple (" << names_[t[0]]
         << ", " << names_[t[1]] << ", " << names_[t[2]] << ") = indices (" << t[0] << ", " << t[1]
         << ", " << t[2] << ")";
      throw Error(ErrorKind::JacobiViolation, os.str());
    }
  }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  require_dim(x, dim());
  require_dim(y, dim());
  return adjoint(x) * y;
}

Mat LieAlgebra::adjoint(const Vec& x) const {
  require_dim(x, dim());
  Mat m = Mat::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i) {
    if (x(i) != 0.0) m += x(i) * ad_[static_cast<std::size_t>(i)];
  }
  return m;
}

bool LieAlgebra::pair_in_range(int i, int j) const {
  if (!truncation_) return true;
  const auto& m = truncation_->modes;
  return std::abs(m[i] + m[j]) <= truncation_->cutoff + kModeEps;
}

bool LieAlgebra::triple_in_range(int i, int j, int k) const {
  if (!truncation_) return true;
  const auto& m = truncation_->modes;
  return pair_in_range(i, j) && pair_in_range(i, k) && pair_in_range(j, k) &&
         std::abs(m[i] + m[j] + m[k]) <= truncation_->cutoff + kModeEps;
}

double LieAlgebra::jacobi_at(int i, int j, int k) const {
  // [x, e_k] = −ad_k x
  const Vec j3 = -(ad_basis(k) * bracket_basis(i, j)) - ad_basis(i) * bracket_basis(j, k) -
                 ad_basis(j) * bracket_basis(k, i);
  return j3.norm();
}

double LieAlgebra::jacobi_residual() const {
  const auto t = worst_jacobi_triple(true);
  return t[0] < 0 ? 0.0 : jacobi_at(t[0], t[1], t[2]);
}

double LieAlgebra::jacobi_residual_all() const {
  const auto t = worst_jacobi_triple(false);
  return t[0] < 0 ? 0.0 : jacobi_at(t[0], t[1], t[2]);
}

std::array<int, 3> LieAlgebra::worst_jacobi_triple(bool in_range_only) const {
  std::array<int, 3> best{-1, -1, -1};
  double worst = -1.0;
  const int n = static_cast<int>(dim());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (in_range_only && !triple_in_range(i, j, k)) continue;
        const double r = jacobi_at(i, j, k);
        if (r > worst) {
          worst = r;
          best = {i, j, k};
        }
      }
  return best;
}

std::vector<StructureConstant> LieAlgebra::sparse_constants() const {
  std::vector<StructureConstant> out;
  const int n = static_cast<int>(dim());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const cplx v = constant(i, j, k);
        if (v != 0.0) out.push_back({i, j, k, v});
      }
  return out;
}

bool LieAlgebra::real_structure() const {
  for (const auto& m : ad_)
    if (m.imag().cwiseAbs().maxCoeff() != 0.0) return false;
  return true;
}

Vec bracket(const LieAlgebra& alg, const Vec& x, const Vec& y) { return alg.bracket(x, y); }

Mat adjoint_action(const LieAlgebra& alg, const Vec& x) { return alg.adjoint(x); }

double leibniz_residual(const LieAlgebra& alg, const Mat& d) {
  const Index n = alg.dim();
  if (d.rows() != n || d.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "derivation shape does not match algebra");
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const Mat defect = d * alg.ad_basis(i) - alg.adjoint(d.col(i)) - alg.ad_basis(i) * d;
    for (int j = 0; j < n; ++j) {
      if (!alg.pair_in_range(i, j)) continue;
      worst = std::max(worst, defect.col(j).norm());
    }
  }
  return worst;
}

AlgebraPtr semidirect_with_derivation(const LieAlgebra& alg, const Mat& d, const std::string& name) {
  const double lr = leibniz_residual(alg, d);
  if (!(lr <= 1e-9)) {
    throw Error(ErrorKind::LeibnizViolation, "Leibniz residual " + std::to_string(lr));
  }
  const int n = static_cast<int>(alg.dim());
  auto names = alg.names();
  names.push_back(name);
  auto constants = alg.sparse_constants();
  bool complex_entries = false;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const cplx v = d(k, j);
      if (v == 0.0) continue;
      if (v.imag() != 0.0) complex_entries = true;
      constants.push_back({n, j, k, v});  // [d, e_j] = D e_j
    }
  std::optional<Truncation> trunc = alg.truncation();
  if (trunc) trunc->modes.push_back(0.0);
  const Field f = (alg.field() == Field::Complex || complex_entries) ? Field::Complex : Field::Real;
  return std::make_shared<LieAlgebra>(std::move(names), f, constants, std::move(trunc),
                                      alg.jacobi_tol());
}

AlgebraPtr remove_basis_element(const LieAlgebra& alg, int index) {
  const int n = static_cast<int>(alg.dim());
  if (index < 0 || index >= n) throw Error(ErrorKind::InvalidArgument, "index out of range");
  auto remap = [index](int i) { return i < index ? i : i - 1; };
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    if (i != index) names.push_back(alg.names()[i]);
  std::vector<StructureConstant> constants;
  for (const auto& sc : alg.sparse_constants()) {
    if (sc.i == index || sc.j == index || sc.k == index) continue;
    constants.push_back({remap(sc.i), remap(sc.j), remap(sc.k), sc.value});
  }
  std::optional<Truncation> trunc = alg.truncation();
  if (trunc) trunc->modes.erase(trunc->modes.begin() + index);
  return std::make_shared<LieAlgebra>(std::move(names), alg.field(), constants, std::move(trunc),
                                      alg.jacobi_tol(), false);
}

int GradedDecomposition::block_dim(int k) const {
  auto it = eigenspaces.find(k);
  return it == eigenspaces.end() ? 0 : static_cast<int>(it->second.cols());
}

GradedDecomposition check_admissible_periodic(const LieAlgebra& alg, const Mat& d, double period,
                                              double tol) {
  const Index n = alg.dim();
  if (d.rows() != n || d.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "derivation shape does not match algebra");
  }
  if (!(period > 0.0)) throw Error(ErrorKind::InvalidArgument, "period must be positive");
  const double lr = leibniz_residual(alg, d);
  if (!(lr <= 1e-9)) throw Error(ErrorKind::LeibnizViolation, "Leibniz residual " + std::to_string(lr));

  GradedDecomposition g;
  g.period = period;
  const double unit = 2.0 * kPi / period;

  Eigen::ComplexEigenSolver<Mat> es(d, false);
  std::vector<int> ks;
  for (Index i = 0; i < n; ++i) {
    const cplx lam = es.eigenvalues()(i);
    const cplx x = lam / (kI * unit);
    const double k = std::round(x.real());
    if (std::abs(x - cplx(k, 0.0)) > tol) {
      std::ostringstream os;
      os << "eigenvalue " << lam.real() << (lam.imag() < 0 ? " - " : " + ") << std::abs(lam.imag())
         << "i is not in (2πi/" << period << ")·Z; eigenvalue/(2πi/period) = " << x.real()
         << (x.imag() < 0 ? " - " : " + ") << std::abs(x.imag()) << "i";
      throw Error(ErrorKind::NonPeriodicDerivation, os.str());
    }
    ks.push_back(static_cast<int>(k));
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  Mat v(n, 0);
  std::vector<std::pair<int, Index>> owner;  // (k, number of columns)
  for (int k : ks) {
    const Mat shifted = d - cplx(0.0, unit * k) * Mat::Identity(n, n);
    const Mat ev = null_space(shifted, 1e-10);
    g.eigenspaces[k] = ev;
    Mat grown(n, v.cols() + ev.cols());
    grown << v, ev;
    v = grown;
    owner.emplace_back(k, ev.cols());
  }
  if (v.cols() != n || numerical_rank(v, 1e-10) != n) {
    throw Error(ErrorKind::NonPeriodicDerivation,
                "derivation is not diagonalizable: eigenvectors span " +
                    std::to_string(numerical_rank(v, 1e-10)) + " of " + std::to_string(n) +
                    " dimensions");
  }
  const Mat vinv = v.inverse();
  g.ker_projector = Mat::Zero(n, n);
  g.im_projector = Mat::Zero(n, n);
  g.inverse_on_image = Mat::Zero(n, n);
  Index col = 0;
  for (const auto& [k, cnt] : owner) {
    const Mat pk = v.middleCols(col, cnt) * vinv.middleRows(col, cnt);
    if (k == 0) {
      g.ker_projector += pk;
    } else {
      g.im_projector += pk;
      g.inverse_on_image += pk / cplx(0.0, unit * k);
    }
    col += cnt;
  }

  double off = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != j) off = std::max(off, std::abs(d(i, j)));
  if (off == 0.0) {
    for (Index i = 0; i < n; ++i) {
      const int k = static_cast<int>(std::round((d(i, i) / (kI * unit)).real()));
      g.index_blocks[k].push_back(static_cast<int>(i));
    }
  }
  return g;
}

double small_divisor_inverse_norm(double tau, int n_max) {
  double smallest = std::numeric_limits<double>::infinity();
  for (int a = -n_max; a <= n_max; ++a)
    for (int b = -n_max; b <= n_max; ++b) {
      if (a == 0 && b == 0) continue;
      const double lam = 2.0 * kPi * std::abs(a + tau * b);
      if (lam > 0.0) smallest = std::min(smallest, lam);
    }
  return 1.0 / smallest;
}

}  // namespace projrep
