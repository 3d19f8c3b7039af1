#include "projrep/representation.hpp"

#include <algorithm>
#include <sstream>

#include "projrep/errors.hpp"

namespace projrep {

Representation::Representation(AlgebraPtr alg, std::vector<Mat> matrices,
                               std::optional<CentralData> central, Index exact_dim, double skew_tol,
                               double rep_tol)
    : alg_(std::move(alg)), mats_(std::move(matrices)), central_(central) {
  if (!alg_) throw Error(ErrorKind::InvalidArgument, "representation needs an algebra");
  if (static_cast<Index>(mats_.size()) != alg_->dim()) {
    throw Error(ErrorKind::DimensionMismatch, "one matrix per basis element required");
  }
  dim_ = mats_.front().rows();
  for (const auto& m : mats_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }
  exact_dim_ = exact_dim < 0 ? dim_ : std::min(exact_dim, dim_);
  if (central_ && (central_->index < 0 || central_->index >= alg_->dim())) {
    throw Error(ErrorKind::InvalidArgument, "central index out of range");
  }
  const double sk = skew_residual();
  if (!(sk <= skew_tol)) {
    throw Error(ErrorKind::InvalidArgument, "skew-Hermitian residual " + std::to_string(sk));
  }
  const double hr = homomorphism_residual();
  if (!(hr <= rep_tol)) {
    throw Error(ErrorKind::InvalidArgument, "homomorphism residual " + std::to_string(hr));
  }
  if (central_) {
    const double cr = central_residual();
    if (!(cr <= 1e-10)) {
      std::ostringstream os;
      os << "pi(c) differs from 2*pi*i*level*I by " << cr;
      throw Error(ErrorKind::InvalidArgument, os.str());
    }
  }
}

Mat Representation::operator()(const Vec& x) const {
  if (x.size() != alg_->dim()) throw Error(ErrorKind::DimensionMismatch, "algebra vector size");
  Mat m = Mat::Zero(dim_, dim_);
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) != 0.0) m += x(i) * mats_[static_cast<std::size_t>(i)];
  return m;
}

Vec Representation::apply(const Vec& x, const Vec& psi) const {
  if (x.size() != alg_->dim()) throw Error(ErrorKind::DimensionMismatch, "algebra vector size");
  if (psi.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "state size");
  Vec out = Vec::Zero(dim_);
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) != 0.0) out.noalias() += x(i) * (mats_[static_cast<std::size_t>(i)] * psi);
  return out;
}

double Representation::skew_residual() const {
  double worst = 0.0;
  for (const auto& m : mats_) worst = std::max(worst, (m + m.adjoint()).norm());
  return worst;
}

double Representation::homomorphism_residual() const {
  double worst = 0.0;
  const int n = static_cast<int>(alg_->dim());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!alg_->pair_in_range(i, j)) continue;
      const Mat lhs = (*this)(alg_->bracket_basis(i, j));
      const Mat& a = mats_[static_cast<std::size_t>(i)];
      const Mat& b = mats_[static_cast<std::size_t>(j)];
      const Mat rhs = a * b - b * a;
      worst = std::max(worst, (lhs - rhs).leftCols(exact_dim_).norm());
    }
  return worst;
}

double Representation::central_residual() const {
  if (!central_) return 0.0;
  const Mat target = cplx(0.0, 2.0 * kPi * central_->level) * Mat::Identity(dim_, dim_);
  return (mats_[static_cast<std::size_t>(central_->index)] - target).norm();
}

}  // namespace projrep
