#include "projrep/linalg.hpp"

#include <algorithm>

#include <unsupported/Eigen/MatrixFunctions>

namespace projrep {

namespace {

// Singular values at roundoff level never count, whatever the relative cut.
constexpr double kAbsFloor = 1e-10;

Index rank_from(const Eigen::VectorXd& sv, double rel_tol) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = std::max(rel_tol * sv(0), kAbsFloor);
  Index r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  return r;
}

}  // namespace

Index numerical_rank(const Mat& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::BDCSVD<Mat> svd(a);
  return rank_from(svd.singularValues(), rel_tol);
}

Mat null_space(const Mat& a, double rel_tol) {
  const Index n = a.cols();
  if (a.rows() == 0) return Mat::Identity(n, n);
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeFullV);
  const Index r = rank_from(svd.singularValues(), rel_tol);
  return svd.matrixV().rightCols(n - r);
}

Mat range_basis(const Mat& a, double rel_tol) {
  if (a.cols() == 0) return Mat(a.rows(), 0);
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeThinU);
  const Index r = rank_from(svd.singularValues(), rel_tol);
  return svd.matrixU().leftCols(r);
}

Mat intersect_spans(const Mat& a, const Mat& b, double rel_tol) {
  const Mat qa = range_basis(a, rel_tol);
  const Mat qb = range_basis(b, rel_tol);
  if (qa.cols() == 0 || qb.cols() == 0) return Mat(a.rows(), 0);
  Mat stacked(qa.rows(), qa.cols() + qb.cols());
  stacked << qa, -qb;
  const Mat ker = null_space(stacked, rel_tol);
  return range_basis(qa * ker.topRows(qa.cols()), rel_tol);
}

Mat complement_in(const Mat& a, const Mat& b, double rel_tol) {
  const Mat qa = range_basis(a, rel_tol);
  if (qa.cols() == 0) return qa;
  const Mat qb = range_basis(b, rel_tol);
  if (qb.cols() == 0) return qa;
  const Mat residual = qa - qb * (qb.adjoint() * qa);
  // The residual has singular values near 0 (shared directions) or near 1.
  Eigen::BDCSVD<Mat> svd(residual, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Index r = 0;
  while (r < sv.size() && sv(r) > 1e-6) ++r;
  return svd.matrixU().leftCols(r);
}

Mat expm(const Mat& a) { return a.exp(); }

Mat expm_skew(const Mat& a) {
  const Mat h = kI * a;  // Hermitian when a is skew-Hermitian
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (h + h.adjoint()));
  const Eigen::VectorXd& lam = es.eigenvalues();
  Vec phases(lam.size());
  for (Index i = 0; i < lam.size(); ++i) phases(i) = std::exp(-kI * lam(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double max_abs(const Mat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace projrep
