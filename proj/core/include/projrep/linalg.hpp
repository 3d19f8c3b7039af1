#pragma once

#include <complex>

#include <Eigen/Dense>

namespace projrep {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using Index = Eigen::Index;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

// Singular-value rank; values below max(rel_tol * sigma_max, 1e-10) count as zero.
Index numerical_rank(const Mat& a, double rel_tol = 1e-8);

// Orthonormal basis (columns) of ker(a).
Mat null_space(const Mat& a, double rel_tol = 1e-8);

// Orthonormal basis (columns) of the column space of a.
Mat range_basis(const Mat& a, double rel_tol = 1e-8);

// Orthonormal basis of span(a) ∩ span(b).
Mat intersect_spans(const Mat& a, const Mat& b, double rel_tol = 1e-8);

// Orthonormal basis of the part of span(a) orthogonal to span(b).
Mat complement_in(const Mat& a, const Mat& b, double rel_tol = 1e-8);

// General matrix exponential (scaling and squaring, Padé).
Mat expm(const Mat& a);

// Exponential of a skew-Hermitian matrix through the Hermitian eigendecomposition
// of i·a; the result is unitary to working precision.
Mat expm_skew(const Mat& a);

double max_abs(const Mat& a);

}  // namespace projrep
