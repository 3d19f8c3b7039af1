#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "projrep/linalg.hpp"

namespace projrep {

enum class Field { Real, Complex };

// c_{ij}^k: [e_i, e_j] contains value·e_k.
struct StructureConstant {
  int i;
  int j;
  int k;
  cplx value;
};

// Fourier-mode labels for truncated algebras. Pairs and triples whose partial
// mode sums leave [-cutoff, cutoff] are "out of range": the projected bracket
// drops them and Jacobi/cocycle conditions are only imposed in range.
struct Truncation {
  std::vector<double> modes;
  double cutoff = 0.0;
};

class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> names, Field field,
             const std::vector<StructureConstant>& constants,
             std::optional<Truncation> truncation = std::nullopt, double jacobi_tol = 1e-9,
             bool validate = true);

  Index dim() const { return static_cast<Index>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  Field field() const { return field_; }
  double jacobi_tol() const { return jacobi_tol_; }
  const std::optional<Truncation>& truncation() const { return truncation_; }

  // Matrix of ad(e_i); column j is [e_i, e_j].
  const Mat& ad_basis(int i) const { return ad_[static_cast<std::size_t>(i)]; }
  cplx constant(int i, int j, int k) const { return ad_basis(i)(k, j); }

  Vec bracket(const Vec& x, const Vec& y) const;
  Vec bracket_basis(int i, int j) const { return ad_basis(i).col(j); }
  Mat adjoint(const Vec& x) const;

  bool pair_in_range(int i, int j) const;
  bool triple_in_range(int i, int j, int k) const;

  // Max over in-range basis triples of the Jacobiator norm.
  double jacobi_residual() const;
  // Same maximum over all triples, including out-of-range ones.
  double jacobi_residual_all() const;
  std::array<int, 3> worst_jacobi_triple(bool in_range_only = true) const;

  // Nonzero constants with i < j.
  std::vector<StructureConstant> sparse_constants() const;
  bool real_structure() const;

 private:
  double jacobi_at(int i, int j, int k) const;

  std::vector<std::string> names_;
  Field field_;
  std::optional<Truncation> truncation_;
  double jacobi_tol_;
  std::vector<Mat> ad_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

Vec bracket(const LieAlgebra& alg, const Vec& x, const Vec& y);
Mat adjoint_action(const LieAlgebra& alg, const Vec& x);

// Max over in-range basis pairs of ‖D[x,y] − [Dx,y] − [x,Dy]‖.
double leibniz_residual(const LieAlgebra& alg, const Mat& d);

// g ⋊_D R with the extra basis element appended last:
// [(x,t),(x',t')] = ([x,x'] + tDx' − t'Dx, 0).
AlgebraPtr semidirect_with_derivation(const LieAlgebra& alg, const Mat& d,
                                      const std::string& name = "d");

// Drops basis element `index` and every bracket component along it (quotient
// by a central element).
AlgebraPtr remove_basis_element(const LieAlgebra& alg, int index);

// Eigenspace grading of a derivation whose eigenvalues lie in (2πi/period)·Z.
struct GradedDecomposition {
  double period = 1.0;
  std::map<int, Mat> eigenspaces;             // k -> orthonormal columns
  std::map<int, std::vector<int>> index_blocks;  // filled when D is diagonal in the basis
  Mat ker_projector;
  Mat im_projector;
  Mat inverse_on_image;  // D^{-1} on ⊕_{k≠0} g_k, zero on ker D

  int block_dim(int k) const;
};

GradedDecomposition check_admissible_periodic(const LieAlgebra& alg, const Mat& d,
                                              double period = 1.0, double tol = 1e-8);

// ‖I‖ for the diagonal derivation 2πi(n + τm) on torus modes |n|,|m| ≤ n_max
// with n + τm ≠ 0: grows without bound for irrational τ.
double small_divisor_inverse_norm(double tau, int n_max);

}  // namespace projrep
