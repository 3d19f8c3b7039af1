#pragma once

#include <array>
#include <string>
#include <vector>

#include "projrep/liealg.hpp"

namespace projrep {

// Alternating n-form (n = 1, 2, 3) stored as a dense antisymmetric array.
class Cochain {
 public:
  Cochain(AlgebraPtr alg, int degree);

  int degree() const { return degree_; }
  const AlgebraPtr& algebra() const { return alg_; }
  Index dim() const { return n_; }

  cplx at(int i) const;
  cplx at(int i, int j) const;
  cplx at(int i, int j, int k) const;
  // Setters write every permutation with its sign.
  void set(int i, cplx v);
  void set(int i, int j, cplx v);
  void set(int i, int j, int k, cplx v);

  cplx evaluate(const Vec& x) const;
  cplx evaluate(const Vec& x, const Vec& y) const;

  Vec vector() const;  // degree 1
  Mat matrix() const;  // degree 2, W(i,j) = ω(e_i, e_j)
  static Cochain from_vector(AlgebraPtr alg, const Vec& v);
  static Cochain from_matrix(AlgebraPtr alg, const Mat& w);  // antisymmetric part is used

  double max_abs() const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator*=(cplx s);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) {
    Cochain nb = b;
    nb *= -1.0;
    return a += nb;
  }
  friend Cochain operator*(cplx s, Cochain a) { return a *= s; }

 private:
  std::size_t idx(int i, int j = 0, int k = 0) const;

  AlgebraPtr alg_;
  int degree_;
  Index n_;
  std::vector<cplx> c_;
};

// In-range index pairs i < j and triples i < j < k: the coordinates of the
// truncated 2- and 3-cochain spaces.
std::vector<std::array<int, 2>> cochain_pairs(const LieAlgebra& alg);
std::vector<std::array<int, 3>> cochain_triples(const LieAlgebra& alg);

Vec to_pair_coords(const Cochain& c);
Cochain from_pair_coords(AlgebraPtr alg, const Vec& coords);

// δ on degrees 1 and 2; degree-3 output is evaluated on in-range triples only.
Cochain differential(const Cochain& c);

// Matrices of δ¹ : C¹ → C² and δ² : C² → C³ in pair/triple coordinates.
Mat delta1_matrix(const LieAlgebra& alg);
Mat delta2_matrix(const LieAlgebra& alg);

// Derivation action on cochains: (Dβ)(x) = β(Dx), (Dω)(x,y) = ω(Dx,y) + ω(x,Dy).
Mat d_action_degree1(const LieAlgebra& alg, const Mat& d);
Mat d_action_degree2(const LieAlgebra& alg, const Mat& d);

// H² of the subcomplex spanned by c1_basis ⊆ C¹ and c2_basis ⊆ C² (pair
// coordinates); representatives are orthonormal and orthogonal to coboundaries.
struct SubcomplexH2 {
  Index dimension = 0;
  Index cocycle_dim = 0;
  Index coboundary_dim = 0;
  Mat cocycles;         // orthonormal basis of Z²
  Mat coboundaries;     // orthonormal basis of B²
  Mat representatives;  // orthonormal basis of Z² ⊖ B²
  double closure_residual = 0.0;  // ‖δ² B²‖, zero when δ∘δ = 0
};

SubcomplexH2 h2_subcomplex(const LieAlgebra& alg, const Mat& c1_basis, const Mat& c2_basis);

struct H2Result {
  Index dimension = 0;
  std::vector<Cochain> cocycle_basis;
  Mat coboundary_projector;  // orthogonal projector onto B² in pair coordinates
  SubcomplexH2 detail;
};

H2Result h2(const AlgebraPtr& alg);
// Cohomology of the D-invariant subcomplex.
H2Result h2_invariant(const AlgebraPtr& alg, const Mat& d);

struct CentralExtensionAlgebra {
  AlgebraPtr base;
  Cochain omega;
  AlgebraPtr total;  // central element at index 0, base element i at index i + 1
  int central_index = 0;
};

// Throws NotACocycle when ‖δω‖ > 1e-9 unless validate is false; the unvalidated
// total algebra is then built without a Jacobi check.
CentralExtensionAlgebra central_extension(const AlgebraPtr& alg, const Cochain& omega,
                                          bool validate = true);

// (z, x) ↦ (z + β(x), x) on the total coordinates of an extension.
Mat shear_map(const CentralExtensionAlgebra& ext, const Cochain& beta);

// Max over basis pairs of ‖φ[a,b] − [φa, φb]‖.
double homomorphism_residual(const Mat& phi, const LieAlgebra& from, const LieAlgebra& to);

struct ExactSequenceReport {
  std::string first_space_label = "truncation-dependent";
  Index dim_first = 0;  // ((Dg ∩ [g,g]) / D[g,g])'
  Index dim_h2_invariant = 0;
  Index dim_h2_semidirect = 0;
  Index dim_h1_kernel = 0;
  Index rank_alpha = 0;
  Index rank_beta = 0;
  Index rank_gamma = 0;
  double alpha_invariance_residual = 0.0;
  double beta_cocycle_residual = 0.0;
  double gamma_target_residual = 0.0;  // γ lands in H¹(ker D)
  double beta_alpha_residual = 0.0;
  double gamma_beta_residual = 0.0;
  Index dim_h2_invariant_from_sequence = 0;
  bool exact_at_h2_invariant = false;
  bool exact_at_h2_semidirect = false;
  AlgebraPtr semidirect;
  SubcomplexH2 invariant;
  SubcomplexH2 semidirect_h2;
};

ExactSequenceReport exact_sequence_report(const AlgebraPtr& alg, const Mat& d, double period = 1.0);

// Pair coordinates of g mapped into those of g ⋊_D R, extended by zero on d.
Vec extend_to_semidirect(const LieAlgebra& alg, const LieAlgebra& semidirect, const Vec& coords);

// Norm of the class of ω̃ in H²(g ⋊_D R): zero iff β([ω]) = 0.
double semidirect_class_norm(const ExactSequenceReport& rep, const Cochain& omega);

// Max over in-range basis pairs of |ω(Dξ,η) + ω(ξ,Dη)|.
double d_invariance_defect(const Cochain& omega, const Mat& d);

}  // namespace projrep
