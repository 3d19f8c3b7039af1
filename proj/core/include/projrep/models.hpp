#pragma once

#include <functional>
#include <string>
#include <vector>

#include "projrep/cohomology.hpp"
#include "projrep/representation.hpp"

namespace projrep {

// Structure constants of the real span of skew-Hermitian matrices; the basis
// must be orthogonal for −tr(XY).
AlgebraPtr matrix_algebra(std::vector<std::string> names, const std::vector<Mat>& basis);

AlgebraPtr so3_algebra();
AlgebraPtr abelian_algebra(int n);
// [q, p] = c
AlgebraPtr heisenberg3_algebra();

// e_a = −(i/2)σ_a and e_a = −(i/2)λ_a (Gell-Mann).
std::vector<Mat> su2_basis();
std::vector<Mat> su3_basis();
AlgebraPtr su2_algebra();
AlgebraPtr su3_algebra();

// Spin-j matrices π(e_a) = −iJ_a, dimension 2j + 1.
std::vector<Mat> spin_matrices(double j);

// su(2) ⊕ Rc with the zero cocycle, represented in spin j at the given level.
Representation spin_representation(double j, double level = 1.0);

// ---- Heisenberg -------------------------------------------------------------

// V = R^{2n} with basis q_1, p_1, ..., q_n, p_n.
struct HeisenbergModel {
  int modes = 1;
  RMat omega;  // antisymmetric, nondegenerate
  Mat h;       // Hermitian, positive, ω = −2 Im H
  int fock_cutoff = 40;
  std::vector<double> scales;  // ω(q_j, p_j) = scales[j] in the standard form
};

// Standard form: ω(q_j, p_j) = s_j, H(q_j, q_j) = H(p_j, p_j) = s_j/2,
// H(q_j, p_j) = −i s_j/2.
HeisenbergModel make_heisenberg(int modes, std::vector<double> scales = {}, int fock_cutoff = 40);
// Checks nondegeneracy, positivity and ω + 2 Im H = 0.
void validate_heisenberg(const HeisenbergModel& m);

// Base algebra (abelian V) with the model form as a cochain.
AlgebraPtr heisenberg_base(const HeisenbergModel& m);
Cochain heisenberg_cochain(const HeisenbergModel& m);
CentralExtensionAlgebra heisenberg_extension(const HeisenbergModel& m);

struct HeisenbergElement {
  cplx z{1.0, 0.0};
  RVec v;
};

HeisenbergElement heisenberg_identity(const HeisenbergModel& m);
HeisenbergElement heisenberg_product(const HeisenbergModel& m, const HeisenbergElement& a,
                                     const HeisenbergElement& b);
HeisenbergElement heisenberg_inverse(const HeisenbergElement& a);

// f(z, v) = z·e^{−½H(v,v)}
cplx quasifree_function(const HeisenbergModel& m, const HeisenbergElement& g);
// G_ij = f(g_i⁻¹ g_j)
Mat quasifree_kernel(const HeisenbergModel& m, const std::vector<HeisenbergElement>& samples);

// Multi-mode Fock space truncated to total occupation ≤ cutoff, ordered by
// total occupation so the exact homomorphism domain is a leading block.
struct FockSpace {
  int modes = 1;
  int cutoff = 0;
  std::vector<std::vector<int>> states;
  Index exact_dim = 0;  // states with total occupation ≤ cutoff − 1

  Index dim() const { return static_cast<Index>(states.size()); }
  Mat annihilation(int mode) const;
};

FockSpace make_fock_space(int modes, int cutoff);

// Standard-form models only: π(q_j) = i√(2π·L·s_j)·Q_j, π(p_j) = −i√(2π·L·s_j)·P_j
// with Q = (a + a†)/√2, P = (a − a†)/(i√2), π(c) = 2πi·L.
Representation fock_representation(const HeisenbergModel& m, double level = 1.0);
Vec fock_vacuum(const HeisenbergModel& m);

// exp(π(v))·exp(π(w)) = e^{iπ·L·ω(v,w)}·exp(π(v + w)).
cplx weyl_phase(const HeisenbergModel& m, const RVec& v, const RVec& w, double level = 1.0);

// ---- Witt -------------------------------------------------------------------

// L_m = i·e^{imt}∂_t for |m| ≤ n_max with [L_m, L_n] = (m − n)L_{m+n} projected.
struct WittModel {
  int n_max = 6;
  int quadrature_points = 2048;
  AlgebraPtr algebra;
};

WittModel make_witt(int n_max = 6, int quadrature_points = 2048);
// D L_m = i·m·L_m, periodic with period 2π.
Mat witt_derivation(const WittModel& m);
inline constexpr double kWittPeriod = 2.0 * kPi;

// Vector field coefficient ξ(t) of Σ_m f_m L_m, and its derivatives.
cplx witt_field(const WittModel& m, const Vec& f, double t, int derivative = 0);

// ω(ξ∂, η∂) = −(i/2)∫₀^{2π}(ξ′η″ − η′ξ″)dt by the trapezoid rule.
cplx gelfand_fuks(const WittModel& m, const Vec& f, const Vec& g);
Cochain gelfand_fuks_cochain(const WittModel& m);
// Max over in-range pairs of the projected (ξη′ − ηξ′) against the bracket.
double witt_bracket_residual(const WittModel& m);

// ---- circle diffeomorphisms and the Bott cocycle -----------------------------

// Lift of a circle diffeomorphism: φ(t + 2π) = φ(t) + 2π.
struct CircleDiffeo {
  std::function<double(double)> f;
  std::function<double(double)> d1;
  std::function<double(double)> d2;

  static CircleDiffeo identity();
  static CircleDiffeo deck(int n);  // t + 2πn
  // t + Σ a_n sin(n t + θ_n), n = 1, 2, ...
  static CircleDiffeo fourier(std::vector<double> a, std::vector<double> theta);
};

CircleDiffeo compose(const CircleDiffeo& phi, const CircleDiffeo& psi);  // φ∘ψ

// Throws NonMonotone if the minimum slope on the grid is ≤ 1e-6 or the lift is
// not equivariant under t ↦ t + 2π.
void validate_diffeo(const CircleDiffeo& phi, int samples = 4096);

// B(φ, ψ) = ½∫₀^{2π} log((φ∘ψ)′) d log ψ′, trapezoid rule.
double bott_cocycle(const CircleDiffeo& phi, const CircleDiffeo& psi, int samples = 4096);
// B(φ,ψ) + B(φψ,χ) − B(ψ,χ) − B(φ,ψχ)
double bott_identity_residual(const CircleDiffeo& phi, const CircleDiffeo& psi, const CircleDiffeo& chi,
                              int samples = 4096);

// ---- loop algebras ----------------------------------------------------------

enum class LoopType { SU2, SU3 };

// Basis X_a ⊗ z^m, z^m = e^{2πimt}, with m ∈ Z + j/N on the σ-eigenspace of
// eigenvalue e^{2πij/N} and |m| ≤ n_max. σ is the identity (N = 1) or, for
// su(3), complex conjugation (N = 2).
struct LoopModel {
  LoopType type = LoopType::SU2;
  int order = 1;
  double n_max = 3;
  double kappa_coefficient = 1.0;  // κ(X, Y) = −coefficient·tr(XY)
  double prefactor = 1.0 / (8.0 * kPi);
  int quadrature_points = 2048;
  std::vector<Mat> k_basis;
  std::vector<int> sigma_sign;  // σ(e_a) = sigma_sign[a]·e_a
  std::vector<int> element;     // basis index → k-basis index
  std::vector<double> mode;     // basis index → m
  AlgebraPtr algebra;
};

LoopModel make_loop(LoopType type, int order = 1, double n_max = 3, double prefactor = 1.0 / (8.0 * kPi),
                    double kappa_coefficient = 1.0, int quadrature_points = 2048);

double loop_period(const LoopModel& m);
cplx kappa(const LoopModel& m, const Mat& x, const Mat& y);
// max |κ([x,y],z) + κ(y,[x,z])| over k-basis triples.
double kappa_invariance_residual(const LoopModel& m);
// D(X z^m) = 2πim·X z^m.
Mat loop_derivation(const LoopModel& m);

// ξ(t) and ξ′(t) as matrices in k ⊗ C.
Mat loop_value(const LoopModel& m, const Vec& coeffs, double t, int derivative = 0);
// ‖ξ(t + 1) − σ⁻¹ξ(t)‖ at a few sample times.
double twist_residual(const LoopModel& m, const Vec& coeffs);

// ω₁(ξ, η) = prefactor·∫₀^N κ(ξ, η′)dt by the trapezoid rule.
cplx km_cocycle(const LoopModel& m, const Vec& xi, const Vec& eta);
Cochain km_cochain(const LoopModel& m);
// Closed form on (X z^m, Y z^{−m}): prefactor·(−2πimN)·κ(X, Y).
cplx km_closed_form(const LoopModel& m, int a, int b, double mode);

}  // namespace projrep
