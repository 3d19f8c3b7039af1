#pragma once

#include <vector>

#include "projrep/cohomology.hpp"
#include "projrep/group_word.hpp"
#include "projrep/hilbert.hpp"
#include "projrep/representation.hpp"

namespace projrep {

// π_n(ξ)ψ = π(ξ_n)···π(ξ_1)ψ; ξ_1 acts first. An empty list returns ψ.
Vec pi_n(const Representation& rep, const std::vector<Vec>& xs, const Vec& psi);
// π_0(λ) = λ·1.
Vec pi_zero(cplx lambda, const Vec& psi);

double seminorm_weak(const Representation& rep, const std::vector<Vec>& xs, const Vec& psi);
double seminorm_strong(const Representation& rep, const std::vector<std::vector<Vec>>& sample,
                       const Vec& psi);

// W rescaled by the unit phase making <psi, W psi> positive.
Mat local_lift(const Mat& w, const Vec& psi, double tol_perp = kTolPerp);
Mat local_lift(const Representation& rep, const GroupWord& g, const Vec& psi,
               double tol_perp = kTolPerp);

// f with ρ_ψ(g)ρ_ψ(h) = f·ρ_ψ(gh), given ρ(g), ρ(h), ρ(gh) up to phase.
cplx local_cocycle(const Mat& ug, const Mat& uh, const Mat& ugh, const Vec& psi,
                   double residual_tol = 1e-8, double tol_perp = kTolPerp);
cplx local_cocycle(const Representation& rep, const Vec& psi, const GroupWord& g, const GroupWord& h,
                   double residual_tol = 1e-8, double tol_perp = kTolPerp);

struct LocalCocycleTable {
  std::vector<GroupWord> elements;
  Mat values;  // values(a, b) = f(g_a, g_b)
};

LocalCocycleTable local_cocycle_table(const Representation& rep, const Vec& psi,
                                      const std::vector<GroupWord>& elements);

// ω_ψ and H_ψ on the base algebra ĝ / Rc, reported per unit level (the raw
// operator values divided by 2π·level).
struct ExtractedForms {
  AlgebraPtr base;
  std::vector<int> base_to_total;
  Cochain omega;
  Mat h;       // H(i, j) = <A_i ψ, A_j ψ>, antilinear in the first slot
  Vec lambda;  // splitting σ(ξ) = (λ(ξ), ξ)
  double max_imag_omega = 0.0;
  double polarisation_residual = 0.0;   // max |ω + 2 Im H|
  double bracket_form_residual = 0.0;   // i(A_[ξ,η] − [A_ξ, A_η]) against ω·1
};

ExtractedForms omega_from_rep(const Representation& rep, const Vec& psi);

// ω(x, y) = x^T W y and H(x, y) = x^* H y on base coordinates.
cplx omega_value(const ExtractedForms& f, const Vec& x, const Vec& y);
cplx h_value(const ExtractedForms& f, const Vec& x, const Vec& y);
// ‖x‖_H·‖y‖_H − ½|ω(x, y)|; nonnegative by the uncertainty relation.
double uncertainty_slack(const ExtractedForms& f, const Vec& x, const Vec& y);

// Mixed second partials of the local group cocycle along exp(tξ), exp(sη),
// antisymmetrised; ξ and η are in the representation's algebra coordinates.
cplx omega_from_group_cocycle(const Representation& rep, const Vec& psi, const Vec& xi,
                              const Vec& eta, double h = 1e-3);

struct CovarianceResidual {
  double omega = 0.0;
  double h = 0.0;
  double max() const { return omega > h ? omega : h; }
};

// |ω_{ρ(g)ψ}(ξ,η) − ω_ψ(Ad_{g⁻¹}ξ, Ad_{g⁻¹}η)| and the same for H; ξ, η in
// base coordinates.
CovarianceResidual covariance_check(const Representation& rep, const GroupWord& g, const Vec& psi,
                                    const Vec& xi, const Vec& eta);

// max over basis ξ of ‖U π_A(ξ) − π_B(ξ) U‖_F.
double intertwiner_check(const Representation& a, const Representation& b, const Mat& u);

}  // namespace projrep
