#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "projrep/errors.hpp"
#include "suites.hpp"

namespace projrep::suites {

namespace {

struct Labelled {
  std::string label;
  AlgebraPtr algebra;
  std::optional<Mat> derivation;
  double period = 1.0;
};

// Algebra file or Witt/loop model config.
Labelled from_config(const json& j, const std::string& fallback_label) {
  if (j.contains("model")) {
    const std::string m = j.at("model").get<std::string>();
    if (m == "witt") {
      const WittModel w = witt_from_json(j);
      return {"witt", w.algebra, witt_derivation(w), kWittPeriod};
    }
    if (m == "loop") {
      const LoopModel l = loop_from_json(j);
      return {l.order == 1 ? "loop" : "twisted_loop", l.algebra, loop_derivation(l), loop_period(l)};
    }
    throw Error(ErrorKind::Schema, "model '" + m + "' carries no algebra for the cohomology suite");
  }
  const AlgebraConfig cfg = algebra_from_json(j);
  return {cfg.name.empty() ? fallback_label : cfg.name, cfg.algebra, cfg.derivation, cfg.period};
}

double max_delta_squared(const AlgebraPtr& alg, std::mt19937_64& rng, int samples) {
  const bool cplx_entries = alg->field() == Field::Complex;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Cochain beta = Cochain::from_vector(alg, random_vec(rng, alg->dim(), cplx_entries));
    worst = std::max(worst, differential(differential(beta)).max_abs());
  }
  return worst;
}

void complex_checks(const Labelled& a, std::mt19937_64& rng, Recorder& rec, SuiteReport& r) {
  const std::string p = "complex." + a.label + ".";
  rec.at_most(p + "delta_squared", "AC1", max_delta_squared(a.algebra, rng, 200), 1e-10);
  rec.at_most(p + "jacobi", "liealg", a.algebra->jacobi_residual(), 1e-9);

  const H2Result h = h2(a.algebra);
  double closed = 0.0, orth = 0.0;
  for (const auto& w : h.cocycle_basis) {
    closed = std::max(closed, differential(w).max_abs());
    orth = std::max(orth, (h.coboundary_projector * to_pair_coords(w)).norm());
  }
  rec.at_most(p + "h2_representatives_closed", "cohomology", closed, 1e-9);
  rec.at_most(p + "h2_representatives_orthogonal", "cohomology", orth, 1e-9);
  r.detail["h2"][a.label] = h.dimension;
}

// Coboundaries give trivial extensions; a perturbed cocycle is caught by both
// the cochain check and the Jacobi check of the total algebra.
void extension_checks(const Labelled& a, std::mt19937_64& rng, Recorder& rec) {
  const std::string p = "extension." + a.label + ".";
  const AlgebraPtr& g = a.algebra;
  const bool cplx_entries = g->field() == Field::Complex;
  double accepted_jacobi = 0.0, shear = 0.0, corrupted_jacobi = 1e300;
  int disagreements = 0;
  const H2Result h = h2(g);

  // perturb an in-range coefficient whose pair takes part in a bracket
  std::optional<std::array<int, 2>> target;
  for (const auto& pr : cochain_pairs(*g)) {
    Cochain probe(g, 2);
    probe.set(pr[0], pr[1], 1.0);
    if (differential(probe).max_abs() > 0.5) {
      target = pr;
      break;
    }
  }

  for (int trial = 0; trial < 20; ++trial) {
    const Cochain beta = Cochain::from_vector(g, random_vec(rng, g->dim(), cplx_entries));
    Cochain omega = differential(beta);
    if (trial % 2 == 1 && !h.cocycle_basis.empty()) omega = omega + h.cocycle_basis.front();
    const CentralExtensionAlgebra ext = central_extension(g, omega);
    accepted_jacobi = std::max(accepted_jacobi, ext.total->jacobi_residual());
    if (trial % 2 == 0) {
      const CentralExtensionAlgebra trivial = central_extension(g, Cochain(g, 2));
      shear = std::max(shear, homomorphism_residual(shear_map(ext, beta), *ext.total, *trivial.total));
    }
    if (!target) continue;

    Cochain bad = omega;
    const auto [ti, tj] = *target;
    bad.set(ti, tj, bad.at(ti, tj) + 1e-3);
    const double bad_delta = differential(bad).max_abs();
    bool rejected = false;
    try {
      central_extension(g, bad);
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::NotACocycle;
    }
    const double jac = central_extension(g, bad, false).total->jacobi_residual();
    corrupted_jacobi = std::min(corrupted_jacobi, jac);
    const bool cochain_says = bad_delta > 1e-9;
    const bool jacobi_says = jac > 1e-9;
    if (cochain_says != jacobi_says || rejected != cochain_says) ++disagreements;
  }
  rec.at_most(p + "cocycle_jacobi", "AC2", accepted_jacobi, 1e-9);
  rec.at_most(p + "coboundary_trivialisation", "AC2", shear, 1e-10);
  if (target) rec.at_least(p + "corrupted_jacobi", "AC2", corrupted_jacobi, 1e-5);
  rec.at_most(p + "detector_disagreements", "AC2", disagreements, 0.0);
}

void sequence_checks(const Labelled& a, Recorder& rec, SuiteReport& r) {
  if (!a.derivation) return;
  const std::string p = "sequence." + a.label + ".";
  const ExactSequenceReport s = exact_sequence_report(a.algebra, *a.derivation, a.period);
  rec.at_most(p + "beta_alpha", "AC10", s.beta_alpha_residual, 1e-9);
  rec.at_most(p + "gamma_beta", "AC10", s.gamma_beta_residual, 1e-9);
  rec.at_most(p + "alpha_invariance", "AC10", s.alpha_invariance_residual, 1e-9);
  rec.at_most(p + "beta_cocycle", "AC10", s.beta_cocycle_residual, 1e-9);
  rec.at_most(p + "h2_invariant_two_ways",
              "AC10", std::abs(static_cast<double>(s.dim_h2_invariant - s.dim_h2_invariant_from_sequence)), 0.0);
  rec.at_most(p + "exact_at_h2_invariant", "AC10", s.exact_at_h2_invariant ? 0.0 : 1.0, 0.0);
  rec.at_most(p + "exact_at_h2_semidirect", "AC10", s.exact_at_h2_semidirect ? 0.0 : 1.0, 0.0);
  r.detail["sequence"][a.label] = {{"first_space", s.first_space_label},
                                   {"dim_first", s.dim_first},
                                   {"dim_h2_invariant", s.dim_h2_invariant},
                                   {"dim_h2_semidirect", s.dim_h2_semidirect},
                                   {"dim_h1_kernel", s.dim_h1_kernel},
                                   {"rank_alpha", s.rank_alpha},
                                   {"rank_beta", s.rank_beta},
                                   {"rank_gamma", s.rank_gamma}};
}

}  // namespace

void cohomology_suite(const Options& opt, SuiteReport& r) {
  auto rng = suite_rng(opt.seed, "cohomology");
  Recorder rec(r);
  std::vector<Labelled> algebras;
  if (opt.config) {
    algebras.push_back(from_config(*opt.config, "config"));
  } else {
    for (const char* f : {"so3.json", "abelian_r4.json", "heisenberg3.json", "witt.json", "loop_su2.json"})
      algebras.push_back(from_config(load_data(opt, f), f));
  }
  for (const auto& a : algebras) complex_checks(a, rng, rec, r);
  for (const auto& a : algebras)
    if (a.algebra->dim() <= 24) extension_checks(a, rng, rec);

  if (opt.config) {
    sequence_checks(algebras.front(), rec, r);
    return;
  }
  sequence_checks(algebras[4], rec, r);  // su(2) loop
  sequence_checks(from_config(load_data(opt, "witt.json"), "witt"), rec, r);
  sequence_checks(from_config(load_data(opt, "loop_su3_twisted.json"), "twisted_loop"), rec, r);
  {
    const AlgebraConfig ab = algebra_from_json(load_data(opt, "abelian_r2.json"));
    sequence_checks({"abelian_r2", ab.algebra, Mat::Zero(2, 2), 1.0}, rec, r);
  }

  // The Kac-Moody cocycle is D-invariant and survives in H² of the semidirect product.
  const LoopModel loop = loop_from_json(load_data(opt, "loop_su2.json"));
  const Cochain km = km_cochain(loop);
  const Mat d = loop_derivation(loop);
  rec.at_most("sequence.loop.km_d_invariance", "AC10", d_invariance_defect(km, d), 1e-10);
  const ExactSequenceReport s = exact_sequence_report(loop.algebra, d, loop_period(loop));
  rec.at_least("sequence.loop.km_semidirect_class", "cohomology",
               semidirect_class_norm(s, (1.0 / km.max_abs()) * km), 1e-6);
}

}  // namespace projrep::suites
