#include <cmath>
#include <string>

#include "projrep/errors.hpp"
#include "projrep/hilbert.hpp"
#include "projrep/unirep.hpp"
#include "suites.hpp"

namespace projrep::suites {

namespace {

// Low-occupation state: random amplitudes on the first few Fock levels.
Vec low_state(std::mt19937_64& rng, Index dim, Index levels) {
  Vec v = Vec::Zero(dim);
  v.head(levels) = random_vec(rng, levels, true);
  return v.normalized();
}

Vec total_coords(const ExtractedForms& f, const Vec& base, Index total_dim) {
  Vec t = Vec::Zero(total_dim);
  for (std::size_t k = 0; k < f.base_to_total.size(); ++k) t(f.base_to_total[k]) = base(static_cast<Index>(k));
  return t;
}

void fock_checks(const std::string& label, const HeisenbergModel& m, double level, std::mt19937_64& rng,
                 Recorder& rec) {
  const std::string p = "extraction." + label + ".";
  const Representation rep = fock_representation(m, level);
  const Index total = rep.algebra()->dim();
  const Vec vac = fock_vacuum(m);
  const ExtractedForms f = omega_from_rep(rep, vac);
  const Index nb = static_cast<Index>(f.base_to_total.size());

  // bracket formula against the model form, and against finite differences
  rec.at_most(p + "omega_vs_model", "AC6", max_abs(f.omega.matrix() - m.omega.cast<cplx>()), 1e-8);
  rec.at_most(p + "h_vs_model", "AC6", max_abs(f.h - m.h), 1e-8);
  rec.at_most(p + "bracket_form", "AC6", f.bracket_form_residual, 1e-9);
  double fd = 0.0;
  for (Index i = 0; i < nb; ++i)
    for (Index j = 0; j < nb; ++j) {
      if (i == j) continue;
      const cplx v = omega_from_group_cocycle(rep, vac, total_coords(f, Vec::Unit(nb, i), total),
                                              total_coords(f, Vec::Unit(nb, j), total));
      fd = std::max(fd, std::abs(v - f.omega.at(static_cast<int>(i), static_cast<int>(j))));
    }
  rec.at_most(p + "finite_difference_vs_bracket", "AC6", fd, 5e-4);

  // polarisation, positivity and uncertainty on the vacuum and on random low states
  double pol = 0.0, min_eig = 1e300, slack = 1e300, imag = 0.0, closed = 0.0;
  for (int k = 0; k < 5; ++k) {
    const Vec psi = k == 0 ? vac : low_state(rng, rep.dim(), 6);
    const ExtractedForms e = omega_from_rep(rep, psi);
    pol = std::max(pol, e.polarisation_residual);
    imag = std::max(imag, e.max_imag_omega);
    closed = std::max(closed, differential(e.omega).max_abs());
    Eigen::SelfAdjointEigenSolver<Mat> es(e.h);
    min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
    for (int s = 0; s < 20; ++s)
      slack = std::min(slack, uncertainty_slack(e, random_vec(rng, nb, false), random_vec(rng, nb, false)));
  }
  rec.at_most(p + "polarisation", "AC7", pol, 1e-10);
  rec.at_least(p + "h_min_eigenvalue", "AC7", min_eig, -1e-10);
  rec.at_least(p + "uncertainty_slack", "AC7", slack, -1e-12);
  rec.at_most(p + "omega_imaginary_part", "unirep", imag, 1e-10);
  rec.at_most(p + "omega_closed", "unirep", closed, 1e-8);

  // covariance under random words; stabiliser words leave ω entrywise fixed.
  // The summed displacement of a word is capped so the mean occupation stays near a
  // quarter of the retained levels and the truncation tail is negligible.
  const double budget = std::sqrt(m.fock_cutoff / (4.0 * kPi * level * m.modes));
  double cov = 0.0;
  for (int k = 0; k < 20; ++k) {
    GroupWord g;
    const int factors = 1 + k % 3;
    double spread = 0.0;
    for (int i = 0; i < factors; ++i) {
      g.factors.push_back(0.5 * random_vec(rng, total, false));
      spread += g.factors.back().tail(total - 1).norm();
    }
    if (spread > budget)
      for (auto& x : g.factors) x *= budget / spread;
    cov = std::max(cov, covariance_check(rep, g, vac, random_vec(rng, nb, false), random_vec(rng, nb, false)).max());
  }
  rec.at_most(p + "covariance", "AC8", cov, 1e-6);
  double stab = 0.0;
  for (double theta : {0.1, 0.37, 1.3}) {
    const GroupWord g = GroupWord::exp(theta * Vec::Unit(total, 0));
    const Vec moved = realize(rep, g) * vac;
    const ExtractedForms e = omega_from_rep(rep, moved);
    stab = std::max(stab, max_abs(e.omega.matrix() - f.omega.matrix()));
    stab = std::max(stab, max_abs(e.h - f.h));
  }
  rec.at_most(p + "stabiliser_invariance", "AC8", stab, 1e-8);
}

void geodesic_checks(std::mt19937_64& rng, Recorder& rec) {
  std::uniform_int_distribution<int> dims(2, 16);
  double arc = 0.0, ends = 0.0;
  int pairs = 0;
  while (pairs < 100) {
    const Index d = dims(rng);
    const Ray a(random_unit(rng, d)), b(random_unit(rng, d));
    if (std::abs(inner(a.rep(), b.rep())) < 0.05) continue;  // keep the pair non-orthogonal
    ++pairs;
    const double len = fubini_study_distance(a, b);
    for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double t = frac * len;
      arc = std::max(arc, std::abs(fubini_study_distance(a, geodesic(a, b, t)) - t));
    }
    ends = std::max(ends, (geodesic(a, b, len).rep() - b.rep()).norm());
    ends = std::max(ends, (geodesic(a, b, 0.0).rep() - a.rep()).norm());
  }
  rec.at_most("geodesic.arc_length", "AC9", arc, 1e-9);
  rec.at_most("geodesic.endpoints", "AC9", ends, 1e-9);
}

}  // namespace

void extraction_suite(const Options& opt, SuiteReport& r) {
  auto rng = suite_rng(opt.seed, "extraction");
  Recorder rec(r);
  if (opt.config && opt.config->value("model", "") == "heisenberg") {
    fock_checks("config", heisenberg_from_json(*opt.config), opt.config->value("level", 1.0), rng, rec);
  } else {
    for (const char* file : {"heisenberg_fock.json", "heisenberg_fock2.json"}) {
      const json cfg = load_data(opt, file);
      const std::string label = std::string(file).substr(0, std::string(file).find('.'));
      fock_checks(label, heisenberg_from_json(cfg), cfg.value("level", 1.0), rng, rec);
    }
  }
  geodesic_checks(rng, rec);
  r.detail["level_normalisation"] = "omega and H per unit level";
}

}  // namespace projrep::suites
