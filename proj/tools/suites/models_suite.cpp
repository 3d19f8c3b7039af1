#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "projrep/errors.hpp"
#include "suites.hpp"

namespace projrep::suites {

namespace {

void witt_checks(const WittModel& w, Recorder& rec, SuiteReport& r) {
  const Index n = w.algebra->dim();
  auto mode = [&](int m) { return Vec::Unit(n, m + w.n_max); };
  // n³ law: ω(L_n, L_−n) = C·n³ with C fixed by n = 1
  const double c = gelfand_fuks(w, mode(1), mode(-1)).real();
  double rel = 0.0;
  json series = json::array();
  double num = 0.0, den = 0.0;
  for (int k = 1; k <= w.n_max; ++k) {
    const cplx v = gelfand_fuks(w, mode(k), mode(-k));
    rel = std::max(rel, std::abs(v - c * k * k * k) / std::abs(c * k * k * k));
    num += v.real() * k * k * k;
    den += static_cast<double>(k) * k * k * k * k * k;
    series.push_back({{"n", k}, {"value", v.real()}});
  }
  for (auto& row : series) row["fitted_coefficient"] = num / den;
  r.series["gelfand_fuks_n3"] = series;
  r.detail["gelfand_fuks_constant"] = c;
  rec.at_most("models.witt.n3_law", "AC11", rel, 1e-8);
  rec.at_most("models.witt.constant_vs_closed_form", "models", std::abs(c - 2.0 * kPi), 1e-9);
  const Cochain gf = gelfand_fuks_cochain(w);
  rec.at_most("models.witt.gf_closed", "models", differential(gf).max_abs(), 1e-8);
  rec.at_most("models.witt.bracket_identity", "models", witt_bracket_residual(w), 1e-10);
  rec.at_most("models.witt.gf_d_invariance", "models", d_invariance_defect(gf, witt_derivation(w)), 1e-8);
}

void bott_checks(std::mt19937_64& rng, Recorder& rec) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0), phase(0.0, 2.0 * kPi);
  auto diffeo = [&] {
    // Σ n|a_n| < 0.5 keeps the lift monotone
    std::vector<double> a(3), th(3);
    double budget = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
      a[k] = amp(rng);
      th[k] = phase(rng);
      budget += (k + 1) * std::abs(a[k]);
    }
    const double scale = std::uniform_real_distribution<double>(0.1, 0.45)(rng) / budget;
    for (auto& x : a) x *= scale;
    return CircleDiffeo::fourier(a, th);
  };
  double worst = 0.0, deck = 0.0;
  for (int k = 0; k < 20; ++k) {
    const CircleDiffeo a = diffeo(), b = diffeo(), c = diffeo();
    worst = std::max(worst, std::abs(bott_identity_residual(a, b, c)));
    for (int n : {-1, 1, 2}) {
      deck = std::max(deck, std::abs(bott_cocycle(a, CircleDiffeo::deck(n))));
      deck = std::max(deck, std::abs(bott_cocycle(CircleDiffeo::deck(n), a)));
    }
  }
  rec.at_most("models.bott.cocycle_identity", "AC11", worst, 1e-6);
  rec.at_most("models.bott.deck_transformations", "AC11", deck, 1e-10);
}

void loop_checks(const std::string& label, const LoopModel& l, Recorder& rec) {
  const std::string p = "models." + label + ".";
  const Cochain km = km_cochain(l);
  rec.at_most(p + "km_d_invariance", "AC11", d_invariance_defect(km, loop_derivation(l)), 1e-10);
  rec.at_most(p + "km_closed", "models", differential(km).max_abs(), 1e-8);
  rec.at_most(p + "kappa_invariance", "models", kappa_invariance_residual(l), 1e-12);

  // n·κ law on (X z^m, Y z^−m) against the closed-form integral
  double law = 0.0, antisym = 0.0, twist = 0.0;
  const Index n = l.algebra->dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const double mi = l.mode[static_cast<std::size_t>(i)];
      const double mj = l.mode[static_cast<std::size_t>(j)];
      if (std::abs(mi + mj) > 1e-12 || mi <= 0.0) continue;
      const Vec xi = Vec::Unit(n, i), eta = Vec::Unit(n, j);
      const cplx v = km_cocycle(l, xi, eta);
      const cplx closed = km_closed_form(l, l.element[static_cast<std::size_t>(i)],
                                         l.element[static_cast<std::size_t>(j)], mi);
      law = std::max(law, std::abs(v - closed));
      antisym = std::max(antisym, std::abs(v + km_cocycle(l, eta, xi)));
    }
  for (Index i = 0; i < n; ++i) twist = std::max(twist, twist_residual(l, Vec::Unit(n, i)));
  rec.at_most(p + "n_kappa_law", "AC11", law, 1e-8);
  rec.at_most(p + "km_antisymmetry", "models", antisym, 1e-10);
  rec.at_most(p + "twist_condition", "models", twist, 1e-12);
}

void heisenberg_checks(std::mt19937_64& rng, Recorder& rec) {
  for (int modes : {1, 2}) {
    const std::string p = "models.heisenberg_v" + std::to_string(2 * modes) + ".";
    HeisenbergModel m = make_heisenberg(modes);
    // a general pair: any real invertible S keeps ω = −2 Im H under
    // ω ↦ SᵀωS, H ↦ SᵀHS
    RMat g(2 * modes, 2 * modes);
    for (int k = 0; k < 2 * modes; ++k) g.col(k) = random_vec(rng, 2 * modes, false).real();
    const RMat s = (0.3 * g).exp();
    m.omega = s.transpose() * m.omega * s;
    m.h = s.cast<cplx>().transpose() * m.h * s.cast<cplx>();
    m.scales.clear();
    validate_heisenberg(m);

    std::vector<HeisenbergElement> samples;
    for (int k = 0; k < 50; ++k) {
      const Vec z = random_vec(rng, 1, false);
      samples.push_back({std::exp(kI * z(0).real()), random_vec(rng, 2 * modes, false).real()});
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(quasifree_kernel(m, samples));
    rec.at_least(p + "quasifree_gram_min_eigenvalue", "AC12", es.eigenvalues().minCoeff(), -1e-10);

    double assoc = 0.0;
    for (int k = 0; k + 2 < 50; k += 3) {
      const auto& a = samples[static_cast<std::size_t>(k)];
      const auto& b = samples[static_cast<std::size_t>(k + 1)];
      const auto& c = samples[static_cast<std::size_t>(k + 2)];
      const auto l = heisenberg_product(m, heisenberg_product(m, a, b), c);
      const auto rr = heisenberg_product(m, a, heisenberg_product(m, b, c));
      assoc = std::max(assoc, std::abs(l.z - rr.z) + (l.v - rr.v).norm());
    }
    rec.at_most(p + "associativity", "models", assoc, 1e-12);
  }
}

}  // namespace

void models_suite(const Options& opt, SuiteReport& r) {
  auto rng = suite_rng(opt.seed, "models");
  Recorder rec(r);
  const std::string only = opt.config ? opt.config->value("model", "") : "";
  if (opt.config && only.empty()) throw Error(ErrorKind::Schema, "models suite needs a model config");
  if (only.empty() || only == "witt") witt_checks(witt_from_json(opt.config ? *opt.config : load_data(opt, "witt.json")), rec, r);
  if (only.empty()) bott_checks(rng, rec);
  if (only == "loop") loop_checks("config", loop_from_json(*opt.config), rec);
  if (only.empty()) {
    loop_checks("loop_su2", loop_from_json(load_data(opt, "loop_su2.json")), rec);
    loop_checks("loop_su3_twisted", loop_from_json(load_data(opt, "loop_su3_twisted.json")), rec);
  }
  if (only.empty() || only == "heisenberg") heisenberg_checks(rng, rec);
}

}  // namespace projrep::suites
