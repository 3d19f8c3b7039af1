#include <cmath>
#include <string>

#include "projrep/errors.hpp"
#include "projrep/unirep.hpp"
#include "suites.hpp"

namespace projrep::suites {

namespace {

struct Fock {
  HeisenbergModel model;
  Representation rep;
  Vec vacuum;
  Index q(int j = 0) const { return 1 + 2 * j; }
  Index p(int j = 0) const { return 2 + 2 * j; }
  Index dim() const { return rep.algebra()->dim(); }
};

Fock load_fock(const Options& opt) {
  const json cfg = opt.config && opt.config->value("model", "") == "heisenberg" ? *opt.config
                                                                                : load_data(opt, "heisenberg_fock.json");
  HeisenbergModel m = heisenberg_from_json(cfg);
  Representation rep = fock_representation(m, cfg.value("level", 1.0));
  Vec vac = fock_vacuum(m);
  return {std::move(m), std::move(rep), std::move(vac)};
}

Vec unit(Index n, Index i) { return Vec::Unit(n, i); }

// γ^s_t = exp(a q) exp(b p) exp(C (q + p)) exp(w c) with a = (1−s)r(2t),
// b = (1−s)r(2t−1), C = s·r(t), w = −½ab: the two-leg path at s = 0, the
// straight path at s = 1, and exp(q + p) at t = 1 for every s.
GroupFamily heisenberg_family(const Fock& f) {
  const Index n = f.dim();
  const Vec q = unit(n, f.q()), p = unit(n, f.p()), c = unit(n, 0);
  auto r = [](double t) { return sitting_profile(t); };
  auto dr = [](double t) { return sitting_profile_derivative(t); };
  std::vector<ProfiledFactor> fs{
      {q, [=](double s, double t) { return (1 - s) * r(2 * t); },
       [=](double s, double t) { return (1 - s) * 2 * dr(2 * t); }},
      {p, [=](double s, double t) { return (1 - s) * r(2 * t - 1); },
       [=](double s, double t) { return (1 - s) * 2 * dr(2 * t - 1); }},
      {q + p, [=](double s, double t) { return s * r(t); }, [=](double s, double t) { return s * dr(t); }},
      {c, [=](double s, double t) { return -0.5 * (1 - s) * (1 - s) * r(2 * t) * r(2 * t - 1); },
       [=](double s, double t) {
         return -0.5 * (1 - s) * (1 - s) * (2 * dr(2 * t) * r(2 * t - 1) + 2 * r(2 * t) * dr(2 * t - 1));
       }}};
  return GroupFamily(f.rep.algebra(), fs);
}

// exp(r(t)x)·exp(s·sin(πr(t))·y) in the spin model: the detour in y closes at t = 1.
GroupFamily spin_family(const Representation& rep) {
  const Index n = rep.algebra()->dim();
  const Vec x = 1.3 * unit(n, 1) + 0.4 * unit(n, 3);
  const Vec y = 0.8 * unit(n, 2);
  auto r = [](double t) { return sitting_profile(t); };
  auto dr = [](double t) { return sitting_profile_derivative(t); };
  std::vector<ProfiledFactor> fs{
      {x, [=](double, double t) { return r(t); }, [=](double, double t) { return dr(t); }},
      {y, [=](double s, double t) { return s * std::sin(kPi * r(t)); },
       [=](double s, double t) { return s * kPi * std::cos(kPi * r(t)) * dr(t); }}};
  return GroupFamily(rep.algebra(), fs);
}

AlgebraCurve random_curve(std::mt19937_64& rng, Index n, double scale) {
  std::vector<Vec> a, b;
  for (int k = 0; k < 3; ++k) {
    a.push_back(scale * random_vec(rng, n, false));
    b.push_back(scale * random_vec(rng, n, false));
  }
  return [a, b](double t) {
    Vec v = Vec::Zero(a.front().size());
    for (int k = 0; k < 3; ++k)
      v += std::sin(2 * kPi * (k + 1) * t) * a[static_cast<std::size_t>(k)] +
           std::cos(2 * kPi * k * t) * b[static_cast<std::size_t>(k)];
    return v;
  };
}

void unitarity_and_order(const Fock& f, Recorder& rec, SuiteReport& r) {
  const Index n = f.dim();
  const AlgebraPath path = AlgebraPath::from_function(
      [&](double t) -> Vec { return std::sin(2 * kPi * t) * unit(n, f.q()) + 0.5 * std::cos(2 * kPi * t) * unit(n, f.p()); },
      1000);
  const Trajectory tr = integrate_ode(f.rep, path, f.vacuum, 1000);
  rec.at_most("flow.fock.norm_drift", "AC3", tr.max_drift, 1e-8);
  json drift = json::array();
  for (std::size_t k = 0; k < tr.t.size(); k += 50)
    drift.push_back({{"t", tr.t[k]}, {"drift", std::abs(tr.states[k].norm() - 1.0)}});
  r.series["norm_drift"] = drift;

  const Vec x = 0.7 * unit(n, f.q()) + 0.4 * unit(n, f.p());
  const Vec exact = expm_skew(f.rep(x)) * f.vacuum;
  json conv = json::array();
  std::vector<double> errs;
  for (int steps : {250, 500, 1000}) {
    const Trajectory t = integrate_ode(f.rep, [&](double) { return x; }, f.vacuum, steps);
    errs.push_back((t.endpoint() - exact).norm());
    conv.push_back({{"steps", steps}, {"error", errs.back()}});
  }
  r.series["convergence"] = conv;
  // order 4 within a factor 2 per halving: |log2(ratio) − 4| ≤ 1
  rec.at_most("flow.fock.order_250_500", "AC3", std::abs(std::log2(errs[0] / errs[1]) - 4.0), 1.0);
  rec.at_most("flow.fock.order_500_1000", "AC3", std::abs(std::log2(errs[1] / errs[2]) - 4.0), 1.0);
  rec.at_most("flow.fock.oracle_1000", "AC3", errs[2], 1e-8);
}

void homotopy(const Fock& f, Recorder& rec, SuiteReport& r) {
  const HomotopyReport h = homotopy_invariance_test(f.rep, heisenberg_family(f), f.vacuum, 1000);
  rec.at_most("flow.homotopy.heisenberg", "AC4", h.max_deviation, 1e-5);
  const Representation spin = spin_representation(1.0);
  const Vec psi = Vec::Unit(spin.dim(), 0);
  const HomotopyReport s = homotopy_invariance_test(spin, spin_family(spin), psi, 1000);
  rec.at_most("flow.homotopy.spin", "AC4", s.max_deviation, 1e-5);
  r.detail["homotopy_endpoint_defect"] = std::max(h.endpoint_defect, s.endpoint_defect);
}

void group_law(const Fock& f, std::mt19937_64& rng, Recorder& rec) {
  const Index n = f.dim();
  const Vec q = unit(n, f.q()), p = unit(n, f.p());
  auto leg = [](const Vec& x) { return AlgebraPath::with_sitting_instants([x](double) { return x; }); };

  // h = exp(q) first, then g = exp(p)
  const GroupLawReport qp = group_law_test(f.rep, leg(p), leg(q), f.vacuum, 1000);
  rec.at_most("flow.group_law.q_then_p", "AC5", qp.residual, 1e-6);
  RVec vq = RVec::Zero(2 * f.model.modes), vp = RVec::Zero(2 * f.model.modes);
  vq(0) = 1.0;
  vp(1) = 1.0;
  const cplx phase = weyl_phase(f.model, vp, vq);
  const Vec straight = expm_skew(f.rep(q + p)) * f.vacuum;
  rec.at_most("flow.group_law.weyl_phase", "AC5", (qp.composed - phase * straight).norm(), 1e-6);

  rec.at_most("flow.group_law.commuting", "AC5", group_law_test(f.rep, leg(q), leg(q), f.vacuum, 1000).residual,
              1e-10);
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    Vec a = Vec::Zero(n), b = Vec::Zero(n);
    for (Index i = 1; i < n; ++i) {
      a(i) = 0.6 * random_vec(rng, 1, false)(0);
      b(i) = 0.6 * random_vec(rng, 1, false)(0);
    }
    worst = std::max(worst, group_law_test(f.rep, leg(a), leg(b), f.vacuum, 1000).residual);
  }
  rec.at_most("flow.group_law.random_pairs", "AC5", worst, 1e-6);
}

void intertwiners(std::mt19937_64& rng, Recorder& rec, SuiteReport& r) {
  const Representation a = spin_representation(1.5);
  const Index d = a.dim();
  const Mat u = random_unitary(rng, d);
  std::vector<Mat> conj;
  for (int i = 0; i < static_cast<int>(a.algebra()->dim()); ++i) conj.push_back(u * a.basis(i) * u.adjoint());
  const Representation b(a.algebra(), conj, a.central());
  const double algebra_residual = intertwiner_check(a, b, u);
  rec.at_most("flow.intertwiner.algebra", "AC13", algebra_residual, 1e-9);

  const Mat v = random_unitary(rng, d);
  double worst = 0.0;
  int separated = 0;
  json distances = json::array();
  for (int k = 0; k < 10; ++k) {
    const AlgebraCurve xi = random_curve(rng, a.algebra()->dim(), 0.5);
    const Vec psi = random_unit(rng, d);
    const Vec end_a = integrate_ode(a, xi, psi, 1000).endpoint();
    worst = std::max(worst, (u * end_a - integrate_ode(b, xi, u * psi, 1000).endpoint()).norm());
    const double miss = (v * end_a - integrate_ode(b, xi, v * psi, 1000).endpoint()).norm();
    distances.push_back(miss);
    if (miss >= 1e-2) ++separated;
  }
  rec.at_most("flow.intertwiner.endpoints", "AC13", worst, 1e-6);
  rec.at_least("flow.intertwiner.random_unitary_separates", "AC13", separated, 9.0);
  r.detail["non_intertwiner_endpoint_residuals"] = distances;
  r.detail["non_intertwiner_algebra_residual"] = intertwiner_check(a, b, v);
}

void path_calculus(std::mt19937_64& rng, Recorder& rec, SuiteReport& r) {
  const Representation spin = spin_representation(1.0);
  const Index n = spin.algebra()->dim();
  const Vec x = unit(n, 1) + 0.5 * unit(n, 2);
  const Vec psi0 = Vec::Unit(spin.dim(), 0);
  auto product_rule = [&](int nodes, int k) {
    const AlgebraPath xi = AlgebraPath::from_function([&](double t) -> Vec { return std::sin(2 * kPi * t) * x; }, nodes);
    return product_rule_check(spin, xi, integrate_ode(spin, xi, psi0, nodes), k);
  };
  const double pr1000 = product_rule(1000, 1);
  const double pr2000 = product_rule(2000, 1);
  rec.at_most("pathflow.product_rule.k1", "pathflow", pr1000, 1e-4);
  rec.at_most("pathflow.product_rule.k1_refinement", "pathflow", std::abs(std::log2(pr1000 / pr2000) - 2.0), 0.5);
  rec.at_most("pathflow.product_rule.k2", "pathflow", product_rule(1000, 2), 1e-3);

  // Maurer-Cartan on exp(sX)exp(tY) with random skew-Hermitian X, Y of unit norm
  auto skew = [&] {
    Mat m(4, 4);
    for (Index j = 0; j < 4; ++j) m.col(j) = random_vec(rng, 4, true);
    const Mat s = m - m.adjoint();
    return Mat(s / s.norm());
  };
  const Mat X = skew(), Y = skew();
  auto family = [&](double s, double t) { return Mat(expm_skew(s * X) * expm_skew(t * Y)); };
  const double mc64 = maurer_cartan_residual(sample_family(family, 64));
  const double mc32 = maurer_cartan_residual(sample_family(family, 32));
  rec.at_most("pathflow.maurer_cartan.grid64", "pathflow", mc64, 1e-4);
  rec.at_most("pathflow.maurer_cartan.refinement", "pathflow", std::abs(std::log2(mc32 / mc64) - 2.0), 0.5);
  MatrixGrid bad = sample_family(family, 64);
  bad.at(30, 30) += 1e-2 * Mat::Identity(4, 4);
  rec.at_least("pathflow.maurer_cartan.corrupted", "pathflow", maurer_cartan_residual(bad), 1e-2);

  const AlgebraCurve xi = random_curve(rng, n, 0.7);
  rec.at_most("pathflow.endpoint_unitary", "pathflow", unitarity_defect(endpoint_unitary(spin, xi, 1000)), 1e-7);
  const Vec a = random_unit(rng, spin.dim()), b = random_unit(rng, spin.dim());
  const Trajectory ta = integrate_ode(spin, xi, a, 1000), tb = integrate_ode(spin, xi, b, 1000);
  double drift = 0.0;
  const cplx z0 = a.dot(b);
  for (std::size_t k = 0; k < ta.states.size(); ++k) drift = std::max(drift, std::abs(ta.states[k].dot(tb.states[k]) - z0));
  rec.at_most("pathflow.inner_product_conserved", "pathflow", drift, 1e-8);
  r.detail["lipschitz_estimate"] = lipschitz_probe(spin, xi, random_curve(rng, n, 1.0), a);
}

}  // namespace

void flow_suite(const Options& opt, SuiteReport& r) {
  auto rng = suite_rng(opt.seed, "flow");
  Recorder rec(r);
  const Fock f = load_fock(opt);
  unitarity_and_order(f, rec, r);
  homotopy(f, rec, r);
  group_law(f, rng, rec);
  intertwiners(rng, rec, r);
  path_calculus(rng, rec, r);
}

}  // namespace projrep::suites
