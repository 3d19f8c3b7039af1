#pragma once

#include <functional>
#include <vector>

#include "projrep/group_word.hpp"
#include "projrep/representation.hpp"

namespace projrep {

// Degree-7 smoothstep: 0 on [0, 0.05], 1 on [0.95, 1], monotone in between.
// Arguments outside [0, 1] are clamped.
double sitting_profile(double t);
double sitting_profile_derivative(double t);

using AlgebraCurve = std::function<Vec(double)>;

// Algebra-valued path stored at uniform nodes t_k = k/N, N >= 16, with local
// four-point cubic interpolation.
class AlgebraPath {
 public:
  AlgebraPath(std::vector<Vec> nodes, bool sitting = false);

  static AlgebraPath from_function(const AlgebraCurve& f, int n = 1000, bool sitting = false);
  // t ↦ r′(t)·ξ(r(t)): the velocity of γ(r(t)) when ξ is the velocity of γ.
  // The result vanishes near both ends and carries the sitting flag.
  static AlgebraPath with_sitting_instants(const AlgebraCurve& f, int n = 1000);

  int intervals() const { return static_cast<int>(nodes_.size()) - 1; }
  Index algebra_dim() const { return nodes_.front().size(); }
  const std::vector<Vec>& nodes() const { return nodes_; }
  bool sitting() const { return sitting_; }

  Vec value(double t) const;
  Vec derivative(double t) const;
  Vec second_derivative(double t) const;
  AlgebraCurve curve() const;

  // max |ξ| over nodes inside [0, 0.05] and [0.95, 1].
  double sitting_defect() const;

 private:
  Vec interpolate(double t, int order) const;

  std::vector<Vec> nodes_;
  bool sitting_;
};

// h first, then g: 2ξ_h(2t) on [0, ½], 2ξ_g(2t − 1) on [½, 1].
AlgebraCurve concatenate(const AlgebraCurve& h, const AlgebraCurve& g);

using MatrixCurve = std::function<Mat(double)>;

// δ^R γ(t) = γ′(t)·γ(t)⁻¹ with a central difference of step h.
Mat log_derivative(const MatrixCurve& gamma, double t, double h = 1e-4);

// Two-parameter family γ(s_i, t_j) on a uniform grid over [0, 1]².
struct MatrixGrid {
  int n = 0;
  std::vector<Mat> values;  // row-major: values[i * n + j] = γ(s_i, t_j)

  double step() const { return 1.0 / (n - 1); }
  const Mat& at(int i, int j) const { return values[static_cast<std::size_t>(i * n + j)]; }
  Mat& at(int i, int j) { return values[static_cast<std::size_t>(i * n + j)]; }
};

MatrixGrid sample_family(const std::function<Mat(double, double)>& gamma, int n);

// max over interior points of ‖∂_s δ^R_t − ∂_t δ^R_s − [δ^R_s, δ^R_t]‖_F.
double maurer_cartan_residual(const MatrixGrid& grid);

struct Trajectory {
  std::vector<double> t;
  std::vector<Vec> states;
  double max_drift = 0.0;

  const Vec& endpoint() const { return states.back(); }
};

// Classical RK4 for dψ/dt = π(ξ_t)ψ on [0, 1]. The norm is not projected back;
// a drift above 100·drift_tol raises UnitarityLoss.
Trajectory integrate_ode(const Representation& rep, const AlgebraCurve& xi, const Vec& psi0, int steps,
                         double drift_tol = 1e-8);
Trajectory integrate_ode(const Representation& rep, const AlgebraPath& xi, const Vec& psi0, int steps,
                         double drift_tol = 1e-8);

// ψ_0 ↦ ψ_1 assembled column by column.
Mat endpoint_unitary(const Representation& rep, const AlgebraCurve& xi, int steps);

// One factor exp(a(s, t)·x) of a two-parameter group family; da is ∂_t a.
struct ProfiledFactor {
  Vec x;
  std::function<double(double, double)> a;
  std::function<double(double, double)> da;
};

// γ(s, t) = Π_i exp(a_i(s, t)·x_i).
class GroupFamily {
 public:
  GroupFamily(AlgebraPtr alg, std::vector<ProfiledFactor> factors);

  const AlgebraPtr& algebra() const { return alg_; }
  GroupWord word(double s, double t) const;
  // δ^R_t γ = Σ_i a_i′·Ad(exp(a_1 x_1)···exp(a_{i−1} x_{i−1})) x_i.
  Vec velocity(double s, double t) const;
  AlgebraCurve curve(double s) const;

 private:
  AlgebraPtr alg_;
  std::vector<ProfiledFactor> factors_;
};

struct HomotopyReport {
  std::vector<double> s;
  std::vector<Vec> endpoints;
  double max_deviation = 0.0;
  double endpoint_defect = 0.0;  // max ‖ρ(γ(s,1))ψ₀ − ρ(γ(0,1))ψ₀‖ and ‖ρ(γ(s,0))ψ₀ − ψ₀‖
};

// Integrates along δ^R_t γ^s for each sampled s and compares endpoints. The
// family must fix both ends (checked on ψ₀ within endpoint_tol).
HomotopyReport homotopy_invariance_test(const Representation& rep, const GroupFamily& family, const Vec& psi0,
                                        int steps = 1000, std::vector<double> s_samples = {0.0, 0.25, 0.5, 0.75, 1.0},
                                        double endpoint_tol = 1e-8);

struct GroupLawReport {
  Vec concatenated;  // endpoint along h then g
  Vec composed;      // ρ(g)ρ(h)ψ₀ from two separate integrations
  double residual = 0.0;
};

// Both paths must carry sitting instants.
GroupLawReport group_law_test(const Representation& rep, const AlgebraPath& path_g, const AlgebraPath& path_h,
                              const Vec& psi0, int steps = 1000);

// k = 1: d/dt π(ξ)ψ against π(ξ′)ψ + π(ξ)ψ′.
// k = 2: d²/dt² π(ξ)ψ against π(ξ″)ψ + 2π(ξ′)ψ′ + π(ξ)ψ″.
// Derivatives of ψ and of the product are central differences on the
// trajectory nodes; the maximum over interior nodes is returned.
double product_rule_check(const Representation& rep, const AlgebraPath& xi, const Trajectory& traj, int k = 1);

// ‖ψ_1(ξ + εη) − ψ_1(ξ)‖ / ε, a finite-difference continuity probe.
double lipschitz_probe(const Representation& rep, const AlgebraCurve& xi, const AlgebraCurve& eta,
                       const Vec& psi0, double eps = 1e-4, int steps = 1000);

}  // namespace projrep
