// projrep: verification suites, ODE flows and cohomology reports from JSON configs.
//
//   projrep verify   --suite cohomology|flow|extraction|models|all --seed N [--config F] [--out F] [--tol-scale X]
//   projrep flow     --config F --path P --steps N --out trajectory.csv
//   projrep cocycle  --config F --out report.json
//   projrep plotdata --report R --out-dir D
//
// Exit codes: 0 pass, 1 numerical failure, 2 schema or usage error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "projrep/errors.hpp"
#include "projrep/io.hpp"
#include "projrep/unirep.hpp"
#include "suites.hpp"

using namespace projrep;
namespace fs = std::filesystem;

namespace {

constexpr int kPass = 0;
constexpr int kNumerical = 1;
constexpr int kSchema = 2;

bool is_schema(const Error& e) { return e.kind() == ErrorKind::Schema || e.kind() == ErrorKind::JacobiViolation; }

int report_error(const Error& e) {
  std::cerr << "error: " << e.what() << '\n';
  return is_schema(e) ? kSchema : kNumerical;
}

void write_json(const std::string& out, const json& j) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    save_json(out, j);
  }
}

// ---- verify ------------------------------------------------------------------

suites::SuiteReport merge(std::vector<suites::SuiteReport> parts, std::uint64_t seed, double tol_scale) {
  suites::SuiteReport all;
  all.suite = "all";
  all.seed = seed;
  all.tol_scale = tol_scale;
  for (auto& p : parts) {
    all.cases.insert(all.cases.end(), p.cases.begin(), p.cases.end());
    for (auto& [k, v] : p.series.items()) all.series[k] = v;
    all.detail[p.suite] = p.detail;
    all.wall_time += p.wall_time;
  }
  std::sort(all.cases.begin(), all.cases.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return all;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& config, const std::string& out,
               double tol_scale) {
  suites::Options opt;
  opt.seed = seed;
  opt.tol_scale = tol_scale;
  suites::SuiteReport report;
  try {
    if (!config.empty()) {
      opt.config = load_json(config);
      // Algebra files are validated up front so a broken table is a schema error.
      if (!opt.config->contains("model")) algebra_from_json(*opt.config);
    }
    if (suite == "all") {
      std::vector<suites::SuiteReport> parts;
      for (const auto& name : suites::suite_names()) parts.push_back(suites::run_suite(name, opt));
      report = merge(std::move(parts), seed, tol_scale);
    } else {
      report = suites::run_suite(suite, opt);
    }
  } catch (const Error& e) {
    return report_error(e);
  }
  write_json(out, suites::report_to_json(report));
  const auto failed = report.failures();
  for (const auto* c : failed)
    std::cerr << "FAIL " << c->id << " [" << c->criterion << "] residual " << c->residual << ' ' << c->comparison
              << ' ' << c->tolerance << '\n';
  return failed.empty() ? kPass : kNumerical;
}

// ---- flow --------------------------------------------------------------------

int cmd_flow(const std::string& config, const std::string& path_file, int steps, const std::string& out) {
  try {
    const json cfg = load_json(config);
    std::optional<Representation> rep;
    Vec psi0;
    if (cfg.value("model", "") == "heisenberg") {
      const HeisenbergModel m = heisenberg_from_json(cfg);
      rep.emplace(fock_representation(m, cfg.value("level", 1.0)));
      psi0 = fock_vacuum(m);
    } else {
      rep.emplace(representation_from_json(cfg));
      psi0 = cfg.contains("psi0") ? vec_from_json(cfg.at("psi0")).normalized() : Vec::Unit(rep->dim(), 0);
    }
    if (psi0.size() != rep->dim()) throw Error(ErrorKind::Schema, "psi0 does not match the representation");
    const AlgebraPath path = path_from_json(load_json(path_file));
    if (path.algebra_dim() != rep->algebra()->dim()) {
      throw Error(ErrorKind::Schema, "path coefficients do not match the algebra dimension");
    }

    const Trajectory tr = integrate_ode(*rep, path, psi0, steps);
    std::ofstream csv(out);
    if (!csv) throw Error(ErrorKind::InvalidArgument, "cannot write " + out);
    const Index shown = std::min<Index>(rep->dim(), 4);
    csv << "t,norm";
    for (Index k = 0; k < shown; ++k) csv << ",amp" << k;
    csv << '\n' << std::setprecision(17);
    for (std::size_t i = 0; i < tr.t.size(); ++i) {
      csv << tr.t[i] << ',' << tr.states[i].norm();
      for (Index k = 0; k < shown; ++k) csv << ',' << std::abs(tr.states[i](k));
      csv << '\n';
    }

    json summary{{"steps", steps}, {"max_drift", tr.max_drift}, {"endpoint", to_json(tr.endpoint())}};
    bool constant = true;
    for (const auto& v : path.nodes()) constant = constant && (v - path.nodes().front()).norm() == 0.0;
    if (constant) {
      const Vec exact = expm(rep->operator()(path.nodes().front())) * psi0;
      summary["oracle_deviation"] = (tr.endpoint() - exact).norm();
    }
    save_json(out + ".summary.json", summary);
  } catch (const Error& e) {
    return report_error(e);
  }
  return kPass;
}

// ---- cocycle -----------------------------------------------------------------

json h2_json(const AlgebraPtr& alg) {
  const H2Result h = h2(alg);
  json reps = json::array();
  for (const auto& w : h.cocycle_basis) reps.push_back(cochain_to_json(w));
  return {{"dimension", h.dimension},
          {"cocycle_dim", h.detail.cocycle_dim},
          {"coboundary_dim", h.detail.coboundary_dim},
          {"closure_residual", h.detail.closure_residual},
          {"representatives", reps}};
}

json sequence_json(const AlgebraPtr& alg, const Mat& d, double period) {
  const ExactSequenceReport s = exact_sequence_report(alg, d, period);
  return {{"first_space", {{"label", s.first_space_label}, {"dimension", s.dim_first}}},
          {"dim_h2_invariant", s.dim_h2_invariant},
          {"dim_h2_invariant_from_sequence", s.dim_h2_invariant_from_sequence},
          {"dim_h2_semidirect", s.dim_h2_semidirect},
          {"dim_h1_kernel", s.dim_h1_kernel},
          {"ranks", {{"alpha", s.rank_alpha}, {"beta", s.rank_beta}, {"gamma", s.rank_gamma}}},
          {"residuals",
           {{"beta_alpha", s.beta_alpha_residual},
            {"gamma_beta", s.gamma_beta_residual},
            {"alpha_invariance", s.alpha_invariance_residual},
            {"beta_cocycle", s.beta_cocycle_residual},
            {"gamma_target", s.gamma_target_residual}}},
          {"exact", {{"h2_invariant", s.exact_at_h2_invariant}, {"h2_semidirect", s.exact_at_h2_semidirect}}}};
}

json model_cocycle_json(const Cochain& omega, const Mat& d) {
  return {{"cocycle", cochain_to_json(omega)},
          {"closure_residual", differential(omega).max_abs()},
          {"d_invariance_defect", d_invariance_defect(omega, d)}};
}

int cmd_cocycle(const std::string& config, const std::string& out) {
  json report;
  try {
    const json cfg = load_json(config);
    const std::string model = cfg.value("model", "");
    AlgebraPtr alg;
    std::optional<Mat> d;
    double period = 1.0;
    if (model == "witt") {
      const WittModel w = witt_from_json(cfg);
      alg = w.algebra;
      d = witt_derivation(w);
      period = kWittPeriod;
      report["model_cocycle"] = model_cocycle_json(gelfand_fuks_cochain(w), *d);
    } else if (model == "loop") {
      const LoopModel l = loop_from_json(cfg);
      alg = l.algebra;
      d = loop_derivation(l);
      period = loop_period(l);
      report["model_cocycle"] = model_cocycle_json(km_cochain(l), *d);
    } else if (model == "heisenberg") {
      const HeisenbergModel m = heisenberg_from_json(cfg);
      alg = heisenberg_extension(m).total;
    } else if (model.empty()) {
      const AlgebraConfig a = algebra_from_json(cfg);
      alg = a.algebra;
      d = a.derivation;
      period = a.period;
      report["name"] = a.name;
    } else {
      throw Error(ErrorKind::Schema, "unknown model '" + model + "'");
    }
    report["dim"] = alg->dim();
    report["jacobi_residual"] = alg->jacobi_residual();
    report["h2"] = h2_json(alg);
    if (d) {
      report["h2_invariant"] = h2_invariant(alg, *d).dimension;
      report["exact_sequence"] = sequence_json(alg, *d, period);
    }
  } catch (const Error& e) {
    return report_error(e);
  }
  write_json(out, report);
  return kPass;
}

// ---- plotdata ----------------------------------------------------------------

int cmd_plotdata(const std::string& report_path, const std::string& out_dir) {
  try {
    const json r = load_json(report_path);
    if (!r.is_object() || !r.contains("series") || !r.at("series").is_object() || r.at("series").empty()) {
      throw Error(ErrorKind::Schema, "report has no plot series");
    }
    const json& s = r.at("series");
    fs::create_directories(out_dir);
    int written = 0;
    auto rows = [&](const char* key) -> const json& {
      const json& v = s.at(key);
      if (!v.is_array() || v.empty()) throw Error(ErrorKind::Schema, std::string("series '") + key + "' is empty");
      return v;
    };
    auto num = [](const json& row, const char* key) {
      if (!row.contains(key) || !row.at(key).is_number()) {
        throw Error(ErrorKind::Schema, std::string("series row lacks numeric '") + key + "'");
      }
      return row.at(key).get<double>();
    };
    if (s.contains("convergence")) {
      const json& v = rows("convergence");
      // least-squares slope of log(error) against log(steps)
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const double n = static_cast<double>(v.size());
      for (const auto& row : v) {
        const double x = std::log(num(row, "steps")), y = std::log(num(row, "error"));
        sx += x, sy += y, sxx += x * x, sxy += x * y;
      }
      const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      std::ofstream f(out_dir + "/convergence.csv");
      f << "steps,error,slope\n" << std::setprecision(17);
      for (const auto& row : v) f << num(row, "steps") << ',' << num(row, "error") << ',' << slope << '\n';
      ++written;
    }
    if (s.contains("gelfand_fuks_n3")) {
      std::ofstream f(out_dir + "/gelfand_fuks_n3.csv");
      f << "n,value,fitted_coefficient\n" << std::setprecision(17);
      for (const auto& row : rows("gelfand_fuks_n3"))
        f << num(row, "n") << ',' << num(row, "value") << ',' << num(row, "fitted_coefficient") << '\n';
      ++written;
    }
    if (s.contains("norm_drift")) {
      std::ofstream f(out_dir + "/norm_drift.csv");
      f << "t,drift\n" << std::setprecision(17);
      for (const auto& row : rows("norm_drift")) f << num(row, "t") << ',' << num(row, "drift") << '\n';
      ++written;
    }
    if (written == 0) throw Error(ErrorKind::Schema, "report has no recognised plot series");
  } catch (const Error& e) {
    return report_error(e);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSchema;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective representation verification harness"};
  app.require_subcommand(1);

  std::string suite, config, out, path_file, report, out_dir;
  std::uint64_t seed = 0;
  int steps = 1000;
  double tol_scale = 1.0;

  auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  verify->add_option("--suite", suite, "cohomology | flow | extraction | models | all")->required();
  verify->add_option("--seed", seed, "random seed")->required();
  verify->add_option("--config", config, "algebra or model config replacing the bundled inputs");
  verify->add_option("--out", out, "report path (stdout if omitted)");
  verify->add_option("--tol-scale", tol_scale, "loosen every bound by this factor")->check(CLI::PositiveNumber);

  auto* flow = app.add_subcommand("flow", "integrate the regularity ODE along a path");
  flow->add_option("--config", config, "model config or representation file")->required();
  flow->add_option("--path", path_file, "path JSON")->required();
  flow->add_option("--steps", steps, "RK4 steps")->check(CLI::PositiveNumber);
  flow->add_option("--out", out, "trajectory CSV")->required();
  flow->add_option("--seed", seed, "accepted for uniformity; the flow is deterministic");

  auto* cocycle = app.add_subcommand("cocycle", "cohomology and exact-sequence report for an algebra");
  cocycle->add_option("--config", config, "algebra file or model config")->required();
  cocycle->add_option("--out", out, "report path (stdout if omitted)");
  cocycle->add_option("--seed", seed, "accepted for uniformity; the report is deterministic");

  auto* plot = app.add_subcommand("plotdata", "turn report series into CSV files");
  plot->add_option("--report", report, "suite report JSON")->required();
  plot->add_option("--out-dir", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kSchema;
  }

  if (*verify) {
    const auto& names = suites::suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
      std::cerr << "error: unknown suite '" << suite << "'\n";
      return kSchema;
    }
    return cmd_verify(suite, seed, config, out, tol_scale);
  }
  if (*flow) return cmd_flow(config, path_file, steps, out);
  if (*cocycle) return cmd_cocycle(config, out);
  return cmd_plotdata(report, out_dir);
}
