#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>

#include "projrep/errors.hpp"
#include "suites.hpp"

#ifndef PROJREP_DEFAULT_DATA_DIR
#define PROJREP_DEFAULT_DATA_DIR "data"
#endif

namespace projrep::suites {

bool SuiteReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const Case& c) { return c.pass; });
}

std::vector<const Case*> SuiteReport::failures() const {
  std::vector<const Case*> out;
  for (const auto& c : cases)
    if (!c.pass) out.push_back(&c);
  return out;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("PROJREP_DATA_DIR"); env && *env) return env;
  return PROJREP_DEFAULT_DATA_DIR;
}

json load_data(const Options& opt, const std::string& file) {
  const std::string dir = opt.data_dir.empty() ? default_data_dir() : opt.data_dir;
  return load_json(dir + "/" + file);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cohomology", "flow", "extraction", "models"};
  return names;
}

SuiteReport run_suite(const std::string& name, const Options& opt) {
  SuiteReport r;
  r.suite = name;
  r.seed = opt.seed;
  r.tol_scale = opt.tol_scale;
  const auto start = std::chrono::steady_clock::now();
  if (name == "cohomology") {
    cohomology_suite(opt, r);
  } else if (name == "flow") {
    flow_suite(opt, r);
  } else if (name == "extraction") {
    extraction_suite(opt, r);
  } else if (name == "models") {
    models_suite(opt, r);
  } else {
    throw Error(ErrorKind::Schema, "unknown suite '" + name + "'");
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::sort(r.cases.begin(), r.cases.end(), [](const Case& a, const Case& b) { return a.id < b.id; });
  return r;
}

json report_to_json(const SuiteReport& r, bool include_wall_time) {
  json cases = json::array();
  std::vector<const Case*> sorted;
  for (const auto& c : r.cases) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(), [](const Case* a, const Case* b) { return a->id < b->id; });
  for (const Case* c : sorted) {
    // JSON has no NaN; a non-finite residual is written as null and fails.
    json res = std::isfinite(c->residual) ? json(c->residual) : json(nullptr);
    cases.push_back({{"id", c->id},
                     {"criterion", c->criterion},
                     {"residual", res},
                     {"tolerance", c->tolerance},
                     {"comparison", c->comparison},
                     {"pass", c->pass}});
  }
  json j{{"suite", r.suite}, {"seed", r.seed}, {"tol_scale", r.tol_scale}, {"pass", r.passed()},
         {"cases", cases},   {"series", r.series}, {"detail", r.detail}};
  if (include_wall_time) j["wall_time"] = r.wall_time;
  return j;
}

void Recorder::at_most(const std::string& id, const std::string& criterion, double residual, double tol) {
  const double t = tol * r_.tol_scale;
  r_.cases.push_back({id, criterion, residual, t, "<=", !std::isnan(residual) && residual <= t});
}

void Recorder::at_least(const std::string& id, const std::string& criterion, double residual, double bound) {
  // loosening moves the bound down: divide a positive bound, multiply a negative one
  const double t = bound >= 0.0 ? bound / r_.tol_scale : bound * r_.tol_scale;
  r_.cases.push_back({id, criterion, residual, t, ">=", !std::isnan(residual) && residual >= t});
}

std::mt19937_64 suite_rng(std::uint64_t seed, const std::string& suite) {
  // independent streams per suite so running one suite alone reproduces `all`
  std::uint32_t h = 2166136261u;  // FNV-1a of the suite name
  for (unsigned char ch : suite) h = (h ^ ch) * 16777619u;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), h};
  return std::mt19937_64(seq);
}

Vec random_vec(std::mt19937_64& rng, Index n, bool complex_entries) {
  std::normal_distribution<double> nd;
  Vec v(n);
  for (Index i = 0; i < n; ++i) {
    const double re = nd(rng);
    const double im = complex_entries ? nd(rng) : 0.0;
    v(i) = cplx(re, im);
  }
  return v;
}

Vec random_unit(std::mt19937_64& rng, Index n) { return random_vec(rng, n, true).normalized(); }

Mat random_unitary(std::mt19937_64& rng, Index n) {
  Mat g(n, n);
  for (Index j = 0; j < n; ++j) g.col(j) = random_vec(rng, n, true);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(n, n);
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace projrep::suites
