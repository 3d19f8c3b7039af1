#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "projrep/io.hpp"

namespace projrep::suites {

struct Case {
  std::string id;
  std::string criterion;  // acceptance tag such as "AC3", or a module name
  double residual = 0.0;
  double tolerance = 0.0;
  std::string comparison = "<=";
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  double tol_scale = 1.0;
  std::vector<Case> cases;
  json series = json::object();  // plot-bound data keyed by series name
  json detail = json::object();
  double wall_time = 0.0;

  bool passed() const;
  std::vector<const Case*> failures() const;
};

struct Options {
  std::uint64_t seed = 7;
  double tol_scale = 1.0;
  std::string data_dir;        // empty: default_data_dir()
  std::optional<json> config;  // replaces the bundled inputs where it applies
};

// PROJREP_DATA_DIR if set, else the directory bundled at build time.
std::string default_data_dir();
json load_data(const Options& opt, const std::string& file);

const std::vector<std::string>& suite_names();
// Throws Error(Schema) for an unknown suite name.
SuiteReport run_suite(const std::string& name, const Options& opt);

// Cases sorted by id; wall_time is written only when requested.
json report_to_json(const SuiteReport& r, bool include_wall_time = true);

// ---- helpers shared by the suite implementations ------------------------------

class Recorder {
 public:
  Recorder(SuiteReport& r) : r_(r) {}
  // residual ≤ tol·scale; NaN fails.
  void at_most(const std::string& id, const std::string& criterion, double residual, double tol);
  // residual ≥ bound loosened by the scale; NaN fails.
  void at_least(const std::string& id, const std::string& criterion, double residual, double bound);

 private:
  SuiteReport& r_;
};

std::mt19937_64 suite_rng(std::uint64_t seed, const std::string& suite);
Vec random_vec(std::mt19937_64& rng, Index n, bool complex_entries);
Vec random_unit(std::mt19937_64& rng, Index n);
Mat random_unitary(std::mt19937_64& rng, Index n);

void cohomology_suite(const Options& opt, SuiteReport& r);
void flow_suite(const Options& opt, SuiteReport& r);
void extraction_suite(const Options& opt, SuiteReport& r);
void models_suite(const Options& opt, SuiteReport& r);

}  // namespace projrep::suites
