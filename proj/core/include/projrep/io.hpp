#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "projrep/cohomology.hpp"
#include "projrep/models.hpp"
#include "projrep/pathflow.hpp"
#include "projrep/representation.hpp"

namespace projrep {

using json = nlohmann::json;

// Complex numbers are written as [re, im]; plain numbers are accepted on input.
json to_json(cplx z);
json to_json(const Vec& v);
json to_json(const Mat& m);  // list of rows
cplx cplx_from_json(const json& j);
Vec vec_from_json(const json& j);
Mat mat_from_json(const json& j);

// Reads and parses a file; I/O and parse errors are reported as Schema errors.
json load_json(const std::string& path);
void save_json(const std::string& path, const json& j);

// Algebra file:
//   { "name", "field": "real" | "complex", "basis": [names],
//     "brackets": [[i, j, k, value], ...], "modes"?, "cutoff"?,
//     "derivation"?: matrix, "period"?: number }
struct AlgebraConfig {
  std::string name;
  AlgebraPtr algebra;
  std::optional<Mat> derivation;
  double period = 1.0;
};

// Structural problems raise Schema; a bracket table violating Jacobi raises
// JacobiViolation naming the triple.
AlgebraConfig algebra_from_json(const json& j);
json algebra_to_json(const LieAlgebra& alg, const std::string& name = "");

// { "degree": n, "entries": [[i, j, value], ...] }
json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const AlgebraPtr& alg, const json& j);

// { "algebra": {...}, "matrices": {name: matrix}, "central"?: {"index", "level"}, "exact_dim"? }
Representation representation_from_json(const json& j);
json representation_to_json(const Representation& rep);

// { "nodes": [[t, coeffs], ...], "sitting": bool }; times must be k/N.
AlgebraPath path_from_json(const json& j);
json path_to_json(const AlgebraPath& p);

// Model configs: { "model": "heisenberg" | "witt" | "loop", ... }
HeisenbergModel heisenberg_from_json(const json& j);
WittModel witt_from_json(const json& j);
LoopModel loop_from_json(const json& j);

}  // namespace projrep
