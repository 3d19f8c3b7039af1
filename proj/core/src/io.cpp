#include "projrep/io.hpp"

#include <cmath>
#include <fstream>
#include <map>

#include "projrep/errors.hpp"

namespace projrep {

namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorKind::Schema, msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    schema(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return get_as<T>(j, key);
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Vec& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

json to_json(const Mat& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(to_json(Vec(m.row(r).transpose())));
  return out;
}

cplx cplx_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  schema("expected a number or [re, im], got " + j.dump());
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) schema("expected an array of coefficients");
  Vec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = cplx_from_json(j[i]);
  return v;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) schema("expected a nonempty list of matrix rows");
  const auto rows = static_cast<Index>(j.size());
  const auto cols = static_cast<Index>(j[0].is_array() ? j[0].size() : 0);
  Mat m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Vec row = vec_from_json(j[static_cast<std::size_t>(r)]);
    if (row.size() != cols) schema("ragged matrix rows");
    m.row(r) = row.transpose();
  }
  return m;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    schema(path + ": " + e.what());
  }
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

AlgebraConfig algebra_from_json(const json& j) {
  AlgebraConfig cfg;
  cfg.name = get_or<std::string>(j, "name", "");
  const auto names = get_as<std::vector<std::string>>(j, "basis");
  if (names.empty()) schema("empty basis");
  const int n = static_cast<int>(names.size());
  const std::string f = get_or<std::string>(j, "field", "real");
  if (f != "real" && f != "complex") schema("field must be 'real' or 'complex'");
  std::vector<StructureConstant> constants;
  for (const auto& b : field(j, "brackets")) {
    if (!b.is_array() || b.size() != 4 || !b[0].is_number_integer() || !b[1].is_number_integer() ||
        !b[2].is_number_integer()) {
      schema("bracket entries are [i, j, k, value]");
    }
    const int i = b[0].get<int>(), jj = b[1].get<int>(), k = b[2].get<int>();
    if (i < 0 || jj < 0 || k < 0 || i >= n || jj >= n || k >= n) schema("bracket index out of range: " + b.dump());
    constants.push_back({i, jj, k, cplx_from_json(b[3])});
  }
  std::optional<Truncation> trunc;
  if (j.contains("modes")) {
    Truncation t;
    t.modes = get_as<std::vector<double>>(j, "modes");
    if (static_cast<int>(t.modes.size()) != n) schema("one mode label per basis element");
    t.cutoff = get_as<double>(j, "cutoff");
    trunc = t;
  }
  try {
    cfg.algebra = std::make_shared<LieAlgebra>(names, f == "real" ? Field::Real : Field::Complex, constants, trunc);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidArgument) throw;
    schema(e.what());
  }
  if (j.contains("derivation")) {
    cfg.derivation = mat_from_json(j.at("derivation"));
    if (cfg.derivation->rows() != n || cfg.derivation->cols() != n) schema("derivation must be dim x dim");
  }
  cfg.period = get_or<double>(j, "period", 1.0);
  if (!(cfg.period > 0.0)) schema("period must be positive");
  return cfg;
}

json algebra_to_json(const LieAlgebra& alg, const std::string& name) {
  json j;
  if (!name.empty()) j["name"] = name;
  j["field"] = alg.field() == Field::Real ? "real" : "complex";
  j["basis"] = alg.names();
  json br = json::array();
  for (const auto& c : alg.sparse_constants()) {
    json v = c.value.imag() == 0.0 ? json(c.value.real()) : to_json(c.value);
    br.push_back(json::array({c.i, c.j, c.k, v}));
  }
  j["brackets"] = br;
  if (alg.truncation()) {
    j["modes"] = alg.truncation()->modes;
    j["cutoff"] = alg.truncation()->cutoff;
  }
  return j;
}

json cochain_to_json(const Cochain& c) {
  json j;
  j["degree"] = c.degree();
  json entries = json::array();
  const int n = static_cast<int>(c.dim());
  if (c.degree() == 1) {
    for (int i = 0; i < n; ++i)
      if (c.at(i) != 0.0) entries.push_back(json::array({i, to_json(c.at(i))}));
  } else if (c.degree() == 2) {
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k)
        if (c.at(i, k) != 0.0) entries.push_back(json::array({i, k, to_json(c.at(i, k))}));
  } else {
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
          if (c.at(i, k, l) != 0.0) entries.push_back(json::array({i, k, l, to_json(c.at(i, k, l))}));
  }
  j["entries"] = entries;
  return j;
}

Cochain cochain_from_json(const AlgebraPtr& alg, const json& j) {
  const int degree = get_as<int>(j, "degree");
  if (degree < 1 || degree > 3) schema("cochain degree must be 1, 2 or 3");
  Cochain c(alg, degree);
  const int n = static_cast<int>(alg->dim());
  for (const auto& e : field(j, "entries")) {
    if (!e.is_array() || static_cast<int>(e.size()) != degree + 1) schema("cochain entry has wrong arity");
    std::vector<int> idx;
    for (int k = 0; k < degree; ++k) {
      if (!e[static_cast<std::size_t>(k)].is_number_integer()) schema("cochain index must be an integer");
      const int v = e[static_cast<std::size_t>(k)].get<int>();
      if (v < 0 || v >= n) schema("cochain index out of range");
      idx.push_back(v);
    }
    const cplx v = cplx_from_json(e[static_cast<std::size_t>(degree)]);
    if (degree == 1) c.set(idx[0], v);
    if (degree == 2) c.set(idx[0], idx[1], v);
    if (degree == 3) c.set(idx[0], idx[1], idx[2], v);
  }
  return c;
}

Representation representation_from_json(const json& j) {
  const AlgebraConfig cfg = algebra_from_json(field(j, "algebra"));
  const json& mats = field(j, "matrices");
  if (!mats.is_object()) schema("matrices must map basis names to matrices");
  std::vector<Mat> list;
  for (const auto& name : cfg.algebra->names()) {
    if (!mats.contains(name)) schema("no matrix for basis element '" + name + "'");
    list.push_back(mat_from_json(mats.at(name)));
  }
  std::optional<CentralData> central;
  if (j.contains("central")) {
    central = CentralData{get_as<int>(j.at("central"), "index"), get_or<double>(j.at("central"), "level", 1.0)};
  }
  const Index exact = get_or<Index>(j, "exact_dim", -1);
  return Representation(cfg.algebra, std::move(list), central, exact);
}

json representation_to_json(const Representation& rep) {
  json j;
  j["algebra"] = algebra_to_json(*rep.algebra());
  json mats = json::object();
  for (std::size_t i = 0; i < rep.algebra()->names().size(); ++i)
    mats[rep.algebra()->names()[i]] = to_json(rep.basis(static_cast<int>(i)));
  j["matrices"] = mats;
  if (rep.central()) j["central"] = {{"index", rep.central()->index}, {"level", rep.central()->level}};
  if (rep.exact_dim() != rep.dim()) j["exact_dim"] = rep.exact_dim();
  return j;
}

AlgebraPath path_from_json(const json& j) {
  const json& nodes = field(j, "nodes");
  if (!nodes.is_array() || nodes.size() < 2) schema("path needs a list of nodes");
  const auto n = static_cast<int>(nodes.size()) - 1;
  std::vector<Vec> values;
  for (int k = 0; k <= n; ++k) {
    const json& e = nodes[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number()) schema("path nodes are [t, coefficients]");
    if (std::abs(e[0].get<double>() - static_cast<double>(k) / n) > 1e-9) schema("path times must be uniform k/N");
    values.push_back(vec_from_json(e[1]));
  }
  try {
    return AlgebraPath(std::move(values), get_or<bool>(j, "sitting", false));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::DimensionMismatch) schema(e.what());
    throw;
  }
}

json path_to_json(const AlgebraPath& p) {
  json nodes = json::array();
  const int n = p.intervals();
  for (int k = 0; k <= n; ++k)
    nodes.push_back(json::array({static_cast<double>(k) / n, to_json(p.nodes()[static_cast<std::size_t>(k)])}));
  return {{"nodes", nodes}, {"sitting", p.sitting()}};
}

HeisenbergModel heisenberg_from_json(const json& j) {
  if (get_as<std::string>(j, "model") != "heisenberg") schema("not a Heisenberg model config");
  const int modes = get_or<int>(j, "modes", 1);
  auto scales = get_or<std::vector<double>>(j, "scales", {});
  try {
    return make_heisenberg(modes, scales, get_or<int>(j, "fock_cutoff", 40));
  } catch (const Error& e) {
    schema(e.what());
  }
}

WittModel witt_from_json(const json& j) {
  if (get_as<std::string>(j, "model") != "witt") schema("not a Witt model config");
  return make_witt(get_or<int>(j, "n_max", 6), get_or<int>(j, "quadrature_points", 2048));
}

LoopModel loop_from_json(const json& j) {
  if (get_as<std::string>(j, "model") != "loop") schema("not a loop model config");
  const std::string k = get_or<std::string>(j, "k", "su2");
  if (k != "su2" && k != "su3") schema("loop model k must be 'su2' or 'su3'");
  try {
    return make_loop(k == "su2" ? LoopType::SU2 : LoopType::SU3, get_or<int>(j, "order", 1),
                     get_or<double>(j, "n_max", 3.0), get_or<double>(j, "prefactor", 1.0 / (8.0 * kPi)),
                     get_or<double>(j, "kappa_coefficient", 1.0), get_or<int>(j, "quadrature_points", 2048));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) schema(e.what());
    throw;
  }
}

}  // namespace projrep
