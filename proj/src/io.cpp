#include "knitframe/io.hpp"

namespace knitframe::io {

void parse_error(const std::string& path, const std::string& message) {
  throw Error(ErrorKind::ConfigParse, path + ": " + message);
}

namespace {

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) parse_error(path + "." + key, "missing field");
  return j.at(key);
}

int int_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) parse_error(path, "expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) parse_error(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(int_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<int>> int_table(const json& j, const std::string& path) {
  if (!j.is_array()) parse_error(path, "expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(int_list(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const CVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Complex complex_from_json(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  parse_error(path, "expected a number or an [re, im] pair");
}

CVector vector_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) parse_error(path, "expected an array");
  CVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Index>(i)) = complex_from_json(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

json group_to_json(const FiniteGroup& g) {
  return {{"order", g.order()}, {"cayley", g.cayley()}, {"labels", g.labels()}};
}

FiniteGroup group_from_json(const json& j, const std::string& path) {
  const CayleyTable table = int_table(require(j, "cayley", path), path + ".cayley");
  if (j.contains("order") && int_from_json(j["order"], path + ".order") != static_cast<int>(table.size()))
    parse_error(path + ".order", "does not match the table size");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) parse_error(path + ".labels", "expected an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) parse_error(path + ".labels", "expected an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return FiniteGroup::from_cayley_table(table, std::move(labels));
}

GroupSetup group_setup_from_json(const json& j, const std::string& path) {
  const json& type = require(j, "type", path);
  if (!type.is_string()) parse_error(path + ".type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "dihedral") {
    const int n = int_from_json(require(j, "n", path), path + ".n");
    if (n < 1) parse_error(path + ".n", "must be >= 1");
    KnitProduct k = build_dihedral(n);
    return {k.group, k.factorization};
  }
  if (t == "cayley") {
    auto g = std::make_shared<const FiniteGroup>(group_from_json(j, path));
    const auto n_subset = int_list(require(j, "n_subset", path), path + ".n_subset");
    const auto h_subset = int_list(require(j, "h_subset", path), path + ".h_subset");
    return {g, factor_internal(g, n_subset, h_subset)};
  }
  if (t == "knit") {
    const FiniteGroup ng = group_from_json(require(j, "n_group", path), path + ".n_group");
    const FiniteGroup hg = group_from_json(require(j, "h_group", path), path + ".h_group");
    KnitProduct k = knit_external(ng, hg, int_table(require(j, "alpha", path), path + ".alpha"),
                                  int_table(require(j, "beta", path), path + ".beta"));
    return {k.group, k.factorization};
  }
  parse_error(path + ".type", "unknown group type '" + t + "'");
}

UnitaryRepresentation representation_from_json(const json& j, GroupPtr group, double tol,
                                               const std::string& path) {
  const json& type = require(j, "type", path);
  if (!type.is_string()) parse_error(path + ".type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "left_regular") return left_regular(std::move(group));
  if (t != "matrices") parse_error(path + ".type", "unknown representation type '" + t + "'");

  const int d = int_from_json(require(j, "dim", path), path + ".dim");
  if (d < 1) parse_error(path + ".dim", "must be >= 1");
  const json& entries = require(j, "entries", path);
  if (!entries.is_array() || static_cast<int>(entries.size()) != group->order())
    parse_error(path + ".entries", "expected one matrix per group element");
  std::vector<CMatrix> mats;
  for (std::size_t g = 0; g < entries.size(); ++g) {
    const std::string gp = path + ".entries[" + std::to_string(g) + "]";
    if (!entries[g].is_array() || static_cast<int>(entries[g].size()) != d)
      parse_error(gp, "expected " + std::to_string(d) + " rows");
    CMatrix m(d, d);
    for (int r = 0; r < d; ++r) {
      const CVector row = vector_from_json(entries[g][r], gp + "[" + std::to_string(r) + "]");
      if (row.size() != d) parse_error(gp + "[" + std::to_string(r) + "]", "wrong row length");
      m.row(r) = row.transpose();
    }
    mats.push_back(std::move(m));
  }
  return validate_representation(std::move(group), std::move(mats), tol);
}

CVector vector_spec_from_json(const json& j, Index dim, Rng& rng, const std::string& path) {
  CVector v;
  if (j.is_object() && j.contains("delta")) {
    const int g = int_from_json(j["delta"], path + ".delta");
    if (g < 0 || g >= dim) parse_error(path + ".delta", "index out of range");
    v = CVector::Zero(dim);
    v(g) = 1.0;
  } else if (j.is_object() && j.contains("random")) {
    v = random_complex_vector(rng, dim);
  } else {
    v = vector_from_json(j, path);
  }
  if (v.size() != dim)
    throw Error(ErrorKind::ValidationFailure,
                path + ": length " + std::to_string(v.size()) + " differs from dimension " +
                    std::to_string(dim));
  return v;
}

json matrix_dump(const std::string& name, const CMatrix& m) {
  json data = json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) data.push_back(to_json(m(r, c)));
  return {{"name", name}, {"shape", {m.rows(), m.cols()}}, {"data", std::move(data)}};
}

CMatrix matrix_from_dump(const json& j) {
  const auto& shape = require(j, "shape", "dump");
  const Index rows = shape.at(0).get<Index>(), cols = shape.at(1).get<Index>();
  const CVector flat = vector_from_json(require(j, "data", "dump"), "dump.data");
  if (flat.size() != rows * cols) parse_error("dump.data", "size does not match the shape");
  CMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = flat(r * cols + c);
  return m;
}

}  // namespace knitframe::io
