#ifndef KNITFRAME_IO_HPP
#define KNITFRAME_IO_HPP

// JSON forms of groups, representations, vectors and matrices. Complex
// numbers are [re, im] pairs; element indices are 0-based.

#include <string>
#include <vector>

#include <json.hpp>

#include "knitframe/group.hpp"
#include "knitframe/random.hpp"
#include "knitframe/representation.hpp"

namespace knitframe::io {

using nlohmann::json;

/// Throws ConfigParse naming `path`.
[[noreturn]] void parse_error(const std::string& path, const std::string& message);

json to_json(Complex z);
json to_json(const CVector& v);
Complex complex_from_json(const json& j, const std::string& path);
CVector vector_from_json(const json& j, const std::string& path);

/// {"order", "cayley", "labels"}.
json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j, const std::string& path);

struct GroupSetup {
  GroupPtr group;
  KnitFactorization factorization;
};

/// {"type": "dihedral", "n"} | {"type": "cayley", "order", "cayley", "labels",
/// "n_subset", "h_subset"} | {"type": "knit", "n_group", "h_group", "alpha", "beta"}.
GroupSetup group_setup_from_json(const json& j, const std::string& path);

/// {"type": "left_regular"} | {"type": "matrices", "dim", "entries"} with
/// entries[g] a d×d nested array of [re, im].
UnitaryRepresentation representation_from_json(const json& j, GroupPtr group, double tol,
                                               const std::string& path);

/// An explicit array (numbers or [re, im]), {"delta": g}, or {"random": true}.
CVector vector_spec_from_json(const json& j, Index dim, Rng& rng, const std::string& path);

/// Dense row-major dump: {"name", "shape": [r, c], "data": [[re, im], ...]}
/// plus optional row/column element orders and labels.
json matrix_dump(const std::string& name, const CMatrix& m);
CMatrix matrix_from_dump(const json& j);

}  // namespace knitframe::io

#endif  // KNITFRAME_IO_HPP
