#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "posetforge/classic.hpp"
#include "posetforge/laurent.hpp"
#include "posetforge/poset.hpp"
#include "posetforge/quotient.hpp"
#include "posetforge/transversal.hpp"

namespace posetforge::io {

using nlohmann::json;

// Poset: {"labels": [...], "covers": [[i, j], ...]}
json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);  // throws FormatError
/// Hasse diagram with 0̂ at the bottom and one edge per cover.
std::string poset_to_dot(const Poset& p);

// Partition: {"classes": [[i, ...], ...]}
json partition_to_json(const QuotientMap& q);
QuotientMap partition_from_json(const json& j, int n);

/// Exponent -> coefficient; coefficients outside 64 bits are strings.
json laurent_to_json(const LaurentPoly& p);
json bigint_to_json(const BigInt& v);

// System:
//   {"kind": "transversal" | "complete",
//    "sets": [[element, ...], ...]            one rooted tree per set, or
//    "blocks": [[atom, ...], ...]             complete trees over atom blocks,
//    "f": [[[node, ...], element], ...]       one entry per tuple, or
//    "join": true                             f = join on a lattice}
// Tuples are given by tree node numbers (see tree_to_json).
TransversalSystem system_from_json(const Poset& p, const json& j,
                                   const Limits& limits = default_limits());
json system_to_json(const TransversalSystem& sys);
json tree_to_json(const RootedTree& t, const Poset& p);

json check_to_json(const CheckResult& c);
json validation_to_json(const Validation& v);
json report_to_json(const TheoremReport& r);
json iff_to_json(const IffReport& r);
std::string report_to_text(const TheoremReport& r);

}  // namespace posetforge::io
