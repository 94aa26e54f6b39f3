#pragma once

// Group-spec documents: one JSON object per group.
//
//   {"kind": "permutation", "generators": [[1,2,0], [1,0,2]]}
//   {"kind": "cayley", "table": [[0,1],[1,0]]}
//   {"kind": "pcp", "prime": 3, "relative_orders": [3,3,3],
//    "power_words": [[0,0,0],[0,0,0],[0,0,0]],
//    "commutator_words": [{"j": 1, "i": 0, "word": [0,0,1]}]}
//   {"kind": "family", "name": "Phi5", "p": 3}
//   {"kind": "family", "name": "dihedral", "order": 16}
//
// Every kind also accepts "label" and "order_cap". Unknown fields are errors.

#include <string>

#include <json.hpp>

#include "simconj/group_table.hpp"

namespace simconj {

GroupTable build_group(const nlohmann::json& spec);

// Accepts a path to a spec file, an inline JSON object, a catalog name such as
// "Q8", a family with its prime such as "Phi5:3", or "name:param" for the
// named families (e.g. "dihedral:16").
nlohmann::json load_group_spec(const std::string& arg);
GroupTable resolve_group(const std::string& arg);

}  // namespace simconj
