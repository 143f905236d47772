#pragma once
#include <string>

#include "solvlat/jsonx.hpp"
#include "solvlat/lattice.hpp"

namespace solvlat {

// Build-spec JSON:
// {"d": 3, "beta": 3, "N": [[...]], "K": [["p/q",...]], "L": [...], "P": [[...]],
//  "D_choice": "default" | r | {"basis": [vec, ...]}}
// All entries beyond d and beta are optional.
BuildSpec spec_from_json(const json& j);
json spec_to_json(const BuildSpec& s);

json elem_to_json(const GroupElem& e);
GroupElem elem_from_json(const json& j, long disc);

// Presentation JSON (canonical, sorted keys):
// {"D": disc, "alpha": {"r","s"}, "beta", "d", "g0", "g": [...], "h": [...],
//  "N": [[...]], "P": [[...]], "index_of_lambdaZ_in_D": "1"}
json presentation_to_json(const LatticePresentation& p);
LatticePresentation presentation_from_json(const json& j);

// FNV-1a 64-bit hash (hex) of the canonical presentation JSON.
std::string presentation_digest(const LatticePresentation& p);

Integer int_from_json(const json& j);

}  // namespace solvlat
