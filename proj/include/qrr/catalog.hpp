#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrr/multisum.hpp"
#include "qrr/report.hpp"

namespace qrr {

// The fourteen representative knots, mirrors prefixed with "m".
const std::vector<std::string>& catalog_keys();
bool is_family(const std::string& key);

// Throws UnknownKnot for a bad key and BadParameter when p is missing or
// below 1 for a family, or given for a fixed knot.
MultisumSpec catalog_spec(const std::string& key, std::optional<Exponent> p = std::nullopt);

// T(2, 2p+1) and the twist knot K_p, each with 2p + 1 summation variables.
MultisumSpec torus_spec(Exponent p);
MultisumSpec twist_spec(Exponent p);

// The mirror of 7_2 exactly as written out next to its matrices, with
// variables a..g.
MultisumSpec printed_m7_2_spec();

// phi_series against rhs_series of the target, to O(q^prec).
IdentityReport verify_spec(const MultisumSpec& spec, nlohmann::ordered_json params, Exponent prec);
IdentityReport verify_knot(const std::string& key, std::optional<Exponent> p, Exponent prec);

}  // namespace qrr
