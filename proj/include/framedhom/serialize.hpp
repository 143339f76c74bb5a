#pragma once

// JSON forms of the domain values. Integers are written as JSON numbers when
// they fit in 64 bits and as decimal strings otherwise; both are accepted on
// input.

#include <framedhom/basis_moves.hpp>
#include <framedhom/kernel.hpp>
#include <framedhom/paut.hpp>

#include <json.hpp>

namespace framedhom {

using Json = nlohmann::json;

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j, const char* what);

/// {"g", "kappa", "wind_x", "wind_y", "arc2"?}; unknown keys are rejected.
Json framing_to_json(const Framing& f);
Framing framing_from_json(const Json& j);

/// {"g", "n", "S", "M"} with matrices as lists of rows.
Json paut_to_json(const PAutElem& a);
PAutElem paut_from_json(const Json& j);

Json cohom_to_json(const CohomClass& c);
Json vector_to_json(const IntVector& v);
Json factors_to_json(const std::vector<TransvectionFactor>& factors);
Json move_to_json(const Move& m);
Json report_to_json(const StructureReport& r);

/// Reads and parses a JSON file; ValidationError on I/O or syntax errors.
Json load_json_file(const std::string& path);

}  // namespace framedhom
