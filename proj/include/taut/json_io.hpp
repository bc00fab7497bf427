#pragma once

#include "taut/projection.hpp"
#include "taut/realmult.hpp"
#include "taut/taut_class.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace taut {

using Json = nlohmann::ordered_json;

/// Parses a file into JSON. Missing files and syntax errors raise
/// ValidationError.
Json read_json_file(const std::string& path);

Json to_json(const TautClass& c);
/// Throws ValidationError on any schema violation (unknown variant, index
/// out of range, unsorted or repeated indices, duplicate monomials, bad
/// rational strings).
TautClass class_from_json(const Json& j);

Json to_json(const PairingFunctional& f);
/// Schema check only; completeness against a ring is `validate`.
PairingFunctional pairing_from_json(const Json& j);

Json to_json(const RMFieldData& f);
/// Fills zeta_F(-1) from the discriminant when m = 1 and no values are
/// given, and checks any supplied value against it. A missing index
/// defaults to 1 and appends a warning.
RMFieldData field_from_json(const Json& j, std::vector<std::string>* warnings = nullptr);

} // namespace taut
