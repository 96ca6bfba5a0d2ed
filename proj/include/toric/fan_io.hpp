#pragma once

#include <string>

#include <json.hpp>

#include "toric/fan.hpp"

namespace toric {

/// {"rank": d, "rays": [{"name": str, "vector": [int, ...]}, ...],
///  "maximal_cones": [[ray indices], ...]} with 0-based indices.
nlohmann::json fan_to_json(const Fan& fan);

/// Parses and fully validates (build_fan). Throws FanError with kind Malformed
/// on schema violations; other FanError kinds come from validation.
Fan fan_from_json(const nlohmann::json& j);

Fan load_fan_file(const std::string& path);

}  // namespace toric
