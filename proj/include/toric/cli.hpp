#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/chern.hpp"

namespace toric {

enum ExitCode : int { kExitOk = 0, kExitBadFan = 1, kExitUsage = 2 };

/// {"k", "classification", "min_value", "witness_cone", ["values"]}.
nlohmann::json report_to_json(const Fan& fan, const PositivityReport& report, bool include_values);

/// Entry point behind the toricch binary; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric
