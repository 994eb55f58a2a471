#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pantsgraph::cli {

/// Result of one CLI invocation. An error exit code always comes with at
/// least one diagnostic line. The payload is what main() prints on stdout;
/// diagnostics go to stderr.
struct CommandResult {
  int exit_code = 0;
  nlohmann::json payload;
  std::vector<std::string> diagnostics;
};

/// Dispatches argv (without the program name, subcommand first). Identical
/// argv yield byte-identical payloads.
CommandResult run(const std::vector<std::string>& argv);

/// The dispatch table: subcommand name and one-line summary, fixed order.
const std::vector<std::pair<std::string, std::string>>& subcommands();

}  // namespace pantsgraph::cli
