#include <iostream>
#include <string>
#include <vector>

#include "pantsgraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  pantsgraph::cli::CommandResult result = pantsgraph::cli::run(args);
  std::cout << result.payload.dump(2) << "\n";
  for (const std::string& line : result.diagnostics) {
    std::cerr << line << "\n";
  }
  return result.exit_code;
}
