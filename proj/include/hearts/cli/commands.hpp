#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hearts/cli/report.hpp"
#include "hearts/cli/workspace.hpp"

namespace hearts::cli {

struct Options {
  std::string command;
  std::string workspace;
  std::string pair, from, to;
  std::string object, target, subcategory;
  std::size_t index = 0;
  bool has_index = false;
  std::size_t random = 0;  // 0 picks the command default
  std::uint64_t seed = 1;
  std::size_t oracle_cap = 2;
  std::size_t depth = 1;
  std::size_t limit = 1 << 14;
  bool json = false;
  bool emit_certification = false;
};

// Names accepted as the command argument.
const std::vector<std::string>& command_names();

// Runs one command on a loaded workspace. Throws Error(Usage) on bad
// arguments.
Report run(const Options& opts, const Workspace& ws);

// Full command line entry: parses argv, loads the workspace, runs, prints.
// Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Hom and Ext dimension tables over the workspace catalog.
nlohmann::json certification_table(const Workspace& ws);

}  // namespace hearts::cli
