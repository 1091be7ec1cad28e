#pragma once

// compute / verify / search. Each returns the exit code and the JSON payload
// instead of printing, so the tool stays a thin wrapper and tests can call
// the commands directly.
//
// Exit codes: 0 ok, 1 invalid input, 2 not stabilized or exponent too
// small, 3 an exact identity or the cross-pipeline comparison failed.

#include <optional>
#include <string>

#include "dflab/job.hpp"

namespace dflab {

struct CliOptions {
  std::optional<std::string> format;  ///< overrides the job's "format"
  bool use_cache = true;
  std::optional<std::string> cache_dir;  ///< else job "cache_dir", else $DFLAB_CACHE_DIR
  std::optional<std::string> stream;     ///< else job "stream"
  bool polytope_library = false;         ///< verify: add the library Ehrhart checks
};

struct CommandResult {
  int exit_code = 0;
  Json payload;
  std::string format = "json";
};

CommandResult cmd_compute(const Json& job, const CliOptions& options = {});
CommandResult cmd_verify(const Json& job, const CliOptions& options = {});
CommandResult cmd_search(const Json& job, const CliOptions& options = {});

/// JSON (sorted keys, one document) or a two-column text table.
std::string render(const CommandResult& result);

}  // namespace dflab
