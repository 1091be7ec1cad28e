// dflab: exact Donaldson-Futaki invariants of toric flag ideals.
//
//   dflab compute [job.json]    DF by counting and/or intersection numbers
//   dflab verify  [job.json]    exact identity checks
//   dflab search  [job.json]    bounded search for destabilizing flag ideals
//
// The job is read from the file argument or from stdin.

#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "dflab/commands.hpp"

namespace {

struct Args {
  std::string job_path;
  std::string format;
  std::string cache_dir;
  std::string stream;
  bool no_cache = false;
  bool polytope_library = false;
};

void add_common(CLI::App* cmd, Args& args) {
  cmd->add_option("job", args.job_path, "job JSON file (default: stdin)");
  cmd->add_option("--format", args.format, "output format")->check(CLI::IsMember({"json", "table"}));
  cmd->add_flag("--no-cache", args.no_cache, "ignore and do not write the fit cache");
  cmd->add_option("--cache-dir", args.cache_dir, "fit cache directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Donaldson-Futaki invariants of toric flag ideals"};
  app.require_subcommand(1);
  Args args;
  auto* compute = app.add_subcommand("compute", "compute DF for one flag ideal");
  auto* verify = app.add_subcommand("verify", "run the exact identity checks");
  auto* search = app.add_subcommand("search", "search bounded flag ideals for negative DF");
  for (auto* cmd : {compute, verify, search}) add_common(cmd, args);
  verify->add_flag("--polytope-library", args.polytope_library, "also check Ehrhart data of the reference polytopes");
  search->add_option("--stream", args.stream, "JSON-lines results file; an existing file resumes the search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string text;
  if (args.job_path.empty() || args.job_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(args.job_path);
    if (!in) {
      std::cerr << "dflab: cannot read " << args.job_path << '\n';
      return 1;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  dflab::CliOptions options;
  if (!args.format.empty()) options.format = args.format;
  options.use_cache = !args.no_cache;
  if (!args.cache_dir.empty()) options.cache_dir = args.cache_dir;
  if (!args.stream.empty()) options.stream = args.stream;
  options.polytope_library = args.polytope_library;

  dflab::CommandResult result;
  auto doc = dflab::Json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    result.exit_code = 1;
    result.payload = {{"status", "error"}, {"error", "InvalidInput"}, {"message", "job is not valid JSON"}, {"exit_code", 1}};
  } else if (compute->parsed()) {
    result = dflab::cmd_compute(doc, options);
  } else if (verify->parsed()) {
    result = dflab::cmd_verify(doc, options);
  } else {
    result = dflab::cmd_search(doc, options);
  }
  std::cout << dflab::render(result);
  return result.exit_code;
}
