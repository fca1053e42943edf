#ifndef VECCOMP_CLI_HPP
#define VECCOMP_CLI_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace veccomp::cli {

/// Work caps enforced before any computation starts. Box volumes grow
/// exponentially in the dimension, so requests are estimated and refused
/// early rather than ground through.
struct RunConfig {
  long long max_cells = 10'000'000;  // VECCOMP_MAX_CELLS overrides
  long max_k = 1'000'000;
  int max_dim = 8;
  int mann_shanks_max_dim = 3;
  std::string base_dir = ".";
};

RunConfig config_from_env();

struct CliError : std::runtime_error {
  CliError(std::string code_, const std::string& message)
      : std::runtime_error(message), code(std::move(code_)) {}
  std::string code;
  nlohmann::ordered_json detail;
};

/// Run one subcommand on normalized JSON parameters. Object-shaped results
/// carry a trailing "params" echo; `sequence` and `faa` return bare arrays
/// per their interface.
nlohmann::ordered_json execute(const std::string& subcommand,
                               const nlohmann::ordered_json& params,
                               const RunConfig& config);

/// Full argv entry point. Exit codes: 0 success, 1 failed theorem check or
/// failed batch fixture, 2 validation/usage error (error object on stdout).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const RunConfig& config);

struct DispatchResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Convenience wrapper used by tests: captures streams, reads config from
/// the environment.
DispatchResult dispatch(const std::vector<std::string>& args);

}  // namespace veccomp::cli

#endif
