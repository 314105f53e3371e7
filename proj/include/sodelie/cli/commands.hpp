#ifndef SODELIE_CLI_COMMANDS_HPP
#define SODELIE_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "sodelie/cli/config.hpp"

namespace sodelie::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kConfigError = 2,
  kBlowUp = 3,
  kConstraint = 4,
  kDegenerate = 5,
};

enum class Status { Pass, Warn, Fail };
std::string to_string(Status s);

struct Section {
  std::string name;
  Status status = Status::Pass;
  std::string summary;
  std::string details;
  nlohmann::json data;
};

struct VerifyReport {
  std::vector<Section> sections;
  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  /// Test hook: replaces X5 by X5 + x d/dv before checking.
  bool mutate_x5 = false;
  /// Random points for the rank section.
  std::size_t rank_points = 20;
  unsigned seed = 2024;
};

/// Commutator table, isomorphism, scheme, exact first integrals, rank, and
/// the worked-example values (WARN where the printed values differ).
VerifyReport run_verification(const VerifyOptions& options = {});

int cmd_verify(const VerifyOptions& options, const std::string& report_dir, std::ostream& out, std::ostream& err);
int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_superpose(const RunConfig& config, std::ostream& out, std::ostream& err);
/// `point` lists x1..x4, v1..v4 as rationals separated by commas.
int cmd_rank(const std::string& point, std::ostream& out, std::ostream& err);

/// Full command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env = process_environment());

}  // namespace sodelie::cli

#endif
