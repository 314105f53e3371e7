#ifndef SODELIE_CLI_CONFIG_HPP
#define SODELIE_CLI_CONFIG_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sodelie/odeint/sode.hpp"
#include "sodelie/riccati/riccati.hpp"

namespace sodelie::cli {

/// Any problem with the configuration file, its values or the environment.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EquationConfig {
  /// "mdpi", "exam2", "general" or "riccati".
  std::string family;
  /// Coefficient expressions by key (f, g, h, lambda, a0..a3); missing
  /// coefficients take their family default.
  std::map<std::string, std::string> coefficients;
};

struct OutputConfig {
  std::string csv;
  std::string report;
};

/// Parsed JSON run configuration. Unknown keys are rejected.
///
///   {
///     "equation": {"family": "general", "f": "sin(t)", "g": "cos(t)", "h": "0.1"},
///     "interval": [0.2, 1.2],
///     "grid_points": 201,
///     "tolerance": 1e-10,
///     "eps_gen": 1e-10,
///     "initial_state": [1, -1],                      solve
///     "particular": [[x, v], [x, v], [x, v], [x, v]],  superpose, or
///     "particular_csv": ["a.csv", "b.csv", "c.csv", "d.csv"],
///     "target": [x, v],                               fitted at grid[fit_index], or
///     "constants": [lambda1, lambda2],
///     "fit_index": 0,
///     "output": {"csv": "out.csv", "report": "out.report.json"}
///   }
struct RunConfig {
  EquationConfig equation;
  double t_begin = 0.0;
  double t_end = 1.0;
  std::size_t grid_points = 201;
  double tolerance = 1e-10;
  double eps_gen = 1e-10;
  std::optional<ode::State> initial_state;
  std::optional<std::array<ode::State, 4>> particular;
  std::optional<std::array<std::string, 4>> particular_csv;
  std::optional<ode::State> target;
  std::optional<std::array<double, 2>> constants;
  std::size_t fit_index = 0;
  OutputConfig output;
};

/// Looks up an environment variable; std::nullopt when unset.
using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
EnvLookup process_environment();

/// Default tolerances, with SODELIE_TOL and SODELIE_EPS_GEN overriding the
/// built-in values. Explicit config values override both.
struct Defaults {
  double tolerance = 1e-10;
  double eps_gen = 1e-10;
};
Defaults defaults_from(const EnvLookup& env);

/// `base` names the directory that relative output and CSV paths resolve
/// against; `stem` provides default output names.
RunConfig parse_config(const nlohmann::json& doc, const Defaults& defaults, const std::string& base = ".",
                       const std::string& stem = "run");
RunConfig load_config(const std::string& path, const EnvLookup& env = process_environment());

/// Builds the equation. Riccati coefficients are checked on the interval and
/// throw ode::ConstraintViolation; expression syntax errors throw ConfigError.
ode::SodeFamily build_family(const RunConfig& config);

/// The riccati family with its change of variables; requires family "riccati".
ric::RiccatiCoeffs build_riccati_coeffs(const RunConfig& config);

}  // namespace sodelie::cli

#endif
