#include "sodelie/cli/config.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

namespace sodelie::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void reject_unknown(const json& object, const std::set<std::string>& allowed, const std::string& where) {
  if (!object.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : object.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key \"" + key + "\" in " + where);
  }
}

double number(const json& j, const std::string& what) {
  if (!j.is_number()) throw ConfigError(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(what + " must be finite");
  return v;
}

double positive(const json& j, const std::string& what) {
  const double v = number(j, what);
  if (!(v > 0.0)) throw ConfigError(what + " must be positive");
  return v;
}

std::size_t count(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ConfigError(what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

ode::State pair(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(what + " must be a two-element array");
  return {number(j[0], what + "[0]"), number(j[1], what + "[1]")};
}

std::string text(const json& j, const std::string& what) {
  if (!j.is_string()) throw ConfigError(what + " must be a string");
  return j.get<std::string>();
}

std::string resolve(const std::string& base, const std::string& path) {
  const fs::path p(path);
  return p.is_absolute() ? path : (fs::path(base) / p).string();
}

const std::map<std::string, std::map<std::string, std::string>>& family_defaults() {
  static const std::map<std::string, std::map<std::string, std::string>> table = {
      {"mdpi", {{"f", "0"}}},
      {"exam2", {{"lambda", ""}}},
      {"general", {{"f", "0"}, {"g", "0"}, {"h", "0"}}},
      {"riccati", {{"a0", "0"}, {"a1", "0"}, {"a2", "0"}, {"a3", "1"}}},
  };
  return table;
}

std::optional<double> env_number(const EnvLookup& env, const std::string& name) {
  const auto value = env(name);
  if (!value) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(value->c_str(), &end);
  if (value->empty() || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(name + " must be a positive number, got \"" + *value + "\"");
  }
  return v;
}

ode::CoeffExpr expression(const RunConfig& config, const std::string& key) {
  const std::string& source = config.equation.coefficients.at(key);
  try {
    return ode::parse_expr(source);
  } catch (const ode::ParseError& e) {
    throw ConfigError("equation." + key + ": " + e.what());
  }
}

}  // namespace

EnvLookup process_environment() {
  return [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (!v) return std::nullopt;
    return std::string(v);
  };
}

Defaults defaults_from(const EnvLookup& env) {
  Defaults d;
  if (auto v = env_number(env, "SODELIE_TOL")) d.tolerance = *v;
  if (auto v = env_number(env, "SODELIE_EPS_GEN")) d.eps_gen = *v;
  return d;
}

RunConfig parse_config(const json& doc, const Defaults& defaults, const std::string& base, const std::string& stem) {
  reject_unknown(doc,
                 {"equation", "interval", "grid_points", "tolerance", "eps_gen", "initial_state", "particular",
                  "particular_csv", "target", "constants", "fit_index", "output"},
                 "configuration");
  RunConfig c;
  c.tolerance = defaults.tolerance;
  c.eps_gen = defaults.eps_gen;

  if (!doc.contains("equation")) throw ConfigError("missing key \"equation\"");
  const json& eq = doc["equation"];
  if (!eq.is_object() || !eq.contains("family")) throw ConfigError("equation.family is required");
  c.equation.family = text(eq["family"], "equation.family");
  const auto family = family_defaults().find(c.equation.family);
  if (family == family_defaults().end()) {
    throw ConfigError("unknown equation family \"" + c.equation.family + "\" (mdpi, exam2, general, riccati)");
  }
  std::set<std::string> allowed{"family"};
  for (const auto& [key, value] : family->second) allowed.insert(key);
  reject_unknown(eq, allowed, "equation (" + c.equation.family + ")");
  c.equation.coefficients = family->second;
  for (const auto& [key, value] : eq.items()) {
    if (key == "family") continue;
    c.equation.coefficients[key] = value.is_number() ? value.dump() : text(value, "equation." + key);
  }
  if (c.equation.family == "exam2" && c.equation.coefficients["lambda"].empty()) {
    throw ConfigError("equation.lambda is required for exam2");
  }

  if (doc.contains("interval")) {
    const ode::State iv = pair(doc["interval"], "interval");
    c.t_begin = iv[0];
    c.t_end = iv[1];
    if (!(c.t_end > c.t_begin)) throw ConfigError("interval must satisfy t0 < t1");
  }
  if (doc.contains("grid_points")) c.grid_points = count(doc["grid_points"], "grid_points");
  if (c.grid_points < 2) throw ConfigError("grid_points must be at least 2");
  if (doc.contains("tolerance")) c.tolerance = positive(doc["tolerance"], "tolerance");
  if (doc.contains("eps_gen")) c.eps_gen = positive(doc["eps_gen"], "eps_gen");
  if (doc.contains("initial_state")) c.initial_state = pair(doc["initial_state"], "initial_state");

  if (doc.contains("particular") && doc.contains("particular_csv")) {
    throw ConfigError("give either particular or particular_csv, not both");
  }
  if (doc.contains("particular")) {
    const json& p = doc["particular"];
    if (!p.is_array() || p.size() != 4) throw ConfigError("particular must list four [x, v] pairs");
    std::array<ode::State, 4> states;
    for (std::size_t a = 0; a < 4; ++a) states[a] = pair(p[a], "particular[" + std::to_string(a) + "]");
    c.particular = states;
  }
  if (doc.contains("particular_csv")) {
    const json& p = doc["particular_csv"];
    if (!p.is_array() || p.size() != 4) throw ConfigError("particular_csv must list four paths");
    std::array<std::string, 4> paths;
    for (std::size_t a = 0; a < 4; ++a) {
      paths[a] = resolve(base, text(p[a], "particular_csv[" + std::to_string(a) + "]"));
    }
    c.particular_csv = paths;
  }
  if (doc.contains("target") && doc.contains("constants")) {
    throw ConfigError("give either target or constants, not both");
  }
  if (doc.contains("target")) c.target = pair(doc["target"], "target");
  if (doc.contains("constants")) {
    const ode::State l = pair(doc["constants"], "constants");
    c.constants = std::array<double, 2>{l[0], l[1]};
  }
  if (doc.contains("fit_index")) c.fit_index = count(doc["fit_index"], "fit_index");

  c.output.csv = resolve(base, stem + ".csv");
  c.output.report = resolve(base, stem + ".report.json");
  if (doc.contains("output")) {
    const json& out = doc["output"];
    reject_unknown(out, {"csv", "report"}, "output");
    if (out.contains("csv")) c.output.csv = resolve(base, text(out["csv"], "output.csv"));
    if (out.contains("report")) c.output.report = resolve(base, text(out["report"], "output.report"));
  }
  return c;
}

RunConfig load_config(const std::string& path, const EnvLookup& env) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  const fs::path p(path);
  const std::string base = p.has_parent_path() ? p.parent_path().string() : ".";
  return parse_config(doc, defaults_from(env), base, p.stem().string());
}

ode::SodeFamily build_family(const RunConfig& config) {
  const std::string& family = config.equation.family;
  if (family == "mdpi") return ode::MdpiEquation{expression(config, "f")};
  if (family == "general") {
    return ode::GeneralEquation{expression(config, "f"), expression(config, "g"), expression(config, "h")};
  }
  if (family == "exam2") {
    try {
      return ode::Exam2Equation{parse_rational(config.equation.coefficients.at("lambda"))};
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("equation.lambda: ") + e.what());
    }
  }
  return build_riccati_coeffs(config).equation;
}

ric::RiccatiCoeffs build_riccati_coeffs(const RunConfig& config) {
  if (config.equation.family != "riccati") throw ConfigError("not a riccati configuration");
  return ric::build_riccati(expression(config, "a0"), expression(config, "a1"), expression(config, "a2"),
                            expression(config, "a3"), config.t_begin, config.t_end);
}

}  // namespace sodelie::cli
