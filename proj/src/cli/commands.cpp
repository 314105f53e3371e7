#include "sodelie/cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "sodelie/liealgebra/builtin.hpp"
#include "sodelie/liealgebra/verify.hpp"
#include "sodelie/odeint/integrator.hpp"
#include "sodelie/odeint/residual.hpp"
#include "sodelie/riccati/riccati.hpp"
#include "sodelie/superposition/superposition.hpp"

namespace sodelie::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Warn:
      return "WARN";
    case Status::Fail:
      return "FAIL";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::none_of(sections.begin(), sections.end(), [](const Section& s) { return s.status == Status::Fail; });
}

json VerifyReport::to_json() const {
  json list = json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& s : sections) {
    ++counts[static_cast<int>(s.status)];
    list.push_back({{"name", s.name}, {"status", cli::to_string(s.status)}, {"summary", s.summary}, {"data", s.data}});
  }
  return {{"command", "verify"},
          {"passed", passed()},
          {"counts", {{"pass", counts[0]}, {"warn", counts[1]}, {"fail", counts[2]}}},
          {"sections", list}};
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& s : sections) {
    ++counts[static_cast<int>(s.status)];
    out << "[" << cli::to_string(s.status) << "] " << s.name << ": " << s.summary << "\n";
    std::istringstream details(s.details);
    for (std::string line; std::getline(details, line);) out << "    " << line << "\n";
  }
  out << "summary: " << counts[0] << " pass, " << counts[1] << " warn, " << counts[2] << " fail\n";
  return out.str();
}

namespace {

std::string field_name(std::size_t index) { return "X" + std::to_string(index + 1); }

Section table_section(std::span<const VectorField> basis) {
  const lie::TableReport report = lie::verify_paper_table(basis);
  Section s{"commutator table", report.passed() ? Status::Pass : Status::Fail, "", lie::to_text(report),
            lie::to_json(report)};
  s.summary = std::to_string(report.matched()) + "/" + std::to_string(report.checks.size()) + " relations match";
  for (const auto& c : report.checks) {
    if (!c.match) {
      s.summary += "; mismatch at [X" + std::to_string(c.first) + ",X" + std::to_string(c.second) + "]";
      break;
    }
  }
  return s;
}

Section isomorphism_section() {
  const lie::IsomorphismReport report = lie::verify_isomorphism();
  Section s{"matrix isomorphism", report.passed() ? Status::Pass : Status::Fail, "", lie::to_text(report),
            lie::to_json(report)};
  s.summary = std::to_string(report.pairs.matched()) + "/" + std::to_string(report.pairs.checks.size()) +
              " pairs preserve the bracket";
  return s;
}

Section scheme_section() {
  const lie::SchemeReport report = lie::verify_scheme(6);
  Section s{"riccati scheme", report.passed() ? Status::Pass : Status::Fail, "", lie::to_text(report),
            lie::to_json(report)};
  s.summary = std::string("[Y2,Y8]=0 ") + (report.w_abelian ? "yes" : "no") + ", " +
              std::to_string(report.brackets.matched()) + "/" + std::to_string(report.brackets.checks.size()) +
              " brackets match, " + std::to_string(report.witnesses.size()) + " witness depths checked";
  return s;
}

Section integrals_section(std::span<const VectorField> basis) {
  const sup::ExactIntegrals exact = sup::exact_integrals();
  Section s{"first integrals", Status::Pass, "", "", json::array()};
  std::size_t annihilated = 0;
  std::ostringstream details;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const VectorField hat = prolong(basis[a], 5);
    const bool l1 = derive_along(hat, exact.lambda1).numerator().is_zero();
    const bool l2 = derive_along(hat, exact.lambda2).numerator().is_zero();
    annihilated += l1 + l2;
    if (!(l1 && l2)) s.status = Status::Fail;
    details << field_name(a) << "^: Lambda1 " << (l1 ? "annihilated" : "NOT annihilated") << ", Lambda2 "
            << (l2 ? "annihilated" : "NOT annihilated") << "\n";
    s.data.push_back({{"field", field_name(a)}, {"lambda1", l1}, {"lambda2", l2}});
  }
  s.summary = std::to_string(annihilated) + "/" + std::to_string(2 * basis.size()) +
              " exact annihilations by the prolonged fields";
  s.details = details.str();
  return s;
}

Rational f_product(const Coords& coords, std::span<const Rational> point) {
  return sup::f_polynomial(coords, 0, 1, 2).eval(point) * sup::f_polynomial(coords, 0, 1, 3).eval(point) *
         sup::f_polynomial(coords, 0, 2, 3).eval(point) * sup::f_polynomial(coords, 1, 2, 3).eval(point);
}

Section rank_section(std::span<const VectorField> basis, const VerifyOptions& options) {
  std::vector<VectorField> hats;
  for (const auto& f : basis) hats.push_back(prolong(f, 4));
  const Coords& coords = hats.front().coords();
  std::mt19937 rng(options.seed);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 7);
  std::size_t generic_ok = 0, generic_total = 0, duplicated_ok = 0;
  while (generic_total < options.rank_points) {
    std::vector<Rational> point;
    for (std::size_t i = 0; i < 8; ++i) point.push_back(ratio(num(rng), den(rng)));
    if (f_product(coords, point) == 0) continue;
    ++generic_total;
    generic_ok += rank_at(hats, point) == 8;
    point[1] = point[0];
    point[5] = point[4];
    duplicated_ok += rank_at(hats, point) <= 6;
  }
  const bool ok = generic_ok == generic_total && duplicated_ok == generic_total;
  Section s{"genericity rank", ok ? Status::Pass : Status::Fail, "", "", json::object()};
  s.summary = "rank 8 at " + std::to_string(generic_ok) + "/" + std::to_string(generic_total) +
              " generic points, rank <= 6 at " + std::to_string(duplicated_ok) + "/" + std::to_string(generic_total) +
              " points with a duplicated copy";
  s.data = {{"generic_points", generic_total}, {"rank8", generic_ok}, {"duplicated_rank_le6", duplicated_ok}};
  return s;
}

// The four particular solutions of the autonomous worked example as exact
// rational functions of t, with their derivatives.
struct ExampleFamily {
  Coords coords = Coords::intern({"t"});
  std::array<RationalFunction, 4> x{zero(), zero(), zero(), zero()};
  std::array<RationalFunction, 4> v{zero(), zero(), zero(), zero()};

  RationalFunction zero() const { return RationalFunction(Polynomial(coords)); }
  Polynomial t() const { return Polynomial::variable(coords, "t"); }
  Polynomial c(long n) const { return Polynomial::constant(coords, Rational(n)); }

  static RationalFunction d(const RationalFunction& f) {
    const Polynomial& p = f.numerator();
    const Polynomial& q = f.denominator();
    return RationalFunction(p.diff(0) * q - p * q.diff(0), q * q);
  }

  ExampleFamily() {
    x = {zero(), RationalFunction(c(2), t()), RationalFunction(c(2) * t(), c(2) + t() * t()),
         RationalFunction(c(1) + c(2) * t(), t() + t() * t())};
    for (std::size_t a = 0; a < 4; ++a) v[a] = d(x[a]);
  }

  // Slots are 1-based as printed.
  RationalFunction f(std::size_t a, std::size_t b, std::size_t cc) const {
    const auto &xa = x[a - 1], &xb = x[b - 1], &xc = x[cc - 1];
    return v[a - 1] * (xc - xb) + v[b - 1] * (xa - xc) + v[cc - 1] * (xb - xa) + (xa - xb) * (xb - xc) * (xc - xa);
  }
  RationalFunction g(std::size_t a, std::size_t b, std::size_t cc, std::size_t dd) const {
    const auto &xa = x[a - 1], &xb = x[b - 1], &xc = x[cc - 1], &xd = x[dd - 1];
    const auto &va = v[a - 1], &vb = v[b - 1], &vc = v[cc - 1], &vd = v[dd - 1];
    return xa * ((vd - vc) * xb + (vb - vd) * xc + (xb - xc) * xb * xc + (xc - xb) * xa * xd) +
           xd * ((vc - va) * xb + (va - vb) * xc + (xc - xb) * xb * xc + (xb - xc) * xa * xd);
  }
};

Section example_section() {
  const ExampleFamily family;
  struct Printed {
    const char* name;
    RationalFunction computed;
    const char* closed_form;
    Rational at_one;
  };
  const std::vector<Printed> printed = {
      {"G3124", family.g(3, 1, 2, 4), "2t^-2/((t^2+1)(t+1))", ratio(1, 2)},
      {"F431", family.f(4, 3, 1), "2t^-1/((t^2+1)(t+1))", ratio(1, 2)},
      {"G2134", family.g(2, 1, 3, 4), "-4t^-1/((t^2+1)(t+1))", ratio(-1, 1)},
      {"F124", family.f(1, 2, 4), "2/(t^2+t^3)", ratio(1, 1)},
      {"F324", family.f(3, 2, 4), "2/(t^2+t^3+t^4+t^5)", ratio(1, 2)},
      {"F312", family.f(3, 1, 2), "2/(2t+t^3)", ratio(2, 3)},
  };
  const std::vector<Rational> one{Rational(1)};
  Section s{"worked example values", Status::Pass, "", "", json::object()};
  std::ostringstream details;
  json values = json::array();
  std::size_t differing = 0;
  for (const auto& p : printed) {
    const Rational value = p.computed.eval(one);
    const bool same = value == p.at_one;
    differing += !same;
    details << p.name << "(1): recomputed " << sodelie::to_string(value) << ", printed " << sodelie::to_string(p.at_one) << " from "
            << p.closed_form << (same ? "" : "  [differs]") << "\n";
    values.push_back({{"name", p.name},
                      {"recomputed_at_1", sodelie::to_string(value)},
                      {"printed_at_1", sodelie::to_string(p.at_one)},
                      {"printed_closed_form", p.closed_form},
                      {"match", same}});
  }
  const bool f123_zero = family.f(1, 2, 3).is_zero();
  details << "F123 of the four particular solutions is " << (f123_zero ? "identically zero" : "not identically zero")
          << (f123_zero ? ": the family is not generic and the superposition formula is undefined on it\n" : "\n");
  if (differing > 0 || f123_zero) s.status = Status::Warn;
  s.summary = std::to_string(differing) + "/" + std::to_string(printed.size()) +
              " printed values differ from direct evaluation at t=1" +
              (f123_zero ? "; F123 vanishes identically (non-generic family)" : "");
  s.details = details.str();
  s.data = {{"values", values}, {"f123_identically_zero", f123_zero}};
  return s;
}

void write_file(const std::string& path, const std::string& content) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

void write_report(const std::string& path, const json& report) { write_file(path, report.dump(2) + "\n"); }

void write_trajectory(const std::string& path, const ode::Trajectory& traj) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  ode::write_csv(path, traj);
}

// Runs `body`, mapping library failures to exit codes. The report is written
// in every case.
template <class Body>
int execute(json& report, const std::string& report_path, std::ostream& err, Body&& body) {
  int code = kOk;
  try {
    code = body();
  } catch (const ConfigError& e) {
    report["status"] = "config-error";
    report["error"] = e.what();
    err << "config error: " << e.what() << "\n";
    code = kConfigError;
  } catch (const ode::ConstraintViolation& e) {
    report["status"] = "constraint-violation";
    report["error"] = e.what();
    report["constraint"] = e.constraint();
    report["time"] = e.time();
    err << "constraint violation: " << e.what() << "\n";
    code = kConstraint;
  } catch (const ode::DomainError& e) {
    report["status"] = "domain-error";
    report["error"] = e.what();
    report["time"] = e.time();
    err << "coefficient domain error: " << e.what() << "\n";
    code = kConstraint;
  } catch (const ode::IntegrationError& e) {
    report["status"] = "blow-up";
    report["error"] = e.what();
    report["t_star"] = e.time();
    err << "blow-up: " << e.what() << "; t* = " << std::setprecision(10) << e.time() << "\n";
    code = kBlowUp;
  } catch (const sup::Degenerate& e) {
    report["status"] = "degenerate";
    report["error"] = e.what();
    report["which"] = e.which();
    report["time"] = e.time() ? json(*e.time()) : json(nullptr);
    err << "degenerate: " << e.what() << "\n";
    code = kDegenerate;
  }
  if (!report.contains("status")) report["status"] = "ok";
  write_report(report_path, report);
  return code;
}

json config_summary(const RunConfig& c, const char* command) {
  return {{"command", command},
          {"family", c.equation.family},
          {"coefficients", c.equation.coefficients},
          {"interval", {c.t_begin, c.t_end}},
          {"grid_points", c.grid_points},
          {"tolerance", c.tolerance},
          {"eps_gen", c.eps_gen}};
}

std::optional<double> try_residual(const ode::SodeFamily& family, const ode::Trajectory& traj) {
  try {
    return ode::residual(family, traj);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

template <class T>
std::array<T, 4> to_array(std::vector<T>& v) {
  return {std::move(v[0]), std::move(v[1]), std::move(v[2]), std::move(v[3])};
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  std::vector<VectorField> basis = lie::builtin_fields(lie::FieldFamily::Sl3);
  if (options.mutate_x5) {
    const Coords& pc = lie::phase_coords();
    basis[4] = basis[4] + VectorField::planar(pc, Polynomial(pc), Polynomial::variable(pc, "x"));
  }
  VerifyReport report;
  report.sections.push_back(table_section(basis));
  report.sections.push_back(isomorphism_section());
  report.sections.push_back(scheme_section());
  report.sections.push_back(integrals_section(basis));
  report.sections.push_back(rank_section(basis, options));
  report.sections.push_back(example_section());
  return report;
}

int cmd_verify(const VerifyOptions& options, const std::string& report_dir, std::ostream& out, std::ostream&) {
  const VerifyReport report = run_verification(options);
  const std::string text = report.to_text();
  out << text;
  write_file((fs::path(report_dir) / "verify_report.txt").string(), text);
  write_report((fs::path(report_dir) / "verify_report.json").string(), report.to_json());
  return report.passed() ? kOk : kVerifyFailed;
}

int cmd_solve(const RunConfig& c, std::ostream& out, std::ostream& err) {
  json report = config_summary(c, "solve");
  return execute(report, c.output.report, err, [&] {
    if (!c.initial_state) throw ConfigError("solve needs initial_state");
    report["initial_state"] = *c.initial_state;
    const ode::SodeFamily family = build_family(c);
    ode::IntegratorOptions options;
    options.tolerance = c.tolerance;
    const auto grid = ode::uniform_grid(c.t_begin, c.t_end, c.grid_points);
    const ode::Trajectory traj = ode::integrate(ode::lift_sode(family), *c.initial_state, c.t_begin, grid, options);
    write_trajectory(c.output.csv, traj);
    report["csv"] = c.output.csv;
    report["accepted_steps"] = traj.meta().accepted_steps;
    report["rejected_steps"] = traj.meta().rejected_steps;
    const auto res = try_residual(family, traj);
    report["residual"] = res ? json(*res) : json(nullptr);
    out << "solved " << c.equation.family << " on [" << c.t_begin << ", " << c.t_end << "] with " << traj.size()
        << " points (" << traj.meta().accepted_steps << " steps); wrote " << c.output.csv << "\n";
    return kOk;
  });
}

int cmd_superpose(const RunConfig& c, std::ostream& out, std::ostream& err) {
  json report = config_summary(c, "superpose");
  return execute(report, c.output.report, err, [&] {
    if (!c.particular && !c.particular_csv) throw ConfigError("superpose needs particular or particular_csv");
    if (!c.target && !c.constants) throw ConfigError("superpose needs target or constants");
    const ode::SodeFamily family = build_family(c);
    std::optional<ric::RiccatiCoeffs> riccati;
    if (c.equation.family == "riccati") riccati = build_riccati_coeffs(c);
    ode::IntegratorOptions options;
    options.tolerance = c.tolerance;
    const ode::FirstOrderSystem system = ode::lift_sode(family);

    std::vector<ode::Trajectory> parts;
    std::vector<double> grid;
    if (c.particular) {
      grid = ode::uniform_grid(c.t_begin, c.t_end, c.grid_points);
      for (std::size_t a = 0; a < 4; ++a) {
        try {
          parts.push_back(ode::integrate(system, (*c.particular)[a], grid.front(), grid, options));
        } catch (const ode::BlowUp& e) {
          throw ode::BlowUp("particular solution " + std::to_string(a + 1) + ": " + e.what(), e.time());
        }
      }
    } else {
      for (const auto& path : *c.particular_csv) {
        try {
          parts.push_back(ode::read_csv(path));
        } catch (const std::exception& e) {
          throw ConfigError(path + ": " + e.what());
        }
      }
      grid = parts.front().times();
      for (const auto& p : parts) {
        if (p.times() != grid) throw ConfigError("particular_csv files must share one time grid");
      }
    }
    if (c.fit_index >= grid.size()) throw ConfigError("fit_index outside the grid");

    sup::SuperposeProblem problem{to_array(parts), sup::Constants{}, c.fit_index};
    if (c.target) {
      problem.constants = *c.target;
    } else {
      problem.constants = sup::Constants{(*c.constants)[0], (*c.constants)[1]};
    }
    const sup::Guard guard{c.eps_gen, true};
    sup::ReconstructionReport summary;
    std::optional<sup::Reconstruction> result;
    if (riccati) {
      const ric::RiccatiReconstruction r = ric::superpose_riccati(*riccati, problem, guard);
      summary = ric::make_report(r);
      result = r.reconstruction;
    } else {
      result = sup::reconstruct(problem, guard);
      summary = sup::make_report(*result);
    }

    if (c.target && c.fit_index == 0) {
      const ode::Trajectory reference = ode::integrate(system, *c.target, grid.front(), grid, options);
      summary.max_error = sup::max_abs_error(result->trajectory, reference);
      const std::array<ode::Trajectory, 5> five{reference, problem.particular[0], problem.particular[1],
                                                problem.particular[2], problem.particular[3]};
      sup::VelocityScale beta;
      if (riccati) beta = [&](double t) { return ric::beta_at(*riccati, t); };
      try {
        summary.lambda_drift = sup::lambda_drift(five, guard, beta);
      } catch (const sup::Degenerate&) {
      }
    }
    summary.residual = try_residual(family, result->trajectory);
    write_trajectory(c.output.csv, result->trajectory);
    report.update(sup::to_json(summary));
    report["csv"] = c.output.csv;

    out << std::setprecision(10) << "reconstructed " << result->trajectory.size() << " points with lambda1 = "
        << summary.constants.lambda1 << ", lambda2 = " << summary.constants.lambda2;
    if (summary.max_error) out << "; max error vs reference " << *summary.max_error;
    if (summary.residual) out << "; residual " << *summary.residual;
    out << "; wrote " << c.output.csv << "\n";
    return kOk;
  });
}

int cmd_rank(const std::string& point_text, std::ostream& out, std::ostream& err) {
  std::vector<Rational> point;
  std::istringstream in(point_text);
  try {
    for (std::string item; std::getline(in, item, ',');) point.push_back(parse_rational(item));
  } catch (const std::invalid_argument& e) {
    err << "config error: --point: " << e.what() << "\n";
    return kConfigError;
  }
  if (point.size() != 8) {
    err << "config error: --point needs 8 values x1,x2,x3,x4,v1,v2,v3,v4, got " << point.size() << "\n";
    return kConfigError;
  }
  std::vector<VectorField> hats;
  for (const auto& f : lie::builtin_fields(lie::FieldFamily::Sl3)) hats.push_back(prolong(f, 4));
  const std::size_t rank = rank_at(hats, point);
  const Rational product = f_product(hats.front().coords(), point);
  json result = {{"command", "rank"},
                 {"point", lie::to_json(point)},
                 {"rank", rank},
                 {"f_product", sodelie::to_string(product)},
                 {"generic", product != 0}};
  out << result.dump(2) << "\n";
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  CLI::App app{"Exact Lie-algebra checks and superposition rules for second-order Riccati-type equations"};
  app.name(args.empty() ? "sodelie" : args.front());
  app.require_subcommand(1);

  std::string report_dir = ".";
  std::string mutation;
  auto* verify = app.add_subcommand("verify", "Run the exact verification suite");
  verify->add_option("--report-dir", report_dir, "Directory for verify_report.txt and verify_report.json");
  verify->add_option("--seed-mutation", mutation, "Test hook: perturb a basis field")->check(CLI::IsMember({"x5"}));

  std::string config_path;
  auto* solve = app.add_subcommand("solve", "Integrate the configured equation");
  solve->add_option("--config", config_path, "JSON run configuration")->required();
  auto* superpose = app.add_subcommand("superpose", "Reconstruct a solution from four particular ones");
  superpose->add_option("--config", config_path, "JSON run configuration")->required();

  std::string point;
  auto* rank = app.add_subcommand("rank", "Rank of the prolonged fields at a point of TR^4");
  rank->add_option("--point", point, "x1,x2,x3,x4,v1,v2,v3,v4 as rationals")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*verify) {
      VerifyOptions options;
      options.mutate_x5 = mutation == "x5";
      return cmd_verify(options, report_dir, out, err);
    }
    if (*rank) return cmd_rank(point, out, err);
    const RunConfig config = load_config(config_path, env);
    if (*solve) return cmd_solve(config, out, err);
    return cmd_superpose(config, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace sodelie::cli
