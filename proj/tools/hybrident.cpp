// Command-line front end: single points, sweeps, hybrid block grids and the
// oracle verification suite.

#include "hybrid/sweep.hpp"
#include "hybrid/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kVerification = 2, kTruncation = 3 };

constexpr const char* kOutputEnv = "HYBRIDENT_OUTPUT_DIR";

struct Settings {
  std::string scheme = "qubit";
  std::string balance = "fixed";
  std::string metrics = "negativity";
  std::string format = "csv";
  std::string out;
  std::string sweep;
  int steps = 11;
  std::string basis = "number";
  double extent = 4.0;
  int points = 81;
  std::optional<double> tolerance;
  std::vector<std::string> checks;
  bool list = false;
  hybrid::PointParams point;
};

void add_point_options(CLI::App& app, Settings& s) {
  hybrid::PointParams& p = s.point;
  app.add_option("--scheme", s.scheme, "qubit, enhanced, qutrit, or one of them with -exact")->capture_default_str();
  app.add_option("--squeezing-db", p.squeezing_db, "local squeezing in dB")->capture_default_str();
  app.add_option("--mu", p.mu, "weight parameter")->capture_default_str();
  app.add_option("--balance", s.balance, "fixed (use --mu), single (mu = 1) or balanced")->capture_default_str();
  app.add_option("--eta-a", p.eta_a, "DV-mode transmission")->capture_default_str();
  app.add_option("--eta-b", p.eta_b, "CV-mode transmission")->capture_default_str();
  app.add_option("--sigma-deg", p.sigma_deg, "phase-noise standard deviation in degrees")->capture_default_str();
  app.add_option("--theta", p.theta, "tap beam-splitter angle (exact schemes)")->capture_default_str();
  app.add_option("--theta0", p.theta0, "local subtraction angle (enhanced-exact)")->capture_default_str();
  app.add_option("--lambda", p.lambda, "TMSS gain (exact schemes)")->capture_default_str();
  app.add_option("--delta-phi-deg", p.delta_phi_deg, "central-station phase difference")->capture_default_str();
  app.add_option("--alpha", p.alpha, "cat amplitude of the fidelity target")->capture_default_str();
  app.add_option("--dim", p.dim, "CV Fock cutoff, 0 = automatic")->capture_default_str();
  app.add_option("--metrics", s.metrics, "comma list of negativity, wigner, fidelity, mu")->capture_default_str();
  app.add_option("--format", s.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", s.out, "output file (directory for blocks)");
}

std::filesystem::path default_output(const std::string& stem) {
  const char* dir = std::getenv(kOutputEnv);
  if (dir == nullptr || *dir == '\0') return {};
  return std::filesystem::path(dir) / stem;
}

void emit(const hybrid::SweepResult& result, const Settings& s, const std::string& stem) {
  std::filesystem::path target = s.out.empty() ? default_output(stem + "." + s.format) : std::filesystem::path(s.out);
  std::ostringstream buffer;
  if (s.format == "json") {
    hybrid::write_json(buffer, result);
  } else {
    hybrid::write_csv(buffer, result);
  }
  if (target.empty()) {
    std::cout << buffer.str();
    return;
  }
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  std::ofstream f(target);
  if (!f) throw std::runtime_error("cannot open " + target.string() + " for writing");
  f << buffer.str();
  std::cerr << "wrote " << target.string() << '\n';
}

int report_rows(const hybrid::SweepResult& result) {
  for (const auto& row : result.rows) {
    for (const auto& w : row.warnings) std::cerr << "warning: " << w << '\n';
  }
  if (!result.all_converged()) {
    std::cerr << "error: some rows did not converge in the Fock cutoff (see the converged column)\n";
    return kTruncation;
  }
  return kOk;
}

hybrid::PointParams resolve(const Settings& s) {
  hybrid::PointParams p = s.point;
  p.scheme = hybrid::parse_scheme(s.scheme);
  p.balance = hybrid::parse_balance(s.balance);
  return p;
}

int run_point(const Settings& s) {
  hybrid::SweepSpec spec;
  spec.base = resolve(s);
  spec.metrics = hybrid::parse_metrics(s.metrics);
  const hybrid::SweepResult result = hybrid::run_sweep(spec);
  emit(result, s, "run-" + s.scheme);
  return report_rows(result);
}

int run_sweep(const Settings& s) {
  if (s.sweep.empty()) throw CLI::ValidationError("--sweep", "a sweep needs --sweep name:start:stop");
  hybrid::SweepSpec spec;
  spec.base = resolve(s);
  spec.axis = hybrid::parse_axis(s.sweep, s.steps);
  spec.metrics = hybrid::parse_metrics(s.metrics);
  const hybrid::SweepResult result = hybrid::run_sweep(spec);
  emit(result, s, "sweep-" + s.scheme + "-" + spec.axis->name);
  return report_rows(result);
}

int run_blocks(const Settings& s) {
  const hybrid::DvBasis basis = s.basis == "rotated" ? hybrid::DvBasis::rotated : hybrid::DvBasis::number;
  std::filesystem::path dir = s.out;
  if (dir.empty()) dir = default_output("blocks-" + s.scheme + "-" + s.basis);
  if (dir.empty()) dir = "blocks-" + s.scheme + "-" + s.basis;
  const auto files = hybrid::emit_blocks(resolve(s), basis, {s.extent, s.points}, dir);
  for (const auto& f : files) std::cout << f.string() << '\n';
  return kOk;
}

int run_verify(const Settings& s) {
  if (s.list) {
    for (const auto& c : hybrid::oracle_checks()) {
      std::cout << c.id << "  [criterion " << c.criterion << "]  " << c.description << '\n';
    }
    return kOk;
  }
  const hybrid::VerifyReport report = hybrid::verify_oracles({s.tolerance, s.checks});
  for (const auto& e : report.entries) {
    std::cout << (e.passed() ? "PASS " : "FAIL ") << e.check->id << " (criterion " << e.check->criterion
              << "): " << e.check->description << '\n';
    if (!e.error.empty()) std::cout << "      error: " << e.error << '\n';
    for (const auto& line : e.outcome.lines) std::cout << "      " << line << '\n';
  }
  const bool ok = report.passed();
  std::cout << (ok ? "all checks passed\n" : "verification failed\n");
  return ok ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid entanglement simulator: heralded DV-CV qubit and qutrit states in truncated Fock space"};
  app.set_config("--config", "", "TOML or INI file with option values; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  add_point_options(app, s);

  CLI::App* run = app.add_subcommand("run", "evaluate the metrics at a single parameter point");
  CLI::App* sweep = app.add_subcommand("sweep", "evaluate the metrics along a parameter axis");
  sweep->add_option("--sweep", s.sweep, "name:start:stop, name one of eta, eta-a, eta-b, mu, squeezing-db, "
                                        "sigma-deg, theta, theta0, lambda, delta-phi-deg, alpha");
  sweep->add_option("--steps", s.steps, "number of points (>= 2)")->capture_default_str();
  CLI::App* blocks = app.add_subcommand("blocks", "write Wigner grids of the hybrid blocks <k|rho|l>");
  blocks->add_option("--basis", s.basis, "number or rotated")
      ->check(CLI::IsMember({"number", "rotated"}))
      ->capture_default_str();
  blocks->add_option("--extent", s.extent, "grid half-width in vacuum quadrature units")->capture_default_str();
  blocks->add_option("--points", s.points, "grid points per axis")->capture_default_str();
  CLI::App* verify = app.add_subcommand("verify", "run the oracle checks");
  verify->add_option("--tolerance", s.tolerance, "override every comparison tolerance");
  verify->add_option("--check", s.checks, "run only the named check (repeatable)");
  verify->add_flag("--list", s.list, "list the available checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*run) return run_point(s);
    if (*sweep) return run_sweep(s);
    if (*blocks) return run_blocks(s);
    if (*verify) return run_verify(s);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const hybrid::TruncationError& e) {
    std::cerr << "truncation error: " << e.what() << '\n';
    return kTruncation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
