#ifndef HYBRID_SWEEP_HPP
#define HYBRID_SWEEP_HPP

#include "hybrid/metrics.hpp"
#include "hybrid/schemes.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hybrid {

/// qubit / enhanced / qutrit use the perturbative states; the "-exact"
/// variants run the full heralding evolution.
struct SchemeChoice {
  Scheme scheme = Scheme::qubit;
  bool exact = false;
};

SchemeChoice parse_scheme(const std::string& name);
std::string to_string(const SchemeChoice& choice);

/// How mu is chosen at each point: as given, mu = 1, or the scheme's
/// balancing condition.
enum class Balance { fixed, single, balanced };

Balance parse_balance(const std::string& name);
std::string to_string(Balance balance);

struct PointParams {
  SchemeChoice scheme;
  double squeezing_db = 3.0;
  double mu = 1.0;
  Balance balance = Balance::fixed;
  double eta_a = 1.0;
  double eta_b = 1.0;
  double sigma_deg = 0.0;
  double theta = 0.05;
  double theta0 = 0.05;
  double lambda = 0.05;
  double delta_phi_deg = 180.0;
  double alpha = 1.0;  // cat amplitude of the fidelity target
  Index dim = 0;       // CV cutoff, 0 = automatic
};

/// Names accepted by set_parameter: eta (both modes), eta-a, eta-b, mu,
/// squeezing-db, sigma-deg, theta, theta0, lambda, delta-phi-deg, alpha.
const std::vector<std::string>& sweepable_parameters();
void set_parameter(PointParams& p, const std::string& name, double value);

/// Weight actually used at this point after applying the balance rule.
double effective_mu(const PointParams& p);

/// Heralded state at the point with loss and phase noise applied.
HeraldedState evaluate_state(const PointParams& p, Index dim);

enum class Metric { negativity, wigner, fidelity, mu };

Metric parse_metric(const std::string& name);
std::vector<Metric> parse_metrics(const std::string& comma_list);

/// Column names, e.g. wigner expands to one column per DV level.
std::vector<std::string> metric_columns(Scheme scheme, const std::vector<Metric>& metrics);
std::vector<double> compute_metrics(const HeraldedState& hs, const PointParams& p,
                                    const std::vector<Metric>& metrics);

struct SweepAxis {
  std::string name;
  double start = 0.0;
  double stop = 1.0;
  int steps = 11;
};

/// "name:start:stop" with the step count given separately.
SweepAxis parse_axis(const std::string& text, int steps);

struct SweepSpec {
  PointParams base;
  std::optional<SweepAxis> axis;
  std::vector<Metric> metrics{Metric::negativity};
};

struct SweepRow {
  double param = 0.0;
  std::vector<double> values;
  std::optional<double> probability;
  bool converged = true;
  std::vector<std::string> warnings;
};

struct SweepResult {
  std::string param_name;  // empty for a single point
  std::vector<std::string> columns;
  std::vector<SweepRow> rows;

  bool all_converged() const;
};

/// Metrics at the cutoff and at cutoff + 5 must agree within this bound.
inline constexpr double kConvergenceTolerance = 1e-6;

/// Rows are evaluated on `threads` workers (0 = hardware concurrency) and
/// returned in parameter order.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

void write_csv(std::ostream& out, const SweepResult& result);
void write_json(std::ostream& out, const SweepResult& result);

/// Writes block_<k>_<l>.csv for every hybrid block plus manifest.csv and
/// returns the paths written. Diagonal and k > l blocks store the real part,
/// k < l blocks the imaginary part.
std::vector<std::filesystem::path> emit_blocks(const PointParams& p, DvBasis basis, const GridSpec& grid,
                                               const std::filesystem::path& directory);

/// "%.12g".
std::string format_number(double value);

}  // namespace hybrid

#endif  // HYBRID_SWEEP_HPP
