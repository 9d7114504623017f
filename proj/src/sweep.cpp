#include "hybrid/sweep.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace hybrid {

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + " from '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("cannot parse " + what + " from '" + text + "'");
  return value;
}

Index levels_of(Scheme scheme) { return scheme == Scheme::qutrit ? 3 : 2; }

bool wants(const std::vector<Metric>& metrics, Metric m) {
  return std::find(metrics.begin(), metrics.end(), m) != metrics.end();
}

void validate(const PointParams& p, const std::vector<Metric>& metrics) {
  if (wants(metrics, Metric::fidelity) && p.scheme.scheme == Scheme::qutrit) {
    throw std::invalid_argument("the fidelity metric is defined for the qubit and enhanced schemes only");
  }
}

Index resolve_dim(const PointParams& p, const std::vector<Metric>& metrics) {
  if (p.dim != 0) return p.dim;
  Index dim = default_cv_dim(SourceSpec::squeezed(SqueezeParam::from_db(p.squeezing_db)));
  if (wants(metrics, Metric::fidelity)) dim = std::max(dim, coherent_cutoff(p.alpha) + 2);
  return dim;
}

bool agree(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::isnan(a[i]) && std::isnan(b[i])) continue;
    if (!(std::abs(a[i] - b[i]) <= kConvergenceTolerance)) return false;
  }
  return true;
}

SweepRow evaluate_row(const PointParams& p, const std::vector<Metric>& metrics, double param) {
  const Index dim = resolve_dim(p, metrics);
  const HeraldedState coarse = evaluate_state(p, dim);
  const HeraldedState fine = evaluate_state(p, dim + 5);
  SweepRow row;
  row.param = param;
  row.values = compute_metrics(coarse, p, metrics);
  row.probability = coarse.herald_probability;
  row.converged = agree(row.values, compute_metrics(fine, p, metrics));
  row.warnings = coarse.warnings;
  return row;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

}  // namespace

SchemeChoice parse_scheme(const std::string& name) {
  const bool exact = name.ends_with("-exact");
  const std::string base = exact ? name.substr(0, name.size() - 6) : name;
  if (base == "qubit") return {Scheme::qubit, exact};
  if (base == "enhanced") return {Scheme::enhanced, exact};
  if (base == "qutrit") return {Scheme::qutrit, exact};
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

std::string to_string(const SchemeChoice& choice) {
  return to_string(choice.scheme) + (choice.exact ? "-exact" : "");
}

Balance parse_balance(const std::string& name) {
  if (name == "fixed") return Balance::fixed;
  if (name == "single") return Balance::single;
  if (name == "balanced") return Balance::balanced;
  throw std::invalid_argument("unknown balance '" + name + "' (fixed, single, balanced)");
}

std::string to_string(Balance balance) {
  switch (balance) {
    case Balance::fixed:
      return "fixed";
    case Balance::single:
      return "single";
    case Balance::balanced:
      return "balanced";
  }
  return "fixed";
}

const std::vector<std::string>& sweepable_parameters() {
  static const std::vector<std::string> names{"eta",   "eta-a",  "eta-b",         "mu",   "squeezing-db", "sigma-deg",
                                              "theta", "theta0", "delta-phi-deg", "alpha", "lambda"};
  return names;
}

void set_parameter(PointParams& p, const std::string& name, double value) {
  if (name == "eta") {
    p.eta_a = p.eta_b = value;
  } else if (name == "eta-a") {
    p.eta_a = value;
  } else if (name == "eta-b") {
    p.eta_b = value;
  } else if (name == "mu") {
    p.mu = value;
  } else if (name == "squeezing-db") {
    p.squeezing_db = value;
  } else if (name == "sigma-deg") {
    p.sigma_deg = value;
  } else if (name == "theta") {
    p.theta = value;
  } else if (name == "theta0") {
    p.theta0 = value;
  } else if (name == "lambda") {
    p.lambda = value;
  } else if (name == "delta-phi-deg") {
    p.delta_phi_deg = value;
  } else if (name == "alpha") {
    p.alpha = value;
  } else {
    throw std::invalid_argument("unknown parameter '" + name + "'");
  }
}

double effective_mu(const PointParams& p) {
  switch (p.balance) {
    case Balance::fixed:
      return p.mu;
    case Balance::single:
      return 1.0;
    case Balance::balanced:
      return balancing_mu(p.scheme.scheme, SqueezeParam::from_db(p.squeezing_db), LossSpec{p.eta_a, p.eta_b});
  }
  return p.mu;
}

HeraldedState evaluate_state(const PointParams& p, Index dim) {
  const SqueezeParam zeta = SqueezeParam::from_db(p.squeezing_db);
  const double mu = effective_mu(p);
  const LossSpec loss{p.eta_a, p.eta_b};
  const PhaseNoiseSpec noise{p.sigma_deg * kDegree};
  const double delta_phi = p.delta_phi_deg * kDegree;
  if (p.scheme.exact) {
    SchemeParams sp;
    sp.source = SourceSpec::squeezed(zeta);
    sp.tap_theta = p.theta;
    sp.tap_theta0 = p.theta0;
    sp.tmss_lambda = p.lambda;
    sp.delta_phi = delta_phi;
    sp.central_r = central_reflectivity_for_mu(mu, sp);
    sp.loss = loss;
    sp.phase_noise = noise;
    return scheme_exact(p.scheme.scheme, sp, dim);
  }
  HeraldedState hs = scheme_perturbative(p.scheme.scheme, mu, zeta, dim);
  if (delta_phi != std::numbers::pi) {
    const DensityOperator& rho = hs.state;
    hs.state = conjugate(rho, phase_rotation(std::numbers::pi - delta_phi, rho.space().dim(0)), 0);
  }
  return apply_channels(std::move(hs), loss, noise);
}

Metric parse_metric(const std::string& name) {
  if (name == "negativity") return Metric::negativity;
  if (name == "wigner") return Metric::wigner;
  if (name == "fidelity") return Metric::fidelity;
  if (name == "mu") return Metric::mu;
  throw std::invalid_argument("unknown metric '" + name + "' (negativity, wigner, fidelity, mu)");
}

std::vector<Metric> parse_metrics(const std::string& comma_list) {
  std::vector<Metric> out;
  for (const std::string& item : split(comma_list, ',')) {
    if (!item.empty()) out.push_back(parse_metric(item));
  }
  if (out.empty()) throw std::invalid_argument("no metrics requested");
  return out;
}

std::vector<std::string> metric_columns(Scheme scheme, const std::vector<Metric>& metrics) {
  std::vector<std::string> cols;
  for (Metric m : metrics) {
    switch (m) {
      case Metric::negativity:
        cols.push_back("negativity");
        break;
      case Metric::wigner:
        for (Index k = 0; k < levels_of(scheme); ++k) cols.push_back("wigner_" + std::to_string(k));
        break;
      case Metric::fidelity:
        cols.push_back("fidelity");
        break;
      case Metric::mu:
        cols.push_back("mu");
        break;
    }
  }
  return cols;
}

std::vector<double> compute_metrics(const HeraldedState& hs, const PointParams& p,
                                    const std::vector<Metric>& metrics) {
  std::vector<double> values;
  const DensityOperator& rho = hs.state;
  for (Metric m : metrics) {
    switch (m) {
      case Metric::negativity:
        values.push_back(entanglement_negativity(rho));
        break;
      case Metric::wigner:
        for (Index k = 0; k < levels_of(p.scheme.scheme); ++k) {
          const DensityOperator block = hybrid_block(rho, k, k);
          values.push_back(block.trace().real() > 1e-300 ? wigner_origin_negativity(block, 0)
                                                         : std::numeric_limits<double>::quiet_NaN());
        }
        break;
      case Metric::fidelity: {
        if (p.scheme.scheme == Scheme::qutrit) throw std::invalid_argument("no fidelity target for the qutrit");
        const int n = p.scheme.scheme == Scheme::enhanced ? 1 : 0;
        const PureState target = hybrid_target(n, p.alpha, rho.space().dim(1));
        values.push_back(fidelity(embed(target, rho.space()), rho));
        break;
      }
      case Metric::mu:
        values.push_back(hs.mu);
        break;
    }
  }
  return values;
}

SweepAxis parse_axis(const std::string& text, int steps) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw std::invalid_argument("sweep must look like name:start:stop, got '" + text + "'");
  const auto& names = sweepable_parameters();
  if (std::find(names.begin(), names.end(), parts[0]) == names.end()) {
    throw std::invalid_argument("unknown sweep parameter '" + parts[0] + "'");
  }
  if (steps < 2) throw std::invalid_argument("steps must be >= 2");
  return {parts[0], parse_double(parts[1], "sweep start"), parse_double(parts[2], "sweep stop"), steps};
}

bool SweepResult::all_converged() const {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.converged; });
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
  validate(spec.base, spec.metrics);
  std::vector<PointParams> points;
  std::vector<double> params;
  if (spec.axis) {
    const SweepAxis& axis = *spec.axis;
    if (axis.steps < 2) throw std::invalid_argument("steps must be >= 2");
    if (axis.name == "mu" && spec.base.balance != Balance::fixed) {
      throw std::invalid_argument("sweeping mu requires balance = fixed");
    }
    const int count = axis.start == axis.stop ? 1 : axis.steps;
    for (int i = 0; i < count; ++i) {
      const double value = count == 1 ? axis.start
                                      : axis.start + (axis.stop - axis.start) * static_cast<double>(i) /
                                                         static_cast<double>(count - 1);
      PointParams p = spec.base;
      set_parameter(p, axis.name, value);
      points.push_back(p);
      params.push_back(value);
    }
  } else {
    points.push_back(spec.base);
    params.push_back(0.0);
  }

  SweepResult result;
  result.param_name = spec.axis ? spec.axis->name : "";
  result.columns = metric_columns(spec.base.scheme.scheme, spec.metrics);
  result.rows.resize(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        result.rows[i] = evaluate_row(points[i], spec.metrics, params[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned count = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  count = std::min<unsigned>(count, static_cast<unsigned>(points.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return result;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_csv(std::ostream& out, const SweepResult& result) {
  std::vector<std::string> header;
  if (!result.param_name.empty()) header.push_back(result.param_name);
  header.insert(header.end(), result.columns.begin(), result.columns.end());
  header.push_back("prob");
  header.push_back("converged");
  out << join(header) << '\n';
  for (const SweepRow& row : result.rows) {
    std::vector<std::string> cells;
    if (!result.param_name.empty()) cells.push_back(format_number(row.param));
    for (double v : row.values) cells.push_back(format_number(v));
    cells.push_back(row.probability ? format_number(*row.probability) : "");
    cells.push_back(row.converged ? "true" : "false");
    out << join(cells) << '\n';
  }
}

void write_json(std::ostream& out, const SweepResult& result) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow& row : result.rows) {
    nlohmann::ordered_json obj;
    if (!result.param_name.empty()) obj[result.param_name] = row.param;
    for (std::size_t i = 0; i < row.values.size(); ++i) obj[result.columns[i]] = row.values[i];
    obj["prob"] = row.probability ? nlohmann::ordered_json(*row.probability) : nlohmann::ordered_json(nullptr);
    obj["converged"] = row.converged;
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

std::vector<std::filesystem::path> emit_blocks(const PointParams& p, DvBasis basis, const GridSpec& grid,
                                               const std::filesystem::path& directory) {
  const Index levels = levels_of(p.scheme.scheme);
  const HeraldedState hs = evaluate_state(p, resolve_dim(p, {}));
  const HybridBlockGrid blocks = hybrid_blocks(hs.state, basis, grid, levels);
  std::filesystem::create_directories(directory);
  std::vector<std::filesystem::path> written;

  auto open = [](const std::filesystem::path& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return f;
  };

  std::ofstream manifest = open(directory / "manifest.csv");
  manifest << "file,k,l,part,basis,scheme\n";
  for (Index k = 0; k < levels; ++k) {
    for (Index l = 0; l < levels; ++l) {
      const WignerGrid& g = blocks.block(k, l);
      const bool imag = k < l;
      const std::string name = "block_" + std::to_string(k) + "_" + std::to_string(l) + ".csv";
      std::ofstream f = open(directory / name);
      f << "x";
      for (Index i = 0; i < g.x_axis.size(); ++i) f << ',' << format_number(g.x_axis(i));
      f << "\np";
      for (Index j = 0; j < g.p_axis.size(); ++j) f << ',' << format_number(g.p_axis(j));
      f << '\n';
      for (Index i = 0; i < g.values.rows(); ++i) {
        for (Index j = 0; j < g.values.cols(); ++j) {
          const Complex v = g.values(i, j);
          f << (j ? "," : "") << format_number(imag ? v.imag() : v.real());
        }
        f << '\n';
      }
      manifest << name << ',' << k << ',' << l << ',' << (imag ? "imag" : "real") << ','
               << (basis == DvBasis::number ? "number" : "rotated") << ',' << to_string(p.scheme) << '\n';
      written.push_back(directory / name);
    }
  }
  written.push_back(directory / "manifest.csv");
  return written;
}

}  // namespace hybrid
