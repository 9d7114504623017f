#include "hybrid/closed_forms.hpp"
#include "hybrid/sweep.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hybrid;

TEST_CASE("scheme and balance names") {
  const SchemeChoice q = parse_scheme("qutrit-exact");
  CHECK(q.scheme == Scheme::qutrit);
  CHECK(q.exact);
  CHECK(to_string(q) == "qutrit-exact");
  CHECK(!parse_scheme("enhanced").exact);
  CHECK_THROWS(parse_scheme("ququart"));
  CHECK(parse_balance("balanced") == Balance::balanced);
  CHECK(to_string(Balance::single) == "single");
  CHECK_THROWS(parse_balance("maybe"));
}

TEST_CASE("sweepable parameters") {
  PointParams p;
  set_parameter(p, "eta", 0.7);
  CHECK(p.eta_a == 0.7);
  CHECK(p.eta_b == 0.7);
  set_parameter(p, "squeezing-db", 6.0);
  CHECK(p.squeezing_db == 6.0);
  for (const std::string& name : sweepable_parameters()) CHECK_NOTHROW(set_parameter(p, name, 0.5));
  CHECK_THROWS(set_parameter(p, "temperature", 1.0));
}

TEST_CASE("axis parsing") {
  const SweepAxis a = parse_axis("eta-b:0.5:1", 6);
  CHECK(a.name == "eta-b");
  CHECK(a.start == 0.5);
  CHECK(a.stop == 1.0);
  CHECK(a.steps == 6);
  CHECK_THROWS(parse_axis("eta:0:1", 1));
  CHECK_THROWS(parse_axis("eta:0", 5));
  CHECK_THROWS(parse_axis("nope:0:1", 5));
  CHECK_THROWS(parse_axis("eta:zero:1", 5));
}

TEST_CASE("effective weight") {
  PointParams p;
  p.mu = 2.5;
  CHECK(effective_mu(p) == 2.5);
  p.balance = Balance::single;
  CHECK(effective_mu(p) == 1.0);
  p.balance = Balance::balanced;
  p.eta_a = 0.5;
  p.eta_b = 0.8;
  CHECK(effective_mu(p) == doctest::Approx(std::sqrt(1.6)));
}

TEST_CASE("metric columns") {
  const std::vector<Metric> all = parse_metrics("negativity,wigner,mu");
  CHECK(metric_columns(Scheme::qubit, all) == std::vector<std::string>{"negativity", "wigner_0", "wigner_1", "mu"});
  CHECK(metric_columns(Scheme::qutrit, all).size() == 5);
  CHECK_THROWS(parse_metrics("entropy"));
  CHECK_THROWS(parse_metrics(""));
}

TEST_CASE("loss sweep follows the closed form") {
  SweepSpec spec;
  spec.base.squeezing_db = 0.0;
  spec.axis = SweepAxis{"eta", 0.5, 1.0, 6};
  spec.metrics = parse_metrics("negativity,wigner");
  const SweepResult r = run_sweep(spec, 2);
  REQUIRE(r.rows.size() == 6);
  CHECK(r.param_name == "eta");
  CHECK(r.all_converged());
  for (const SweepRow& row : r.rows) {
    CHECK(row.values[0] == doctest::Approx(closed_forms::n_qubit_lossy(row.param, 1.0)).epsilon(1e-9));
    CHECK(row.values[1] == doctest::Approx(closed_forms::w_qubit_lossy(row.param, row.param, 1.0)).epsilon(1e-9));
    CHECK(!row.probability);
  }
  CHECK(r.rows.front().param == 0.5);
  CHECK(r.rows.back().param == 1.0);
}

TEST_CASE("thread count does not change the rows") {
  SweepSpec spec;
  spec.base.scheme = parse_scheme("qutrit");
  spec.axis = SweepAxis{"mu", 0.5, 2.0, 5};
  const SweepResult one = run_sweep(spec, 1);
  const SweepResult many = run_sweep(spec, 4);
  for (std::size_t i = 0; i < one.rows.size(); ++i) CHECK(one.rows[i].values == many.rows[i].values);
}

TEST_CASE("exact rows carry the herald probability") {
  SweepSpec spec;
  spec.base.scheme = parse_scheme("qubit-exact");
  spec.metrics = parse_metrics("negativity,mu");
  const SweepResult r = run_sweep(spec);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.param_name.empty());
  REQUIRE(r.rows[0].probability);
  CHECK(*r.rows[0].probability > 0.0);
}

TEST_CASE("fidelity is defined for the qubit schemes only") {
  SweepSpec spec;
  spec.base.scheme = parse_scheme("qutrit");
  spec.metrics = parse_metrics("fidelity");
  CHECK_THROWS(run_sweep(spec));
  spec.base.scheme = parse_scheme("qubit");
  const SweepResult r = run_sweep(spec);
  CHECK(r.rows[0].values[0] > 0.0);
  CHECK(r.rows[0].values[0] <= 1.0);
}

TEST_CASE("CSV and JSON writers") {
  SweepResult r;
  r.param_name = "eta";
  r.columns = {"negativity"};
  r.rows.push_back({0.5, {0.25}, std::nullopt, true, {}});
  r.rows.push_back({1.0, {0.5}, 0.125, false, {}});
  std::ostringstream csv;
  write_csv(csv, r);
  CHECK(csv.str() == "eta,negativity,prob,converged\n0.5,0.25,,true\n1,0.5,0.125,false\n");
  std::ostringstream js;
  write_json(js, r);
  const auto parsed = nlohmann::json::parse(js.str());
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 2);
  CHECK(parsed[1]["negativity"] == 0.5);
  CHECK(parsed[1]["prob"] == 0.125);
  CHECK(parsed[1]["converged"] == false);
  CHECK(parsed[0]["prob"].is_null());
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("block grids on disk") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "hybrident-blocks-test";
  std::filesystem::remove_all(dir);
  PointParams p;
  const auto files = emit_blocks(p, DvBasis::number, {3.0, 11}, dir);
  CHECK(files.size() == 5);
  CHECK(std::filesystem::exists(dir / "manifest.csv"));
  std::ifstream f(dir / "block_0_0.csv");
  std::string xline;
  std::string pline;
  std::getline(f, xline);
  std::getline(f, pline);
  CHECK(xline.rfind("x,", 0) == 0);
  CHECK(pline.rfind("p,", 0) == 0);
  int rows = 0;
  for (std::string line; std::getline(f, line);) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 11);
  std::filesystem::remove_all(dir);
}
