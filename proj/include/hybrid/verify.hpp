#ifndef HYBRID_VERIFY_HPP
#define HYBRID_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hybrid {

/// Per-comparison tolerance, optionally overridden for a whole run.
class Tolerance {
 public:
  Tolerance() = default;
  explicit Tolerance(std::optional<double> override_value) : override_(override_value) {}
  double operator()(double default_value) const { return override_ ? *override_ : default_value; }

 private:
  std::optional<double> override_;
};

struct CheckOutcome {
  bool passed = true;
  std::vector<std::string> lines;  // one per comparison

  /// Records |value - expected| <= tol.
  void near(const std::string& what, double value, double expected, double tol);
  /// Records lo <= value <= hi.
  void within(const std::string& what, double value, double lo, double hi);
  void require(const std::string& what, bool ok);
};

struct OracleCheck {
  std::string id;
  int criterion;
  std::string description;
  std::function<CheckOutcome(const Tolerance&)> run;
};

const std::vector<OracleCheck>& oracle_checks();
/// Short title of acceptance criterion 1..13.
std::string criterion_title(int criterion);
inline constexpr int kCriterionCount = 13;

struct VerifyOptions {
  std::optional<double> tolerance;
  std::vector<std::string> ids;  // empty = all
};

struct VerifyEntry {
  const OracleCheck* check;
  CheckOutcome outcome;
  std::string error;  // exception text when the check threw
  bool passed() const { return error.empty() && outcome.passed; }
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool passed() const;
  bool criterion_passed(int criterion) const;
};

/// Throws std::invalid_argument for an unknown id.
VerifyReport verify_oracles(const VerifyOptions& options = {});

}  // namespace hybrid

#endif  // HYBRID_VERIFY_HPP
