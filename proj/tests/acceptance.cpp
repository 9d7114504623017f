// Prints one PASS/FAIL line per acceptance criterion and exits nonzero on any failure.

#include "hybrid/verify.hpp"

#include <iostream>

int main() {
  const hybrid::VerifyReport report = hybrid::verify_oracles();
  for (const auto& e : report.entries) {
    if (e.passed()) continue;
    std::cerr << "check " << e.check->id << " failed\n";
    if (!e.error.empty()) std::cerr << "  error: " << e.error << '\n';
    for (const auto& line : e.outcome.lines) std::cerr << "  " << line << '\n';
  }
  int failures = 0;
  for (int c = 1; c <= hybrid::kCriterionCount; ++c) {
    const bool ok = report.criterion_passed(c);
    if (!ok) ++failures;
    std::cout << "criterion " << c << ": " << (ok ? "PASS" : "FAIL") << " - " << hybrid::criterion_title(c) << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : "some criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
