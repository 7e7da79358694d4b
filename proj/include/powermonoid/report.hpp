#ifndef POWERMONOID_REPORT_HPP
#define POWERMONOID_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace powermonoid {

// One machine check. `witness` is a human-readable value backing the verdict
// (the computed set, or the first counterexample on failure).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct VerificationReport {
  std::string lemma;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
  }
  void add(std::string name, bool pass, std::string witness) {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }
};

}  // namespace powermonoid

#endif  // POWERMONOID_REPORT_HPP
