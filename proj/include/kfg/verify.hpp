#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kfg {

struct UnknownSuite : std::runtime_error {
  explicit UnknownSuite(const std::string& name)
      : std::runtime_error("unknown suite: " + name) {}
};

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // observed vs expected, one line
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  int max_n = 0;  // 0: per-suite default from the acceptance targets
  int jobs = 1;
};

// Gating suites, in report order.
std::vector<std::string> gating_suites();
// Long-running, non-gating suites.
std::vector<std::string> extended_suites();

SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

// Render a batch of reports; format is "text", "json" or "csv".
std::string render_reports(const std::vector<SuiteReport>& reports,
                           const std::string& format);

}  // namespace kfg
