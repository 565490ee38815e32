#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flop {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool ok = false;        // the exact check itself
  double seconds = 0;
  double budget = 0;      // wall-clock limit in seconds
  std::string detail;
  bool pass() const { return ok && seconds <= budget; }
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  bool skip_scan = false;  // criterion 6 is the only slow one
};

inline constexpr int kCriteria = 11;

// Runs one acceptance criterion (1..11). Exceptions become failed results.
CriterionResult run_criterion(int id, const VerifyOptions& opt = {});
std::vector<CriterionResult> run_all(const VerifyOptions& opt = {});

// "PASS  3 m1b-cohomology  (1.23 s / 30 s)  detail"
std::string format_line(const CriterionResult& r);

}  // namespace flop
