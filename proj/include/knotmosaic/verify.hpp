#pragma once

#include <functional>
#include <string>
#include <vector>

namespace knotmosaic {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  unsigned workers = 1;
  // Called after each criterion finishes.
  std::function<void(const CheckResult&)> on_result;
};

// Runs every acceptance criterion; one result per criterion, in order.
std::vector<CheckResult> run_acceptance(const VerifyOptions& options = {});

}  // namespace knotmosaic
