// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <cstdio>

#include "knotmosaic/search.hpp"
#include "knotmosaic/verify.hpp"

int main() {
  knotmosaic::VerifyOptions opts;
  opts.workers = knotmosaic::resolve_workers(0);
  opts.on_result = [](const knotmosaic::CheckResult& r) {
    std::printf("%s criterion %d: %s -- %s (%.3f s)\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  };
  bool all = true;
  for (const auto& r : knotmosaic::run_acceptance(opts)) all = all && r.passed;
  std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILED");
  return all ? 0 : 1;
}
