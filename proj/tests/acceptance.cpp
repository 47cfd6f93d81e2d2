// Acceptance gate: runs every release criterion and prints one line per
// criterion.  Exits nonzero if any criterion fails.
#include <algorithm>
#include <cstdio>
#include <thread>

#include "tautring/verify.hpp"

int main() {
  tautring::VerifyOptions opts;
  const unsigned hw = std::thread::hardware_concurrency();
  opts.jobs = int(std::min(4u, hw == 0 ? 1u : hw));

  bool all = true;
  for (int i = 1; i <= 10; ++i) {
    const tautring::CriterionResult r = tautring::run_criterion(i, opts);
    all = all && r.pass;
    std::printf("[%s] criterion-%d %s (%lld ms): %s\n", r.pass ? "PASS" : "FAIL",
                r.index, r.name.c_str(), static_cast<long long>(r.ms),
                r.details.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
