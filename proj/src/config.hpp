#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

namespace theta2 {

enum class OutputFormat { kText, kJson, kCsv };

// Run-wide ceilings and knobs.  THETA2_BUDGET in the environment overrides
// the Groebner pair budget.
struct RunConfig {
  int64_t e_max = int64_t{16} << 20;        // precision ceiling (bits)
  int64_t memory_bytes = int64_t{2} << 30;  // per-run memory ceiling
  int64_t pair_budget = 10'000'000;         // Buchberger S-pair reductions
  int workers = 0;                          // 0 = hardware concurrency
  OutputFormat format = OutputFormat::kText;

  static RunConfig defaults() {
    RunConfig cfg;
    if (const char* env = std::getenv("THETA2_BUDGET")) {
      char* end = nullptr;
      const long long v = std::strtoll(env, &end, 10);
      if (end != env && v > 0) cfg.pair_budget = v;
    }
    return cfg;
  }

  int effective_workers() const {
    if (workers > 0) return workers;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
  }
};

}  // namespace theta2
