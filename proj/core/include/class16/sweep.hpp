#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "class16/classgroup.hpp"
#include "class16/contfrac.hpp"
#include "class16/verifier.hpp"

namespace class16::cli {

class PellCache;

struct SweepOptions {
    Int lo;
    Int hi;
    int jobs = 0;  // 0 = hardware concurrency
    std::size_t max_cf_steps = contfrac::kDefaultMaxCfSteps;
    int search_bound = classgroup::kDefaultSearchBound;
    PellCache* cache = nullptr;  // optional
};

struct SweepItem {
    Int p;
    std::optional<verifier::PrimeReport> report;
    std::string error;  // what() when verification threw

    bool ok() const { return report && error.empty() && report->checks.all(); }
};

struct SweepSummary {
    std::size_t primes = 0;
    std::size_t failures = 0;
    long long wall_ms = 0;
};

// Verifies every prime p = 3 (mod 4) in [lo, hi] on a pool of worker
// threads.  on_item runs on the calling thread, in increasing order of p,
// so output stays deterministic regardless of the number of workers.
// pre: 3 < lo <= hi.
SweepSummary run_sweep(const SweepOptions& opts,
                       const std::function<void(const SweepItem&)>& on_item);

}  // namespace class16::cli
