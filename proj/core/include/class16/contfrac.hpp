#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "class16/integers.hpp"
#include "class16/quadirr.hpp"

namespace class16::contfrac {

// Step cap for CF expansion: turns a non-terminating bug into an error
// instead of a hang.
inline constexpr std::size_t kDefaultMaxCfSteps = 10'000'000;

// Negative (minus) continued fraction b0 - 1/(b1 - 1/(b2 - ...)).
// All entries of preperiod and period are >= 2; period is the minimal
// repeating cycle of the expansion.
struct NegCF {
    Int head;
    std::vector<Int> preperiod;
    std::vector<Int> period;
};

// Expands a quadratic irrational.  Minimal period via first recurrence of
// the exact (P, Q) tail state.
NegCF neg_cf(const QuadIrr& x, std::size_t max_steps = kDefaultMaxCfSteps);

// Sum of (b_i - 3) over a period.
Int n_from_period(std::span<const Int> period);

// m(p) = (1/3) * sum of (b_i - 3) over the minimal period of sqrt(p),
// for p prime = 3 (mod 4).  Integral for p > 3; m(3) = 1/3 — callers
// check with is_integer().
Rat m_of_p(const Int& p, std::size_t max_steps = kDefaultMaxCfSteps);

}  // namespace class16::contfrac
