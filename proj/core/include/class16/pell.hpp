#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "class16/contfrac.hpp"
#include "class16/integers.hpp"

namespace class16::pell {

// Minimal positive solution of d^2 - p c^2 = 1.  For p prime = 3 (mod 4)
// the negative Pell equation is insoluble, so eps = d + c*sqrt(p) is the
// (totally positive) fundamental unit, and Williams' (T, U) = (d, c).
struct PellSolution {
    Int p, d, c;
};

// Primary route: product of the period matrices [[b_i, -1], [1, 0]] of
// neg_cf(sqrt(p)); d = trace/2, c = isqrt((d^2-1)/p), verified exactly.
PellSolution fundamental_pell(const Int& p,
                              std::size_t max_steps = contfrac::kDefaultMaxCfSteps);

// Same matrix product, for an already-computed period of sqrt(p).
PellSolution pell_from_period(const Int& p, std::span<const Int> period);

// Iterate c = 1..c_limit testing p*c^2 + 1 for squareness.  Independent
// oracle; nullopt when the fundamental c exceeds the limit.
std::optional<PellSolution> pell_brute_force(const Int& p, const Int& c_limit);

// Classical route: first convergent h/k of the ordinary (plus) continued
// fraction of sqrt(p) with h^2 - p k^2 = 1.  Fast even when c has hundreds
// of digits; shares no code with the minus-CF machinery.
PellSolution pell_by_convergents(const Int& p, std::size_t max_steps = 1'000'000);

// Expected residues of m(p) from the fundamental unit: m = U + 2 (mod 4)
// and m = 2 + pU - 2*(T/U) (mod 8), with (T, U) = (d, c).
struct WilliamsCongruences {
    Int mod4, mod8;
};
WilliamsCongruences williams_unit_congruence_data(const PellSolution& sol);

// 2(d - c*sqrt(p)) = (R - S*sqrt(p))^2, i.e. R^2 + pS^2 = 2d and RS = c.
// R, S always exist for a fundamental solution with p = 3 (mod 4): d is
// even, so d-1 and d+1 are coprime and (d-1)(d+1) = pc^2 splits as a
// square times p-part.
struct UnitSquareRoot {
    Int r, s;
};
UnitSquareRoot unit_square_decomposition(const PellSolution& sol);

// True iff d + c*sqrt(p) is not a proper power of a smaller unit, i.e. the
// solution is genuinely fundamental.  Exact: extracts integer k-th root
// candidates and confirms by exact powering, for every feasible k >= 2.
bool is_minimal_by_root_check(const PellSolution& sol);

}  // namespace class16::pell
