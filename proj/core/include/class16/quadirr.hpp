#pragma once

#include "class16/integers.hpp"

namespace class16 {

/// Exact real quadratic irrational (P + sqrt(D)) / Q.
///
/// Invariants: D > 0 and not a perfect square, Q != 0, and Q | P^2 - D.
/// The divisibility invariant keeps every continued-fraction transition in
/// integer arithmetic; the constructor rescales (P, Q, D) when an input does
/// not satisfy it. Values are immutable after construction.
class QuadIrr {
public:
    QuadIrr(Int p, Int q, Int d);

    /// (0 + sqrt(d)) / 1.
    static QuadIrr sqrt_of(const Int& d) { return QuadIrr(0, 1, d); }

    const Int& P() const { return p_; }
    const Int& Q() const { return q_; }
    const Int& D() const { return d_; }

    /// High-precision numeric value, test support only.
    mpf_class approx(mp_bitcnt_t precision_bits) const;

private:
    Int p_, q_, d_;
};

/// Smallest integer >= (P + sqrt(D)) / Q, computed exactly.
Int ceil_of(const QuadIrr& x);

/// Shared with the expansion loop: ceil((p + sqrt(d)) / q) given
/// sqrt_d = isqrt(d). Assumes d is not a perfect square.
Int ceil_of_state(const Int& p, const Int& q, const Int& sqrt_d);

}  // namespace class16
