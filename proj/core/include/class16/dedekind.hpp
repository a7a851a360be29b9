#pragma once

#include "class16/integers.hpp"
#include "class16/sl2.hpp"

namespace class16::dedekind {

// Sawtooth ((x)): x - floor(x) - 1/2 for x not an integer, 0 otherwise.
Rat sawtooth(const Rat& x);

// Dedekind sum s(h, k) = sum_{n=1}^{k-1} ((hn/k)) ((n/k)), gcd(h,k)=1, k >= 1.
// Direct O(k) evaluation; oracle for the fast version, intended for k up to
// ~10^6 only.
Rat dedekind_sum_naive(const Int& h, const Int& k);

// Same value via the reciprocity law, O(log k) big-integer steps.  Usable
// when k has hundreds of digits.
Rat dedekind_sum(const Int& h, const Int& k);

// For A = [[a, b], [c, d]] in SL2(Z) with c > 0 and |a+d| > 2,
// n_A = (a + d)/c - 3 - 12 s(d, c).  The value is an integer whenever A
// arises from a hyperbolic fixed point; non-integrality throws
// internal_error.
Int n_A(const SL2& m);

}  // namespace class16::dedekind
