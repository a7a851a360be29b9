#include "class16/quadirr.hpp"

#include "class16/errors.hpp"

namespace class16 {

QuadIrr::QuadIrr(Int p, Int q, Int d) {
    if (d <= 0) throw domain_error("QuadIrr: radicand must be positive, got " + d.get_str());
    if (q == 0) throw domain_error("QuadIrr: zero denominator");
    if (is_square(d)) {
        throw domain_error("QuadIrr: radicand " + d.get_str() +
                           " is a perfect square; value would be rational");
    }
    if ((p * p - d) % q != 0) {
        // Rescale to (P|Q| + sqrt(D Q^2)) / (Q|Q|); same value, invariant holds.
        Int aq = abs(q);
        d *= q * q;
        p *= aq;
        q *= aq;
    }
    p_ = std::move(p);
    q_ = std::move(q);
    d_ = std::move(d);
}

mpf_class QuadIrr::approx(mp_bitcnt_t precision_bits) const {
    mpf_class root(0, precision_bits);
    mpf_class df(d_, precision_bits);
    mpf_sqrt(root.get_mpf_t(), df.get_mpf_t());
    mpf_class num = mpf_class(p_, precision_bits) + root;
    return num / mpf_class(q_, precision_bits);
}

Int ceil_of_state(const Int& p, const Int& q, const Int& sqrt_d) {
    // The value is irrational, so ceil = floor + 1 throughout.
    if (q > 0) return fdiv(p + sqrt_d, q) + 1;
    // (p + sqrt(d))/q = (-p - sqrt(d))/(-q); floor(-sqrt(d)) = -sqrt_d - 1.
    return fdiv(-p - sqrt_d - 1, -q) + 1;
}

Int ceil_of(const QuadIrr& x) { return ceil_of_state(x.P(), x.Q(), isqrt(x.D())); }

}  // namespace class16
