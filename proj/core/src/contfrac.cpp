#include "class16/contfrac.hpp"

#include <map>
#include <utility>

#include "class16/errors.hpp"

namespace class16::contfrac {

NegCF neg_cf(const QuadIrr& x, std::size_t max_steps) {
    const Int& d = x.D();
    const Int sqrt_d = isqrt(d);

    NegCF out;
    out.head = ceil_of_state(x.P(), x.Q(), sqrt_d);

    // Tail state after peeling b: (P, Q) -> (bQ - P, ((bQ-P)^2 - D)/Q).
    Int p = out.head * x.Q() - x.P();
    Int q = exact_div(p * p - d, x.Q());

    std::map<std::pair<Int, Int>, std::size_t> first_seen;
    std::vector<Int> tail;

    for (std::size_t step = 1; step <= max_steps; ++step) {
        auto [it, fresh] = first_seen.try_emplace({p, q}, step);
        if (!fresh) {
            const std::size_t cycle_start = it->second;  // 1-based tail index
            out.preperiod.assign(tail.begin(), tail.begin() + (cycle_start - 1));
            out.period.assign(tail.begin() + (cycle_start - 1), tail.end());
            return out;
        }
        Int b = ceil_of_state(p, q, sqrt_d);
        Int next_p = b * q - p;
        Int next_q = exact_div(next_p * next_p - d, q);
        tail.push_back(std::move(b));
        p = std::move(next_p);
        q = std::move(next_q);
    }
    throw domain_error("neg_cf: no recurrence within " + std::to_string(max_steps) + " steps");
}

Int n_from_period(std::span<const Int> period) {
    if (period.empty()) throw domain_error("n_from_period: empty period");
    Int n = 0;
    for (const Int& b : period) n += b - 3;
    return n;
}

Rat m_of_p(const Int& p, std::size_t max_steps) {
    if (!is_prime(p) || mod(p, 4) != 3) {
        throw domain_error("m_of_p: " + p.get_str() + " is not a prime = 3 (mod 4)");
    }
    NegCF cf = neg_cf(QuadIrr::sqrt_of(p), max_steps);
    return make_rat(n_from_period(cf.period), 3);
}

}  // namespace class16::contfrac
