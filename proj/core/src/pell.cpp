#include "class16/pell.hpp"

#include <utility>
#include <vector>

#include "class16/errors.hpp"
#include "class16/quadirr.hpp"
#include "class16/sl2.hpp"

namespace class16::pell {

namespace {

void require_pell_prime(const Int& p, const char* who) {
    if (!is_prime(p) || mod(p, 4) != 3) {
        throw domain_error(std::string(who) + ": " + p.get_str() +
                           " is not a prime = 3 (mod 4)");
    }
}

void require_nonsquare(const Int& p, const char* who) {
    if (p < 2 || is_square(p)) {
        throw domain_error(std::string(who) + ": need a non-square p >= 2");
    }
}

// (u1 + v1*sqrt(p)) * (u2 + v2*sqrt(p))
std::pair<Int, Int> quad_mul(const std::pair<Int, Int>& x, const std::pair<Int, Int>& y,
                             const Int& p) {
    return {x.first * y.first + p * x.second * y.second,
            x.first * y.second + x.second * y.first};
}

std::pair<Int, Int> quad_pow(std::pair<Int, Int> base, unsigned long k, const Int& p) {
    std::pair<Int, Int> acc{1, 0};
    while (k) {
        if (k & 1) acc = quad_mul(acc, base, p);
        base = quad_mul(base, base, p);
        k >>= 1;
    }
    return acc;
}

}  // namespace

PellSolution pell_from_period(const Int& p, std::span<const Int> period) {
    require_nonsquare(p, "pell_from_period");
    if (period.empty()) throw domain_error("pell_from_period: empty period");
    SL2 m = SL2::identity();
    for (const Int& b : period) m = m * SL2{b, -1, 1, 0};
    Int t = m.trace();
    if (t <= 2 || mod(t, 2) != 0) {
        throw internal_error("pell_from_period: period product has trace " + t.get_str());
    }
    Int d = t / 2;
    Int c2 = d * d - 1;
    if (c2 % p != 0) {
        throw internal_error("pell_from_period: d^2 - 1 not divisible by p");
    }
    Int c;
    if (!is_square(exact_div(c2, p), &c) || c < 1) {
        throw internal_error("pell_from_period: (d^2 - 1)/p is not a positive square");
    }
    if (d * d - p * c * c != 1) {
        throw internal_error("pell_from_period: verification d^2 - pc^2 = 1 failed");
    }
    return {p, d, c};
}

PellSolution fundamental_pell(const Int& p, std::size_t max_steps) {
    require_pell_prime(p, "fundamental_pell");
    contfrac::NegCF cf = contfrac::neg_cf(QuadIrr::sqrt_of(p), max_steps);
    return pell_from_period(p, cf.period);
}

std::optional<PellSolution> pell_brute_force(const Int& p, const Int& c_limit) {
    require_nonsquare(p, "pell_brute_force");
    for (Int c = 1; c <= c_limit; ++c) {
        Int d;
        if (is_square(p * c * c + 1, &d)) return PellSolution{p, d, c};
    }
    return std::nullopt;
}

PellSolution pell_by_convergents(const Int& p, std::size_t max_steps) {
    require_nonsquare(p, "pell_by_convergents");
    const Int a0 = isqrt(p);
    // Plus-CF state: x_i = (P + sqrt(p))/Q, floor a, then P' = aQ - P,
    // Q' = (p - P'^2)/Q.  Convergents h/k via the standard recurrence.
    Int P = 0, Q = 1, a = a0;
    Int h_prev = 1, h = a0, k_prev = 0, k = 1;
    for (std::size_t i = 0; i < max_steps; ++i) {
        if (h * h - p * k * k == 1) return {p, h, k};
        P = a * Q - P;
        Q = exact_div(p - P * P, Q);
        a = fdiv(P + a0, Q);
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = std::move(h);
        h = std::move(h_next);
        k_prev = std::move(k);
        k = std::move(k_next);
    }
    throw domain_error("pell_by_convergents: no solution within step limit");
}

WilliamsCongruences williams_unit_congruence_data(const PellSolution& sol) {
    if (sol.p <= 3) throw domain_error("williams_unit_congruence_data: need p > 3");
    const Int& T = sol.d;
    const Int& U = sol.c;
    return {mod(U + 2, 4), mod(2 + sol.p * U - 2 * kronecker(T, U), 8)};
}

UnitSquareRoot unit_square_decomposition(const PellSolution& sol) {
    const Int& d = sol.d;
    // (d-1)(d+1) = pc^2 with the factors coprime (d even), so p divides
    // exactly one of them and both quotients are squares.
    Int r, s;
    bool ok = false;
    if ((d + 1) % sol.p == 0) {
        ok = is_square(d - 1, &r) && is_square(exact_div(d + 1, sol.p), &s);
    } else if ((d - 1) % sol.p == 0) {
        ok = is_square(d + 1, &r) && is_square(exact_div(d - 1, sol.p), &s);
    }
    if (!ok || r * s != sol.c || r * r + sol.p * s * s != 2 * d) {
        throw internal_error("unit_square_decomposition: no R, S with R^2 + pS^2 = 2d, RS = c");
    }
    return {r, s};
}

bool is_minimal_by_root_check(const PellSolution& sol) {
    if (sol.d < 1 || sol.c < 1 || sol.d * sol.d - sol.p * sol.c * sol.c != 1) {
        throw domain_error("is_minimal_by_root_check: not a Pell solution");
    }
    // If eps = eta^k for a smaller unit eta = x + y*sqrt(p) (norm +-1),
    // then 2x is within 2 of the integer k-th root of floor(eps), so only
    // a handful of x candidates exist per k.  Exact powering confirms.
    Int eps_floor = sol.d + isqrt(sol.c * sol.c * sol.p);
    // Smallest possible larger-than-1 unit is 2 + sqrt(3), so k is bounded
    // by log(eps) / log(2 + sqrt(3)) < bits(eps) * 0.53.
    unsigned long k_max = static_cast<unsigned long>(
        mpz_sizeinbase(eps_floor.get_mpz_t(), 2) * 0.53 + 2);
    for (unsigned long k = 2; k <= k_max; ++k) {
        Int root;
        mpz_root(root.get_mpz_t(), eps_floor.get_mpz_t(), k);
        for (Int two_x = root; two_x <= root + 2; ++two_x) {
            if (two_x < 2 || mod(two_x, 2) != 0) continue;
            Int x = two_x / 2;
            for (int norm : {1, -1}) {
                Int y2_num = x * x - norm;
                if (y2_num <= 0 || y2_num % sol.p != 0) continue;
                Int y;
                if (!is_square(exact_div(y2_num, sol.p), &y) || y < 1) continue;
                auto powed = quad_pow({x, y}, k, sol.p);
                if (powed.first == sol.d && powed.second == sol.c) return false;
            }
        }
    }
    return true;
}

}  // namespace class16::pell
