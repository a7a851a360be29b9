#include "class16/dedekind.hpp"

#include <string>

#include "class16/errors.hpp"

namespace class16::dedekind {

namespace {

void require_coprime(const Int& h, const Int& k, const char* who) {
    if (k < 1) throw domain_error(std::string(who) + ": k must be >= 1");
    Int g;
    mpz_gcd(g.get_mpz_t(), h.get_mpz_t(), k.get_mpz_t());
    if (g != 1) throw domain_error(std::string(who) + ": gcd(h, k) != 1");
}

}  // namespace

Rat sawtooth(const Rat& x) {
    if (is_integer(x)) return Rat(0);
    return x - floor_rat(x) - make_rat(1, 2);
}

Rat dedekind_sum_naive(const Int& h, const Int& k) {
    require_coprime(h, k, "dedekind_sum_naive");
    Rat s(0);
    for (Int n = 1; n < k; ++n) {
        s += sawtooth(make_rat(h * n, k)) * sawtooth(make_rat(n, k));
    }
    return s;
}

Rat dedekind_sum(const Int& h0, const Int& k0) {
    require_coprime(h0, k0, "dedekind_sum");
    // s(h, k) depends only on h mod k; for coprime 0 < h < k,
    // s(h, k) + s(k, h) = -1/4 + (h^2 + k^2 + 1)/(12hk).  Euclid descent
    // bottoms out at s(0, 1) = 0.
    Int h = mod(h0, k0);
    Int k = k0;
    Rat acc(0);
    int sign = 1;
    while (h != 0) {
        acc += Rat(sign) * (make_rat(-1, 4) + make_rat(h * h + k * k + 1, 12 * h * k));
        sign = -sign;
        Int next_h = mod(k, h);
        k = h;
        h = next_h;
    }
    return acc;
}

Int n_A(const SL2& m) {
    if (m.det() != 1) throw domain_error("n_A: det != 1");
    if (m.c <= 0) throw domain_error("n_A: need c > 0");
    Int tr = m.trace();
    if (tr <= 2 && tr >= -2) throw domain_error("n_A: need |a+d| > 2");
    Rat value = make_rat(tr, m.c) - 3 - Rat(12) * dedekind_sum(m.d, m.c);
    if (!is_integer(value)) {
        throw internal_error("n_A: non-integral value for trace " + tr.get_str());
    }
    return to_int(value);
}

}  // namespace class16::dedekind
