#include "class16/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "class16/dedekind.hpp"
#include "class16/errors.hpp"
#include "class16/quadirr.hpp"

namespace class16::verifier {

namespace {

void require_same_p(const classgroup::IdealRep& rep, const pell::PellSolution& sol,
                    const char* who) {
    if (rep.p != sol.p) {
        throw domain_error(std::string(who) + ": ideal and Pell solution disagree on p");
    }
}

// Both n routes at once; n_of_ideal and t_of_class share this.
std::pair<Int, Int> n_both_routes(const classgroup::IdealRep& rep,
                                  const pell::PellSolution& sol,
                                  std::size_t max_cf_steps) {
    contfrac::NegCF cf = contfrac::neg_cf(QuadIrr(rep.a, rep.b, rep.p), max_cf_steps);
    Int n_cf = contfrac::n_from_period(cf.period);
    Int n_ded = dedekind::n_A(matrix_for_ideal(rep, sol));
    if (n_cf != n_ded) {
        throw internal_error("n(I) routes disagree for p=" + rep.p.get_str() + ", ideal (" +
                             rep.a.get_str() + "+sqrt(p), " + rep.b.get_str() + "): CF " +
                             n_cf.get_str() + " vs Dedekind " + n_ded.get_str());
    }
    return {n_cf, n_ded};
}

}  // namespace

SL2 matrix_for_ideal(const classgroup::IdealRep& rep, const pell::PellSolution& sol) {
    require_same_p(rep, sol, "matrix_for_ideal");
    if (rep.b <= 0 || (rep.a * rep.a - rep.p) % rep.b != 0) {
        throw domain_error("matrix_for_ideal: invalid ideal representative");
    }
    SL2 m{sol.d + rep.a * sol.c, exact_div(sol.c * (rep.p - rep.a * rep.a), rep.b),
          sol.c * rep.b, sol.d - rep.a * sol.c};
    if (m.det() != 1 || m.trace() != 2 * sol.d) {
        throw internal_error("matrix_for_ideal: determinant/trace verification failed");
    }
    return m;
}

Int n_of_ideal(const classgroup::IdealRep& rep, const pell::PellSolution& sol,
               std::size_t max_cf_steps) {
    return n_both_routes(rep, sol, max_cf_steps).first;
}

ClassTerm t_of_class(const classgroup::IdealRep& rep, const pell::PellSolution& sol,
                     std::size_t max_cf_steps) {
    auto [n_cf, n_ded] = n_both_routes(rep, sol, max_cf_steps);
    int chi = classgroup::chi_of_ideal(rep);
    return {rep, chi, n_cf, n_ded, chi * n_cf};
}

Int zagier_h_minus(const Int& p) {
    pell::PellSolution sol = pell::fundamental_pell(p);
    classgroup::ClassGroupDescription grp = classgroup::enumerate_wide_classes(p);
    Int sum = 0;
    for (const classgroup::WideClass& wc : grp.classes) {
        sum += t_of_class(wc.rep, sol).t;
    }
    if (mod(sum, 3) != 0) {
        throw check_failure("zagier_h_minus: sum of t_C is not divisible by 3 for p=" +
                            p.get_str());
    }
    Int z = exact_div(sum, 3);
    Int oracle = classgroup::h_minus_oracle(p);
    if (z != oracle) {
        throw check_failure("zagier_h_minus: (1/3) sum t_C = " + z.get_str() +
                            " but the form count gives h(-p) = " + oracle.get_str());
    }
    return z;
}

bool guy_check(const Int& p, const Int& h_plus, const Int& h_minus, const Int& m) {
    if (p <= 3) throw domain_error("guy_check: need p > 3");
    const Int r = mod(h_plus * h_minus - m, 16);
    const Int h8 = mod(h_plus, 8);
    if (r == 0) return h8 == 1 || h8 == 7;
    if (r == 8) return h8 == 3 || h8 == 5;
    return false;
}

bool mordell_check(const Int& p, const Int& h_minus) {
    if (p <= 3) throw domain_error("mordell_check: need p > 3");
    const Int w = factorial_mod(exact_div(p - 1, 2), p);
    if (w != 1 && w != p - 1) {
        throw internal_error("mordell_check: ((p-1)/2)! mod p is not +-1");
    }
    const Int h4 = mod(h_minus, 4);
    return (w == p - 1) ? h4 == 1 : h4 == 3;
}

WilliamsResult williams_check(const Int& p, const Int& m, const pell::PellSolution& sol) {
    pell::WilliamsCongruences data = pell::williams_unit_congruence_data(sol);
    return {mod(m, 4) == data.mod4, mod(m, 8) == data.mod8};
}

PrimeReport verify_main(const Int& p, const VerifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();

    if (!is_prime(p)) throw domain_error("verify: " + p.get_str() + " is not prime");
    if (mod(p, 4) == 1) throw domain_error("verify: p ≡ 1 (mod 4) unsupported");
    if (mod(p, 4) != 3) throw domain_error("verify: need an odd prime p ≡ 3 (mod 4)");
    if (p == 3) throw domain_error("verify: p = 3 is outside the verified domain (m(3) = 1/3)");

    PrimeReport r;
    r.p = p;

    // CF period of sqrt(p) and the Pell solution, via the cache if any.
    std::vector<Int> period;
    std::optional<PellCacheEntry> hit;
    if (opts.cache_get) hit = opts.cache_get(p);
    if (hit) {
        if (hit->period.empty() || hit->d * hit->d - p * hit->c * hit->c != 1) {
            throw internal_error("verify: cache returned an invalid record for p=" + p.get_str());
        }
        period = std::move(hit->period);
        r.pell = {p, std::move(hit->d), std::move(hit->c)};
    } else {
        contfrac::NegCF cf = contfrac::neg_cf(QuadIrr::sqrt_of(p), opts.max_cf_steps);
        period = std::move(cf.period);
        r.pell = pell::pell_from_period(p, period);
        if (opts.cache_put) opts.cache_put(p, {r.pell.d, r.pell.c, period});
    }

    Rat m_exact = make_rat(contfrac::n_from_period(period), 3);
    if (!is_integer(m_exact)) {
        throw check_failure("verify: m(p) is not an integer for p=" + p.get_str());
    }
    r.m = to_int(m_exact);

    if (mod(r.pell.d, 2) != 0) throw check_failure("verify: Pell d is odd for p=" + p.get_str());
    if (mod(r.pell.c, 2) != 1) throw check_failure("verify: Pell c is even for p=" + p.get_str());
    pell::unit_square_decomposition(r.pell);  // R, S must exist

    classgroup::ClassGroupDescription grp = classgroup::enumerate_wide_classes(p);
    r.h_plus = static_cast<unsigned long>(grp.classes.size());
    if (mod(r.h_plus, 2) != 1) throw check_failure("verify: h(p) is even for p=" + p.get_str());
    r.h_minus_oracle = classgroup::h_minus_oracle(p);
    if (mod(r.h_minus_oracle, 2) != 1) {
        throw check_failure("verify: h(-p) is even for p=" + p.get_str());
    }

    std::vector<ClassTerm> terms;
    terms.reserve(grp.classes.size());
    Int sum_t = 0;
    for (const classgroup::WideClass& wc : grp.classes) {
        terms.push_back(t_of_class(wc.rep, r.pell, opts.max_cf_steps));
        sum_t += terms.back().t;
    }

    r.h_minus_zagier = mod(sum_t, 3) == 0 ? exact_div(sum_t, 3) : Int(0);
    const std::size_t id = grp.identity_index();
    const bool anchor = terms[id].t == 3 * r.m && terms[id].chi == 1;
    const bool h1_case = r.h_plus != 1 || r.h_minus_oracle == r.m;
    r.checks.thmz2 = 3 * r.h_minus_oracle == sum_t && anchor && h1_case;

    r.checks.mod16 = mod(r.h_minus_oracle, 16) == mod(r.h_plus * r.m, 16);
    r.checks.guy = guy_check(p, r.h_plus, r.h_minus_oracle, r.m);
    const WilliamsResult wil = williams_check(p, r.m, r.pell);
    r.checks.williams4 = wil.mod4;
    r.checks.williams8 = wil.mod8;
    r.checks.mordell = mordell_check(p, r.h_minus_oracle);

    const std::vector<std::size_t> inv = classgroup::inverse_permutation(grp);
    r.checks.inverses = true;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].t != terms[inv[i]].t) r.checks.inverses = false;
    }
    r.checks.mod8_uniformity = true;
    for (const ClassTerm& ct : terms) {
        if (mod(ct.t, 8) != mod(terms.front().t, 8)) r.checks.mod8_uniformity = false;
    }

    std::sort(terms.begin(), terms.end(), [](const ClassTerm& l, const ClassTerm& r) {
        const Int la = abs(l.t), ra = abs(r.t);
        if (la != ra) return la > ra;
        if (l.t != r.t) return l.t > r.t;
        if (l.rep.b != r.rep.b) return l.rep.b < r.rep.b;
        return l.rep.a < r.rep.a;
    });
    r.classes = std::move(terms);

    r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return r;
}

}  // namespace class16::verifier
