// Acceptance gate: one line per criterion, exit 1 if any fails.
//
//   1  p = 79 worked example, exact, < 1 s
//   2  p = 439 worked example, exact, < 2 s
//   3  p = 43063 worked example, exact, < 60 s
//   4  sweep of all primes p = 3 (mod 4), 3 < p <= 20000: checks (a)-(j),
//      zero violations, <= 15 min on 4 workers
//   5  Dedekind suite: naive = reciprocity for coprime 1 <= h < k <= 300,
//      zero reciprocity residual, inverse invariance, 6k s integral,
//      Jacobi parity relation for odd c <= 199
//   6  Pell suite: brute force where reachable, convergent oracle < 2000,
//      minimality for p < 500
//   7  determinism: `examples` and cold-vs-warm sweep byte-identical

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "class16/cache.hpp"
#include "class16/classgroup.hpp"
#include "class16/contfrac.hpp"
#include "class16/dedekind.hpp"
#include "class16/pell.hpp"
#include "class16/quadirr.hpp"
#include "class16/report.hpp"
#include "class16/sweep.hpp"
#include "class16/verifier.hpp"

using namespace class16;

namespace {

constexpr long long kBudget1Ms = 1'000;
constexpr long long kBudget2Ms = 2'000;
constexpr long long kBudget3Ms = 60'000;
constexpr long long kBudget4Ms = 900'000;
constexpr int kSweepJobs = 4;
constexpr long kSweepHi = 20'000;
constexpr long kDedekindK = 300;
constexpr long kJacobiC = 199;
constexpr long kPellRange = 2'000;
constexpr long kMinimalityRange = 500;
const Int kBruteCap = 1'000'000;

int failures = 0;

long long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

void report(int idx, bool ok, const std::string& what, long long ms) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << idx << ": " << what
              << "  [" << ms << " ms]" << std::endl;
    if (!ok) ++failures;
}

void run_criterion(int idx, const std::string& what,
                   const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    long long ms = ms_since(t0);
    std::string line = what;
    if (!detail.empty()) line += " -- " + detail;
    report(idx, ok, line, ms);
}

std::string multiset_of(const verifier::PrimeReport& r) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < r.classes.size();) {
        std::size_t j = i;
        while (j < r.classes.size() && r.classes[j].t == r.classes[i].t) ++j;
        if (i) out << ", ";
        out << r.classes[i].t.get_str();
        if (j - i > 1) out << " x" << (j - i);
        i = j;
    }
    out << '}';
    return out.str();
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// --- criterion bodies ---------------------------------------------------

bool criterion1(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    verifier::PrimeReport r = verifier::verify_main(Int(79));
    bool ok = true;
    ok &= r.m == 7;
    ok &= r.pell.d == 80 && r.pell.c == 9;
    ok &= r.h_plus == 3;
    ok &= multiset_of(r) == "{21, -3 x2}";
    ok &= r.h_minus_oracle == 5 && r.h_minus_zagier == 5;
    ok &= cli::format_negcf(contfrac::neg_cf(QuadIrr::sqrt_of(79))) == "[9; (9,18)]";
    ok &= cli::format_negcf(contfrac::neg_cf(QuadIrr(1, 3, 79))) == "[4; (2,2,4,3,7)]";
    ok &= mod(r.h_plus * r.m - r.h_minus_oracle, Int(16)) == 0;
    ok &= r.checks.all();
    long long ms = ms_since(t0);
    if (ms >= kBudget1Ms) {
        detail = "budget exceeded";
        return false;
    }
    if (!ok) detail = "value mismatch";
    return ok;
}

bool criterion2(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    verifier::PrimeReport r = verifier::verify_main(Int(439));
    bool ok = true;
    ok &= r.m == 19;
    ok &= r.h_plus == 5;
    ok &= multiset_of(r) == "{57, -15 x2, 9 x2}";
    ok &= r.h_minus_oracle == 15 && r.h_minus_zagier == 15;
    auto cf7 = contfrac::neg_cf(QuadIrr(7, 13, 439));
    ok &= cf7.period.size() == 20;
    ok &= contfrac::n_from_period(cf7.period) == -15;
    ok &= cli::format_negcf(contfrac::neg_cf(QuadIrr(13, 18, 439))) ==
          "[2; (9,5,5,2,3)]";
    ok &= contfrac::n_from_period(contfrac::neg_cf(QuadIrr(13, 18, 439)).period) == 9;
    ok &= classgroup::chi_of_ideal({7, 13, 439}) == 1;
    ok &= classgroup::chi_of_ideal({13, 18, 439}) == 1;
    ok &= r.checks.all();
    long long ms = ms_since(t0);
    if (ms >= kBudget2Ms) {
        detail = "budget exceeded";
        return false;
    }
    if (!ok) detail = "value mismatch";
    return ok;
}

bool criterion3(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    verifier::PrimeReport r = verifier::verify_main(Int(43063));
    bool ok = true;
    ok &= r.m == 193;
    ok &= r.h_plus == 9;
    ok &= classgroup::class_group_structure(Int(43063)) == std::vector<Int>{3, 3};
    ok &= multiset_of(r) == "{579, -141 x2, -69 x2, 51 x2, -21 x2}";
    ok &= r.h_minus_oracle == 73 && r.h_minus_zagier == 73;
    ok &= r.h_plus * r.m == 1737;
    ok &= mod(Int(1737 - 73), Int(16)) == 0;
    ok &= mod(Int(73 - 9), Int(16)) == 0;
    ok &= r.checks.all();
    long long ms = ms_since(t0);
    if (ms >= kBudget3Ms) {
        detail = "budget exceeded";
        return false;
    }
    if (!ok) detail = "value mismatch";
    return ok;
}

bool criterion4(std::string& detail) {
    // Checks (a)-(j) all live inside verify_main: (a) thmz2, (b) mod16,
    // (c) guy, (d) the dual n route (throws on mismatch), (e) inverses,
    // (f) mod8 uniformity, (g) williams4/8, (h) mordell, (i) h parity
    // (throws), (j) Pell parity and the R,S decomposition (throws).
    cli::SweepOptions so;
    so.lo = 4;
    so.hi = kSweepHi;
    so.jobs = kSweepJobs;
    std::vector<std::string> bad;
    auto t0 = std::chrono::steady_clock::now();
    cli::SweepSummary s = cli::run_sweep(so, [&](const cli::SweepItem& item) {
        if (!item.ok()) {
            bad.push_back(item.p.get_str() +
                          (item.error.empty() ? "" : " (" + item.error + ")"));
        }
    });
    long long ms = ms_since(t0);
    std::ostringstream d;
    d << s.primes << " primes";
    if (!bad.empty()) {
        d << ", first failures:";
        for (std::size_t i = 0; i < bad.size() && i < 3; ++i) d << ' ' << bad[i];
    }
    detail = d.str();
    if (ms >= kBudget4Ms) {
        detail += ", budget exceeded";
        return false;
    }
    return bad.empty() && s.failures == 0 && s.primes > 1000;
}

bool criterion5(std::string& detail) {
    long pairs = 0;
    for (Int k = 2; k <= kDedekindK; ++k) {
        for (Int h = 1; h < k; ++h) {
            if (gcd(h, k) != 1) continue;
            ++pairs;
            Rat fast = dedekind::dedekind_sum(h, k);
            if (fast != dedekind::dedekind_sum_naive(h, k)) {
                detail = "naive mismatch at h=" + h.get_str() + " k=" + k.get_str();
                return false;
            }
            if (!is_integer(Rat(Int(6 * k)) * fast)) {
                detail = "6k s not integral at h=" + h.get_str() + " k=" + k.get_str();
                return false;
            }
            Rat lhs = fast + dedekind::dedekind_sum(k, h);
            Rat rhs = make_rat(Int(-1), Int(4)) +
                      make_rat(h * h + k * k + 1, 12 * h * k);
            if (lhs != rhs) {
                detail = "reciprocity residual at h=" + h.get_str() +
                         " k=" + k.get_str();
                return false;
            }
            Int hinv;
            if (mpz_invert(hinv.get_mpz_t(), h.get_mpz_t(), k.get_mpz_t()) != 0 &&
                dedekind::dedekind_sum(hinv, k) != fast) {
                detail = "inverse invariance failed at h=" + h.get_str() +
                         " k=" + k.get_str();
                return false;
            }
        }
    }
    for (Int c = 1; c <= kJacobiC; c += 2) {
        for (Int d = 1; d < c; ++d) {
            if (gcd(d, c) != 1) continue;
            Rat e = (make_rat(c - 1, Int(2)) -
                     Rat(6) * c * dedekind::dedekind_sum(d, c)) /
                    2;
            if (!is_integer(e)) {
                detail = "Jacobi exponent not integral at d=" + d.get_str() +
                         " c=" + c.get_str();
                return false;
            }
            int sign = mpz_odd_p(to_int(e).get_mpz_t()) ? -1 : 1;
            if (kronecker(d, c) != sign) {
                detail = "Jacobi parity failed at d=" + d.get_str() +
                         " c=" + c.get_str();
                return false;
            }
        }
    }
    detail = std::to_string(pairs) + " coprime pairs";
    return true;
}

bool criterion6(std::string& detail) {
    int brute_hits = 0, primes = 0, minimal = 0;
    for (Int p = 7; p < kPellRange; p = next_prime(p)) {
        if (mod(p, 4) != 3) continue;
        ++primes;
        pell::PellSolution s = pell::fundamental_pell(p);
        pell::PellSolution conv = pell::pell_by_convergents(p);
        if (s.d != conv.d || s.c != conv.c) {
            detail = "convergent mismatch at p=" + p.get_str();
            return false;
        }
        auto brute = pell::pell_brute_force(p, kBruteCap);
        if (brute) {
            ++brute_hits;
            if (s.d != brute->d || s.c != brute->c) {
                detail = "brute-force mismatch at p=" + p.get_str();
                return false;
            }
        }
        if (p < kMinimalityRange) {
            if (!pell::is_minimal_by_root_check(s)) {
                detail = "root check rejected p=" + p.get_str();
                return false;
            }
            ++minimal;
        }
    }
    detail = std::to_string(primes) + " primes, " + std::to_string(brute_hits) +
             " brute-verified, " + std::to_string(minimal) + " minimality-checked";
    return brute_hits >= 50 && minimal >= 40;
}

// --- criterion 7: CLI determinism ----------------------------------------

struct RunResult {
    int rc = -1;
    std::string out;
};

RunResult run_cli(const std::string& binary, const std::string& args) {
    std::string cmd = binary + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (pipe == nullptr) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool criterion7(const std::string& binary, std::string& detail) {
    RunResult ex1 = run_cli(binary, "examples 2>/dev/null");
    RunResult ex2 = run_cli(binary, "examples 2>/dev/null");
    if (ex1.rc != 0 || ex2.rc != 0) {
        detail = "examples exited nonzero";
        return false;
    }
    if (ex1.out != ex2.out || ex1.out.empty()) {
        detail = "examples output not byte-stable";
        return false;
    }

    auto cache = std::filesystem::temp_directory_path() /
                 ("class16-acceptance-cache-" + std::to_string(::getpid()) + ".jsonl");
    std::filesystem::remove(cache);
    std::string sweep_args = "sweep 4 2000 --jobs 4 --json --cache " +
                             cache.string() + " 2>/dev/null";
    RunResult cold = run_cli(binary, sweep_args);
    RunResult warm = run_cli(binary, sweep_args);
    bool cache_written = std::filesystem::exists(cache) &&
                         std::filesystem::file_size(cache) > 0;
    std::filesystem::remove(cache);
    if (cold.rc != 0 || warm.rc != 0) {
        detail = "sweep exited nonzero";
        return false;
    }
    if (!cache_written) {
        detail = "cache file never materialized";
        return false;
    }
    if (cold.out != warm.out || cold.out.empty()) {
        detail = "cold/warm sweep reports differ";
        return false;
    }
    detail = "examples + sweep to 2000";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::string binary = argc > 1 ? argv[1] : "./tools/class16";

    run_criterion(1, "p=79 worked example", criterion1);
    run_criterion(2, "p=439 worked example", criterion2);
    run_criterion(3, "p=43063 worked example", criterion3);
    run_criterion(4, "sweep 3 < p <= 20000, checks (a)-(j)", criterion4);
    run_criterion(5, "Dedekind sum suite", criterion5);
    run_criterion(6, "Pell oracle suite", criterion6);
    run_criterion(7, "byte-level determinism",
                  [&binary](std::string& d) { return criterion7(binary, d); });

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 7 criteria pass" << std::endl;
    return 0;
}
