#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "class16/cache.hpp"
#include "class16/classgroup.hpp"
#include "class16/contfrac.hpp"
#include "class16/dedekind.hpp"
#include "class16/errors.hpp"
#include "class16/pell.hpp"
#include "class16/report.hpp"
#include "class16/sweep.hpp"
#include "class16/verifier.hpp"

namespace {

using namespace class16;

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw domain_error("not an integer: " + s);
    }
}

int cmd_verify(const std::string& p_str, bool json, std::size_t max_steps,
               int bound) {
    verifier::VerifyOptions vo;
    vo.max_cf_steps = max_steps;
    vo.search_bound = bound;
    verifier::PrimeReport r = verifier::verify_main(parse_int(p_str), vo);
    if (json) {
        std::cout << cli::report_to_json(r, /*include_timing=*/true).dump(2) << "\n";
    } else {
        std::cout << cli::report_to_text(r);
    }
    return r.checks.all() ? 0 : 1;
}

int cmd_sweep(const std::string& lo_str, const std::string& hi_str, int jobs,
              bool json, const std::string& csv_path,
              const std::string& cache_path, std::size_t max_steps, int bound) {
    cli::SweepOptions so;
    so.lo = parse_int(lo_str);
    so.hi = parse_int(hi_str);
    so.jobs = jobs;
    so.max_cf_steps = max_steps;
    so.search_bound = bound;
    cli::PellCache cache(cache_path);
    so.cache = &cache;

    std::ofstream csv;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) throw domain_error("cannot open CSV file: " + csv_path);
        csv << cli::csv_header() << "\n";
    }

    auto summary = cli::run_sweep(so, [&](const cli::SweepItem& item) {
        if (item.report) {
            if (json) {
                std::cout << cli::report_to_json(*item.report, false).dump() << "\n";
            } else {
                std::cout << cli::sweep_line(*item.report) << "\n";
            }
            if (csv.is_open()) csv << cli::csv_row(*item.report) << "\n";
        }
        if (!item.ok()) {
            std::cerr << "FAIL p=" << item.p.get_str();
            if (!item.error.empty()) {
                std::cerr << ": " << item.error;
            } else if (item.report) {
                std::cerr << ": checks " << cli::failed_checks(item.report->checks);
            }
            std::cerr << "\n";
        }
    });

    std::cerr << "sweep: " << summary.primes << " primes, " << summary.failures
              << " failures, " << summary.wall_ms << " ms\n";
    return summary.failures == 0 ? 0 : 1;
}

int cmd_cf(const std::vector<std::string>& args, std::size_t max_steps) {
    if (args.size() != 1 && args.size() != 3) {
        throw domain_error("cf takes N, or A B P");
    }
    contfrac::NegCF cf;
    bool with_m = false;
    Int n_arg;
    if (args.size() == 1) {
        n_arg = parse_int(args[0]);
        if (n_arg < 2 || is_square(n_arg)) {
            throw domain_error("cf: N must be a nonsquare integer >= 2");
        }
        cf = contfrac::neg_cf(QuadIrr(0, 1, n_arg), max_steps);
        with_m = is_prime(n_arg) && mod(n_arg, 4) == 3;
    } else {
        Int a = parse_int(args[0]);
        Int b = parse_int(args[1]);
        Int p = parse_int(args[2]);
        if (p < 2 || is_square(p)) {
            throw domain_error("cf: P must be a nonsquare integer >= 2");
        }
        if (b == 0) throw domain_error("cf: B must be nonzero");
        cf = contfrac::neg_cf(QuadIrr(a, b, p), max_steps);
    }
    std::cout << cli::format_negcf(cf);
    if (with_m) {
        std::cout << " m=" << contfrac::m_of_p(n_arg, max_steps).get_str();
    }
    std::cout << " n=" << contfrac::n_from_period(cf.period).get_str() << "\n";
    return 0;
}

int cmd_pell(const std::string& p_str, bool brute, std::size_t max_steps) {
    Int p = parse_int(p_str);
    Int d, c;
    if (brute) {
        auto sol = pell::pell_brute_force(p, Int(10'000'000));
        if (!sol) {
            throw domain_error("pell --brute-force: no solution with c <= 10^7");
        }
        d = sol->d;
        c = sol->c;
    } else {
        auto sol = pell::fundamental_pell(p, max_steps);
        d = sol.d;
        c = sol.c;
    }
    std::cout << "d=" << d.get_str() << " c=" << c.get_str() << "\n";
    return 0;
}

int cmd_dedekind(const std::string& h_str, const std::string& k_str) {
    Rat s = dedekind::dedekind_sum(parse_int(h_str), parse_int(k_str));
    std::cout << s.get_str() << "\n";
    return 0;
}

// ---- worked examples --------------------------------------------------

std::string t_multiset(const verifier::PrimeReport& r) {
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

std::string group_string(const std::vector<Int>& divisors) {
    if (divisors.empty()) return "trivial";
    std::ostringstream out;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (i) out << " x ";
        out << "Z/" << divisors[i].get_str();
    }
    return out.str();
}

int cmd_examples() {
    bool ok = true;
    auto expect = [&ok](bool cond, const std::string& what) {
        if (!cond) {
            std::cerr << "examples: mismatch: " << what << "\n";
            ok = false;
        }
    };
    std::ostringstream out;

    {
        Int p = 79;
        verifier::PrimeReport r = verifier::verify_main(p);
        auto grp = classgroup::class_group_structure(p);

        std::string cf_sqrt = cli::format_negcf(contfrac::neg_cf(QuadIrr(0, 1, p)));
        expect(cf_sqrt == "[9; (9,18)]", "cf(sqrt 79) = " + cf_sqrt);
        expect(r.m == 7, "m(79)");
        expect(r.pell.d == 80 && r.pell.c == 9, "pell(79)");
        expect(r.h_plus == 3, "h(79)");
        expect(grp.size() == 1 && grp[0] == 3, "class group of disc 4*79");
        expect(r.h_minus_oracle == 5 && r.h_minus_zagier == 5, "h(-79)");

        auto cf1 = contfrac::neg_cf(QuadIrr(1, 3, p));
        std::string cf1_str = cli::format_negcf(cf1);
        expect(cf1_str == "[4; (2,2,4,3,7)]", "cf((1+sqrt 79)/3) = " + cf1_str);
        Int n1 = contfrac::n_from_period(cf1.period);
        expect(n1 == 3, "n((1+sqrt 79)/3)");
        int chi1 = classgroup::chi_of_ideal({1, 3, p});
        expect(chi1 == -1, "chi((1+sqrt 79, 3))");

        std::string ts = t_multiset(r);
        expect(ts == "{21, -3 x2}", "t multiset for 79: " + ts);
        expect(r.checks.all(), "all checks for 79");

        out << "p = 79\n";
        out << "  sqrt(79) = " << cf_sqrt << "\n";
        out << "  m(79)=" << r.m.get_str() << "\n";
        out << "  pell: d=" << r.pell.d.get_str() << " c=" << r.pell.c.get_str() << "\n";
        out << "  h(79)=" << r.h_plus.get_str() << "  class group: " << group_string(grp) << "\n";
        out << "  (1+sqrt(79))/3 = " << cf1_str << "  n=" << n1.get_str()
            << " chi=" << (chi1 > 0 ? "+1" : "-1") << "\n";
        out << "  t multiset: " << ts << "\n";
        out << "  h(-79) = " << r.h_minus_zagier.get_str() << "\n";
        out << "  mod 16: " << Int(r.h_plus * r.m).get_str() << " = "
            << r.h_minus_oracle.get_str() << " (mod 16) ok\n";
    }

    {
        Int p = 439;
        verifier::PrimeReport r = verifier::verify_main(p);
        auto grp = classgroup::class_group_structure(p);

        std::string cf_sqrt = cli::format_negcf(contfrac::neg_cf(QuadIrr(0, 1, p)));
        expect(cf_sqrt == "[21; (21,42)]", "cf(sqrt 439) = " + cf_sqrt);
        expect(r.m == 19, "m(439)");
        expect(r.pell.d == 440 && r.pell.c == 21, "pell(439)");
        expect(r.h_plus == 5, "h(439)");
        expect(grp.size() == 1 && grp[0] == 5, "class group of disc 4*439");
        expect(r.h_minus_oracle == 15 && r.h_minus_zagier == 15, "h(-439)");

        auto cf7 = contfrac::neg_cf(QuadIrr(7, 13, p));
        Int n7 = contfrac::n_from_period(cf7.period);
        expect(cf7.period.size() == 20, "period length of (7+sqrt 439)/13");
        expect(n7 == -15, "n((7+sqrt 439)/13)");
        int chi7 = classgroup::chi_of_ideal({7, 13, p});
        expect(chi7 == 1, "chi((7+sqrt 439, 13))");

        auto cf13 = contfrac::neg_cf(QuadIrr(13, 18, p));
        std::string cf13_str = cli::format_negcf(cf13);
        expect(cf13_str == "[2; (9,5,5,2,3)]", "cf((13+sqrt 439)/18) = " + cf13_str);
        Int n13 = contfrac::n_from_period(cf13.period);
        expect(n13 == 9, "n((13+sqrt 439)/18)");
        int chi13 = classgroup::chi_of_ideal({13, 18, p});
        expect(chi13 == 1, "chi((13+sqrt 439, 18))");

        std::string ts = t_multiset(r);
        expect(ts == "{57, -15 x2, 9 x2}", "t multiset for 439: " + ts);
        expect(r.checks.all(), "all checks for 439");

        out << "\np = 439\n";
        out << "  sqrt(439) = " << cf_sqrt << "\n";
        out << "  m(439)=" << r.m.get_str() << "\n";
        out << "  pell: d=" << r.pell.d.get_str() << " c=" << r.pell.c.get_str() << "\n";
        out << "  h(439)=" << r.h_plus.get_str() << "  class group: " << group_string(grp) << "\n";
        out << "  (7+sqrt(439))/13: period length " << cf7.period.size()
            << "  n=" << n7.get_str() << " chi=" << (chi7 > 0 ? "+1" : "-1") << "\n";
        out << "  (13+sqrt(439))/18 = " << cf13_str << "  n=" << n13.get_str()
            << " chi=" << (chi13 > 0 ? "+1" : "-1") << "\n";
        out << "  t multiset: " << ts << "\n";
        out << "  h(-439) = " << r.h_minus_zagier.get_str() << "\n";
        out << "  mod 16: " << Int(r.h_plus * r.m).get_str() << " = "
            << r.h_minus_oracle.get_str() << " (mod 16) ok\n";
    }

    {
        Int p = 43063;
        verifier::PrimeReport r = verifier::verify_main(p);
        auto grp = classgroup::class_group_structure(p);

        expect(r.m == 193, "m(43063)");
        expect(r.h_plus == 9, "h(43063)");
        expect(grp.size() == 2 && grp[0] == 3 && grp[1] == 3,
               "class group of disc 4*43063");
        expect(r.h_minus_oracle == 73 && r.h_minus_zagier == 73, "h(-43063)");
        std::string ts = t_multiset(r);
        expect(ts == "{579, -141 x2, -69 x2, 51 x2, -21 x2}",
               "t multiset for 43063: " + ts);
        expect(r.checks.all(), "all checks for 43063");

        out << "\np = 43063\n";
        out << "  m(43063)=" << r.m.get_str() << "\n";
        out << "  pell: d=" << r.pell.d.get_str() << " c=" << r.pell.c.get_str() << "\n";
        out << "  h(43063)=" << r.h_plus.get_str() << "  class group: " << group_string(grp) << "\n";
        out << "  t multiset: " << ts << "\n";
        out << "  h(-43063) = " << r.h_minus_zagier.get_str() << "\n";
        out << "  mod 16: " << Int(r.h_plus * r.m).get_str() << " = "
            << r.h_minus_oracle.get_str() << " (mod 16) ok\n";
    }

    std::cout << out.str();
    if (!ok) std::cerr << "examples: FAILED\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "class16: exact verification of the mod-16 class number congruence "
        "h(-p) = h(p) m(p) for primes p = 3 (mod 4)"};
    app.require_subcommand(1);

    std::size_t max_steps = contfrac::kDefaultMaxCfSteps;
    int bound = classgroup::kDefaultSearchBound;

    std::string verify_p;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "verify one prime and print a report");
    verify->add_option("p", verify_p, "prime p = 3 (mod 4)")->required();
    verify->add_flag("--json", verify_json, "emit the JSON report");
    verify->add_option("--max-cf-steps", max_steps, "step cap for CF expansion");
    verify->add_option("--search-bound", bound, "initial search bound for odd-norm representatives");

    std::string lo_str, hi_str, csv_path;
    std::string cache_path = "./class16-cache.jsonl";
    int jobs = 0;
    bool sweep_json = false;
    auto* sweep = app.add_subcommand("sweep", "verify every prime p = 3 (mod 4) in [lo, hi]");
    sweep->add_option("lo", lo_str, "lower bound, > 3")->required();
    sweep->add_option("hi", hi_str, "upper bound")->required();
    sweep->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");
    sweep->add_flag("--json", sweep_json, "one JSON report per line");
    sweep->add_option("--csv", csv_path, "write per-prime rows to a CSV file");
    sweep->add_option("--cache", cache_path, "Pell unit cache file (JSONL)");
    sweep->add_option("--max-cf-steps", max_steps, "step cap for CF expansion");
    sweep->add_option("--search-bound", bound, "initial search bound for odd-norm representatives");

    auto* examples = app.add_subcommand(
        "examples", "recompute the worked examples (p = 79, 439, 43063) and check them");

    std::vector<std::string> cf_args;
    auto* cf = app.add_subcommand("cf", "negative continued fraction of sqrt(N) or (A+sqrt(P))/B");
    cf->add_option("values", cf_args, "N  |  A B P")->expected(-1);
    cf->add_option("--max-cf-steps", max_steps, "step cap for CF expansion");

    std::string pell_p;
    bool brute = false;
    auto* pell_cmd = app.add_subcommand("pell", "minimal solution of d^2 - p c^2 = 1");
    pell_cmd->add_option("p", pell_p, "prime p = 3 (mod 4)")->required();
    pell_cmd->add_flag("--brute-force", brute, "search c = 1, 2, ... directly (any nonsquare p)");
    pell_cmd->add_option("--max-cf-steps", max_steps, "step cap for CF expansion");

    std::string ded_h, ded_k;
    auto* ded = app.add_subcommand("dedekind", "Dedekind sum s(h, k) as an exact rational");
    ded->add_option("H", ded_h, "numerator argument")->required();
    ded->add_option("K", ded_k, "modulus, k >= 1, gcd(h, k) = 1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_p, verify_json, max_steps, bound);
        if (sweep->parsed())
            return cmd_sweep(lo_str, hi_str, jobs, sweep_json, csv_path, cache_path,
                             max_steps, bound);
        if (examples->parsed()) return cmd_examples();
        if (cf->parsed()) return cmd_cf(cf_args, max_steps);
        if (pell_cmd->parsed()) return cmd_pell(pell_p, brute, max_steps);
        if (ded->parsed()) return cmd_dedekind(ded_h, ded_k);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
