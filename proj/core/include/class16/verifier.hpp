#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "class16/classgroup.hpp"
#include "class16/contfrac.hpp"
#include "class16/pell.hpp"
#include "class16/sl2.hpp"

namespace class16::verifier {

// Per-class invariant t_C = chi(I) n(I), with n computed twice: from the
// CF period of (a + sqrt p)/b and from n_A of the change-of-basis matrix.
struct ClassTerm {
    classgroup::IdealRep rep;
    int chi;
    Int n_cf;
    Int n_dedekind;
    Int t;
};

struct CheckResults {
    bool mod16 = false;            // h(-p) = h(p) m(p)  (mod 16)
    bool guy = false;              // Guy corollary branch by h(p) mod 8
    bool thmz2 = false;            // 3 h(-p) = sum t_C; t_id = 3m; h(p)=1 case
    bool williams4 = false;        // m = U + 2          (mod 4)
    bool williams8 = false;        // m = 2 + pU - 2(T/U) (mod 8)
    bool mordell = false;          // h(-p) mod 4 vs ((p-1)/2)! mod p
    bool inverses = false;         // t_C = t_{C^{-1}}
    bool mod8_uniformity = false;  // all t_C share one residue mod 8

    bool all() const {
        return mod16 && guy && thmz2 && williams4 && williams8 && mordell &&
               inverses && mod8_uniformity;
    }
};

struct PrimeReport {
    Int p;
    Int m;
    pell::PellSolution pell;
    Int h_plus;
    Int h_minus_oracle;
    Int h_minus_zagier;
    std::vector<ClassTerm> classes;  // sorted: |t| desc, t desc, rep.b, rep.a
    CheckResults checks;
    long long timing_ms = 0;
};

// Cached per-prime data: the Pell solution and the CF period of sqrt(p).
struct PellCacheEntry {
    Int d;
    Int c;
    std::vector<Int> period;
};

struct VerifyOptions {
    std::size_t max_cf_steps = contfrac::kDefaultMaxCfSteps;
    int search_bound = classgroup::kDefaultSearchBound;
    std::function<std::optional<PellCacheEntry>(const Int&)> cache_get;
    std::function<void(const Int&, const PellCacheEntry&)> cache_put;
};

// Change of basis from (sqrt p, 1) for multiplication by the fundamental
// unit on the ideal (a + sqrt p, b):
//   [[d + ac, c(p - a^2)/b], [cb, d - ac]], det 1, trace 2d.
SL2 matrix_for_ideal(const classgroup::IdealRep& rep, const pell::PellSolution& sol);

// n(I) by both routes (CF period sum and n_A via Dedekind sums); throws
// internal_error if they disagree.
Int n_of_ideal(const classgroup::IdealRep& rep, const pell::PellSolution& sol,
               std::size_t max_cf_steps = contfrac::kDefaultMaxCfSteps);

ClassTerm t_of_class(const classgroup::IdealRep& rep, const pell::PellSolution& sol,
                     std::size_t max_cf_steps = contfrac::kDefaultMaxCfSteps);

// (1/3) sum of t_C over the wide classes; throws check_failure unless the
// sum is divisible by 3 and the result equals h_minus_oracle(p).
Int zagier_h_minus(const Int& p);

bool guy_check(const Int& p, const Int& h_plus, const Int& h_minus, const Int& m);

// w = ((p-1)/2)! mod p is +-1; h(-p) = 1 (mod 4) iff w = -1.
bool mordell_check(const Int& p, const Int& h_minus);

struct WilliamsResult {
    bool mod4;
    bool mod8;
};
WilliamsResult williams_check(const Int& p, const Int& m, const pell::PellSolution& sol);

// Full verification of one prime p > 3, p = 3 (mod 4).  Records the eight
// check booleans; throws check_failure for broken structural invariants
// (non-integral m, even h, odd d, even c, missing R/S) and domain_error
// for invalid p.
PrimeReport verify_main(const Int& p, const VerifyOptions& opts = {});

}  // namespace class16::verifier
