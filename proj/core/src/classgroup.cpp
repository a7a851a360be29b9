#include "class16/classgroup.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "class16/errors.hpp"

namespace class16::classgroup {

namespace {

using Key = std::tuple<Int, Int, Int>;

Key key(const QForm& f) { return {f.a, f.b, f.c}; }

Int content(const QForm& f) {
    Int g;
    mpz_gcd(g.get_mpz_t(), f.a.get_mpz_t(), f.b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.c.get_mpz_t());
    return g;
}

void require_indefinite(const QForm& f, const char* who) {
    Int d = f.disc();
    if (d <= 0 || is_square(d)) {
        throw domain_error(std::string(who) +
                           ": discriminant must be positive and non-square");
    }
}

void require_primitive(const QForm& f, const char* who) {
    if (content(f) != 1) {
        throw domain_error(std::string(who) + ": form is not primitive");
    }
}

void require_p(const Int& p, const char* who) {
    if (p <= 3 || !is_prime(p) || mod(p, 4) != 3) {
        throw domain_error(std::string(who) + ": need a prime p > 3 with p = 3 (mod 4)");
    }
}

// Wide-class pairing involution; commutes with rho.
QForm involution(const QForm& f) { return {-f.a, f.b, -f.c}; }

QForm inverse_form(const QForm& f) { return {f.a, -f.b, f.c}; }

void require_valid_ideal(const IdealRep& rep, const char* who) {
    if (rep.b <= 0) throw domain_error(std::string(who) + ": norm must be positive");
    if ((rep.a * rep.a - rep.p) % rep.b != 0) {
        throw domain_error(std::string(who) + ": b does not divide a^2 - p");
    }
}

// Walks the rho cycle starting from an already-reduced form.
std::vector<QForm> cycle_from_reduced(const QForm& start) {
    std::vector<QForm> out;
    QForm cur = start;
    do {
        out.push_back(cur);
        cur = rho(cur);
        if (out.size() > 10'000'000) {
            throw internal_error("cycle: unreasonable cycle length");
        }
    } while (!(cur == start));
    return out;
}

// (A, (-B/2) mod A) for a positive-lead form; the class tie-break key.
std::pair<Int, Int> rep_key(const QForm& f) {
    return {f.a, mod(exact_div(-f.b, 2), f.a)};
}

// Smallest positive-lead form of a cycle under rep_key.
QForm canonical_of(const std::vector<QForm>& cyc) {
    const QForm* best = nullptr;
    std::pair<Int, Int> best_key;
    for (const QForm& h : cyc) {
        if (h.a <= 0) continue;
        auto k = rep_key(h);
        if (!best || k < best_key) {
            best = &h;
            best_key = std::move(k);
        }
    }
    if (!best) throw internal_error("cycle without positive-lead forms");
    return *best;
}

// Every reduced form of discriminant 4p, keyed for deterministic iteration.
// Primitivity is automatic: a common factor g would give g^2 | 4p with p an
// odd prime, forcing the coefficients' parity contradiction mod 4.
std::map<Key, QForm> all_reduced_forms(const Int& p) {
    const Int delta = 4 * p;
    const Int s = isqrt(delta);
    std::map<Key, QForm> out;
    for (Int b = 2; b <= s; b += 2) {
        const Int m = exact_div(delta - b * b, 4);  // |a| * |c|
        for (Int u = 1; u * u <= m; ++u) {
            if (m % u != 0) continue;
            const Int divisors[2] = {u, Int(m / u)};
            for (const Int& w : divisors) {
                QForm f{w, b, -exact_div(m, w)};
                if (!is_reduced(f)) continue;
                out.emplace(key(f), f);
                QForm g = involution(f);
                out.emplace(key(g), g);
            }
        }
    }
    return out;
}

// Cycle pairs with canonical representatives, in deterministic order.
std::vector<WideClass> pair_cycles(const Int& p) {
    auto all = all_reduced_forms(p);
    std::set<Key> visited;
    std::vector<WideClass> classes;
    for (const auto& [k, f] : all) {
        if (visited.count(k)) continue;
        std::vector<QForm> cyc = cycle_from_reduced(f);
        std::vector<QForm> par;
        par.reserve(cyc.size());
        for (const QForm& h : cyc) par.push_back(involution(h));
        for (const QForm& h : cyc) {
            if (!visited.insert(key(h)).second) {
                throw internal_error("pair_cycles: cycle revisited a form");
            }
        }
        for (const QForm& h : par) {
            if (!all.count(key(h))) {
                throw internal_error("pair_cycles: involution image is not reduced");
            }
            if (!visited.insert(key(h)).second) {
                throw internal_error("pair_cycles: involution fixed a cycle");
            }
        }
        QForm c1 = canonical_of(cyc);
        QForm c2 = canonical_of(par);
        bool use_first = rep_key(c1) < rep_key(c2);
        std::vector<QForm>& base = use_first ? cyc : par;
        const QForm& canonical = use_first ? c1 : c2;
        auto at = std::find(base.begin(), base.end(), canonical);
        std::rotate(base.begin(), at, base.end());
        std::vector<QForm> partner;
        partner.reserve(base.size());
        for (const QForm& h : base) partner.push_back(involution(h));

        WideClass wc;
        wc.canonical = base[0];
        wc.rep = IdealRep{rep_key(wc.canonical).second, wc.canonical.a, p};
        wc.cycle = std::move(base);
        wc.partner = std::move(partner);
        classes.push_back(std::move(wc));
    }
    return classes;
}

// SL2 change of variables with first column (x, y), gcd(x, y) = 1.
QForm transform_by_column(const QForm& g, const Int& x, const Int& y) {
    Int gg, s, t;
    mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(),
               y.get_mpz_t());
    if (gg != 1) throw internal_error("transform_by_column: gcd(x, y) != 1");
    Int u = -t, w = s;  // det [[x, u], [y, w]] = xw - uy = xs + yt = 1
    Int a2 = g.eval(x, y);
    Int b2 = 2 * (g.a * x * u + g.c * y * w) + g.b * (x * w + y * u);
    Int c2 = g.eval(u, w);
    return {a2, b2, c2};
}

// Equivalent form with leading coefficient positive and coprime to m.
QForm coprime_lead(const QForm& g, const Int& m) {
    for (long r = 1; r <= 1000; ++r) {
        for (Int x = -r; x <= r; ++x) {
            for (Int y = -r; y <= r; ++y) {
                if (std::max(abs(x), abs(y)) != r) continue;
                Int gcd_xy;
                mpz_gcd(gcd_xy.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
                if (gcd_xy != 1) continue;
                Int v = g.eval(x, y);
                if (v <= 0) continue;
                Int gv;
                mpz_gcd(gv.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
                if (gv != 1) continue;
                return transform_by_column(g, x, y);
            }
        }
    }
    throw internal_error("gauss_compose: no represented value coprime to the other lead");
}

}  // namespace

Int h_minus_oracle(const Int& p) {
    require_p(p, "h_minus_oracle");
    Int count = 0;
    // Reduced positive-definite (a, b, c), disc -p: |b| <= a <= c with
    // b > 0 on the boundaries; b odd since -p = 1 (mod 4) fails.
    for (Int b = 1; 3 * b * b <= p; b += 2) {
        const Int n = exact_div(b * b + p, 4);  // = a*c
        for (Int a = b; a * a <= n; ++a) {
            if (n % a != 0) continue;
            count += (a == b || a * a == n) ? 1 : 2;
        }
    }
    return count;
}

bool is_reduced(const QForm& f) {
    const Int d = f.disc();
    if (d <= 0 || f.b <= 0 || f.a == 0 || f.c == 0) return false;
    if (f.b * f.b >= d) return false;
    const Int two_a = 2 * abs(f.a);
    const Int outer = f.b + two_a;
    if (outer * outer <= d) return false;
    if (two_a > f.b) {
        const Int inner = two_a - f.b;
        if (inner * inner >= d) return false;
    }
    return true;
}

QForm rho(const QForm& f) {
    require_indefinite(f, "rho");
    const Int delta = f.disc();
    const Int abs_c = abs(f.c);
    const Int s = isqrt(delta);
    // r = -b (mod 2|c|), placed in (|c| - 2|c|, |c|] while |c| > sqrt(D),
    // else in (sqrt(D) - 2|c|, sqrt(D)].
    const Int hi = abs_c > s ? abs_c : s;
    const Int r = hi - mod(hi + f.b, 2 * abs_c);
    return {f.c, r, exact_div(r * r - delta, 4 * f.c)};
}

QForm reduce_indefinite(const QForm& f) {
    require_indefinite(f, "reduce_indefinite");
    QForm cur = f;
    for (int i = 0; i < 100000; ++i) {
        if (is_reduced(cur)) return cur;
        cur = rho(cur);
    }
    throw internal_error("reduce_indefinite: reduction did not terminate");
}

std::vector<QForm> cycle(const QForm& f) {
    require_indefinite(f, "cycle");
    require_primitive(f, "cycle");
    return cycle_from_reduced(reduce_indefinite(f));
}

bool is_equivalent(const QForm& f, const QForm& g) {
    if (f.disc() != g.disc()) throw domain_error("is_equivalent: discriminant mismatch");
    require_indefinite(f, "is_equivalent");
    require_primitive(f, "is_equivalent");
    require_primitive(g, "is_equivalent");
    const QForm rf = reduce_indefinite(f);
    for (const QForm& h : cycle_from_reduced(reduce_indefinite(g))) {
        if (h == rf) return true;
    }
    return false;
}

Int class_number_real(const Int& p) {
    require_p(p, "class_number_real");
    return Int(pair_cycles(p).size());
}

IdealRep form_to_ideal(const QForm& f) {
    if (f.a <= 0) throw domain_error("form_to_ideal: leading coefficient must be positive");
    const Int delta = f.disc();
    if (delta <= 0 || mod(delta, 4) != 0 || is_square(delta)) {
        throw domain_error("form_to_ideal: discriminant must be 4p, positive, non-square");
    }
    return {exact_div(-f.b, 2), f.a, exact_div(delta, 4)};
}

QForm ideal_to_form(const IdealRep& rep) {
    require_valid_ideal(rep, "ideal_to_form");
    return {rep.b, -2 * rep.a, exact_div(rep.a * rep.a - rep.p, rep.b)};
}

int chi_of_ideal(const IdealRep& rep) {
    require_valid_ideal(rep, "chi_of_ideal");
    const unsigned long v = mpz_scan1(rep.b.get_mpz_t(), 0);
    Int n_odd = rep.b >> v;
    int chi = kronecker(-4, n_odd);
    if (v % 2 == 1) chi *= kronecker(-rep.p, 2);
    if (chi == 0) throw internal_error("chi_of_ideal: character vanished");
    return chi;
}

std::size_t ClassGroupDescription::index_of(const QForm& f) const {
    if (f.disc() != 4 * p) throw domain_error("index_of: discriminant is not 4p");
    const QForm r = reduce_indefinite(f);
    auto it = form_index.find(key(r));
    if (it == form_index.end()) {
        throw internal_error("index_of: reduced form missing from the class table");
    }
    return it->second;
}

std::size_t ClassGroupDescription::identity_index() const {
    const Int t = isqrt(p);
    return index_of(QForm{1, 2 * t, t * t - p});
}

std::size_t ClassGroupDescription::compose(std::size_t i, std::size_t j) const {
    if (i >= classes.size() || j >= classes.size()) {
        throw internal_error("compose: class index out of range");
    }
    return index_of(gauss_compose(classes[i].canonical, classes[j].canonical));
}

std::size_t ClassGroupDescription::inverse_of(std::size_t i) const {
    if (i >= classes.size()) throw internal_error("inverse_of: class index out of range");
    return index_of(inverse_form(classes[i].canonical));
}

std::size_t ClassGroupDescription::power(std::size_t i, const Int& e) const {
    if (e < 0) throw domain_error("power: negative exponent");
    std::size_t acc = identity_index();
    std::size_t base = i;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = compose(acc, base);
        k >>= 1;
        if (k > 0) base = compose(base, base);
    }
    return acc;
}

namespace {

// Elementary divisors from order-counting: for each prime q | h, the counts
// N_j = #{g : g^(q^j) = 1} = q^(s_j) determine the partition of the q-part
// (c_j = s_j - s_{j-1} is the number of cyclic factors of exponent >= j).
std::vector<Int> divisors_from_group(const ClassGroupDescription& g) {
    const std::size_t h = g.classes.size();
    if (h == 1) return {};
    std::map<Int, int> factorization;
    Int rem = static_cast<unsigned long>(h);
    for (Int q = 2; q * q <= rem; ++q) {
        while (rem % q == 0) {
            ++factorization[q];
            rem = exact_div(rem, q);
        }
    }
    if (rem > 1) ++factorization[rem];

    const std::size_t id = g.identity_index();
    std::vector<Int> primes;
    std::vector<std::vector<int>> exponents;  // descending partition per prime
    for (const auto& [q, e] : factorization) {
        std::vector<int> c;  // c[j-1] = #factors with exponent >= j
        Int qj = 1;
        int s_prev = 0;
        for (int j = 1; j <= e; ++j) {
            qj *= q;
            std::size_t count = 0;
            for (std::size_t i = 0; i < h; ++i) {
                if (g.power(i, qj) == id) ++count;
            }
            int s = 0;
            Int n = static_cast<unsigned long>(count);
            while (n > 1) {
                if (n % q != 0) {
                    throw internal_error("class group: q^j-torsion count is not a power of q");
                }
                n = exact_div(n, q);
                ++s;
            }
            c.push_back(s - s_prev);
            s_prev = s;
        }
        std::vector<int> lambda;  // conjugate partition
        for (int k = 1; k <= c.front(); ++k) {
            int parts = 0;
            for (int cj : c) {
                if (cj >= k) ++parts;
            }
            lambda.push_back(parts);
        }
        primes.push_back(q);
        exponents.push_back(std::move(lambda));
    }

    std::size_t rank = 0;
    for (const auto& lam : exponents) rank = std::max(rank, lam.size());
    std::vector<Int> divisors;
    for (std::size_t k = 0; k < rank; ++k) {
        Int d = 1;
        for (std::size_t qi = 0; qi < primes.size(); ++qi) {
            if (k < exponents[qi].size()) {
                for (int a = 0; a < exponents[qi][k]; ++a) d *= primes[qi];
            }
        }
        divisors.push_back(d);
    }
    std::reverse(divisors.begin(), divisors.end());  // ascending chain
    Int product = 1;
    for (const Int& d : divisors) product *= d;
    if (product != Int(static_cast<unsigned long>(h))) {
        throw internal_error("class group: elementary divisor product != h");
    }
    return divisors;
}

}  // namespace

ClassGroupDescription enumerate_wide_classes(const Int& p) {
    require_p(p, "enumerate_wide_classes");
    ClassGroupDescription g;
    g.p = p;
    g.classes = pair_cycles(p);
    for (std::size_t i = 0; i < g.classes.size(); ++i) {
        for (const QForm& h : g.classes[i].cycle) g.form_index.emplace(key(h), i);
        for (const QForm& h : g.classes[i].partner) g.form_index.emplace(key(h), i);
    }
    if (g.classes.size() % 2 == 0) {
        throw internal_error("enumerate_wide_classes: even class count (h must be odd)");
    }
    g.elementary_divisors = divisors_from_group(g);
    return g;
}

QForm gauss_compose(const QForm& f, const QForm& g) {
    if (f.disc() != g.disc()) throw domain_error("gauss_compose: discriminant mismatch");
    require_indefinite(f, "gauss_compose");
    require_primitive(f, "gauss_compose");
    require_primitive(g, "gauss_compose");
    const Int delta = f.disc();

    QForm lhs = reduce_indefinite(f);
    QForm rhs = reduce_indefinite(g);
    if (lhs.a < 0) lhs = rho(lhs);  // a and c alternate sign along a cycle
    if (rhs.a < 0) rhs = rho(rhs);

    Int gcd_leads;
    mpz_gcd(gcd_leads.get_mpz_t(), lhs.a.get_mpz_t(), rhs.a.get_mpz_t());
    if (gcd_leads != 1) rhs = coprime_lead(rhs, lhs.a);

    // Dirichlet composition of united forms: B = b1 (mod 2a1), B = b2
    // (mod 2a2); with coprime leads the CRT solution always exists.
    const Int& a1 = lhs.a;
    const Int& b1 = lhs.b;
    const Int& a2 = rhs.a;
    const Int& b2 = rhs.b;
    Int t = 0;
    if (a2 != 1) {
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), a1.get_mpz_t(), a2.get_mpz_t()) == 0) {
            throw internal_error("gauss_compose: leads not invertible after uniting");
        }
        t = mod(exact_div(b2 - b1, 2) * inv, a2);
    }
    const Int B = b1 + 2 * a1 * t;
    const Int A = a1 * a2;
    const Int C = exact_div(B * B - delta, 4 * A);
    return reduce_indefinite({A, B, C});
}

std::vector<Int> class_group_structure(const Int& p) {
    return enumerate_wide_classes(p).elementary_divisors;
}

IdealRep find_representative(const IdealRep& rep, int bound) {
    if (bound < 1) throw domain_error("find_representative: bound must be >= 1");
    require_valid_ideal(rep, "find_representative");
    if (mod(rep.b, 2) == 1 && chi_of_ideal(rep) == 1) return rep;

    const QForm r0 = reduce_indefinite(ideal_to_form(rep));
    const std::vector<QForm> cyc = cycle_from_reduced(r0);
    std::vector<QForm> par;
    par.reserve(cyc.size());
    for (const QForm& h : cyc) par.push_back(involution(h));

    // chi is constant on each narrow class and flips across the pair, so
    // scan values represented by the canonical form of both cycles; odd
    // v = 1 (mod 4) is exactly "N odd, chi = +1".
    bool found = false;
    Int best_v, best_a;
    for (const QForm& g : {canonical_of(cyc), canonical_of(par)}) {
        for (Int x = -bound; x <= bound; ++x) {
            for (Int y = -bound; y <= bound; ++y) {
                Int gcd_xy;
                mpz_gcd(gcd_xy.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
                if (gcd_xy != 1) continue;
                const Int v = g.eval(x, y);
                if (v <= 0 || mod(v, 4) != 1) continue;
                if (found && v > best_v) continue;
                const QForm tf = transform_by_column(g, x, y);
                const Int a = mod(exact_div(-tf.b, 2), v);
                if (!found || std::pair(v, a) < std::pair(best_v, best_a)) {
                    found = true;
                    best_v = v;
                    best_a = a;
                }
            }
        }
    }
    if (!found) {
        throw search_bound_error("find_representative: no odd chi=+1 value within |x|,|y| <= " +
                                 std::to_string(bound));
    }
    IdealRep out{best_a, best_v, rep.p};
    if (chi_of_ideal(out) != 1 || mod(out.b, 4) != 1) {
        throw internal_error("find_representative: candidate violates chi / mod-4 contract");
    }
    const QForm fo = ideal_to_form(out);
    if (!is_equivalent(fo, r0) && !is_equivalent(fo, involution(r0))) {
        throw internal_error("find_representative: search left the ideal class");
    }
    return out;
}

std::vector<std::size_t> inverse_permutation(const ClassGroupDescription& g) {
    std::vector<std::size_t> perm(g.classes.size());
    for (std::size_t i = 0; i < g.classes.size(); ++i) perm[i] = g.inverse_of(i);
    return perm;
}

}  // namespace class16::classgroup
