#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

#include "class16/integers.hpp"

namespace class16::classgroup {

// Binary quadratic form a x^2 + b xy + c y^2.
struct QForm {
    Int a, b, c;

    Int disc() const { return b * b - 4 * a * c; }
    Int eval(const Int& x, const Int& y) const {
        return a * x * x + b * x * y + c * y * y;
    }
    friend bool operator==(const QForm& l, const QForm& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
};

// The ideal I = (a + sqrt(p), b) of norm N(I) = b > 0; b | a^2 - p.
struct IdealRep {
    Int a;
    Int b;
    Int p;
};

// Number of reduced primitive positive-definite forms of discriminant -p;
// equals h(-p) since -p is fundamental for p = 3 (mod 4).  Brute-force
// oracle, independent of everything indefinite.
Int h_minus_oracle(const Int& p);

// Indefinite reduction for positive non-square discriminants:
// reduced iff 0 < b < sqrt(D) and |sqrt(D) - 2|a|| < b.
bool is_reduced(const QForm& f);

// One step along the cycle: (a, b, c) -> (c, r, (r^2 - D)/(4c)) with
// r = -b (mod 2|c|) normalized into the standard window.  Also the
// reduction step for non-reduced forms.
QForm rho(const QForm& f);

// Applies rho until reduced.
QForm reduce_indefinite(const QForm& f);

// The full ordered cycle of reduced forms through reduce_indefinite(f).
std::vector<QForm> cycle(const QForm& f);

// Proper (narrow) equivalence: true iff the reduction of f appears in the
// cycle of g.  Both forms must be primitive with the same positive
// non-square discriminant.
bool is_equivalent(const QForm& f, const QForm& g);

// h(p) = (number of cycles of discriminant 4p) / 2.  The involution
// (a, b, c) -> (-a, b, -c) pairs cycles and never fixes one, because the
// fundamental unit has norm +1.
Int class_number_real(const Int& p);

// Dictionary: form (A, B, C) of discriminant 4p with A > 0 corresponds to
// the ideal (-B/2 + sqrt(p), A).
IdealRep form_to_ideal(const QForm& f);
QForm ideal_to_form(const IdealRep& rep);

// Genus character for the splitting 4p = (-4)(-p): with N = b = N(I),
// v = v_2(N) and N_odd = N / 2^v,
//   chi(I) = kronecker(-p, 2)^v * kronecker(-4, N_odd).
// Never zero; equals (-4/N) for odd N.
int chi_of_ideal(const IdealRep& rep);

// One wide ideal class = one pair of rho-cycles swapped by the involution.
struct WideClass {
    QForm canonical;              // tie-break winner among positive leads
    IdealRep rep;                 // (-B/2 mod A + sqrt(p), A) of canonical
    std::vector<QForm> cycle;     // cycle of the canonical form
    std::vector<QForm> partner;   // its involution image
};

struct ClassGroupDescription {
    Int p;
    std::vector<WideClass> classes;
    std::vector<Int> elementary_divisors;  // ascending, each divides the next

    // reduced form (either cycle of the pair) -> class index
    std::map<std::tuple<Int, Int, Int>, std::size_t> form_index;

    std::size_t size() const { return classes.size(); }
    std::size_t index_of(const QForm& f) const;  // reduces first
    std::size_t identity_index() const;
    std::size_t compose(std::size_t i, std::size_t j) const;
    std::size_t inverse_of(std::size_t i) const;
    std::size_t power(std::size_t i, const Int& e) const;
};

// Enumerates all reduced forms of discriminant 4p, pairs the cycles, picks
// canonical representatives, and computes the group structure.
ClassGroupDescription enumerate_wide_classes(const Int& p);

// Dirichlet/Gauss composition (after making the leading coefficients
// coprime via a represented-value transform).  Returns a reduced form.
QForm gauss_compose(const QForm& f, const QForm& g);

// Elementary divisors of the wide class group, ascending ([ ] for h = 1).
std::vector<Int> class_group_structure(const Int& p);

inline constexpr int kDefaultSearchBound = 50;

// Equivalent representative with odd norm and chi = +1 (then automatically
// N = 1 mod 4).  Scans values represented by both cycles of the wide class
// over |x|, |y| <= bound; throws search_bound_error when exhausted, in
// which case callers double the bound.
IdealRep find_representative(const IdealRep& rep, int bound = kDefaultSearchBound);

// perm[i] = index of the inverse class of class i.
std::vector<std::size_t> inverse_permutation(const ClassGroupDescription& g);

}  // namespace class16::classgroup
