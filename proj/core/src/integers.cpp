#include "class16/integers.hpp"

#include "class16/errors.hpp"

namespace class16 {

Int isqrt(const Int& n) {
    if (n < 0) throw domain_error("isqrt: negative argument " + n.get_str());
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n, Int* root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (root != nullptr) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Int fdiv(const Int& a, const Int& b) {
    if (b == 0) throw domain_error("fdiv: division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod(const Int& a, const Int& m) {
    if (m == 0) throw domain_error("mod: zero modulus");
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw internal_error("exact_div: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) {
        throw internal_error("exact_div: " + b.get_str() + " does not divide " + a.get_str());
    }
    return q;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int next_prime(const Int& n) {
    Int p;
    mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
    return p;
}

Int factorial_mod(const Int& n, const Int& m) {
    if (m <= 0) throw domain_error("factorial_mod: modulus must be positive");
    if (n < 0) throw domain_error("factorial_mod: negative argument");
    Int acc = mod(Int(1), m);
    for (Int i = 2; i <= n; ++i) acc = mod(acc * i, m);
    return acc;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int to_int(const Rat& q) {
    if (!is_integer(q)) {
        throw internal_error("to_int: " + q.get_str() + " is not an integer");
    }
    return q.get_num();
}

Int floor_rat(const Rat& q) { return fdiv(q.get_num(), q.get_den()); }

std::size_t decimal_digits(const Int& n) {
    if (n == 0) return 1;
    // mpz_sizeinbase may overestimate by one; fix up against a power of ten.
    std::size_t k = mpz_sizeinbase(n.get_mpz_t(), 10);
    if (k <= 1) return 1;
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(k - 1));
    Int a = abs(n);
    return a >= p10 ? k : k - 1;
}

}  // namespace class16
