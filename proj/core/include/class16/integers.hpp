#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "class16/errors.hpp"

namespace class16 {

using Int = mpz_class;
using Rat = mpq_class;

/// floor(sqrt(n)) computed exactly; throws domain_error for n < 0.
Int isqrt(const Int& n);

/// True iff n is a perfect square; the root is written to *root when given.
bool is_square(const Int& n, Int* root = nullptr);

/// Full Kronecker symbol (a/n), defined for all integers n including n <= 0
/// and even n. Multiplicative in both arguments; agrees with the Legendre
/// symbol for odd prime n; zero iff gcd(a, n) != 1.
int kronecker(const Int& a, const Int& n);

/// Floor division a/b, b != 0.
Int fdiv(const Int& a, const Int& b);

/// a mod m in [0, |m|), m != 0.
Int mod(const Int& a, const Int& m);

/// a/b where b must divide a exactly; throws internal_error otherwise.
Int exact_div(const Int& a, const Int& b);

/// Deterministic for every input we care about (BPSW + Miller-Rabin rounds).
bool is_prime(const Int& n);

/// Smallest prime strictly greater than n.
Int next_prime(const Int& n);

/// n! mod m computed by direct modular multiplication.
Int factorial_mod(const Int& n, const Int& m);

/// num/den in lowest terms with positive denominator; den != 0.
Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& q);

/// Value of an integral rational; throws internal_error if q has a
/// denominator.
Int to_int(const Rat& q);

Int floor_rat(const Rat& q);

std::size_t decimal_digits(const Int& n);

}  // namespace class16
