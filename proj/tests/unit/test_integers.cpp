#include "doctest.h"

#include "class16/integers.hpp"

using namespace class16;

TEST_SUITE("integers") {

TEST_CASE("isqrt brackets the true root") {
    for (Int n = 0; n <= 2000; ++n) {
        Int r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("isqrt is exact on large squares") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20260825ul);
    for (int i = 0; i < 50; ++i) {
        Int x = rng.get_z_bits(256) + 2;
        Int sq = x * x;
        CHECK(isqrt(sq) == x);
        CHECK(isqrt(sq - 1) == x - 1);
        CHECK(isqrt(sq + 1) == x);
    }
}

TEST_CASE("isqrt rejects negatives") {
    CHECK_THROWS_AS(isqrt(Int(-1)), domain_error);
}

TEST_CASE("is_square agrees with isqrt") {
    for (Int n = 0; n <= 2000; ++n) {
        Int r = isqrt(n);
        Int root = -1;
        bool sq = is_square(n, &root);
        CHECK(sq == (r * r == n));
        if (sq) CHECK(root == r);
    }
    CHECK_FALSE(is_square(Int(-4)));
}

// Independent oracle: Euler's criterion.  For an odd prime q and a not
// divisible by q, (a|q) = a^((q-1)/2) mod q.
TEST_CASE("kronecker matches Euler's criterion for odd primes") {
    for (Int q = 3; q < 100; q = next_prime(q)) {
        for (Int a = 0; a < q; ++a) {
            int k = kronecker(a, q);
            if (a == 0) {
                CHECK(k == 0);
                continue;
            }
            Int e;
            mpz_powm(e.get_mpz_t(), a.get_mpz_t(), Int((q - 1) / 2).get_mpz_t(),
                     q.get_mpz_t());
            int euler = (e == 1) ? 1 : (e == q - 1 ? -1 : 0);
            REQUIRE(euler != 0);  // q prime, a nonzero
            CHECK(k == euler);
        }
    }
}

TEST_CASE("kronecker is multiplicative in both arguments") {
    for (long a = -12; a <= 12; ++a) {
        for (long b = -12; b <= 12; ++b) {
            for (long n : {-15L, -9L, -2L, -1L, 1L, 2L, 3L, 9L, 15L, 21L}) {
                // (0 | +-1) = 1 by convention, which breaks the zero cases
                // for n = +-1; multiplicativity holds everywhere else.
                if ((a == 0 || b == 0) && (n == 1 || n == -1)) continue;
                CHECK(kronecker(Int(a * b), Int(n)) ==
                      kronecker(Int(a), Int(n)) * kronecker(Int(b), Int(n)));
            }
            if (a != 0 || b != 0) {
                for (long m : {3L, 5L, 7L, 9L}) {
                    CHECK(kronecker(Int(m), Int(a) * Int(b)) ==
                          kronecker(Int(m), Int(a)) * kronecker(Int(m), Int(b)));
                }
            }
        }
    }
}

TEST_CASE("kronecker special cases") {
    // (a|2) = 0, 1, -1 for a even, a = +-1 mod 8, a = +-3 mod 8.
    CHECK(kronecker(Int(2), Int(2)) == 0);
    CHECK(kronecker(Int(1), Int(2)) == 1);
    CHECK(kronecker(Int(7), Int(2)) == 1);
    CHECK(kronecker(Int(3), Int(2)) == -1);
    CHECK(kronecker(Int(5), Int(2)) == -1);
    // (a|1) = 1, (a|0) = [|a| = 1], (a|-1) = sign.
    CHECK(kronecker(Int(-7), Int(1)) == 1);
    CHECK(kronecker(Int(1), Int(0)) == 1);
    CHECK(kronecker(Int(5), Int(0)) == 0);
    CHECK(kronecker(Int(-3), Int(-1)) == -1);
    CHECK(kronecker(Int(3), Int(-1)) == 1);
    // Values used by the genus character.
    CHECK(kronecker(Int(-4), Int(1)) == 1);
    CHECK(kronecker(Int(-4), Int(3)) == -1);
    CHECK(kronecker(Int(-4), Int(5)) == 1);
    CHECK(kronecker(Int(-4), Int(13)) == 1);
    CHECK(kronecker(Int(-79), Int(2)) == 1);   // -79 = 1 mod 8
    CHECK(kronecker(Int(-439), Int(2)) == 1);  // -439 = 1 mod 8
}

TEST_CASE("fdiv and mod satisfy the floor division identity") {
    // mod ignores the sign of the modulus (always returns 0 <= r < |m|),
    // so the joint identity q*m + r == a is a statement about m > 0 only;
    // for m < 0, fdiv is still floor division and mod(a, m) == mod(a, -m).
    for (long a = -30; a <= 30; ++a) {
        for (long m : {1L, 3L, 7L}) {
            Int q = fdiv(Int(a), Int(m));
            Int r = mod(Int(a), Int(m));
            CHECK(q * m + r == a);
            CHECK(r >= 0);
            CHECK(r < m);
        }
        for (long m : {-7L, -3L, -1L}) {
            Int q = fdiv(Int(a), Int(m));
            CHECK(q * m >= a);        // q = floor(a/m), m < 0
            CHECK((q + 1) * m < a);
            CHECK(mod(Int(a), Int(m)) == mod(Int(a), Int(-m)));
        }
    }
    CHECK_THROWS_AS(mod(Int(1), Int(0)), domain_error);
}

TEST_CASE("exact_div enforces divisibility") {
    CHECK(exact_div(Int(92), Int(4)) == 23);
    CHECK(exact_div(Int(-92), Int(4)) == -23);
    CHECK_THROWS_AS(exact_div(Int(93), Int(4)), internal_error);
}

TEST_CASE("primality helpers") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(43063)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(43063L * 7)));
    CHECK(next_prime(Int(7)) == 11);
    CHECK(next_prime(Int(8)) == 11);
}

TEST_CASE("factorial_mod and Wilson's theorem") {
    CHECK(factorial_mod(Int(5), Int(1000003)) == 120);
    CHECK(factorial_mod(Int(0), Int(97)) == 1);
    for (Int p = 5; p < 200; p = next_prime(p)) {
        CHECK(factorial_mod(p - 1, p) == p - 1);  // (p-1)! = -1 (mod p)
    }
}

TEST_CASE("decimal_digits") {
    CHECK(decimal_digits(Int(0)) == 1);
    CHECK(decimal_digits(Int(9)) == 1);
    CHECK(decimal_digits(Int(10)) == 2);
    CHECK(decimal_digits(Int(-100)) == 3);
    Int big = 1;
    for (int i = 0; i < 40; ++i) big *= 10;
    CHECK(decimal_digits(big) == 41);
    CHECK(decimal_digits(big - 1) == 40);
}

TEST_CASE("rational helpers") {
    Rat half = make_rat(Int(1), Int(2));
    CHECK_FALSE(is_integer(half));
    CHECK(is_integer(make_rat(Int(21), Int(3))));
    CHECK(to_int(make_rat(Int(21), Int(3))) == 7);
    CHECK_THROWS_AS(to_int(half), internal_error);
    CHECK(floor_rat(half) == 0);
    CHECK(floor_rat(make_rat(Int(-1), Int(2))) == -1);
    CHECK(floor_rat(make_rat(Int(-4), Int(2))) == -2);
    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), domain_error);
}

}  // TEST_SUITE
