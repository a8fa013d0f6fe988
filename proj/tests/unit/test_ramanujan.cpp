#include "doctest.h"

#include <numeric>
#include <random>

#include "mularith/ramanujan.hpp"

using namespace mularith;

TEST_CASE("exponential oracle") {
    for (Nat k = 1; k <= 10; ++k) {
        CHECK(c_exponential(1, k) == 1);
    }
    CHECK(c_exponential(6, 1) == 1);
    CHECK(c_exponential(4, 2) == -2);
    CHECK_THROWS_AS(c_exponential(kExponentialOrderLimit + 1, 1), GuardError);
    CHECK_THROWS_AS(c_exponential(0, 1), std::invalid_argument);
}

TEST_CASE("divisor sum") {
    CHECK(c_divisor(4, 4) == 2);
    CHECK(c_divisor(4, 1) == 0);
    CHECK(c_divisor(6, 3) == -2);
    for (Nat n = 1; n <= 200; ++n) {
        CHECK(c_divisor(n, n) == to_int(euler_phi(n)));
        CHECK(c_divisor(n, 1) == mobius(n));
    }
}

TEST_CASE("prime-power formula") {
    CHECK(c_prime_power_method(8, 8) == 4);
    CHECK(c_prime_power_method(8, 4) == -4);
    CHECK(c_prime_power_method(8, 2) == 0);
    CHECK(ramanujan_sum(12, 6) == c_divisor(12, 6));
    CHECK_THROWS_AS(c_prime_power_method(3, 0), std::invalid_argument);
}

TEST_CASE("three routes agree") {
    for (Nat n = 1; n <= 60; ++n) {
        for (Nat k = 1; k <= 120; ++k) {
            const Int expected = c_exponential(n, k);
            REQUIRE(c_divisor(n, k) == expected);
            REQUIRE(c_prime_power_method(n, k) == expected);
        }
    }
}

TEST_CASE("bounds, gcd reduction and periodicity") {
    for (Nat n = 1; n <= 200; ++n) {
        for (Nat k = 1; k <= 200; ++k) {
            const Int c = ramanujan_sum(n, k);
            CHECK(abs(c) <= to_int(std::gcd(k, n)));
            CHECK(c == ramanujan_sum(n, std::gcd(k, n)));
            if (n <= 100 && k <= 100) {
                CHECK(c == ramanujan_sum(n, k + n));
            }
        }
    }
}

TEST_CASE("multiplicative in both variables") {
    std::mt19937_64 rng(3);
    int tested = 0;
    while (tested < 3000) {
        const Nat n1 = rng() % 60 + 1, k1 = rng() % 60 + 1, n2 = rng() % 60 + 1, k2 = rng() % 60 + 1;
        if (std::gcd(n1 * k1, n2 * k2) != 1) {
            continue;
        }
        ++tested;
        CHECK(c_divisor(n1 * n2, k1 * k2) == c_divisor(n1, k1) * c_divisor(n2, k2));
    }
}
