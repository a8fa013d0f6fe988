#include "doctest.h"

#include "mularith/congruence.hpp"
#include "mularith/orbicyclic.hpp"

using namespace mularith;

namespace {

CongruenceInstance singletons(Nat M, std::int64_t n, std::vector<Nat> ds) {
    std::vector<DivisorSet> sets;
    for (Nat d : ds) {
        sets.push_back(DivisorSet{d});
    }
    return CongruenceInstance(M, n, std::move(sets));
}

}  // namespace

TEST_CASE("instances") {
    CHECK(CongruenceInstance(5, -1, {DivisorSet{1}}).target() == 4);
    CHECK(CongruenceInstance(5, 12, {DivisorSet{1}}).target() == 2);
    CHECK_THROWS_AS(CongruenceInstance(4, 0, {DivisorSet{3}}), std::invalid_argument);
    CHECK_THROWS_AS(CongruenceInstance(0, 0, {DivisorSet{1}}), std::invalid_argument);
    CHECK_THROWS_AS(CongruenceInstance(4, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(DivisorSet(std::vector<Nat>{}), std::invalid_argument);
    CHECK(DivisorSet{4, 1, 4}.values().size() == 2);
}

TEST_CASE("constraint string parsing") {
    const auto sets = parse_divisor_sets("1,2;4");
    REQUIRE(sets.size() == 2);
    CHECK(sets[0].contains(2));
    CHECK(sets[1].is_singleton());
    CHECK(parse_divisor_sets("1;1").size() == 2);
    CHECK_THROWS_AS(parse_divisor_sets(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_sets("1;;2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_sets("1;2;"), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_sets("1,x"), std::invalid_argument);
}

TEST_CASE("brute force") {
    CHECK(count_bruteforce(singletons(4, 0, {1, 1})) == 2);
    CHECK(count_bruteforce(singletons(4, 1, {1, 1})) == 0);
    CHECK(count_bruteforce(singletons(2, 1, {1, 1, 1})) == 1);
    // gcd(0, M) = M selects x = 0
    CHECK(count_bruteforce(singletons(6, 0, {6, 6})) == 1);
    CHECK(count_bruteforce(singletons(6, 3, {1, 2})) == 2);
    CHECK_THROWS_AS(count_bruteforce(singletons(100, 0, {1, 1, 1, 1})), GuardError);
}

TEST_CASE("general formula") {
    CHECK(count_formula(singletons(4, 0, {1, 1})) == 2);
    CHECK(count_formula(singletons(12, 0, {2, 2})) == 2);
    CHECK(count_formula(singletons(6, 3, {1, 2})) == 2);
    CHECK(count_formula(singletons(6, 0, {1, 2, 3})) == 2);
    const CongruenceInstance mixed(12, 5, {DivisorSet{1, 2}, DivisorSet{3, 4}, DivisorSet{6}});
    CHECK(count_formula(mixed) == 2);
    CHECK(count_bruteforce(mixed) == 2);
    // scales past the enumeration guard
    CHECK(count_solutions(singletons(1000000, 0, {1, 1})) == to_int(euler_phi(1000000)));
}

TEST_CASE("singleton formulas") {
    const std::vector<Nat> ones{1, 1};
    CHECK(count_singleton_exponential(4, 0, ones) == 2);
    CHECK(count_singleton_exponential(4, 1, ones) == 0);
    CHECK(count_singleton_divisor(4, 1, ones) == 0);
    CHECK(count_singleton_divisor(4, 0, ones) == 2);
    const std::vector<Nat> mixed{3, 2};
    CHECK(count_singleton_exponential(6, 0, mixed) == 0);
    CHECK(count_singleton_divisor(6, 0, mixed) == 0);
    CHECK_THROWS_AS(count_singleton_divisor(6, 0, std::vector<Nat>{4}), std::invalid_argument);
    CHECK_THROWS_AS(count_singleton_exponential(kExponentialModulusLimit + 1, 0, ones), GuardError);
}

TEST_CASE("E interpretation") {
    for (Nat a = 1; a <= 12; ++a) {
        for (Nat b = 1; b <= 12; ++b) {
            const ArgTuple t{a, b, 4};
            const Nat m = t.lcm();
            const std::vector<Nat> ds{m / a, m / b, m / 4};
            CHECK(count_singleton_divisor(m, 0, ds) == e_multiplicative(t));
            // any multiple of m works as the modulus
            const std::vector<Nat> ds2{2 * m / a, 2 * m / b, 2 * m / 4};
            CHECK(count_singleton_divisor(2 * m, 0, ds2) == e_multiplicative(t));
        }
    }
}

TEST_CASE("exponential orthogonality") {
    CHECK(exp_orthogonality_check(5, 10));
    CHECK(exp_orthogonality_check(5, 3));
    CHECK(exp_orthogonality_check(1, 17));
    CHECK(exp_orthogonality_check(997, -4));
    CHECK_THROWS_AS(exp_orthogonality_check(kOrthogonalityModulusLimit + 1, 0), GuardError);
}
