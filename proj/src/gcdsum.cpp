#include "mularith/gcdsum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mularith/orbicyclic.hpp"
#include "periodic_sum.hpp"

namespace mularith {

Rational a_definition(const ArgTuple& t, Nat limit) {
    const Nat m = t.lcm();
    if (m > limit) {
        throw GuardError("a_definition: lcm " + std::to_string(m) + " exceeds limit " + std::to_string(limit));
    }
    std::vector<std::vector<Int>> tables;
    tables.reserve(t.arity());
    for (Nat mi : t.args()) {
        auto& row = tables.emplace_back(mi);
        for (Nat j = 1; j <= mi; ++j) {
            row[j % mi] = to_int(std::gcd(j, mi));
        }
    }
    return make_rational(detail::periodic_product_sum(tables, m), to_int(m));
}

Rational a_convolution(const ArgTuple& t) {
    std::vector<std::vector<Nat>> lists;
    for (Nat m : t.args()) {
        lists.push_back(divisors(m));
    }
    // Accumulate over the common denominator lcm(t): every lcm(d) divides it.
    const Nat m = t.lcm();
    Int numerator = 0;
    for_each_tuple(lists, [&](std::span<const Nat> ds) {
        Int term = to_int(m / lcm_all(ds));
        for (Nat d : ds) {
            term *= to_int(euler_phi(d));
        }
        numerator += term;
    });
    return make_rational(numerator, to_int(m));
}

Rational a_divisor(const ArgTuple& t) {
    const Nat m = t.lcm();
    Int total = 0;
    for (Nat d : divisors(m)) {
        Int term = to_int(euler_phi(m / d));
        for (Nat mi : t.args()) {
            term *= to_int(std::gcd(d, mi));
        }
        total += term;
    }
    return make_rational(total, to_int(m));
}

Rational a_prime_power(Nat p, std::vector<unsigned> exponents) {
    if (exponents.empty()) {
        throw std::invalid_argument("a_prime_power: empty exponent list");
    }
    if (std::find(exponents.begin(), exponents.end(), 0u) != exponents.end()) {
        throw std::invalid_argument("a_prime_power: exponents must be positive");
    }
    std::sort(exponents.begin(), exponents.end());
    const unsigned r = static_cast<unsigned>(exponents.size());
    // a_0 = 0 in front of the ascending list.
    std::vector<unsigned> a{0};
    a.insert(a.end(), exponents.begin(), exponents.end());

    unsigned prefix = 0;  // a_0 + ... + a_{l-1}
    Int inner = 0;
    for (unsigned l = 1; l <= r; ++l) {
        prefix += a[l - 1];
        for (unsigned j = a[l - 1]; j < a[l]; ++j) {
            inner += power(p, prefix + (r - l) * j);
        }
    }
    // prefix now holds a_0 + ... + a_{r-1}
    return Rational(power(p, prefix)) + make_rational(inner * (p - 1), to_int(p));
}

Rational a_multiplicative(const ArgTuple& t) {
    Rational value = 1;
    for (Nat p : t.primes()) {
        auto exps = t.exponents_at(p);
        std::erase(exps, 0u);
        value *= a_prime_power(p, std::move(exps));
    }
    return value;
}

Rational a_r_diagonal(Nat m, unsigned r) {
    if (m == 0 || r == 0) {
        throw std::invalid_argument("a_r_diagonal: m and r must be positive");
    }
    Int total = 0;
    for (Nat d : divisors(m)) {
        Int dr;
        mpz_pow_ui(dr.get_mpz_t(), to_int(d).get_mpz_t(), r);
        total += dr * euler_phi(m / d);
    }
    return make_rational(total, to_int(m));
}

bool check_e_le_a(const ArgTuple& t) { return Rational(orbicyclic(t)) <= gcd_sum_mean(t); }

bool check_product_lower_bound(const ArgTuple& t) {
    Rational product = 1;
    for (Nat m : t.args()) {
        product *= gcd_sum_mean(ArgTuple{m});
    }
    return gcd_sum_mean(t) >= product;
}

}  // namespace mularith
