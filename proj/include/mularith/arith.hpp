#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mularith/types.hpp"

namespace mularith {

struct PrimePower {
    Nat prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing; empty for 1.
using Factorization = std::vector<PrimePower>;

/// Trial division up to sqrt(n). Throws std::invalid_argument for n = 0.
Factorization factorize(Nat n);

Nat multiply_out(const Factorization& f);

/// Positive divisors of n in ascending order.
std::vector<Nat> divisors(Nat n);
std::vector<Nat> divisors(const Factorization& f);

Nat gcd_all(std::span<const Nat> xs);

/// Throws std::overflow_error if the lcm does not fit in a Nat.
Nat lcm_all(std::span<const Nat> xs);

int mobius(Nat n);
Nat euler_phi(Nat n);
Nat tau(Nat n);

bool is_prime(Nat n);

/// Exact p^e for small e.
Int power(Nat p, unsigned e);

/// A multiplicative function of one variable given by its prime-power values.
/// The value at p^0 is implicitly 1.
struct MultiplicativeRule {
    std::string name;
    std::function<Rational(Nat prime, unsigned exponent)> at_prime_power;
};

Rational eval_multiplicative(const MultiplicativeRule& rule, Nat n);

namespace rules {

MultiplicativeRule one();
MultiplicativeRule epsilon();
MultiplicativeRule identity();
MultiplicativeRule id_power(unsigned k);
MultiplicativeRule phi();
MultiplicativeRule mu();
MultiplicativeRule tau();

/// Pointwise product n -> f(n) g(n); multiplicative when f and g are.
MultiplicativeRule product(MultiplicativeRule f, MultiplicativeRule g);

}  // namespace rules

}  // namespace mularith
