#pragma once

#include <optional>
#include <vector>

#include "mularith/arg_tuple.hpp"

namespace mularith {

// The orbicyclic function
//
//     E(m_1, ..., m_r) = (1/M) sum_{k=1}^{M} c_{m_1}(k) ... c_{m_r}(k),   lcm(m_i) | M,
//
// which counts the x in Z_M^r with x_1 + ... + x_r = 0 and gcd(x_i, M) = M/m_i.
// Four evaluation routes are exposed; orbicyclic() is the default.

/// The exponent data of one prime in a tuple. Zero exponents are kept in
/// `exponents` but ignored by s and v, which refer to the nonzero sub-tuple
/// sorted descending: a_1 = ... = a_s > a_{s+1} >= ... >= a_{r'}.
struct PrimeLocalArgs {
    Nat prime;
    std::vector<unsigned> exponents;
    unsigned nonzero;  // r'
    unsigned s;
    long v;  // sum a_j - r' - a_1 + 1

    static PrimeLocalArgs make(Nat prime, std::vector<unsigned> exponents);
};

/// Default modulus limit of e_definition: 10^6 / r.
Nat default_definition_limit(std::size_t arity);

/// Direct average of Ramanujan-sum products over k = 1..modulus. Throws
/// std::invalid_argument when lcm(t) does not divide modulus and GuardError
/// when modulus exceeds `limit` (default_definition_limit if unset).
Int e_definition(const ArgTuple& t, Nat modulus, std::optional<Nat> limit = std::nullopt);

/// sum over d_i | m_i of (d_1...d_r / lcm(d)) mu(m_1/d_1)...mu(m_r/d_r)
Int e_convolution(const ArgTuple& t);

/// (1/m) sum_{d | m} c_{m_1}(d)...c_{m_r}(d) phi(m/d)
Int e_divisor(const ArgTuple& t);

/// h_s(x) = ((x-1)^{s-1} + (-1)^s) / x. Throws for s = 0 or x = 0.
Int h_poly(unsigned s, const Int& x);

/// p^v (p-1)^{r'-s+1} h_s(p); requires at least one nonzero exponent.
Int e_prime_power(const PrimeLocalArgs& local);

/// Product of e_prime_power over the primes dividing lcm(t).
Int e_multiplicative(const ArgTuple& t);

inline Int orbicyclic(const ArgTuple& t) { return e_multiplicative(t); }

/// f_r(m) = E(m, ..., m) from its closed form.
Int f_r_diagonal(Nat m, unsigned r);

inline constexpr Nat kInversionTupleLimit = 1000000;

/// Checks sum_{d_i | m_i} E(d_1, ..., d_r) == m_1...m_r / lcm(m) exactly.
/// Throws GuardError when the divisor-tuple count exceeds kInversionTupleLimit.
bool verify_moebius_inversion(const ArgTuple& t);

}  // namespace mularith
