#pragma once

#include <optional>
#include <vector>

#include "mularith/arg_tuple.hpp"

namespace mularith {

// The gcd-sum mean A(m_1, ..., m_r) = (1/m) sum_{k=1}^{m} gcd(k, m_1)...gcd(k, m_r),
// m = lcm(m_i). Rational in general: A(2, 4) = 7/2.

inline constexpr Nat kGcdDefinitionLimit = 1000000;

/// Throws GuardError when lcm(t) exceeds `limit`.
Rational a_definition(const ArgTuple& t, Nat limit = kGcdDefinitionLimit);

/// sum over d_i | m_i of phi(d_1)...phi(d_r) / lcm(d)
Rational a_convolution(const ArgTuple& t);

/// (1/m) sum_{d | m} gcd(d, m_1)...gcd(d, m_r) phi(m/d)
Rational a_divisor(const ArgTuple& t);

/// Closed form at a single prime. The exponents may come in any order
/// (A is symmetric, they are sorted internally) but must all be >= 1.
Rational a_prime_power(Nat p, std::vector<unsigned> exponents);

/// Product of a_prime_power over the primes of lcm(t); zero exponents are
/// dropped since gcd(k, 1) = 1.
Rational a_multiplicative(const ArgTuple& t);

inline Rational gcd_sum_mean(const ArgTuple& t) { return a_multiplicative(t); }

/// A_r(m) = A(m, ..., m) = (1/m) sum_{d | m} d^r phi(m/d)
Rational a_r_diagonal(Nat m, unsigned r);

/// E(t) <= A(t)
bool check_e_le_a(const ArgTuple& t);

/// A(t) >= A(m_1)...A(m_r)
bool check_product_lower_bound(const ArgTuple& t);

}  // namespace mularith
