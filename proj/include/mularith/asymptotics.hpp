#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mularith/arith.hpp"

namespace mularith {

// Average order of f_r(m) = E(m, ..., m):
//
//     sum_{m <= x} f_r(m) = (C_r / r) x^r + O(x^{r-1+eps}),
//     C_r = prod_p (1 + ((p-1) h_r(p) - p^{r-1}) / p^r).

using HighPrecision = boost::multiprecision::cpp_bin_float_100;

/// Significant digits used when printing HighPrecision values.
inline constexpr int kReportDigits = 50;

std::string to_decimal(const HighPrecision& v, int digits = kReportDigits);

/// Primes <= bound by the sieve of Eratosthenes.
std::vector<Nat> primes_up_to(Nat bound);

/// g_r(p) = (p-1) h_r(p) - p^{r-1}, the prime value of the Dirichlet factor
/// with f_r = g_r * id_{r-1}.
Int g_r_at_prime(unsigned r, Nat p);

/// g_r(m): multiplicative, g_r(p) as above and g_r(p^a) = 0 for a >= 2.
Int g_r(unsigned r, Nat m);

/// 1 + g_r(p) / p^r, exactly.
Rational euler_local_factor(unsigned r, Nat p);

struct EulerProductEstimate {
    unsigned r;
    Nat prime_bound;
    HighPrecision value;
    // Bound on |C_r / value - 1| from dropping the primes above prime_bound.
    HighPrecision tail_bound;
};

inline constexpr Nat kMinPrimeBound = 100;

/// Truncated Euler product over p <= prime_bound. Requires r >= 2,
/// prime_bound >= kMinPrimeBound and prime_bound >= 2r; throws
/// std::invalid_argument otherwise.
EulerProductEstimate euler_constant(unsigned r, Nat prime_bound);

struct PartialSumReport {
    unsigned r;
    Nat x;
    Int exact_sum;
    // Absent for r = 1, where f_1 = epsilon has no growing main term.
    std::optional<EulerProductEstimate> constant;
    std::optional<HighPrecision> predicted;  // C_r x^r / r
    std::optional<HighPrecision> ratio;      // exact_sum / predicted
};

inline constexpr Nat kPartialSumLimit = 100000;
inline constexpr Nat kDefaultPrimeBound = 100000;

/// f_r(1), ..., f_r(x) from a smallest-prime-factor sieve; index 0 unused.
std::vector<Int> diagonal_values(unsigned r, Nat x);

/// Throws GuardError for x > kPartialSumLimit.
PartialSumReport partial_sum(unsigned r, Nat x, Nat prime_bound = kDefaultPrimeBound);

/// One report per x, sharing a single sieve and Euler product. Requires r >= 2
/// (r = 2 is the phi control case).
std::vector<PartialSumReport> asymptotic_report(unsigned r, const std::vector<Nat>& xs,
                                                Nat prime_bound = kDefaultPrimeBound);

}  // namespace mularith
