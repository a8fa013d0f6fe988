#pragma once

#include "mularith/arith.hpp"

namespace mularith {

// Ramanujan sums c_n(k), the sum of k-th powers of the primitive n-th roots
// of unity. Three independent evaluation routes are provided; the
// exponential one is an oracle for tests only.

inline constexpr Nat kExponentialOrderLimit = 100000;
inline constexpr double kOracleTolerance = 1e-6;

/// Sums cos/sin(2 pi j k / n) over the reduced residues j and rounds.
/// Throws GuardError for n > kExponentialOrderLimit and PrecisionError when
/// the imaginary part or the rounding residue exceeds kOracleTolerance.
Int c_exponential(Nat n, Nat k);

/// sum_{d | gcd(k, n)} d mu(n/d)
Int c_divisor(Nat n, Nat k);

/// Product over p^a || n of the three-case prime-power value.
Int c_prime_power_method(Nat n, Nat k);

/// c_{p^a}(k) for a single prime power.
Int c_at_prime_power(Nat p, unsigned a, Nat k);

/// Default entry point; delegates to c_prime_power_method.
inline Int ramanujan_sum(Nat n, Nat k) { return c_prime_power_method(n, k); }

}  // namespace mularith
