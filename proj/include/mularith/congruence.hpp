#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mularith/types.hpp"

namespace mularith {

// Solutions of x_1 + ... + x_r = n (mod M) with gcd(x_i, M) in D_i, where the
// D_i are nonempty sets of divisors of M. Residues are 0..M-1 and
// gcd(0, M) = M, so D_i = {M} pins x_i = 0.

class DivisorSet {
public:
    /// Sorted and deduplicated; throws std::invalid_argument when empty.
    explicit DivisorSet(std::vector<Nat> allowed);
    DivisorSet(std::initializer_list<Nat> allowed) : DivisorSet(std::vector<Nat>(allowed)) {}

    std::span<const Nat> values() const { return allowed_; }
    bool contains(Nat d) const;
    bool is_singleton() const { return allowed_.size() == 1; }

private:
    std::vector<Nat> allowed_;
};

class CongruenceInstance {
public:
    /// Reduces `target` into [0, modulus). Throws std::invalid_argument for
    /// modulus 0, an empty constraint list, or a set element not dividing M.
    CongruenceInstance(Nat modulus, std::int64_t target, std::vector<DivisorSet> constraints);

    Nat modulus() const { return modulus_; }
    Nat target() const { return target_; }
    const std::vector<DivisorSet>& constraints() const { return constraints_; }
    std::size_t arity() const { return constraints_.size(); }

private:
    Nat modulus_;
    Nat target_;
    std::vector<DivisorSet> constraints_;
};

/// Parses "1;1" or "1,2;4": semicolon-separated sets of comma-separated divisors.
std::vector<DivisorSet> parse_divisor_sets(const std::string& text);

inline constexpr Nat kEnumerationLimit = 10000000;

/// Enumerates Z_M^r. Throws GuardError when M^r exceeds `limit`.
Int count_bruteforce(const CongruenceInstance& inst, Nat limit = kEnumerationLimit);

/// (1/M) sum_{d | M} c_{M/d}(n) prod_i sum_{e in D_i} c_{M/e}(d)
Int count_formula(const CongruenceInstance& inst);

inline Int count_solutions(const CongruenceInstance& inst) { return count_formula(inst); }

inline constexpr Nat kExponentialModulusLimit = 100000;

/// (1/M) sum_{k=1}^{M} c_{M/d_1}(k)...c_{M/d_r}(k) exp(-2 pi i k n / M), rounded.
/// Oracle only. Throws GuardError above kExponentialModulusLimit and
/// PrecisionError when the result is not within 1e-6 of an integer.
Int count_singleton_exponential(Nat modulus, std::int64_t target, std::span<const Nat> ds);

/// (1/M) sum_{delta | M} c_{M/d_1}(delta)...c_{M/d_r}(delta) c_{M/delta}(n)
Int count_singleton_divisor(Nat modulus, std::int64_t target, std::span<const Nat> ds);

inline constexpr Nat kOrthogonalityModulusLimit = 10000;

/// Whether sum_{k=1}^{M} exp(2 pi i k n / M) is within 1e-6 of M (if M | n)
/// or of 0 (otherwise). Throws GuardError above kOrthogonalityModulusLimit.
bool exp_orthogonality_check(Nat modulus, std::int64_t n);

}  // namespace mularith
