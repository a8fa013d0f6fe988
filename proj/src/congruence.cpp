#include "mularith/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mularith/arith.hpp"
#include "mularith/ramanujan.hpp"

namespace mularith {

namespace {

Nat reduce(std::int64_t n, Nat modulus) {
    const auto m = static_cast<std::int64_t>(modulus);
    return static_cast<Nat>(((n % m) + m) % m);
}

// c_q(n) for a residue n, with 0 represented by the period multiple M.
Int ramanujan_at_residue(Nat q, Nat residue, Nat modulus) { return ramanujan_sum(q, residue == 0 ? modulus : residue); }

void check_singletons(Nat modulus, std::span<const Nat> ds) {
    if (modulus == 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    if (ds.empty()) {
        throw std::invalid_argument("at least one constraint is required");
    }
    for (Nat d : ds) {
        if (d == 0 || modulus % d != 0) {
            throw std::invalid_argument("constraint " + std::to_string(d) + " does not divide M = " +
                                        std::to_string(modulus));
        }
    }
}

Int exact_quotient(const Int& num, Nat den, const char* what) {
    Int q;
    Int rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), to_int(den).get_mpz_t());
    if (rem != 0) {
        throw std::logic_error(std::string(what) + ": inexact division, integrity check failed");
    }
    return q;
}

}  // namespace

DivisorSet::DivisorSet(std::vector<Nat> allowed) : allowed_(std::move(allowed)) {
    if (allowed_.empty()) {
        throw std::invalid_argument("divisor set must be nonempty");
    }
    std::sort(allowed_.begin(), allowed_.end());
    allowed_.erase(std::unique(allowed_.begin(), allowed_.end()), allowed_.end());
}

bool DivisorSet::contains(Nat d) const { return std::binary_search(allowed_.begin(), allowed_.end(), d); }

CongruenceInstance::CongruenceInstance(Nat modulus, std::int64_t target, std::vector<DivisorSet> constraints)
    : modulus_(modulus), target_(0), constraints_(std::move(constraints)) {
    if (modulus_ == 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    if (constraints_.empty()) {
        throw std::invalid_argument("at least one constraint set is required");
    }
    for (const auto& set : constraints_) {
        for (Nat d : set.values()) {
            if (d == 0 || modulus_ % d != 0) {
                throw std::invalid_argument("constraint " + std::to_string(d) + " does not divide M = " +
                                            std::to_string(modulus_));
            }
        }
    }
    target_ = reduce(target, modulus_);
}

std::vector<DivisorSet> parse_divisor_sets(const std::string& text) {
    std::vector<DivisorSet> sets;
    std::istringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::istringstream items(group);
        std::string item;
        std::vector<Nat> values;
        while (std::getline(items, item, ',')) {
            const auto first = item.find_first_not_of(" \t");
            const auto last = item.find_last_not_of(" \t");
            if (first == std::string::npos) {
                throw std::invalid_argument("empty divisor in '" + text + "'");
            }
            const std::string digits = item.substr(first, last - first + 1);
            if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 18) {
                throw std::invalid_argument("bad divisor '" + digits + "' in '" + text + "'");
            }
            values.push_back(std::stoull(digits));
        }
        if (values.empty()) {
            throw std::invalid_argument("empty divisor set in '" + text + "'");
        }
        sets.emplace_back(std::move(values));
    }
    if (sets.empty() || (!text.empty() && text.back() == ';')) {
        throw std::invalid_argument("malformed constraint list '" + text + "'");
    }
    return sets;
}

Int count_bruteforce(const CongruenceInstance& inst, Nat limit) {
    const Nat M = inst.modulus();
    const std::size_t r = inst.arity();
    Nat space = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (space > limit / M) {
            throw GuardError("count_bruteforce: M^r exceeds enumeration limit " + std::to_string(limit));
        }
        space *= M;
    }
    std::vector<std::vector<Nat>> candidates(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (Nat x = 0; x < M; ++x) {
            if (inst.constraints()[i].contains(std::gcd(x, M))) {  // gcd(0, M) == M
                candidates[i].push_back(x);
            }
        }
    }
    Nat count = 0;
    auto walk = [&](auto&& self, std::size_t i, Nat sum) -> void {
        if (i == r) {
            count += sum == inst.target();
            return;
        }
        for (Nat x : candidates[i]) {
            self(self, i + 1, (sum + x) % M);
        }
    };
    walk(walk, 0, 0);
    return to_int(count);
}

Int count_formula(const CongruenceInstance& inst) {
    const Nat M = inst.modulus();
    Int total = 0;
    for (Nat d : divisors(M)) {
        Int term = ramanujan_at_residue(M / d, inst.target(), M);
        for (const auto& set : inst.constraints()) {
            if (term == 0) {
                break;
            }
            Int inner = 0;
            for (Nat e : set.values()) {
                inner += ramanujan_sum(M / e, d);
            }
            term *= inner;
        }
        total += term;
    }
    return exact_quotient(total, M, "count_formula");
}

Int count_singleton_exponential(Nat modulus, std::int64_t target, std::span<const Nat> ds) {
    check_singletons(modulus, ds);
    if (modulus > kExponentialModulusLimit) {
        throw GuardError("count_singleton_exponential: M exceeds oracle limit " +
                         std::to_string(kExponentialModulusLimit));
    }
    const Nat n = reduce(target, modulus);
    double re = 0.0;
    double im = 0.0;
    for (Nat k = 1; k <= modulus; ++k) {
        Int product = 1;
        for (Nat d : ds) {
            product *= ramanujan_sum(modulus / d, k);
        }
        if (product == 0) {
            continue;
        }
        const auto phase = static_cast<unsigned __int128>(k) * n % modulus;
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(modulus);
        const double weight = product.get_d();
        re += weight * std::cos(angle);
        im += weight * std::sin(angle);
    }
    re /= static_cast<double>(modulus);
    im /= static_cast<double>(modulus);
    const double rounded = std::nearbyint(re);
    if (std::abs(im) >= kOracleTolerance || std::abs(re - rounded) >= kOracleTolerance || rounded < 0) {
        throw PrecisionError("count_singleton_exponential: cannot certify an integer count");
    }
    return Int(static_cast<long>(rounded));
}

Int count_singleton_divisor(Nat modulus, std::int64_t target, std::span<const Nat> ds) {
    check_singletons(modulus, ds);
    const Nat n = reduce(target, modulus);
    Int total = 0;
    for (Nat delta : divisors(modulus)) {
        Int term = ramanujan_at_residue(modulus / delta, n, modulus);
        for (Nat d : ds) {
            if (term == 0) {
                break;
            }
            term *= ramanujan_sum(modulus / d, delta);
        }
        total += term;
    }
    return exact_quotient(total, modulus, "count_singleton_divisor");
}

bool exp_orthogonality_check(Nat modulus, std::int64_t n) {
    if (modulus == 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    if (modulus > kOrthogonalityModulusLimit) {
        throw GuardError("exp_orthogonality_check: M exceeds limit " + std::to_string(kOrthogonalityModulusLimit));
    }
    const Nat residue = reduce(n, modulus);
    double re = 0.0;
    double im = 0.0;
    for (Nat k = 1; k <= modulus; ++k) {
        const auto phase = static_cast<unsigned __int128>(k) * residue % modulus;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(modulus);
        re += std::cos(angle);
        im += std::sin(angle);
    }
    const double expected = residue == 0 ? static_cast<double>(modulus) : 0.0;
    return std::abs(re - expected) < kOracleTolerance && std::abs(im) < kOracleTolerance;
}

}  // namespace mularith
