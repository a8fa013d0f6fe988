#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mularith {

// Arguments (m_i, n, k, M, divisors) are machine words: every evaluation path
// factors its arguments by trial division, which bounds them long before 2^64.
// Computed values are arbitrary precision.
using Nat = std::uint64_t;

using Int = mpz_class;

// Always kept in canonical form (reduced, positive denominator).
using Rational = mpq_class;

inline Int to_int(Nat n) {
    Int out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(n), 0, 0, &n);
    return out;
}

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// "p/q" for proper rationals, plain decimal for integers.
inline std::string to_string(const Rational& v) {
    if (v.get_den() == 1) {
        return v.get_num().get_str();
    }
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Inverse of to_string; rejects anything that is not an exact decimal
// integer or a p/q fraction.
Rational parse_rational(const std::string& text);

// A resource limit of a brute-force/oracle path was exceeded.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A floating-point oracle could not certify an integer result.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mularith
