#pragma once

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mularith/arg_tuple.hpp"

namespace mularith {

// F_f(m_1, ..., m_r) = (1/m) sum_{k=1}^{m} f(k, m_1)...f(k, m_r) for
// f(k, n) = sum_{d | gcd(k, n)} g(d) h(n/d) with arbitrary g, h.
// (g, h) = (id, mu) gives E, (phi, 1) gives A and (1, 1) gives F_tau.

using ArithmeticFunction = std::function<Rational(Nat)>;

struct ApostolPair {
    std::string name;
    ArithmeticFunction g;
    ArithmeticFunction h;
    // Declares g and h multiplicative; gates f_general_multiplicative.
    bool multiplicative = false;

    static ApostolPair from_rules(const MultiplicativeRule& g, const MultiplicativeRule& h);
};

/// A finite table n -> value read from "n value" lines. Lookups of a
/// missing n throw std::out_of_range.
class ValueTable {
public:
    ValueTable() = default;
    explicit ValueTable(std::map<Nat, Rational> values) : values_(std::move(values)) {}

    /// Blank lines and lines starting with '#' are skipped. Throws
    /// std::invalid_argument on malformed lines or duplicate n.
    static ValueTable parse(std::istream& in);

    const Rational& at(Nat n) const;
    std::size_t size() const { return values_.size(); }

private:
    std::map<Nat, Rational> values_;
};

/// (f * g)(n) = sum_{d | n} f(d) g(n/d)
ArithmeticFunction dirichlet_convolution(ArithmeticFunction f, ArithmeticFunction g);

ApostolPair pair_from_tables(ValueTable g, ValueTable h, std::string name = "table");

/// Built-in pairs: "ramanujan" (id, mu), "gcd" (phi, 1), "tau" (1, 1),
/// "tau-mu" (tau, mu). Throws std::invalid_argument for unknown names.
ApostolPair builtin_pair(std::string_view name);
std::vector<std::string> builtin_pair_names();

/// f(k, n) = sum_{d | gcd(k, n)} g(d) h(n/d)
Rational f_two_var(const ApostolPair& pair, Nat k, Nat n);

inline constexpr Nat kGeneralDefinitionLimit = 1000000;

/// Direct mean over k = 1..lcm(t). Throws GuardError above `limit`.
Rational f_general_definition(const ApostolPair& pair, const ArgTuple& t, Nat limit = kGeneralDefinitionLimit);

/// sum over d_i | m_i of g(d_1)...g(d_r) / lcm(d) * h(m_1/d_1)...h(m_r/d_r)
Rational f_general_convolution(const ApostolPair& pair, const ArgTuple& t);

/// (1/m) sum_{d | m} f(d, m_1)...f(d, m_r) phi(m/d)
Rational f_general_divisor(const ApostolPair& pair, const ArgTuple& t);

/// Product over primes of the convolution form on the local tuples. Throws
/// std::invalid_argument unless pair.multiplicative is set.
Rational f_general_multiplicative(const ApostolPair& pair, const ArgTuple& t);

/// F_tau(t) = sum over d_i | m_i of 1 / lcm(d)
Rational f_tau(const ArgTuple& t);

}  // namespace mularith
