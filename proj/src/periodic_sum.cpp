#include "periodic_sum.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace mularith::detail {

namespace {

using Wide = __int128;

// Bit length bound of |x|, 0 for x = 0.
std::size_t magnitude_bits(const Int& x) { return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2); }

Int to_int(Wide v) {
    const bool negative = v < 0;
    unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    const auto hi = static_cast<std::uint64_t>(u >> 64);
    const auto lo = static_cast<std::uint64_t>(u);
    Int out = mularith::to_int(hi);
    out <<= 64;
    out += mularith::to_int(lo);
    return negative ? Int(-out) : out;
}

template <class Value, class Acc>
Acc accumulate(const std::vector<std::vector<Value>>& tables, Nat modulus, Acc acc) {
    const std::size_t r = tables.size();
    std::vector<std::size_t> residue(r, 0);
    for (Nat k = 1; k <= modulus; ++k) {
        Value term = 1;
        for (std::size_t i = 0; i < r; ++i) {
            if (++residue[i] == tables[i].size()) {
                residue[i] = 0;
            }
            term *= tables[i][residue[i]];
        }
        acc += term;
    }
    return acc;
}

}  // namespace

Int periodic_product_sum(const std::vector<std::vector<Int>>& tables, Nat modulus) {
    std::size_t product_bits = 0;
    for (const auto& table : tables) {
        std::size_t bits = 0;
        for (const auto& v : table) {
            bits = std::max(bits, magnitude_bits(v));
        }
        product_bits += bits;
    }
    const std::size_t modulus_bits = 64 - static_cast<std::size_t>(__builtin_clzll(modulus | 1));
    if (product_bits <= 62 && product_bits + modulus_bits <= 125) {
        std::vector<std::vector<std::int64_t>> narrow;
        narrow.reserve(tables.size());
        for (const auto& table : tables) {
            auto& row = narrow.emplace_back();
            row.reserve(table.size());
            for (const auto& v : table) {
                row.push_back(v.get_si());
            }
        }
        return to_int(accumulate(narrow, modulus, Wide{0}));
    }
    return accumulate(tables, modulus, Int(0));
}

Rational periodic_product_sum(const std::vector<std::vector<Rational>>& tables, Nat modulus) {
    std::vector<std::vector<Int>> numerators;
    Int denominator = 1;
    numerators.reserve(tables.size());
    for (const auto& table : tables) {
        Int common = 1;
        for (const auto& v : table) {
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.get_den_mpz_t());
        }
        auto& row = numerators.emplace_back();
        row.reserve(table.size());
        for (const auto& v : table) {
            row.push_back(v.get_num() * (common / v.get_den()));
        }
        denominator *= common;
    }
    return make_rational(periodic_product_sum(numerators, modulus), denominator);
}

}  // namespace mularith::detail
