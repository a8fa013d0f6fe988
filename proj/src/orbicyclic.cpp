#include "mularith/orbicyclic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "mularith/ramanujan.hpp"
#include "periodic_sum.hpp"

namespace mularith {

namespace {

Int exact_quotient(const Int& num, const Int& den, const char* what) {
    Int q;
    Int rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) {
        throw std::logic_error(std::string(what) + ": inexact division, integrity check failed");
    }
    return q;
}

}  // namespace

PrimeLocalArgs PrimeLocalArgs::make(Nat prime, std::vector<unsigned> exponents) {
    PrimeLocalArgs out{prime, std::move(exponents), 0, 0, 0};
    unsigned top = 0;
    long total = 0;
    for (unsigned a : out.exponents) {
        if (a == 0) {
            continue;
        }
        ++out.nonzero;
        total += a;
        if (a > top) {
            top = a;
            out.s = 1;
        } else if (a == top) {
            ++out.s;
        }
    }
    out.v = out.nonzero == 0 ? 0 : total - static_cast<long>(out.nonzero) - static_cast<long>(top) + 1;
    return out;
}

Nat default_definition_limit(std::size_t arity) { return 1000000 / std::max<std::size_t>(arity, 1); }

Int e_definition(const ArgTuple& t, Nat modulus, std::optional<Nat> limit) {
    if (modulus == 0 || modulus % t.lcm() != 0) {
        throw std::invalid_argument("e_definition: lcm " + std::to_string(t.lcm()) + " does not divide M = " +
                                    std::to_string(modulus));
    }
    const Nat cap = limit.value_or(default_definition_limit(t.arity()));
    if (modulus > cap) {
        throw GuardError("e_definition: M = " + std::to_string(modulus) + " exceeds limit " + std::to_string(cap));
    }
    // c_{m_i}(k) has period m_i in k; tabulate one period per argument.
    std::vector<std::vector<Int>> tables;
    tables.reserve(t.arity());
    for (Nat m : t.args()) {
        auto& row = tables.emplace_back(m);
        for (Nat j = 1; j <= m; ++j) {
            row[j % m] = ramanujan_sum(m, j);
        }
    }
    return exact_quotient(detail::periodic_product_sum(tables, modulus), to_int(modulus), "e_definition");
}

Int e_convolution(const ArgTuple& t) {
    // Only d_i with m_i/d_i squarefree contribute.
    struct Choice {
        Nat d;
        int mu;
    };
    std::vector<std::vector<Choice>> choices;
    for (Nat m : t.args()) {
        auto& row = choices.emplace_back();
        for (Nat d : divisors(m)) {
            if (const int mu = mobius(m / d); mu != 0) {
                row.push_back({d, mu});
            }
        }
    }
    Int total = 0;
    const std::size_t r = t.arity();
    std::function<void(std::size_t, const Int&, Nat, int)> walk = [&](std::size_t i, const Int& prod, Nat l,
                                                                       int sign) {
        if (i == r) {
            Int term;
            mpz_divexact(term.get_mpz_t(), prod.get_mpz_t(), to_int(l).get_mpz_t());
            if (sign > 0) {
                total += term;
            } else {
                total -= term;
            }
            return;
        }
        for (const auto& [d, mu] : choices[i]) {
            walk(i + 1, prod * to_int(d), std::lcm(l, d), sign * mu);
        }
    };
    walk(0, Int(1), 1, 1);
    return total;
}

Int e_divisor(const ArgTuple& t) {
    const Nat m = t.lcm();
    Int total = 0;
    for (Nat d : divisors(m)) {
        Int term = to_int(euler_phi(m / d));
        for (Nat mi : t.args()) {
            term *= ramanujan_sum(mi, d);
            if (term == 0) {
                break;
            }
        }
        total += term;
    }
    return exact_quotient(total, to_int(m), "e_divisor");
}

Int h_poly(unsigned s, const Int& x) {
    if (s == 0) {
        throw std::invalid_argument("h_poly: s must be at least 1");
    }
    if (x == 0) {
        throw std::invalid_argument("h_poly: x must be nonzero");
    }
    Int base = x - 1;
    Int num;
    mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), s - 1);
    num += (s % 2 == 0) ? 1 : -1;
    return exact_quotient(num, x, "h_poly");
}

Int e_prime_power(const PrimeLocalArgs& local) {
    if (local.nonzero == 0) {
        throw std::invalid_argument("e_prime_power: all exponents are zero");
    }
    if (local.s == 1) {
        return 0;
    }
    const Nat p = local.prime;
    Int pm1;
    mpz_pow_ui(pm1.get_mpz_t(), to_int(p - 1).get_mpz_t(), local.nonzero - local.s + 1);
    return power(p, static_cast<unsigned>(local.v)) * pm1 * h_poly(local.s, to_int(p));
}

Int e_multiplicative(const ArgTuple& t) {
    Int value = 1;
    for (Nat p : t.primes()) {
        value *= e_prime_power(PrimeLocalArgs::make(p, t.exponents_at(p)));
        if (value == 0) {
            break;
        }
    }
    return value;
}

Int f_r_diagonal(Nat m, unsigned r) {
    if (m == 0 || r == 0) {
        throw std::invalid_argument("f_r_diagonal: m and r must be positive");
    }
    Int value = 1;
    for (const auto& [p, a] : factorize(m)) {
        // m^{r-1} / p^{r-1} leaves p^{(a-1)(r-1)} per prime.
        value *= power(p, (a - 1) * (r - 1)) * (p - 1) * h_poly(r, to_int(p));
        if (value == 0) {
            break;
        }
    }
    return value;
}

bool verify_moebius_inversion(const ArgTuple& t) {
    if (divisor_tuple_count(t) > kInversionTupleLimit) {
        throw GuardError("verify_moebius_inversion: more than " + std::to_string(kInversionTupleLimit) +
                         " divisor tuples");
    }
    std::vector<std::vector<Nat>> lists;
    Int product = 1;
    for (Nat m : t.args()) {
        lists.push_back(divisors(m));
        product *= to_int(m);
    }
    Int lhs = 0;
    for_each_tuple(lists, [&](std::span<const Nat> ds) {
        lhs += e_multiplicative(ArgTuple(std::vector<Nat>(ds.begin(), ds.end())));
    });
    return lhs == product / to_int(t.lcm());
}

}  // namespace mularith
