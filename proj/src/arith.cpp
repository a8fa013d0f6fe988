#include "mularith/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mularith {

namespace {

void require_positive(Nat n, const char* what) {
    if (n == 0) {
        throw std::invalid_argument(std::string(what) + ": argument must be positive");
    }
}

}  // namespace

Factorization factorize(Nat n) {
    require_positive(n, "factorize");
    Factorization out;
    auto strip = [&](Nat p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            out.push_back({p, e});
        }
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel
    for (Nat p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) {
        out.push_back({n, 1});
    }
    return out;
}

Nat multiply_out(const Factorization& f) {
    Nat n = 1;
    for (const auto& [p, e] : f) {
        for (unsigned i = 0; i < e; ++i) {
            n *= p;
        }
    }
    return n;
}

std::vector<Nat> divisors(const Factorization& f) {
    std::vector<Nat> out{1};
    for (const auto& [p, e] : f) {
        const std::size_t base = out.size();
        Nat pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) {
                out.push_back(out[j] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Nat> divisors(Nat n) { return divisors(factorize(n)); }

Nat gcd_all(std::span<const Nat> xs) {
    if (xs.empty()) {
        throw std::invalid_argument("gcd_all: empty list");
    }
    Nat g = 0;
    for (Nat x : xs) {
        g = std::gcd(g, x);
    }
    return g;
}

Nat lcm_all(std::span<const Nat> xs) {
    if (xs.empty()) {
        throw std::invalid_argument("lcm_all: empty list");
    }
    Nat l = 1;
    for (Nat x : xs) {
        require_positive(x, "lcm_all");
        const Nat step = x / std::gcd(l, x);
        if (l > std::numeric_limits<Nat>::max() / step) {
            throw std::overflow_error("lcm_all: result exceeds 64 bits");
        }
        l *= step;
    }
    return l;
}

int mobius(Nat n) {
    int sign = 1;
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1) {
            return 0;
        }
        sign = -sign;
    }
    return sign;
}

Nat euler_phi(Nat n) {
    Nat phi = 1;
    for (const auto& [p, e] : factorize(n)) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i) {
            phi *= p;
        }
    }
    return phi;
}

Nat tau(Nat n) {
    Nat t = 1;
    for (const auto& pp : factorize(n)) {
        t *= pp.exponent + 1;
    }
    return t;
}

bool is_prime(Nat n) {
    if (n < 2) {
        return false;
    }
    const auto f = factorize(n);
    return f.size() == 1 && f.front().exponent == 1;
}

Int power(Nat p, unsigned e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), to_int(p).get_mpz_t(), e);
    return out;
}

Rational eval_multiplicative(const MultiplicativeRule& rule, Nat n) {
    Rational value = 1;
    for (const auto& [p, e] : factorize(n)) {
        value *= rule.at_prime_power(p, e);
    }
    return value;
}

namespace rules {

MultiplicativeRule one() {
    return {"1", [](Nat, unsigned) { return Rational(1); }};
}

MultiplicativeRule epsilon() {
    return {"epsilon", [](Nat, unsigned) { return Rational(0); }};
}

MultiplicativeRule identity() { return {"id", [](Nat p, unsigned a) { return Rational(power(p, a)); }}; }

MultiplicativeRule id_power(unsigned k) {
    return {"id_" + std::to_string(k), [k](Nat p, unsigned a) { return Rational(power(p, a * k)); }};
}

MultiplicativeRule phi() {
    return {"phi", [](Nat p, unsigned a) { return Rational(power(p, a) - power(p, a - 1)); }};
}

MultiplicativeRule mu() {
    return {"mu", [](Nat, unsigned a) { return Rational(a == 1 ? -1 : 0); }};
}

MultiplicativeRule tau() {
    return {"tau", [](Nat, unsigned a) { return Rational(a + 1); }};
}

MultiplicativeRule product(MultiplicativeRule f, MultiplicativeRule g) {
    std::string name = f.name + "." + g.name;
    return {std::move(name), [f = std::move(f), g = std::move(g)](Nat p, unsigned a) -> Rational {
                return f.at_prime_power(p, a) * g.at_prime_power(p, a);
            }};
}

}  // namespace rules

}  // namespace mularith
