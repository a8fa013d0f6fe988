#include "mularith/ramanujan.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mularith {

namespace {

void require_args(Nat n, Nat k, const char* what) {
    if (n == 0 || k == 0) {
        throw std::invalid_argument(std::string(what) + ": order and argument must be positive");
    }
}

}  // namespace

Int c_exponential(Nat n, Nat k) {
    require_args(n, k, "c_exponential");
    if (n > kExponentialOrderLimit) {
        throw GuardError("c_exponential: order " + std::to_string(n) + " exceeds oracle limit " +
                         std::to_string(kExponentialOrderLimit));
    }
    // Reduce the phase jk mod n in integers so the angle stays in [0, 2 pi).
    const Nat kr = k % n;
    double re = 0.0;
    double im = 0.0;
    for (Nat j = 1; j <= n; ++j) {
        if (std::gcd(j, n) != 1) {
            continue;
        }
        const auto phase = static_cast<unsigned __int128>(j) * kr % n;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(n);
        re += std::cos(angle);
        im += std::sin(angle);
    }
    const double rounded = std::nearbyint(re);
    if (std::abs(im) >= kOracleTolerance || std::abs(re - rounded) >= kOracleTolerance) {
        throw PrecisionError("c_exponential: precision loss at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k));
    }
    return Int(static_cast<long>(rounded));
}

Int c_divisor(Nat n, Nat k) {
    require_args(n, k, "c_divisor");
    Int sum = 0;
    for (Nat d : divisors(std::gcd(k, n))) {
        const int mu = mobius(n / d);
        if (mu != 0) {
            sum += mu * to_int(d);
        }
    }
    return sum;
}

Int c_at_prime_power(Nat p, unsigned a, Nat k) {
    if (a == 0) {
        return 1;
    }
    const Int pa1 = power(p, a - 1);
    Nat reduced = k;
    unsigned v = 0;
    while (v < a && reduced % p == 0) {
        reduced /= p;
        ++v;
    }
    if (v == a) {
        return pa1 * (p - 1);
    }
    if (v == a - 1) {
        return -pa1;
    }
    return 0;
}

Int c_prime_power_method(Nat n, Nat k) {
    require_args(n, k, "c_prime_power_method");
    Int value = 1;
    for (const auto& [p, a] : factorize(n)) {
        value *= c_at_prime_power(p, a, k);
        if (value == 0) {
            break;
        }
    }
    return value;
}

}  // namespace mularith
