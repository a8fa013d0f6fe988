#include "mularith/asymptotics.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "mularith/orbicyclic.hpp"

namespace mularith {

namespace {

HighPrecision to_hp(const Int& v) { return HighPrecision(v.get_str()); }

void require_r(unsigned r, unsigned minimum, const char* what) {
    if (r < minimum) {
        throw std::invalid_argument(std::string(what) + ": r must be at least " + std::to_string(minimum));
    }
}

std::vector<Nat> smallest_prime_factors(Nat bound) {
    std::vector<Nat> spf(bound + 1, 0);
    for (Nat i = 2; i <= bound; ++i) {
        if (spf[i] != 0) {
            continue;
        }
        for (Nat j = i; j <= bound; j += i) {
            if (spf[j] == 0) {
                spf[j] = i;
            }
        }
    }
    return spf;
}

PartialSumReport make_report(unsigned r, Nat x, Int exact_sum, const std::optional<EulerProductEstimate>& constant) {
    PartialSumReport report{r, x, std::move(exact_sum), constant, std::nullopt, std::nullopt};
    if (constant) {
        const HighPrecision xr = boost::multiprecision::pow(HighPrecision(x), static_cast<int>(r));
        report.predicted = constant->value * xr / r;
        report.ratio = to_hp(report.exact_sum) / *report.predicted;
    }
    return report;
}

void require_x(Nat x) {
    if (x == 0) {
        throw std::invalid_argument("partial_sum: x must be positive");
    }
    if (x > kPartialSumLimit) {
        throw GuardError("partial_sum: x = " + std::to_string(x) + " exceeds limit " +
                         std::to_string(kPartialSumLimit));
    }
}

}  // namespace

std::string to_decimal(const HighPrecision& v, int digits) {
    std::ostringstream out;
    out << std::setprecision(digits) << v;
    return out.str();
}

std::vector<Nat> primes_up_to(Nat bound) {
    std::vector<bool> composite(bound + 1, false);
    std::vector<Nat> primes;
    for (Nat i = 2; i <= bound; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(i);
        for (Nat j = i * i; j <= bound; j += i) {
            composite[j] = true;
        }
    }
    return primes;
}

Int g_r_at_prime(unsigned r, Nat p) {
    require_r(r, 1, "g_r_at_prime");
    return h_poly(r, to_int(p)) * (p - 1) - power(p, r - 1);
}

Int g_r(unsigned r, Nat m) {
    Int value = 1;
    for (const auto& [p, a] : factorize(m)) {
        if (a >= 2) {
            return 0;
        }
        value *= g_r_at_prime(r, p);
    }
    return value;
}

Rational euler_local_factor(unsigned r, Nat p) {
    const Int pr = power(p, r);
    return make_rational(pr + g_r_at_prime(r, p), pr);
}

EulerProductEstimate euler_constant(unsigned r, Nat prime_bound) {
    require_r(r, 2, "euler_constant");
    if (prime_bound < kMinPrimeBound || prime_bound < 2 * static_cast<Nat>(r)) {
        throw std::invalid_argument("euler_constant: prime bound must be at least max(100, 2r)");
    }
    HighPrecision value = 1;
    for (Nat p : primes_up_to(prime_bound)) {
        const Rational factor = euler_local_factor(r, p);
        value *= to_hp(factor.get_num());
        value /= to_hp(factor.get_den());
    }
    // For p >= 2r the local factor is 1 + x_p with |x_p| <= 2.15 r / p^2, so
    // |log(1 + x_p)| <= 3r / p^2; and sum_{p > P} 1/p^2 < 1/(P - 1). The
    // 1e-90 pad absorbs the rounding of the 100-digit product.
    const HighPrecision log_tail = HighPrecision(3 * r) / HighPrecision(prime_bound - 1);
    const HighPrecision tail = boost::multiprecision::expm1(log_tail) + HighPrecision("1e-90");
    return {r, prime_bound, value, tail};
}

std::vector<Int> diagonal_values(unsigned r, Nat x) {
    require_r(r, 1, "diagonal_values");
    const auto spf = smallest_prime_factors(x);
    std::vector<Int> f(x + 1);
    if (x >= 1) {
        f[1] = 1;
    }
    for (Nat m = 2; m <= x; ++m) {
        const Nat p = spf[m];
        Nat rest = m;
        unsigned a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        // f_r(p^a) = p^{(a-1)(r-1)} (p-1) h_r(p)
        f[m] = f[rest] * power(p, (a - 1) * (r - 1)) * (p - 1) * h_poly(r, to_int(p));
    }
    return f;
}

PartialSumReport partial_sum(unsigned r, Nat x, Nat prime_bound) {
    require_r(r, 1, "partial_sum");
    require_x(x);
    const auto f = diagonal_values(r, x);
    Int sum = 0;
    for (Nat m = 1; m <= x; ++m) {
        sum += f[m];
    }
    std::optional<EulerProductEstimate> constant;
    if (r >= 2) {
        constant = euler_constant(r, prime_bound);
    }
    return make_report(r, x, std::move(sum), constant);
}

std::vector<PartialSumReport> asymptotic_report(unsigned r, const std::vector<Nat>& xs, Nat prime_bound) {
    require_r(r, 2, "asymptotic_report");
    if (xs.empty()) {
        return {};
    }
    for (Nat x : xs) {
        require_x(x);
    }
    const Nat top = *std::max_element(xs.begin(), xs.end());
    const auto f = diagonal_values(r, top);
    std::vector<Int> prefix(top + 1, 0);
    for (Nat m = 1; m <= top; ++m) {
        prefix[m] = prefix[m - 1] + f[m];
    }
    const auto constant = euler_constant(r, prime_bound);
    std::vector<PartialSumReport> reports;
    reports.reserve(xs.size());
    for (Nat x : xs) {
        reports.push_back(make_report(r, x, prefix[x], constant));
    }
    return reports;
}

}  // namespace mularith
