#include "mularith/verify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mularith/asymptotics.hpp"
#include "mularith/congruence.hpp"
#include "mularith/gcdsum.hpp"
#include "mularith/orbicyclic.hpp"
#include "mularith/ramanujan.hpp"
#include "mularith/unified.hpp"

namespace mularith {

void PropertyResult::record(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (!ok) {
        ++failed;
        if (!counterexample) {
            counterexample = describe();
        }
    }
}

bool SuiteResult::passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.failed == 0; });
}

std::vector<Nat> SeededRandom::tuple(std::size_t arity, Nat max) {
    std::vector<Nat> out(arity);
    for (auto& v : out) {
        v = between(1, max);
    }
    return out;
}

namespace {

std::string show(const std::vector<Nat>& xs) { return ArgTuple(xs).to_string(); }

bool pairwise_coprime(std::span<const Nat> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (std::gcd(xs[i], xs[j]) != 1) {
                return false;
            }
        }
    }
    return true;
}

Nat grid_size(Nat max, std::size_t arity) {
    Nat size = 1;
    for (std::size_t i = 0; i < arity; ++i) {
        if (size > std::numeric_limits<Nat>::max() / max) {
            return std::numeric_limits<Nat>::max();
        }
        size *= max;
    }
    return size;
}

// Every tuple of each arity 1..r over [1, max]: the full grid when it is
// small enough, otherwise `samples` random tuples.
template <class Visit>
void for_each_test_tuple(const VerifyOptions& o, SeededRandom& rng, Visit&& visit) {
    for (std::size_t arity = 1; arity <= o.r; ++arity) {
        if (grid_size(o.max, arity) <= o.grid_limit) {
            std::vector<std::vector<Nat>> axes(arity, std::vector<Nat>(o.max));
            for (auto& axis : axes) {
                std::iota(axis.begin(), axis.end(), Nat{1});
            }
            for_each_tuple(axes, [&](std::span<const Nat> t) { visit(std::vector<Nat>(t.begin(), t.end())); });
        } else {
            for (std::size_t i = 0; i < o.samples; ++i) {
                visit(rng.tuple(arity, o.max));
            }
        }
    }
}

// Random (a, b) with gcd(a_1...a_r, b_1...b_r) = 1, entries <= max.
std::pair<std::vector<Nat>, std::vector<Nat>> coprime_split(SeededRandom& rng, std::size_t arity, Nat max) {
    auto a = rng.tuple(arity, max);
    Nat pa = 1;
    for (Nat x : a) {
        pa = std::lcm(pa, x);
    }
    std::vector<Nat> b(arity);
    for (auto& x : b) {
        do {
            x = rng.between(1, max);
        } while (std::gcd(x, pa) != 1);
    }
    return {a, b};
}

std::vector<Nat> multiply(const std::vector<Nat>& a, const std::vector<Nat>& b) {
    std::vector<Nat> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] * b[i];
    }
    return out;
}

SuiteResult ramanujan_suite(const VerifyOptions& o, SeededRandom& rng) {
    PropertyResult agree{"three-way agreement"};
    PropertyResult bound{"|c_n(k)| <= gcd(k,n)"};
    PropertyResult reduce{"c_n(k) = c_n(gcd(k,n))"};
    PropertyResult period{"c_n(k) = c_n(k+n)"};
    PropertyResult mult{"two-variable multiplicativity"};
    for (Nat n = 1; n <= o.max; ++n) {
        for (Nat k = 1; k <= 2 * o.max; ++k) {
            const Int pp = c_prime_power_method(n, k);
            const Int dv = c_divisor(n, k);
            bool ok = pp == dv;
            if (n <= kExponentialOrderLimit) {
                ok = ok && c_exponential(n, k) == pp;
            }
            auto at = [n, k] { return "n=" + std::to_string(n) + ", k=" + std::to_string(k); };
            agree.record(ok, at);
            bound.record(abs(pp) <= to_int(std::gcd(k, n)), at);
            reduce.record(pp == c_prime_power_method(n, std::gcd(k, n)), at);
            period.record(pp == c_prime_power_method(n, k + n), at);
        }
    }
    for (std::size_t i = 0; i < o.samples; ++i) {
        const Nat n1 = rng.between(1, o.max);
        const Nat k1 = rng.between(1, o.max);
        Nat n2;
        Nat k2;
        do {
            n2 = rng.between(1, o.max);
            k2 = rng.between(1, o.max);
        } while (std::gcd(n1 * k1, n2 * k2) != 1);
        mult.record(c_prime_power_method(n1 * n2, k1 * k2) == c_divisor(n1, k1) * c_divisor(n2, k2), [&] {
            return "n1=" + std::to_string(n1) + ", k1=" + std::to_string(k1) + ", n2=" + std::to_string(n2) +
                   ", k2=" + std::to_string(k2);
        });
    }
    return {"ramanujan", {agree, bound, reduce, period, mult}};
}

SuiteResult orbicyclic_suite(const VerifyOptions& o, SeededRandom& rng) {
    PropertyResult agree{"four-way agreement"};
    PropertyResult nonneg{"nonnegative integer"};
    PropertyResult symmetric{"permutation symmetry"};
    PropertyResult low_arity{"E(m)=eps(m), E(m1,m2)=phi(m)[m1=m2]"};
    PropertyResult mult{"multiplicativity"};
    PropertyResult coprime{"pairwise-coprime collapse"};
    PropertyResult h_integral{"h_s integrality"};

    for_each_test_tuple(o, rng, [&](const std::vector<Nat>& args) {
        const ArgTuple t(args);
        const Int e = e_multiplicative(t);
        const Nat limit = 2 * t.lcm();
        const bool ok = e == e_convolution(t) && e == e_divisor(t) && e == e_definition(t, t.lcm(), limit) &&
                        e == e_definition(t, 2 * t.lcm(), limit);
        agree.record(ok, [&] { return show(args); });
        nonneg.record(e >= 0, [&] { return show(args); });
        auto reversed = args;
        std::reverse(reversed.begin(), reversed.end());
        symmetric.record(e == e_multiplicative(ArgTuple(reversed)), [&] { return show(args); });
    });
    for (Nat m1 = 1; m1 <= o.max; ++m1) {
        low_arity.record(e_multiplicative(ArgTuple{m1}) == (m1 == 1 ? 1 : 0), [&] { return show({m1}); });
        for (Nat m2 = 1; m2 <= o.max; ++m2) {
            const Int expected = m1 == m2 ? to_int(euler_phi(m1)) : Int(0);
            low_arity.record(e_multiplicative(ArgTuple{m1, m2}) == expected, [&] { return show({m1, m2}); });
        }
    }
    for (std::size_t i = 0; i < o.samples; ++i) {
        const std::size_t arity = rng.between(1, std::max(o.r, 1u));
        const auto [a, b] = coprime_split(rng, arity, o.max);
        const auto ab = multiply(a, b);
        mult.record(e_multiplicative(ArgTuple(ab)) == e_convolution(ArgTuple(a)) * e_convolution(ArgTuple(b)),
                    [&] { return show(a) + " x " + show(b); });
        auto t = rng.tuple(arity, o.max);
        if (pairwise_coprime(t)) {
            const bool all_one = std::all_of(t.begin(), t.end(), [](Nat x) { return x == 1; });
            coprime.record(e_convolution(ArgTuple(t)) == (all_one ? 1 : 0), [&] { return show(t); });
        }
    }
    for (unsigned s = 1; s <= 12; ++s) {
        for (long x = 2; x <= 100; ++x) {
            Int num;
            const Int base = x - 1;
            mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), s - 1);
            num += s % 2 == 0 ? 1 : -1;
            h_integral.record(mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(x)) != 0,
                              [&] { return "s=" + std::to_string(s) + ", x=" + std::to_string(x); });
        }
    }
    return {"orbicyclic", {agree, nonneg, symmetric, low_arity, mult, coprime, h_integral}};
}

SuiteResult gcdsum_suite(const VerifyOptions& o, SeededRandom& rng) {
    PropertyResult agree{"definition = convolution = divisor = multiplicative"};
    PropertyResult corollary{"prime-power closed form"};
    PropertyResult e_le_a{"E <= A"};
    PropertyResult lower{"A >= prod A(m_i), equality iff pairwise coprime"};
    PropertyResult mult{"multiplicativity"};
    PropertyResult diagonal{"A_r(m) = A(m,...,m), m A_r(m) integral"};

    for_each_test_tuple(o, rng, [&](const std::vector<Nat>& args) {
        const ArgTuple t(args);
        const Rational a = a_definition(t);
        agree.record(a == a_convolution(t) && a == a_divisor(t) && a == a_multiplicative(t),
                     [&] { return show(args); });
        e_le_a.record(check_e_le_a(t), [&] { return show(args); });
        Rational product = 1;
        for (Nat m : args) {
            product *= a_divisor(ArgTuple{m});
        }
        lower.record(a >= product && ((a == product) == pairwise_coprime(args)), [&] { return show(args); });
    });
    for (Nat p : {2, 3, 5}) {
        for (std::size_t arity = 1; arity <= std::min(o.r, 3u); ++arity) {
            std::vector<std::vector<Nat>> axes(arity, {1, 2, 3, 4});
            for_each_tuple(axes, [&](std::span<const Nat> es) {
                std::vector<unsigned> exps(es.begin(), es.end());
                std::vector<Nat> args;
                for (unsigned e : exps) {
                    Nat q = 1;
                    for (unsigned j = 0; j < e; ++j) {
                        q *= p;
                    }
                    args.push_back(q);
                }
                corollary.record(a_prime_power(p, exps) == a_definition(ArgTuple(args)),
                                 [&] { return "p=" + std::to_string(p) + " " + show(args); });
            });
        }
    }
    for (std::size_t i = 0; i < o.samples; ++i) {
        const std::size_t arity = rng.between(1, std::max(o.r, 1u));
        const auto [a, b] = coprime_split(rng, arity, o.max);
        mult.record(a_convolution(ArgTuple(multiply(a, b))) == a_divisor(ArgTuple(a)) * a_divisor(ArgTuple(b)),
                    [&] { return show(a) + " x " + show(b); });
    }
    for (Nat m = 1; m <= o.max; ++m) {
        for (unsigned r = 1; r <= o.r; ++r) {
            const Rational ar = a_r_diagonal(m, r);
            const Rational scaled = ar * to_int(m);
            diagonal.record(ar == a_divisor(ArgTuple(std::vector<Nat>(r, m))) && scaled.get_den() == 1 && scaled >= 0,
                            [&] { return "m=" + std::to_string(m) + ", r=" + std::to_string(r); });
        }
    }
    return {"gcdsum", {agree, corollary, e_le_a, lower, mult, diagonal}};
}

SuiteResult unified_suite(const VerifyOptions& o, SeededRandom& rng) {
    PropertyResult agree{"definition = convolution = divisor (4 pairs)"};
    PropertyResult shortcut{"multiplicative shortcut"};
    PropertyResult recover{"F(id,mu) = E, F(phi,1) = A, F(1,1) = F_tau"};
    PropertyResult mult{"multiplicativity"};
    PropertyResult gbar{"f from (gbar*mu, 1) = gbar(gcd)"};

    std::vector<ApostolPair> pairs;
    for (const auto& name : builtin_pair_names()) {
        pairs.push_back(builtin_pair(name));
    }
    const auto& ram = pairs[0];
    const auto& gcd = pairs[1];
    const auto& tau_pair = pairs[2];

    for_each_test_tuple(o, rng, [&](const std::vector<Nat>& args) {
        const ArgTuple t(args);
        for (const auto& pair : pairs) {
            const Rational conv = f_general_convolution(pair, t);
            agree.record(conv == f_general_definition(pair, t) && conv == f_general_divisor(pair, t),
                         [&] { return pair.name + " " + show(args); });
            shortcut.record(conv == f_general_multiplicative(pair, t), [&] { return pair.name + " " + show(args); });
        }
        recover.record(f_general_convolution(ram, t) == Rational(e_multiplicative(t)) &&
                           f_general_divisor(gcd, t) == a_multiplicative(t) &&
                           f_general_definition(tau_pair, t) == f_tau(t),
                       [&] { return show(args); });
    });
    for (std::size_t i = 0; i < o.samples / 10 + 1; ++i) {
        const std::size_t arity = rng.between(1, std::max(o.r, 1u));
        const auto [a, b] = coprime_split(rng, arity, o.max);
        const auto& pair = pairs[rng.between(0, pairs.size() - 1)];
        mult.record(f_general_convolution(pair, ArgTuple(multiply(a, b))) ==
                        f_general_convolution(pair, ArgTuple(a)) * f_general_convolution(pair, ArgTuple(b)),
                    [&] { return pair.name + " " + show(a) + " x " + show(b); });
    }
    const ArithmeticFunction mu = [](Nat n) { return Rational(mobius(n)); };
    const ArithmeticFunction one = [](Nat) { return Rational(1); };
    const std::vector<std::pair<std::string, ArithmeticFunction>> gbars = {
        {"id", [](Nat n) { return Rational(to_int(n)); }},
        {"tau", [](Nat n) { return Rational(to_int(tau(n))); }},
    };
    for (const auto& [name, fbar] : gbars) {
        const ApostolPair pair{name, dirichlet_convolution(fbar, mu), one, false};
        for (Nat k = 1; k <= o.max; ++k) {
            for (Nat n = 1; n <= o.max; ++n) {
                gbar.record(f_two_var(pair, k, n) == fbar(std::gcd(k, n)), [&, k, n] {
                    return name + " k=" + std::to_string(k) + ", n=" + std::to_string(n);
                });
            }
        }
    }
    return {"unified", {agree, shortcut, recover, mult, gbar}};
}

SuiteResult congruence_suite(const VerifyOptions& o, SeededRandom& rng) {
    PropertyResult agree{"brute force = formula = singleton formulas"};
    PropertyResult partition{"sum over singleton patterns = M^(r-1)"};
    PropertyResult random_sets{"brute force = formula (general sets)"};
    PropertyResult linkage{"N_0(m, {m/m_i}) = E(m_1,...,m_r)"};
    PropertyResult permute{"permutation invariance"};

    for (Nat M = 1; M <= o.max; ++M) {
        const auto ds = divisors(M);
        for (std::size_t arity = 1; arity <= o.r; ++arity) {
            if (grid_size(M, arity) > kEnumerationLimit) {
                continue;
            }
            std::vector<std::vector<Nat>> axes(arity, ds);
            std::vector<Int> pattern_total(M, 0);
            for_each_tuple(axes, [&](std::span<const Nat> pattern) {
                std::vector<DivisorSet> sets;
                for (Nat d : pattern) {
                    sets.push_back(DivisorSet{d});
                }
                for (Nat n = 0; n < M; ++n) {
                    const CongruenceInstance inst(M, static_cast<std::int64_t>(n), sets);
                    const Int brute = count_bruteforce(inst);
                    bool ok = brute == count_formula(inst) &&
                              brute == count_singleton_divisor(M, static_cast<std::int64_t>(n), pattern);
                    if (M <= 64) {
                        ok = ok && brute == count_singleton_exponential(M, static_cast<std::int64_t>(n), pattern);
                    }
                    agree.record(ok, [&] {
                        return "M=" + std::to_string(M) + ", n=" + std::to_string(n) + ", D=" +
                               show(std::vector<Nat>(pattern.begin(), pattern.end()));
                    });
                    pattern_total[n] += brute;
                    if (pattern.size() > 1) {
                        std::vector<Nat> rev(pattern.rbegin(), pattern.rend());
                        permute.record(count_singleton_divisor(M, static_cast<std::int64_t>(n), rev) == brute,
                                       [&] { return "M=" + std::to_string(M) + " " + show(rev); });
                    }
                }
            });
            for (Nat n = 0; n < M; ++n) {
                partition.record(pattern_total[n] == to_int(grid_size(M, arity - 1)), [&] {
                    return "M=" + std::to_string(M) + ", r=" + std::to_string(arity) + ", n=" + std::to_string(n);
                });
            }
        }
    }
    for (std::size_t i = 0; i < std::max<std::size_t>(o.samples / 20, 1); ++i) {
        const Nat M = rng.between(1, o.max);
        const std::size_t arity = rng.between(1, std::max(o.r, 1u));
        if (grid_size(M, arity) > kEnumerationLimit) {
            continue;
        }
        const auto ds = divisors(M);
        std::vector<DivisorSet> sets;
        std::string text;
        for (std::size_t j = 0; j < arity; ++j) {
            std::vector<Nat> chosen;
            for (Nat d : ds) {
                if (rng.between(0, 1) == 1) {
                    chosen.push_back(d);
                }
            }
            if (chosen.empty()) {
                chosen.push_back(ds[rng.between(0, ds.size() - 1)]);
            }
            text += (j ? ";" : "") + show(chosen);
            sets.emplace_back(chosen);
        }
        const CongruenceInstance inst(M, static_cast<std::int64_t>(rng.between(0, M - 1)), sets);
        random_sets.record(count_bruteforce(inst) == count_formula(inst), [&] {
            return "M=" + std::to_string(M) + ", n=" + std::to_string(inst.target()) + ", D=" + text;
        });
    }
    VerifyOptions small = o;
    small.max = std::min<Nat>(o.max, 12);
    small.r = std::min(o.r, 3u);
    for_each_test_tuple(small, rng, [&](const std::vector<Nat>& args) {
        const ArgTuple t(args);
        std::vector<Nat> ds;
        for (Nat m : args) {
            ds.push_back(t.lcm() / m);
        }
        linkage.record(count_singleton_divisor(t.lcm(), 0, ds) == e_multiplicative(t), [&] { return show(args); });
    });
    return {"congruence", {agree, partition, random_sets, linkage, permute}};
}

SuiteResult inversion_suite(const VerifyOptions& o, SeededRandom& rng) {
    PropertyResult inversion{"sum_{d|m} E(d) = m_1...m_r / lcm"};
    PropertyResult g_conv{"f_r = g_r * id_{r-1}"};
    for_each_test_tuple(o, rng, [&](const std::vector<Nat>& args) {
        inversion.record(verify_moebius_inversion(ArgTuple(args)), [&] { return show(args); });
    });
    for (unsigned r = 1; r <= std::max(o.r, 3u); ++r) {
        for (Nat m = 1; m <= o.max; ++m) {
            Int sum = 0;
            for (Nat d : divisors(m)) {
                sum += g_r(r, d) * power(m / d, r - 1);
            }
            g_conv.record(sum == f_r_diagonal(m, r),
                          [&] { return "r=" + std::to_string(r) + ", m=" + std::to_string(m); });
        }
    }
    return {"inversion", {inversion, g_conv}};
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h = (h ^ c) * 1099511628211ull;
    }
    return h;
}

using SuiteFn = SuiteResult (*)(const VerifyOptions&, SeededRandom&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"ramanujan", ramanujan_suite}, {"orbicyclic", orbicyclic_suite}, {"gcdsum", gcdsum_suite},
        {"unified", unified_suite},     {"congruence", congruence_suite}, {"inversion", inversion_suite},
    };
    return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) {
        names.push_back(name);
    }
    names.emplace_back("all");
    return names;
}

std::vector<SuiteResult> run_suites(std::string_view name, const VerifyOptions& options) {
    if (options.max == 0 || options.r == 0) {
        throw std::invalid_argument("verify: max and r must be positive");
    }
    std::vector<SuiteResult> results;
    bool found = false;
    for (const auto& [suite, fn] : registry()) {
        if (name == "all" || name == suite) {
            found = true;
            // Each suite gets its own stream so results do not depend on
            // which other suites ran.
            SeededRandom rng(options.seed ^ fnv1a(suite));
            results.push_back(fn(options, rng));
        }
    }
    if (!found) {
        throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    }
    return results;
}

}  // namespace mularith
