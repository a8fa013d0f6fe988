// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "mularith/asymptotics.hpp"
#include "mularith/congruence.hpp"
#include "mularith/gcdsum.hpp"
#include "mularith/orbicyclic.hpp"
#include "mularith/ramanujan.hpp"
#include "mularith/unified.hpp"
#include "mularith/verify.hpp"

using namespace mularith;

namespace {

struct Outcome {
    bool ok = true;
    std::size_t checked = 0;
    std::string detail;  // first failure, or a measured quantity

    void expect(bool cond, const std::function<std::string()>& describe) {
        ++checked;
        if (!cond && ok) {
            ok = false;
            detail = describe();
        } else if (!cond) {
            ok = false;
        }
    }
};

std::vector<std::vector<Nat>> grid(std::size_t arity, Nat max) {
    std::vector<std::vector<Nat>> out;
    std::vector<std::vector<Nat>> axes(arity);
    for (auto& axis : axes) {
        for (Nat m = 1; m <= max; ++m) {
            axis.push_back(m);
        }
    }
    for_each_tuple(axes, [&](std::span<const Nat> t) { out.emplace_back(t.begin(), t.end()); });
    return out;
}

std::string show(const std::vector<Nat>& args) { return ArgTuple(args).to_string(); }

// E grid of criterion 2, shared with criterion 6.
std::vector<std::vector<Nat>> criterion2_tuples() {
    std::vector<std::vector<Nat>> out = grid(1, 30);
    const auto pairs = grid(2, 30);
    out.insert(out.end(), pairs.begin(), pairs.end());
    SeededRandom rng(20240601);
    for (std::size_t r : {3u, 4u}) {
        for (int i = 0; i < 10000; ++i) {
            out.push_back(rng.tuple(r, 30));
        }
    }
    return out;
}

Outcome criterion1() {
    Outcome o;
    for (Nat n = 1; n <= 60; ++n) {
        for (Nat k = 1; k <= 120; ++k) {
            const Int a = c_exponential(n, k);
            const Int b = c_divisor(n, k);
            const Int c = c_prime_power_method(n, k);
            o.expect(a == b && b == c, [&] {
                return "c_" + std::to_string(n) + "(" + std::to_string(k) + "): " + to_string(a) + " " +
                       to_string(b) + " " + to_string(c);
            });
        }
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (const auto& args : criterion2_tuples()) {
        const ArgTuple t(args);
        const Nat m = t.lcm();
        const Int ref = e_multiplicative(t);
        const Int d1 = e_definition(t, m, 2 * m);
        const Int d2 = e_definition(t, 2 * m, 2 * m);
        const Int conv = e_convolution(t);
        const Int div = e_divisor(t);
        o.expect(ref >= 0 && d1 == ref && d2 == ref && conv == ref && div == ref, [&] {
            return "E" + t.to_string() + ": def " + to_string(d1) + "/" + to_string(d2) + " conv " + to_string(conv) +
                   " div " + to_string(div) + " mult " + to_string(ref);
        });
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (Nat m = 1; m <= 200; ++m) {
        const ArgTuple t{m};
        const Int expected = m == 1 ? 1 : 0;
        o.expect(e_multiplicative(t) == expected && e_convolution(t) == expected,
                 [&] { return "E(" + std::to_string(m) + ") != eps"; });
    }
    for (Nat a = 1; a <= 200; ++a) {
        for (Nat b = 1; b <= 200; ++b) {
            const ArgTuple t{a, b};
            const Int expected = a == b ? to_int(euler_phi(a)) : Int(0);
            o.expect(e_multiplicative(t) == expected && e_divisor(t) == expected,
                     [&] { return "E" + t.to_string() + " != phi*[m1=m2]"; });
        }
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (std::size_t r = 1; r <= 3; ++r) {
        for (const auto& args : grid(r, 20)) {
            o.expect(verify_moebius_inversion(ArgTuple(args)), [&] { return "inversion fails at " + show(args); });
        }
    }
    return o;
}

// Independent brute force: (1/M) sum_k prod gcd(k, m_i) with M = lcm.
Rational a_brute(const std::vector<Nat>& args) {
    const Nat M = ArgTuple(args).lcm();
    Int total = 0;
    for (Nat k = 1; k <= M; ++k) {
        Int prod = 1;
        for (Nat m : args) {
            prod *= to_int(std::gcd(k, m));
        }
        total += prod;
    }
    return make_rational(total, to_int(M));
}

Outcome criterion5() {
    Outcome o;
    std::vector<std::vector<Nat>> tuples = grid(1, 30);
    const auto pairs = grid(2, 30);
    tuples.insert(tuples.end(), pairs.begin(), pairs.end());
    SeededRandom rng(5);
    for (int i = 0; i < 3000; ++i) {
        tuples.push_back(rng.tuple(3, 30));
    }
    for (const auto& args : tuples) {
        const ArgTuple t(args);
        const Rational def = a_definition(t);
        const Rational conv = a_convolution(t);
        const Rational div = a_divisor(t);
        o.expect(def == conv && conv == div, [&] {
            return "A" + t.to_string() + ": " + to_string(def) + " " + to_string(conv) + " " + to_string(div);
        });
    }
    for (Nat p : {2, 3, 5}) {
        for (std::size_t r = 1; r <= 3; ++r) {
            std::vector<std::vector<Nat>> axes(r, std::vector<Nat>{1, 2, 3, 4});
            for_each_tuple(axes, [&](std::span<const Nat> exps) {
                std::vector<unsigned> e(exps.begin(), exps.end());
                std::vector<Nat> args;
                for (unsigned a : e) {
                    args.push_back(static_cast<Nat>(power(p, a).get_ui()));
                }
                o.expect(a_prime_power(p, e) == a_brute(args),
                         [&] { return "prime-power corollary fails at " + show(args); });
            });
        }
    }
    o.expect(gcd_sum_mean(ArgTuple{2, 4}) == make_rational(7, 2), [] { return std::string("A(2,4) != 7/2"); });
    o.expect(a_brute({2, 4}) == make_rational(7, 2), [] { return std::string("brute A(2,4) != 7/2"); });
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::size_t coprime = 0;
    for (const auto& args : criterion2_tuples()) {
        const ArgTuple t(args);
        const Rational a = a_multiplicative(t);
        o.expect(Rational(e_multiplicative(t)) <= a, [&] { return "E > A at " + t.to_string(); });
        Rational product = 1;
        bool pairwise_coprime = true;
        for (std::size_t i = 0; i < args.size(); ++i) {
            product *= a_multiplicative(ArgTuple{args[i]});
            for (std::size_t j = i + 1; j < args.size(); ++j) {
                pairwise_coprime = pairwise_coprime && std::gcd(args[i], args[j]) == 1;
            }
        }
        o.expect(a >= product, [&] { return "A < prod A(m_i) at " + t.to_string(); });
        if (pairwise_coprime) {
            ++coprime;
            o.expect(a == product, [&] { return "no equality on coprime tuple " + t.to_string(); });
        }
    }
    if (o.ok) {
        o.detail = std::to_string(coprime) + " coprime tuples";
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    const auto ram = builtin_pair("ramanujan");
    const auto gcd = builtin_pair("gcd");
    const auto tau_pair = builtin_pair("tau");
    for (std::size_t r = 1; r <= 3; ++r) {
        for (const auto& args : grid(r, 20)) {
            const ArgTuple t(args);
            const Rational fe = f_general_convolution(ram, t);
            const Rational fa = f_general_convolution(gcd, t);
            o.expect(fe == Rational(e_multiplicative(t)) && f_general_divisor(ram, t) == fe,
                     [&] { return "F(id,mu) != E at " + t.to_string(); });
            o.expect(fa == a_multiplicative(t) && f_general_divisor(gcd, t) == fa,
                     [&] { return "F(phi,1) != A at " + t.to_string(); });
            const Rational conv = f_tau(t);
            const Rational def = f_general_definition(tau_pair, t);
            const Rational div = f_general_divisor(tau_pair, t);
            o.expect(conv == def && def == div, [&] {
                return "F_tau" + t.to_string() + ": " + to_string(def) + " " + to_string(conv) + " " + to_string(div);
            });
        }
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    for (Nat M = 1; M <= 20; ++M) {
        const auto ds = divisors(M);
        for (std::size_t r = 1; r <= 3; ++r) {
            std::vector<std::vector<Nat>> axes(r, ds);
            std::vector<Int> partition(M, 0);
            for_each_tuple(axes, [&](std::span<const Nat> choice) {
                std::vector<DivisorSet> sets;
                for (Nat d : choice) {
                    sets.emplace_back(std::vector<Nat>{d});
                }
                for (Nat n = 0; n < M; ++n) {
                    const CongruenceInstance inst(M, static_cast<std::int64_t>(n), sets);
                    const Int formula = count_formula(inst);
                    const Int brute = count_bruteforce(inst);
                    partition[n] += formula;
                    o.expect(formula == brute, [&] {
                        return "M=" + std::to_string(M) + " n=" + std::to_string(n) + " sets " + show({choice.begin(), choice.end()}) +
                               ": formula " + to_string(formula) + " brute " + to_string(brute);
                    });
                }
            });
            const Int expected = power(M, static_cast<unsigned>(r - 1));
            for (Nat n = 0; n < M; ++n) {
                o.expect(partition[n] == expected, [&] {
                    return "partition identity fails at M=" + std::to_string(M) + " r=" + std::to_string(r) +
                           " n=" + std::to_string(n);
                });
            }
        }
    }
    SeededRandom rng(8);
    for (int i = 0; i < 500; ++i) {
        const Nat M = rng.between(1, 16);
        const auto ds = divisors(M);
        const std::size_t r = rng.between(1, 3);
        std::vector<DivisorSet> sets;
        std::ostringstream text;
        bool singleton_only = true;
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<Nat> chosen;
            const std::size_t size = rng.between(1, ds.size());
            for (std::size_t q = 0; q < size; ++q) {
                chosen.push_back(ds[rng.between(0, ds.size() - 1)]);
            }
            sets.emplace_back(chosen);
            singleton_only = singleton_only && sets.back().is_singleton();
        }
        if (singleton_only && ds.size() > 1) {
            // force a genuinely non-singleton set
            sets.front() = DivisorSet({ds.front(), ds.back()});
        }
        const auto n = static_cast<std::int64_t>(rng.between(0, M - 1));
        const CongruenceInstance inst(M, n, sets);
        const Int formula = count_formula(inst);
        const Int brute = count_bruteforce(inst);
        o.expect(formula == brute, [&] {
            return "random instance M=" + std::to_string(M) + " n=" + std::to_string(n) + ": formula " +
                   to_string(formula) + " brute " + to_string(brute);
        });
    }
    return o;
}

Outcome criterion9() {
    Outcome o;
    for (std::size_t r = 1; r <= 3; ++r) {
        for (const auto& args : grid(r, 12)) {
            const ArgTuple t(args);
            const Nat m = t.lcm();
            std::vector<Nat> ds;
            for (Nat mi : args) {
                ds.push_back(m / mi);
            }
            o.expect(count_singleton_divisor(m, 0, ds) == e_multiplicative(t),
                     [&] { return "N_0 != E at " + t.to_string(); });
        }
    }
    return o;
}

Outcome criterion10() {
    Outcome o;
    const auto c2 = euler_constant(2, 100000);
    const HighPrecision pi = boost::math::constants::pi<HighPrecision>();
    const HighPrecision six_over_pi2 = 6 / (pi * pi);
    const HighPrecision delta = abs(c2.value - six_over_pi2);
    o.expect(delta < HighPrecision("5e-7"), [&] { return "C_2 off by " + to_decimal(delta, 4); });

    const auto reports = asymptotic_report(3, {5000}, 100000);
    const HighPrecision deviation = abs(*reports.front().ratio - 1);
    o.expect(deviation <= HighPrecision("0.02"), [&] { return "r=3 ratio deviates by " + to_decimal(deviation, 6); });

    for (unsigned r = 2; r <= 6; ++r) {
        for (Nat m = 1; m <= 500; ++m) {
            Int sum = 0;
            for (Nat d : divisors(m)) {
                sum += g_r(r, d) * power(m / d, r - 1);
            }
            o.expect(sum == f_r_diagonal(m, r), [&] {
                return "g_r convolution fails at r=" + std::to_string(r) + " m=" + std::to_string(m);
            });
        }
    }
    if (o.ok) {
        o.detail = "|C_2 - 6/pi^2| = " + to_decimal(delta, 4) + ", r=3 ratio " + to_decimal(*reports.front().ratio, 10);
    }
    return o;
}

Outcome criterion11() {
    Outcome o;
    for (unsigned s = 1; s <= 12; ++s) {
        for (long x = 2; x <= 100; ++x) {
            Int num;
            const Int base = x - 1;
            mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), s - 1);
            num += s % 2 == 0 ? 1 : -1;
            o.expect(mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(x)) != 0,
                     [&] { return "x does not divide at s=" + std::to_string(s) + " x=" + std::to_string(x); });
            const Int h = h_poly(s, Int(x));
            o.expect(h * x == num, [&] { return "h_poly mismatch at s=" + std::to_string(s); });
            if (s == 1) {
                o.expect(h == 0, [&] { return "h_1(" + std::to_string(x) + ") != 0"; });
            }
            if (s == 2) {
                o.expect(h == 1, [&] { return "h_2(" + std::to_string(x) + ") != 1"; });
            }
        }
    }
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;  // 0 = no stated budget
    Outcome (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "Ramanujan three-way agreement", 5, criterion1},
        {2, "E four-way agreement", 60, criterion2},
        {3, "E(m) = eps(m), E(m1,m2) = phi(m)[m1=m2]", 0, criterion3},
        {4, "Moebius-inversion identity", 0, criterion4},
        {5, "A three-way agreement and prime-power corollary", 0, criterion5},
        {6, "E <= A and product lower bound", 0, criterion6},
        {7, "Unified recovery of E, A and F_tau", 0, criterion7},
        {8, "Congruence counting", 300, criterion8},
        {9, "E-linkage of singleton counts", 0, criterion9},
        {10, "Asymptotics", 120, criterion10},
        {11, "h_s integrality", 0, criterion11},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = o.ok;
        std::string note = o.detail;
        if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
            ok = false;
            note = "over time budget of " + std::to_string(static_cast<int>(c.budget_seconds)) + " s";
        }
        std::printf("[%s] criterion %2d: %s (%zu checks, %.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, o.checked,
                    seconds, note.empty() ? "" : "; ", note.c_str());
        std::fflush(stdout);
        failures += ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
