"""Brute-force reference values used to freeze expectations in the C++ tests.

Everything here follows the raw definitions: complex exponential sums,
plain enumeration and Fraction arithmetic. Nothing is imported from the
library under test.
"""
import cmath
import itertools
import math
from fractions import Fraction


def ramanujan(n, k):
    s = sum(cmath.exp(2j * math.pi * j * k / n) for j in range(1, n + 1) if math.gcd(j, n) == 1)
    v = round(s.real)
    assert abs(s.real - v) < 1e-6 and abs(s.imag) < 1e-6
    return v


def lcm(*xs):
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def orbicyclic(ms, M=None):
    m = lcm(*ms)
    M = M or m
    total = 0
    for k in range(1, M + 1):
        p = 1
        for mi in ms:
            p *= ramanujan(mi, k)
        total += p
    assert total % M == 0
    return total // M


def gcd_mean(ms):
    m = lcm(*ms)
    return Fraction(sum(math.prod(math.gcd(k, mi) for mi in ms) for k in range(1, m + 1)), m)


def tau(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def f_tau_def(ms):
    m = lcm(*ms)
    return Fraction(sum(math.prod(tau(math.gcd(k, mi)) for mi in ms) for k in range(1, m + 1)), m)


def count(M, n, sets):
    g = lambda x: math.gcd(x, M) if x else M
    return sum(1 for xs in itertools.product(range(M), repeat=len(sets))
               if sum(xs) % M == n % M and all(g(x) in D for x, D in zip(xs, sets)))


if __name__ == "__main__":
    print("c_6(1)", ramanujan(6, 1), "c_4(2)", ramanujan(4, 2), "c_6(3)", ramanujan(6, 3))
    print("c_8(8,4,2)", ramanujan(8, 8), ramanujan(8, 4), ramanujan(8, 2))
    print("E(6,6) M=6,12", orbicyclic([6, 6]), orbicyclic([6, 6], 12))
    print("E(3,3,3)", orbicyclic([3, 3, 3]), "E(2,2,2)", orbicyclic([2, 2, 2]), "E(5,5,5)", orbicyclic([5, 5, 5]))
    print("E(6,6,6)", orbicyclic([6, 6, 6]), "E(12,18,30)", orbicyclic([12, 18, 30]))
    print("E(4,4,2)", orbicyclic([4, 4, 2]), "E(4,4,4)", orbicyclic([4, 4, 4]), "E(9,9,3,3)", orbicyclic([9, 9, 3, 3]))
    print("A(4)", gcd_mean([4]), "A(2,4)", gcd_mean([2, 4]), "A(3,3)", gcd_mean([3, 3]), "A(6,6)", gcd_mean([6, 6]))
    print("A(2,3)", gcd_mean([2, 3]), "A(12,18)", gcd_mean([12, 18]), "A(4,8,8)", gcd_mean([4, 8, 8]))
    print("Ftau(2,2)", f_tau_def([2, 2]), "Ftau(2,3)", f_tau_def([2, 3]), "Ftau(4,6)", f_tau_def([4, 6]))
    print("f_3(5)", orbicyclic([5, 5, 5]), "f_3(9)", orbicyclic([9, 9, 9]), "f_4(3)", orbicyclic([3, 3, 3, 3]))
    print("S_3(10)", sum(orbicyclic([m, m, m]) for m in range(1, 11)))
    print("S_2(10)", sum(orbicyclic([m, m]) for m in range(1, 11)))
    print("N M=4 n=0 {1}{1}", count(4, 0, [{1}, {1}]), "n=1", count(4, 1, [{1}, {1}]))
    print("N M=2 n=1 {1}^3", count(2, 1, [{1}] * 3))
    print("N M=6 n=3 {1}{2}", count(6, 3, [{1}, {2}]))
    print("N M=12 n=0 {2}{2}", count(12, 0, [{2}, {2}]))
    print("N M=6 n=0 {3}{2}", count(6, 0, [{3}, {2}]))
    print("N M=6 n=0 {1}{2}{3}", count(6, 0, [{1}, {2}, {3}]))
    print("N M=12 n=5 {1,2}{3,4}{6}", count(12, 5, [{1, 2}, {3, 4}, {6}]))
