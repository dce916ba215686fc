#!/usr/bin/env python3
"""Independent oracle for the frozen expected values in the C++ test suites.

Uses sympy / plain Python integers only; shares no code with the library.
Run: python3 tests/oracle/golden.py
"""
from math import comb
from fractions import Fraction
import sympy as sp

x, q = sp.symbols("x q")


def C(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def g_poly(n):
    return sp.expand(sum(C(n, k) ** 2 * C(2 * k, k) * x**k for k in range(n + 1)))


def f_poly(n):
    return sp.expand(sum(C(n, k) ** 2 * C(2 * k, n) * x**k for k in range(n + 1)))


def g_val(n, v):
    return sum(C(n, k) ** 2 * C(2 * k, k) * v**k for k in range(n + 1))


def S(n):
    if n < 3:
        return 0
    m = n - 3
    return sum((-1) ** k * C(2 * k, k) * C(m, k) * C(k, m - k) for k in range(m + 1))


def qbinom(n, k):
    if k < 0 or k > n:
        return sp.Integer(0)
    num = sp.prod([1 - q ** (n - k + i) for i in range(1, k + 1)])
    den = sp.prod([1 - q**i for i in range(1, k + 1)])
    return sp.expand(sp.cancel(num / den))


def second_sum(n):
    return sum((8 * k * k + 12 * k + 5) * g_val(k, -1) for k in range(n))


def T(n):
    t = 0
    for k in range(1, n + 1):
        num = S(k + 2) + 12 * S(k + 1) + 16 * S(k)
        assert num % k == 0
        t += (-1) ** k * (num // k)
    return t


if __name__ == "__main__":
    print("g2 =", g_poly(2), " g2(-1) =", g_val(2, -1), " g2(1) =", g_val(2, 1))
    print("f1 =", f_poly(1))
    print("S0..S12 =", [S(n) for n in range(13)])
    print("first sum n=2:", sp.expand(sum((4 * k + 3) * g_poly(k) for k in range(2))))
    print("second sums n=1..5:", [second_sum(n) for n in range(1, 6)])
    print("T1..T8 =", [T(n) for n in range(1, 9)])
    print("Phi6 =", sp.cyclotomic_poly(6, q))
    print("[4,2]_q =", sp.Poly(qbinom(4, 2), q).all_coeffs()[::-1])
    print("[6,3]_q =", sp.Poly(qbinom(6, 3), q).all_coeffs()[::-1])
    print("Sum_{k<3} k g_k(1) =", sum(k * g_val(k, 1) for k in range(3)))
    for (m, n) in [(1, 1), (1, 2), (2, 2), (2, 3)]:
        e = sp.cancel((1 - q) / (1 - q ** (m + n)) * qbinom(m + n - 2, m - 1) * qbinom(n, m) * qbinom(2 * n, n))
        print(f"q-analog m={m} n={n}:", sp.factor(e), "|", sp.Poly(sp.expand(e), q).all_coeffs()[::-1])
    # u_j of the second proof at n=3
    n = 3
    u = lambda j: C(2 * j, j) * sum((4 * k + 3) * C(k, j) ** 2 for k in range(j, n))
    print("u_j n=3:", [u(j) for j in range(4)])
    # rsw example
    p = sp.expand(qbinom(4, 2) * (1 + q + q**2 + q**3))
    print("rsw quotient:", sp.Poly(sp.cancel((1 - q**2) * p / (1 - q**4)), q).all_coeffs()[::-1])
    # remark conjectures and prime refinement at desk scale
    bad = [n for n in range(1, 201) if (second_sum(n) - n * n) % (2 * n * n)]
    print("mod2n2 failures n<=200:", bad)
    bad = [p for p in sp.primerange(2, 120) if (second_sum(p) - 3 * p * p) % p**3]
    print("prime mod p^3 failures p<120:", bad)
    bad = [n for n in range(1, 201) if T(n) % n]
    print("last-1 failures n<=200:", bad)
    bad = [p for p in sp.primerange(3, 200) if (T(p) - 2 * p * (-1) ** ((p + 1) // 2)) % (p * p)]
    print("prime refinement failures p<200:", bad)
    kgk = [p for p in sp.primerange(3, 100) if (4 * sum(k * g_val(k, 1) for k in range(p)) + 3) % (p * p)]
    print("sun_kgk failures:", kgk)
    # lemma 3.3 vacuity witness: drop (3m^2+n^2+m+n)
    for m in range(0, 10):
        hit = None
        for n in range(0, 10):
            if (m, n) == (0, 0):
                continue
            E = C(m + n, m) * C(n + 1, m) * C(2 * n, n)
            d = (m + n) * (n + 1)
            if E % d != 0 or (E // d) % (m + n + 1) != 0:
                hit = (m, n, E)
                break
        if hit:
            print("lemma3 drop-factor witness:", hit)
            break
