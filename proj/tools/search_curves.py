#!/usr/bin/env python3
"""Brute-force search for small hyperelliptic curves with prescribed arithmetic.

Pure-Python point counting over F_p and F_{p^2}, independent of the C++
library. Used to find and pin the test curves in tests/data/.

    python3 tools/search_curves.py            # print the pinned search results
    python3 tools/search_curves.py --count 3 1 0 1 0   # N_1, N_2, L, h for y^2 = f over F_3
"""
import argparse
import itertools
import json


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def nonresidue(p):
    return next(c for c in range(2, p) if legendre(c, p) == -1)


class Fp2:
    """F_p[s]/(s^2 - nr) for odd p."""

    def __init__(self, p):
        self.p = p
        self.nr = nonresidue(p)

    def elements(self):
        return itertools.product(range(self.p), repeat=2)

    def mul(self, a, b):
        p, nr = self.p, self.nr
        return ((a[0] * b[0] + nr * a[1] * b[1]) % p, (a[0] * b[1] + a[1] * b[0]) % p)

    def add(self, a, b):
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def eval(self, f, x):
        acc = (0, 0)
        for c in reversed(f):
            acc = self.add(self.mul(acc, x), (c % self.p, 0))
        return acc

    def chi(self, a):
        # quadratic character via the norm map to F_p
        if a == (0, 0):
            return 0
        norm = (a[0] * a[0] - self.nr * a[1] * a[1]) % self.p
        return legendre(norm, self.p)


def points_at_infinity(f, p, n):
    if len(f) % 2 == 0:  # odd degree
        return 1
    lc = f[-1] % p
    if n % 2 == 0:
        return 2
    return 1 + legendre(lc, p)


def count_n1(f, p):
    total = 0
    for x in range(p):
        v = sum(c * pow(x, i, p) for i, c in enumerate(f)) % p
        total += 1 + legendre(v, p)
    return total + points_at_infinity(f, p, 1)


def count_n2(f, p):
    k = Fp2(p)
    total = 0
    for x in k.elements():
        total += 1 + k.chi(k.eval(f, x))
    return total + points_at_infinity(f, p, 2)


def squarefree(f, p):
    # gcd(f, f') over F_p
    def trim(a):
        while a and a[-1] % p == 0:
            a = a[:-1]
        return [c % p for c in a]

    def mod(a, b):
        a = trim(a)
        b = trim(b)
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bc) % p
            a = trim(a)
        return a

    a = trim(list(f))
    b = trim([i * c for i, c in enumerate(f)][1:])
    if not b:
        return False
    while b:
        a, b = b, mod(a, b)
    return len(a) == 1


def lpoly(f, p):
    deg = len(f) - 1
    g = (deg - 1) // 2
    n1 = count_n1(f, p)
    s1 = p + 1 - n1
    if g == 1:
        return [1, -s1, p], n1, None
    n2 = count_n2(f, p)
    s2 = p * p + 1 - n2
    a1 = -s1
    a2 = (s1 * s1 - s2) // 2
    return [1, a1, a2, p * a1, p * p], n1, n2


def monic_polys(p, deg):
    for tail in itertools.product(range(p), repeat=deg):
        yield list(tail) + [1]


def search(p, deg, predicate):
    # deterministic: coefficient tuples in lexicographic order of (c_{deg-1},...,c_0)
    for tail in itertools.product(range(p), repeat=deg):
        f = list(reversed(tail)) + [1]
        if not squarefree(f, p):
            continue
        L, n1, n2 = lpoly(f, p)
        if predicate(L, n1):
            return f, L, n1, n2, sum(L)
    return None


def report(label, p, result):
    f, L, n1, n2, h = result
    print(json.dumps({"label": label, "p": p, "f": f, "L": L, "N1": n1, "N2": n2, "h": h}))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", nargs="+", type=int, metavar="P F0 F1 ...")
    args = ap.parse_args()
    if args.count:
        p, f = args.count[0], args.count[1:]
        L, n1, n2 = lpoly(f, p)
        print(json.dumps({"p": p, "f": f, "L": L, "N1": n1, "N2": n2, "h": sum(L)}))
        return

    # elliptic curves over F_3 with h = N_1 = 3 (char != 2 case, 2 | q-1, 2 does not divide h)
    report("ell_f3_h3", 3, search(3, 3, lambda L, n1: n1 == 3))
    # ordinary elliptic curve over F_3 with 3 | h
    report("ell_f3_ordinary_3_divides_h", 3, search(3, 3, lambda L, n1: n1 % 3 == 0 and L[1] % 3 != 0))
    # elliptic curve over F_5 with N_1 = 10 (trace -4, ordinary)
    report("ell_f5_n10", 5, search(5, 3, lambda L, n1: n1 == 10))
    # elliptic curve over F_5 with 5 not dividing h
    report("ell_f5_h_prime_to_5", 5, search(5, 3, lambda L, n1: n1 % 5 != 0))
    # elliptic curve over F_7 with h odd (for 2-part tests) and one with 7 | h
    report("ell_f7_h_odd", 7, search(7, 3, lambda L, n1: n1 % 2 == 1))
    report("ell_f7_7_divides_h", 7, search(7, 3, lambda L, n1: n1 % 7 == 0))
    # genus-2 imaginary models
    report("g2_f3_3_divides_h", 3, search(3, 5, lambda L, n1: sum(L) % 3 == 0))
    report("g2_f3_h_prime_to_3", 3, search(3, 5, lambda L, n1: sum(L) % 3 != 0))
    report("g2_f5_5_divides_h", 5, search(5, 5, lambda L, n1: sum(L) % 5 == 0))
    for name, p, f in [("ell_f3_x3+x", 3, [0, 1, 0, 1]), ("g2_f7_x5+x+3", 7, [3, 1, 0, 0, 0, 1])]:
        L, n1, n2 = lpoly(f, p)
        report(name, p, (f, L, n1, n2, sum(L)))


if __name__ == "__main__":
    main()
