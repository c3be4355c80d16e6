"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Everything here is generate-then-filter over all strings and plain Python
integers; nothing is shared with the library implementation.
"""
from fractions import Fraction
from itertools import product
from math import comb


def C(a, b):
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < 0 or a < b:
        return 0
    return comb(a, b)


def S(m, r):
    return sum(C(m, 2 * i) * C(i - 1, r) for i in range(r + 1, m // 2 + 1))


def T(n, r):
    return sum(C(n, j) * C(j - 1, r) for j in range(r + 1, n + 1))


def U(n, r):
    return sum(C(j - 1, r) * 2 ** (j - 1 - r) for j in range(r + 1, n + 1))


def W(n, r):
    return 2 ** (n - r) * sum(C(n - 2 - 2 * k, r - 2 * k) for k in range(r // 2 + 1)) + (-1) ** (r + 1)


def b_words(n, r):
    for w in product("btw", repeat=n):
        if w.count("b") == r and w[-1] != "b":
            yield "".join(w)


def b_plus(w):
    p = w.rfind("b")
    return "t" in w[p + 1:]


def weight(w):
    k = 0
    i = len(w) - 2
    while i >= 0 and w[i] == "b":
        k += 1
        i -= 1
    return k


def d_words(m, r):
    def rec(prefix, cells):
        if cells == m:
            if prefix.count("d") == r:
                yield prefix
            return
        for c in "bdw":
            width = 2 if c == "d" else 1
            if cells + width <= m:
                yield from rec(prefix + c, cells + width)
    for w in rec("", 0):
        if w[0] == "b":
            yield w


def d_plus(w):
    p = w.rfind("d")
    return "w" in w[p + 1:]


if __name__ == "__main__":
    print("S(6,1)", S(6, 1), "S(15,4)", S(15, 4), "T(9,2)", T(9, 2), "W(9,2)", W(9, 2))
    print("D+ m=6 r=1", sum(d_plus(w) for w in d_words(6, 1)))
    print("B n=4 r=1 all", len(list(b_words(4, 1))))
    print("B+ n=2 r=0", sorted(w for w in b_words(2, 0) if b_plus(w)))
    for n, r in [(2, 1)]:
        print("B+odd", [w for w in b_words(n, r) if b_plus(w) and weight(w) % 2])
        print("B-even", [w for w in b_words(n, r) if not b_plus(w) and weight(w) % 2 == 0])
    # strata n=4
    ws = [w for w in b_words(4, 1) if b_plus(w)]
    print("U strata", {j: sum(1 for w in ws if w.rfind("t") + 1 == j) for j in range(1, 5)})
    print("V strata", {j: sum(1 for w in ws if w.rfind("b") + 1 == 4 - j) for j in range(1, 4)})
    print("T strata", {j: sum(1 for w in ws if 4 - w.count("w") == j) for j in range(1, 5)})
    print("W strata n4r2", {k: sum(1 for w in b_words(4, 2) if weight(w) == k) for k in range(3)})
    # table
    for n in range(1, 11):
        print(",".join([str(n)] + [str(T(n, r)) for r in range(n)]))
    # theorem and oracle agreement
    for m in range(2, 15):
        for r in range(0, m // 2):
            n = m - 1 - r
            dp = sum(d_plus(w) for w in d_words(m, r))
            bp = sum(b_plus(w) for w in b_words(n, r))
            assert S(m, r) == T(n, r) == U(n, r) == W(n, r) == dp == bp, (m, r)
    # moriarty
    for m in range(1, 31):
        for r in range(0, m // 2 + 1):
            if m > r:
                lhs = sum(C(m, 2 * i) * C(i, r) for i in range(r, m // 2 + 1))
                rhs = Fraction(2) ** (m - 1 - 2 * r) * C(m - r, r) * Fraction(m, m - r)
                assert lhs == rhs and rhs.denominator == 1, (m, r)
    print("moriarty(6,1)", sum(C(6, 2 * i) * C(i, 1) for i in range(1, 4)))
    f = lambda n: T(2 * n, n)
    print("f", [f(n) for n in range(1, 6)])
    for n in range(1, 13):
        res = (24*n*n+44*n+16)*f(n) + (21*n*n+37*n+14)*f(n+1) - (3*n*n+7*n+2)*f(n+2)
        assert res == 0, n
    print("T(24,12)", f(12), "T(28,14)", f(14))
    print("S(200,50)", S(200, 50))
    print("S(40,8)", S(40, 8))
    # gf coefficients r=0..2 up to 10
    for r in range(3):
        ser = [0] * 11
        for m in range(11):
            ser[m] = S(m, r) if m >= 2 * r + 2 else 0
        print("gf r", r, ser)
