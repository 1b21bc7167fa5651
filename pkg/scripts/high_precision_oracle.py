#!/usr/bin/env python
"""Print 40-digit reference values for the frozen test constants.

Self-contained (mpmath only); rerun after changing any frozen value in
tests/ and compare by eye.
"""
import mpmath

mpmath.mp.dps = 40


def sts(r, nA, nB):
    r, nA, nB = mpmath.mpf(r), mpmath.mpf(nA), mpmath.mpf(nB)
    n = (2 * nA + 1) * mpmath.cosh(r) ** 2 + (2 * nB + 1) * mpmath.sinh(r) ** 2
    m = (2 * nB + 1) * mpmath.cosh(r) ** 2 + (2 * nA + 1) * mpmath.sinh(r) ** 2
    c = (nA + nB + 1) * mpmath.sinh(2 * r)
    return n, m, c


def f(x):
    if x == 1:
        return mpmath.mpf(0)
    return (x + 1) / 2 * mpmath.log((x + 1) / 2) - (x - 1) / 2 * mpmath.log((x - 1) / 2)


def main():
    for r, nA, nB in [("0.6", 0, 1), ("0.6", 0, 0)]:
        n, m, c = sts(r, nA, nB)
        s = mpmath.sqrt((n + m) ** 2 - 4 * c * c)
        dp, dm = (s + abs(n - m)) / 2, (s - abs(n - m)) / 2
        print(f"state r={r} nA={nA} nB={nB}")
        print("  n        ", n)
        print("  m        ", m)
        print("  c        ", c)
        print("  E_A|B    ", n - c * c / m)
        print("  E_B|A    ", m - c * c / n)
        print("  Ent_PPT  ", (n * m - c * c) ** 2 + 1 - (n * n + m * m + 2 * c * c))
        print("  Duan     ", (n + m - 2 * c) / 2)
        print("  g_sym A|B", (n - m + mpmath.sqrt((n - m) ** 2 + 4 * c * c)) / (2 * c))
        print("  D_A|B    ", f(m) - f(dp) - f(dm) + f((n + m * n - c * c) / (m + 1)))
        print("  D_B|A    ", f(n) - f(dp) - f(dm) + f((m + m * n - c * c) / (n + 1)))
        print("  d~-      ", (n + m - mpmath.sqrt((n - m) ** 2 + 4 * c * c)) / 2)
    print("thresholds")
    print("  r_ent(1,1)     ", mpmath.acosh(mpmath.sqrt(mpmath.mpf(4) / 3)))
    print("  r_steer_ba(0,1)", mpmath.acosh(mpmath.sqrt(mpmath.mpf(3) / 2)))
    print("  ln sqrt 2      ", mpmath.log(mpmath.sqrt(2)))
    print("  r: e^-2r = 0.8 ", -mpmath.log(mpmath.mpf("0.8")) / 2)
    print("  F pure r=0.6   ", 1 / (1 + mpmath.exp(mpmath.mpf("-1.2"))))


if __name__ == "__main__":
    main()
