#!/usr/bin/env python3
"""Regenerates the frozen reference values used by the unit tests.

Every value is computed with mpmath at 50 significant digits, independently
of the C++ implementation, and printed with 17 significant digits.
"""
import mpmath as mp

mp.mp.dps = 50


def show(label, v):
    print(f"{label:48s} {mp.nstr(v, 17)}")


def multiplier(n, delta, beta, r):
    n, delta, beta, r = map(mp.mpf, (n, delta, beta, r))
    if r == 0:
        return mp.mpf(0)
    return -r**2 * mp.hyp2f3(1, (n + 2 - beta) / 2, 2, (n + 2) / 2,
                             (n + 4 - beta) / 2, -r**2 * delta**2 / 4)


print("# zeta(k) - 1")
for k in range(2, 41):
    show(f"zeta({k})-1", mp.zeta(k) - 1)

print("# log-gamma")
for x in ["0.001", "0.1", "0.5", "0.9", "0.999", "1.001", "1.5", "1.9",
          "2.001", "2.5", "3.7", "10", "57.3", "1000"]:
    show(f"lgamma({x})", mp.loggamma(mp.mpf(float(x))))

print("# digamma")
for x in ["0.01", "0.3", "1.4616321449683622", "7.5", "1000"]:
    show(f"digamma({x})", mp.digamma(mp.mpf(float(x))))

print("# 2F3")
show("2F3(1,1;2,2,1.5;-1)", mp.hyp2f3(1, 1, 2, 2, mp.mpf(1.5), -1))
show("2F3(1,0.5;2,1.5,1.5;-30)", mp.hyp2f3(1, 0.5, 2, 1.5, 1.5, -30))

print("# multipliers")
for args in [(1, 1, 0, 1), (1, 0.1, 0, 1), (2, 1, 1, 3), (1, 1, 3.5, 1),
             (3, 2, 4, 1), (2, 0.5, 2, 5), (3, 1, 4.5, 7), (1, 2, -1, 10),
             (2, 2, 3.9, 10), (1, 2, 2, 100)]:
    show(f"m{args}", multiplier(*args))

print("# asymptotic example")
show("-4(2log10-log4+2gamma)", -4 * (2 * mp.log(10) - mp.log(4) + 2 * mp.euler))
print("# Ci-based exact multiplier n=1 beta=1 delta=1: 4(Ci(r)-gamma-log r)")
for r in [10, 100, 1000, 10000]:
    show(f"m(1,1,1,{r})", 4 * (mp.ci(r) - mp.euler - mp.log(r)))
