#!/usr/bin/env python3
"""Supplementary frozen values: acceptance-range family checks, extra witnesses."""

from fractions import Fraction
from math import gcd
import numpy as np


def emit(key, value):
    print(f"[frozen] {key} = {value}")


def pentagonal_terms(limit, k=1):
    terms = []
    j = 1
    while True:
        g1 = k * j * (3 * j - 1) // 2
        g2 = k * j * (3 * j + 1) // 2
        s = -1 if j % 2 == 1 else 1
        if g1 > limit and g2 > limit:
            break
        if g1 <= limit:
            terms.append((g1, s))
        if g2 <= limit:
            terms.append((g2, s))
        j += 1
    return terms


# parity stream of a(n) = [f1 f6 f12] mod 2, to 130000
X2 = 130000
par = np.zeros(X2 + 1, dtype=np.uint8)
for g6, _ in pentagonal_terms(X2, 6) + [(0, 1)]:
    for g12, _ in pentagonal_terms(X2, 12) + [(0, 1)]:
        if g6 + g12 <= X2:
            par[g6 + g12] ^= 1
h2 = par.copy()
par = np.zeros(X2 + 1, dtype=np.uint8)
for g1, _ in pentagonal_terms(X2, 1) + [(0, 1)]:
    par[g1:] ^= h2[: X2 + 1 - g1]

emit("a_parity[0..40]", [int(v) for v in par[:41]])

# T3.1 family at k=0 over acceptance ranges (omega even for p=5 and p=7)
for p, nmax in ((5, 50), (7, 50)):
    D4 = 19 * (p ** 4 - 1) // 24
    ok = all(
        int(par[p ** 4 * n + p ** 3 * j + D4]) == 0
        for n in range(nmax + 1)
        for j in range(1, p)
    )
    emit(f"T31_p{p}_k0_n_le_{nmax}", ok)
    emit(f"T31_p{p}_D4", D4)

# T3.1 at k=1 for p=5: a(5^8 n + 5^7 j + 19(5^8-1)/24), n=0 only fits
D8 = 19 * (5 ** 8 - 1) // 24
ok = all(int(par[5 ** 7 * j + D8]) == 0 for j in range(1, 5) if 5 ** 7 * j + D8 <= X2)
emit("T31_p5_k1_n0_partial", ok)
emit("T31_p5_k1_D8", D8)

# T3.3.1 p=19, k=0: a(361 n + 285) ≡ a(n) (mod 2) when 19 ∤ n, n ≤ 100
ok = all(
    int(par[361 * n + 285]) == int(par[n])
    for n in range(101)
    if n % 19 != 0
)
emit("T331_p19_k0_n_le_100", ok)

# exact a at a handful of indices via Jacobi cube (independent of parity stream)
A_N = 1200
f33 = np.zeros(A_N + 1, dtype=object)
n = 0
while 3 * n * (n + 1) // 2 <= A_N:
    f33[3 * n * (n + 1) // 2] = (1 if n % 2 == 0 else -1) * (2 * n + 1)
    n += 1


def conv(a, b, order):
    res = np.zeros(order + 1, dtype=object)
    for i, v in enumerate(b[: order + 1]):
        if v != 0:
            res[i:] = res[i:] + v * a[: order + 1 - i]
    return res


f36 = conv(f33, f33, A_N)
f1 = np.zeros(A_N + 1, dtype=object)
f1[0] = 1
for g, s in pentagonal_terms(A_N, 1):
    f1[g] += s
a_exact = conv(f36, f1, A_N)
emit("a(95)", a_exact[95])
emit("a(494)", a_exact[494])
emit("a(1900)_parity_via_stream", int(par[1900]))

# c(16..19) exact and c(19) mod 16
CN = 20


def euler_f(k, order):
    f = np.zeros(order + 1, dtype=object)
    f[0] = 1
    for g, s in pentagonal_terms(order, k):
        f[g] += s
    return f


def series_pow(a, e, order):
    r = np.zeros(order + 1, dtype=object)
    r[0] = 1
    base = a.copy()
    while e > 0:
        if e & 1:
            r = conv(r, base, order)
        e >>= 1
        if e:
            base = conv(base, base, order)
    return r


def series_inv(a, order):
    b = np.zeros(order + 1, dtype=object)
    b[0] = 1
    nz = [(i, v) for i, v in enumerate(a[: order + 1]) if v != 0 and i > 0]
    for n in range(1, order + 1):
        s = 0
        for i, v in nz:
            if i > n:
                break
            s += v * b[n - i]
        b[n] = -s
    return b


num = conv(conv(series_pow(euler_f(2, CN), 4, CN), series_pow(euler_f(3, CN), 6, CN), CN), euler_f(4, CN), CN)
c = conv(num, series_inv(series_pow(euler_f(1, CN), 11, CN), CN), CN)
emit("c[16..19]", list(c[16:20]))
emit("c(19)_mod_16", int(c[19]) % 16)

# nu for t=19 tuple and the toy tuple, r' = e1
def index_gamma0(N):
    idx = N
    for p in range(2, N + 1):
        if N % p == 0 and all(p % q for q in range(2, p)):
            idx = idx * (p + 1) // p
    return idx


def nu(m, N, r, rp, t_min):
    sum_r = sum(r.values())
    sum_dr = sum(d * v for d, v in r.items())
    sum_rp = sum(rp.values())
    sum_drp = sum(d * v for d, v in rp.items())
    return Fraction(1, 24) * (
        (sum_r + sum_rp) * index_gamma0(N) - sum_drp - Fraction(sum_dr, m)
    ) - Fraction(t_min, m)


r_main = {1: 5, 2: -4, 3: 6, 4: 1, 6: 0, 12: 0}
v = nu(25, 60, r_main, {1: 1}, 19)
emit("nu_t19_rp_e1", f"{v} floor {v.numerator // v.denominator}")
v = nu(2, 4, {1: 4}, {1: 1}, 0)
emit("nu_toy_rp_e1", f"{v} floor {v.numerator // v.denominator}")

# P(0) for the toy tuple (m=2, sum_dr=4)
sq48 = sorted({u * u % 48 for u in range(1, 48) if gcd(u, 48) == 1})
P0 = sorted({(0 * s + (s - 1) // 24 * 4) % 2 for s in sq48})
emit("squares_mod_48", sq48)
emit("P_toy(0)", P0)

# ped(9n+7) for n in 0..9 (criterion-2 cross-check heads)
PN = 100
ped = [0] * (PN + 1)
ped[0] = 1
for part in range(1, PN + 1):
    if part % 4 == 0:
        continue
    for vv in range(part, PN + 1):
        ped[vv] += ped[vv - part]
emit("ped_9n_plus_7_n0..10", [ped[9 * n + 7] for n in range(11)])
