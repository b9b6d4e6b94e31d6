"""Slow, independent reference implementations used only by the tests."""

import math

import numpy as np


def trial_factor(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime_slow(n):
    return n > 1 and trial_factor(n) == {n: 1}


def legendre_euler(a, p):
    """Legendre symbol by Euler's criterion."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def kronecker_slow(a, b):
    """Kronecker symbol from its definition via the factorization of b."""
    if b == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if b < 0:
        b = -b
        if a < 0:
            result = -1
    for p, e in trial_factor(b).items():
        if p == 2:
            if a % 2 == 0:
                s = 0
            else:
                s = 1 if a % 8 in (1, 7) else -1
        else:
            s = legendre_euler(a, p)
        result *= s**e
    return result


def quadratic_residues(p):
    return {x * x % p for x in range(1, p)}


def min_unit_brute(d, cap=10**6):
    """Smallest V >= 1 with U^2 - d V^2 = +-4 (V <= cap), as (U, V); None if beyond cap."""
    for start in range(1, cap + 1, 50_000):
        v = np.arange(start, min(start + 50_000, cap + 1), dtype=np.int64)
        dv = d * v * v
        best = None
        for s in (-4, 4):
            t = dv + s
            ok = t >= 0
            u = np.rint(np.sqrt(np.where(ok, t, 0).astype(np.float64))).astype(np.int64)
            hit = np.nonzero(ok & (u * u == t))[0]
            if len(hit):
                cand = (int(v[hit[0]]), int(u[hit[0]]))
                best = cand if best is None else min(best, cand)
        if best:
            return best[1], best[0]
    return None


def class_number_analytic(d_K, log_eps):
    """h from the finite Dirichlet formula -sum chi(a) log sin(pi a / D) / (2 log eps)."""
    a = np.arange(1, d_K)
    chi = np.array([kronecker_slow(d_K, int(x)) for x in a], dtype=np.float64)
    s = -np.sum(chi * np.log(np.sin(np.pi * a / d_K)))
    return s / (2 * log_eps)


def unit_index_naive(u, v, trace, omega_sq, f):
    """Least k with eps^k in Z + f*omega*Z by repeated multiplication mod f."""
    x, y = u % f, v % f
    k = 1
    while y % f:
        x, y = (x * u + omega_sq * y * v) % f, (x * v + y * u + trace * y * v) % f
        k += 1
    return k


def brute_abs(p, q, target=4, cap=10**4):
    for b in range(cap + 1):
        for s in (target, -target):
            r = q * b * b + s
            if r >= 0 and r % p == 0:
                a = math.isqrt(r // p)
                if a * a * p == r:
                    return a, b
    return None


def brute_abs_vec(p, q, target=4, cap=10**4):
    """Vectorised brute_abs: the smallest b <= cap with |p a^2 - q b^2| = target."""
    b = np.arange(cap + 1, dtype=np.int64)
    qb2 = q * b * b
    best = None
    for s in (target, -target):
        r = qb2 + s
        ok = (r >= 0) & (r % p == 0)
        m = np.where(ok, r // p, 0)
        a = np.floor(np.sqrt(m.astype(np.float64))).astype(np.int64)
        for fix in (-1, 0, 1):
            aa = np.maximum(a + fix, 0)
            idx = np.nonzero(ok & (aa * aa == m))[0]
            if len(idx) and (best is None or idx[0] < best[1]):
                best = (int(aa[idx[0]]), int(idx[0]))
    return best
