"""Solvability of |p*a^2 - q*b^2| = T and the scaled variants used for ramified primes.

Solutions a*sqrt(p) + b*sqrt(q) are permuted by the units of Z[sqrt(pq)], and
every orbit has a member with

    b^2 <= T * (2x + 3) / (4q),

where x + y*sqrt(pq) is the fundamental unit of Z[sqrt(pq)].  When that bound
is small a direct scan decides the question; otherwise the answer comes from
the exact representation test on the form (p, 0, -q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import FieldData, SplitKind, classify_prime, field_data, is_squarefree
from .contfrac import pell_unit_capped
from .forms import evaluate, represents

SCAN_LIMIT = 10**5


@dataclass(frozen=True)
class PellQuery:
    """|p*a^2 - scale*q*b^2| = target."""

    p: int
    q: int
    target: int = 4
    scale: int = 1

    @property
    def q_eff(self) -> int:
        return self.q * self.scale


def witness_bound(query: PellQuery, cap: int = SCAN_LIMIT) -> int | None:
    """Largest b that a minimal witness can need, or None if it exceeds ``cap``."""
    p, Q, T = query.p, query.q_eff, query.target
    # b <= cap needs 2x + 3 <= 4*Q*(cap+1)^2/T, so the expansion can stop early
    unit = pell_unit_capped(p * Q, 4 * Q * (cap + 1) ** 2 // T + 1)
    if unit is None:
        return None
    x = unit[0]
    b = math.isqrt(T * (2 * x + 3) // (4 * Q))
    return b if b <= cap else None


def _scan(p: int, Q: int, T: int, hi: int) -> tuple[int, int] | None:
    """Smallest-b solution with 0 <= b <= hi, if any."""
    if hi < 0:
        return None
    if Q * (hi + 1) ** 2 + T < 2**52:  # float sqrt stays exact below 2^52
        b = np.arange(hi + 1, dtype=np.int64)
        best = None
        for s in (T, -T):
            r = Q * b * b + s
            ok = (r >= 0) & (r % p == 0)
            rr = np.where(ok, r // p, 0)
            a = np.rint(np.sqrt(rr.astype(np.float64))).astype(np.int64)
            idx = np.nonzero(ok & (a * a == rr))[0]
            if len(idx) and (best is None or idx[0] < best[1]):
                best = (int(a[idx[0]]), int(idx[0]))
        return best
    for b in range(hi + 1):
        for s in (T, -T):
            r = Q * b * b + s
            if r >= 0 and r % p == 0:
                a = math.isqrt(r // p)
                if a * a * p == r:
                    return a, b
    return None


def solvable_abs(query: PellQuery, scan_limit: int = SCAN_LIMIT) -> tuple[int, int] | None:
    """A witness (a, b) with |p*a^2 - q*b^2| = target, or None when there is none.

    Raises BudgetExceeded (never returns None) if the exact fallback runs out of steps.
    """
    p, Q, T = query.p, query.q_eff, query.target
    if p < 1 or Q < 1 or T < 1:
        raise ValueError(f"invalid query {query}")
    if math.isqrt(p * Q) ** 2 == p * Q:
        raise ValueError(f"p*q = {p * Q} must not be a square")
    bound = witness_bound(query, scan_limit)
    if bound is not None:
        return _scan(p, Q, T, bound)
    hit = _scan(p, Q, T, min(scan_limit, 2000))
    if hit is not None:
        return hit
    for n in (T, -T):
        w = represents((p, 0, -Q), n, witness=True)
        if w is not None:
            a, b = abs(w[0]), abs(w[1])
            assert abs(p * a * a - Q * b * b) == T
            return a, b
    return None


def beta_of(fd: FieldData, f: int) -> int:
    """beta in {0, 1} with f * d_K = beta (mod 2)."""
    return (f * fd.d_K) % 2


def scaled_form(fd: FieldData, f: int, p: int) -> tuple[int, int, int]:
    """Quadratic form in (a, b) whose values +-4 encode principal atoms of norm p^3."""
    if p == 2:
        return (2, 0, -(f // 2) ** 2 * (fd.d_K // 2))
    beta = beta_of(fd, f)
    S = (f // p) ** 2 * (fd.d_K // p)
    return (4 * p**3, 4 * p**2 * beta, p * beta * beta - S)


def solvable_scaled(d: int, f: int, p: int, beta: int | None = None) -> bool:
    """Whether the scaled equation for the ramified prime p | f has a solution.

    For odd p it is |p(2pa + b*beta)^2 - (f/p)^2 (d_K/p) b^2| = 4, for p = 2 it is
    |2a^2 - (f/2)^2 (d_K/2) b^2| = 4.
    """
    fd = field_data(d)
    if f % p or not is_squarefree(f):
        raise ValueError(f"need p | f with f squarefree, got p={p}, f={f}")
    if classify_prime(fd, p).kind is not SplitKind.RAMIFIED:
        raise ValueError(f"{p} is not ramified in Q(sqrt({d}))")
    if beta is not None and beta != beta_of(fd, f):
        raise ValueError(f"beta must satisfy f*d_K = beta mod 2, got {beta}")
    return scaled_witness(fd, f, p) is not None


def scaled_witness(fd: FieldData, f: int, p: int) -> tuple[int, int] | None:
    form = scaled_form(fd, f, p)
    # cheap direct scan over small (a, b) before the exact cycle test
    for b in range(0, 60):
        for a in range(-60, 61):
            if abs(evaluate(form, a, b)) == 4:
                return a, b
    for n in (4, -4):
        w = represents(form, n, witness=True)
        if w is not None:
            assert abs(evaluate(form, *w)) == 4
            return w
    return None
