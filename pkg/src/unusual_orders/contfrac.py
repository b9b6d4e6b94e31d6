"""Fundamental units of real quadratic fields via continued fractions.

omega is written as (P0 + sqrt(D))/Q0 with (P0, Q0) = (0, 1) for sqrt(d) and
(1, 2) for (1 + sqrt(d))/2.  The integer (P, Q) recurrence of its continued
fraction is periodic; the first k >= 1 with Q_k = Q0 marks the end of the
period L, and then

    eps = p_{L-1} - q_{L-1} * conj(omega),    N(eps) = (-1)**L,

where p_k/q_k are the convergents.  Only the convergents grow, so a modular
variant that keeps p_k, q_k mod m handles units of any size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import config
from .arith import FieldData, OmegaKind


@dataclass(frozen=True)
class FundamentalUnit:
    """eps = u + v*omega = (u_sqrt + v_sqrt*sqrt(d))/2."""

    u: int
    v: int
    u_sqrt: int
    v_sqrt: int
    norm: int
    period_length: int


# below this d, unit_coords_mod reduces the cached exact unit
EXACT_UNIT_LIMIT = 10**5


def _start(fd: FieldData) -> tuple[int, int]:
    return (1, 2) if fd.omega_kind is OmegaKind.HALF_ONE_PLUS_SQRT_D else (0, 1)


def _expand(D: int, P0: int, Q0: int, m: int | None, budget: int):
    """Run one period of the expansion of (P0 + sqrt(D))/Q0.

    Returns (p_{L-1}, q_{L-1}, L); convergents are reduced mod m when m is given.
    """
    R = math.isqrt(D)
    P, Q = P0, Q0
    p_prev, p = 0, 1  # p_{k-2}, p_{k-1}
    q_prev, q = 1, 0
    k = 0
    while True:
        a = (P + R) // Q
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        if m is not None:
            p %= m
            q %= m
        P = a * Q - P
        Q = (D - P * P) // Q
        k += 1
        if Q == Q0:
            return p, q, k
        if k >= budget:
            raise config.BudgetExceeded(
                f"continued fraction of ({P0}+sqrt({D}))/{Q0} exceeds {budget} steps"
            )


def period_length(fd: FieldData, budget: int | None = None) -> int:
    """Length of the period of omega's expansion (only P, Q are tracked)."""
    budget = budget or config.STEP_BUDGET
    D = fd.d
    P0, Q0 = _start(fd)
    R = math.isqrt(D)
    P, Q, k = P0, Q0, 0
    while True:
        a = (P + R) // Q
        P = a * Q - P
        Q = (D - P * P) // Q
        k += 1
        if Q == Q0:
            return k
        if k >= budget:
            raise config.BudgetExceeded(f"period of sqrt({D}) exceeds {budget} steps")


def unit_norm(fd: FieldData) -> int:
    """N(eps) in {-1, 1}, from the period parity alone."""
    return -1 if period_length(fd) % 2 else 1


@lru_cache(maxsize=4096)
def fundamental_unit(fd: FieldData, budget: int | None = None) -> FundamentalUnit:
    """Exact fundamental unit eps > 1 of O_K.

    >>> fundamental_unit(field_data(10))
    FundamentalUnit(u=3, v=1, u_sqrt=6, v_sqrt=2, norm=-1, period_length=1)
    """
    P0, Q0 = _start(fd)
    p, q, L = _expand(fd.d, P0, Q0, None, budget or config.STEP_BUDGET)
    u, v = p - fd.trace * q, q
    if fd.trace:
        u_sqrt, v_sqrt = 2 * u + v, v
    else:
        u_sqrt, v_sqrt = 2 * u, 2 * v
    return FundamentalUnit(u, v, u_sqrt, v_sqrt, -1 if L % 2 else 1, L)


def unit_coords_mod(fd: FieldData, m: int, budget: int | None = None) -> tuple[int, int, int, int]:
    """(u mod m, v mod m, N(eps), L) without building the full unit."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if fd.d <= EXACT_UNIT_LIMIT:
        # small fields: reduce the cached exact unit instead of re-running the expansion
        eps = fundamental_unit(fd)
        return eps.u % m, eps.v % m, eps.norm, eps.period_length
    P0, Q0 = _start(fd)
    p, q, L = _expand(fd.d, P0, Q0, m, budget or config.STEP_BUDGET)
    return (p - fd.trace * q) % m, q % m, -1 if L % 2 else 1, L


def mul_mod(fd: FieldData, x: tuple[int, int], y: tuple[int, int], m: int | None) -> tuple[int, int]:
    """(a + b*omega)(c + e*omega) in omega-coordinates, optionally mod m."""
    a, b = x
    c, e = y
    r0 = a * c + fd.omega_sq * b * e
    r1 = a * e + b * c + fd.trace * b * e
    if m is not None:
        return r0 % m, r1 % m
    return r0, r1


def power_coords(fd: FieldData, base: tuple[int, int], k: int, m: int | None = None) -> tuple[int, int]:
    """base**k by square-and-multiply; exact when m is None."""
    if k < 0:
        raise ValueError("negative exponent")
    tr, w = fd.trace, fd.omega_sq
    a, b = base
    x, y = 1, 0
    if m is not None:
        a, b, x = a % m, b % m, 1 % m
    while k:
        if k & 1:
            x, y = x * a + w * y * b, x * b + y * a + tr * y * b
            if m is not None:
                x, y = x % m, y % m
        k >>= 1
        if k:
            a, b = a * a + w * b * b, 2 * a * b + tr * b * b
            if m is not None:
                a, b = a % m, b % m
    return x, y


def unit_power_coords_mod(fd: FieldData, k: int, m: int) -> tuple[int, int]:
    """(u_k mod m, v_k mod m) where eps**k = u_k + v_k*omega."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    u, v, _, _ = unit_coords_mod(fd, m)
    return power_coords(fd, (u, v), k, m)


def pell_unit(D: int, budget: int | None = None) -> tuple[int, int, int]:
    """Fundamental unit x + y*sqrt(D) of Z[sqrt(D)] for nonsquare D > 1.

    Returns (x, y, norm) with x**2 - D*y**2 = norm in {-1, 1}.
    """
    if D < 2 or math.isqrt(D) ** 2 == D:
        raise ValueError(f"D must be a nonsquare > 1, got {D}")
    p, q, L = _expand(D, 0, 1, None, budget or config.STEP_BUDGET)
    return p, q, -1 if L % 2 else 1


def pell_unit_capped(D: int, cap: int) -> tuple[int, int, int] | None:
    """Like pell_unit, but give up (return None) once the x-coordinate exceeds cap."""
    if D < 2 or math.isqrt(D) ** 2 == D:
        raise ValueError(f"D must be a nonsquare > 1, got {D}")
    R = math.isqrt(D)
    P, Q = 0, 1
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    k = 0
    while True:
        a = (P + R) // Q
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        if p > cap:
            return None
        P = a * Q - P
        Q = (D - P * P) // Q
        k += 1
        if Q == 1:
            return p, q, -1 if k % 2 else 1
