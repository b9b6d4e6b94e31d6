"""Indefinite binary quadratic forms a*x^2 + b*x*y + c*y^2 of nonsquare discriminant.

Reduction uses the rho operator

    rho(a, b, c) = (c, s, (s^2 - D)/(4c)),   s = -b (mod 2|c|),

with s in (sqrt(D) - 2|c|, sqrt(D)) when |c| < sqrt(D) and in (-|c|, |c|]
otherwise.  A form is reduced when |sqrt(D) - 2|a|| < b < sqrt(D).  Reduced
forms fall into rho-cycles, one per proper equivalence class, so counting the
cycles of primitive reduced forms gives the narrow class number.

Transformation matrices act as F o M (x, y) = F(M (x, y)^T); rho corresponds
to [[0, -1], [1, k]] with k = (s + b)/(2c).
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from . import config

Form = tuple[int, int, int]
Matrix = tuple[int, int, int, int]  # (alpha, beta, gamma, delta) = [[alpha, beta], [gamma, delta]]

_IDENTITY: Matrix = (1, 0, 0, 1)


def discriminant(form: Form) -> int:
    a, b, c = form
    return b * b - 4 * a * c


def _isqrt_nonsquare(D: int) -> int:
    R = math.isqrt(D)
    if D <= 0 or R * R == D:
        raise ValueError(f"discriminant must be a positive nonsquare, got {D}")
    return R


def is_reduced(form: Form, D: int | None = None) -> bool:
    a, b, c = form
    if D is None:
        D = discriminant(form)
    R = math.isqrt(D)
    return 0 < b <= R and 2 * abs(a) + b > R and 2 * abs(a) - b <= R


def evaluate(form: Form, x: int, y: int) -> int:
    a, b, c = form
    return a * x * x + b * x * y + c * y * y


def _mat_mul(m: Matrix, n: Matrix) -> Matrix:
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _mat_inv(m: Matrix) -> Matrix:
    a, b, c, d = m
    return (d, -b, -c, a)


def rho(form: Form, D: int, R: int) -> tuple[Form, int]:
    """One rho step; returns the new form and the k of its matrix."""
    a, b, c = form
    two_c = 2 * abs(c)
    if abs(c) <= R:  # |c| < sqrt(D) since D is not a square
        s = R - (R + b) % two_c
    else:
        s = (-b) % two_c
        if s > abs(c):
            s -= two_c
    k = (s + b) // (2 * c)
    return (c, s, (s * s - D) // (4 * c)), k


def reduce_form(form: Form, track: bool = False, budget: int | None = None) -> tuple[Form, Matrix | None]:
    """Apply rho until the form is reduced; optionally return the matrix M with F o M = result."""
    D = discriminant(form)
    R = _isqrt_nonsquare(D)
    budget = budget or config.STEP_BUDGET
    M = _IDENTITY if track else None
    steps = 0
    while not is_reduced(form, D):
        form, k = rho(form, D, R)
        if track:
            M = _mat_mul(M, (0, -1, 1, k))
        steps += 1
        if steps > budget:
            raise config.BudgetExceeded(f"reduction of {form} exceeds {budget} steps")
    return form, M


def cycle(form: Form, track: bool = False, budget: int | None = None) -> list[tuple[Form, Matrix | None]]:
    """The rho-cycle of a reduced form, starting with the form itself.

    With ``track`` each entry carries M such that form o M = entry.
    """
    D = discriminant(form)
    R = _isqrt_nonsquare(D)
    budget = budget or config.STEP_BUDGET
    start = form
    M = _IDENTITY if track else None
    out = [(form, M)]
    while True:
        form, k = rho(form, D, R)
        if form == start:
            return out
        if track:
            M = _mat_mul(M, (0, -1, 1, k))
        out.append((form, M))
        if len(out) > budget:
            raise config.BudgetExceeded(f"cycle of {start} exceeds {budget} forms")


def reduced_forms(D: int, primitive_only: bool = True) -> list[Form]:
    """All reduced forms of discriminant D (vectorised over |a| for each b)."""
    R = _isqrt_nonsquare(D)
    if D % 4 not in (0, 1):
        raise ValueError(f"{D} is not a discriminant")
    out: list[Form] = []
    for b in range(2 - (D % 2), R + 1, 2):
        n = (D - b * b) // 4  # = -a*c
        lo = (R - b) // 2 + 1
        hi = (R + b) // 2
        if hi < lo:
            continue
        aa = np.arange(lo, hi + 1, dtype=np.int64)
        hits = aa[n % aa == 0].tolist()
        for a in hits:
            c = n // a
            for form in ((a, b, -c), (-a, b, c)):
                if primitive_only and math.gcd(math.gcd(a, b), c) != 1:
                    continue
                out.append(form)
    return out


@lru_cache(maxsize=1024)
def cycles(D: int, primitive_only: bool = True) -> tuple[tuple[Form, ...], ...]:
    """Partition of the (primitive) reduced forms of discriminant D into rho-cycles."""
    R = _isqrt_nonsquare(D)
    remaining = set(reduced_forms(D, primitive_only))
    result = []
    for form in sorted(remaining):
        if form not in remaining:
            continue
        cyc = [form]
        remaining.discard(form)
        nxt, _ = rho(form, D, R)
        while nxt != form:
            if nxt not in remaining:
                raise RuntimeError(f"rho left the reduced set at {nxt}")
            remaining.discard(nxt)
            cyc.append(nxt)
            nxt, _ = rho(nxt, D, R)
        result.append(tuple(cyc))
    return tuple(result)


def narrow_class_number(D: int) -> int:
    """Number of proper equivalence classes of primitive forms of discriminant D."""
    return len(cycles(D))


def _content(form: Form) -> int:
    return math.gcd(math.gcd(form[0], form[1]), form[2])


def _sqrt_residues(D: int, m: int) -> list[int]:
    """beta in [0, 2|m|) with beta^2 = D (mod 4|m|)."""
    mod = 4 * abs(m)
    start = D % 2
    bb = np.arange(start, 2 * abs(m), 2, dtype=object if 4 * m * m + abs(D) > 2**62 else np.int64)
    return [int(b) for b in bb[(bb * bb - D) % mod == 0]]


class _CycleIndex:
    """Reduced cycle of a primitive form, indexed for equivalence lookups."""

    def __init__(self, form: Form, track: bool):
        red, M0 = reduce_form(form, track)
        self.track = track
        self.lookup: dict[Form, Matrix | None] = {}
        for g, M in cycle(red, track):
            self.lookup[g] = _mat_mul(M0, M) if track else None


def represents(form: Form, n: int, witness: bool = False):
    """Decide whether the form represents n (n != 0) over the integers.

    Returns a bool, or with ``witness=True`` an (x, y) with F(x, y) = n or None.
    The answer is exact: every representation is proper for some n/g^2 and a
    proper representation of m exists iff some (m, beta, *) is equivalent to F.
    """
    if n == 0:
        raise ValueError("n must be nonzero")
    g0 = _content(form)
    if n % g0:
        return None if witness else False
    prim = (form[0] // g0, form[1] // g0, form[2] // g0)
    n0 = n // g0
    D = discriminant(prim)
    _isqrt_nonsquare(D)
    index = _CycleIndex(prim, witness)
    for g in range(1, math.isqrt(abs(n0)) + 1):
        if n0 % (g * g):
            continue
        m = n0 // (g * g)
        for beta in _sqrt_residues(D, m):
            aux = (m, beta, (beta * beta - D) // (4 * m))
            red, M_aux = reduce_form(aux, witness)
            if red not in index.lookup:
                continue
            if not witness:
                return True
            # prim o M_F = red = aux o M_aux, so aux = prim o (M_F M_aux^-1)
            T = _mat_mul(index.lookup[red], _mat_inv(M_aux))
            x, y = g * T[0], g * T[2]
            assert evaluate(prim, x, y) == n0
            return x, y
    return None if witness else False
