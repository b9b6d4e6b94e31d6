"""Elementary integer arithmetic for real quadratic fields.

Factorization (sieve + Miller-Rabin + Pollard rho), squarefreeness, the
Kronecker symbol, field discriminant data and the splitting type of a
rational prime in the maximal order.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import config

# ---------------------------------------------------------------------------
# prime sieve

_spf: np.ndarray | None = None


def _build_spf(limit: int) -> np.ndarray:
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            view = spf[p * p :: p]
            view[view == 0] = p
    unset = np.nonzero(spf == 0)[0]
    spf[unset] = unset
    return spf


def _sieve(n: int) -> np.ndarray | None:
    """Smallest-prime-factor table covering ``n``, or None if n is above the limit."""
    global _spf
    if n > config.SIEVE_LIMIT:
        return None
    if _spf is None or len(_spf) <= n:
        size = min(config.SIEVE_LIMIT, max(1 << 16, 1 << n.bit_length()))
        _spf = _build_spf(size)
    return _spf


def primes_up_to(n: int) -> list[int]:
    """All primes p <= n (n must not exceed the sieve limit)."""
    if n < 2:
        return []
    spf = _sieve(n)
    if spf is None:
        raise ValueError(f"{n} exceeds the sieve limit {config.SIEVE_LIMIT}")
    idx = np.arange(2, n + 1)
    return idx[spf[2 : n + 1] == idx].tolist()


# ---------------------------------------------------------------------------
# primality and factorization

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981


def _miller_rabin(n: int, bases) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test; deterministic below 3.3e24 (fixed Miller-Rabin bases)."""
    if n < 2:
        return False
    spf = _sieve(n) if n <= config.SIEVE_LIMIT else None
    if spf is not None:
        return int(spf[n]) == n
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < _MR_DETERMINISTIC_BOUND:
        return _miller_rabin(n, _MR_BASES)
    rng = random.Random(n)
    return _miller_rabin(n, _MR_BASES + tuple(rng.randrange(2, n - 1) for _ in range(20)))


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _factor_into(n: int, out: dict[int, int]) -> None:
    spf = _sieve(n) if n <= config.SIEVE_LIMIT else None
    if spf is not None:
        while n > 1:
            p = int(spf[n])
            while n % p == 0:
                n //= p
                out[p] = out.get(p, 0) + 1
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    g = _pollard_brent(n)
    _factor_into(g, out)
    _factor_into(n // g, out)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as an ordered ``{prime: exponent}`` dict.

    >>> factorize(2190)
    {2: 1, 3: 1, 5: 1, 73: 1}
    """
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            n //= p
            out[p] = out.get(p, 0) + 1
    if n > 1:
        _factor_into(n, out)
    return dict(sorted(out.items()))


def prime_divisors(n: int) -> list[int]:
    return list(factorize(n))


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    return all(e == 1 for e in factorize(n).values())


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [x * p**k for x in divs for k in range(e + 1)]
    return sorted(divs)


# ---------------------------------------------------------------------------
# Kronecker symbol

_TAB2 = (0, 1, 0, -1, 0, -1, 0, 1)


def kronecker(a: int, b: int) -> int:
    """Kronecker symbol (a/b) for arbitrary integers a, b."""
    if b == 0:
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and b % 2 == 0:
        return 0
    v = 0
    while b % 2 == 0:
        b //= 2
        v += 1
    k = 1 if v % 2 == 0 else _TAB2[a & 7]
    if b < 0:
        b = -b
        if a < 0:
            k = -k
    # b is now odd and positive: plain Jacobi symbol from here on
    a %= b
    while a:
        while a % 2 == 0:
            a //= 2
            if b & 7 in (3, 5):
                k = -k
        a, b = b, a
        if a & 3 == 3 and b & 3 == 3:
            k = -k
        a %= b
    return k if b == 1 else 0


# ---------------------------------------------------------------------------
# field data


class OmegaKind(enum.Enum):
    SQRT_D = "sqrt(d)"
    HALF_ONE_PLUS_SQRT_D = "(1+sqrt(d))/2"


class SplitKind(enum.Enum):
    INERT = "inert"
    RAMIFIED = "ramified"
    SPLIT = "split"


@dataclass(frozen=True)
class PrimeSplit:
    p: int
    kind: SplitKind


@dataclass(frozen=True)
class FieldData:
    """Invariants of Q(sqrt(d)) that everything else is built on.

    The ring of integers is Z[omega].  ``trace`` and ``omega_sq`` encode the
    relation omega**2 = trace*omega + omega_sq, so that
    N(x + y*omega) = x**2 + trace*x*y - omega_sq*y**2.
    """

    d: int
    d_K: int
    omega_kind: OmegaKind
    t: int
    ramified: tuple[int, ...]

    @property
    def trace(self) -> int:
        return 1 if self.omega_kind is OmegaKind.HALF_ONE_PLUS_SQRT_D else 0

    @property
    def omega_sq(self) -> int:
        return (self.d - 1) // 4 if self.trace else self.d

    def norm(self, x: int, y: int) -> int:
        """Norm of x + y*omega."""
        return x * x + self.trace * x * y - self.omega_sq * y * y

    def chi(self, p: int) -> int:
        """Kronecker symbol (d_K / p)."""
        return kronecker(self.d_K, p)


@lru_cache(maxsize=1 << 16)
def field_data(d: int) -> FieldData:
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    fac = factorize(d)
    if any(e > 1 for e in fac.values()):
        raise ValueError(f"d = {d} is not squarefree")
    if d % 4 == 1:
        kind, d_K = OmegaKind.HALF_ONE_PLUS_SQRT_D, d
    else:
        kind, d_K = OmegaKind.SQRT_D, 4 * d
    ramified = tuple(sorted(set(fac) | ({2} if d_K % 2 == 0 else set())))
    return FieldData(d=d, d_K=d_K, omega_kind=kind, t=len(ramified), ramified=ramified)


def classify_prime(fd: FieldData, p: int) -> PrimeSplit:
    chi = kronecker(fd.d_K, p)
    kind = {-1: SplitKind.INERT, 0: SplitKind.RAMIFIED, 1: SplitKind.SPLIT}[chi]
    return PrimeSplit(p, kind)


def squarefree_upto(n: int, start: int = 2) -> list[int]:
    """Squarefree integers in [start, n], via a square sieve."""
    if n < start:
        return []
    flags = np.ones(n + 1, dtype=bool)
    flags[:start] = False
    for p in primes_up_to(math.isqrt(n)):
        flags[p * p :: p * p] = False
    return np.nonzero(flags)[0].tolist()
