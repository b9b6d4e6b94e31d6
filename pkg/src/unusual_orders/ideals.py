"""Ideals of a real quadratic order O_f = Z + f*omega*Z in two-generator form.

An ideal is stored as I = aZ + (b + c*f*omega)Z with c | a, c | b and
0 <= b < a; its norm |O_f / I| is a*c.  Dividing N(x*a + y*(b + c*f*omega))
by a*c gives an integral binary form of discriminant f^2 * d_K, and I is
principal exactly when that form represents +1 or -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import FieldData, SplitKind, classify_prime, field_data
from .forms import evaluate, represents


@dataclass(frozen=True)
class QuadIdeal:
    d: int
    f: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a < 1 or self.c < 1 or self.f < 1:
            raise ValueError(f"a, c, f must be positive: {self}")
        if self.a % self.c or self.b % self.c:
            raise ValueError(f"c must divide a and b: {self}")
        if not 0 <= self.b < self.a:
            object.__setattr__(self, "b", self.b % self.a)
        fd = field_data(self.d)
        a, b, c, f = self.a, self.b, self.c, self.f
        if (b * b + fd.trace * b * c * f - fd.omega_sq * c * c * f * f) % (a * c):
            raise ValueError(f"not closed under multiplication by f*omega: {self}")

    @property
    def field(self) -> FieldData:
        return field_data(self.d)

    @property
    def norm(self) -> int:
        return self.a * self.c

    @property
    def order(self):
        from .class_numbers import picard_order

        return picard_order(self.field, self.f)

    def norm_form(self) -> tuple[int, int, int]:
        """N(x*a + y*(b + c*f*omega)) / N(I) as a form (A, B, C)."""
        fd = self.field
        a, b, c, f = self.a, self.b, self.c, self.f
        return (
            a // c,
            (2 * b + fd.trace * c * f) // c,
            (b * b + fd.trace * b * c * f - fd.omega_sq * c * c * f * f) // (a * c),
        )

    def is_invertible(self) -> bool:
        A, B, C = self.norm_form()
        return math.gcd(math.gcd(A, B), C) == 1

    def element(self, x: int, y: int) -> tuple[int, int]:
        """x*a + y*(b + c*f*omega) in omega-coordinates (X, Y) of O_K."""
        return x * self.a + y * self.b, y * self.c * self.f


def unit_ideal(d: int, f: int) -> QuadIdeal:
    return QuadIdeal(d, f, 1, 0, 1)


def scalar_ideal(d: int, f: int, n: int) -> QuadIdeal:
    """n * O_f = nZ + n*f*omega*Z."""
    return QuadIdeal(d, f, n, 0, n)


def ideal_norm(ideal: QuadIdeal) -> int:
    return ideal.norm


def contains(ideal: QuadIdeal, X: int, Y: int) -> bool:
    """Whether X + Y*omega lies in the ideal."""
    cf = ideal.c * ideal.f
    if Y % cf:
        return False
    y = Y // cf
    return (X - y * ideal.b) % ideal.a == 0


def atoms_norm_p3(fd: FieldData, f: int, p: int) -> list[QuadIdeal]:
    """Atoms of norm p^3 among the p-primary invertible ideals of O_f.

    Odd p: p^3 Z + (p^2 k + (p^2 beta + f sqrt(d_K))/2) Z for k in [0, p-1].
    p = 2: 8Z + (2k + f sqrt(d)) Z for k in [0, 3] with k = d (mod 2).
    """
    if classify_prime(fd, p).kind is not SplitKind.RAMIFIED:
        raise ValueError(f"{p} is not ramified in Q(sqrt({fd.d}))")
    if f % p or f % (p * p) == 0:
        raise ValueError(f"need p || f, got p={p}, f={f}")
    if p == 2:
        # 2 ramified means d_K = 4d and f*sqrt(d) = f*omega
        return [QuadIdeal(fd.d, f, 8, 2 * k, 1) for k in range(4) if (k - fd.d) % 2 == 0]
    beta = (f * fd.d_K) % 2
    if fd.trace:
        # f*sqrt(d) = 2f*omega - f
        shift = (p * p * beta - f) // 2
    else:
        # f*sqrt(d_K)/2 = f*omega and beta = 0
        shift = 0
    return [QuadIdeal(fd.d, f, p**3, p * p * k + shift, 1) for k in range(p)]


def find_generator(ideal: QuadIdeal) -> tuple[int, int] | None:
    """alpha = X + Y*omega with ideal = alpha*O_f, or None if the ideal is not principal."""
    if not ideal.is_invertible():
        raise ValueError(f"{ideal} is not invertible")
    form = ideal.norm_form()
    for n in (1, -1):
        w = represents(form, n, witness=True)
        if w is not None:
            X, Y = ideal.element(*w)
            fd = ideal.field
            assert abs(fd.norm(X, Y)) == ideal.norm and evaluate(form, *w) == n
            return X, Y
    return None


def is_principal(ideal: QuadIdeal) -> bool:
    return find_generator(ideal) is not None
