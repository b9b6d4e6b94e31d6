"""Class numbers of real quadratic orders.

|Pic(O_K)| comes from counting cycles of reduced forms of discriminant d_K
(the narrow class number) and halving it when N(eps) = 1.  For an order of
conductor f,

    |Pic(O_f)| * (O_K^x : O_f^x) = |Pic(O_K)| * prod_{p^e || f} p^(e-1) * (p - chi(p)),

where chi(p) = (d_K / p).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import FieldData, factorize, kronecker
from .contfrac import power_coords, unit_coords_mod, unit_norm
from .forms import narrow_class_number


@dataclass(frozen=True)
class OrderRef:
    """The order O_f of conductor f in Q(sqrt(d))."""

    d: int
    f: int
    pic: int
    unit_index: int


@lru_cache(maxsize=1 << 16)
def class_number(fd: FieldData) -> int:
    """|Pic(O_K)| of the maximal order."""
    h_plus = narrow_class_number(fd.d_K)
    if unit_norm(fd) == -1:
        return h_plus
    return h_plus // 2


def unit_group_bound(fd: FieldData, f: int) -> int:
    """prod p^(e-1) (p - chi(p)) over p^e || f; eps raised to this power lies in O_f."""
    n = 1
    for p, e in factorize(f).items():
        n *= p ** (e - 1) * (p - kronecker(fd.d_K, p))
    return n


def _in_order(fd: FieldData, unit_mod_f: tuple[int, int], k: int, f: int) -> bool:
    return power_coords(fd, unit_mod_f, k, f)[1] == 0


def unit_index(fd: FieldData, f: int) -> int:
    """(O_K^x : O_f^x), the least k >= 1 with eps**k in Z + f*omega*Z.

    The index divides the order of eps in (O_K/fO_K)^x / (Z/fZ)^x, so it is
    found by stripping prime factors from that group order.
    """
    if f < 1:
        raise ValueError(f"conductor must be positive, got {f}")
    if f == 1:
        return 1
    u, v, _, _ = unit_coords_mod(fd, f)
    k = unit_group_bound(fd, f)
    for r in factorize(k):
        while k % r == 0 and _in_order(fd, (u, v), k // r, f):
            k //= r
    return k


def has_full_unit_index(fd: FieldData, f: int) -> bool:
    """Whether (O_K^x : O_f^x) equals unit_group_bound(fd, f), i.e. |Pic(O_f)| = |Pic(O_K)|."""
    if f == 1:
        return True
    u, v, _, _ = unit_coords_mod(fd, f)
    k = unit_group_bound(fd, f)
    return not any(_in_order(fd, (u, v), k // r, f) for r in factorize(k))


def picard_order(fd: FieldData, f: int) -> OrderRef:
    idx = unit_index(fd, f)
    num = class_number(fd) * unit_group_bound(fd, f)
    if num % idx:
        raise ArithmeticError(f"class number formula does not clear for d={fd.d}, f={f}")
    return OrderRef(fd.d, f, num // idx, idx)
