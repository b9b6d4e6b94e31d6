"""Deciding whether the set of distances of O_f is unusual (min Delta(O_f) > 1).

Every route shares two conditions:

(a) |Pic(O_f)| = |Pic(O_K)| = 2, and
(b) f is squarefree, divisible by a ramified prime and by no split prime,

and differs in how the ramified primes p | f are tested:

``thm44``  Kronecker symbols only (default, no search);
``thm29``  |p a^2 - (d_K/p) b^2| = 4 has no solution;
``cor28``  the scaled equations attached to atoms of norm p^3 have no solution;
``thm39``  nothing further, valid only when N(eps) = -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .arith import FieldData, SplitKind, classify_prime, divisors, factorize, kronecker, primes_up_to
from .class_numbers import class_number, has_full_unit_index
from .contfrac import unit_norm
from .diophantine import PellQuery, scaled_witness, solvable_abs

ROUTES = ("thm44", "thm29", "cor28", "thm39")

# (number of inert prime divisors, number of ramified prime divisors) that can occur
SHAPES = frozenset({(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (2, 1), (2, 2)})


class InconsistentClassification(RuntimeError):
    """D'_d has no shape from the type/form table."""


def lcm2(d: int) -> int:
    return d if d % 2 == 0 else 2 * d


def shape_ok(fd: FieldData, f: int) -> bool:
    """Condition (b): squarefree, some ramified divisor, no split divisor."""
    if f < 2:
        return False
    fac = factorize(f)
    if any(e > 1 for e in fac.values()):
        return False
    kinds = [classify_prime(fd, p).kind for p in fac]
    return SplitKind.RAMIFIED in kinds and SplitKind.SPLIT not in kinds


def pic_ok(fd: FieldData, f: int) -> bool:
    """Condition (a) for squarefree f: |Pic(O_K)| = 2 and |Pic(O_f)| = |Pic(O_K)|."""
    if class_number(fd) != 2:
        return False
    return has_full_unit_index(fd, f)


def _ramified_divisors(fd: FieldData, f: int) -> list[int]:
    return [p for p in fd.ramified if f % p == 0]


@lru_cache(maxsize=None)
def kronecker_condition(fd: FieldData, p: int) -> bool:
    """Symbol test for one ramified p: holds for both alpha = 1 and alpha = -1."""
    odd_ramified = [q for q in fd.ramified if q % 2]
    for alpha in (1, -1):
        if p % 2 and kronecker(alpha * (fd.d // p), p) == -1:
            continue
        if any(kronecker(-alpha * p, q) == -1 for q in odd_ramified):
            continue
        return False
    return True


def is_unusual(fd: FieldData, f: int, route: str = "thm44") -> bool:
    """min Delta(O_f) > 1, decided by the chosen route."""
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}; choose from {ROUTES}")
    if route == "thm39" and unit_norm(fd) != -1:
        raise ValueError(f"route thm39 needs N(eps) = -1, but d = {fd.d} has N(eps) = 1")
    if not shape_ok(fd, f):
        return False
    ram = _ramified_divisors(fd, f)
    if route == "thm44":
        # the symbol test is cheap, so it runs before the unit computation
        return all(kronecker_condition(fd, p) for p in ram) and pic_ok(fd, f)
    if not pic_ok(fd, f):
        return False
    if route == "thm29":
        return all(solvable_abs(PellQuery(p, fd.d_K // p)) is None for p in ram)
    if route == "cor28":
        return all(scaled_witness(fd, f, p) is None for p in ram)
    return True


def is_unusual_thm29(fd: FieldData, f: int) -> bool:
    return is_unusual(fd, f, "thm29")


def is_unusual_cor28(fd: FieldData, f: int) -> bool:
    return is_unusual(fd, f, "cor28")


def is_unusual_norm_minus_one(fd: FieldData, f: int) -> bool:
    return is_unusual(fd, f, "thm39")


def reduced_unusual_conductors(fd: FieldData, route: str = "thm44") -> frozenset[int]:
    """D'_d: unusual conductors dividing lcm(2, d)."""
    if class_number(fd) != 2:
        return frozenset()
    return frozenset(f for f in divisors(lcm2(fd.d)) if is_unusual(fd, f, route))


def _squarefree_products(primes: list[int], limit: int, max_count: int | None) -> list[tuple[int, int]]:
    """(product, number of factors) for squarefree products of ``primes`` up to limit."""
    out = [(1, 0)]

    def extend(start: int, prod: int, count: int):
        for i in range(start, len(primes)):
            nxt = prod * primes[i]
            if nxt > limit:
                break
            if max_count is not None and count + 1 > max_count:
                return
            out.append((nxt, count + 1))
            extend(i + 1, nxt, count + 1)

    extend(0, 1, 0)
    return out


def candidate_conductors(fd: FieldData, bound: int, prune: bool = True) -> list[int]:
    """Squarefree split-free f <= bound with a ramified factor.

    With ``prune`` the inert part is restricted to {1, 2, p, 2p} (p an odd inert
    prime) and the (inert, ramified) factor counts to the admissible shapes.
    """
    ram = [p for p in fd.ramified if p <= bound]
    ram_parts = [(r, k) for r, k in _squarefree_products(ram, bound, None) if k > 0]
    if not ram_parts:
        return []
    limit = bound // min(r for r, _ in ram_parts)
    inert = [p for p in primes_up_to(limit) if kronecker(fd.d_K, p) == -1]
    if prune:
        inert_parts = [(1, 0)]
        two = 2 in inert
        for p in inert:
            if p == 2:
                inert_parts.append((2, 1))
                continue
            inert_parts.append((p, 1))
            if two and 2 * p <= limit:
                inert_parts.append((2 * p, 2))
    else:
        inert_parts = _squarefree_products(inert, limit, None)
    out = set()
    for r, kr in ram_parts:
        for i, ki in inert_parts:
            if r * i > bound:
                continue
            if prune and (ki, kr) not in SHAPES:
                continue
            out.add(r * i)
    return sorted(out)


def unusual_conductors(fd: FieldData, bound: int, route: str = "thm44", prune: bool = True) -> frozenset[int]:
    """D_d intersected with [1, bound]."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if class_number(fd) != 2:
        return frozenset()
    return frozenset(f for f in candidate_conductors(fd, bound, prune) if is_unusual(fd, f, route))


# ---------------------------------------------------------------------------
# type / form classification


def _F(*parts) -> frozenset[int]:
    """Build F_{...}: each part is (prime, primed); products of subsets, plus 2x for primed letters."""
    primes = [p for p, _ in parts]
    out = set()
    for k in range(1, len(primes) + 1):
        for sub in combinations(primes, k):
            out.add(math.prod(sub))
    # a primed letter a' adds 2a, and 2ab when every letter is primed
    for p, primed in parts:
        if primed:
            out.add(2 * p)
    if len(parts) > 1 and all(primed for _, primed in parts):
        out.add(2 * math.prod(primes))
    return frozenset(out)


def _forms_for(type_: int, p: int, q: int | None = None, r: int | None = None) -> list[frozenset[int]]:
    P, Q, R = (p, False), (q, False), (r, False)
    Pp, Qp, Rp = (p, True), (q, True), (r, True)
    two = (2, False)
    if type_ == 1:
        return [_F(two), _F(two, P)]
    if type_ in (2, 5):
        return [_F(P), _F(Q), _F(P, Q)]
    if type_ == 3:
        return [_F(P), _F(Q), _F(Pp), _F(Qp), _F(P, Q), _F(Pp, Qp)]
    if type_ == 4:
        return [_F(two), _F(P), _F(Q), _F(two, P), _F(two, Q), _F(P, Q), _F(two, P, Q)]
    if type_ == 6:
        return [_F(P), _F(Q), _F(R), _F(P, Q), _F(P, R), _F(Q, R)]
    if type_ == 7:
        return [
            _F(P), _F(Q), _F(R), _F(Pp), _F(Qp), _F(Rp),
            _F(P, Q), _F(Pp, Q), _F(Pp, Qp), _F(P, R), _F(Pp, Rp), _F(Q, R), _F(Q, Rp), _F(Qp, Rp),
        ]
    raise ValueError(type_)


def prime_shape(d: int) -> tuple[int, tuple[int, ...]] | None:
    """(type, primes named p, q, r in the type's convention) for d, or None."""
    fac = factorize(d)
    odd = sorted(p for p in fac if p % 2)
    even = 2 in fac
    ones = [p for p in odd if p % 4 == 1]
    threes = [p for p in odd if p % 4 == 3]
    if even and len(odd) == 1 and ones:
        return 1, (odd[0],)
    if even and len(odd) == 2:
        return 5, tuple(odd)
    if not even and len(odd) == 2 and len(ones) == 2:
        return (2 if d % 8 == 1 else 3), tuple(odd)
    if not even and len(ones) == 1 and len(threes) == 1:
        return 4, (ones[0], threes[0])
    if not even and len(ones) == 1 and len(threes) == 2:
        return (6 if d % 8 == 1 else 7), (ones[0], threes[0], threes[1])
    return None


def type_form(fd: FieldData, reduced: frozenset[int] | None = None) -> tuple[int, int] | None:
    """(type, form) of d, or None when D_d is empty."""
    if reduced is None:
        reduced = reduced_unusual_conductors(fd)
    if not reduced:
        return None
    shape = prime_shape(fd.d)
    if shape is None:
        raise InconsistentClassification(f"d = {fd.d} has D' = {sorted(reduced)} but no listed prime shape")
    type_, primes = shape
    for i, F in enumerate(_forms_for(type_, *primes), start=1):
        if F == reduced:
            return type_, i
    raise InconsistentClassification(f"d = {fd.d} (type {type_}) has D' = {sorted(reduced)}, no listed form")


@dataclass(frozen=True)
class ConductorReport:
    d: int
    reduced_set: frozenset[int]
    bounded_set: frozenset[int]
    bound: int
    exact: bool
    unit_norm: int
    type: int | None = None
    form: int | None = None


def default_bound(fd: FieldData) -> int:
    return lcm2(fd.d) if unit_norm(fd) == 1 else 10 * lcm2(fd.d)


def conductor_report(fd: FieldData, bound: int | None = None, route: str = "thm44") -> ConductorReport:
    if bound is None:
        bound = default_bound(fd)
    norm = unit_norm(fd)
    reduced = reduced_unusual_conductors(fd, route)
    bounded = unusual_conductors(fd, bound, route)
    tf = type_form(fd, reduced)
    return ConductorReport(
        d=fd.d,
        reduced_set=reduced,
        bounded_set=bounded,
        bound=bound,
        exact=norm == 1 and bound >= lcm2(fd.d),
        unit_norm=norm,
        type=tf[0] if tf else None,
        form=tf[1] if tf else None,
    )
