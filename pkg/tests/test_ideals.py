import math

import pytest

from unusual_orders.arith import SplitKind, classify_prime, field_data, is_squarefree, squarefree_upto
from unusual_orders.class_numbers import unit_index
from unusual_orders.contfrac import fundamental_unit, power_coords
from unusual_orders.diophantine import solvable_scaled
from unusual_orders.ideals import (
    QuadIdeal,
    atoms_norm_p3,
    contains,
    find_generator,
    ideal_norm,
    is_principal,
    scalar_ideal,
    unit_ideal,
)


class TooLarge(Exception):
    pass


def brute_generator(ideal, max_y=200_000):
    """Search generators in a fundamental domain for the units of O_f.

    alpha = (X2 + Y2 sqrt d)/2 can be moved by a unit of O_f into
    sqrt(N) <= alpha < sqrt(N) * eta, where |Y2| sqrt(d) <= sqrt(N) (eta + 1).
    """
    fd = ideal.field
    eps = fundamental_unit(fd)
    k = unit_index(fd, ideal.f)
    x, y = power_coords(fd, (eps.u, eps.v), k)
    if y > 10**9:
        raise TooLarge
    eta = (2 * x + fd.trace * y + (y if fd.trace else 2 * y) * math.sqrt(fd.d)) / 2
    N = ideal.norm
    ymax = int(math.sqrt(N) * (eta + 1) / math.sqrt(fd.d)) + 2
    if ymax > max_y:
        raise TooLarge
    for Y in range(0, ymax + 1):
        # alpha = X + Y*omega; |N(alpha)| = N fixes X up to two choices
        disc_plus = [(fd.trace * Y) ** 2 + 4 * (fd.omega_sq * Y * Y + s * N) for s in (1, -1)]
        for D in disc_plus:
            if D < 0:
                continue
            r = math.isqrt(D)
            if r * r != D:
                continue
            for X2 in (-fd.trace * Y + r, -fd.trace * Y - r):
                if X2 % 2 == 0 and contains(ideal, X2 // 2, Y):
                    return X2 // 2, Y
    return None


def test_atoms_examples():
    atoms = atoms_norm_p3(field_data(10), 2, 2)
    assert {(I.a, I.b, I.c) for I in atoms} == {(8, 0, 1), (8, 4, 1)}
    atoms = atoms_norm_p3(field_data(15), 3, 3)
    assert {(I.a, I.b, I.c) for I in atoms} == {(27, 0, 1), (27, 9, 1), (27, 18, 1)}
    for d, f, p in ((105, 5, 5), (85, 85, 17), (365, 2190, 73), (15, 3, 3)):
        atoms = atoms_norm_p3(field_data(d), f, p)
        assert len(atoms) == p and all(ideal_norm(I) == p**3 for I in atoms)


def test_atoms_errors():
    with pytest.raises(ValueError):
        atoms_norm_p3(field_data(15), 7, 7)  # 7 splits
    with pytest.raises(ValueError):
        atoms_norm_p3(field_data(15), 9, 3)  # 9 | f
    with pytest.raises(ValueError):
        QuadIdeal(10, 2, 8, 2, 1)  # not closed under f*omega


def test_norms():
    assert ideal_norm(unit_ideal(10, 2)) == 1
    for p in (2, 3, 7):
        assert ideal_norm(scalar_ideal(10, 2, p)) == p * p
    assert ideal_norm(QuadIdeal(10, 2, 8, 0, 1)) == 8


def test_principal_examples():
    assert is_principal(scalar_ideal(10, 2, 3))
    I = QuadIdeal(10, 2, 8, 0, 1)
    assert not is_principal(I)
    assert brute_generator(I) is None
    atoms = atoms_norm_p3(field_data(105), 5, 5)
    gens = [find_generator(A) for A in atoms]
    assert any(g is not None for g in gens)
    fd = field_data(105)
    for A, g in zip(atoms, gens):
        if g is not None:
            assert abs(fd.norm(*g)) == A.norm and contains(A, *g)


def test_principal_agrees_with_fundamental_domain_search():
    checked = 0
    for d in (10, 15, 42, 65, 85, 105, 165, 185, 230, 330):
        fd = field_data(d)
        for p in fd.ramified:
            for f in (p, 2 * p, 3 * p):
                if f % (p * p) == 0 or not is_squarefree(f):
                    continue
                for A in atoms_norm_p3(fd, f, p):
                    try:
                        brute = brute_generator(A)
                    except TooLarge:
                        continue
                    assert is_principal(A) == (brute is not None), (d, f, p, A)
                    checked += 1
    assert checked >= 50


def test_atoms_lie_over_p():
    for d in (10, 15, 85, 105, 365):
        fd = field_data(d)
        for p in fd.ramified:
            f = p * (3 if p != 3 and classify_prime(fd, 3).kind is not SplitKind.SPLIT else 1)
            fw3 = power_coords(fd, (0, f), 3)
            for A in atoms_norm_p3(fd, f, p):
                assert contains(A, p**3, 0)
                assert contains(A, *fw3)
                assert contains(A, A.a, 0) and contains(A, A.b, A.c * A.f)


def test_bridge_to_scaled_equations():
    for d in squarefree_upto(500):
        fd = field_data(d)
        for f in range(2, 31):
            if not is_squarefree(f):
                continue
            for p in fd.ramified:
                if f % p:
                    continue
                atoms = atoms_norm_p3(fd, f, p)
                solvable = solvable_scaled(d, f, p)
                if p == 2:
                    assert any(is_principal(A) for A in atoms) == solvable, (d, f)
                else:
                    assert is_principal(atoms[0]) == solvable, (d, f, p)
