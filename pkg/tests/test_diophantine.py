import math

import pytest

from unusual_orders.arith import factorize, field_data, squarefree_upto
from unusual_orders.contfrac import fundamental_unit
from unusual_orders.diophantine import (
    PellQuery,
    _scan,
    scaled_form,
    scaled_witness,
    solvable_abs,
    solvable_scaled,
    witness_bound,
)
from unusual_orders.forms import evaluate, represents

from oracles import brute_abs


def test_examples():
    assert solvable_abs(PellQuery(5, 21)) == (4, 2)
    assert solvable_abs(PellQuery(3, 20)) is None
    assert solvable_abs(PellQuery(3, 4)) is not None


def test_other_targets():
    a, b = solvable_abs(PellQuery(1, 2, target=2))
    assert abs(a * a - 2 * b * b) == 2
    assert solvable_abs(PellQuery(1, 3, target=2)) is not None  # 1 - 3 = -2
    assert solvable_abs(PellQuery(1, 5, target=2)) is None  # 2 is inert in Q(sqrt5)
    assert solvable_abs(PellQuery(3, 10, target=1)) is None  # 3a^2 = +-1 has no root mod 5
    a, b = solvable_abs(PellQuery(2, 3, target=1))
    assert abs(2 * a * a - 3 * b * b) == 1


def test_rejects_bad_queries():
    with pytest.raises(ValueError):
        solvable_abs(PellQuery(2, 8))
    with pytest.raises(ValueError):
        solvable_abs(PellQuery(0, 5))


def test_witnesses_verify_and_match_exact_decision():
    for d in squarefree_upto(2000):
        fd = field_data(d)
        for p in fd.ramified:
            q = fd.d_K // p
            w = solvable_abs(PellQuery(p, q))
            exact = represents((p, 0, -q), 4) or represents((p, 0, -q), -4)
            assert (w is not None) == exact, (d, p)
            if w is not None:
                a, b = w
                assert abs(p * a * a - q * b * b) == 4
            small = brute_abs(p, q, cap=200)
            if small is not None:
                assert w is not None


def test_witness_bound_holds():
    # whenever the bound is small, the least witness found by an unbounded scan obeys it
    for d in squarefree_upto(2000):
        fd = field_data(d)
        U = fundamental_unit(fd).u_sqrt
        for p in fd.ramified:
            q = fd.d_K // p
            bound = witness_bound(PellQuery(p, q))
            least = _scan(p, q, 4, 20000)
            if bound is not None and least is not None:
                assert least[1] <= bound, (d, p)
            # the bound ceil(sqrt((U + 2)/q)) built from eps = (U + V sqrt d)/2 holds as well
            if least is not None:
                assert least[1] <= math.isqrt((U + 2) // q) + 1, (d, p)


def test_three_prime_witness():
    # d = qrs = 1 (mod 4), three odd primes and N(eps) = 1: some prime admits a witness
    for d in squarefree_upto(10**4):
        ps = list(factorize(d))
        if len(ps) != 3 or 2 in ps or d % 4 != 1:
            continue
        fd = field_data(d)
        if fundamental_unit(fd).norm != 1:
            continue
        assert any(solvable_abs(PellQuery(p, d // p)) is not None for p in ps), d


def test_scaled_examples():
    assert solvable_scaled(15, 3, 3) is False
    assert solvable_scaled(10, 2, 2) is False
    assert solvable_scaled(105, 5, 5) is True
    with pytest.raises(ValueError):
        solvable_scaled(15, 7, 7)
    with pytest.raises(ValueError):
        solvable_scaled(15, 9, 3)
    with pytest.raises(ValueError):
        solvable_scaled(15, 3, 3, beta=1)


def test_scaled_form_is_the_expanded_equation():
    for d, f, p in ((105, 5, 5), (15, 3, 3), (85, 85, 17), (365, 2190, 73), (10, 10, 2)):
        fd = field_data(d)
        beta = (f * fd.d_K) % 2
        form = scaled_form(fd, f, p)
        for a in range(-3, 4):
            for b in range(-3, 4):
                if p == 2:
                    direct = 2 * a * a - (f // 2) ** 2 * (fd.d_K // 2) * b * b
                else:
                    direct = p * (2 * p * a + b * beta) ** 2 - (f // p) ** 2 * (fd.d_K // p) * b * b
                assert evaluate(form, a, b) == direct
        w = scaled_witness(fd, f, p)
        if w is not None:
            assert abs(evaluate(form, *w)) == 4
