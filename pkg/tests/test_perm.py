import math

import pytest
from hypothesis import given, strategies as st

from hurwitz_family.errors import DegreeMismatch, DegreeTooLarge
from hurwitz_family.nielsen import ClassLabel, make_class
from hurwitz_family.perm import Permutation, compose, conjugate, cycle_type, group_order


def P(text, n):
    return Permutation.parse(text, n)


def perms(max_n=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(Permutation)
    )


def pairs(max_n=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(*[st.permutations(range(1, n + 1)).map(Permutation)] * 3)
    )


def test_compose_examples():
    assert compose(P("(1,2)", 4), P("(1,2)", 4)).is_identity()
    assert compose(P("(1,2)(3,4)", 4), P("(2,4)", 4)) == P("(1,2,3,4)", 4)
    p = P("(1,3)(2,4,5)", 5)
    assert compose(Permutation.identity(5), p) == p


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(P("(1,2)", 3), P("(1,2)", 4))


def test_cycle_type_examples():
    assert cycle_type(P("(1,2,3,4,5,6)", 6)) == (6,)
    assert cycle_type(P("(1,3)(4,6)", 6)) == (2, 2, 1, 1)
    for n in (6, 8, 10):
        assert cycle_type(Permutation.cycle(*range(1, n - 1), degree=n)) == (n - 2, 1, 1)


def test_conjugate_examples():
    p = P("(1,2,3)", 3)
    assert conjugate(p, Permutation.identity(3)) == p
    assert conjugate(p, P("(1,2)", 3)) == P("(2,1,3)", 3) == P("(1,3,2)", 3)
    for n in (6, 8):
        c = Permutation.cycle(*range(1, n - 1), degree=n)
        refl = Permutation([n - 1 - i for i in range(1, n - 1)] + [n - 1, n])
        assert conjugate(c, refl) == c.inverse()


def test_parse_and_render_roundtrip():
    p = P("(1,5,2)(3,4)", 6)
    assert str(p) == "(1,5,2)(3,4)"
    assert P(str(p), 6) == p
    assert str(Permutation.identity(4)) == "()"
    assert p.to_json() == [5, 1, 4, 3, 2, 6]
    with pytest.raises(ValueError):
        P("(1,2", 3)


def test_group_order_examples():
    info = group_order([P("(1,2)", 6), P("(1,2,3,4,5,6)", 6)])
    assert info.order == 720 and info.is_symmetric and info.is_transitive
    assert group_order([P("(1,2,3)", 3)]).order == 3
    a3 = make_class(6, ClassLabel("A", 3))
    assert group_order(list(a3)).order == 720


def test_group_order_alternating_and_jordan():
    info = group_order([P("(1,2,3)", 5), P("(1,2,3,4,5)", 5)])
    assert info.order == 60 and info.is_alternating and not info.is_symmetric
    for prime in (5, 7):
        cyc = Permutation.cycle(*range(1, prime + 1), degree=prime)
        assert group_order([cyc, P("(1,2)", prime)]).order == math.factorial(prime)


def test_group_order_degree_cap():
    with pytest.raises(DegreeTooLarge):
        group_order([Permutation.identity(25)])


@given(perms(), st.data())
def test_conjugation_preserves_cycle_type(p, data):
    g = data.draw(st.permutations(range(1, p.degree + 1)).map(Permutation))
    assert cycle_type(conjugate(p, g)) == cycle_type(p)
    assert sum(cycle_type(p)) == p.degree


@given(pairs())
def test_parity_homomorphism_and_inverse(triple):
    p, q, r = triple
    assert (p * q).parity() == p.parity() * q.parity()
    assert (p * p.inverse()).is_identity()
    assert (p * q) * r == p * (q * r)
    n_cycles = len(p.cycles(include_fixed=True))
    assert p.parity() == (-1) ** (p.degree - n_cycles)


@given(perms(7), perms(7))
def test_small_group_orders_divide_factorial(p, q):
    if p.degree != q.degree:
        return
    info = group_order([p, q])
    assert math.factorial(p.degree) % info.order == 0
