import math
import random

import pytest

from hurwitz_family.descent import (
    an_lift_report,
    an_product,
    descent_check,
    find_totally_real_classes,
    odd_positions,
)
from hurwitz_family.nielsen import ClassLabel, NielsenTuple, enumerate_sni, make_class
from hurwitz_family.perm import Permutation, group_order


def P(text, n):
    return Permutation.parse(text, n)


def test_distinguished_class_n6():
    t = NielsenTuple((P("(1,2,3,4)", 6), P("(4,5,6)", 6), P("(1,3)(4,6)", 6), P("(1,4)(2,3)(5,6)", 6)))
    assert t.product().is_identity()
    assert make_class(6, ClassLabel("A", 2)) == t
    v = descent_check(t)
    assert v.defined_over_R and v.totally_real and v.tau.is_identity()


def test_a1_not_totally_real():
    assert not descent_check(make_class(6, ClassLabel("A", 1))).totally_real


def test_non_involution_s3_fails():
    s1 = P("(1,2,3,4)", 6)
    s2 = P("(4,5,6)", 6)
    s3 = P("(1,3,5)", 6)
    s4 = (s1 * s2 * s3).inverse()
    assert not descent_check(NielsenTuple((s1, s2, s3, s4))).defined_over_R


@pytest.mark.parametrize("n", range(6, 21, 2))
def test_unique_totally_real_class(n):
    assert find_totally_real_classes(n) == [ClassLabel("A", n // 2 - 1)]


@pytest.mark.parametrize("n", [6, 8, 10])
def test_verdict_is_class_function(n):
    rng = random.Random(n)
    for _, t in enumerate_sni(n):
        v = descent_check(t)
        imgs = list(range(1, n + 1))
        rng.shuffle(imgs)
        g = Permutation(imgs)
        w = descent_check(t.conjugate_by(g))
        assert (v.defined_over_R, v.totally_real) == (w.defined_over_R, w.totally_real)
        if v.tau is not None:
            assert w.tau == v.tau.conjugate(g)
        assert not v.totally_real or v.defined_over_R


def test_an_product_n6_pattern():
    t = make_class(6, ClassLabel("A", 2))
    assert odd_positions(t) == [1, 4]
    lifted = an_product(t)
    assert all(p.degree == 12 for p in lifted)
    assert (lifted[0] * lifted[1] * lifted[2] * lifted[3]).is_identity()


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_an_lift_report(n):
    rep = an_lift_report(make_class(n, ClassLabel("A", n // 2 - 1)))
    assert len(rep.odd_positions) == 2
    assert rep.product_is_identity and rep.all_even and rep.transitive
    assert rep.order == math.factorial(n)
    assert rep.verdict.totally_real
    assert rep.to_json()["degree"] == 2 * n


@pytest.mark.parametrize("n", range(14, 21, 2))
def test_an_lift_parity_pattern_large(n):
    rep = an_lift_report(make_class(n, ClassLabel("A", n // 2 - 1)), with_order=False)
    assert len(rep.odd_positions) == 2 and rep.all_even and rep.verdict.totally_real
