import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from hurwitz_family.errors import (
    BadReductionPrime,
    DimensionMismatch,
    DivisionByZeroPoly,
    NonUnitInverse,
    NoSolution,
    Underdetermined,
    ZeroPolynomial,
)
from hurwitz_family.exact import (
    INF,
    Poly,
    Q,
    RationalFunction,
    TruncatedSeries,
    chebyshev_T,
    eval_poly_at_series,
    linear_solve_exact,
    modp_factor_degrees,
    sturm_count,
    to_str,
)
from hurwitz_family.exact.linalg import mat_vec

X = Poly.gen("X")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12).map(Q)
small_polys = st.lists(rationals, max_size=6).map(lambda cs: Poly(cs, "X"))
nonzero_polys = small_polys.filter(lambda p: not p.is_zero())


def test_rational_canonical_form():
    q = Q(6, -4)
    assert (q.numerator, q.denominator) == (-3, 2)
    assert to_str(Q(0)) == "0" and to_str(Q("10/4")) == "5/2"
    assert Q(Fraction(3, 9)) == Q(1, 3)
    with pytest.raises(TypeError):
        Q(0.5)


def test_divrem_initial_delta_example():
    p = Poly([-10, 24, -15, 0, 0, 0, 1])
    q, r = p.divmod((X - 1) ** 3)
    assert q == Poly([10, 6, 3, 1]) and r.is_zero()


def test_gcd_eval_and_errors():
    assert (X ** 2 - 1).gcd(X - 1) == X - 1
    assert ((X - 1) ** 3)(1) == 0
    with pytest.raises(DivisionByZeroPoly):
        X.divmod(Poly([]))
    assert Poly([]).degree == -1


def test_compose_and_derivative():
    p = X ** 3 + 2 * X
    assert p.compose(X + 1) == (X + 1) ** 3 + 2 * (X + 1)
    assert p.derivative() == 3 * X ** 2 + 2


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly([])


@given(small_polys, nonzero_polys)
def test_divrem_exact(p, d):
    q, r = p.divmod(d)
    assert q * d + r == p
    assert r.degree < d.degree


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_and_is_monic(a, b):
    g = a.gcd(b)
    assert g.leading == 1
    assert a.divmod(g)[1].is_zero() and b.divmod(g)[1].is_zero()


def test_chebyshev_examples():
    u = Poly.gen("u")
    assert chebyshev_T(2) == 2 * u ** 2 - 1
    assert chebyshev_T(6) == 32 * u ** 6 - 48 * u ** 4 + 18 * u ** 2 - 1
    for n in range(21):
        t = chebyshev_T(n)
        assert t(1) == 1
        assert t.degree == n
        if n:
            assert t.leading == 2 ** (n - 1)


def test_chebyshev_cosine_identity():
    t = chebyshev_T(11)
    coeffs = [float(c) for c in t.coeffs]
    for k in range(20):
        th = 0.157 * k + 0.01
        val = sum(c * math.cos(th) ** i for i, c in enumerate(coeffs))
        assert abs(val - math.cos(11 * th)) < 1e-12


def test_series_examples():
    mu = TruncatedSeries.gen(4)
    inv = (1 - mu).invert()
    assert inv.coeffs == tuple(Q(1) for _ in range(4))
    m3 = TruncatedSeries.gen(3)
    assert (m3 * m3).coeffs == (0, 0, 1)
    outer = TruncatedSeries([1, 2, 1], 6)  # (1 + mu)^2
    inner = TruncatedSeries([0, 1, 1], 6)  # mu + mu^2
    assert outer.compose(inner).coeffs == (1, 2, 3, 2, 1, 0)
    with pytest.raises(NonUnitInverse):
        mu.invert()


def test_series_precision_propagates_and_json():
    a = TruncatedSeries([1, 2, 3], 5)
    b = TruncatedSeries([1, 1], 3)
    assert (a * b).precision == 3 and (a + b).precision == 3
    assert TruncatedSeries.from_json(a.to_json()) == a
    assert a.to_json() == {"precision": 5, "coefficients": ["1", "2", "3", "0", "0"]}


@settings(max_examples=40)
@given(small_polys, small_polys, st.integers(1, 8))
def test_series_is_quotient_of_polys(p, q, n):
    def trunc(poly):
        return TruncatedSeries(poly.coeffs[:n], n)

    assert trunc(p * q) == trunc(p) * trunc(q)
    assert trunc(p + q) == trunc(p) + trunc(q)
    x = TruncatedSeries([0, 1, 2], n)
    assert eval_poly_at_series(p, x) == trunc(p.compose(Poly([0, 1, 2])))


@given(st.lists(rationals, min_size=1, max_size=6).filter(lambda c: c[0] != 0))
def test_series_inverse_roundtrip(cs):
    s = TruncatedSeries(cs, 7)
    assert s * s.invert() == TruncatedSeries.const(1, 7)


def test_linear_solve_examples():
    assert linear_solve_exact([[1, 0], [0, 1]], [3, Q(-1, 2)]) == [3, Q(-1, 2)]
    assert linear_solve_exact([[2, 0], [0, 3]], [1, 1]) == [Q(1, 2), Q(1, 3)]
    with pytest.raises(NoSolution) as exc:
        linear_solve_exact([[1, 1], [1, 1]], [1, 2])
    y = exc.value.certificate
    assert y is not None and y[0] + y[1] == 0 and y[0] + 2 * y[1] != 0
    with pytest.raises(Underdetermined) as exc:
        linear_solve_exact([[1, 1], [2, 2]], [1, 2])
    assert len(exc.value.kernel) == 1
    with pytest.raises(DimensionMismatch):
        linear_solve_exact([[1, 2]], [1, 2])


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(rationals, min_size=n, max_size=n))))
def test_linear_solve_roundtrip(data):
    A, x = data
    b = mat_vec(A, x)
    try:
        assert linear_solve_exact(A, b) == x
    except Underdetermined:
        pass  # singular A; only nonsingular systems have a unique answer


def test_sturm_examples():
    assert sturm_count(X ** 2 - 2) == 2
    assert sturm_count(X ** 2 + 1) == 0
    assert sturm_count((X - 1) ** 3 * (X + 2)) == 2
    assert sturm_count(X ** 2 - 2, 0, 2) == 1
    assert sturm_count(X - 1, 1, 2) == 0  # half-open (a, b]
    assert sturm_count(X - 1, 0, 1) == 1
    assert sturm_count(X ** 3, -INF, INF) == 1
    with pytest.raises(ZeroPolynomial):
        sturm_count(Poly([]))


@given(st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=9), min_size=1, max_size=7))
def test_sturm_counts_distinct_roots(roots):
    p = Poly.from_roots([Q(r) for r in roots])
    assert sturm_count(p) == len(set(roots))
    lo, hi = Q(-3), Q(4)
    assert sturm_count(p, lo, hi) == len({r for r in roots if lo < r <= hi})


def test_modp_examples():
    assert modp_factor_degrees(X ** 2 + 1, 3) == [2]
    assert modp_factor_degrees(X ** 2 - 1, 7) == [1, 1]
    assert modp_factor_degrees(X ** 3 - X - 1, 2) == [3]
    with pytest.raises(BadReductionPrime):
        modp_factor_degrees(3 * X ** 2 + 1, 3)
    with pytest.raises(BadReductionPrime):
        modp_factor_degrees((X - 1) ** 2 * (X + 1), 5)


@settings(max_examples=30)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=6, unique=True))
def test_modp_split_polys(roots):
    p = Poly.from_roots(roots)
    assert modp_factor_degrees(p, 7) == [1] * len(roots)


def test_rational_functions():
    T = RationalFunction.gen("T")
    f = (T ** 2 - 1) / (T - 1)
    assert f == T + 1 and f.den.degree == 0
    g = 1 / (2 * T + 4)
    assert g.den == Poly([2, 1], "T") and g.num == Poly([Q(1, 2)], "T")
    assert g(0) == Q(1, 4)
    with pytest.raises(ZeroDivisionError):
        g(-2)
    assert RationalFunction.from_json(g.to_json()) == g
    assert (f * g - (T + 1) / (2 * T + 4)).is_zero()
