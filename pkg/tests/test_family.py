import pytest

from hurwitz_family.errors import GeneratorDegenerate, IdentityFailed, SingularJacobian
from hurwitz_family.exact import Poly, Q, RationalFunction, TruncatedSeries
from hurwitz_family.family.degenerate import (
    chebyshev_degenerate,
    initial_coefficients,
    pade_degenerate,
    pade_parameters,
    scaled_initial_values,
)
from hurwitz_family.family.newton import newton_lift, residual_order
from hurwitz_family.family.normalize import mu_parity, normalize
from hurwitz_family.family.reconstruct import local_parameter_powers, pade, reconstruct, to_local_series
from hurwitz_family.family.render import model_from_json, model_to_json, model_to_latex
from hurwitz_family.family.system import build_system, jacobian_rank_at_degenerate_point, unknown_names
from hurwitz_family.family.verify import (
    expected_lambda_patterns,
    fiber_patterns,
    identities_hold,
    match_branch_points,
    multiplicity_pattern,
    verify_model,
)
from hurwitz_family.nielsen import expected_ramification
from hurwitz_family.reference import compare_with_closed_forms, degree6_closed_forms, degree6_identity_sides

EVEN = range(6, 21, 2)
X = Poly.gen("X")
T = RationalFunction.gen("T")


# ---------------------------------------------------------------- degenerate covers


@pytest.mark.parametrize("n", EVEN)
def test_pade_contact_order(n):
    cover = pade_degenerate(n)
    Qp = cover.denominator
    assert Qp.leading == pade_parameters(n)[0]
    assert Qp(1) == 1 and Qp.derivative()(1) == n and Qp.derivative().derivative()(1) == n * (n - 1)
    diff = X ** n - Qp
    assert diff.multiplicity_at(1) == 3
    assert cover.x.num.multiplicity_at(0) == n and cover.x.den(0) != 0


def test_pade_n6_denominator():
    cover = pade_degenerate(6)
    assert cover.denominator == Poly([10, -24, 15])
    d3 = (X ** 6 - cover.denominator).derivative().derivative().derivative()
    assert d3(1) == 120


@pytest.mark.parametrize("n", EVEN)
def test_chebyshev_ramification(n):
    cover = chebyshev_degenerate(n)
    y = cover.y
    assert y.gcd(y.derivative()).degree == n // 2
    assert multiplicity_pattern(y) == [2] * (n // 2)
    assert multiplicity_pattern(y - 1) == [2] * (n // 2 - 1) + [1, 1]
    assert (y - 1)(0) == 0 and (y - 1)(1) == 0
    assert y.degree == n and y.leading == Q(2) ** (n - 1) * Q(2) ** n / 2


def test_initial_coefficients_n6():
    m = initial_coefficients(6)
    assert (m.gamma, m.beta[1], m.beta[0]) == (15, Q(-8, 5), Q(2, 3))
    assert m.delta == [10, 6, 3]
    assert all(x == 0 for x in m.alpha + m.eta) and m.lam == 0 and m.epsilon0 == 0
    r1, r2 = m.residuals()
    assert all(c == 0 for c in r1 + r2)


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_initial_residuals_vanish(n):
    r1, r2 = initial_coefficients(n).residuals()
    assert all(c == 0 for c in r1 + r2)
    assert initial_coefficients(n).delta[-1] == 3


def test_published_delta_at_degenerate_point():
    ref = degree6_closed_forms()
    th = Q(-8, 5)
    assert [ref[f"delta_{k}"](th) for k in range(3)] == [10, 6, 3]
    assert ref["beta_1"](0) == 0 and ref["lambda"](th) == 0


def test_scaled_initial_values_n6():
    v = scaled_initial_values(6)
    assert v["a"] == [Q(-1, 32), Q(9, 16), Q(-3, 2)]
    assert v["e"] == [Q(3, 16), -1]
    assert v["ell"] == Q(1, 10240)


# ---------------------------------------------------------------- system


@pytest.mark.parametrize("n", [6, 8, 12])
def test_system_is_square(n):
    for scaled in (False, True):
        s = build_system(n, scaled)
        assert len(s.equations) == 2 * n == len(s.unknowns)
    assert len(unknown_names(n)) == 2 * n


def test_system_vanishes_at_degenerate_point():
    for n in (6, 8):
        for scaled in (False, True):
            s = build_system(n, scaled)
            assert all(r == 0 for r in s.residuals_at(s.initial_point()))


def test_leading_subcoefficient_equation():
    s = build_system(6)
    assert str(s.equations[5]) == "2*alpha_2 - delta_2 + 3"


@pytest.mark.parametrize("n,expected", [(6, 10), (8, 13), (10, 16), (12, 19)])
def test_jacobian_ranks(n, expected):
    rk, kernel = jacobian_rank_at_degenerate_point(n, scaled=False)
    assert rk == expected and len(kernel) == 2 * n - expected
    rk, kernel = jacobian_rank_at_degenerate_point(n, scaled=True)
    assert rk == 2 * n and not kernel


def test_singular_jacobian_error_carries_kernel():
    err = SingularJacobian("x", kernel=[[1, 2]])
    assert err.kernel == [[1, 2]]


# ---------------------------------------------------------------- Newton


def test_newton_low_precision_n6():
    st = newton_lift(6, 4)
    assert st.model.lam.valuation() is None  # lambda = 0 mod mu^4
    assert st.model.epsilon0 == TruncatedSeries.gen(4)


@pytest.fixture(scope="module")
def lifted6():
    return newton_lift(6, 64)


def test_newton_n6_certified(lifted6):
    st = lifted6
    assert st.certified_orders == [1, 2, 4, 8, 16, 32, 64]
    assert all(b >= min(2 * a, 64) for a, b in zip(st.certified_orders, st.certified_orders[1:]))
    assert residual_order(st.model) >= 64
    assert st.lambda_valuation() == 6
    assert st.model.epsilon0.coeffs == tuple([0, 1] + [0] * 62)
    data = st.to_json()
    assert data["lambda_valuation"] == 6 and data["coefficients"]["epsilon_0"]["precision"] == 64


def test_newton_rational_coefficients(lifted6):
    from hurwitz_family.exact import Rational

    assert all(isinstance(c, Rational) for c in lifted6.model.gamma.coeffs)


# ---------------------------------------------------------------- normalize


def test_normalize_n6(lifted6):
    rep = normalize(lifted6)
    m = rep.model
    assert m.alpha[2].valuation() is None
    assert rep.residual_order >= 64
    s1 = m.s1()
    # (X - 1)^3 survives the substitution
    assert s1[0] + s1[1] + s1[2] + s1[3] + s1[4] + s1[5] + s1[6] == 0
    assert rep.parity == 1
    assert mu_parity([TruncatedSeries([1, 0, 3, 0, 5], 5)]) == 2


# ---------------------------------------------------------------- reconstruct


def test_pade_recovers_rational_series():
    # 1 / (1 - 2s + s^2) = sum (k+1) 2^? ... use an explicit rational function
    num, den = Poly([1, 3], "s"), Poly([1, -2, 5], "s")
    f = [Q(0)] * 40
    inv = TruncatedSeries(den.coeffs, 40).invert()
    series = TruncatedSeries(num.coeffs, 40) * inv
    f = list(series.coeffs)
    p, q = pade(f)
    assert p == num and q == den
    assert pade(f[:10]) is None


def test_local_parameter_and_degenerate_generator():
    gen = TruncatedSeries([5, 0, 2, 1], 6)
    t_h, v, powers = local_parameter_powers(gen)
    assert t_h == 5 and v == 2 and len(powers) == 3
    assert to_local_series(TruncatedSeries([0, 1], 6), v, powers) is None
    with pytest.raises(GeneratorDegenerate):
        local_parameter_powers(TruncatedSeries([3], 6))


def test_reconstruct_n6_matches_closed_forms(pipeline):
    res = pipeline(6)
    assert res.reconstruction.generator == "beta_1"
    assert res.reconstruction.t_h == Q(-8, 5)
    cmp = compare_with_closed_forms(res.model)
    assert all(cmp.values()), cmp
    m = res.model
    assert m.beta[0] == (25 * T ** 3 + 120 * T ** 2 + 192 * T + 128) / (36 * T + 96)
    assert m.gamma == 3 * (25 * T + 56) ** 3 / (256 * (3 * T + 8))


def test_reconstruct_falls_back_to_another_generator(lifted6):
    m = normalize(lifted6).model
    # delta_2 is constant; beta_0 has degree 3 in T and does not generate
    out = reconstruct(m, generators=("delta_last", "beta_0"))
    assert out.generator == "alpha_1"
    assert all(identities_hold(out.model))
    with pytest.raises(GeneratorDegenerate):
        reconstruct(m, generators=("delta_last",), auto=False)


# ---------------------------------------------------------------- verify


def test_standalone_identity():
    lhs, rhs = degree6_identity_sides()
    assert lhs == rhs


def test_verify_n6(pipeline):
    v = pipeline(6).verification
    assert v.ok and v.identity_1 and v.identity_2
    assert v.patterns == {"0": [3, 2, 1], "1": [5, 1], "inf": [3, 2, 1]}
    assert v.fixed_assignment_holds
    assert v.fiber_degree == 6
    assert v.side_conditions["squarefree"]


def test_verify_detects_broken_identity(pipeline):
    m = pipeline(6).model
    values = dict(m.slots())
    values["delta_0"] = values["delta_0"] + 1
    broken = type(m).from_slots(6, values)
    assert identities_hold(broken) == (False, True)
    with pytest.raises(IdentityFailed):
        verify_model(broken)


def test_fiber_patterns_include_infinity():
    H = RationalFunction(Poly([0, 0, 1], "T"), Poly([1, 1], "T"))  # T^2 / (T + 1)
    pats = fiber_patterns(H)
    assert pats["0"] == [2] and pats["inf"] == [1, 1]


def test_branch_point_matching_n8():
    z1, z2, z3 = expected_ramification(8)
    pats = {"0": list(z1), "1": list(z2), "inf": list(z3)}
    assert match_branch_points(pats, 8) == {"0": "z_1", "1": "z_2", "inf": "z_3"}
    assert expected_lambda_patterns(8) == {"0": list(z3), "1": list(z2), "inf": list(z1)}
    assert match_branch_points({"0": [8], "1": list(z2), "inf": list(z3)}, 8) is None


def test_verify_n8(pipeline):
    res = pipeline(8)
    v = res.verification
    assert v.ok and res.state.lambda_valuation() == 8
    assert v.assignment == {"0": "z_1", "1": "z_2", "inf": "z_3"}
    assert not v.fixed_assignment_holds


# ---------------------------------------------------------------- render


def test_json_roundtrip(pipeline):
    m = pipeline(6).model
    data = model_to_json(m)
    back = model_from_json(data)
    assert dict(back.slots()) == dict(m.slots())
    assert data["factored"]["S_inf"]["scale"] == "gamma"


def test_latex_display(pipeline):
    tex = model_to_latex(pipeline(6).model)
    assert r"\frac{3(25T + 56)^{3}}{256(3T + 8)}" in tex
    assert r"-\frac{(T + 8)(5T + 13)^{2}(5T + 8)^{3}}{(3T + 8)(25T + 56)^{3}}" in tex
    assert r"-\frac{(T + 2)(5T + 16)^{5}}{(3T + 8)(25T + 56)^{3}}" in tex
    assert r"X^{2} + TX + \frac{25T^{3} + 120T^{2} + 192T + 128}{36T + 96}" in tex
