import pytest
from hypothesis import given, settings, strategies as st

from hurwitz_family.errors import AllPrimesBad, DegenerateFiber, EmptyInterval, ParameterAtPole
from hurwitz_family.exact import Poly, Q, sturm_count
from hurwitz_family.family.verify import multiplicity_pattern
from hurwitz_family.specialize import (
    SnEvidence,
    an_specialization_check,
    classify_patterns,
    default_primes,
    degenerate_parameter,
    fiber_polynomial,
    interior_points,
    replay_certificate,
    sn_evidence,
    specialize,
    specialize_model,
    totally_real_probe,
)

X = Poly.gen("X")
T0 = Q(-17, 10)


@pytest.fixture(scope="module")
def model6(pipeline):
    return pipeline(6).model


def test_degenerate_parameter(model6):
    assert degenerate_parameter(model6) == Q(-8, 5)


def test_branch_fibers_have_model_shapes(model6):
    n = 6
    spec = specialize_model(model6, T0)
    p0 = fiber_polynomial(model6, T0, 0, allow_degenerate=True)
    assert multiplicity_pattern(p0) == [2, 2, 2]
    assert p0 == Poly(spec["s0"].primitive_integer())
    p1 = fiber_polynomial(model6, T0, 1, allow_degenerate=True)
    assert p1.multiplicity_at(1) == 3
    s1 = spec["s0"] - spec["sinf"]
    assert p1 == Poly(s1.primitive_integer())
    assert multiplicity_pattern(p1) == [3, 1, 1, 1]
    ph = fiber_polynomial(model6, T0, spec["H"], allow_degenerate=True)
    assert multiplicity_pattern(ph) == [2, 2, 1, 1]
    assert p0.degree == p1.degree == n


def test_branch_values_raise(model6):
    h = specialize_model(model6, T0)["H"]
    for x0 in (0, 1, h):
        with pytest.raises(DegenerateFiber):
            fiber_polynomial(model6, T0, x0)


def test_generic_fiber_is_squarefree(model6):
    p = fiber_polynomial(model6, T0, Q(1, 1000))
    assert p.degree == 6 and p.gcd(p.derivative()).degree == 0


def test_pole_raises(model6):
    with pytest.raises(ParameterAtPole):
        specialize_model(model6, Q(-8, 3))
    with pytest.raises(ParameterAtPole):
        specialize_model(model6, Q(-56, 25))


def test_probe_dichotomy(model6):
    h, probes, ok = totally_real_probe(model6, T0, count=5)
    assert 0 < h < 1 and ok
    inside = [p for p in probes if p.inside]
    assert len(inside) == 5
    assert all(p.real_root_count == 6 and p.distinct for p in inside)
    assert all(p.real_root_count < 6 for p in probes if not p.inside)
    assert any(p.x0 == 2 for p in probes if not p.inside)


def test_wrong_side_reports_h(model6):
    with pytest.raises(EmptyInterval) as exc:
        totally_real_probe(model6, Q(-3, 2))
    assert exc.value.h_value is not None and not 0 < exc.value.h_value < 1


def test_interior_points_small_denominators():
    pts = interior_points(Q(7, 3132), 5)
    assert len(pts) == 5 and all(0 < p < Q(7, 3132) for p in pts)
    seeded = interior_points(Q(1, 3), 5, seed=4)
    assert seeded == interior_points(Q(1, 3), 5, seed=4)
    assert all(p.denominator <= 100 for p in seeded)


@settings(max_examples=25, deadline=None)
@given(st.fractions(min_value=-50, max_value=50).filter(lambda f: f != 0))
def test_sturm_count_scale_invariant(c):
    p = (X ** 2 - 2) * (X - 3) * (X ** 2 + 1)
    assert sturm_count(p.scale(Q(c))) == sturm_count(p) == 3


def test_sn_evidence_examples():
    assert classify_patterns(6, {7: [6], 11: [5, 1], 13: [2, 1, 1, 1, 1]})[1] is SnEvidence.PROVED
    irr, verdict, _ = classify_patterns(6, {p: [3, 3] for p in default_primes(20)})
    assert not irr and verdict is SnEvidence.INCONCLUSIVE
    irr, verdict, wit = classify_patterns(6, {7: [6]})
    assert irr and verdict is SnEvidence.INCONCLUSIVE and wit["irreducible"] == 7
    ev = sn_evidence(X ** 2 + 1, [3])
    assert ev.irreducible and ev.patterns == {3: [2]}


def test_sn_evidence_all_bad():
    with pytest.raises(AllPrimesBad):
        sn_evidence(3 * X ** 2 + 1, [3])


@pytest.mark.parametrize("n", [6, 8])
def test_specialize_end_to_end(pipeline, n):
    rep = specialize(pipeline(n).model)
    assert rep.interval_totally_real
    assert sum(1 for p in rep.probes if p.inside) >= 5
    assert rep.evidence.irreducible
    assert rep.sn_evidence is SnEvidence.PROVED
    assert replay_certificate(rep.certificate, n)
    assert rep.fiber_multiplicities["0"] == [2] * (n // 2)
    data = rep.to_json()
    assert data["sn_evidence"] == "proved_desk_scale"


def test_replay_rejects_tampering(pipeline):
    rep = specialize(pipeline(6).model)
    cert = dict(rep.certificate)
    cert["witnesses"] = {}
    assert not replay_certificate(cert, 6)


def test_an_specialization():
    r6 = an_specialization_check(6)
    assert r6.parities.count(-1) == 2
    assert r6.quadratic_branch_points == ["z_1", "z_4"]
    assert an_specialization_check(8).quadratic_branch_points == ["z_1", "z_3"]
    assert r6.lift_totally_real
