"""Exact verification of a reconstructed model over Q(T)."""
from dataclasses import dataclass, field
from typing import Dict, List

from ..errors import IdentityFailed, RamificationMismatch
from ..exact import Poly, Q, RationalFunction
from ..nielsen import expected_ramification
from .model import pmul, psub, pscale


def _lcm(polys):
    out = Poly([1], "T")
    for p in polys:
        g = out.gcd(p)
        out = (out * p).exact_div(g)
    return out.monic()


def _cleared(values, L):
    """Polynomials L * v in Q[T] for rational functions v with den | L."""
    return [v.num * L.exact_div(v.den) for v in values]


def identities_hold(model):
    """Both identities, checked with denominators cleared so all arithmetic is in Q[T][X]."""
    slots = [v for _, v in model.slots()]
    L = _lcm([v.den for v in slots])
    one = L
    c = dict(zip([k for k, _ in model.slots()], _cleared(slots, L)))
    h = model.n // 2
    A = [c[f"alpha_{i}"] for i in range(h)] + [one]
    D = [c[f"delta_{k}"] for k in range(model.n - 3)] + [one]
    E = [c[f"eta_{l}"] for l in range(h - 1)] + [one]
    Bq = [c["beta_0"], c["beta_1"], one]
    quad = [c["quad_0"], c["quad_1"], one]
    cube = [Poly([k], "T") for k in (-1, 3, -3, 1)]
    A2 = pmul(A, A)
    # identity 1 times L^2, identity 2 times L^4
    s1 = pscale(pmul(cube, D), L)
    sinf = pscale(Bq, c["gamma"])
    r1 = psub(psub(A2, s1), sinf)
    slam = pmul(quad, pmul(E, E))
    r2 = psub(psub(pscale(A2, L * L), pscale(slam, L)), pscale(sinf, c["lambda"] * L))
    return all(x.is_zero() for x in r1), all(x.is_zero() for x in r2)


def multiplicity_pattern(p):
    """Sorted (descending) root multiplicities of p over an algebraic closure, via Yun."""
    pattern = []
    if p.degree <= 0:
        return pattern
    f = p.monic()
    k = 1
    g = f.gcd(f.derivative())
    w = f.exact_div(g)
    while w.degree > 0:
        y = w.gcd(g)
        z = w.exact_div(y)
        pattern += [k] * z.degree
        w, g = y, g.exact_div(y)
        k += 1
    return sorted(pattern, reverse=True)


def fiber_patterns(H):
    """Ramification of the map T -> H(T) over 0, 1 and infinity (T = infinity included)."""
    num, den = H.num, H.den
    dn, dd = num.degree, den.degree
    one = num - den

    def with_infinity(pat, extra):
        return sorted(pat + ([extra] if extra > 0 else []), reverse=True)

    return {
        "0": with_infinity(multiplicity_pattern(num), dd - dn),
        "1": with_infinity(multiplicity_pattern(one), dd - one.degree),
        "inf": with_infinity(multiplicity_pattern(den), max(dn, dd) - dd),
    }


def _specializable(model, t):
    try:
        for _, v in model.slots():
            v(t)
    except ZeroDivisionError:
        return False
    return True


def _specialize(coeffs, t):
    return Poly([c(t) if isinstance(c, RationalFunction) else Q(c) for c in coeffs])


def side_conditions(model, tries=64):
    """Squarefree inner factors and distinct fibers, certified at one rational T.

    A factorization over Q(T) survives specialization at any t where no
    coefficient has a pole and degrees are kept, so one good t is a proof.
    """
    for j in range(1, tries + 1):
        t = Q(j, 7) * (1 if j % 2 else -1)
        if not _specializable(model, t):
            continue
        g = model.gamma(t)
        if g == 0:
            continue
        a = _specialize(model.inner_s0(), t)
        d = _specialize(model.inner_s1(), t)
        e = _specialize(model.inner_slam(), t)
        qd = _specialize(model.quadratic_lam(), t)
        b = _specialize([model.beta[0], model.beta[1], 1], t)
        full = a * d * Poly([-1, 1]) * e * qd * b
        if full.gcd(full.derivative()).degree == 0:
            return {"t": t, "squarefree": True, "coprime": True}
    return None


@dataclass
class VerificationReport:
    n: int
    identity_1: bool
    identity_2: bool
    side_conditions: Dict
    patterns: Dict[str, List[int]]
    expected: Dict[str, List[int]]
    fiber_degree: int
    assignment: Dict[str, str] = field(default_factory=dict)
    ok: bool = field(default=False)

    @property
    def fixed_assignment_holds(self):
        """True when lambda = 0, 1, inf carry the z_3, z_2, z_1 types respectively."""
        return self.patterns == self.expected

    def to_json(self):
        from ..exact import to_str

        sc = dict(self.side_conditions or {})
        if "t" in sc:
            sc["t"] = to_str(sc["t"])
        return {
            "n": self.n,
            "identity_1": self.identity_1,
            "identity_2": self.identity_2,
            "side_conditions": sc,
            "lambda_ramification": self.patterns,
            "expected_ramification": self.expected,
            "assignment": self.assignment,
            "fixed_assignment_holds": self.fixed_assignment_holds,
            "fiber_degree": self.fiber_degree,
            "ok": self.ok,
        }


def match_branch_points(patterns, n):
    """Map each of lambda = 0, 1, inf to a z_i with the same type; None if impossible."""
    z = {f"z_{i}": sorted(t, reverse=True) for i, t in enumerate(expected_ramification(n), 1)}
    out = {}
    free = dict(z)
    for key in ("1", "0", "inf"):
        hit = next((name for name, t in sorted(free.items()) if t == patterns[key]), None)
        if hit is None:
            return None
        out[key] = hit
        del free[hit]
    return {k: out[k] for k in ("0", "1", "inf")}


def expected_lambda_patterns(n):
    z = expected_ramification(n)  # cycle types of the gamma_1, gamma_2, gamma_1gamma_2 action
    return {"0": sorted(z[2], reverse=True), "1": sorted(z[1], reverse=True), "inf": sorted(z[0], reverse=True)}


def generic_fiber_degree(model):
    """deg_X of numer(S_0 - x S_inf) for a symbolic x: the larger of deg S_0 and 2."""
    return max(len(model.s0()) - 1, 2)


def verify_model(model, strict=True):
    i1, i2 = identities_hold(model)
    if strict and not (i1 and i2):
        raise IdentityFailed(f"identity 1: {i1}, identity 2: {i2}")
    sc = side_conditions(model)
    if strict and sc is None:
        raise IdentityFailed("no specialization certified the squarefree/coprime side conditions")
    pats = fiber_patterns(model.lam)
    exp = expected_lambda_patterns(model.n)
    assignment = match_branch_points(pats, model.n)
    if strict and assignment is None:
        raise RamificationMismatch(f"lambda ramification {pats} is not a relabeling of {exp}")
    deg = generic_fiber_degree(model)
    ok = i1 and i2 and sc is not None and assignment is not None and deg == model.n
    return VerificationReport(model.n, i1, i2, sc or {}, pats, exp, deg, assignment or {}, ok)
