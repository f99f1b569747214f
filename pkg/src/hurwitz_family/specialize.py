"""Specializing the family at rational parameters.

Real-root certification of fibers by Sturm chains, Galois-group evidence from
Frobenius cycle types, and the monodromy-level check of the alternating lift.
"""
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional

from .descent import an_lift_report, odd_positions, quadratic_branch_points
from .errors import AllPrimesBad, BadReductionPrime, DegenerateFiber, EmptyInterval, ParameterAtPole
from .exact import Poly, Q, modp_factor_degrees, sturm_count, to_fraction, to_str
from .family.verify import multiplicity_pattern
from .nielsen import ClassLabel, make_class


class SnEvidence(str, Enum):
    PROVED = "proved_desk_scale"
    STRONG = "strong_evidence"
    INCONCLUSIVE = "inconclusive"


def default_primes(count=60, start=3):
    """The first ``count`` primes >= start."""
    out = []
    k = max(start, 2)
    while len(out) < count:
        if all(k % p for p in range(2, int(k ** 0.5) + 1)):
            out.append(k)
        k += 1
    return out


# ---------------------------------------------------------------- fibers


def specialize_model(model, t0):
    """Rational coefficients of the model at T = t0; raises ParameterAtPole."""
    t0 = Q(t0)
    try:
        vals = {k: v(t0) for k, v in model.slots()}
    except ZeroDivisionError as exc:
        raise ParameterAtPole(f"T = {to_str(t0)} is a pole of a model coefficient") from exc
    n = model.n
    h = n // 2
    if vals["gamma"] == 0:
        raise ParameterAtPole(f"gamma vanishes at T = {to_str(t0)}")
    b0, b1 = vals["beta_0"], vals["beta_1"]
    if b1 * b1 - 4 * b0 == 0:
        raise ParameterAtPole(f"the fiber over infinity degenerates at T = {to_str(t0)}")
    a = Poly([vals[f"alpha_{i}"] for i in range(h)] + [1])
    return {
        "t0": t0,
        "H": vals["lambda"],
        "s0": a * a,
        "sinf": Poly([b0, b1, 1]).scale(vals["gamma"]),
        "values": vals,
    }


def _normalize_content(p):
    return Poly(p.primitive_integer(), p.var)


def branch_values(spec):
    return [Q(0), Q(1), spec["H"]]


def fiber_polynomial(model, t0, x0, allow_degenerate=False):
    """numer(S_0(t0, X) - x0 S_inf(t0, X)) as a primitive integer polynomial of degree n.

    Over a branch value, or when the fiber is not squarefree, DegenerateFiber
    is raised unless ``allow_degenerate`` is set.
    """
    spec = specialize_model(model, t0)
    x0 = Q(x0)
    p = spec["s0"] - spec["sinf"].scale(x0)
    if p.degree != model.n:
        raise DegenerateFiber(f"fiber polynomial has degree {p.degree}")
    if not allow_degenerate:
        if x0 in branch_values(spec):
            raise DegenerateFiber(f"x0 = {to_str(x0)} is a branch value")
        if p.gcd(p.derivative()).degree > 0:
            raise DegenerateFiber(f"fiber over x0 = {to_str(x0)} is not squarefree")
    return _normalize_content(p)


# ---------------------------------------------------------------- probes


@dataclass(frozen=True)
class Probe:
    x0: object
    real_root_count: int
    distinct: bool
    inside: bool

    def to_json(self):
        return {
            "x0": to_str(self.x0),
            "real_root_count": self.real_root_count,
            "distinct": self.distinct,
            "inside": self.inside,
        }


def _probe(model, t0, x0, inside):
    p = fiber_polynomial(model, t0, x0)
    return Probe(Q(x0), sturm_count(p), p.gcd(p.derivative()).degree == 0, inside)


def exterior_controls(h):
    """Rational points outside [0, H] and away from the branch values."""
    return [Q(-1)] + ([small_rational_in(h, 1, (h + 1) / 2)] if h < 1 else []) + [Q(2)]


def small_rational_in(lo, hi, target, max_den=100):
    """A rational strictly inside (lo, hi) near target, with the smallest denominator bound tried first."""
    t = to_fraction(target)
    lo, hi = to_fraction(lo), to_fraction(hi)
    den = max_den
    while True:
        r = t.limit_denominator(den)
        if lo < r < hi:
            return Q(r)
        den *= 10


def interior_points(h, count, max_den=100, seed=None):
    """``count`` small-denominator rationals in ]0, h[, one per equal stratum.

    Without a seed each point aims at its stratum's midpoint; with one, at a
    uniformly drawn position inside it.
    """
    rng = random.Random(seed) if seed is not None else None
    out = []
    for k in range(count):
        lo, hi = h * Q(k, count), h * Q(k + 1, count)
        u = Fraction(1, 2) if rng is None else Fraction(rng.randint(1, 999), 1000)
        out.append(small_rational_in(lo, hi, lo + (hi - lo) * Q(u), max_den))
    return sorted(set(out))


def totally_real_probe(model, t0, count=5, max_den=100, seed=None):
    """Interior probes in ]0, H(t0)[ and exterior controls; returns (H(t0), probes, verdict)."""
    spec = specialize_model(model, t0)
    h = spec["H"]
    if not 0 < h < 1:
        side = "negative" if h < 0 else ("above 1" if h >= 1 else "zero")
        raise EmptyInterval(f"H(t0) = {to_str(h)} is {side}; the interval ]0, H(t0)[ is not admissible", h)
    probes = [_probe(model, t0, x, True) for x in interior_points(h, count, max_den, seed)]
    probes += [_probe(model, t0, x, False) for x in exterior_controls(h)]
    n = model.n
    inside_ok = all(p.real_root_count == n and p.distinct for p in probes if p.inside)
    outside_ok = all(p.real_root_count < n for p in probes if not p.inside)
    return h, probes, inside_ok and outside_ok


# ---------------------------------------------------------------- parameter choice


def degenerate_parameter(model):
    """The rational t_h over lambda = 0 where H has a root of multiplicity n/2."""
    num = model.lam.num
    target = model.n // 2
    f = num.monic()
    # factor of exact multiplicity `target` from the squarefree decomposition
    g = f.gcd(f.derivative())
    w = f.exact_div(g)
    k = 1
    while w.degree > 0:
        y = w.gcd(g)
        z = w.exact_div(y)
        if k == target and z.degree == 1:
            return -z[0] / z[1]
        w, g = y, g.exact_div(y)
        k += 1
    raise ValueError("no rational root of multiplicity n/2 in the numerator of H")


def select_t0(model, step=Q(1, 10), max_steps=60, count=5, t_h=None, seed=None):
    """First t0 = t_h -/+ k*step (below first) whose probes certify the interval."""
    t_h = degenerate_parameter(model) if t_h is None else Q(t_h)
    tried = []
    for k in range(1, max_steps + 1):
        for sign in (-1, 1):
            t0 = t_h + sign * k * Q(step)
            try:
                h, probes, ok = totally_real_probe(model, t0, count, seed=seed)
            except (ParameterAtPole, EmptyInterval, DegenerateFiber) as exc:
                tried.append((t0, type(exc).__name__))
                continue
            if ok:
                return t0, h, probes, tried
            tried.append((t0, "probes failed"))
    raise EmptyInterval(f"no admissible t0 within {max_steps} steps of {to_str(t_h)}")


# ---------------------------------------------------------------- Galois evidence


def _is_prime(p):
    return p > 1 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _parity(pattern):
    return sum(k - 1 for k in pattern) % 2


def _transposition_witness(pattern):
    # one 2-cycle, every other cycle odd: an odd power is a transposition
    return pattern.count(2) == 1 and all(k % 2 for k in pattern if k != 2)


def _primitivity_witness(pattern, n):
    if sorted(pattern) == [1, n - 1]:
        return f"({n - 1})-cycle"
    for k in pattern:
        if _is_prime(k) and 2 * k > n:
            return f"{k}-cycle (prime > n/2)"
    return None


@dataclass
class EvidenceReport:
    degree: int
    patterns: dict  # prime -> degree pattern
    bad_primes: list
    irreducible: bool
    verdict: SnEvidence
    witnesses: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "degree": self.degree,
            "patterns": {str(p): pat for p, pat in self.patterns.items()},
            "bad_primes": self.bad_primes,
            "irreducible": self.irreducible,
            "verdict": self.verdict.value,
            "witnesses": self.witnesses,
        }


def classify_patterns(n, patterns):
    """Verdict from a mapping prime -> Frobenius cycle type."""
    pats = {p: sorted(v, reverse=True) for p, v in patterns.items()}
    irreducible = any(v == [n] for v in pats.values())
    wit = {}
    if irreducible:
        wit["irreducible"] = next(p for p, v in pats.items() if v == [n])
        for p, v in pats.items():
            w = _primitivity_witness(v, n)
            if w and "primitive" not in wit:
                wit["primitive"] = {"prime": p, "cycle": w}
            if _transposition_witness(v) and "transposition" not in wit:
                wit["transposition"] = {"prime": p, "pattern": v}
    if irreducible and "primitive" in wit and "transposition" in wit:
        verdict = SnEvidence.PROVED
    elif irreducible and len(pats) >= 20 and {_parity(v) for v in pats.values()} == {0, 1}:
        verdict = SnEvidence.STRONG
    else:
        verdict = SnEvidence.INCONCLUSIVE
    return irreducible, verdict, wit


def sn_evidence(p, primes=None):
    primes = default_primes() if primes is None else list(primes)
    patterns, bad = {}, []
    for q in primes:
        try:
            patterns[q] = modp_factor_degrees(p, q)
        except BadReductionPrime:
            bad.append(q)
    if not patterns:
        raise AllPrimesBad("every supplied prime divides the leading coefficient or the discriminant")
    irreducible, verdict, wit = classify_patterns(p.degree, patterns)
    return EvidenceReport(p.degree, patterns, bad, irreducible, verdict, wit)


# ---------------------------------------------------------------- alternating lift


@dataclass
class AnSpecializationReport:
    n: int
    t0: object
    parities: List[int]
    quadratic_branch_points: List[str]
    descent_defined_over_R: bool
    lift_totally_real: bool

    def to_json(self):
        return {
            "n": self.n,
            "t0": None if self.t0 is None else to_str(self.t0),
            "parities": self.parities,
            "quadratic_branch_points": self.quadratic_branch_points,
            "descent_defined_over_R": self.descent_defined_over_R,
            "lift_totally_real": self.lift_totally_real,
        }


def an_specialization_check(n, t0=None):
    """Monodromy-level facts for the A_n step; no polynomial is built."""
    t = make_class(n, ClassLabel("A", n // 2 - 1))
    lift = an_lift_report(t, with_order=False)
    odd = odd_positions(t)
    return AnSpecializationReport(
        n=n,
        t0=None if t0 is None else Q(t0),
        parities=[-1 if i in odd else 1 for i in range(1, 5)],
        quadratic_branch_points=quadratic_branch_points(n),
        descent_defined_over_R=lift.verdict.defined_over_R,
        lift_totally_real=lift.verdict.totally_real,
    )


# ---------------------------------------------------------------- report


@dataclass
class SpecializationReport:
    n: int
    t0: object
    H_value: object
    probes: List[Probe]
    evidence: Optional[EvidenceReport]
    interval_totally_real: bool
    sn_evidence: SnEvidence
    fiber_multiplicities: dict = field(default_factory=dict)
    certificate: dict = field(default_factory=dict)
    t0_search: list = field(default_factory=list)

    def to_json(self):
        return {
            "n": self.n,
            "t0": to_str(self.t0),
            "H_value": to_str(self.H_value),
            "probes": [p.to_json() for p in self.probes],
            "evidence": self.evidence.to_json() if self.evidence else None,
            "interval_totally_real": self.interval_totally_real,
            "sn_evidence": self.sn_evidence.value,
            "fiber_multiplicities": self.fiber_multiplicities,
            "certificate": self.certificate,
            "t0_search": self.t0_search,
        }


def specialize(model, t0=None, count=5, primes=None, seed=None):
    """Pick (or use) t0, certify the real interval and collect S_n evidence on one probe."""
    if t0 is None:
        t0, h, probes, tried = select_t0(model, count=count, seed=seed)
        ok = True
    else:
        tried = []
        h, probes, ok = totally_real_probe(model, t0, count, seed=seed)
    inside = [p for p in probes if p.inside]
    best = None
    for pr in inside:
        poly = fiber_polynomial(model, t0, pr.x0)
        ev = sn_evidence(poly, primes)
        if best is None or _rank(ev.verdict) > _rank(best.verdict):
            best, best_poly, best_x0 = ev, poly, pr.x0
        if ev.verdict is SnEvidence.PROVED:
            break
    spec = specialize_model(model, t0)
    mults = {
        "0": multiplicity_pattern(spec["s0"]),
        "1": multiplicity_pattern(spec["s0"] - spec["sinf"]),
    }
    return SpecializationReport(
        n=model.n,
        t0=Q(t0),
        H_value=h,
        probes=probes,
        evidence=best,
        interval_totally_real=ok,
        sn_evidence=best.verdict if best else SnEvidence.INCONCLUSIVE,
        fiber_multiplicities=mults,
        certificate={
            "x0": to_str(best_x0),
            "fiber_polynomial": [int(c) for c in best_poly.coeffs],
            "witnesses": best.witnesses,
        }
        if best
        else {},
        t0_search=[(to_str(t), why) for t, why in tried],
    )


def _rank(v):
    return {SnEvidence.INCONCLUSIVE: 0, SnEvidence.STRONG: 1, SnEvidence.PROVED: 2}[v]


def replay_certificate(cert, n):
    """Re-derive a stored S_n certificate from the integer fiber polynomial alone."""
    p = Poly(cert["fiber_polynomial"])
    if p.degree != n:
        return False
    checks = []
    for key in ("irreducible",):
        q = cert["witnesses"].get(key)
        checks.append(q is not None and modp_factor_degrees(p, int(q)) == [n])
    for key in ("primitive", "transposition"):
        w = cert["witnesses"].get(key)
        if w is None:
            checks.append(False)
            continue
        pat = modp_factor_degrees(p, int(w["prime"]))
        checks.append(_primitivity_witness(pat, n) is not None if key == "primitive" else _transposition_witness(pat))
    return all(checks)
