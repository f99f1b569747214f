"""Algebraization: turn the lifted series into rational functions of a generator T.

Each coefficient C(mu) is rewritten as a power series f(s) in the local
parameter s = T - T(0) of the generator, then matched by a Padé approximant
P(s)/Q(s) whose degree is the smallest d with a kernel in the Toeplitz
system, using ``margin`` extra equations. A modular rank test picks the
candidate degree; the exact solve and the full-length check are over Q.
"""
from dataclasses import dataclass

from ..errors import GeneratorDegenerate, InsufficientPrecision
from ..exact import Poly, Q, RationalFunction
from ..exact.linalg import linear_solve_exact
from ..exact.series import mul_trunc
from .model import NormalizedModel

DEFAULT_MARGIN = 8
GENERATOR_ORDER = ("beta_1", "beta_0", "gamma", "delta_last")
_P = (1 << 61) - 1


def _slot_name(model, name):
    return f"delta_{model.n - 4}" if name == "delta_last" else name


def local_parameter_powers(gen):
    """(t_h, v, [s^0, ..., s^{K-1}]) for s = gen - gen(0), with (K-1) v < precision."""
    N = gen.precision
    s = list(gen.coeffs)
    t_h = s[0]
    s[0] = Q(0)
    v = next((k for k, c in enumerate(s) if c != 0), None)
    if v is None:
        raise GeneratorDegenerate("generator series is constant")
    powers = [[Q(1)] + [Q(0)] * (N - 1)]
    for _ in range(1, (N + v - 1) // v):
        powers.append(mul_trunc(powers[-1], s, N))
    return t_h, v, powers


def to_local_series(c, v, powers):
    """Coefficients f_k with c = sum f_k s^k, or None if c is not a series in s."""
    N = len(powers[0])
    r = list(c.coeffs)
    out = []
    lead = powers[1][v]
    for k in range(len(powers)):
        if k * v >= N:
            break
        pk = powers[k]
        fk = r[k * v] / (lead ** k)
        out.append(fk)
        if fk != 0:
            for j in range(k * v, N):
                if pk[j] != 0:
                    r[j] -= fk * pk[j]
        for j in range(k * v, min((k + 1) * v, N)):
            if r[j] != 0:
                return None
    return out


def _mod(q):
    num, den = int(q.numerator), int(q.denominator)
    if den % _P == 0:
        return None
    return num * pow(den, -1, _P) % _P


def _rank_mod_p(rows, ncols):
    m = [list(r) for r in rows]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, _P)
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                f = m[i][col] * inv % _P
                m[i] = [(a - f * b) % _P for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _toeplitz(f, d, rows):
    # row for coefficient m of Q * f, m = d+1 .. d+rows; unknowns Q_0..Q_d
    return [[f[m - j] if 0 <= m - j < len(f) else 0 for j in range(d + 1)] for m in range(d + 1, d + 1 + rows)]


def pade(f, margin=DEFAULT_MARGIN, max_degree=None):
    """Smallest-degree (P, Q) with Q f = P modulo s^len(f), Q(0) = 1; None if none fits."""
    K = len(f)
    dmax = (K - 1 - margin) // 2
    if max_degree is not None:
        dmax = min(dmax, max_degree)
    fp = [_mod(x) for x in f]
    modular = None not in fp
    for d in range(dmax + 1):
        rows = d + margin
        if modular and _rank_mod_p(_toeplitz(fp, d, rows), d + 1) == d + 1:
            continue
        A = [row[1:] for row in _toeplitz(f, d, d)]
        b = [-f[m] for m in range(d + 1, 2 * d + 1)]
        try:
            tail = linear_solve_exact(A, b) if d else []
        except ArithmeticError:
            continue
        q = [Q(1)] + list(tail)
        qf = mul_trunc(q, f, K)
        if any(x != 0 for x in qf[d + 1 :]):
            continue
        return Poly(qf[: d + 1], "s"), Poly(q, "s")
    return None


@dataclass
class ReconstructionReport:
    model: NormalizedModel
    generator: str
    t_h: object
    degrees: dict
    terms_used: int

    def to_json(self):
        from ..exact import to_str

        return {
            "generator": self.generator,
            "t_h": to_str(self.t_h),
            "degrees": self.degrees,
            "terms_used": self.terms_used,
        }


def _reconstruct_with(model, gen_name, margin):
    gen = dict(model.slots())[gen_name]
    N = gen.precision
    t_h, v, powers = local_parameter_powers(gen)
    shift = Poly([-t_h, 1], "T")
    values = {}
    degrees = {}
    for name, c in model.slots():
        f = to_local_series(c, v, powers)
        if f is None:
            raise GeneratorDegenerate(f"{name} is not a power series in the local parameter of {gen_name}")
        pq = pade(f, margin)
        if pq is None:  # caller re-lifts at a higher precision
            raise InsufficientPrecision(f"{name}: no approximant within {len(f)} terms (precision {N})")
        p, q = pq
        rf = RationalFunction(p.compose(shift).with_var("T"), q.compose(shift).with_var("T"))
        values[name] = rf
        degrees[name] = rf.degree
    out = NormalizedModel.from_slots(model.n, values, generator=gen_name)
    return ReconstructionReport(out, gen_name, t_h, degrees, len(powers))


def _auto_candidates(model, tried):
    """Remaining slots, most promising local parameters (lowest valuation) first."""
    out = []
    for name, c in model.slots():
        if name in tried or name == "lambda":
            continue
        v = next((k for k, x in enumerate(c.coeffs) if k and x != 0), None)
        if v is not None:
            out.append((v, name))
    return [name for _, name in sorted(out)]


def reconstruct(model, margin=DEFAULT_MARGIN, generators=GENERATOR_ORDER, auto=True):
    """Rational functions of T for every slot.

    Generators are tried in order. A candidate that is constant, or that does
    not generate the function field (some slot is then not rational in it),
    is skipped. With ``auto`` the remaining slots are tried afterwards.
    """
    errors = []
    tried = set()
    names = [_slot_name(model, g) for g in generators]
    queue = list(names)
    while queue:
        g = queue.pop(0)
        tried.add(g)
        try:
            return _reconstruct_with(model, g, margin)
        except (GeneratorDegenerate, InsufficientPrecision) as exc:
            errors.append(exc)
        if not queue and auto:
            queue = _auto_candidates(model, tried)
            auto = False
    short = [e for e in errors if isinstance(e, InsufficientPrecision)]
    raise short[0] if short else errors[-1]
