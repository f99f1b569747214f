"""Newton-Hensel lifting of the degenerate solution to power series in mu."""
from dataclasses import dataclass, field
from typing import Dict, List

from ..errors import PrecisionExhausted, SingularJacobian
from ..exact import Q, TruncatedSeries
from ..exact.linalg import inverse, mat_vec, nullspace, rank
from ..exact.mpoly import SeriesEvaluator
from ..exact.rational import ZERO
from ..exact.series import valuation
from .model import CoverModel
from .system import build_system


def default_precision(n):
    return 64 if n <= 6 else 128


@dataclass
class DeformationState:
    """Lifted solution. ``scaled`` holds the Newton unknowns, ``model`` the
    literal coefficients with epsilon0 = mu exactly."""

    n: int
    precision: int
    scaled: Dict[str, TruncatedSeries]
    model: CoverModel
    certified_orders: List[int] = field(default_factory=list)
    gauge: str = "epsilon0 = mu"

    @property
    def certified_order(self):
        return self.certified_orders[-1] if self.certified_orders else 0

    def lambda_valuation(self):
        return self.model.lam.valuation()

    def to_json(self):
        m = self.model
        slots = {f"alpha_{i}": x for i, x in enumerate(m.alpha)}
        slots.update({"beta_0": m.beta[0], "beta_1": m.beta[1], "gamma": m.gamma})
        slots.update({f"delta_{k}": x for k, x in enumerate(m.delta)})
        slots["epsilon_0"] = m.epsilon0
        slots.update({f"eta_{l}": x for l, x in enumerate(m.eta)})
        slots["lambda"] = m.lam
        return {
            "n": self.n,
            "precision": self.precision,
            "gauge": self.gauge,
            "certified_orders": self.certified_orders,
            "lambda_valuation": self.lambda_valuation(),
            "coefficients": {k: v.to_json() for k, v in slots.items()},
        }


def _solve_series(jac, j0inv, rhs, m):
    """Solve J w = rhs modulo mu^m, J given as {(row, col): coefficient list}.

    Linear lifting: w_j = J0^-1 (rhs_j - sum_{i >= 1} J_i w_{j-i}).
    """
    dim = len(rhs)
    w = [[ZERO] * m for _ in range(dim)]
    acc = [[ZERO] * m for _ in range(dim)]
    tails = [(r, c, s) for (r, c), s in jac.items() if any(x != 0 for x in s[1:m])]
    for j in range(m):
        wj = mat_vec(j0inv, [rhs[r][j] - acc[r][j] for r in range(dim)])
        for c in range(dim):
            w[c][j] = wj[c]
        for r, c, s in tails:
            x = wj[c]
            if x == 0:
                continue
            row = acc[r]
            for i in range(1, min(len(s), m - j)):
                if s[i] != 0:
                    row[j + i] += s[i] * x
    return w


def _residual_valuation(res, prec):
    return min((v for v in (valuation(r) for r in res) if v is not None), default=prec)


def newton_lift(n, precision=None):
    """Lift the mu = 0 solution to precision ``precision`` with doubling steps."""
    N = precision or default_precision(n)
    if N < 1:
        raise ValueError("precision must be positive")
    system = build_system(n, scaled=True)
    names = system.names
    eqs = system.equations
    jsym = system.jacobian()
    entries = [(r, c, p) for r, row in enumerate(jsym) for c, p in enumerate(row) if not p.is_zero()]
    start = system.initial_point()
    x0 = [Q(start[u]) for u in system.unknowns]
    j0 = system.jacobian_at(start)
    if rank(j0) < len(j0):
        raise SingularJacobian(f"Jacobian at the degenerate point is singular for n={n}", nullspace(j0))
    j0inv = inverse(j0)

    ev = SeriesEvaluator(names, "mu")
    u = [[x] for x in x0]
    k = 1
    orders = []
    while True:
        target = min(2 * k, N) if k < N else N
        for col in u:
            col.extend([ZERO] * (target - len(col)))
        ev.reset(u, target)
        res = [ev.evaluate(e) for e in eqs]
        cert = _residual_valuation(res, target)
        if cert < k:
            raise PrecisionExhausted(f"residual order {cert} fell below the lifted order {k}")
        orders.append(min(cert, target))
        if k >= N:
            break
        m = target - k
        ev.reset([col[:m] for col in u], m)
        jac = {(r, c): ev.evaluate(p) for r, c, p in entries}
        w = _solve_series(jac, j0inv, [[-x for x in r[k:target]] for r in res], m)
        for col, wc in zip(u, w):
            for j in range(m):
                col[k + j] += wc[j]
        k = target
    if orders[-1] < N:
        raise PrecisionExhausted(f"certified order {orders[-1]} < requested {N}")

    scaled = {name: TruncatedSeries(col[:N], N) for name, col in zip(system.unknowns, u)}
    return DeformationState(n=n, precision=N, scaled=scaled, model=literal_model(n, scaled, N), certified_orders=orders)


def _shift(s, e, N):
    return TruncatedSeries([ZERO] * e + list(s.coeffs), N)


def literal_model(n, scaled, N):
    h = n // 2
    return CoverModel(
        n=n,
        alpha=[_shift(scaled[f"a_{i}"], h - i, N) for i in range(h)],
        beta=[scaled["beta_0"], scaled["beta_1"]],
        gamma=scaled["gamma"],
        delta=[scaled[f"delta_{k}"] for k in range(n - 3)],
        epsilon0=TruncatedSeries.gen(N),
        eta=[_shift(scaled[f"e_{l}"], h - 1 - l, N) for l in range(h - 1)],
        lam=_shift(scaled["ell"], n, N),
    )


def residual_order(model):
    """Smallest mu-valuation over all coefficients of both identity polynomials."""
    r1, r2 = model.residuals()
    prec = model.gamma.precision
    vals = [c.valuation() for c in r1 + r2 if not isinstance(c, int)]
    return min((v for v in vals if v is not None), default=prec)
