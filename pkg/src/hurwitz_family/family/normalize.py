"""Homography X <- a X + b (a + b = 1) removing the X^{n/2-1} term of S_0."""
from dataclasses import dataclass
from math import gcd

from ..errors import NonUnitLeading
from .model import NormalizedModel, compose_linear


@dataclass
class NormalizationReport:
    model: NormalizedModel
    parity: int  # largest k with every coefficient a series in mu^k
    residual_order: int

    def to_json(self):
        return {
            "parity": self.parity,
            "residual_order": self.residual_order,
            "coefficients": {k: v.to_json() for k, v in self.model.slots()},
        }


def _monic_transform(p, a, b, a_inv):
    """p(a X + b) / a^deg p for monic p."""
    q = compose_linear(p, a, b)
    scale = a_inv ** (len(p) - 1)
    return [c * scale for c in q]


def mu_parity(series_list):
    g = 0
    for s in series_list:
        for k, c in enumerate(s.coeffs):
            if k and c != 0:
                g = gcd(g, k)
    return g if g else series_list[0].precision


def normalize(state):
    from .newton import residual_order

    cm = state.model
    n = cm.n
    h = n // 2
    b = cm.alpha[h - 1] * (-2) / n
    a = 1 - b
    if a[0] == 0:
        raise NonUnitLeading("homography coefficient is not a unit")
    a_inv = a.invert()
    alpha = _monic_transform(cm.inner_s0(), a, b, a_inv)
    delta = _monic_transform(cm.inner_s1(), a, b, a_inv)
    beta = _monic_transform([cm.beta[0], cm.beta[1], 1], a, b, a_inv)
    quad = _monic_transform(cm.quadratic_lam(), a, b, a_inv)
    eta = _monic_transform(cm.inner_slam(), a, b, a_inv)
    gamma = cm.gamma * a_inv ** (n - 2)
    model = NormalizedModel(
        n=n,
        alpha=alpha[:h],
        beta=beta[:2],
        gamma=gamma,
        delta=delta[: n - 3],
        quad=quad[:2],
        eta=eta[: h - 1],
        lam=cm.lam,
    )
    if model.alpha[h - 1].valuation() is not None:
        raise ArithmeticError("subleading coefficient of S_0 did not cancel")
    return NormalizationReport(
        model=model,
        parity=mu_parity([v for _, v in model.slots()]),
        residual_order=residual_order(model),
    )
