"""The 2n x 2n deformation system.

Two flavours share one layout of unknowns:

* ``literal``: the coefficients alpha, beta, gamma, delta, eta, lambda of the
  model, with epsilon0 pinned to mu.
* ``scaled``: alpha_i = mu^(n/2-i) a_i, eta_l = mu^(n/2-1-l) e_l,
  lambda = mu^n ell, and the second identity rewritten in Y = X / mu and
  divided by mu^n. At mu = 0 its Jacobian is block triangular with
  invertible blocks, while the literal Jacobian is singular there.
"""
from dataclasses import dataclass
from typing import List

from ..exact.linalg import nullspace, rank
from ..exact.mpoly import MPoly
from .degenerate import initial_coefficients, scaled_initial_values
from .model import CUBE


def unknown_names(n, scaled=False):
    h = n // 2
    a, e, l = ("a", "e", "ell") if scaled else ("alpha", "eta", "lambda")
    return (
        [f"{a}_{i}" for i in range(h)]
        + ["beta_0", "beta_1", "gamma"]
        + [f"delta_{k}" for k in range(n - 3)]
        + [f"{e}_{j}" for j in range(h - 1)]
        + [l]
    )


@dataclass
class DeformationSystem:
    n: int
    scaled: bool
    unknowns: List[str]
    equations: List[MPoly]  # identity 1 coefficients X^0..X^{n-1}, then identity 2
    series_var: str = "mu"

    @property
    def names(self):
        return self.equations[0].names

    def jacobian(self):
        return [[eq.diff(u) for u in self.unknowns] for eq in self.equations]

    def initial_point(self):
        """Values of the unknowns at mu = 0, keyed by name."""
        n = self.n
        if self.scaled:
            v = scaled_initial_values(n)
            flat = v["a"] + v["beta"] + [v["gamma"]] + v["delta"] + v["e"] + [v["ell"]]
        else:
            m = initial_coefficients(n)
            flat = m.alpha + m.beta + [m.gamma] + m.delta + m.eta + [m.lam]
        return dict(zip(self.unknowns, flat))

    def residuals_at(self, values, mu=0):
        point = dict(values)
        point[self.series_var] = mu
        return [eq.subs(point) for eq in self.equations]

    def jacobian_at(self, values, mu=0):
        point = dict(values)
        point[self.series_var] = mu
        return [[d.subs(point) for d in row] for row in self.jacobian()]


def _coeff(poly_list, k):
    return poly_list[k] if 0 <= k < len(poly_list) else 0


def build_system(n, scaled=False):
    if n % 2 or n < 6:
        raise ValueError(f"n must be even and at least 6, got {n}")
    h = n // 2
    unknowns = unknown_names(n, scaled)
    names = tuple(unknowns) + ("mu",)

    def v(name):
        return MPoly.var(names, name)

    mu = v("mu")
    one = MPoly.const(names, 1)
    a_name = "a" if scaled else "alpha"

    # coefficient lists (lowest first) of the monic factors, in X
    alpha = [v(f"{a_name}_{i}") * (mu ** (h - i) if scaled else 1) for i in range(h)] + [one]
    delta = [v(f"delta_{k}") for k in range(n - 3)] + [one]
    beta = [v("beta_0"), v("beta_1"), one]
    gamma = v("gamma")

    def square(p):
        return [sum((p[i] * p[k - i] for i in range(max(0, k - len(p) + 1), min(k, len(p) - 1) + 1)), MPoly(names))
                for k in range(2 * len(p) - 1)]

    s0 = square(alpha)
    s1 = [sum((CUBE[t] * _coeff(delta, k - t) for t in range(4)), MPoly(names)) for k in range(n + 1)]
    eq1 = [s0[k] - s1[k] - gamma * _coeff(beta, k) for k in range(n)]

    if scaled:
        # second identity in Y = X / mu, divided by mu^n
        at = [v(f"a_{i}") for i in range(h)] + [one]
        et = [v(f"e_{j}") for j in range(h - 1)] + [one]
        quad = [MPoly(names), -one, one]  # Y (Y - 1)
        lam_term = [v("ell") * gamma * _coeff(beta, k) * (mu ** k) for k in range(3)]
    else:
        at = alpha
        et = [v(f"eta_{j}") for j in range(h - 1)] + [one]
        quad = [MPoly(names), -mu, one]  # X (X - mu)
        lam_term = [v("lambda") * gamma * _coeff(beta, k) for k in range(3)]
    a2 = square(at)
    e2 = square(et)
    slam = [sum((_coeff(quad, t) * _coeff(e2, k - t) for t in range(3)), MPoly(names)) for k in range(n + 1)]
    eq2 = [a2[k] - slam[k] - (lam_term[k] if k < 3 else 0) for k in range(n)]
    return DeformationSystem(n=n, scaled=scaled, unknowns=unknowns, equations=eq1 + eq2)


def jacobian_rank_at_degenerate_point(n, scaled=False):
    """(rank, kernel basis) of the Jacobian at the mu = 0 point."""
    s = build_system(n, scaled)
    J = s.jacobian_at(s.initial_point())
    return rank(J), nullspace(J)


__all__ = ["DeformationSystem", "build_system", "jacobian_rank_at_degenerate_point", "unknown_names"]
