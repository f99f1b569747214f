"""The two degenerate covers at the node of the family and the point they define.

``pade_degenerate`` is the degree-n Padé-type cover x = X^n / (gamma Q(X))
with Q of order-3 contact with X^n at X = 1; ``chebyshev_degenerate`` is the
shifted Chebyshev cover y = (T_n(2Y - 1) + 1) / 2.
"""
from dataclasses import dataclass

from ..errors import NonzeroRemainder, RamificationCheckFailed
from ..exact import Poly, Q, RationalFunction, chebyshev_T
from .model import CoverModel


def _check_n(n):
    if n % 2 or n < 6:
        raise ValueError(f"n must be even and at least 6, got {n}")


def pade_parameters(n):
    """(gamma, beta_1, beta_0) of the Padé denominator gamma (X^2 + beta_1 X + beta_0)."""
    _check_n(n)
    return Q(n * (n - 1), 2), Q(-2 * (n - 2), n - 1), Q(n - 2, n)


def _pade_denominator(n):
    g, b1, b0 = pade_parameters(n)
    return Poly([g * b0, g * b1, g])


@dataclass(frozen=True)
class PadeCover:
    n: int
    x: RationalFunction  # in the variable X
    denominator: Poly  # gamma Q(X)
    cofactor: Poly  # (X^n - gamma Q) / (X - 1)^3

    def to_json(self):
        return {
            "n": self.n,
            "numerator": self.x.num.to_json(),
            "denominator": self.denominator.to_json(),
            "fiber_over_1_cofactor": self.cofactor.to_json(),
            "ramification": {"0": [self.n], "1": [3] + [1] * (self.n - 3), "inf": [self.n - 2, 1, 1]},
        }


def pade_degenerate(n):
    den = _pade_denominator(n)
    X = Poly.gen("X")
    num = X ** n
    diff = num - den
    cube = Poly([-1, 3, -3, 1])
    cof, rem = diff.divmod(cube)
    if not rem.is_zero():
        raise RamificationCheckFailed(f"X^{n} - Q is not divisible by (X-1)^3")
    if cof(1) == 0:
        raise RamificationCheckFailed("contact order at X = 1 exceeds 3")
    if cof.gcd(cof.derivative()).degree > 0:
        raise RamificationCheckFailed("fiber over 1 has extra multiple points")
    # poles: order n - 2 at infinity, two simple ones at the roots of Q
    if den.gcd(den.derivative()).degree > 0 or den(0) == 0:
        raise RamificationCheckFailed("denominator is not squarefree or vanishes at 0")
    return PadeCover(n=n, x=RationalFunction(num, den, var="X"), denominator=den, cofactor=cof)


@dataclass(frozen=True)
class ChebyshevCover:
    n: int
    y: Poly  # in the variable Y
    root_square: Poly  # monic G with y = lc * G^2
    one_square: Poly  # monic E with y - 1 = lc * Y (Y - 1) E^2

    @property
    def leading(self):
        return self.y.leading

    def to_json(self):
        n = self.n
        return {
            "n": n,
            "y": self.y.to_json(),
            "ramification": {
                "0": [2] * (n // 2),
                "1": [1, 1] + [2] * (n // 2 - 1),
                "inf": [n],
            },
        }


def chebyshev_degenerate(n):
    _check_n(n)
    Y = Poly.gen("Y")
    y = (chebyshev_T(n, "Y").compose(2 * Y - 1) + 1).scale(Q(1, 2))
    lc = y.leading
    g = y.gcd(y.derivative())
    if g.degree != n // 2 or g * g * lc != y or g.gcd(g.derivative()).degree > 0:
        raise RamificationCheckFailed("fiber over 0 is not 2^(n/2)")
    y1 = y - 1
    e = y1.gcd(y1.derivative())
    rest, rem = y1.divmod(e * e * lc)
    if not rem.is_zero() or rest != Y * (Y - 1):
        raise RamificationCheckFailed("fiber over 1 is not 1,1,2^((n-2)/2)")
    if e(0) == 0 or e(1) == 0 or e.gcd(e.derivative()).degree > 0:
        raise RamificationCheckFailed("fiber over 1 has extra multiple points")
    return ChebyshevCover(n=n, y=y, root_square=g, one_square=e)


def initial_coefficients(n):
    """The model at mu = 0: Padé data for beta, gamma, delta; everything else zero."""
    g, b1, b0 = pade_parameters(n)
    X = Poly.gen("X")
    q, r = (X ** n - _pade_denominator(n)).divmod(Poly([-1, 3, -3, 1]))
    if not r.is_zero():
        raise NonzeroRemainder(f"remainder {r} is not zero")
    h = n // 2
    zero = Q(0)
    return CoverModel(
        n=n,
        alpha=[zero] * h,
        beta=[b0, b1],
        gamma=g,
        delta=[q[k] for k in range(n - 3)],
        epsilon0=zero,
        eta=[zero] * (h - 1),
        lam=zero,
    )


def scaled_initial_values(n):
    """Constant terms of the rescaled Newton unknowns.

    With alpha_i = mu^(n/2-i) a_i, eta_l = mu^(n/2-1-l) e_l and lam = mu^n ell,
    the mu = 0 limit of the second identity is the Chebyshev cover in
    Y = X / mu, so (a, e) come from its square factors and ell from its
    leading coefficient.
    """
    cheb = chebyshev_degenerate(n)
    m0 = initial_coefficients(n)
    a = [cheb.root_square[i] for i in range(n // 2)]
    e = [cheb.one_square[l] for l in range(n // 2 - 1)]
    ell = 1 / (cheb.leading * m0.gamma * m0.beta[0])
    return {"a": a, "beta": list(m0.beta), "gamma": m0.gamma, "delta": list(m0.delta), "e": e, "ell": ell}
