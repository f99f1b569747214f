"""Factored cover models over a coefficient ring K.

K is any commutative ring whose elements support ``+ - *`` with each other
and with Python ints: rationals, truncated series, rational functions or
polynomials in T. Polynomials over K are plain lists, lowest degree first.
"""
from dataclasses import dataclass, field
from typing import Any, List


def padd(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def psub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def pmul(a, b):
    if not a or not b:
        return []
    out = [None] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            t = x * y
            out[i + j] = t if out[i + j] is None else out[i + j] + t
    return out


def pscale(a, c):
    return [c * x for x in a]


def compose_linear(p, a, b):
    """p(a*X + b) for a polynomial p over K and scalars a, b in K."""
    out = []
    for c in reversed(p):
        out = padd(pmul(out, [b, a]), [c])
    return out


# (X - 1)^3 and its coefficients
CUBE = [-1, 3, -3, 1]


@dataclass
class CoverModel:
    """Coefficients of the four fibers over 0, 1, lambda and infinity.

    S_0 = (X^{n/2} + sum alpha_i X^i)^2, S_inf = gamma (X^2 + beta_1 X + beta_0),
    S_1 = (X-1)^3 (X^{n-3} + sum delta_k X^k),
    S_lam = X (X - epsilon0) (X^{n/2-1} + sum eta_l X^l)^2.
    """

    n: int
    alpha: List[Any]
    beta: List[Any]
    gamma: Any
    delta: List[Any]
    epsilon0: Any
    eta: List[Any]
    lam: Any

    def inner_s0(self):
        return list(self.alpha) + [1]

    def inner_s1(self):
        return list(self.delta) + [1]

    def inner_slam(self):
        return list(self.eta) + [1]

    def quadratic_lam(self):
        return [0, -self.epsilon0, 1]

    def s0(self):
        a = self.inner_s0()
        return pmul(a, a)

    def s1(self):
        return pmul(CUBE, self.inner_s1())

    def sinf(self):
        return pscale([self.beta[0], self.beta[1], 1], self.gamma)

    def slam(self):
        e = self.inner_slam()
        return pmul(self.quadratic_lam(), pmul(e, e))

    def residuals(self):
        """The two identity polynomials S_0 - S_1 - S_inf and S_0 - S_lam - lam*S_inf."""
        s0 = self.s0()
        sinf = self.sinf()
        r1 = psub(psub(s0, self.s1()), sinf)
        r2 = psub(psub(s0, self.slam()), pscale(sinf, self.lam))
        return r1, r2

    def map_coefficients(self, f):
        return CoverModel(
            n=self.n,
            alpha=[f(x) for x in self.alpha],
            beta=[f(x) for x in self.beta],
            gamma=f(self.gamma),
            delta=[f(x) for x in self.delta],
            epsilon0=f(self.epsilon0),
            eta=[f(x) for x in self.eta],
            lam=f(self.lam),
        )


@dataclass
class NormalizedModel:
    """Model after the homography killing the X^{n/2-1} coefficient of S_0.

    Same shape as CoverModel except that S_lam = (X^2 + quad_1 X + quad_0) E^2
    with a monic quadratic, and alpha has a zero in position n/2 - 1.
    """

    n: int
    alpha: List[Any]
    beta: List[Any]
    gamma: Any
    delta: List[Any]
    quad: List[Any]
    eta: List[Any]
    lam: Any
    generator: str = field(default="beta_1")

    inner_s0 = CoverModel.inner_s0
    inner_s1 = CoverModel.inner_s1
    inner_slam = CoverModel.inner_slam
    s0 = CoverModel.s0
    s1 = CoverModel.s1
    sinf = CoverModel.sinf
    slam = CoverModel.slam
    residuals = CoverModel.residuals

    def quadratic_lam(self):
        return [self.quad[0], self.quad[1], 1]

    def slots(self):
        """(name, value) for every coefficient, in serialization order."""
        out = [(f"alpha_{i}", v) for i, v in enumerate(self.alpha)]
        out += [("beta_0", self.beta[0]), ("beta_1", self.beta[1]), ("gamma", self.gamma)]
        out += [(f"delta_{k}", v) for k, v in enumerate(self.delta)]
        out += [("quad_0", self.quad[0]), ("quad_1", self.quad[1])]
        out += [(f"eta_{l}", v) for l, v in enumerate(self.eta)]
        out.append(("lambda", self.lam))
        return out

    def map_coefficients(self, f):
        return NormalizedModel(
            n=self.n,
            alpha=[f(x) for x in self.alpha],
            beta=[f(x) for x in self.beta],
            gamma=f(self.gamma),
            delta=[f(x) for x in self.delta],
            quad=[f(x) for x in self.quad],
            eta=[f(x) for x in self.eta],
            lam=f(self.lam),
            generator=self.generator,
        )

    @classmethod
    def from_slots(cls, n, values, generator="beta_1"):
        h = n // 2
        return cls(
            n=n,
            alpha=[values[f"alpha_{i}"] for i in range(h)],
            beta=[values["beta_0"], values["beta_1"]],
            gamma=values["gamma"],
            delta=[values[f"delta_{k}"] for k in range(n - 3)],
            quad=[values["quad_0"], values["quad_1"]],
            eta=[values[f"eta_{l}"] for l in range(h - 1)],
            lam=values["lambda"],
            generator=generator,
        )
