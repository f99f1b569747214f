"""Descent to the reals, totally real fibers and the alternating-group lift."""
from dataclasses import dataclass
from typing import Optional

from .nielsen import ClassLabel, NielsenTuple, enumerate_sni
from .perm import Permutation, group_order


@dataclass(frozen=True)
class DescentVerdict:
    defined_over_R: bool
    tau: Optional[Permutation]
    totally_real: bool

    def to_json(self):
        return {
            "defined_over_R": self.defined_over_R,
            "tau": None if self.tau is None else str(self.tau),
            "totally_real": self.totally_real,
        }


def descent_check(t):
    """Combinatorial real-descent criterion for a branch cycle description.

    The cover descends to R iff some involution tau satisfies
        s4 s1^-1 s4^-1 = tau s1,  s4^-1 = tau s4,
        s3^-1 = tau s3,           s3^-1 s2^-1 s3 = tau s2.
    The second relation pins tau = s4^-2, so no search is needed. For a cover
    without automorphisms the base fiber is totally real iff tau = identity.
    """
    s1, s2, s3, s4 = tuple(t)
    s4i = s4.inverse()
    tau = s4i * s4i
    ok = (
        (tau * tau).is_identity()
        and s4 * s1.inverse() * s4i == tau * s1
        and s3.inverse() == tau * s3
        and s3.inverse() * s2.inverse() * s3 == tau * s2
    )
    if not ok:
        return DescentVerdict(False, None, False)
    return DescentVerdict(True, tau, tau.is_identity())


def find_totally_real_classes(n):
    """Labels whose representative passes the criterion with tau = identity."""
    return [lab for lab, t in enumerate_sni(n) if descent_check(t).totally_real]


def sheet_point(k, s, n):
    """Integer label of the point (k, s) of {1..n} x {1, 2}."""
    return k + n * (s - 1)


def odd_positions(t):
    """1-based positions of the odd permutations in the tuple."""
    return [i for i, s in enumerate(t, 1) if s.parity() == -1]


def an_product(t):
    """Product monodromy (s_i x t_i) on {1..n} x {1,2}, t_i the sheet swap iff s_i is odd."""
    sigma = tuple(t)
    n = sigma[0].degree
    odd = odd_positions(sigma)
    if len(odd) != 2:
        raise ValueError(f"expected exactly two odd entries, found positions {odd}")
    out = []
    for i, s in enumerate(sigma, 1):
        swap = i in odd
        img = [0] * (2 * n)
        for sheet in (1, 2):
            target = (2 if sheet == 1 else 1) if swap else sheet
            for k in range(1, n + 1):
                img[sheet_point(k, sheet, n) - 1] = sheet_point(s(k), target, n)
        out.append(Permutation(img))
    return tuple(out)


def quadratic_branch_points(n):
    """Branch points z_i over which the quadratic (sign) subcover ramifies."""
    from .nielsen import make_class

    t = make_class(n, ClassLabel("A", n // 2 - 1))
    return [f"z_{i}" for i in odd_positions(t)]


@dataclass
class AnLiftReport:
    n: int
    lifted: tuple
    odd_positions: list
    product_is_identity: bool
    order: Optional[int]
    transitive: Optional[bool]
    all_even: bool
    verdict: DescentVerdict

    def to_json(self):
        return {
            "n": self.n,
            "degree": 2 * self.n,
            "tuple": [str(p) for p in self.lifted],
            "odd_positions": self.odd_positions,
            "product_is_identity": self.product_is_identity,
            "group_order": self.order,
            "transitive": self.transitive,
            "all_even": self.all_even,
            "descent": self.verdict.to_json(),
        }


def an_lift_report(t, with_order=True):
    lifted = an_product(t)
    p = lifted[0] * lifted[1] * lifted[2] * lifted[3]
    info = group_order(list(lifted)) if with_order else None
    return AnLiftReport(
        n=t[0].degree,
        lifted=lifted,
        odd_positions=odd_positions(t),
        product_is_identity=p.is_identity(),
        order=info.order if info else None,
        transitive=info.is_transitive if info else None,
        all_even=all(x.parity() == 1 for x in lifted),
        verdict=descent_check(lifted),
    )


__all__ = [
    "AnLiftReport",
    "DescentVerdict",
    "NielsenTuple",
    "an_lift_report",
    "an_product",
    "descent_check",
    "find_totally_real_classes",
    "odd_positions",
    "quadratic_branch_points",
    "sheet_point",
]
