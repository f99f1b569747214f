"""Closed forms of the degree-6 member of the family, typed in by hand.

Used as ground truth: the pipeline must reproduce every entry exactly.
"""
from .exact import Poly, Q, RationalFunction

_T = Poly.gen("T")


def _rf(num, den=1):
    return RationalFunction(Poly([Q(c) for c in num], "T"), Poly([Q(c) for c in (den if isinstance(den, list) else [den])], "T"))


def _lin(a):
    """T + a."""
    return _T + Q(a)


def degree6_closed_forms():
    """Slot name -> rational function in T, plus H and H - 1 in factored form."""
    H = RationalFunction(
        _lin(8) * _lin("13/5") ** 2 * _lin("8/5") ** 3,
        (_lin("8/3") * _lin("56/25") ** 3).scale(Q(-15)),
    )
    H_minus_1 = RationalFunction(_lin(2) * _lin("16/5") ** 5, (_lin("8/3") * _lin("56/25") ** 3).scale(Q(-15)))
    gamma = RationalFunction(((_T.scale(Q(25)) + 56) ** 3).scale(Q(3)), (_T.scale(Q(3)) + 8).scale(Q(256)))
    return {
        # S_0 = (X^3 + alpha_1 X + alpha_0)^2
        "alpha_0": _rf([4096, 6720, 3600, 625], [256, 96]),
        "alpha_1": _rf([120, 75], 16),
        "alpha_2": _rf([0]),
        # S_inf = gamma (X^2 + T X + beta_0)
        "beta_0": _rf([128, 192, 120, 25], [96, 36]),
        "beta_1": _rf([0, 1]),
        "gamma": gamma,
        # S_1 = (X - 1)^3 (X^3 + 3 X^2 + delta_1 X + delta_0)
        "delta_0": _rf([11136, 12960, 4950, 625], [128, 48]),
        "delta_1": _rf([168, 75], 8),
        "delta_2": _rf([3]),
        # S_lambda = (X^2 + quad_1 X + quad_0)(X^2 + eta_1 X + eta_0)^2
        "quad_0": _rf([2176, 2720, 1050, 125], [128, 48]),
        "quad_1": _rf([-8, -5], 2),
        "eta_0": _rf([320, 424, 180, 25], [64, 24]),
        "eta_1": _rf([8, 5], 4),
        "lambda": H,
        "lambda_minus_1": H_minus_1,
    }


def degree6_identity_sides():
    """Both sides of (T+8)(T+13/5)^2(T+8/5)^3 + 15(T+8/3)(T+56/25)^3 = (T+2)(T+16/5)^5."""
    lhs = _lin(8) * _lin("13/5") ** 2 * _lin("8/5") ** 3 + (_lin("8/3") * _lin("56/25") ** 3).scale(Q(15))
    rhs = _lin(2) * _lin("16/5") ** 5
    return lhs, rhs


def compare_with_closed_forms(model):
    """{slot: bool} for every closed form, and lambda - 1 against its factored display."""
    ref = degree6_closed_forms()
    values = dict(model.slots())
    out = {k: values[k] == v for k, v in ref.items() if k in values}
    out["lambda_minus_1"] = (values["lambda"] - 1) == ref["lambda_minus_1"]
    return out
