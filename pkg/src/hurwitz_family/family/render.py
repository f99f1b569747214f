"""JSON and LaTeX forms of a reconstructed model."""
from ..exact import Poly, Q, RationalFunction, to_str
from ..exact.rational import lcm_of_denominators
from .model import NormalizedModel

SCHEMA = "hurwitz-family/1"


def model_to_json(model):
    """Named slots plus the factored fibers, every coefficient as {num, den} in T."""
    slots = {k: v.to_json() for k, v in model.slots()}
    return {
        "n": model.n,
        "generator": model.generator,
        "slots": slots,
        "factored": {
            "S_0": {"square_of": ["alpha_%d" % i for i in range(model.n // 2)] + [1]},
            "S_1": {"cube_at": 1, "times": ["delta_%d" % k for k in range(model.n - 3)] + [1]},
            "S_lambda": {
                "quadratic": ["quad_0", "quad_1", 1],
                "square_of": ["eta_%d" % l for l in range(model.n // 2 - 1)] + [1],
            },
            "S_inf": {"scale": "gamma", "quadratic": ["beta_0", "beta_1", 1]},
        },
    }


def model_from_json(data):
    values = {k: RationalFunction.from_json(v) for k, v in data["slots"].items()}
    return NormalizedModel.from_slots(data["n"], values, generator=data.get("generator", "beta_1"))


# ---------------------------------------------------------------- LaTeX


def _int_poly(p):
    """(c, P) with p = c * P, P integer primitive with positive leading coefficient."""
    if p.is_zero():
        return Q(0), p
    den = lcm_of_denominators(p.coeffs)
    ints = [int(c * den) for c in p.coeffs]
    from math import gcd

    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return Q(g) / den, Poly([Q(c // g) for c in ints], p.var)


def latex_poly(p, var=None):
    var = var or p.var
    terms = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{{{k}}}")
        if a == 1 and mono:
            body = mono
        elif a.denominator == 1:
            body = f"{a.numerator}{mono}"
        else:
            body = f"\\frac{{{a.numerator}}}{{{a.denominator}}}{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def latex_ratfunc(f):
    if f.den.degree == 0:
        c, pn = _int_poly(f.num.scale(1 / f.den[0]))
        if c.denominator == 1:
            return latex_poly(pn.scale(c))
        return f"\\frac{{{latex_poly(pn.scale(Q(c.numerator)))}}}{{{c.denominator}}}"
    cn, pn = _int_poly(f.num)
    cd, pd = _int_poly(f.den)
    r = cn / cd
    # integer numerator scale over integer denominator scale
    num = pn.scale(Q(r.numerator))
    den = pd.scale(Q(r.denominator))
    return f"\\frac{{{latex_poly(num)}}}{{{latex_poly(den)}}}"


def _latex_rational(a):
    return str(a.numerator) if a.denominator == 1 else f"\\frac{{{a.numerator}}}{{{a.denominator}}}"


def _latex_coeff_poly(coeffs, var="X"):
    """Monic polynomial in X (last entry is the leading 1) with coefficients in Q(T)."""
    d = len(coeffs) - 1
    parts = [f"{var}^{{{d}}}" if d > 1 else var]
    for k in range(d - 1, -1, -1):
        c = coeffs[k]
        if not isinstance(c, RationalFunction):
            c = RationalFunction(Q(c))
        if c.is_zero():
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{{{k}}}")
        negative = c.num.leading < 0
        if negative:
            c = -c
        sign = "-" if negative else "+"
        if c.den.degree == 0 and c.num.degree <= 0:
            a = c.num[0] / c.den[0]
            body = "" if a == 1 and mono else _latex_rational(a)
        elif c.den.degree == 0 and sum(1 for x in c.num.coeffs if x != 0) > 1:
            body = latex_ratfunc(c)
            if not body.startswith("\\frac"):
                body = f"\\left({body}\\right)"
        else:
            body = latex_ratfunc(c)
        parts.append(f"{sign} {body}{mono}")
    return " ".join(parts)


def _power_factors(p):
    """[(k, f_k)] with p = lc * prod f_k^k, f_k squarefree and coprime (Yun)."""
    out = []
    f = p.monic()
    g = f.gcd(f.derivative())
    w = f.exact_div(g)
    k = 1
    while w.degree > 0:
        y = w.gcd(g)
        z = w.exact_div(y)
        if z.degree > 0:
            out.append((k, z))
        w, g = y, g.exact_div(y)
        k += 1
    return out


def latex_factored(f):
    """A rational function as constant times powers of primitive integer polynomials."""

    def side(p):
        const = p.leading
        body = ""
        for k, z in _power_factors(p):
            c, zi = _int_poly(z)
            const = const * c ** k
            txt = latex_poly(zi)
            if zi.degree >= 1 and sum(1 for x in zi.coeffs if x != 0) > 1:
                txt = f"({txt})"
            body += txt + (f"^{{{k}}}" if k > 1 else "")
        return const, body

    cn, bn = side(f.num)
    cd, bd = side(f.den)
    r = cn / cd
    num = (_latex_rational(Q(abs(r.numerator))) if abs(r.numerator) != 1 or not bn else "") + bn
    den = (str(r.denominator) if r.denominator != 1 or not bd else "") + bd
    sign = "-" if r < 0 else ""
    return f"{sign}\\frac{{{num}}}{{{den}}}"


def model_to_latex(model):
    denom = f"{latex_factored(model.gamma)}\\left({_latex_coeff_poly([model.beta[0], model.beta[1], 1])}\\right)"
    s0 = _latex_coeff_poly(model.inner_s0())
    s1 = _latex_coeff_poly(model.inner_s1())
    quad = _latex_coeff_poly(model.quadratic_lam())
    eta = _latex_coeff_poly(model.inner_slam())
    n = model.n
    lines = [
        f"S_{{{n}}}(T, X) &= \\frac{{\\left({s0}\\right)^2}}{{{denom}}} \\\\",
        f"S_{{{n}}}(T, X) - 1 &= \\frac{{(X-1)^3\\left({s1}\\right)}}{{{denom}}} \\\\",
        f"S_{{{n}}}(T, X) - H_{{{n}}}(T) &= \\frac{{\\left({quad}\\right)\\left({eta}\\right)^2}}{{{denom}}} \\\\",
        f"H_{{{n}}}(T) &= {latex_factored(model.lam)} \\\\",
        f"H_{{{n}}}(T) - 1 &= {latex_factored(model.lam - 1)}",
    ]
    return "\\begin{aligned}\n" + "\n".join(lines) + "\n\\end{aligned}"
