"""Real-root counting with Sturm chains."""
from ..errors import ZeroPolynomial
from .poly import Poly
from .rational import Q

INF = float("inf")


def sturm_chain(p):
    """Signed remainder sequence p, p', -rem(p, p'), ... (primitive-scaled)."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        r = chain[-2].divmod(chain[-1])[1]
        if r.is_zero():
            break
        # positive rescaling keeps signs and stops coefficient swell
        r = -Poly(r.primitive_integer(), r.var).scale(1 if r.leading > 0 else -1)
        chain.append(r)
    return [c for c in chain if not c.is_zero()]


def _sign(x):
    return (x > 0) - (x < 0)


def _signs_at(chain, x):
    if x == INF:
        return [_sign(c.leading) for c in chain]
    if x == -INF:
        return [_sign(c.leading) * (-1 if c.degree % 2 else 1) for c in chain]
    x = Q(x)
    return [_sign(c(x)) for c in chain]


def sign_variations(signs):
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sturm_count(p, a=-INF, b=INF):
    """Number of distinct real roots of p in (a, b]; ``a``/``b`` may be -inf/+inf."""
    if p.is_zero():
        raise ZeroPolynomial("real roots of the zero polynomial are not finite")
    if p.degree == 0:
        return 0
    sf = p.squarefree_part()
    chain = sturm_chain(sf)
    return sign_variations(_signs_at(chain, a)) - sign_variations(_signs_at(chain, b))
