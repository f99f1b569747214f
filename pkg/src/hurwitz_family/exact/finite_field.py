"""Distinct-degree factorization over prime fields.

Polynomials here are plain lists of ints, lowest degree first, reduced mod p.
Only the degree pattern is needed (a Frobenius cycle type), so there is no
equal-degree splitting.
"""
from ..errors import BadReductionPrime
from .poly import Poly


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _reduce(a, p):
    return _trim([c % p for c in a])


def _sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _mulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _divmod(_reduce(out, p), f, p)[1]


def _divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(a) - 1 < db:
        return [], a
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] % p
        if c == 0:
            continue
        c = c * inv % p
        q[k - db] = c
        for j in range(db + 1):
            a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return _trim(q), _trim(a[:db])


def _gcd(a, b, p):
    while b:
        a, b = b, _divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _powmod(base, e, f, p):
    out = [1]
    while e:
        if e & 1:
            out = _mulmod(out, base, f, p)
        base = _mulmod(base, base, f, p)
        e >>= 1
    return out


def _derivative(a, p):
    return _trim([(k * c) % p for k, c in enumerate(a)][1:])


def ddf_degrees(f, p):
    """Degree multiset of the irreducible factors of the monic squarefree f mod p."""
    degrees = []
    h = [0, 1]
    d = 0
    f = list(f)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, f, p)
        g = _gcd(f, _sub(h, [0, 1], p), p)
        if len(g) > 1:
            degrees += [d] * ((len(g) - 1) // d)
            f = _divmod(f, g, p)[0]
            h = _divmod(h, f, p)[1]
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return sorted(degrees, reverse=True)


def modp_factor_degrees(poly, prime):
    """Degree pattern of the factorization of ``poly`` (rational coefficients) mod ``prime``.

    Raises BadReductionPrime when the prime divides the leading coefficient of
    the primitive integer form or the reduction is not squarefree.
    """
    if isinstance(poly, Poly):
        ints = poly.primitive_integer()
    else:
        ints = list(poly)
    f = _reduce(ints, prime)
    if len(f) != len(ints):
        raise BadReductionPrime(f"{prime} divides the leading coefficient")
    inv = pow(f[-1], -1, prime)
    f = [c * inv % prime for c in f]
    if len(f) > 2 and len(_gcd(f, _derivative(f, prime), prime)) > 1:
        raise BadReductionPrime(f"reduction mod {prime} is not squarefree")
    return ddf_degrees(f, prime)
