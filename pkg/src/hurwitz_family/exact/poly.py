"""Dense univariate polynomials with exact rational coefficients."""
from gmpy2 import gcd as igcd

from ..errors import DivisionByZeroPoly
from .rational import ONE, ZERO, Q, Rational, lcm_of_denominators, to_str

#: degree reported for the zero polynomial
ZERO_DEGREE = -1


def _trim(coeffs):
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class Poly:
    """Immutable polynomial, coefficients stored lowest degree first.

    Polynomials of degree <= 0 are compatible with every variable name, so
    constants can be mixed freely into arithmetic.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="X"):
        self.coeffs = _trim([Q(c) for c in coeffs])
        self.var = var

    # construction ---------------------------------------------------------
    @classmethod
    def gen(cls, var="X"):
        return cls((0, 1), var)

    @classmethod
    def const(cls, c, var="X"):
        return cls((c,), var)

    @classmethod
    def from_roots(cls, roots, var="X"):
        out = cls((1,), var)
        for r in roots:
            out = out * cls((-Q(r), 1), var)
        return out

    @classmethod
    def _raw(cls, coeffs, var):
        p = object.__new__(cls)
        p.coeffs = _trim(coeffs)
        p.var = var
        return p

    # basic properties ------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs and (self.degree <= 0 or self.var == other.var)
        if isinstance(other, (int, Rational)):
            return self.coeffs == _trim([Q(other)])
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.var if self.degree > 0 else None))

    def __repr__(self):
        return f"Poly({[to_str(c) for c in self.coeffs]}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if k == 0:
                body = to_str(a)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                body = mono if a == 1 else f"{to_str(a)}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic ------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.degree > 0 and self.degree > 0 and other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        return Poly._raw((Q(other),), self.var)

    def _var_with(self, other):
        return self.var if self.degree > 0 or other.degree <= 0 else other.var

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out, self._var_with(other))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw((), self._var_with(other))
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly._raw(out, self._var_with(other))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly._raw((ONE,), self.var)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c):
        c = Q(c)
        return Poly._raw([c * x for x in self.coeffs], self.var)

    def divmod(self, other):
        """Euclidean division; returns (q, r) with deg r < deg other."""
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        r = list(self.coeffs)
        db = other.degree
        inv_lead = ONE / other.leading
        if len(r) - 1 < db:
            return Poly._raw((), self.var), self
        q = [ZERO] * (len(r) - db)
        bc = other.coeffs
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c == 0:
                continue
            c = c * inv_lead
            q[k - db] = c
            off = k - db
            for j in range(db + 1):
                r[off + j] -= c * bc[j]
        var = self._var_with(other)
        return Poly._raw(q, var), Poly._raw(r[:db], var)

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(ONE / self.leading)

    def gcd(self, other):
        """Monic gcd (zero if both are zero)."""
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def derivative(self):
        return Poly._raw([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a rational, a Poly or any ring element."""
        if isinstance(x, (int, str)):
            x = Q(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner):
        out = Poly._raw((), inner.var)
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def taylor_shift(self, a):
        """p(X + a)."""
        return self.compose(Poly((Q(a), 1), self.var))

    def with_var(self, var):
        return Poly._raw(self.coeffs, var)

    def squarefree_part(self):
        if self.degree <= 0:
            return self.monic()
        return self.exact_div(self.gcd(self.derivative())).monic()

    def multiplicity_at(self, r):
        """Order of vanishing at the rational point r."""
        if self.is_zero():
            raise ValueError("zero polynomial vanishes to infinite order")
        lin = Poly((-Q(r), 1), self.var)
        p, m = self, 0
        while True:
            q, rem = p.divmod(lin)
            if not rem.is_zero():
                return m
            p, m = q, m + 1

    def primitive_integer(self):
        """Integer coefficient list of the primitive part (positive leading coefficient)."""
        if self.is_zero():
            return []
        den = lcm_of_denominators(self.coeffs)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = igcd(g, c)
        ints = [c // int(g) for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return ints

    def to_json(self):
        return [to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data, var="X"):
        return cls([Q(c) for c in data], var)


def chebyshev_T(n, var="u"):
    """Chebyshev polynomial of the first kind, by the three-term recurrence."""
    if n < 0:
        raise ValueError("order must be non-negative")
    t0 = Poly((1,), var)
    if n == 0:
        return t0
    t1 = Poly((0, 1), var)
    two_u = Poly((0, 2), var)
    for _ in range(n - 1):
        t0, t1 = t1, two_u * t1 - t0
    return t1
