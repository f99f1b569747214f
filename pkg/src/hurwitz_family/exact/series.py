"""Truncated power series over the rationals.

``TruncatedSeries`` is the user-facing value type. The module-level list
helpers (``mul_trunc`` and friends) work on plain coefficient lists and are
what the Newton engine uses in its inner loops.
"""
from ..errors import NonUnitInverse
from .poly import Poly
from .rational import ONE, ZERO, Q, Rational, to_str


def mul_trunc(a, b, n):
    """Product of two coefficient lists modulo var^n."""
    out = [ZERO] * n
    lb = len(b)
    for i in range(min(len(a), n)):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(min(lb, n - i)):
            out[i + j] += ai * b[j]
    return out


def add_into(acc, a, shift=0, scale=None):
    """acc[k + shift] += scale * a[k] in place, respecting len(acc)."""
    n = len(acc)
    for k in range(min(len(a), n - shift)):
        c = a[k]
        if c == 0:
            continue
        acc[k + shift] += c if scale is None else scale * c


def inv_trunc(a, n):
    """Inverse of a unit series modulo var^n (Newton iteration on precision)."""
    if not a or a[0] == 0:
        raise NonUnitInverse("series with zero constant term is not invertible")
    out = [ONE / a[0]]
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        # out <- out * (2 - a*out)
        e = mul_trunc(a, out, prec)
        e = [-c for c in e]
        e[0] += 2
        out = mul_trunc(out, e, prec)
    return out + [ZERO] * (n - len(out))


def valuation(a):
    for k, c in enumerate(a):
        if c != 0:
            return k
    return None


class TruncatedSeries:
    """Element of Q[[var]]/(var^precision); immutable."""

    __slots__ = ("coeffs", "precision", "var")

    def __init__(self, coeffs, precision, var="mu"):
        cs = [Q(c) for c in list(coeffs)[:precision]]
        cs += [ZERO] * (precision - len(cs))
        self.coeffs = tuple(cs)
        self.precision = precision
        self.var = var

    @classmethod
    def _raw(cls, coeffs, precision, var):
        s = object.__new__(cls)
        s.coeffs = tuple(coeffs)
        s.precision = precision
        s.var = var
        return s

    @classmethod
    def gen(cls, precision, var="mu"):
        return cls([0, 1], precision, var)

    @classmethod
    def const(cls, c, precision, var="mu"):
        return cls([c], precision, var)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.precision

    def __repr__(self):
        return f"TruncatedSeries({[to_str(c) for c in self.coeffs]}, precision={self.precision})"

    def __str__(self):
        terms = [f"{to_str(c)}*{self.var}^{k}" for k, c in enumerate(self.coeffs) if c != 0]
        return (" + ".join(terms) or "0") + f" + O({self.var}^{self.precision})"

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.precision, other.precision)
            return self.coeffs[:n] == other.coeffs[:n]
        if isinstance(other, (int, Rational)):
            return self == TruncatedSeries.const(other, self.precision, self.var)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def valuation(self):
        return valuation(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, Poly):
            return TruncatedSeries(other.coeffs, self.precision, self.var)
        return TruncatedSeries.const(other, self.precision, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.precision, other.precision)
        return TruncatedSeries._raw([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw([-c for c in self.coeffs], self.precision, self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = Q(other)
            return TruncatedSeries._raw([c * x for x in self.coeffs], self.precision, self.var)
        other = self._coerce(other)
        n = min(self.precision, other.precision)
        return TruncatedSeries._raw(mul_trunc(self.coeffs, other.coeffs, n), n, self.var)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = TruncatedSeries.const(1, self.precision, self.var)
        for _ in range(e):
            out = out * self
        return out

    def invert(self):
        return TruncatedSeries._raw(inv_trunc(self.coeffs, self.precision), self.precision, self.var)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (ONE / Q(other))
        return self * self._coerce(other).invert()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.invert()

    def compose(self, inner):
        """self(inner); inner must have zero constant term."""
        inner = self._coerce(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs an inner series without constant term")
        n = min(self.precision, inner.precision)
        acc = [ZERO] * n
        for c in reversed(self.coeffs[:n]):
            acc = mul_trunc(acc, inner.coeffs, n)
            acc[0] += c
        return TruncatedSeries._raw(acc, n, self.var)

    def truncate(self, precision):
        return TruncatedSeries._raw(self.coeffs[:precision], min(precision, self.precision), self.var)

    def to_json(self):
        return {"precision": self.precision, "coefficients": [to_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data, var="mu"):
        return cls([Q(c) for c in data["coefficients"]], data["precision"], var)


def eval_poly_at_series(coeffs, x):
    """Evaluate a polynomial (Poly or list of rationals/series) at a series by Horner."""
    if isinstance(coeffs, Poly):
        coeffs = coeffs.coeffs
    acc = TruncatedSeries.const(0, x.precision, x.var)
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc
