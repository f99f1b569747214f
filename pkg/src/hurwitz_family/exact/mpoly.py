"""Sparse multivariate polynomials over the rationals.

Just enough to write down a polynomial system once, differentiate it and
evaluate it at truncated power series.
"""
from .rational import ZERO, Q, Rational, to_str
from .series import mul_trunc


class MPoly:
    """Polynomial in the fixed variable tuple ``names``; terms map exponent
    tuples to nonzero rationals."""

    __slots__ = ("names", "terms")

    def __init__(self, names, terms=None):
        self.names = tuple(names)
        self.terms = {k: Q(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def var(cls, names, name):
        e = [0] * len(names)
        e[list(names).index(name)] = 1
        return cls(names, {tuple(e): 1})

    @classmethod
    def const(cls, names, c):
        return cls(names, {(0,) * len(names): c})

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.names != self.names:
                raise ValueError("variable tuples differ")
            return other
        return MPoly.const(self.names, Q(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return MPoly(self.names, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.names, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = Q(other)
            return MPoly(self.names, {k: c * v for k, v in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, ZERO) + v1 * v2
        return MPoly(self.names, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = MPoly.const(self.names, 1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.names == other.names and self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(k) for k in self.terms), default=-1)

    def variables(self):
        used = set()
        for k in self.terms:
            used.update(i for i, e in enumerate(k) if e)
        return [self.names[i] for i in sorted(used)]

    def diff(self, name):
        i = self.names.index(name)
        out = {}
        for k, v in self.terms.items():
            if k[i]:
                k2 = list(k)
                k2[i] -= 1
                out[tuple(k2)] = v * k[i]
        return MPoly(self.names, out)

    def subs(self, values):
        """Evaluate at rationals (dict name -> value); missing names must not occur."""
        total = ZERO
        for k, v in self.terms.items():
            term = v
            for i, e in enumerate(k):
                if e:
                    term *= Q(values[self.names[i]]) ** e
            total += term
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            mono = "*".join(
                (self.names[i] if e == 1 else f"{self.names[i]}^{e}") for i, e in enumerate(k) if e
            )
            c = self.terms[k]
            if not mono:
                parts.append(to_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{to_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


class SeriesEvaluator:
    """Evaluates MPolys in (unknowns..., mu) at series values for the unknowns.

    Products of unknown series are cached per call of ``reset``; the exponent
    of the series variable becomes a shift.
    """

    def __init__(self, names, series_var):
        self.names = tuple(names)
        self.mu_index = self.names.index(series_var)
        self.values = None
        self.prec = 0
        self.cache = {}

    def reset(self, values, prec):
        """values: list of coefficient lists, one per non-series variable in order."""
        self.values = values
        self.prec = prec
        self.cache = {}

    def _monomial(self, key):
        # key: exponent tuple with the mu exponent zeroed
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        idx = [i for i, e in enumerate(key) if e]
        if not idx:
            out = [ZERO] * self.prec
            if self.prec:
                out[0] = Q(1)
            self.cache[key] = out
            return out
        # peel one factor off the last variable
        i = idx[-1]
        rest = list(key)
        rest[i] -= 1
        rest = tuple(rest)
        vi = self._value(i)
        if not any(rest):
            out = list(vi[: self.prec]) + [ZERO] * (self.prec - len(vi))
        else:
            out = mul_trunc(self._monomial(rest), vi, self.prec)
        self.cache[key] = out
        return out

    def _value(self, i):
        j = i if i < self.mu_index else i - 1
        return self.values[j]

    def evaluate(self, p):
        out = [ZERO] * self.prec
        for k, c in p.terms.items():
            shift = k[self.mu_index]
            if shift >= self.prec:
                continue
            key = list(k)
            key[self.mu_index] = 0
            mono = self._monomial(tuple(key))
            for t in range(self.prec - shift):
                m = mono[t]
                if m != 0:
                    out[t + shift] += c * m
        return out
