"""Rational functions in one variable, kept reduced with a monic denominator."""
from .poly import Poly
from .rational import ONE, Q, Rational, to_str


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var="T"):
        if not isinstance(num, Poly):
            num = Poly((Q(num),), var)
        if den is None:
            den = Poly((1,), num.var if num.degree > 0 else var)
        elif not isinstance(den, Poly):
            den = Poly((Q(den),), var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lead = den.leading
        v = num.var if num.degree > 0 else (den.var if den.degree > 0 else var)
        self.num = num.scale(ONE / lead).with_var(v)
        self.den = den.scale(ONE / lead).with_var(v)

    @property
    def var(self):
        return self.num.var

    @classmethod
    def gen(cls, var="T"):
        return cls(Poly.gen(var))

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        return RationalFunction(Poly((Q(other),), self.var))

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return RationalFunction(self.num.scale(Q(other)), self.den)
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e):
        if e < 0:
            return RationalFunction(self.den ** (-e), self.num ** (-e))
        return RationalFunction(self.num**e, self.den**e)

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, Poly, int, Rational)):
            o = self._coerce(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree <= 0

    def __call__(self, t):
        t = Q(t)
        d = self.den(t)
        if d == 0:
            raise ZeroDivisionError(f"pole at {to_str(t)}")
        return self.num(t) / d

    @property
    def degree(self):
        """Degree as a map P^1 -> P^1."""
        return max(self.num.degree, self.den.degree)

    def __repr__(self):
        return f"RationalFunction({self.num!s}, {self.den!s})"

    def __str__(self):
        if self.den.degree == 0:
            return f"{self.num}"
        return f"({self.num})/({self.den})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data, var="T"):
        return cls(Poly.from_json(data["num"], var), Poly.from_json(data["den"], var))
