"""Permutations of {1..N} and small-degree group recognition.

Product convention: ``p * q`` applies ``q`` first, then ``p``. With it the
relation ``s1*s2*s3*s4 == identity`` of a branch cycle description and the
dihedral decomposition ``c == sigma*tau`` read literally.
"""
import math
import re
from dataclasses import dataclass
from functools import total_ordering

from .errors import DegreeMismatch, DegreeTooLarge

#: largest degree accepted by the stabilizer-chain code
MAX_DEGREE = 24

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@total_ordering
class Permutation:
    """Immutable bijection of {1..N}; ``images[k-1]`` is the image of k."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images):
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree):
        return cls._raw(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles, degree):
        img = list(range(1, degree + 1))
        seen = set()
        for cyc in cycles:
            cyc = [int(x) for x in cyc]
            for x in cyc:
                if not 1 <= x <= degree or x in seen:
                    raise ValueError(f"bad cycle {cyc} for degree {degree}")
                seen.add(x)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls._raw(tuple(img))

    @classmethod
    def cycle(cls, *points, degree):
        return cls.from_cycles([points], degree)

    @classmethod
    def parse(cls, text, degree):
        """Parse cycle notation such as "(1,2,3)(4,5)"; "()" is the identity."""
        text = text.strip()
        cycles = []
        for body in _CYCLE_RE.findall(text):
            body = body.strip()
            if body:
                cycles.append([int(x) for x in re.split(r"[,\s]+", body) if x])
        if _CYCLE_RE.sub("", text).strip():
            raise ValueError(f"cannot parse cycle notation {text!r}")
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x - 1]

    def _check(self, other):
        if not isinstance(other, Permutation):
            raise TypeError(f"expected a Permutation, got {type(other).__name__}")
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees differ: {self.degree} vs {other.degree}")

    def __mul__(self, other):
        self._check(other)
        a = self.images
        return Permutation._raw(tuple(a[j - 1] for j in other.images))

    def inverse(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation._raw(tuple(inv))

    def __invert__(self):
        return self.inverse()

    def __pow__(self, e):
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        out = Permutation.identity(self.degree)
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images, 1))

    def support(self):
        return [i for i, j in enumerate(self.images, 1) if i != j]

    def cycles(self, include_fixed=False):
        """Cycles as tuples, each starting from its smallest point, sorted by that point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self):
        """Partition of N by cycle lengths, fixed points included, largest first."""
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def parity(self):
        """+1 for even, -1 for odd permutations."""
        return -1 if (self.degree - len(self.cycles(include_fixed=True))) % 2 else 1

    def order(self):
        return math.lcm(*self.cycle_type()) if self.degree else 1

    def conjugate(self, g):
        """g * self * g^-1."""
        return conjugate(self, g)

    def __str__(self):
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cs)

    def __repr__(self):
        return f"Permutation.parse({str(self)!r}, degree={self.degree})"

    def to_json(self):
        return list(self.images)


def compose(p, q):
    """Apply q first, then p."""
    return p * q


def cycle_type(p):
    return p.cycle_type()


def conjugate(p, g):
    """g p g^-1: relabel every point x of p's cycles by g(x)."""
    p._check(g)
    img = [0] * p.degree
    for x in range(1, p.degree + 1):
        img[g(x) - 1] = g(p(x))
    return Permutation._raw(tuple(img))


def orbit(gens, point):
    seen = {point}
    todo = [point]
    while todo:
        x = todo.pop()
        for g in gens:
            y = g(x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def is_transitive(gens):
    return len(orbit(gens, 1)) == gens[0].degree


def _minimal_block(gens, a, b, degree):
    parent = list(range(degree + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parent[find(b)] = find(a)
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for g in gens:
            gx, gy = find(g(x)), find(g(y))
            if gx != gy:
                parent[gy] = gx
                queue.append((g(x), g(y)))
    root = find(a)
    return [x for x in range(1, degree + 1) if find(x) == root]


def is_primitive(gens):
    """Primitivity of a transitive group (minimal-block test on each pair {1, k})."""
    n = gens[0].degree
    if not is_transitive(gens):
        return False
    return all(len(_minimal_block(gens, 1, k, n)) == n for k in range(2, n + 1))


def contains_symmetric_by_jordan(gens):
    """True when the generators are certified to generate S_N by Jordan's theorem.

    A primitive group containing a 3-cycle contains A_N; an odd generator then
    gives S_N. Returns False when this sufficient test does not apply.
    """
    n = gens[0].degree
    if n < 3 or not is_primitive(gens):
        return False
    has_three_cycle = any(g.cycle_type()[:2] == (3, 1) or g.cycle_type() == (3,) for g in gens)
    has_odd = any(g.parity() == -1 for g in gens)
    return has_three_cycle and has_odd


# --------------------------------------------------------------------------
# Schreier-Sims


class _Level:
    __slots__ = ("base", "gens", "trans")

    def __init__(self, base, degree):
        self.base = base
        self.gens = []
        self.trans = {base: Permutation.identity(degree)}

    def recompute_orbit(self):
        todo = list(self.trans)
        while todo:
            x = todo.pop()
            ux = self.trans[x]
            for g in self.gens:
                y = g(x)
                if y not in self.trans:
                    self.trans[y] = g * ux
                    todo.append(y)


def _strip(g, levels):
    for i, lev in enumerate(levels):
        beta = g(lev.base)
        u = lev.trans.get(beta)
        if u is None:
            return g, i
        g = u.inverse() * g
    return g, len(levels)


def stabilizer_chain(gens):
    """Deterministic Schreier-Sims; returns the list of levels (base point, transversal)."""
    degree = gens[0].degree
    levels = []
    gens = [g for g in gens if not g.is_identity()]
    if not gens:
        return levels
    for g in gens:
        if not any(g(lev.base) != lev.base for lev in levels):
            levels.append(_Level(g.support()[0], degree))
    for i, lev in enumerate(levels):
        bases = [levels[j].base for j in range(i)]
        lev.gens = [g for g in gens if all(g(b) == b for b in bases)]
        lev.recompute_orbit()
    i = len(levels) - 1
    while i >= 0:
        lev = levels[i]
        clean = True
        for beta, ub in list(lev.trans.items()):
            for x in list(lev.gens):
                gamma = x(beta)
                h = lev.trans[gamma].inverse() * x * ub
                if h.is_identity():
                    continue
                res, j = _strip(h, levels[i + 1 :])
                j += i + 1
                if j < len(levels) or not res.is_identity():
                    clean = False
                    if j == len(levels):
                        levels.append(_Level(res.support()[0], degree))
                    for lvl in range(i + 1, j + 1):
                        levels[lvl].gens.append(res)
                        levels[lvl].recompute_orbit()
                    i = j
                    break
            if not clean:
                break
        if clean:
            i -= 1
    return levels


@dataclass(frozen=True)
class GroupInfo:
    order: int
    is_transitive: bool
    is_symmetric: bool
    is_alternating: bool


def group_order(gens, max_degree=MAX_DEGREE):
    """Exact order of <gens> by a stabilizer chain, with S_N / A_N recognition."""
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].degree
    for g in gens:
        gens[0]._check(g)
    if n > max_degree:
        raise DegreeTooLarge(f"degree {n} exceeds the configured bound {max_degree}")
    order = 1
    for lev in stabilizer_chain(list(gens)):
        order *= len(lev.trans)
    full = math.factorial(n)
    all_even = all(g.parity() == 1 for g in gens)
    return GroupInfo(
        order=order,
        is_transitive=is_transitive(gens),
        is_symmetric=order == full,
        is_alternating=n > 1 and order == full // 2 and all_even,
    )
