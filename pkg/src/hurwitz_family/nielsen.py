"""Nielsen classes of type ((n-2), 3, 2^((n-2)/2), 2^(n/2)) and their braid monodromy.

Tuples are (s1, s2, s3, s4) with s1*s2*s3*s4 == identity. Braids act on the
right; a composite action reads left to right.
"""
import itertools
from dataclasses import dataclass

from .errors import BadIndex, DegreeTooLarge, IndexOutOfRange, OddCycleLength, PointNotInSupport
from .perm import MAX_DEGREE, Permutation, contains_symmetric_by_jordan, group_order, orbit

FAMILIES = ("A", "B", "C")


def _check_n(n, max_n=MAX_DEGREE):
    if n % 2 or n < 6:
        raise ValueError(f"n must be an even integer >= 6, got {n}")
    if n > max_n:
        raise DegreeTooLarge(f"n = {n} exceeds the bound {max_n}")


def class_types(n):
    """The four cycle types C1..C4 as sorted partitions of n."""
    return (
        (n - 2, 1, 1),
        (3,) + (1,) * (n - 3),
        (2,) * ((n - 2) // 2) + (1, 1),
        (2,) * (n // 2),
    )


@dataclass(frozen=True, order=True)
class ClassLabel:
    family: str
    index: int

    def __str__(self):
        return f"{self.family.lower()}_{self.index}"

    def to_json(self):
        return {"family": self.family, "index": self.index, "name": str(self)}

    @classmethod
    def parse(cls, text):
        text = text.strip().replace(":", "_")
        fam, _, idx = text.partition("_")
        return cls(fam.upper(), int(idx))


def label_range(n, family):
    return {"A": range(1, n // 2 + 1), "B": range(2, n // 2 + 1), "C": range(1, n // 2 - 1)}[family]


def all_labels(n):
    return [ClassLabel(f, i) for f in FAMILIES for i in label_range(n, f)]


@dataclass(frozen=True)
class NielsenTuple:
    """Four permutations of degree n with product one.

    ``make_class`` and friends only ever hand out tuples satisfying
    ``validate()``; braid images may have their classes permuted.
    """

    sigma: tuple

    def __post_init__(self):
        if len(self.sigma) != 4:
            raise ValueError("a Nielsen tuple has four entries")
        object.__setattr__(self, "sigma", tuple(self.sigma))

    @property
    def n(self):
        return self.sigma[0].degree

    def __getitem__(self, i):
        return self.sigma[i]

    def __iter__(self):
        return iter(self.sigma)

    def product(self):
        s1, s2, s3, s4 = self.sigma
        return s1 * s2 * s3 * s4

    def cycle_types(self):
        return tuple(s.cycle_type() for s in self.sigma)

    def generates_symmetric(self):
        gens = list(self.sigma)
        if contains_symmetric_by_jordan(gens):
            return True
        return group_order(gens, max_degree=max(MAX_DEGREE, self.n)).is_symmetric

    def validate(self):
        n = self.n
        if not self.product().is_identity():
            raise ValueError("product s1*s2*s3*s4 is not the identity")
        if self.cycle_types() != class_types(n):
            raise ValueError(f"cycle types {self.cycle_types()} differ from {class_types(n)}")
        if not self.generates_symmetric():
            raise ValueError("tuple does not generate the symmetric group")
        return self

    def conjugate_by(self, g):
        return NielsenTuple(tuple(s.conjugate(g) for s in self.sigma))

    def key(self):
        return tuple(s.images for s in self.sigma)

    def __str__(self):
        return "[" + ", ".join(str(s) for s in self.sigma) + "]"

    def to_json(self):
        return [str(s) for s in self.sigma]


# --------------------------------------------------------------------------
# dihedral decompositions


def lemma21_decompose(c, x):
    """Split an m-cycle c (m even) as c == sigma*tau.

    sigma = prod_{i=1..m/2} (c^(1-i)(x), c^i(x)) has m/2 transpositions and
    tau = prod_{j=1..m/2-1} (c^j(x), c^-j(x)) has m/2 - 1.
    """
    supp = c.support()
    m = len(supp)
    if sorted(c.cycle_type())[-1] != m:
        raise ValueError("expected a single cycle")
    if m % 2:
        raise OddCycleLength(f"cycle length {m} is odd")
    if x not in supp:
        raise PointNotInSupport(f"{x} is not moved by {c}")
    N = c.degree

    def cpow(k, y):
        return (c**k)(y)

    sigma = Permutation.from_cycles([(cpow(1 - i, x), cpow(i, x)) for i in range(1, m // 2 + 1)], N)
    tau = Permutation.from_cycles([(cpow(j, x), cpow(-j, x)) for j in range(1, m // 2)], N)
    return sigma, tau


def make_class(n, label):
    """Canonical representative a_i / b_i / c_i of the table of Nielsen classes."""
    _check_n(n, max_n=10**6)
    if isinstance(label, str):
        label = ClassLabel.parse(label)
    if label.family not in FAMILIES or label.index not in label_range(n, label.family):
        raise IndexOutOfRange(f"{label} is out of range for n = {n}")
    i = label.index
    s1 = Permutation.cycle(*range(1, n - 1), degree=n)
    if label.family == "A":
        s2 = Permutation.cycle(n - 2, n - 1, n, degree=n)
        sig, tau = lemma21_decompose(Permutation.cycle(*range(1, n + 1), degree=n), i)
        t = (s1, s2, tau, sig)
    elif label.family == "B":
        s2 = Permutation.cycle(1, n - 2, n - 1, degree=n)
        nu = Permutation.cycle(1, n, degree=n)
        sig, tau = lemma21_decompose(Permutation.cycle(*range(2, n), degree=n), i)
        t = (s1, s2, nu * tau, nu * sig)
    else:
        s2 = Permutation.cycle(n - 2, n - 3, n - 4, degree=n)
        nu = Permutation.from_cycles([(n, n - 2), (n - 1, n - 3)], n)
        sig, tau = lemma21_decompose(Permutation.cycle(*range(1, n - 3), degree=n), i)
        t = (s1, s2, nu * tau, nu * sig)
    return NielsenTuple(t).validate()


def enumerate_sni(n):
    """All classes, in the order A_1.., B_2.., C_1.. ; 3(n/2 - 1) of them."""
    _check_n(n)
    return [(lab, make_class(n, lab)) for lab in all_labels(n)]


# --------------------------------------------------------------------------
# canonical forms


def _long_cycle_index(sigma):
    n = sigma[0].degree
    for k, s in enumerate(sigma):
        if s.cycle_type() == (n - 2, 1, 1):
            return k
    raise ValueError("no (n-2)-cycle in the tuple")


def canonicalize(t):
    """Representative with the (n-2)-cycle equal to (1,...,n-2), lexicographically
    minimal over the centralizer of that cycle (order 2(n-2))."""
    sigma = tuple(t)
    n = sigma[0].degree
    k = _long_cycle_index(sigma)
    long_cycle = max(sigma[k].cycles(), key=len)
    fixed = sorted(set(range(1, n + 1)) - set(long_cycle))
    img = [0] * n
    for pos, x in enumerate(long_cycle, 1):
        img[x - 1] = pos
    img[fixed[0] - 1] = n - 1
    img[fixed[1] - 1] = n
    g = Permutation(img)
    c = Permutation.cycle(*range(1, n - 1), degree=n)
    swap = Permutation.cycle(n - 1, n, degree=n)
    best = None
    for e in range(n - 2):
        ce = c**e
        for z in (ce, ce * swap):
            h = z * g
            cand = tuple(s.conjugate(h) for s in sigma)
            key = tuple(s.images for s in cand)
            if best is None or key < best[0]:
                best = (key, cand)
    return NielsenTuple(best[1])


# --------------------------------------------------------------------------
# brute-force oracle


def _three_cycles(n):
    for a, b, c in itertools.combinations(range(1, n + 1), 3):
        yield Permutation.cycle(a, b, c, degree=n)
        yield Permutation.cycle(a, c, b, degree=n)


def _matchings(points):
    if not points:
        yield []
        return
    a = points[0]
    for j in range(1, len(points)):
        rest = points[1:j] + points[j + 1 :]
        for m in _matchings(rest):
            yield [(a, points[j])] + m


def _involutions_with_two_fixed(n):
    for fixed in itertools.combinations(range(1, n + 1), 2):
        rest = [x for x in range(1, n + 1) if x not in fixed]
        for m in _matchings(rest):
            yield Permutation.from_cycles(m, n)


@dataclass
class BruteForceResult:
    count: int
    representatives: list
    tuples_examined: int


def brute_force_sni(n, require_generation=True):
    """Independent enumeration: fix s1, run s2 over all 3-cycles and s3 over all
    involutions of the right type, solve for s4 and dedupe canonical forms."""
    if n not in (6, 8):
        raise DegreeTooLarge("brute force enumeration is limited to n in {6, 8}")
    types = class_types(n)
    s1 = Permutation.cycle(*range(1, n - 1), degree=n)
    invols = list(_involutions_with_two_fixed(n))
    seen = {}
    examined = 0
    for s2 in _three_cycles(n):
        p12 = s1 * s2
        for s3 in invols:
            examined += 1
            s4 = (p12 * s3).inverse()
            if s4.cycle_type() != types[3]:
                continue
            t = NielsenTuple((s1, s2, s3, s4))
            if require_generation and not group_order(list(t)).is_symmetric:
                continue
            canon = canonicalize(t)
            seen.setdefault(canon.key(), canon)
    reps = [seen[k] for k in sorted(seen)]
    return BruteForceResult(len(reps), reps, examined)


# --------------------------------------------------------------------------
# braid action


def braid_act(t, i, inverse=False, canonical=True):
    """Right action of the braid Q_i (i = 1, 2, 3):
    [.., s_i, s_{i+1}, ..] -> [.., s_i s_{i+1} s_i^-1, s_i, ..]."""
    if i not in (1, 2, 3):
        raise BadIndex(f"braid index must be 1, 2 or 3, got {i}")
    s = list(t)
    a, b = s[i - 1], s[i]
    if inverse:
        s[i - 1], s[i] = b, b.inverse() * a * b
    else:
        s[i - 1], s[i] = a * b * a.inverse(), a
    out = NielsenTuple(tuple(s))
    return canonicalize(out) if canonical else out


def act_word(t, word, canonical=True):
    """Apply a braid word given as signed generator indices, left to right."""
    for w in word:
        t = braid_act(t, abs(w), inverse=w < 0, canonical=False)
    return canonicalize(t) if canonical else t


GAMMA_WORDS = {
    "gamma1": (1, 1),
    "gamma2": (2, 2),
    "gamma3": (-2, 3, 3, 2),
}


def expected_ramification(n):
    """Ramification of the Hurwitz curve over z1, z2, z3 (largest part first)."""
    if n % 2 or n < 6:
        raise ValueError(f"n must be an even integer >= 6, got {n}")
    z1 = (n // 2, n // 2 - 1, n // 2 - 2)
    if n % 4 == 0:
        z2 = (5, 1, 1) + (2,) * (3 * n // 4 - 5)
        z3 = (3,) + (2,) * (3 * n // 4 - 3)
    else:
        z2 = (5, 1) + (2,) * (3 * (n - 6) // 4)
        z3 = (3, 1) + (2,) * ((3 * n - 14) // 4)
    return tuple(tuple(sorted(z, reverse=True)) for z in (z1, z2, z3))


@dataclass
class MonodromyReport:
    n: int
    degree: int
    labels: list
    perms: dict
    cycle_types: dict
    orbit_count: int
    genus: int

    def to_json(self):
        return {
            "n": self.n,
            "degree": self.degree,
            "labels": [str(lab) for lab in self.labels],
            "actions": {k: label_cycles(p, self.labels) for k, p in self.perms.items()},
            "cycle_types": {k: list(v) for k, v in self.cycle_types.items()},
            "orbit_count": self.orbit_count,
            "genus": self.genus,
        }


def label_cycles(p, labels):
    """Render an action on the label list in cycle notation using class names."""
    cs = p.cycles()
    if not cs:
        return "()"
    return "".join("(" + ", ".join(str(labels[x - 1]) for x in c) + ")" for c in cs)


def riemann_hurwitz_genus(degree, cycle_types):
    s = sum(e - 1 for ct in cycle_types for e in ct)
    two_g_minus_2 = -2 * degree + s
    if two_g_minus_2 % 2:
        raise ValueError("Riemann-Hurwitz sum is odd")
    return two_g_minus_2 // 2 + 1


def action_permutation(classes, word):
    """Permutation of the class list (1-based positions) induced by a braid word."""
    index = {canonicalize(t).key(): k for k, (_, t) in enumerate(classes, 1)}
    images = []
    for _, t in classes:
        key = act_word(t, word).key()
        if key not in index:
            raise ValueError("braid image left the Nielsen class list")
        images.append(index[key])
    return Permutation(images)


def gamma_monodromy(n):
    """Monodromy of the Hurwitz curve over the three fixed branch points.

    gamma1 = Q1^2, gamma2 = Q2^2 and gamma3 = Q2^-1 Q3^2 Q2 act on the class
    list; positions follow ``enumerate_sni(n)``.
    """
    _check_n(n)
    classes = enumerate_sni(n)
    labels = [lab for lab, _ in classes]
    g1 = action_permutation(classes, GAMMA_WORDS["gamma1"])
    g2 = action_permutation(classes, GAMMA_WORDS["gamma2"])
    g3 = action_permutation(classes, GAMMA_WORDS["gamma3"])
    # acting by gamma1, then gamma2, then gamma3 returns every class to itself
    if not (g3 * g2 * g1).is_identity():
        raise AssertionError("sequential gamma1, gamma2, gamma3 action is not trivial")
    # the path gamma1.gamma2 is reported as the product g1*g2 of the two label
    # permutations; it is conjugate to the sequential action g2*g1
    g12 = g1 * g2
    perms = {"gamma1": g1, "gamma2": g2, "gamma1gamma2": g12}
    cts = {k: p.cycle_type() for k, p in perms.items()}
    perms["gamma3"] = g3
    orbits = set()
    for x in range(1, len(labels) + 1):
        orbits.add(frozenset(orbit([g1, g2], x)))
    genus = riemann_hurwitz_genus(len(labels), [cts[k] for k in ("gamma1", "gamma2", "gamma1gamma2")])
    return MonodromyReport(n, len(labels), labels, perms, cts, len(orbits), genus)


def closed_form_monodromy(n):
    """The label permutations of gamma1, gamma2 and gamma1.gamma2 written out in
    closed form, as cycles of ClassLabels. Meaningful for n >= 10."""
    h = n // 2

    def a(i):
        return ClassLabel("A", i)

    def b(i):
        return ClassLabel("B", i)

    def c(i):
        return ClassLabel("C", i)

    g1 = [
        [a(i) for i in range(h, 0, -1)],
        [b(i) for i in range(h, 1, -1)],
        [c(i) for i in range(h - 2, 0, -1)],
    ]
    g2 = [[a(h - 2), b(h), b(h - 1), a(h), c(h - 2)]]
    g2 += [[a(k), c(h - 2 - k)] for k in range(1, h - 2)]
    g2 += [[b(k), b(h - k)] for k in range(2, h) if k < h - k]
    g12 = [[a(h - 1), a(h - 2), b(h - 1)]]
    g12 += [[c(k), a(h - 3 - k)] for k in range(1, h - 3)]
    g12 += [[c(h - 3), a(h)], [c(h - 2), a(h - 3)], [b(h), b(h - 2)]]
    g12 += [[b(j), b(h - 1 - j)] for j in range(2, h) if j < h - 1 - j]
    return {"gamma1": g1, "gamma2": g2, "gamma1gamma2": g12}


def closed_form_permutations(n):
    labels = all_labels(n)
    pos = {lab: k for k, lab in enumerate(labels, 1)}
    out = {}
    for name, cycles in closed_form_monodromy(n).items():
        for cyc in cycles:
            for lab in cyc:
                if lab not in pos:
                    raise IndexOutOfRange(f"closed form refers to {lab}, undefined for n = {n}")
        out[name] = Permutation.from_cycles([[pos[lab] for lab in cyc] for cyc in cycles if len(cyc) > 1], len(labels))
    return out
