"""Fraction-free (Bareiss) exact linear algebra over the rationals.

Rows are scaled to integers first, the forward sweep is Bareiss' one-step
fraction-free elimination, and only back-substitution touches rationals.
Pivoting is deterministic: the first nonzero entry, scanning columns left to
right and rows top to bottom.
"""
from gmpy2 import mpz

from ..errors import DimensionMismatch, NoSolution, Underdetermined
from .rational import ONE, ZERO, Q, lcm_of_denominators


def _as_integer_rows(rows):
    out = []
    for row in rows:
        row = [Q(c) for c in row]
        den = lcm_of_denominators(row)
        out.append([mpz(c * den) for c in row])
    return out


def bareiss_echelon(M, ncols=None):
    """Fraction-free row echelon form of the integer matrix ``M`` (modified in place).

    Only the first ``ncols`` columns are eligible as pivots (the rest, e.g. an
    augmented right-hand side, are carried along). Returns the pivot columns.
    """
    nrows = len(M)
    if nrows == 0:
        return []
    width = len(M[0])
    ncols = width if ncols is None else ncols
    pivots = []
    prev = mpz(1)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        rowr = M[r]
        for i in range(r + 1, nrows):
            rowi = M[i]
            f = rowi[c]
            for j in range(c + 1, width):
                rowi[j] = (piv * rowi[j] - f * rowr[j]) // prev
            rowi[c] = mpz(0)
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _back_substitute(M, pivots, ncols, rhs_col, free_values):
    """Rational solution of the echelon system given values of free variables."""
    x = [ZERO] * ncols
    for col, val in free_values.items():
        x[col] = Q(val)
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        row = M[r]
        acc = Q(row[rhs_col]) if rhs_col is not None else ZERO
        for j in range(c + 1, ncols):
            if row[j] != 0 and x[j] != 0:
                acc -= row[j] * x[j]
        x[c] = acc / row[c]
    return x


def _check_dims(A, b=None):
    if not A:
        raise DimensionMismatch("empty matrix")
    ncols = len(A[0])
    if any(len(row) != ncols for row in A):
        raise DimensionMismatch("ragged matrix")
    if b is not None and len(b) != len(A):
        raise DimensionMismatch(f"matrix has {len(A)} rows but right-hand side has {len(b)}")
    return ncols


def nullspace(A):
    """Basis of {x : A x = 0}, one vector per free column (free entry set to 1)."""
    ncols = _check_dims(A)
    M = _as_integer_rows(A)
    pivots = bareiss_echelon(M, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        vals = {g: (ONE if g == f else ZERO) for g in free}
        basis.append(_back_substitute(M, pivots, ncols, None, vals))
    return basis


def rank(A):
    ncols = _check_dims(A)
    return len(bareiss_echelon(_as_integer_rows(A), ncols))


def linear_solve_exact(A, b):
    """Solve A x = b exactly.

    Returns the unique solution as a list of rationals. Raises ``NoSolution``
    (with a left-kernel certificate y, y A = 0, y b != 0) when inconsistent and
    ``Underdetermined`` (with a particular solution and a kernel basis) when
    the solution is not unique.
    """
    ncols = _check_dims(A, b)
    M = _as_integer_rows([list(row) + [rhs] for row, rhs in zip(A, b)])
    pivots = bareiss_echelon(M, ncols)
    rk = len(pivots)
    for r in range(rk, len(M)):
        if M[r][ncols] != 0:
            raise NoSolution("inconsistent linear system", certificate=_inconsistency_certificate(A, b))
    free = [c for c in range(ncols) if c not in set(pivots)]
    particular = _back_substitute(M, pivots, ncols, ncols, {g: ZERO for g in free})
    if free:
        kernel = []
        for f in free:
            vals = {g: (ONE if g == f else ZERO) for g in free}
            kernel.append(_back_substitute(M, pivots, ncols, None, vals))
        raise Underdetermined(
            f"rank {rk} < {ncols} unknowns", particular=particular, kernel=kernel, pivots=pivots
        )
    return particular


def _inconsistency_certificate(A, b):
    At = [[Q(A[i][j]) for i in range(len(A))] for j in range(len(A[0]))]
    for y in nullspace(At):
        if sum(yi * Q(bi) for yi, bi in zip(y, b)) != 0:
            return y
    return None


def mat_vec(A, x):
    return [sum((a * xi for a, xi in zip(row, x) if a != 0), ZERO) for row in A]


def inverse(A):
    """Inverse of a square nonsingular rational matrix (columns solved jointly)."""
    n = _check_dims(A)
    if n != len(A):
        raise DimensionMismatch("inverse of a non-square matrix")
    M = _as_integer_rows([list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(A)])
    pivots = bareiss_echelon(M, n)
    if len(pivots) < n:
        raise Underdetermined("singular matrix", kernel=nullspace(A), pivots=pivots)
    cols = [_back_substitute(M, pivots, n, n + k, {}) for k in range(n)]
    return [[cols[k][i] for k in range(n)] for i in range(n)]
