"""Exact linear algebra over the rationals.

Everything downstream (Hom spaces, Ext groups, AR translates) reduces to
kernels, cokernels and ranks of matrices with Fraction entries.  No floating
point is used anywhere.  Ranks run through fraction-free (Bareiss) elimination
on an integer rescaling of the rows; solving and nullspaces use plain
Gauss-Jordan over Fraction, which auto-normalizes via gcd.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class RMatrix:
    """Immutable dense matrix of rationals.  Zero-sized shapes are legal."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, rows=None, cols=None):
        data = tuple(tuple(_frac(x) for x in row) for row in data)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("inconsistent matrix shape")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("RMatrix is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zeros(rows: int, cols: int) -> "RMatrix":
        return RMatrix([[0] * cols for _ in range(rows)], rows, cols)

    @staticmethod
    def identity(n: int) -> "RMatrix":
        return RMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)], n, n)

    @staticmethod
    def from_columns(columns, rows: int) -> "RMatrix":
        cols = len(columns)
        return RMatrix(
            [[columns[j][i] for j in range(cols)] for i in range(rows)], rows, cols
        )

    @staticmethod
    def column(entries) -> "RMatrix":
        return RMatrix([[x] for x in entries], len(entries), 1)

    # -- basic algebra -------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, RMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        if self.rows == 0 or self.cols == 0:
            return f"RMatrix({self.rows}x{self.cols})"
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"RMatrix[{body}]"

    def __add__(self, other: "RMatrix") -> "RMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        return RMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ],
            self.rows,
            self.cols,
        )

    def __sub__(self, other: "RMatrix") -> "RMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "RMatrix":
        c = _frac(c)
        return RMatrix(
            [[c * x for x in row] for row in self.data], self.rows, self.cols
        )

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        ot = other.transpose().data
        return RMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in ot]
                for row in self.data
            ],
            self.rows,
            other.cols,
        )

    def transpose(self) -> "RMatrix":
        return RMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.cols,
            self.rows,
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def column_at(self, j: int):
        return tuple(self.data[i][j] for i in range(self.rows))

    def flatten(self):
        """Row-major entry tuple; the vectorization used for span tests."""
        return tuple(x for row in self.data for x in row)

    # -- stacking ------------------------------------------------------

    @staticmethod
    def hstack(mats) -> "RMatrix":
        mats = list(mats)
        rows = mats[0].rows
        if any(m.rows != rows for m in mats):
            raise ValueError("row mismatch in hstack")
        data = [sum((list(m.data[i]) for m in mats), []) for i in range(rows)]
        return RMatrix(data, rows, sum(m.cols for m in mats))

    @staticmethod
    def vstack(mats) -> "RMatrix":
        mats = list(mats)
        cols = mats[0].cols
        if any(m.cols != cols for m in mats):
            raise ValueError("column mismatch in vstack")
        data = [row for m in mats for row in m.data]
        return RMatrix(data, sum(m.rows for m in mats), cols)

    @staticmethod
    def block_diag(mats) -> "RMatrix":
        mats = list(mats)
        rows = sum(m.rows for m in mats)
        cols = sum(m.cols for m in mats)
        out = [[Fraction(0)] * cols for _ in range(rows)]
        r0 = c0 = 0
        for m in mats:
            for i in range(m.rows):
                for j in range(m.cols):
                    out[r0 + i][c0 + j] = m.data[i][j]
            r0 += m.rows
            c0 += m.cols
        return RMatrix(out, rows, cols)


# -- elimination -------------------------------------------------------


def rank(m: RMatrix) -> int:
    """Rank over Q via Bareiss fraction-free elimination on integer rows."""
    if m.rows == 0 or m.cols == 0:
        return 0
    a = []
    for row in m.data:
        den = lcm(*(x.denominator for x in row)) if row else 1
        a.append([int(x * den) for x in row])
    nrows, ncols = m.rows, m.cols
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == nrows:
            break
    return r


def rref(m: RMatrix):
    """Reduced row echelon form.  Returns (rows as lists, pivot columns)."""
    a = [list(row) for row in m.data]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def nullspace_basis(m: RMatrix):
    """Basis of the right kernel, as a list of coordinate tuples."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [
            tuple(Fraction(1) if i == j else Fraction(0) for i in range(m.cols))
            for j in range(m.cols)
        ]
    a, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -a[r][f]
        basis.append(tuple(v))
    return basis


def cokernel_basis(m: RMatrix):
    """Surjection q with q @ m = 0 and rank q = rows - rank m.

    The rows of q form a basis of the left kernel of ``m``; q presents the
    quotient of the target space by the column space of ``m``.
    """
    left = nullspace_basis(m.transpose())
    q = RMatrix([list(v) for v in left], len(left), m.rows)
    return q, len(left)


def solve_matrix(a: RMatrix, b: RMatrix):
    """A particular solution X of a @ X = b, or None if inconsistent.

    Free coordinates are set to zero, which makes the output deterministic.
    """
    if a.rows != b.rows:
        raise ValueError("shape mismatch in solve")
    if a.cols == 0:
        return None if not b.is_zero() else RMatrix.zeros(0, b.cols)
    aug = RMatrix.hstack([a, b])
    red, pivots = rref(aug)
    for c in pivots:
        if c >= a.cols:
            return None
    x = [[Fraction(0)] * b.cols for _ in range(a.cols)]
    for r, p in enumerate(pivots):
        for j in range(b.cols):
            x[p][j] = red[r][a.cols + j]
    return RMatrix(x, a.cols, b.cols)


def right_inverse(q: RMatrix):
    """Some S with q @ S = identity; requires q of full row rank."""
    s = solve_matrix(q, RMatrix.identity(q.rows))
    if s is None:
        raise ValueError("matrix has no right inverse")
    return s


def coordinates_in_span(basis_vectors, target):
    """Coefficients expressing ``target`` in the given vector list, or None."""
    n = len(target)
    mat = RMatrix.from_columns([tuple(v) for v in basis_vectors], n)
    sol = solve_matrix(mat, RMatrix.column(target))
    if sol is None:
        return None
    return tuple(sol.data[i][0] for i in range(sol.rows))


def generic_max_rank(space, shape=None) -> RMatrix:
    """A rational combination of ``space`` attaining the span's maximal rank.

    Deterministic: coefficients are adjusted one basis element at a time,
    scanning small integers to escape the finitely many rank-dropping values,
    with extra sweeps until the rank stabilizes.
    """
    space = list(space)
    if not space:
        if shape is None:
            raise ValueError("empty span requires an explicit ambient shape")
        return RMatrix.zeros(*shape)
    nmax = min(space[0].rows, space[0].cols)
    current = space[0]
    best = rank(current)
    for sweep in range(3):
        prev_best = best
        for h in space[1 if sweep == 0 else 0:]:
            if best == nmax:
                return current
            # The generic rank along current + t*h is missed by at most nmax
            # values of t, so a scan of nmax+2 nonzero integers sees it; it is
            # never below rank(current).  Moving on ties keeps the combination
            # generic for the elements still to come.
            pick, pick_rank = None, -1
            for t in range(1, nmax + 3):
                cand = current + h.scale(t)
                r = rank(cand)
                if r > pick_rank:
                    pick, pick_rank = cand, r
            if pick_rank >= best:
                current, best = pick, pick_rank
        if best == prev_best and sweep > 0:
            break
    return current
