"""Dense exact linear algebra over the rationals.

Everything is built on :class:`fractions.Fraction`, so results are exact and
scalars are always reduced with a positive denominator.  Matrices are small
(desk scale), dense, and immutable by convention: no routine mutates its
inputs.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    """Coerce ints, strings like ``"-3/4"``, or Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Matrix:
    """Immutable dense matrix of Fractions.  Zero rows/cols are legal."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data):
        if rows < 0 or cols < 0:
            raise DimensionMismatch(f"bad shape ({rows}, {cols})")
        data = tuple(tuple(frac(x) for x in row) for row in data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise DimensionMismatch(f"data does not match shape ({rows}, {cols})")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, data) -> "Matrix":
        data = [list(r) for r in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(rows, cols, data)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def column(self, j):
        return tuple(self.data[i][j] for i in range(self.rows))

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {[list(map(str, r)) for r in self.data]})"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("add: shapes differ")
        return Matrix(
            self.rows,
            self.cols,
            [
                [self.data[i][j] + other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [[-x for x in row] for row in self.data])

    def scale(self, c) -> "Matrix":
        c = frac(c)
        return Matrix(self.rows, self.cols, [[c * x for x in row] for row in self.data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"mul: {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            srow = self.data[i]
            orow = out[i]
            for k in range(self.cols):
                a = srow[k]
                if a == 0:
                    continue
                brow = other.data[k]
                for j in range(other.cols):
                    if brow[j] != 0:
                        orow[j] += a * brow[j]
        return Matrix(self.rows, other.cols, out)

    def __rmul__(self, c):
        return self.scale(c)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self.column(j) for j in range(self.cols)])

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise DimensionMismatch("hstack: row counts differ")
        return Matrix(
            self.rows,
            self.cols + other.cols,
            [list(self.data[i]) + list(other.data[i]) for i in range(self.rows)],
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise DimensionMismatch("vstack: column counts differ")
        return Matrix(self.rows + other.rows, self.cols, list(self.data) + list(other.data))

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        row_idx = list(row_idx)
        col_idx = list(col_idx)
        return Matrix(
            len(row_idx), len(col_idx), [[self.data[i][j] for j in col_idx] for i in row_idx]
        )

    # -- elimination -----------------------------------------------------

    def rref(self):
        """Reduced row echelon form.  Returns (matrix, pivot column list)."""
        m = [list(row) for row in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            pr = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = ONE / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return Matrix(self.rows, self.cols, m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> "Matrix":
        """Columns span the right kernel: self * result == 0 exactly."""
        red, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in pivots]
        cols = []
        for j in free:
            v = [ZERO] * self.cols
            v[j] = ONE
            for r, p in enumerate(pivots):
                v[p] = -red.data[r][j]
            cols.append(v)
        return Matrix(self.cols, len(cols), [[col[i] for col in cols] for i in range(self.cols)])

    def solve(self, b: "Matrix"):
        """Some x with self * x == b, or None when inconsistent."""
        if b.rows != self.rows:
            raise DimensionMismatch("solve: row counts differ")
        aug, pivots = self.hstack(b).rref()
        # a pivot in the b-block means inconsistency
        for p in pivots:
            if p >= self.cols:
                return None
        x = [[ZERO] * b.cols for _ in range(self.cols)]
        for r, p in enumerate(pivots):
            for j in range(b.cols):
                x[p][j] = aug.data[r][self.cols + j]
        return Matrix(self.cols, b.cols, x)

    def left_kernel_basis(self) -> "Matrix":
        """Rows span the left kernel: result * self == 0 exactly."""
        return self.transpose().kernel_basis().transpose()

    def inverse(self):
        """Inverse matrix, or None if not square/invertible."""
        if self.rows != self.cols:
            return None
        x = self.solve(Matrix.identity(self.rows))
        if x is None or not (self * x == Matrix.identity(self.rows)):
            return None
        return x

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionMismatch("det: not square")
        m = [list(row) for row in self.data]
        n = self.rows
        d = ONE
        for c in range(n):
            pr = next((i for i in range(c, n) if m[i][c] != 0), None)
            if pr is None:
                return ZERO
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                d = -d
            d *= m[c][c]
            inv = ONE / m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return d


def rank(m: Matrix) -> int:
    return m.rank()


def kernel_basis(m: Matrix) -> Matrix:
    return m.kernel_basis()


def solve(m: Matrix, b: Matrix):
    return m.solve(b)


def row_space_basis(m: Matrix) -> Matrix:
    """Matrix whose rows are the nonzero rows of rref(m)."""
    red, pivots = m.rref()
    return Matrix(len(pivots), m.cols, [red.data[i] for i in range(len(pivots))])


def row_space_contains(space: Matrix, vec) -> bool:
    """Whether the row vector lies in the row space of `space`."""
    v = Matrix(1, space.cols, [list(vec)])
    return space.vstack(v).rank() == space.rank()


def row_spaces_equal(a: Matrix, b: Matrix) -> bool:
    if a.cols != b.cols:
        return False
    ra, rb = a.rank(), b.rank()
    return ra == rb and a.vstack(b).rank() == ra


def intersect_row_spaces(a: Matrix, b: Matrix) -> Matrix:
    """Row-space intersection via the kernel of the stacked transpose."""
    if a.cols != b.cols:
        raise DimensionMismatch("intersect: ambient dims differ")
    stacked = a.vstack(b)
    ker = stacked.left_kernel_basis()  # rows (x | y) with x*a + y*b = 0
    rows = []
    for i in range(ker.rows):
        coeffs = ker.row(i)[: a.rows]
        vec = [ZERO] * a.cols
        for r, c in enumerate(coeffs):
            if c != 0:
                for j in range(a.cols):
                    vec[j] += c * a.data[r][j]
        rows.append(vec)
    return row_space_basis(Matrix(len(rows), a.cols, rows)) if rows else Matrix.zero(0, a.cols)
