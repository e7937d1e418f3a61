"""Dense exact matrices over the Gaussian rationals.

Everything here is pure and immutable: each operation returns a fresh
matrix and equality is entrywise structural equality. Sizes stay small
(instances are at most 8x8), so naive exact pivoting is all we need --
no fraction-free tricks, no sparsity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import InternalInvariantError, ShapeError, SingularMatrixError
from .scalars import GaussianRational, ZERO

_ZERO_F = Fraction(0)


def _coerce_scalar(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    raise TypeError(f"cannot use {type(value).__name__} as a matrix entry")


class Matrix:
    """Immutable rows x cols matrix stored row-major."""

    __slots__ = ("rows", "cols", "entries", "_all_real")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        if rows <= 0 or cols <= 0:
            raise ShapeError(f"matrix dimensions must be positive, got {rows}x{cols}")
        ents = tuple(_coerce_scalar(e) for e in entries)
        if len(ents) != rows * cols:
            raise ShapeError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(ents)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ents)
        object.__setattr__(self, "_all_real", all(not e.im for e in ents))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        if not rows or not rows[0]:
            raise ShapeError("matrix needs at least one row and one column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("all rows must have the same length")
        return cls(len(rows), ncols, (e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (0 for _ in range(rows * cols)))

    # -- inspection --------------------------------------------------------

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.entries[i * self.cols + j]

    def row_list(self, i: int) -> list[GaussianRational]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_rows(self) -> list[list[GaussianRational]]:
        return [self.row_list(i) for i in range(self.rows)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def is_identity(self) -> bool:
        if not self.is_square():
            return False
        n = self.cols
        return all(
            self.entries[i * n + j] == (1 if i == j else 0)
            for i in range(n)
            for j in range(n)
        )

    # -- ring operations ---------------------------------------------------

    def _require_same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._require_same_shape(other)
        return Matrix(
            self.rows, self.cols, (a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._require_same_shape(other)
        return Matrix(
            self.rows, self.cols, (a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self):
        return Matrix(self.rows, self.cols, (-a for a in self.entries))

    def scale(self, scalar) -> "Matrix":
        s = _coerce_scalar(scalar)
        return Matrix(self.rows, self.cols, (s * a for a in self.entries))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        if self._all_real and other._all_real:
            # Real fast path: accumulate plain fractions, skip the imaginary lanes.
            for i in range(n):
                arow = a[i * k : (i + 1) * k]
                for j in range(m):
                    s = _ZERO_F
                    for t in range(k):
                        s += arow[t].re * b[t * m + j].re
                    out.append(GaussianRational(s))
        else:
            for i in range(n):
                arow = a[i * k : (i + 1) * k]
                for j in range(m):
                    sre = _ZERO_F
                    sim = _ZERO_F
                    for t in range(k):
                        x, y = arow[t], b[t * m + j]
                        sre += x.re * y.re - x.im * y.im
                        sim += x.re * y.im + x.im * y.re
                    out.append(GaussianRational(sre, sim))
        return Matrix(n, m, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Matrix":
        if not isinstance(n, int) or n < 0:
            raise ValueError("matrix powers require a nonnegative integer exponent")
        if not self.is_square():
            raise ShapeError("matrix power requires a square matrix")
        result = Matrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- transposes --------------------------------------------------------

    @property
    def T(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            (self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    @property
    def H(self) -> "Matrix":
        """Conjugate transpose."""
        return Matrix(
            self.cols,
            self.rows,
            (
                self.entries[i * self.cols + j].conjugate()
                for j in range(self.cols)
                for i in range(self.rows)
            ),
        )

    # -- structural helpers --------------------------------------------------

    def take_columns(self, indices: Sequence[int]) -> "Matrix":
        if not indices:
            raise ShapeError("cannot build a matrix from zero columns")
        return Matrix(
            self.rows,
            len(indices),
            (self.entries[i * self.cols + j] for i in range(self.rows) for j in indices),
        )

    def take_rows(self, indices: Sequence[int]) -> "Matrix":
        if not indices:
            raise ShapeError("cannot build a matrix from zero rows")
        return Matrix(
            len(indices),
            self.cols,
            (self.entries[i * self.cols + j] for i in indices for j in range(self.cols)),
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ShapeError("hstack requires equal row counts")
        ents = []
        for i in range(self.rows):
            ents.extend(self.row_list(i))
            ents.extend(other.row_list(i))
        return Matrix(self.rows, self.cols + other.cols, ents)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix.from_rows({[[str(e) for e in self.row_list(i)] for i in range(self.rows)]})"

    def __str__(self):
        cells = [[str(e) for e in self.row_list(i)] for i in range(self.rows)]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)


def block_diag(*blocks: Matrix) -> Matrix:
    """Direct sum of matrices along the diagonal."""
    if not blocks:
        raise ShapeError("block_diag needs at least one block")
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    grid = [[ZERO] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            grid[r0 + i][c0 : c0 + b.cols] = b.row_list(i)
        r0 += b.rows
        c0 += b.cols
    return Matrix.from_rows(grid)


class RrefResult(NamedTuple):
    matrix: Matrix
    rank: int
    pivot_cols: tuple[int, ...]


def rref(a: Matrix) -> RrefResult:
    """Reduced row echelon form by exact Gauss-Jordan elimination."""
    work = a.to_rows()
    nrows, ncols = a.rows, a.cols
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        pivot_row = next((i for i in range(pr, nrows) if work[i][pc]), None)
        if pivot_row is None:
            continue
        if pivot_row != pr:
            work[pr], work[pivot_row] = work[pivot_row], work[pr]
        inv_p = 1 / work[pr][pc]
        work[pr] = [v * inv_p for v in work[pr]]
        row_p = work[pr]
        for i in range(nrows):
            if i == pr:
                continue
            f = work[i][pc]
            if f:
                work[i] = [v - f * w for v, w in zip(work[i], row_p)]
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    return RrefResult(Matrix.from_rows(work), pr, tuple(pivots))


def rank(a: Matrix) -> int:
    return rref(a).rank


def inverse(a: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrixError when rank < n."""
    if not a.is_square():
        raise ShapeError("inverse requires a square matrix")
    n = a.rows
    reduced, _, pivots = rref(a.hstack(Matrix.identity(n)))
    # invertible iff every pivot lands in the left block
    if pivots[:n] != tuple(range(n)):
        raise SingularMatrixError(f"matrix of rank {rank(a)} < {n} has no inverse")
    return reduced.take_columns(range(n, 2 * n))


def null_space_basis(a: Matrix) -> list[Matrix]:
    """Basis of {x : a x = 0}, as a list of cols x 1 column vectors."""
    reduced, _, pivots = rref(a)
    pivot_set = set(pivots)
    free_cols = [j for j in range(a.cols) if j not in pivot_set]
    basis = []
    for f in free_cols:
        vec = [ZERO] * a.cols
        vec[f] = GaussianRational(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced.entry(r, f)
        basis.append(Matrix(a.cols, 1, vec))
    return basis


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """One exact solution of a x = b (free variables set to 0), or None."""
    if a.rows != b.rows:
        raise ShapeError("solve requires matching row counts")
    reduced, _, pivots = rref(a.hstack(b))
    if any(pc >= a.cols for pc in pivots):
        return None
    sol = [[ZERO] * b.cols for _ in range(a.cols)]
    for r, pc in enumerate(pivots):
        for j in range(b.cols):
            sol[pc][j] = reduced.entry(r, a.cols + j)
    return Matrix.from_rows(sol)


def one_inverse(a: Matrix) -> Matrix:
    """A {1}-inverse: G with a G a = a, via the full-rank factorization a = C F.

    C holds the pivot columns of a and F the nonzero rows of rref(a); both
    Gram matrices F F* and C* C are invertible because C has full column
    rank and F full row rank, which makes G = F*(F F*)^-1 (C* C)^-1 C* a
    genuine {1}-inverse (in fact the Moore-Penrose inverse, but only the
    a G a = a property is relied on).
    """
    reduced, rk, pivots = rref(a)
    if rk == 0:
        return Matrix.zeros(a.cols, a.rows)
    c = a.take_columns(pivots)
    f = reduced.take_rows(range(rk))
    g = f.H * inverse(f * f.H) * inverse(c.H * c) * c.H
    if a * g * a != a:
        raise InternalInvariantError("one_inverse failed its defining identity")
    return g
