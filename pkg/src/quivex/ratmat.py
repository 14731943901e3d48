"""Dense exact linear algebra over the rationals.

Matrices are immutable tuples of ``fractions.Fraction`` entries, all
operations are pure functions, and every echelon computation pivots on the
first nonzero entry scanning down a column with pivots normalized to 1, so
results are bit-identical across runs.  Zero-row and zero-column matrices
are legal everywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence, Union

from .errors import DimensionError, InconsistentSystemError

Scalar = Union[int, str, Fraction]


def as_fraction(value: Scalar) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        num, _, den = value.partition("/")
        if den:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    raise TypeError(f"cannot interpret {value!r} as a rational number")


_ZERO = Fraction(0)
_ONE = Fraction(1)


class RatMatrix:
    """An immutable rows-by-cols grid of exact rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: tuple[tuple[Fraction, ...], ...]):
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence[Scalar]], cols: int | None = None) -> "RatMatrix":
        rows = len(entries)
        if rows == 0:
            if cols is None:
                cols = 0
            return cls(0, cols, ())
        width = len(entries[0]) if cols is None else cols
        data = []
        for i, row in enumerate(entries):
            if len(row) != width:
                raise DimensionError(f"ragged matrix: row {i} has {len(row)} entries, expected {width}")
            data.append(tuple(as_fraction(v) for v in row))
        return cls(rows, width, tuple(data))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        row = (_ZERO,) * cols
        return cls(rows, cols, tuple(row for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def column(cls, values: Sequence[Scalar]) -> "RatMatrix":
        return cls(len(values), 1, tuple((as_fraction(v),) for v in values))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.data[i]

    def column_values(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.data)

    def column_matrix(self, j: int) -> "RatMatrix":
        return RatMatrix(self.rows, 1, tuple((r[j],) for r in self.data))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot compose {self.shape} with {other.shape}")
        other_cols = list(zip(*other.data)) if other.data else [()] * other.cols
        if other.rows == 0:
            return RatMatrix.zeros(self.rows, other.cols)
        data = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in other_cols)
            for row in self.data
        )
        return RatMatrix(self.rows, other.cols, data)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        data = tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.data, other.data))
        return RatMatrix(self.rows, self.cols, data)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + (-other)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(tuple(-v for v in r) for r in self.data))

    def scale(self, s: Scalar) -> "RatMatrix":
        f = as_fraction(s)
        return RatMatrix(self.rows, self.cols, tuple(tuple(f * v for v in r) for r in self.data))

    def transpose(self) -> "RatMatrix":
        if self.rows == 0:
            return RatMatrix(self.cols, 0, ((),) * self.cols)
        return RatMatrix(self.cols, self.rows, tuple(zip(*self.data)))

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for r in self.data for v in r)

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionError(f"trace of non-square {self.shape}")
        return sum((self.data[i][i] for i in range(self.rows)), _ZERO)

    def to_rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.data]

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols})"


def hstack(mats: Sequence[RatMatrix], rows: int | None = None) -> RatMatrix:
    """Concatenate matrices left to right; ``rows`` disambiguates the empty stack."""
    if not mats:
        if rows is None:
            raise DimensionError("hstack of no matrices needs an explicit row count")
        return RatMatrix.zeros(rows, 0)
    n = mats[0].rows
    for m in mats:
        if m.rows != n:
            raise DimensionError(f"hstack row mismatch: {m.rows} vs {n}")
    data = tuple(tuple(v for m in mats for v in m.data[i]) for i in range(n))
    return RatMatrix(n, sum(m.cols for m in mats), data)


def vstack(mats: Sequence[RatMatrix], cols: int | None = None) -> RatMatrix:
    if not mats:
        if cols is None:
            raise DimensionError("vstack of no matrices needs an explicit column count")
        return RatMatrix.zeros(0, cols)
    c = mats[0].cols
    for m in mats:
        if m.cols != c:
            raise DimensionError(f"vstack column mismatch: {m.cols} vs {c}")
    data = tuple(r for m in mats for r in m.data)
    return RatMatrix(sum(m.rows for m in mats), c, data)


def block_assemble(rows: int, cols: int, blocks: Mapping[tuple[int, int], RatMatrix]) -> RatMatrix:
    """Place sub-blocks at (row, col) offsets inside a rows-by-cols zero matrix.

    Overlapping or out-of-range blocks raise a DimensionError naming the
    offending offset.
    """
    grid = [[_ZERO] * cols for _ in range(rows)]
    taken: set[tuple[int, int]] = set()
    for (r0, c0), m in sorted(blocks.items()):
        if r0 < 0 or c0 < 0 or r0 + m.rows > rows or c0 + m.cols > cols:
            raise DimensionError(
                f"block at offset ({r0},{c0}) of shape {m.shape} exceeds the {rows}x{cols} frame"
            )
        for i in range(m.rows):
            for j in range(m.cols):
                if (r0 + i, c0 + j) in taken:
                    raise DimensionError(f"block at offset ({r0},{c0}) overlaps an earlier block")
                taken.add((r0 + i, c0 + j))
                grid[r0 + i][c0 + j] = m.data[i][j]
    return RatMatrix(rows, cols, tuple(tuple(r) for r in grid))


def rref(m: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    """Reduced row echelon form and the tuple of pivot column indices."""
    grid = [list(r) for r in m.data]
    pivots: list[int] = []
    pr = 0
    for pc in range(m.cols):
        target = None
        for r in range(pr, m.rows):
            if grid[r][pc] != 0:
                target = r
                break
        if target is None:
            continue
        grid[pr], grid[target] = grid[target], grid[pr]
        pv = grid[pr][pc]
        if pv != 1:
            grid[pr] = [v / pv for v in grid[pr]]
        for r in range(m.rows):
            if r != pr and grid[r][pc] != 0:
                f = grid[r][pc]
                grid[r] = [a - f * b for a, b in zip(grid[r], grid[pr])]
        pivots.append(pc)
        pr += 1
        if pr == m.rows:
            break
    return RatMatrix(m.rows, m.cols, tuple(tuple(r) for r in grid)), tuple(pivots)


def rank(m: RatMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: RatMatrix) -> list[RatMatrix]:
    """Canonical right-null-space basis: one column per free column of the
    reduced echelon form, free columns taken in ascending index order."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [_ZERO] * m.cols
        vec[free] = _ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced.data[r][free]
        basis.append(RatMatrix.column(vec))
    return basis


def image_basis(m: RatMatrix) -> list[RatMatrix]:
    """Original columns of ``m`` sitting at the echelon pivot indices."""
    _, pivots = rref(m)
    return [m.column_matrix(j) for j in pivots]


def column_space_echelon(m: RatMatrix) -> RatMatrix:
    """Canonical ordered basis of the column space, as the columns of one
    matrix: the nonzero rows of the row echelon form of the transpose."""
    reduced, pivots = rref(m.transpose())
    cols = [RatMatrix.column(reduced.row(i)) for i in range(len(pivots))]
    return hstack(cols, rows=m.rows)


def annihilator_rows(m: RatMatrix) -> RatMatrix:
    """A matrix whose kernel is exactly the column space of ``m``."""
    return hstack(kernel_basis(m.transpose()), rows=m.rows).transpose()


def solve_exact(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """The canonical solution of ``a @ x = b`` (free coordinates set to 0)."""
    if a.rows != b.rows:
        raise DimensionError(f"solve: {a.shape} against rhs {b.shape}")
    reduced, pivots = rref(hstack([a, b]))
    for i in range(len(pivots)):
        if pivots[i] >= a.cols:
            raise InconsistentSystemError("linear system has no exact solution")
    sol = [[_ZERO] * b.cols for _ in range(a.cols)]
    for r, pc in enumerate(pivots):
        sol[pc] = list(reduced.data[r][a.cols:])
    return RatMatrix(a.cols, b.cols, tuple(tuple(r) for r in sol))


def inverse(m: RatMatrix) -> RatMatrix:
    if m.rows != m.cols:
        raise DimensionError(f"inverse of non-square {m.shape}")
    inv = solve_exact(m, RatMatrix.identity(m.rows))
    if not (m @ inv == RatMatrix.identity(m.rows)):
        raise InconsistentSystemError("matrix is singular")
    return inv


def is_invertible(m: RatMatrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows
