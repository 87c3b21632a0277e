"""Nonintersecting lattice paths and exact binomial determinants.

The tilings counted by this package biject with families of a+2
nonintersecting lattice paths taking unit steps right (+1, 0) and down
(0, -1).  The number of such families equals the determinant of the
matrix whose (i, j) entry counts the paths from start i to end j.  This
module builds the start/end configuration, the binomial count matrix,
and provides two independent exact determinant algorithms:

* ``det_elimination``: fraction-free Gaussian elimination (Bareiss).
  All intermediate values stay integers; the quotient at each step is
  exact by construction.

* ``det_condensation``: Dodgson condensation on contiguous blocks with
  memoisation, i.e. the recurrence

      det(A) * det(interior) = det(NW) * det(SE) - det(NE) * det(SW)

  where the four corner blocks drop one leading/trailing row and
  column.  When an interior determinant vanishes the division is
  impossible, so that block falls back to elimination; the fallback
  count is reported through ``CondensationStats``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .exact import ExactInt, binomial


class LatticePoint(NamedTuple):
    x: int
    y: int


def validate_parameters(a: int, b: int, c: int, r: int, s: int, t: int) -> None:
    """Check the hexagon side and border positions, naming the offender.

    Sides a, b, c are arbitrary nonnegative integers.  The three border
    positions live in r in 1..a+2, s in 1..b+2, t in 1..c+2; each indexes
    which of the candidate border cells along one hexagon side carries
    the fixed tile.
    """
    for name, value in (("a", a), ("b", b), ("c", c)):
        if value < 0:
            raise ValueError(f"side {name} must be >= 0, got {value}")
    for name, value, hi in (("r", r, a + 2), ("s", s, b + 2), ("t", t, c + 2)):
        if not 1 <= value <= hi:
            raise ValueError(f"position {name} must be in 1..{hi}, got {value}")


@dataclass(frozen=True)
class PointConfiguration:
    """Start points P_0..P_{a+1} and end points Q_0..Q_{a+1}."""

    a: int
    b: int
    c: int
    r: int
    s: int
    t: int
    starts: tuple[LatticePoint, ...]
    ends: tuple[LatticePoint, ...]

    @property
    def size(self) -> int:
        return self.a + 2


def _point_configuration_unchecked(
    a: int, b: int, c: int, r: int, s: int, t: int
) -> PointConfiguration:
    # Same construction as build_point_configuration but without range
    # validation; the boundary checks in closedform probe r = 0 and
    # r = a+3 deliberately.
    starts = [LatticePoint(0, c + 2 - t)]
    starts.extend(LatticePoint(i - 1, c + 2 + i) for i in range(1, a + 1))
    starts.append(LatticePoint(a + b + 2 - s, a + c + 2))
    ends = [
        LatticePoint(b + j + (1 if j >= r else 0), j + (1 if j >= r else 0))
        for j in range(a + 2)
    ]
    return PointConfiguration(a, b, c, r, s, t, tuple(starts), tuple(ends))


def build_point_configuration(
    a: int, b: int, c: int, r: int, s: int, t: int
) -> PointConfiguration:
    """Start and end points of the path family for one tiling problem.

    Path i runs from P_i to Q_i.  P_0 and P_{a+1} depend on the border
    positions t and s; the ends Q_j skip one index at j = r, which is
    where the third fixed border tile interrupts the bottom side.
    """
    validate_parameters(a, b, c, r, s, t)
    return _point_configuration_unchecked(a, b, c, r, s, t)


def count_paths(start: LatticePoint, end: LatticePoint) -> ExactInt:
    """Number of right/down lattice paths from start to end.

    Zero when the end is not weakly right of and weakly below the start.
    """
    right = end.x - start.x
    down = start.y - end.y
    if right < 0 or down < 0:
        return 0
    return binomial(right + down, down)


@dataclass(frozen=True)
class CountMatrix:
    """Square integer matrix with persistent row/column labels.

    Labels name the original path indices, so a minor of a minor still
    knows which rows of the full matrix it came from.
    """

    entries: tuple[tuple[ExactInt, ...], ...]
    row_labels: tuple[int, ...]
    col_labels: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if len(self.row_labels) != n:
            raise ValueError("row label count does not match row count")
        if any(len(row) != len(self.col_labels) for row in self.entries):
            raise ValueError("column label count does not match a row length")
        if len(self.row_labels) != len(self.col_labels):
            raise ValueError("matrix must be square")
        if len(set(self.row_labels)) != n or len(set(self.col_labels)) != n:
            raise ValueError("labels must be distinct")

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int]],
        row_labels: Sequence[int] | None = None,
        col_labels: Sequence[int] | None = None,
    ) -> "CountMatrix":
        entries = tuple(tuple(int(v) for v in row) for row in rows)
        n = len(entries)
        rl = tuple(row_labels) if row_labels is not None else tuple(range(n))
        cl = tuple(col_labels) if col_labels is not None else tuple(range(n))
        return cls(entries, rl, cl)

    @property
    def order(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> ExactInt:
        """Entry by position (not label)."""
        return self.entries[i][j]


def _matrix_entries(
    a: int, b: int, c: int, r: int, s: int, t: int
) -> tuple[tuple[ExactInt, ...], ...]:
    # Closed binomial form of count_paths(P_i, Q_j) for this point
    # configuration; rows 0 and a+1 absorb the t- and s-dependence.
    rows = []
    for i in range(a + 2):
        row = []
        for j in range(a + 2):
            jj = j + (1 if j >= r else 0)
            if i == 0:
                row.append(binomial(b + c + 2 - t, c + 2 - t - jj))
            elif i == a + 1:
                row.append(binomial(c + s, jj - a - 2 + s))
            else:
                row.append(binomial(b + c + 3, b + jj - i + 1))
        rows.append(tuple(row))
    return tuple(rows)


def _matrix_unchecked(a: int, b: int, c: int, r: int, s: int, t: int) -> CountMatrix:
    labels = tuple(range(a + 2))
    return CountMatrix(_matrix_entries(a, b, c, r, s, t), labels, labels)


def build_matrix_M(a: int, b: int, c: int, r: int, s: int, t: int) -> CountMatrix:
    """The (a+2) x (a+2) path-count matrix M with M[i][j] = #paths(P_i -> Q_j)."""
    validate_parameters(a, b, c, r, s, t)
    return _matrix_unchecked(a, b, c, r, s, t)


def minor(
    matrix: CountMatrix,
    delete_rows: Iterable[int] = (),
    delete_cols: Iterable[int] = (),
) -> CountMatrix:
    """Submatrix with the given row/column labels removed.

    Deletion is by label, not position, so minors compose.  The result
    must stay square.
    """
    dr = set(delete_rows)
    dc = set(delete_cols)
    missing = dr - set(matrix.row_labels)
    if missing:
        raise ValueError(f"unknown row labels: {sorted(missing)}")
    missing = dc - set(matrix.col_labels)
    if missing:
        raise ValueError(f"unknown column labels: {sorted(missing)}")
    if len(dr) != len(dc):
        raise ValueError("minor must delete equally many rows and columns")
    keep_r = [i for i, lab in enumerate(matrix.row_labels) if lab not in dr]
    keep_c = [j for j, lab in enumerate(matrix.col_labels) if lab not in dc]
    entries = tuple(tuple(matrix.entries[i][j] for j in keep_c) for i in keep_r)
    return CountMatrix(
        entries,
        tuple(matrix.row_labels[i] for i in keep_r),
        tuple(matrix.col_labels[j] for j in keep_c),
    )


def _as_rows(matrix: CountMatrix | Sequence[Sequence[int]]) -> list[list[int]]:
    if isinstance(matrix, CountMatrix):
        rows = [list(row) for row in matrix.entries]
    else:
        rows = [[int(v) for v in row] for row in matrix]
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")
    return rows


def det_elimination(matrix: CountMatrix | Sequence[Sequence[int]]) -> ExactInt:
    """Exact determinant by Bareiss fraction-free elimination.

    Row swaps (with sign bookkeeping) handle zero pivots; if no nonzero
    pivot exists in a column the determinant is 0.  The 0 x 0 matrix has
    determinant 1 (empty product).
    """
    rows = _as_rows(matrix)
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if pivot is None:
                return 0
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return sign * rows[n - 1][n - 1]


@dataclass
class CondensationStats:
    """Instrumentation for det_condensation."""

    fallbacks: int = 0
    blocks: int = 0


def det_condensation(
    matrix: CountMatrix | Sequence[Sequence[int]],
    stats: CondensationStats | None = None,
) -> ExactInt:
    """Exact determinant by memoised condensation on contiguous blocks.

    Each block determinant of order >= 2 is computed from the four
    blocks one size smaller and the interior block two sizes smaller.
    A zero interior makes the division undefined; that block (and only
    that block) is recomputed by elimination, counted in ``stats``.
    """
    rows = _as_rows(matrix)
    n = len(rows)
    memo: dict[tuple[int, int, int], ExactInt] = {}

    def block(i: int, j: int, size: int) -> ExactInt:
        if size == 0:
            return 1
        key = (i, j, size)
        if key in memo:
            return memo[key]
        if stats is not None:
            stats.blocks += 1
        if size == 1:
            value = rows[i][j]
        else:
            interior = block(i + 1, j + 1, size - 2)
            if interior == 0:
                if stats is not None:
                    stats.fallbacks += 1
                value = det_elimination(
                    [row[j : j + size] for row in rows[i : i + size]]
                )
            else:
                nw = block(i, j, size - 1)
                se = block(i + 1, j + 1, size - 1)
                ne = block(i, j + 1, size - 1)
                sw = block(i + 1, j, size - 1)
                quotient, remainder = divmod(nw * se - ne * sw, interior)
                if remainder:
                    raise ArithmeticError("condensation division is not exact")
                value = quotient
        memo[key] = value
        return value

    return block(0, 0, n)


def verify_desnanot_jacobi(matrix: CountMatrix | Sequence[Sequence[int]]) -> bool:
    """Check det(A) det(A with first+last rows/cols removed) ==
    det(NW) det(SE) - det(NE) det(SW) for this matrix.

    NW removes the last row and column, SE the first row and column,
    NE the last row and first column, SW the first row and last column.
    All five determinants are computed independently by elimination.
    """
    rows = _as_rows(matrix)
    n = len(rows)
    if n < 2:
        raise ValueError(f"identity needs order >= 2, got {n}")

    def sub(drop_rows: set[int], drop_cols: set[int]) -> ExactInt:
        kept = [
            [v for j, v in enumerate(row) if j not in drop_cols]
            for i, row in enumerate(rows)
            if i not in drop_rows
        ]
        return det_elimination(kept)

    last = n - 1
    lhs = det_elimination(rows) * sub({0, last}, {0, last})
    rhs = sub({last}, {last}) * sub({0}, {0}) - sub({last}, {0}) * sub({0}, {last})
    return lhs == rhs
