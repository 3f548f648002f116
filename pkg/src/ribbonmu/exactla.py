"""Exact linear algebra over the integers.

Everything in this module works with arbitrary-precision Python integers
(and exact rationals where elimination forces denominators), so there is
no overflow and no floating-point round-off anywhere.  The main entry
points are

* :func:`smith_normal_form` -- U * M * V = D with unimodular U, V and a
  nonnegative diagonal satisfying the divisibility chain d1 | d2 | ...
* :func:`determinant` -- fraction-free (Bareiss) exact determinant.
* :func:`signature` -- signature of a symmetric form by congruence
  diagonalization over the rationals.
* :func:`block_diag` -- block-diagonal sum of square matrices.

Matrices are immutable values (safe to share across threads); the
algorithms copy entries into plain lists of ints internally.  Empty
matrices (0x0, n x 0, 0 x n) are legal everywhere: the empty matrix is
the Seifert matrix of the unknot, so the degenerate cases are load
bearing rather than corner cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Operands have incompatible or illegal dimensions."""


class FormError(ValueError):
    """A matrix fails the structural requirements of a bilinear form."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; ``entries[i][j]`` is row i, column j."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimensions")
        if len(self.entries) != self.rows:
            raise DimensionError(
                f"expected {self.rows} rows, got {len(self.entries)}")
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionError(
                    f"expected {self.cols} columns, got {len(row)}")

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        """Build from nested sequences; ``cols`` disambiguates zero-row shapes."""
        r = len(rows)
        if r == 0:
            return IntMatrix(0, 0 if cols is None else cols, ())
        c = len(rows[0]) if cols is None else cols
        return IntMatrix(r, c, tuple(tuple(int(x) for x in row) for row in rows))

    @staticmethod
    def zero(rows: int, cols: int) -> IntMatrix:
        return IntMatrix(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> IntMatrix:
        return IntMatrix(n, n, tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def empty() -> IntMatrix:
        return IntMatrix(0, 0, ())

    # -- basic structure ---------------------------------------------

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols))

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows, tuple(
            tuple(self.entries[i][j] for i in range(self.rows))
            for j in range(self.cols)))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("matrix addition needs equal shapes")
        return IntMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(
            tuple(-a for a in row) for row in self.entries))

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(
            tuple(k * a for a in row) for row in self.entries))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ot = other.transpose().entries
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
            for row in self.entries))

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    # -- serialization -----------------------------------------------
    # Wire format: arrays of arrays of decimal strings, never native
    # numbers, so arbitrary-precision entries survive JSON bit-exactly.

    def to_decimal_rows(self) -> list[list[str]]:
        return [[str(a) for a in row] for row in self.entries]

    @staticmethod
    def from_decimal_rows(rows: Sequence[Sequence[str]], cols: int | None = None) -> IntMatrix:
        return IntMatrix.from_rows(
            [[int(str(x), 10) for x in row] for row in rows], cols=cols)

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"<empty {self.rows}x{self.cols}>"
        return "\n".join("[" + " ".join(str(a) for a in row) + "]"
                         for row in self.entries)


@dataclass(frozen=True)
class SnfResult:
    """Smith decomposition U * M * V = D of the input M.

    U and V are square and unimodular; D has the same shape as M and is
    diagonal with d1 | d2 | ... and every di >= 0.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    def diagonal(self) -> tuple[int, ...]:
        return self.D.diagonal()


def _min_abs_pivot(m: list[list[int]], start: int, rows: int, cols: int) -> tuple[int, int] | None:
    """Nonzero entry of minimal |value| in the trailing submatrix.

    Choosing the smallest pivot keeps coefficient growth in check; naive
    corner pivoting blows entries up exponentially on modest inputs.
    Ties break lexicographically so the decomposition is deterministic.
    """
    best: tuple[int, int] | None = None
    best_abs = 0
    for i in range(start, rows):
        for j in range(start, cols):
            a = m[i][j]
            if a != 0 and (best is None or abs(a) < best_abs):
                best = (i, j)
                best_abs = abs(a)
                if best_abs == 1:
                    return best
    return best


def smith_normal_form(matrix: IntMatrix) -> SnfResult:
    """Smith normal form with unimodular transforms.

    Works on any rectangular integer matrix, including empty ones, and
    is deterministic for a fixed input.
    """
    rows, cols = matrix.rows, matrix.cols
    m = matrix.to_lists()
    u = IntMatrix.identity(rows).to_lists()
    v = IntMatrix.identity(cols).to_lists()

    def row_op(dst: int, src: int, q: int) -> None:  # row dst -= q * row src
        m[dst] = [a - q * b for a, b in zip(m[dst], m[src])]
        u[dst] = [a - q * b for a, b in zip(u[dst], u[src])]

    def col_op(dst: int, src: int, q: int) -> None:  # col dst -= q * col src
        for r in m:
            r[dst] -= q * r[src]
        for r in v:
            r[dst] -= q * r[src]

    def swap_rows(i: int, j: int) -> None:
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    n = min(rows, cols)
    for k in range(n):
        pivot = _min_abs_pivot(m, k, rows, cols)
        if pivot is None:
            break
        while True:
            pi, pj = pivot
            if pi != k:
                swap_rows(pi, k)
            if pj != k:
                swap_cols(pj, k)
            p = m[k][k]
            # Clear column k, then row k, by exact floor division; any
            # nonzero remainder becomes the next, strictly smaller pivot.
            dirty = False
            for i in range(rows):
                if i != k and m[i][k] != 0:
                    row_op(i, k, m[i][k] // p)
                    if m[i][k] != 0:
                        dirty = True
            for j in range(cols):
                if j != k and m[k][j] != 0:
                    col_op(j, k, m[k][j] // p)
                    if m[k][j] != 0:
                        dirty = True
            if dirty:
                pivot = _min_abs_pivot(m, k, rows, cols)
                continue
            # Pivot must divide the whole trailing block; if not, fold
            # the offending row in and keep reducing.
            offender = None
            for i in range(k + 1, rows):
                for j in range(k + 1, cols):
                    if m[i][j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(k, offender, -1)
            pivot = _min_abs_pivot(m, k, rows, cols)

    # Normalize diagonal signs; flipping a row of U keeps it unimodular.
    for k in range(n):
        if m[k][k] < 0:
            m[k] = [-a for a in m[k]]
            u[k] = [-a for a in u[k]]

    return SnfResult(
        U=IntMatrix.from_rows(u, cols=rows),
        D=IntMatrix.from_rows(m, cols=cols),
        V=IntMatrix.from_rows(v, cols=cols),
    )


def determinant(matrix: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination.

    The empty 0x0 determinant is 1 (empty product).
    """
    if not matrix.is_square:
        raise DimensionError(
            f"determinant needs a square matrix, got {matrix.rows}x{matrix.cols}")
    n = matrix.rows
    if n == 0:
        return 1
    m = matrix.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact division: Bareiss guarantees divisibility by the
                # previous pivot.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def invariant_factors(matrix: IntMatrix) -> tuple[int, ...]:
    """Diagonal entries >= 2 of the Smith form (the torsion data)."""
    return tuple(d for d in smith_normal_form(matrix).diagonal() if d >= 2)


def cokernel_invariants(matrix: IntMatrix) -> tuple[int, tuple[int, ...]]:
    """Free rank and torsion invariant factors of coker(matrix).

    The matrix is read as a presentation: columns are relations among
    ``rows`` free generators.
    """
    diag = smith_normal_form(matrix).diagonal()
    rank = sum(1 for d in diag if d != 0)
    torsion = tuple(d for d in diag if d >= 2)
    return matrix.rows - rank, torsion


def signature(form: IntMatrix) -> int:
    """Signature of a symmetric integer form, exactly.

    Congruence diagonalization over the rationals: at each step a
    nonzero diagonal pivot clears its row and column by a symmetric
    elimination.  A zero diagonal entry with nonzero coupling to some
    later variable x_j is repaired by the basis change x_i -> x_i +/- x_j
    (one of the two signs always produces a nonzero pivot), which keeps
    the procedure total without ever leaving exact arithmetic.  An
    isolated hyperbolic pair then contributes +1 and -1, i.e. zero.
    """
    if not form.is_square:
        raise DimensionError(
            f"signature needs a square matrix, got {form.rows}x{form.cols}")
    if not form.is_symmetric:
        raise FormError("signature needs a symmetric matrix")
    n = form.rows
    q: list[list[Fraction]] = [[Fraction(a) for a in row] for row in form.entries]

    def add_basis(i: int, j: int, s: int) -> None:  # x_i -> x_i + s * x_j
        for r in range(n):
            q[i][r] += s * q[j][r]
        for r in range(n):
            q[r][i] += s * q[r][j]

    sig = 0
    for k in range(n):
        if q[k][k] == 0:
            coupled = next((j for j in range(k + 1, n) if q[k][j] != 0), None)
            if coupled is None:
                continue  # row is dead from here on; contributes nothing
            add_basis(k, coupled, 1)
            if q[k][k] == 0:
                add_basis(k, coupled, -2)  # undo and retry with x_i - x_j
            # q[k][k] = +-2*coupling + q[j][j] for one of the signs; both
            # vanishing would force the coupling itself to vanish.
        p = q[k][k]
        for i in range(k + 1, n):
            if q[i][k] != 0:
                f = q[i][k] / p
                for j in range(k, n):
                    q[i][j] -= f * q[k][j]
                for j in range(k, n):
                    q[j][i] -= f * q[j][k]
        sig += 1 if p > 0 else -1
    return sig


def block_diag(first: IntMatrix, second: IntMatrix) -> IntMatrix:
    """Block-diagonal sum of two square matrices; dimensions add."""
    if not first.is_square or not second.is_square:
        raise DimensionError("block_diag needs square blocks")
    a, b = first.rows, second.rows
    out = [[0] * (a + b) for _ in range(a + b)]
    for i in range(a):
        for j in range(a):
            out[i][j] = first.entries[i][j]
    for i in range(b):
        for j in range(b):
            out[a + i][a + j] = second.entries[i][j]
    return IntMatrix.from_rows(out, cols=a + b)


def block_diag_all(blocks: Iterable[IntMatrix]) -> IntMatrix:
    """Block-diagonal sum of any number of square matrices."""
    out = IntMatrix.empty()
    for blk in blocks:
        out = block_diag(out, blk)
    return out
