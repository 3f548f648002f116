"""Alinking numbers of (sphere, torus)-links in the 4-sphere.

The input is the map on first cohomology induced by inclusion of the
torus component into the sphere complement: an integer matrix with two
rows (the torus has H^1 = Z^2) and one column per generator of the
complement's H^1.  The alinking number classifies the cokernel of that
map:

    Z + Z          -> 0
    Z              -> 1
    Z + Z/n, n >= 2 -> n

Cokernels outside those three shapes (finite, or with two torsion
summands) are not assigned a value; they raise rather than being
silently normalized.  Its mod-2 reduction is the invariant that changes
under a single ribbon-move resolution, in the finite-type sense.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactla import IntMatrix, smith_normal_form


class ClassificationError(ValueError):
    """Cokernel shape outside the three classified cases."""


@dataclass(frozen=True)
class InducedMap:
    """Map into H^1 of the torus: a 2 x c integer matrix."""

    matrix: IntMatrix

    def __post_init__(self) -> None:
        if self.matrix.rows != 2:
            raise ValueError(
                f"induced map must have exactly 2 rows, got {self.matrix.rows}")

    @staticmethod
    def from_columns(columns: list[list[int]]) -> InducedMap:
        rows = [[col[0] for col in columns], [col[1] for col in columns]]
        if not columns:
            rows = [[], []]
        return InducedMap(IntMatrix.from_rows(rows, cols=len(columns)))


def alinking(iota: InducedMap) -> int:
    """The alinking number read from coker(iota) = Z^2 / Im(iota)."""
    diag = list(smith_normal_form(iota.matrix).diagonal())
    diag += [0] * (2 - len(diag))  # fewer columns than rows: pad with zeros
    d1, d2 = diag
    if d1 == 0 and d2 == 0:
        return 0
    if d2 == 0:
        # Cokernel Z + Z/d1: value d1 for d1 >= 2, and 1 when the
        # torsion summand is trivial.
        return d1 if d1 >= 2 else 1
    raise ClassificationError(
        f"cokernel Z/{d1} + Z/{d2} has free rank 0; alinking is only "
        "defined on cokernels Z+Z, Z, and Z+Z/n")


def mod2_alinking(iota: InducedMap) -> int:
    """The alinking number reduced mod 2."""
    return alinking(iota) % 2
