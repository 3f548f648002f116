"""The mu-invariant pipeline for 2-knots built from Seifert matrices.

A square integer matrix S with det(S - S^t) = +-1 is the Seifert matrix
of a 1-knot.  Two facts drive everything downstream:

* The symmetrized form Q = S + S^t is even (every diagonal entry is 2 *
  a self-linking) and presents the first homology of the double cover
  of the 3-sphere branched along the knot.  Since Q is congruent to
  S - S^t mod 2, its determinant is odd, so that homology is finite and
  has no 2-torsion -- the punctured branched cover carries a unique
  spin structure.
* That punctured cover is a Seifert hypersurface for the 2-twist spin
  of the knot, and the mu-invariant (Rokhlin invariant, a residue mod
  16) of the capped cover equals the signature of Q reduced mod 16.

The same signature recipe applies to any user-supplied even symmetric
form with odd determinant that bounds the relevant 3-manifold; that
route covers 2-knots such as the 5-twist-spun trefoil, whose natural
hypersurface is the punctured Poincare sphere bounded by the E8 form.

There is no general algorithm for the mu-invariant of an arbitrary
2-knot; these two algebraic routes are the ones this package computes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abelian import FiniteAbelianGroup, from_presentation
from .exactla import (
    DimensionError,
    FormError,
    IntMatrix,
    block_diag_all,
    determinant,
    signature,
)


class SeifertValidationError(ValueError):
    """The matrix is not the Seifert matrix of a knot."""


class SpinStructureError(ValueError):
    """The bounded 3-manifold has more than one spin structure."""


@dataclass(frozen=True)
class SeifertMatrix:
    """A validated knot Seifert matrix; construct via :func:`validate_seifert`."""

    matrix: IntMatrix

    @property
    def size(self) -> int:
        return self.matrix.rows


@dataclass(frozen=True)
class Mu:
    """A residue class mod 16, stored by its representative in 0..15."""

    value: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", int(self.value) % 16)

    def __add__(self, other: Mu) -> Mu:
        return Mu(self.value + other.value)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        # The explicit suffix avoids the sign ambiguity of e.g. a
        # signature of -2 rendering as 14.
        return f"{self.value} (mod 16)"


def validate_seifert(matrix: IntMatrix) -> SeifertMatrix:
    """Check det(S - S^t) = +-1 and wrap the matrix.

    The empty matrix is the Seifert matrix of the unknot and passes with
    determinant 1.
    """
    if not matrix.is_square:
        raise SeifertValidationError(
            f"Seifert matrix must be square, got {matrix.rows}x{matrix.cols}")
    d = determinant(matrix - matrix.transpose())
    if d not in (1, -1):
        raise SeifertValidationError(
            f"not a knot Seifert matrix: det(S - S^t) = {d}, need +-1")
    return SeifertMatrix(matrix)


def intersection_form(seifert: SeifertMatrix) -> IntMatrix:
    """The even symmetric form S + S^t of a bounding 4-manifold."""
    return seifert.matrix + seifert.matrix.transpose()


def branched_double_cover_h1(seifert: SeifertMatrix) -> FiniteAbelianGroup:
    """First homology of the branched double cover, presented by S + S^t.

    Always finite: the validation determinant forces det(S + S^t) odd.
    """
    return from_presentation(intersection_form(seifert))


def mu_two_twist_spin(seifert: SeifertMatrix) -> Mu:
    """Mu-invariant of the 2-twist-spun 2-knot of the knot with matrix S."""
    return mu_from_even_form(intersection_form(seifert))


def mu_from_even_form(form: IntMatrix) -> Mu:
    """Signature mod 16 of an even symmetric form with odd determinant.

    The evenness makes the bounded 4-manifold spin; the odd determinant
    makes the spin structure on its boundary unique, so the residue is
    well defined.
    """
    if not form.is_square:
        raise DimensionError(
            f"bounding form must be square, got {form.rows}x{form.cols}")
    if not form.is_symmetric:
        raise FormError("bounding form must be symmetric")
    for i in range(form.rows):
        if form[i, i] % 2 != 0:
            raise FormError(
                f"form not even: diagonal entry {form[i, i]} at index {i}")
    if determinant(form) % 2 == 0:
        raise SpinStructureError(
            "spin structure not unique: even form determinant; recipe inapplicable")
    return Mu(signature(form))


def mu_boundary_link_sum(components: Sequence[SeifertMatrix]) -> Mu:
    """Mu of a boundary 2-link with the given components: the mod-16 sum.

    The components bound disjoint Seifert hypersurfaces, so the capped
    hypersurface of the link is the disjoint union and its bounding form
    is the block-diagonal sum; signature additivity makes the mu of the
    block form equal the sum of component mu values, which is checked
    here rather than assumed.
    """
    total = Mu(0)
    for s in components:
        total = total + mu_two_twist_spin(s)
    block = block_diag_all(intersection_form(s) for s in components)
    if components:
        assert mu_from_even_form(block).value == total.value
    return total


@dataclass(frozen=True)
class TwoKnotInvariants:
    """The computable invariant record of a 2-knot.

    ``form`` is the even bounding form the invariants were read from
    (S + S^t for a 2-twist spin); ``cover_torsion`` is the torsion of
    the first homology of the chosen Seifert hypersurface.
    """

    mu: Mu
    cover_torsion: FiniteAbelianGroup
    form_determinant: int
    form: IntMatrix

    @staticmethod
    def from_seifert(seifert: SeifertMatrix) -> TwoKnotInvariants:
        form = intersection_form(seifert)
        return TwoKnotInvariants(
            mu=mu_from_even_form(form),
            cover_torsion=from_presentation(form),
            form_determinant=determinant(form),
            form=form,
        )

    @staticmethod
    def from_even_form(form: IntMatrix) -> TwoKnotInvariants:
        mu = mu_from_even_form(form)  # validates shape, evenness, parity
        return TwoKnotInvariants(
            mu=mu,
            cover_torsion=from_presentation(form),
            form_determinant=determinant(form),
            form=form,
        )

    @staticmethod
    def unknot() -> TwoKnotInvariants:
        return TwoKnotInvariants.from_seifert(SeifertMatrix(IntMatrix.empty()))
