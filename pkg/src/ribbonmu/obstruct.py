"""Executable obstructions against ribbon-move equivalence of 2-knots.

Two necessary conditions for 2-links to be ribbon-move equivalent are
implemented as a verdict engine:

* mu test: ribbon-move equivalent 2-links have equal mu-invariants.
* torsion test: for ANY Seifert hypersurfaces of the two links, the
  torsion of the direct sum of their first homologies is a double
  G + G.  Comparing against the trivial 2-knot (whose hypersurface can
  be taken with trivial homology) this says the knot's own cover
  torsion must be a double.

Verdicts are one-sided: the engine reports an obstruction or reports
that it found none; it never claims two 2-knots ARE ribbon-move
equivalent.  The mu test fires first, so every verdict names exactly
one rule.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .abelian import FiniteAbelianGroup, direct_sum, is_double
from .spinmu import Mu, SeifertMatrix, TwoKnotInvariants


class Conclusion(enum.Enum):
    OBSTRUCTED_BY_MU = "obstructed-by-mu"
    OBSTRUCTED_BY_TORSION = "obstructed-by-torsion"
    NO_OBSTRUCTION_FOUND = "no-obstruction-found"


MU_RULE = "ribbon-move equivalent 2-links have equal mu-invariants"
TORSION_RULE = ("combined Seifert-hypersurface torsion of ribbon-move "
                "equivalent 2-links is a double G + G")


@dataclass(frozen=True)
class Verdict:
    """Outcome of an obstruction test, with the witnesses that fired it."""

    conclusion: Conclusion
    rule: str
    mu_pair: tuple[Mu, Mu] | None = None
    torsion_witness: FiniteAbelianGroup | None = None

    def __post_init__(self) -> None:
        if self.conclusion is Conclusion.OBSTRUCTED_BY_MU:
            assert self.mu_pair is not None
            assert self.mu_pair[0].value != self.mu_pair[1].value
        if self.conclusion is Conclusion.OBSTRUCTED_BY_TORSION:
            assert self.torsion_witness is not None
            assert is_double(self.torsion_witness) is None

    @property
    def obstructed(self) -> bool:
        return self.conclusion is not Conclusion.NO_OBSTRUCTION_FOUND

    def explanation(self) -> str:
        if self.conclusion is Conclusion.OBSTRUCTED_BY_MU:
            a, b = self.mu_pair
            return (f"mu-invariants differ ({a} vs {b}); {self.rule}")
        if self.conclusion is Conclusion.OBSTRUCTED_BY_TORSION:
            return (f"combined cover torsion {self.torsion_witness} is not "
                    f"a double; {self.rule}")
        return ("no obstruction found: mu-invariants agree and the combined "
                "torsion is a double (this is NOT a proof of equivalence)")


Knot = SeifertMatrix | TwoKnotInvariants


def _invariants(knot: Knot) -> TwoKnotInvariants:
    if isinstance(knot, TwoKnotInvariants):
        return knot
    return TwoKnotInvariants.from_seifert(knot)


def obstruct_ribbon_equivalent(first: Knot, second: Knot) -> Verdict:
    """Test whether two 2-knots can be ribbon-move equivalent."""
    a = _invariants(first)
    b = _invariants(second)
    if a.mu.value != b.mu.value:
        return Verdict(Conclusion.OBSTRUCTED_BY_MU, MU_RULE,
                       mu_pair=(a.mu, b.mu))
    combined = direct_sum(a.cover_torsion, b.cover_torsion)
    if is_double(combined) is None:
        return Verdict(Conclusion.OBSTRUCTED_BY_TORSION, TORSION_RULE,
                       torsion_witness=combined)
    return Verdict(Conclusion.NO_OBSTRUCTION_FOUND,
                   "necessary conditions all hold")


def obstruct_ribbon_trivial(knot: Knot) -> Verdict:
    """Test whether a 2-knot can be ribbon-move equivalent to the trivial one."""
    return obstruct_ribbon_equivalent(knot, TwoKnotInvariants.unknot())
