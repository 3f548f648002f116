"""Braid-word front end: Seifert matrices of braid closures, and a catalog.

A braid word on n strands is a list of nonzero letters with |letter| < n;
letter +a / -a is a positive / negative crossing between strands a and
a+1.  Its closure is a knot exactly when the underlying permutation is a
single n-cycle.

The Seifert surface of the closure consists of n disks (one per strand)
joined by one twisted band per letter.  First homology is generated by
one loop per pair of CONSECUTIVE occurrences of the same generator; the
loop runs through those two bands and the disks between them.  The
Seifert matrix entry (x, y) is the linking number of loop x with the
positive pushoff of loop y, and only three interaction shapes are
nonzero.  Writing a loop as the interval (start, end) of its two word
positions, and ordering loops by start position:

* a loop through bands with signs (e1, e2) has self-linking (e1 + e2)/2;
* loops in the same generator column sharing a band interact through the
  band's half twist: a shared positive band puts -1 in the (later,
  earlier) slot, a shared negative band puts +1 in the (earlier, later)
  slot;
* loops in adjacent columns whose intervals interleave cross once on the
  shared disk: if the earlier loop lives in the higher column the
  (later, earlier) slot gets -1, otherwise the (earlier, later) slot
  gets +1.

Sign convention: the positive trefoil word [1, 1, 1] reproduces the
catalog trefoil invariants (signature +2, so mu = 2 for its 2-twist
spin); feeding the mirror word negates every signature.  Any such global
choice is legitimate -- mirror images swap under it -- and this one keeps
the braid and catalog routes consistent with each other.

Isolated occurrences of the outermost generators are Markov
destabilizations and are removed before the surface is read off; an
isolated interior generator contributes no homology generator and no
interactions, so it is harmless to the matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactla import IntMatrix, determinant
from .spinmu import SeifertMatrix, validate_seifert


class NotAKnotError(ValueError):
    """The braid closure has more than one component."""


class CatalogError(LookupError):
    """Unknown catalog entry."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group on ``strands`` strands."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise ValueError(
                    f"letter {letter} out of range for {self.strands} strands")

    def permutation(self) -> tuple[int, ...]:
        """strand_at[p] = index of the strand ending at position p."""
        at = list(range(self.strands))
        for letter in self.letters:
            a = abs(letter) - 1
            at[a], at[a + 1] = at[a + 1], at[a]
        return tuple(at)

    def closure_components(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        cycles = 0
        for start in range(self.strands):
            if not seen[start]:
                cycles += 1
                p = start
                while not seen[p]:
                    seen[p] = True
                    p = perm[p]
        return cycles

    @property
    def is_knot_closure(self) -> bool:
        return self.closure_components() == 1


def _destabilize(word: list[int], strands: int) -> tuple[list[int], int]:
    """Strip isolated occurrences of the outermost generators.

    A single use of generator strands-1 (or, after flipping the braid,
    of generator 1) is a Markov stabilization; removing it and the spare
    strand leaves the closure unchanged.
    """
    while strands > 1:
        counts = [0] * strands
        for letter in word:
            counts[abs(letter)] += 1
        top = strands - 1
        if counts[top] == 1:
            word = [x for x in word if abs(x) != top]
            strands -= 1
        elif counts[1] == 1:
            word = [x - (1 if x > 0 else -1) for x in word if abs(x) != 1]
            strands -= 1
        else:
            break
    return word, strands


def _consecutive_pairs(word: list[int]) -> list[tuple[int, int]]:
    """(position, next position of the same generator) for each loop."""
    nxt: list[int | None] = [None] * len(word)
    last: dict[int, int] = {}
    for p, letter in enumerate(word):
        g = abs(letter)
        if g in last:
            nxt[last[g]] = p
        last[g] = p
    return [(i, n) for i, n in enumerate(nxt) if n is not None]


def seifert_matrix_from_braid(braid: BraidWord) -> SeifertMatrix:
    """Seifert matrix of the braid closure; the closure must be a knot."""
    if not braid.is_knot_closure:
        raise NotAKnotError(
            f"closure has {braid.closure_components()} components, not a knot")
    word, _ = _destabilize(list(braid.letters), braid.strands)
    loops = _consecutive_pairs(word)
    m = len(loops)
    sign = lambda x: 1 if x > 0 else -1
    v = [[0] * m for _ in range(m)]
    for a, (i, e) in enumerate(loops):
        v[a][a] = (sign(word[i]) + sign(word[e])) // 2
        for b in range(a + 1, m):
            j, f = loops[b]
            ga, gb = abs(word[i]), abs(word[j])
            if ga == gb:
                if e == j:  # consecutive loops sharing the band at j
                    if word[j] > 0:
                        v[b][a] = -1
                    else:
                        v[a][b] = 1
            elif abs(ga - gb) == 1 and j < e < f:  # interleaved intervals
                if ga > gb:
                    v[b][a] = -1
                else:
                    v[a][b] = 1
    return validate_seifert(IntMatrix.from_rows(v, cols=m))


def alexander_at(seifert: SeifertMatrix, t: int) -> int:
    """Exact value det(S - t * S^t) of the Alexander polynomial form.

    At t = 1 this is the knot validation determinant +-1; at t = -1 it
    is det(S + S^t), the branched double cover homology order up to
    sign.
    """
    s = seifert.matrix
    return determinant(s - s.transpose().scale(t))


@dataclass(frozen=True)
class CatalogEntry:
    """A named knot with its Seifert matrix and/or an even bounding form."""

    name: str
    summary: str
    seifert: SeifertMatrix | None = None
    even_form: IntMatrix | None = None


# Even unimodular rank-8 form bounding the Poincare sphere (punctured,
# it is a Seifert hypersurface for the 5-twist-spun trefoil): chain of
# eight norm-2 vectors with the eighth node attached to the fifth.
E8 = IntMatrix.from_rows([
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, -1],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 2],
])

_CATALOG = {
    "trefoil": CatalogEntry(
        name="trefoil",
        summary="trefoil knot; 2-twist spin has mu = 2 and cover homology Z3",
        seifert=validate_seifert(IntMatrix.from_rows([[1, 1], [0, 1]])),
    ),
    "figure8": CatalogEntry(
        name="figure8",
        summary="figure-eight knot; 2-twist spin has mu = 0 and cover homology Z5",
        seifert=validate_seifert(IntMatrix.from_rows([[1, 1], [0, -1]])),
    ),
    "unknot": CatalogEntry(
        name="unknot",
        summary="trivial knot; empty Seifert matrix, trivial 2-twist spin",
        seifert=validate_seifert(IntMatrix.empty()),
    ),
    "poincare": CatalogEntry(
        name="poincare",
        summary=("5-twist-spun trefoil via the punctured Poincare sphere, "
                 "bounded by the E8 form; mu = 8"),
        even_form=E8,
    ),
}


def catalog(name: str) -> CatalogEntry:
    """Look up a named knot; unknown names list what is available."""
    try:
        return _CATALOG[name]
    except KeyError:
        raise CatalogError(
            f"unknown catalog entry {name!r}; available: "
            + ", ".join(sorted(_CATALOG))) from None


def catalog_names() -> tuple[str, ...]:
    return tuple(sorted(_CATALOG))
