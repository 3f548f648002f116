"""Command-line interface.

Subcommands: invariants, obstruct, snf, alink, braid.  Knots are given
as catalog names, inline Seifert matrices, or JSON knot files; matrices
travel as arrays of arrays of decimal strings so arbitrary-precision
values survive machine-readable output.  Exit status is a stable
scripting contract: 0 on success (whatever the verdict), 2 on validation
errors, 3 on parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .abelian import DoublingHypothesisError, is_double
from .alink import ClassificationError, InducedMap, alinking, mod2_alinking
from .braid import BraidWord, CatalogError, NotAKnotError, catalog, seifert_matrix_from_braid
from .exactla import (
    DimensionError,
    FormError,
    IntMatrix,
    signature,
    smith_normal_form,
)
from .obstruct import Verdict, obstruct_ribbon_equivalent, obstruct_ribbon_trivial
from .spinmu import (
    SeifertValidationError,
    SpinStructureError,
    TwoKnotInvariants,
    validate_seifert,
)

VALIDATION_ERRORS = (
    SeifertValidationError, SpinStructureError, NotAKnotError, CatalogError,
    ClassificationError, DimensionError, FormError, DoublingHypothesisError,
    ValueError,
)


class CliParseError(Exception):
    """Malformed command-line or file input."""


@dataclass(frozen=True)
class KnotRecord:
    """A resolved knot input: one source, plus an optional even form.

    When an even bounding form is present it is the route to mu and
    cover homology (it is the hypersurface data for the 2-knot itself,
    e.g. for twist spins other than the 2-twist spin); a Seifert matrix
    alone means the 2-twist-spin route.
    """

    name: str
    source: str  # catalog | braid | seifert-matrix | even-form
    seifert: Any = None           # SeifertMatrix | None
    even_form: IntMatrix | None = None

    def invariants(self) -> TwoKnotInvariants:
        if self.even_form is not None:
            return TwoKnotInvariants.from_even_form(self.even_form)
        if self.seifert is not None:
            return TwoKnotInvariants.from_seifert(self.seifert)
        raise CliParseError(f"knot {self.name!r} carries no usable payload")


def _parse_matrix_text(text: str) -> IntMatrix:
    """Inline matrix: JSON array of arrays of ints or decimal strings."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliParseError(
            f"matrix parse error at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from None
    return _matrix_from_json(data)


def _matrix_from_json(data: Any) -> IntMatrix:
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        raise CliParseError("matrix must be an array of arrays")
    try:
        return IntMatrix.from_decimal_rows(data)
    except (ValueError, DimensionError) as exc:
        raise CliParseError(f"bad matrix: {exc}") from None


def _knot_from_file(path: Path) -> KnotRecord:
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise CliParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CliParseError(
            f"{path}: parse error at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from None
    if not isinstance(data, dict):
        raise CliParseError(f"{path}: knot file must be a JSON object")
    sources = [k for k in ("catalog", "braid", "seifert_matrix") if k in data]
    even_form = (_matrix_from_json(data["even_form"])
                 if "even_form" in data else None)
    if len(sources) > 1 or (not sources and even_form is None):
        raise CliParseError(
            f"{path}: need one of catalog/braid/seifert_matrix (or an "
            f"even_form), got {sources or 'none'}")
    name = str(data.get("name", path.stem))
    if not sources:
        return KnotRecord(name=name, source="even-form", even_form=even_form)
    (source,) = sources
    if source == "catalog":
        entry = _knot_from_catalog(str(data["catalog"]))
        return entry if even_form is None else KnotRecord(
            name=name, source="catalog", seifert=entry.seifert,
            even_form=even_form)
    if source == "braid":
        spec = data["braid"]
        if not isinstance(spec, dict) or "strands" not in spec or "letters" not in spec:
            raise CliParseError(f"{path}: braid needs 'strands' and 'letters'")
        word = BraidWord(int(spec["strands"]),
                         tuple(int(x) for x in spec["letters"]))
        return KnotRecord(name=name, source="braid",
                          seifert=seifert_matrix_from_braid(word),
                          even_form=even_form)
    matrix = _matrix_from_json(data["seifert_matrix"])
    return KnotRecord(name=name, source="seifert-matrix",
                      seifert=validate_seifert(matrix), even_form=even_form)


def _knot_from_catalog(name: str) -> KnotRecord:
    entry = catalog(name)
    return KnotRecord(name=entry.name, source="catalog",
                      seifert=entry.seifert, even_form=entry.even_form)


def resolve_knot(spec: str) -> KnotRecord:
    """Catalog name, path to a JSON knot file, or inline Seifert matrix."""
    if spec.startswith("@"):
        return _knot_from_file(Path(spec[1:]))
    if spec.lstrip().startswith("["):
        return KnotRecord(name="<inline>", source="seifert-matrix",
                          seifert=validate_seifert(_parse_matrix_text(spec)))
    path = Path(spec)
    if spec.endswith(".json") or path.is_file():
        return _knot_from_file(path)
    return _knot_from_catalog(spec)


# -- reports ---------------------------------------------------------

def _invariant_record(knot: KnotRecord) -> dict[str, Any]:
    inv = knot.invariants()
    half = is_double(inv.cover_torsion)
    record: dict[str, Any] = {
        "name": knot.name,
        "source": knot.source,
        "mu": str(inv.mu.value),
        "modulus": "16",
        "signature": str(signature(inv.form)),
        "form_determinant": str(inv.form_determinant),
        "h1_invariant_factors": [str(d) for d in inv.cover_torsion.invariant_factors],
        "h1_is_double": half is not None,
        "h1_double_half": None if half is None else
            [str(d) for d in half.invariant_factors],
        "form": inv.form.to_decimal_rows(),
    }
    if knot.seifert is not None:
        record["seifert_matrix"] = knot.seifert.matrix.to_decimal_rows()
    return record


def _print_invariant_text(record: dict[str, Any], out) -> None:
    print(f"name: {record['name']}  (source: {record['source']})", file=out)
    print(f"mu = {record['mu']} (mod 16)", file=out)
    print(f"signature = {record['signature']}", file=out)
    print(f"form determinant = {record['form_determinant']}", file=out)
    factors = record["h1_invariant_factors"]
    h1 = " ⊕ ".join(f"Z{d}" for d in factors) if factors else "0"
    print(f"H1(Seifert hypersurface) = {h1}", file=out)
    if record["h1_is_double"]:
        half = record["h1_double_half"]
        rendered = " ⊕ ".join(f"Z{d}" for d in half) if half else "0"
        print(f"doubling test: passes, half = {rendered}", file=out)
    else:
        print("doubling test: fails (not of the form G + G)", file=out)


def _verdict_record(verdict: Verdict, names: tuple[str, str]) -> dict[str, Any]:
    return {
        "first": names[0],
        "second": names[1],
        "conclusion": verdict.conclusion.value,
        "rule": verdict.rule,
        "mu_pair": None if verdict.mu_pair is None else
            [str(m.value) for m in verdict.mu_pair],
        "torsion_witness": None if verdict.torsion_witness is None else
            [str(d) for d in verdict.torsion_witness.invariant_factors],
        "explanation": verdict.explanation(),
    }


def _print_verdict_text(record: dict[str, Any], out) -> None:
    print(f"{record['first']} vs {record['second']}:", file=out)
    print(f"conclusion: {record['conclusion']}", file=out)
    print(record["explanation"], file=out)


def _emit(record: dict[str, Any], as_json: bool, printer, out) -> None:
    if as_json:
        print(json.dumps(record), file=out)
    else:
        printer(record, out)


# -- subcommands -----------------------------------------------------

def _cmd_invariants(args, out) -> int:
    if args.batch:
        directory = Path(args.batch)
        if not directory.is_dir():
            raise CliParseError(f"batch path {directory} is not a directory")
        for path in sorted(directory.glob("*.json")):
            record = _invariant_record(_knot_from_file(path))
            print(json.dumps(record), file=out)
        return 0
    if args.knot is None:
        raise CliParseError("invariants needs a knot argument or --batch DIR")
    record = _invariant_record(resolve_knot(args.knot))
    _emit(record, args.json, _print_invariant_text, out)
    return 0


def _cmd_obstruct(args, out) -> int:
    first = resolve_knot(args.first)
    if args.second is None:
        verdict = obstruct_ribbon_trivial(first.invariants())
        names = (first.name, "trivial 2-knot")
    else:
        second = resolve_knot(args.second)
        verdict = obstruct_ribbon_equivalent(first.invariants(),
                                             second.invariants())
        names = (first.name, second.name)
    _emit(_verdict_record(verdict, names), args.json, _print_verdict_text, out)
    return 0


def _cmd_snf(args, out) -> int:
    if args.file:
        matrix = _knot_file_matrix(args)
    elif args.matrix is not None:
        matrix = _parse_matrix_text(args.matrix)
    else:
        raise CliParseError("snf needs a matrix argument or --file")
    result = smith_normal_form(matrix)
    record = {"d": result.D.to_decimal_rows()}
    if args.full:
        record["u"] = result.U.to_decimal_rows()
        record["v"] = result.V.to_decimal_rows()
    if args.json:
        print(json.dumps(record), file=out)
    else:
        print("D =", file=out)
        print(result.D, file=out)
        if args.full:
            print("U =", file=out)
            print(result.U, file=out)
            print("V =", file=out)
            print(result.V, file=out)
    return 0


def _knot_file_matrix(args) -> IntMatrix:
    path = Path(args.file)
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise CliParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CliParseError(
            f"{path}: parse error at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from None
    return _matrix_from_json(data)


_COLUMN_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def _parse_induced_map(text: str) -> InducedMap:
    """Columns "(a,b) (c,d) ..." or a JSON 2-row matrix."""
    if text.lstrip().startswith("["):
        matrix = _parse_matrix_text(text)
        if matrix.rows != 2:
            raise CliParseError(
                f"induced map needs exactly 2 rows, got {matrix.rows}")
        return InducedMap(matrix)
    columns = [[int(a), int(b)] for a, b in _COLUMN_RE.findall(text)]
    leftover = _COLUMN_RE.sub("", text).strip(" ,;\t\n")
    if leftover or not columns:
        raise CliParseError(
            f"cannot parse induced map from {text!r}; use \"(a,b) (c,d)\" "
            "columns or a JSON 2-row matrix")
    return InducedMap.from_columns(columns)


def _cmd_alink(args, out) -> int:
    if args.file:
        matrix = _knot_file_matrix(args)
        if matrix.rows != 2:
            raise CliParseError(
                f"induced map needs exactly 2 rows, got {matrix.rows}")
        iota = InducedMap(matrix)
    elif args.matrix is not None:
        iota = _parse_induced_map(args.matrix)
    else:
        raise CliParseError("alink needs a matrix argument or --file")
    v = alinking(iota)
    record = {"alinking": str(v), "mod2": str(mod2_alinking(iota))}
    if args.json:
        print(json.dumps(record), file=out)
    else:
        print(f"alinking = {v}", file=out)
        print(f"alinking mod 2 = {v % 2}", file=out)
    return 0


def _cmd_braid(args, out) -> int:
    letters: list[int] = []
    for token in args.letters:
        for piece in token.split():
            try:
                letters.append(int(piece))
            except ValueError:
                raise CliParseError(f"bad braid letter {piece!r}") from None
    word = BraidWord(args.strands, tuple(letters))
    seifert = seifert_matrix_from_braid(word)
    record = _invariant_record(KnotRecord(
        name=f"closure of {letters} on {args.strands} strands",
        source="braid", seifert=seifert))
    if args.json:
        print(json.dumps(record), file=out)
    else:
        print("Seifert matrix:", file=out)
        print(seifert.matrix, file=out)
        _print_invariant_text(record, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ribbonmu",
        description=("Ribbon-move obstructions of 2-knots: mu-invariants, "
                     "branched-cover homology, torsion doubling tests, "
                     "Smith normal forms, and alinking numbers, all over "
                     "exact integer arithmetic."))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="mu, signature, determinant, and "
                       "cover homology of a 2-knot")
    p.add_argument("knot", nargs="?", help="catalog name, knot file, or "
                   "inline Seifert matrix")
    p.add_argument("--batch", metavar="DIR", help="process every *.json knot "
                   "file in DIR, one JSON record per line")
    p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("obstruct", help="test ribbon-move equivalence "
                       "obstructions between two 2-knots")
    p.add_argument("first", help="knot spec")
    p.add_argument("second", nargs="?", help="knot spec; omitted = trivial 2-knot")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    p.add_argument("matrix", nargs="?", help="inline JSON matrix")
    p.add_argument("--file", help="read the matrix from a JSON file")
    p.add_argument("--full", action="store_true", help="also print U and V")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("alink", help="alinking number of a (sphere, torus)-link")
    p.add_argument("matrix", nargs="?", help="columns \"(a,b) (c,d)\" or JSON "
                   "2-row matrix")
    p.add_argument("--file", help="read the 2-row matrix from a JSON file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("braid", help="Seifert matrix of a braid closure")
    p.add_argument("letters", nargs="+", help="signed generator indices, "
                   "e.g. 1 1 1 or \"1 -2 1 -2\"")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--json", action="store_true")
    return parser


_COMMANDS = {
    "invariants": _cmd_invariants,
    "obstruct": _cmd_obstruct,
    "snf": _cmd_snf,
    "alink": _cmd_alink,
    "braid": _cmd_braid,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, out)
    except CliParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())
