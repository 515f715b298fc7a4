"""Command-line front end.

Exit status: 0 on success, 1 when the input is well formed but fails
validation or a computation is refused, 2 when the input or the command
line cannot be read.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from .abelian import AbHom, FgAbGroup
from .algebra import GroupoidFunction, convolve
from .documents import Document, DocumentError, dumps, parse_document
from .groupoid import (
    ConstructionError,
    FiniteGroupoid,
    GroupoidStructureError,
    PresentationError,
    Violation,
    require_valid,
    validate_groupoid,
)
from .moore import INTEGERS, CoefficientSpec, DegreeError, HomologyResult, groupoid_homology, moore_complex
from .nerve import DEFAULT_TUPLE_BUDGET, NerveBudgetError, build_nerve
from .sequences import (
    CoverError,
    ExactnessError,
    LongExactSequence,
    MvCover,
    UctSequence,
    cohomology,
    dual_cochain_complex,
    mv_les,
    snake_les,
    subgroupoid_ses,
    uct_cohomology,
    uct_homology,
    verify_exactness,
)
from .sft import SftError, sft_disjoint_union

FAILURES = (
    ConstructionError,
    CoverError,
    DegreeError,
    ExactnessError,
    GroupoidStructureError,
    NerveBudgetError,
    PresentationError,
    SftError,
)


class UsageError(ValueError):
    """The command cannot be applied to this input."""


class Failure(Exception):
    """Validation failed; the report has already been rendered."""


# -- rendering -------------------------------------------------------------------

def _group_json(g: FgAbGroup) -> dict:
    return g.to_dict()


def _hom_json(f: AbHom) -> list[list[int]]:
    return f.matrix.tolist()


def _table(rows: Sequence[tuple[str, ...]]) -> str:
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _degree_table(result: HomologyResult, symbol: str) -> str:
    rows = [("degree", "group")] + [(f"{symbol}{n}", str(g)) for n, g in enumerate(result.groups)]
    return _table(rows)


def _les_report(les: LongExactSequence) -> tuple[str, dict]:
    bad = verify_exactness(les)
    rows = [("degree", "term", "group", "outgoing map")]
    for k, node in enumerate(les.nodes):
        deg = "" if node.degree < 0 else str(node.degree)
        arrow = ""
        if k < len(les.maps):
            arrow = "zero" if les.maps[k].is_zero() else str(les.maps[k].matrix.tolist())
        rows.append((deg, node.tag, str(node.group), arrow))
    verdict = "exact" if not bad else "NOT exact at " + ", ".join(f"node {v.index}" for v in bad)
    data = {
        "nodes": [{"degree": n.degree, "tag": n.tag, "group": _group_json(n.group)} for n in les.nodes],
        "maps": [_hom_json(f) for f in les.maps],
        "exact": not bad,
        "violations": [v.index for v in bad],
    }
    return _table(rows) + f"\n{verdict}", data


# -- helpers ----------------------------------------------------------------------

def _load(path: str) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text)


def _groupoid(doc: Document, command: str) -> FiniteGroupoid:
    if doc.is_sft:
        raise UsageError(f"'{command}' needs a finite groupoid, not an sft document")
    return require_valid(doc.groupoid)


def _coefficients(text: str) -> CoefficientSpec:
    try:
        return CoefficientSpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _integral(doc: Document, top: int, budget: int) -> HomologyResult:
    if doc.is_sft:
        return sft_disjoint_union(doc.sft_parts, max(top, 1))
    return groupoid_homology(_groupoid(doc, "homology"), top, INTEGERS, budget)


def _subset(table: dict, name: str, what: str) -> tuple[int, ...]:
    if name not in table:
        known = ", ".join(sorted(table)) or "none"
        raise UsageError(f"no {what} named {name!r} (known: {known})")
    return table[name]


def _vector(text: str, size: int, flag: str) -> tuple[int, ...]:
    body = text.strip().removeprefix("[").removesuffix("]")
    try:
        values = tuple(int(v) for v in body.split(",")) if body.strip() else ()
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None
    if len(values) != size:
        raise UsageError(f"{flag}: expected {size} values (one per arrow), got {len(values)}")
    return values


# -- commands ---------------------------------------------------------------------

def cmd_validate(args: argparse.Namespace) -> tuple[str, dict]:
    doc = _load(args.file)
    if doc.is_sft:
        sizes = [p.size for p in doc.sft_parts]
        return f"valid sft document ({len(sizes)} part(s), sizes {sizes})", {"valid": True, "kind": doc.kind}
    g = doc.groupoid
    bad = validate_groupoid(g)
    for name, subset in doc.unit_subsets.items():
        extra = sorted(set(subset) - g.unit_set)
        if extra:
            bad.append(_subset_violation("unit_subsets", name, extra))
    for name, subset in doc.arrow_subsets.items():
        extra = sorted(x for x in subset if not 0 <= x < g.arrow_count)
        if extra:
            bad.append(_subset_violation("arrow_subsets", name, extra))
    data = {
        "valid": not bad,
        "kind": doc.kind,
        "arrows": g.arrow_count,
        "units": len(g.units),
        "violations": [{"axiom": v.axiom, "witness": list(v.witness), "message": v.message} for v in bad],
    }
    if not bad:
        return f"valid groupoid: {g.arrow_count} arrows, {len(g.units)} units", data
    lines = [f"invalid groupoid: {len(bad)} violation(s)"]
    lines += [f"  {v.axiom} at {v.witness}: {v.message}" for v in bad]
    raise Failure("\n".join(lines), data)


def _subset_violation(table: str, name: str, extra: list[int]) -> Violation:
    return Violation(table, (name, *extra), "indices outside the groupoid")


def cmd_homology(args: argparse.Namespace) -> tuple[str, dict]:
    doc = _load(args.file)
    a = _coefficients(args.coefficients)
    if doc.is_sft:
        integral = sft_disjoint_union(doc.sft_parts, max(args.max_degree, 1))
        groups = tuple(uct_homology(integral, a, n).middle for n in range(args.max_degree + 1))
        result = HomologyResult(a, groups)
    else:
        result = groupoid_homology(_groupoid(doc, "homology"), args.max_degree, a, args.budget)
    return _degree_table(result, "H"), {"coefficients": str(a), "degrees": result.to_dict()}


def cmd_cohomology(args: argparse.Namespace) -> tuple[str, dict]:
    doc = _load(args.file)
    a = _coefficients(args.coefficients)
    if doc.is_sft:
        integral = _integral(doc, args.max_degree, args.budget)
        groups = tuple(uct_cohomology(integral, a, n).middle for n in range(args.max_degree + 1))
    else:
        g = _groupoid(doc, "cohomology")
        cc = dual_cochain_complex(moore_complex(build_nerve(g, args.max_degree + 1, args.budget)), a)
        groups = tuple(cohomology(cc, n) for n in range(args.max_degree + 1))
    result = HomologyResult(a, groups)
    return _degree_table(result, "H^"), {"coefficients": str(a), "degrees": result.to_dict()}


def _uct_data(seq: UctSequence) -> dict:
    return {
        "degree": seq.degree,
        "coefficients": str(seq.coefficients),
        "left": _group_json(seq.left),
        "middle": _group_json(seq.middle),
        "right": _group_json(seq.right),
        "iota": _hom_json(seq.iota),
        "kappa": _hom_json(seq.kappa),
    }


def cmd_uct(args: argparse.Namespace) -> tuple[str, dict]:
    doc = _load(args.file)
    a = _coefficients(args.coefficients)
    if args.degree < 0:
        raise UsageError("--degree must be nonnegative")
    seq = uct_homology(_integral(doc, args.degree, args.budget), a, args.degree)
    n = args.degree
    rows = [
        ("term", "group"),
        (f"H{n} (x) {a}", str(seq.left)),
        (f"H{n}(-; {a})", str(seq.middle)),
        (f"Tor(H{n - 1}, {a})" if n else f"Tor(H-1, {a})", str(seq.right)),
    ]
    return _table(rows), _uct_data(seq)


def cmd_mayer_vietoris(args: argparse.Namespace) -> tuple[str, dict]:
    doc = _load(args.file)
    g = _groupoid(doc, "mayer-vietoris")
    u1 = _subset(doc.unit_subsets, args.u1, "unit subset")
    u2 = _subset(doc.unit_subsets, args.u2, "unit subset")
    les = mv_les(MvCover(g, u1, u2), args.max_degree, support_local=args.support_local)
    text, data = _les_report(les)
    if not data["exact"]:
        raise Failure(text, data)
    return text, data


def cmd_subgroupoid_les(args: argparse.Namespace) -> tuple[str, dict]:
    doc = _load(args.file)
    g = _groupoid(doc, "subgroupoid-les")
    arrows = _subset(doc.arrow_subsets, args.sub, "arrow subset")
    try:
        ses = subgroupoid_ses(g, arrows, args.max_degree)
    except ValueError as exc:
        if isinstance(exc, FAILURES):
            raise
        raise ConstructionError(str(exc)) from None
    text, data = _les_report(snake_les(ses, args.max_degree))
    if not data["exact"]:
        raise Failure(text, data)
    return text, data


def cmd_convolve(args: argparse.Namespace) -> tuple[str, dict]:
    doc = _load(args.file)
    g = _groupoid(doc, "convolve")
    f1 = GroupoidFunction(g, _vector(args.f, g.arrow_count, "--f"))
    f2 = GroupoidFunction(g, _vector(args.g, g.arrow_count, "--g"))
    h = convolve(g, f1, f2)
    rows = [("arrow", "value")] + [(str(g.label(a)), str(v)) for a, v in enumerate(h.values)]
    return _table(rows), {"values": list(h.values)}


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="groupoid-homology", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, func: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="input document (JSON)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    command("validate", cmd_validate, "check a document and the groupoid axioms")
    for name, func, help_text in (
        ("homology", cmd_homology, "homology groups in degrees 0..K"),
        ("cohomology", cmd_cohomology, "cohomology groups in degrees 0..K"),
    ):
        p = command(name, func, help_text)
        p.add_argument("--max-degree", type=int, required=True)
        p.add_argument("--coefficients", default="Z", help="Z, Z/m, FG:2,4 or FG:2,4+r1")
        p.add_argument("--budget", type=int, default=DEFAULT_TUPLE_BUDGET, help="largest nerve level allowed")
    p = command("uct", cmd_uct, "universal coefficient sequence in one degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--coefficients", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_TUPLE_BUDGET)
    p = command("mayer-vietoris", cmd_mayer_vietoris, "Mayer-Vietoris long exact sequence of a cover")
    p.add_argument("--u1", required=True, help="name of a unit subset")
    p.add_argument("--u2", required=True, help="name of a unit subset")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--support-local", action="store_true", help="allow unsaturated subsets")
    p = command("subgroupoid-les", cmd_subgroupoid_les, "long exact sequence of a wide subgroupoid")
    p.add_argument("--sub", required=True, help="name of an arrow subset")
    p.add_argument("--max-degree", type=int, required=True)
    p = command("convolve", cmd_convolve, "convolution product of two integer functions")
    p.add_argument("--f", required=True, help="comma-separated values, one per arrow")
    p.add_argument("--g", required=True, help="comma-separated values, one per arrow")
    return parser


def _emit(args: argparse.Namespace, text: str, data: dict, stream) -> None:
    if args.json:
        stream.write(dumps(data))
    else:
        stream.write(text + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "max_degree", 0) < 0:
        print("error: --max-degree must be nonnegative", file=sys.stderr)
        return 2
    try:
        text, data = args.func(args)
    except Failure as exc:
        text, data = exc.args
        _emit(args, text, data, sys.stdout)
        return 1
    except (DocumentError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FAILURES as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 1
    _emit(args, text, data, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
