"""JSON input documents: parsing into groupoids or SFT specs, and serialization back.

Every document is a JSON object with a ``"kind"`` key.  Groupoid documents
may carry ``"unit_subsets"`` and ``"arrow_subsets"``, each a mapping from a
name to a list of indices, used by covers and subgroupoids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .groupoid import (
    FiniteGroupoid,
    cyclic_group_table,
    derive_structure,
    disjoint_union,
    equivalence_relation_groupoid,
    group_bundle,
    group_groupoid,
    pair_groupoid,
    transformation_groupoid,
    unit_groupoid,
)
from .sft import SftSpec


class DocumentError(ValueError):
    """Malformed document: bad JSON or wrong shape.  ``line``/``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None, path: str = "$") -> None:
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(f"{where}{path}: {message}")
        self.line, self.column, self.path = line, column, path


@dataclass(frozen=True)
class Document:
    """A parsed input: exactly one of ``groupoid`` or ``sft_parts`` is set."""

    kind: str
    groupoid: FiniteGroupoid | None = None
    sft_parts: tuple[SftSpec, ...] | None = None
    unit_subsets: dict[str, tuple[int, ...]] = field(default_factory=dict)
    arrow_subsets: dict[str, tuple[int, ...]] = field(default_factory=dict)

    @property
    def is_sft(self) -> bool:
        return self.sft_parts is not None


def _locate(text: str, key: str) -> tuple[int | None, int | None]:
    """Best-effort 1-based position of the first occurrence of ``"key"``."""
    pos = text.find(json.dumps(key))
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    return line, pos - (text.rfind("\n", 0, pos) + 1) + 1


class _Reader:
    def __init__(self, text: str) -> None:
        self.text = text

    def fail(self, message: str, path: str, key: str | None = None) -> DocumentError:
        line, col = _locate(self.text, key) if key else (None, None)
        return DocumentError(message, line, col, path)

    def get(self, obj: dict, key: str, path: str, kind: type | tuple = object) -> Any:
        if key not in obj:
            raise self.fail(f"missing key {key!r}", path)
        value = obj[key]
        if not isinstance(value, kind) or isinstance(value, bool):
            raise self.fail(f"{key!r} has the wrong type ({type(value).__name__})", f"{path}.{key}", key)
        return value

    def int_list(self, value: Any, path: str, key: str) -> list[int]:
        if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
            raise self.fail("expected a list of integers", path, key)
        return value

    def int_matrix(self, value: Any, path: str, key: str) -> list[list[int]]:
        if not isinstance(value, list):
            raise self.fail("expected a list of integer rows", path, key)
        return [self.int_list(row, f"{path}[{i}]", key) for i, row in enumerate(value)]

    def nonneg_int(self, obj: dict, key: str, path: str) -> int:
        v = self.get(obj, key, path, int)
        if v < 0:
            raise self.fail(f"{key!r} must be nonnegative", f"{path}.{key}", key)
        return v


def _labels_from_json(value: Any) -> Any:
    return tuple(_labels_from_json(v) for v in value) if isinstance(value, list) else value


def _labels_to_json(value: Any) -> Any:
    return [_labels_to_json(v) for v in value] if isinstance(value, (tuple, list)) else value


def _build(rd: _Reader, obj: Any, path: str) -> FiniteGroupoid | tuple[SftSpec, ...]:
    if not isinstance(obj, dict):
        raise rd.fail("expected an object", path)
    kind = rd.get(obj, "kind", path, str)
    p = f"{path}({kind})"
    if kind == "finite_groupoid":
        n = rd.nonneg_int(obj, "arrow_count", p)
        inverse = rd.int_list(rd.get(obj, "inverse", p), f"{p}.inverse", "inverse")
        compose = rd.int_matrix(rd.get(obj, "compose", p), f"{p}.compose", "compose")
        if any(len(t) != 3 for t in compose):
            raise rd.fail("compose entries must be [a, b, a*b] triples", f"{p}.compose", "compose")
        labels = _labels_from_json(obj["labels"]) if "labels" in obj else None
        full = [k in obj for k in ("units", "source", "range")]
        if any(full) and not all(full):
            raise rd.fail("give all of units, source and range, or none of them", p)
        if not any(full):
            return derive_structure(n, {(a, b): c for a, b, c in compose}, inverse, labels=labels)
        units = rd.int_list(obj["units"], f"{p}.units", "units")
        source = rd.int_list(obj["source"], f"{p}.source", "source")
        rng = rd.int_list(obj["range"], f"{p}.range", "range")
        return FiniteGroupoid(n, units, source, rng, inverse, [tuple(t) for t in compose], labels)
    if kind == "sft":
        return (SftSpec.from_rows(rd.int_matrix(rd.get(obj, "matrix", p), f"{p}.matrix", "matrix")),)
    if kind == "disjoint_union":
        parts = rd.get(obj, "parts", p, list)
        if not parts:
            raise rd.fail("a disjoint union needs at least one part", f"{p}.parts", "parts")
        built = [_build(rd, part, f"{p}.parts[{i}]") for i, part in enumerate(parts)]
        sft = [isinstance(b, tuple) for b in built]
        if all(sft):
            return tuple(s for b in built for s in b)
        if any(sft):
            raise rd.fail("cannot mix sft parts with finite groupoid parts", f"{p}.parts", "parts")
        return disjoint_union(built)
    if kind == "group":
        return group_groupoid(rd.int_matrix(rd.get(obj, "table", p), f"{p}.table", "table"))
    if kind == "cyclic_group":
        order = rd.nonneg_int(obj, "order", p)
        if order < 1:
            raise rd.fail("'order' must be positive", f"{p}.order", "order")
        return group_groupoid(cyclic_group_table(order))
    if kind == "pair":
        return pair_groupoid(rd.nonneg_int(obj, "n", p))
    if kind == "unit":
        return unit_groupoid(rd.nonneg_int(obj, "n", p))
    if kind == "transformation":
        table = rd.int_matrix(rd.get(obj, "table", p), f"{p}.table", "table")
        action = rd.int_matrix(rd.get(obj, "action", p), f"{p}.action", "action")
        return transformation_groupoid(table, action)
    if kind == "equivalence_relation":
        return equivalence_relation_groupoid(rd.int_matrix(rd.get(obj, "blocks", p), f"{p}.blocks", "blocks"))
    if kind == "group_bundle":
        tables = rd.get(obj, "tables", p, list)
        return group_bundle([rd.int_matrix(t, f"{p}.tables[{i}]", "tables") for i, t in enumerate(tables)])
    raise rd.fail(f"unknown kind {kind!r}", f"{path}.kind", "kind")


def _subsets(rd: _Reader, obj: dict, key: str) -> dict[str, tuple[int, ...]]:
    if key not in obj:
        return {}
    raw = rd.get(obj, key, "$", dict)
    return {name: tuple(rd.int_list(v, f"$.{key}.{name}", key)) for name, v in raw.items()}


def parse_document(text: str) -> Document:
    """Parse and build.  Raises :class:`DocumentError` for shape problems; groupoid
    axiom failures surface as the exceptions of the groupoid module."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, exc.lineno, exc.colno) from None
    rd = _Reader(text)
    built = _build(rd, obj, "$")
    units, arrows = _subsets(rd, obj, "unit_subsets"), _subsets(rd, obj, "arrow_subsets")
    if isinstance(built, tuple):
        if units or arrows:
            raise rd.fail("sft documents take no named subsets", "$")
        return Document(obj["kind"], sft_parts=built)
    return Document(obj["kind"], groupoid=built, unit_subsets=units, arrow_subsets=arrows)


def groupoid_to_json(g: FiniteGroupoid) -> dict:
    """Full ``finite_groupoid`` document in canonical form."""
    out = {
        "kind": "finite_groupoid",
        "arrow_count": g.arrow_count,
        "units": list(g.units),
        "source": list(g.source),
        "range": list(g.range),
        "inverse": list(g.inverse),
        "compose": [list(t) for t in g.compose],
    }
    if g.labels is not None:
        out["labels"] = _labels_to_json(g.labels)
    return out


def sft_to_json(spec: SftSpec) -> dict:
    return {"kind": "sft", "matrix": spec.matrix.tolist()}


def dumps(obj: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
