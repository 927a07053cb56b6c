"""JSON monoid documents.

A monoid document has ``elements`` (labels), ``unit`` (a label) and ``table``
(rows of labels). Dual documents additionally carry ``hom_domain`` (labels of
the monoid the homs are defined on) and ``homs`` (one row of circle values per
element, "0" for zero and "p/q" for a rotation). Output is canonical: fixed key
order, one table row per line.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import circle
from .errors import ParseError
from .homs import DualMonoid, Hom
from .monoid import FiniteMonoid, validate_monoid


def _line_of(text: str, needle: str, after: str = "") -> int | None:
    lines = text.splitlines()
    start = 0
    if after:
        for i, line in enumerate(lines):
            if after in line:
                start = i
                break
    for i in range(start, len(lines)):
        if needle in lines[i]:
            return i + 1
    return None


def loads_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", 1)
    for key in ("elements", "unit", "table"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    return doc


def monoid_from_document(doc: dict, text: str = "") -> FiniteMonoid:
    labels = doc["elements"]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise ParseError("'elements' must be a list of strings", _line_of(text, '"elements"'))
    pos = {}
    for i, x in enumerate(labels):
        pos.setdefault(x, i)
    unit = doc["unit"]
    if unit not in pos:
        raise ParseError(f"unit {unit!r} is not a declared element", _line_of(text, '"unit"'))
    rows = doc["table"]
    if not isinstance(rows, list):
        raise ParseError("'table' must be a list of rows", _line_of(text, '"table"'))
    table = []
    for r, row in enumerate(rows):
        if not isinstance(row, list):
            raise ParseError(f"table row {r} is not a list", _line_of(text, '"table"'))
        out = []
        for x in row:
            if x not in pos:
                raise ParseError(f"table row {r} uses undeclared element {x!r}", _line_of(text, json.dumps(x), '"table"'))
            out.append(pos[x])
        table.append(out)
    return validate_monoid(labels, pos[unit], table)


def parse_monoid_text(text: str) -> FiniteMonoid:
    return monoid_from_document(loads_document(text), text)


def parse_monoid_file(path) -> FiniteMonoid:
    return parse_monoid_text(Path(path).read_text())


def parse_dual_text(text: str) -> tuple[FiniteMonoid, list[list[circle.DotCircle]], list[str]]:
    """The monoid part, the hom value rows and the hom domain labels of a dual document."""
    doc = loads_document(text)
    M = monoid_from_document(doc, text)
    if "homs" not in doc:
        raise ParseError("not a dual document: missing 'homs'")
    try:
        rows = [[circle.parse(v) for v in row] for row in doc["homs"]]
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad hom value: {exc}", _line_of(text, '"homs"')) from None
    if len(rows) != len(M):
        raise ParseError("'homs' must have one row per element", _line_of(text, '"homs"'))
    return M, rows, list(doc.get("hom_domain", []))


def _row(items) -> str:
    return json.dumps(list(items), ensure_ascii=False)


def dumps_monoid(S: FiniteMonoid, extra: dict | None = None, homs=None, hom_domain=None) -> str:
    parts = [
        f'  "elements": {_row(S.elements)}',
        f'  "unit": {json.dumps(S.elements[S.unit], ensure_ascii=False)}',
        '  "table": [\n' + ",\n".join("    " + _row(S.elements[j] for j in row) for row in S.table) + "\n  ]",
    ]
    if hom_domain is not None:
        parts.append(f'  "hom_domain": {_row(hom_domain)}')
    if homs is not None:
        parts.append('  "homs": [\n' + ",\n".join("    " + _row(h) for h in homs) + "\n  ]")
    for key, value in (extra or {}).items():
        parts.append(f"  {json.dumps(key)}: {json.dumps(value, ensure_ascii=False)}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def dumps_dual(D: DualMonoid, extra: dict | None = None) -> str:
    return dumps_monoid(
        D.base,
        extra=extra,
        homs=[h.render() for h in D.homs],
        hom_domain=list(D.source.elements),
    )


def homs_from_rows(source: FiniteMonoid, rows) -> list[Hom]:
    return [Hom(source, tuple(r)) for r in rows]
