"""JSON algebra files: labels everywhere, indices nowhere."""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import Algebra, StructureError, covers_of, lattice_from_covers

REQUIRED = ("name", "elements", "zero", "one", "prod", "impl")


class ParseError(ValueError):
    """Unreadable or inconsistent algebra file; carries the offending field."""

    def __init__(self, message: str, source: str = "<data>", field: str | None = None):
        where = f"{source}: " + (f"field {field!r}: " if field else "")
        super().__init__(where + message)
        self.field = field


def _label_table(data: dict, key: str, index: dict, n: int, source: str):
    rows = data[key]
    if not isinstance(rows, list) or len(rows) != n:
        raise ParseError(f"expected {n} rows", source, key)
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"row {i} must have {n} entries", source, key)
        try:
            out.append([index[x] for x in row])
        except (KeyError, TypeError):
            bad = next(x for x in row if not isinstance(x, str) or x not in index)
            raise ParseError(f"row {i}: unknown element {bad!r}", source, key) from None
    return out


def algebra_from_dict(data: dict, source: str = "<data>") -> Algebra:
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", source)
    for key in REQUIRED:
        if key not in data:
            raise ParseError("missing", source, key)
    labels = data["elements"]
    if not isinstance(labels, list) or not labels or not all(isinstance(x, str) for x in labels):
        raise ParseError("must be a non-empty list of strings", source, "elements")
    if len(set(labels)) != len(labels):
        raise ParseError("labels must be distinct", source, "elements")
    n = len(labels)
    index = {x: i for i, x in enumerate(labels)}
    for key in ("zero", "one"):
        if data[key] not in index:
            raise ParseError(f"unknown element {data[key]!r}", source, key)
    prod = _label_table(data, "prod", index, n, source)
    impl = _label_table(data, "impl", index, n, source)

    explicit = "join" in data or "meet" in data
    if explicit and not ("join" in data and "meet" in data):
        raise ParseError("join and meet must be given together", source, "join")
    derived = None
    if "covers" in data:
        edges = data["covers"]
        try:
            covers = [(index[lo], index[hi]) for lo, hi in edges]
        except (KeyError, TypeError, ValueError):
            raise ParseError("edges must be [lower, upper] label pairs", source, "covers") from None
        try:
            derived = lattice_from_covers(n, covers)
        except StructureError as exc:
            raise ParseError(str(exc), source, "covers") from None
    if explicit:
        join = _label_table(data, "join", index, n, source)
        meet = _label_table(data, "meet", index, n, source)
        if derived is not None and (tuple(map(tuple, join)), tuple(map(tuple, meet))) != derived:
            raise ParseError("covers disagree with the join/meet tables", source, "covers")
    elif derived is not None:
        join, meet = derived
    else:
        raise ParseError("need join/meet tables or a covers list", source, "covers")
    try:
        return Algebra(str(data["name"]), tuple(labels), join, meet, prod, impl,
                       index[data["zero"]], index[data["one"]], dict(data.get("metadata", {})))
    except StructureError as exc:
        raise ParseError(str(exc), source) from None


def algebra_to_dict(A: Algebra, metadata: dict | None = None) -> dict:
    L = A.labels

    def table(T):
        return [[L[x] for x in row] for row in T]

    out = {
        "name": A.name,
        "elements": list(L),
        "zero": L[A.zero],
        "one": L[A.one],
        "covers": [[L[a], L[b]] for a, b in covers_of(A)],
        "join": table(A.join),
        "meet": table(A.meet),
        "prod": table(A.prod),
        "impl": table(A.impl),
    }
    meta = dict(A.metadata)
    meta.update(metadata or {})
    if meta:
        out["metadata"] = meta
    return out


def dumps(A: Algebra, metadata: dict | None = None) -> str:
    """Deterministic text: one table row per line."""
    d = algebra_to_dict(A, metadata)
    lines = ["{"]
    items = list(d.items())
    for k, (key, value) in enumerate(items):
        comma = "," if k < len(items) - 1 else ""
        if key in ("join", "meet", "prod", "impl", "covers") and value:
            rows = [json.dumps(r, ensure_ascii=False) for r in value]
            body = ",\n    ".join(rows)
            lines.append(f'  {json.dumps(key)}: [\n    {body}\n  ]{comma}')
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value, ensure_ascii=False, sort_keys=True)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads(text: str, source: str = "<string>") -> Algebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
                         source) from None
    return algebra_from_dict(data, source)


def load(path) -> Algebra:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(exc.strerror or str(exc), str(path)) from None
    return loads(text, str(path))


def dump(A: Algebra, path, metadata: dict | None = None) -> None:
    Path(path).write_text(dumps(A, metadata), encoding="utf-8")
