"""JSON loading and dumping for carriers, operators, Lie algebras, matrices and subspaces."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import qlinalg as ql
from .lie import LieAlgebra, LieError, validate_lie
from .qlinalg import Matrix, Subspace
from .tables import KINDS, MulTable, TableError, validate_table


class InputError(ValueError):
    """Malformed input; carries the offending file and field."""

    def __init__(self, path: str, field: str, message: str):
        super().__init__(f"{path}: field {field!r}: {message}")
        self.path, self.field, self.message = path, field, message

    def to_dict(self) -> dict:
        return {"ok": False, "error": self.message, "file": self.path, "field": self.field}


def read_json(path: str | Path) -> Any:
    path = str(path)
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(path, "<file>", exc.strerror or str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise InputError(path, "<json>", str(exc)) from exc


def dumps(obj: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n"


def _field(d: Any, key: str, path: str, kind: type | tuple[type, ...]):
    if not isinstance(d, dict):
        raise InputError(path, "<root>", "expected a JSON object")
    if key not in d:
        raise InputError(path, key, "missing")
    value = d[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InputError(path, key, f"expected {getattr(kind, '__name__', kind)}")
    return value


# -- groups and operators ----------------------------------------------------------


def group_from_dict(d: Any, path: str = "<group>") -> MulTable:
    order = _field(d, "order", path, int)
    table = _field(d, "table", path, list)
    kind = d.get("kind", "group")
    if kind not in KINDS:
        raise InputError(path, "kind", f"unknown kind {kind!r}")
    if len(table) != order or any(not isinstance(r, list) or len(r) != order for r in table):
        raise InputError(path, "table", f"expected an {order}x{order} array")
    if any(not isinstance(x, int) or isinstance(x, bool) for r in table for x in r):
        raise InputError(path, "table", "entries must be integers")
    labels = d.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != order):
        raise InputError(path, "labels", f"expected {order} labels")
    try:
        return validate_table(table, kind, name=str(d.get("name", "")), labels=labels)
    except TableError as exc:
        raise InputError(path, "table", str(exc)) from exc


def group_to_dict(G: MulTable) -> dict:
    d = {"name": G.name, "order": G.order, "table": [list(r) for r in G.table], "kind": G.kind}
    if G.labels:
        d["labels"] = list(G.labels)
    return d


def load_group(path: str | Path) -> MulTable:
    return group_from_dict(read_json(path), str(path))


def operator_from_dict(d: Any, n: int, path: str = "<operator>") -> tuple[int, ...]:
    m = _field(d, "map", path, list)
    if len(m) != n:
        raise InputError(path, "map", f"expected {n} entries, got {len(m)}")
    if any(not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n for x in m):
        raise InputError(path, "map", f"entries must be integers in [0, {n})")
    return tuple(m)


def load_operator(path: str | Path, n: int) -> tuple[int, ...]:
    return operator_from_dict(read_json(path), n, str(path))


# -- rationals ---------------------------------------------------------------------


def _rational(x: Any, path: str, field: str):
    if isinstance(x, bool) or isinstance(x, float):
        raise InputError(path, field, "rationals must be integers or 'p/q' strings")
    try:
        return ql.q(x)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(path, field, f"bad rational {x!r}") from exc


def matrix_from_dict(d: Any, n: int | None = None, path: str = "<matrix>") -> Matrix:
    rows = _field(d, "rows", path, list)
    if not rows or any(not isinstance(r, list) for r in rows):
        raise InputError(path, "rows", "expected a non-empty array of rows")
    vals = [[_rational(x, path, "rows") for x in r] for r in rows]
    ncols = len(vals[0])
    if any(len(r) != ncols for r in vals):
        raise InputError(path, "rows", "ragged rows")
    if n is not None and (len(vals) != n or ncols != n):
        raise InputError(path, "rows", f"expected a {n}x{n} matrix")
    return Matrix.of(vals, ncols)


def matrix_to_dict(M: Matrix) -> dict:
    return {"rows": M.to_strings()}


def load_matrix(path: str | Path, n: int | None = None) -> Matrix:
    return matrix_from_dict(read_json(path), n, str(path))


def lie_from_dict(d: Any, path: str = "<lie>") -> LieAlgebra:
    dim = _field(d, "dim", path, int)
    c = _field(d, "c", path, list)
    try:
        cq = [[[_rational(x, path, "c") for x in v] for v in row] for row in c]
    except TypeError as exc:
        raise InputError(path, "c", "expected a dim x dim x dim array") from exc
    labels = d.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != dim):
        raise InputError(path, "labels", f"expected {dim} labels")
    try:
        return validate_lie(dim, cq, labels)
    except (LieError, ValueError) as exc:
        raise InputError(path, "c", str(exc)) from exc


def load_lie(path: str | Path) -> LieAlgebra:
    return lie_from_dict(read_json(path), str(path))


def subspace_from_dict(d: Any, dim: int, path: str = "<subspace>") -> Subspace:
    basis = _field(d, "basis", path, list)
    vecs = []
    for v in basis:
        if not isinstance(v, list) or len(v) != dim:
            raise InputError(path, "basis", f"vectors must have length {dim}")
        vecs.append([_rational(x, path, "basis") for x in v])
    return ql.span(vecs, dim)


def subspace_to_dict(U: Subspace) -> dict:
    return {"basis": U.to_strings()}


def load_subspace(path: str | Path, dim: int) -> Subspace:
    return subspace_from_dict(read_json(path), dim, str(path))


def parse_vector(text: str, dim: int, name: str = "--vector") -> tuple:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if len(parts) != dim:
        raise InputError("<argv>", name, f"expected {dim} comma-separated rationals")
    return tuple(_rational(p, "<argv>", name) for p in parts)
