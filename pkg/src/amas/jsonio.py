"""Versioned JSON forms for quivers and seeds.

Quiver objects: {"v": 1, "n": int, "m": int, "b": [[int, ...], ...]} with
``b`` row-major.  Seed objects: {"v": 1, "quiver": <quiver>, "vars":
[<laurent string>, ...]}.  Parsers reject invariant violations with a
diagnostic naming the failing entry; the "v" field is optional on input.
"""

from __future__ import annotations

from typing import Any

from .laurent import LaurentPoly
from .quiver import IceQuiver
from .seeds import Seed
from .textform import default_names, parse_laurent, render_laurent

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    """Malformed or invariant-violating JSON input."""


def _check_version(obj: dict[str, Any]) -> None:
    if "v" in obj and obj["v"] != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {obj['v']!r}")


def quiver_to_json(q: IceQuiver) -> dict[str, Any]:
    return {"v": SCHEMA_VERSION, "n": q.n, "m": q.m, "b": [list(row) for row in q.b]}


def quiver_from_json(obj: Any) -> IceQuiver:
    if not isinstance(obj, dict):
        raise SchemaError("quiver object must be a JSON object")
    _check_version(obj)
    missing = {"n", "m", "b"} - set(obj)
    if missing:
        raise SchemaError(f"quiver object lacks keys {sorted(missing)}")
    n, m, b = obj["n"], obj["m"], obj["b"]
    if not isinstance(n, int) or not isinstance(m, int):
        raise SchemaError("n and m must be integers")
    if not isinstance(b, list) or any(not isinstance(row, list) for row in b):
        raise SchemaError("b must be a list of rows")
    for i, row in enumerate(b):
        for j, entry in enumerate(row):
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise SchemaError(f"b[{i + 1}][{j + 1}] is not an integer")
    try:
        return IceQuiver(n, m, tuple(tuple(row) for row in b))
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def seed_to_json(s: Seed, names: tuple[str, ...] | None = None) -> dict[str, Any]:
    names = names or default_names(s.quiver.m)
    return {
        "v": SCHEMA_VERSION,
        "quiver": quiver_to_json(s.quiver),
        "vars": [render_laurent(v, names) for v in s.vars],
    }


def seed_from_json(obj: Any) -> Seed:
    if not isinstance(obj, dict):
        raise SchemaError("seed object must be a JSON object")
    _check_version(obj)
    if "quiver" not in obj or "vars" not in obj:
        raise SchemaError("seed object needs 'quiver' and 'vars'")
    quiver = quiver_from_json(obj["quiver"])
    raw_vars = obj["vars"]
    if not isinstance(raw_vars, list) or len(raw_vars) != quiver.m:
        raise SchemaError(f"vars must list {quiver.m} variables")
    names = default_names(quiver.m)
    variables: list[LaurentPoly] = []
    for i, text in enumerate(raw_vars):
        if not isinstance(text, str):
            raise SchemaError(f"vars[{i}] is not a string")
        try:
            variables.append(parse_laurent(text, names))
        except ValueError as exc:
            raise SchemaError(f"vars[{i}]: {exc}") from None
    return Seed(quiver, tuple(variables))


def parse_mutation_sequence(text: str, n: int) -> tuple[int, ...]:
    """Comma-separated 1-based mutable vertex list, e.g. "1,2,1"."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk.isdigit():
            raise SchemaError(f"bad vertex {chunk!r} in mutation sequence")
        k = int(chunk)
        if not 1 <= k <= n:
            raise SchemaError(f"vertex {k} is not mutable (1..{n})")
        out.append(k)
    return tuple(out)
