"""JSON tree documents: one vertex or edge per line, explicit ids."""

from __future__ import annotations

import json
from typing import Any

from .errors import ParseError
from .shuffle import ZERO, parse_color
from .trees import ColoredPair


def _field(obj: Any, key: str, where: str, kind: type | tuple) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise ParseError(f"{where}.{key}: expected {getattr(kind, '__name__', kind)}")
    return val


def parse_tree(document: str | dict) -> ColoredPair:
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {exc.lineno}: {exc.msg}") from None
    if not isinstance(document, dict):
        raise ParseError("top level must be an object")
    verts = _field(document, "vertices", "document", list)
    edges = _field(document, "edges", "document", list)
    root = _field(document, "root", "document", str)
    colors = {}
    for i, v in enumerate(verts):
        where = f"vertices[{i}]"
        vid = _field(v, "id", where, str)
        if vid in colors:
            raise ParseError(f"{where}.id: duplicate id {vid!r}")
        raw = _field(v, "color", where, (str, int))
        try:
            colors[vid] = parse_color(str(raw))
        except ValueError as exc:
            raise ParseError(f"{where}.color: {exc}") from None
    triples = []
    for i, e in enumerate(edges):
        where = f"edges[{i}]"
        a, b = _field(e, "a", where, str), _field(e, "b", where, str)
        k = _field(e, "k", where, int)
        for end, name in ((a, "a"), (b, "b")):
            if end not in colors:
                raise ParseError(f"{where}.{name}: unknown vertex {end!r}")
        if k < 0:
            raise ParseError(f"{where}.k: index must be nonnegative")
        triples.append((a, b, k))
    if root not in colors:
        raise ParseError(f"root: unknown vertex {root!r}")
    return ColoredPair.build(colors, triples, root)


def dump_tree(p: ColoredPair) -> str:
    t = p.tree
    vlines = [
        "    " + json.dumps({"id": v, "color": "0" if t.coloring[v] is ZERO else str(t.coloring[v])})
        for v in sorted(t.vertices)
    ]
    elines = ["    " + json.dumps({"a": a, "b": b, "k": k}) for a, b, k in p.edge_list()]
    return (
        '{\n  "vertices": [\n'
        + ",\n".join(vlines)
        + '\n  ],\n  "edges": [\n'
        + ",\n".join(elines)
        + ("\n" if elines else "")
        + "  ],\n"
        + f'  "root": {json.dumps(t.root)}\n}}\n'
    )
