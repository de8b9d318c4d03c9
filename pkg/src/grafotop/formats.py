"""Reading and writing graphs and sub-bases: JSON and a small DOT subset."""

from __future__ import annotations

import json
import re
from pathlib import Path

from grafotop.errors import InputError
from grafotop.graph import Graph
from grafotop.topology import Element, SubBasis

_DOT_HEAD = re.compile(r"^\s*(strict\s+)?(graph|digraph)\s*(\w+|\"[^\"]*\")?\s*\{(.*)\}\s*$", re.S)
_NODE = r"(?:-?\d+|\"-?\d+\")"


def graph_from_json(obj) -> Graph:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise InputError("graph JSON needs a 'vertices' list")
    try:
        edges = [tuple(e) for e in obj.get("edges", [])]
    except TypeError:
        raise InputError("edges must be pairs") from None
    if any(len(e) != 2 for e in edges):
        raise InputError("edges must be pairs")
    return Graph(obj["vertices"], edges)


def parse_dot(text: str) -> Graph:
    """Undirected DOT without attributes: ``graph { 1 -- 2 -- 3; 4; }``."""
    text = re.sub(r"//[^\n]*|#[^\n]*|/\*.*?\*/", "", text, flags=re.S)
    m = _DOT_HEAD.match(text)
    if not m:
        raise InputError("not a DOT graph")
    if m.group(2) == "digraph":
        raise InputError("directed DOT graphs are not supported")
    verts: set[int] = set()
    edges = []
    for stmt in re.split(r"[;\n]", m.group(4)):
        stmt = stmt.strip()
        if not stmt:
            continue
        if "[" in stmt or "=" in stmt:
            raise InputError(f"DOT attributes are not supported: {stmt!r}")
        parts = [p.strip() for p in stmt.split("--")]
        if not all(re.fullmatch(_NODE, p) for p in parts):
            raise InputError(f"cannot read DOT statement {stmt!r}")
        nodes = [int(p.strip('"')) for p in parts]
        verts.update(nodes)
        edges += [(a, b) for a, b in zip(nodes, nodes[1:])]
    # repeated edges are harmless in DOT
    uniq = sorted({(min(a, b), max(a, b)) for a, b in edges})
    return Graph(sorted(verts), uniq)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    touched = {v for e in g.edges for v in e}
    lines += [f"  {v};" for v in g.vertices if v not in touched]
    lines += [f"  {a} -- {b};" for a, b in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def element_from_json(obj) -> Element:
    if isinstance(obj, list):
        return Element(tuple(sorted(obj)))
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise InputError("element JSON needs 'vertices'")
    mode = obj.get("mode", "induced")
    vs = tuple(sorted(obj["vertices"]))
    if mode == "induced":
        return Element(vs)
    if isinstance(mode, dict) and "star" in mode:
        return Element(vs, int(mode["star"]))
    raise InputError(f"unknown element mode {mode!r}")


def subbasis_from_json(obj) -> SubBasis:
    if not isinstance(obj, dict) or "graph" not in obj or "elements" not in obj:
        raise InputError("sub-basis JSON needs 'graph' and 'elements'")
    return SubBasis(graph_from_json(obj["graph"]), [element_from_json(e) for e in obj["elements"]])


def _read(path: str) -> str:
    if path == "-":
        import sys

        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str) -> Graph:
    """Graph JSON, a sub-basis JSON (its host is used) or DOT, by content."""
    text = _read(path)
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON ({exc.msg})") from None
        if "graph" in obj and "vertices" not in obj:
            return graph_from_json(obj["graph"])
        return graph_from_json(obj)
    return parse_dot(text)


def load_subbasis(path: str) -> SubBasis:
    try:
        obj = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from None
    return subbasis_from_json(obj)


def load_json(path: str):
    """JSON from a file, stdin (``-``), or the argument itself when it starts with ``{`` or ``[``."""
    text = path if path.lstrip()[:1] in ("{", "[") else _read(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from None
