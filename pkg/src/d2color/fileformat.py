"""Line-oriented text formats for graphs, colourings and edge colourings.

Graph::

    # optional comments
    pg 4
    v 0: 1 2 3
    v 1: 0 3 2
    ...

Neighbours are listed clockwise.  Colouring::

    colors 4
    v 0 1
    ...
"""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Iterable, Optional

from .coloring import COLOR_BY_NAME, COLOR_NAMES, EdgeColoring, VertexColoring
from .errors import DataError, GraphSyntaxError, PaletteMismatch
from .plane_graph import PlaneGraph, canonical_code


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphSyntaxError(lineno, f"expected an integer, got {token!r}") from None


def parse_graph(text: str) -> PlaneGraph:
    n: Optional[int] = None
    lists: dict[int, list[int]] = {}
    line_of: dict[int, int] = {}
    for lineno, tok in _content_lines(text):
        if n is None:
            if tok[0] != "pg" or len(tok) != 2:
                raise GraphSyntaxError(lineno, "expected header 'pg <n>'")
            n = _int(tok[1], lineno)
            if n < 0:
                raise GraphSyntaxError(lineno, "vertex count must be non-negative")
            continue
        if tok[0] != "v" or len(tok) < 2 or not tok[1].endswith(":"):
            raise GraphSyntaxError(lineno, "expected 'v <i>: <neighbours>'")
        v = _int(tok[1][:-1], lineno)
        if not 0 <= v < n:
            raise GraphSyntaxError(lineno, f"vertex {v} outside 0..{n - 1}")
        if v in lists:
            raise GraphSyntaxError(lineno, f"vertex {v} listed twice")
        lists[v] = [_int(t, lineno) for t in tok[2:]]
        line_of[v] = lineno
    if n is None:
        raise GraphSyntaxError(1, "missing header 'pg <n>'")
    missing = [v for v in range(n) if v not in lists]
    if missing:
        raise GraphSyntaxError(max(line_of.values(), default=1), f"no line for vertex {missing[0]}")
    try:
        return PlaneGraph([lists[v] for v in range(n)])
    except DataError as exc:
        u = getattr(exc, "u", None)
        if u is not None and u in line_of:
            exc.line = line_of[u]
            exc.args = (f"line {line_of[u]}: {exc.args[0]}",)
        raise


def serialize_graph(g: PlaneGraph, comment: Optional[str] = None) -> str:
    out = [f"# {line}" for line in (comment.splitlines() if comment else [])]
    out.append(f"pg {g.vertex_count}")
    for v in range(g.vertex_count):
        out.append(f"v {v}: " + " ".join(map(str, g.neighbors(v))))
    return "\n".join(out) + "\n"


def parse_coloring(text: str, n: Optional[int] = None) -> VertexColoring:
    r: Optional[int] = None
    colors: dict[int, int] = {}
    last = 1
    for lineno, tok in _content_lines(text):
        last = lineno
        if r is None:
            if tok[0] != "colors" or len(tok) != 2:
                raise GraphSyntaxError(lineno, "expected header 'colors <r>'")
            r = _int(tok[1], lineno)
            continue
        if tok[0] != "v" or len(tok) != 3:
            raise GraphSyntaxError(lineno, "expected 'v <i> <color>'")
        v, c = _int(tok[1], lineno), _int(tok[2], lineno)
        if v in colors:
            raise GraphSyntaxError(lineno, f"vertex {v} coloured twice")
        colors[v] = c
    if r is None:
        raise GraphSyntaxError(last, "missing header 'colors <r>'")
    size = n if n is not None else len(colors)
    extra = [v for v in colors if not 0 <= v < size]
    if extra:
        raise PaletteMismatch(f"vertex {extra[0]} is not in the graph")
    return VertexColoring.from_mapping(colors, r, size)


def serialize_coloring(c: VertexColoring) -> str:
    return f"colors {c.r}\n" + "".join(f"v {v} {col}\n" for v, col in enumerate(c.colors))


def serialize_edge_coloring(e: EdgeColoring) -> str:
    def name(col):
        return COLOR_NAMES[col] if e.d == 3 else str(col)

    return "".join(f"e {u} {v} {name(col)}\n" for (u, v), col in sorted(e.colors.items()))


def parse_edge_coloring(text: str) -> EdgeColoring:
    out = {}
    for lineno, tok in _content_lines(text):
        if tok[0] != "e" or len(tok) != 4:
            raise GraphSyntaxError(lineno, "expected 'e <u> <v> <color>'")
        u, v = _int(tok[1], lineno), _int(tok[2], lineno)
        col = COLOR_BY_NAME.get(tok[3]) or _int(tok[3], lineno)
        out[(min(u, v), max(u, v))] = col
    return EdgeColoring(out, max(out.values(), default=3))


def read_text(path: str | Path, stdin=None) -> str:
    """File contents, with '-' meaning standard input."""
    if str(path) == "-":
        import sys

        return (stdin or sys.stdin).read()
    return Path(path).read_text()


def code_digest(g: PlaneGraph) -> str:
    """Short stable fingerprint of the canonical code."""
    return hashlib.sha256(canonical_code(g)).hexdigest()


def write_corpus(directory: str | Path, graphs: dict[str, PlaneGraph]) -> Path:
    """One ``<name>.pg`` per graph plus ``golden_codes.txt`` (name, sha256 of code)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    golden = []
    for name in sorted(graphs):
        g = graphs[name]
        (directory / f"{name}.pg").write_text(serialize_graph(g, name))
        golden.append(f"{name} {code_digest(g)}")
    path = directory / "golden_codes.txt"
    path.write_text("\n".join(golden) + "\n")
    return path


def read_golden(path: str | Path) -> dict[str, str]:
    out = {}
    for _, tok in _content_lines(Path(path).read_text()):
        out[tok[0]] = tok[1]
    return out
