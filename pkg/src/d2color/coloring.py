"""Colouring value types, the distance-two verifier and edge-colouring links.

Colours are integers starting at 1.  For edge colourings with three colours
the names red, blue and green stand for 1, 2 and 3; the complete graph on
colours {1, 2, 3, 4} is split into the matchings

    red   = 13 | 24
    blue  = 12 | 34
    green = 14 | 23

so a red edge always joins two colours of equal parity.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    Bridge,
    EvenD,
    FaceAdjacencyClash,
    NotCubic,
    NotDistanceTwo,
    PaletteMismatch,
)
from .plane_graph import PlaneGraph

RED, BLUE, GREEN = 1, 2, 3
COLOR_NAMES = {RED: "red", BLUE: "blue", GREEN: "green"}
COLOR_BY_NAME = {v: k for k, v in COLOR_NAMES.items()}

SAME_COLOR_AT_DISTANCE_ONE = "SameColorAtDistanceOne"
SAME_COLOR_AT_DISTANCE_TWO = "SameColorAtDistanceTwo"
IMPROPER_EDGE_PAIR = "ImproperEdgePair"
FACE_ADJACENCY_CLASH = "FaceAdjacencyClash"
PRECONDITION_FAILED = "PreconditionFailed"


@dataclass(frozen=True)
class VertexColoring:
    """``colors[v]`` is the colour of vertex ``v``, drawn from 1..r."""

    colors: tuple[int, ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.r:
                raise PaletteMismatch(f"vertex {v} has colour {c} outside 1..{self.r}")

    @classmethod
    def from_mapping(cls, colors: Mapping[int, int], r: int, n: Optional[int] = None) -> "VertexColoring":
        n = len(colors) if n is None else n
        missing = [v for v in range(n) if v not in colors]
        if missing:
            raise PaletteMismatch(f"no colour for vertices {missing[:5]}")
        return cls(tuple(colors[v] for v in range(n)), r)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def used(self) -> set[int]:
        return set(self.colors)

    def permuted(self, perm: Mapping[int, int]) -> "VertexColoring":
        return VertexColoring(tuple(perm[c] for c in self.colors), self.r)

    def normalized(self) -> tuple[int, ...]:
        """Relabel colours by first appearance; equal iff equivalent."""
        seen: dict[int, int] = {}
        return tuple(seen.setdefault(c, len(seen) + 1) for c in self.colors)


@dataclass(frozen=True)
class EdgeColoring:
    """Colour per edge, edges written as ``(u, v)`` with ``u < v``."""

    colors: Mapping[tuple[int, int], int]
    d: int = 3

    def __getitem__(self, edge: tuple[int, int]) -> int:
        u, v = edge
        return self.colors[(u, v) if u < v else (v, u)]

    def color_class(self, color: int) -> frozenset[tuple[int, int]]:
        return frozenset(e for e, c in self.colors.items() if c == color)

    def classes(self) -> dict[int, frozenset[tuple[int, int]]]:
        return {c: self.color_class(c) for c in sorted(set(self.colors.values()))}

    def __eq__(self, other):
        return isinstance(other, EdgeColoring) and dict(self.colors) == dict(other.colors)


@dataclass(frozen=True)
class FaceColoring:
    """``colors[f]`` for each face id of the companion graph."""

    colors: tuple[int, ...]

    def __getitem__(self, f: int) -> int:
        return self.colors[f]

    def permuted(self, perm: Mapping[int, int]) -> "FaceColoring":
        return FaceColoring(tuple(perm[c] for c in self.colors))


@dataclass(frozen=True, order=True)
class Violation:
    kind: str
    witnesses: tuple[int, ...] = ()
    detail: str = field(default="", compare=False)

    def __str__(self):
        w = " ".join(map(str, self.witnesses))
        return f"{self.kind} {w}" + (f" ({self.detail})" if self.detail else "")


def verify_distance_two(g: PlaneGraph, c: VertexColoring) -> list[Violation]:
    """All pairs at distance one or two that share a colour.

    Empty list means the colouring is a proper colouring of the square.
    Distance-two witnesses are ``(u, w, via)`` with ``u < w`` and ``via`` the
    smallest common neighbour.  Sorted by (smallest witness, kind).
    """
    if len(c) != g.vertex_count:
        raise PaletteMismatch(f"{len(c)} colours for {g.vertex_count} vertices")
    out = []
    for u, v in g.edges:
        if c[u] == c[v]:
            out.append(Violation(SAME_COLOR_AT_DISTANCE_ONE, (u, v)))
    seen = set()
    for via in range(g.vertex_count):
        nb = g.neighbors(via)
        for i, u in enumerate(nb):
            for w in nb[i + 1:]:
                a, b = min(u, w), max(u, w)
                if c[a] != c[b] or g.has_edge(a, b) or (a, b) in seen:
                    continue
                seen.add((a, b))
                out.append(Violation(SAME_COLOR_AT_DISTANCE_TWO, (a, b, via)))
    out.sort(key=lambda x: (min(x.witnesses), x.kind, x.witnesses))
    return out


def is_distance_two(g: PlaneGraph, c: VertexColoring) -> bool:
    return not verify_distance_two(g, c)


def verify_edge_coloring(g: PlaneGraph, e: EdgeColoring) -> list[Violation]:
    out = []
    for v in range(g.vertex_count):
        nb = sorted(g.neighbors(v))
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if e[(v, a)] == e[(v, b)]:
                    out.append(Violation(IMPROPER_EDGE_PAIR, (v, a, b)))
    return out


def verify_face_coloring(g: PlaneGraph, f: FaceColoring) -> list[Violation]:
    if len(f.colors) != len(g.faces):
        raise PaletteMismatch(f"{len(f.colors)} colours for {len(g.faces)} faces")
    out = []
    for u, v in g.edges:
        a, b = g.edge_faces(u, v)
        if a != b and f[a] == f[b]:
            out.append(Violation(FACE_ADJACENCY_CLASH, tuple(sorted((a, b))), f"edge {u}-{v}"))
    return sorted(set(out))


# Walecki tables


@dataclass(frozen=True)
class WaleckiTable:
    """A proper d-edge-colouring of the complete graph on points 1..d+1."""

    d: int
    edge_color: Mapping[frozenset[int], int]

    def color(self, a: int, b: int) -> int:
        return self.edge_color[frozenset((a, b))]

    def partner(self, a: int, color: int) -> int:
        """The unique point joined to ``a`` by an edge of ``color``."""
        for pair, c in self.edge_color.items():
            if c == color and a in pair:
                (b,) = pair - {a}
                return b
        raise KeyError((a, color))

    def classes(self) -> dict[int, set[frozenset[int]]]:
        out: dict[int, set[frozenset[int]]] = {}
        for pair, c in self.edge_color.items():
            out.setdefault(c, set()).add(pair)
        return out


def walecki_edge_coloring(d: int) -> WaleckiTable:
    """Round-robin colouring of K_{d+1} for odd d.

    Point d+1 sits in the centre; class i holds {i, d+1} and every pair
    {i-j, i+j} taken mod d (residue 0 read as d).  For d = 3 the classes are
    renamed to the red/blue/green convention of this module.
    """
    if d < 1 or d % 2 == 0:
        raise EvenD(f"d must be odd and positive, got {d}")

    def pt(x):
        x %= d
        return d if x == 0 else x

    table = {}
    for i in range(1, d + 1):
        table[frozenset((i, d + 1))] = i
        for j in range(1, (d - 1) // 2 + 1):
            table[frozenset((pt(i - j), pt(i + j)))] = i
    if d == 3:
        # round-robin class 1 = {14, 23}, class 2 = {24, 13}, class 3 = {34, 12}
        rename = {1: GREEN, 2: RED, 3: BLUE}
        table = {p: rename[c] for p, c in table.items()}
    return WaleckiTable(d, table)


K4_TABLE = walecki_edge_coloring(3)


def derived_edge_coloring(g: PlaneGraph, c: VertexColoring, w: Optional[WaleckiTable] = None) -> EdgeColoring:
    """Colour edge uv by the table's colour of the pair {c(u), c(v)}."""
    w = w or walecki_edge_coloring(c.r - 1 if c.r % 2 == 0 else c.r)
    if c.r != w.d + 1:
        raise NotDistanceTwo(f"palette {c.r} does not match table for d={w.d}")
    if max(g.degrees, default=0) > w.d:
        raise NotDistanceTwo(f"maximum degree exceeds d={w.d}")
    if verify_distance_two(g, c):
        raise NotDistanceTwo("colouring is not a distance-two colouring")
    return EdgeColoring({(u, v): w.color(c[u], c[v]) for u, v in g.edges}, w.d)


def recover_vertex_coloring(
    g: PlaneGraph, e: EdgeColoring, seed: Optional[tuple[int, int]] = None
) -> Optional[VertexColoring]:
    """Invert the derived colouring for d = 3 by walking the K4 table.

    Each component is seeded (``seed`` for its own component, lowest vertex
    with colour 1 elsewhere) and colours spread along edges: the colour across
    an edge of colour i is the K4 partner of the current colour under i.
    Returns None when the walk contradicts itself.
    """
    colors = [0] * g.vertex_count
    seeds = {}
    if seed is not None:
        seeds[g.component_index[seed[0]]] = seed
    for v in range(g.vertex_count):
        seeds.setdefault(g.component_index[v], (v, 1))
    for root, col in seeds.values():
        colors[root] = col
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                want = K4_TABLE.partner(colors[u], e[(u, w)])
                if colors[w] == 0:
                    colors[w] = want
                    queue.append(w)
                elif colors[w] != want:
                    return None
    out = VertexColoring(tuple(colors), 4)
    return out if is_distance_two(g, out) else None


def special_edge_coloring(g: PlaneGraph, f: FaceColoring) -> EdgeColoring:
    """Each edge takes the colour missing from its two faces."""
    if any(d != 3 for d in g.degrees):
        raise NotCubic("special edge colouring needs a cubic graph")
    if not set(f.colors) <= {RED, BLUE, GREEN}:
        raise PaletteMismatch("face colours must lie in 1..3")
    clashes = verify_face_coloring(g, f)
    if clashes:
        raise FaceAdjacencyClash(f"face colouring is improper: {clashes[0]}")
    out = {}
    for u, v in g.edges:
        a, b = g.edge_faces(u, v)
        if a == b:
            raise Bridge(u, v)
        (missing,) = {RED, BLUE, GREEN} - {f[a], f[b]}
        out[(u, v)] = missing
    e = EdgeColoring(out, 3)
    assert not verify_edge_coloring(g, e)
    return e


def equivalent_up_to_permutation(c1: VertexColoring, c2: VertexColoring) -> bool:
    if len(c1) != len(c2):
        return False
    fwd: dict[int, int] = {}
    back: dict[int, int] = {}
    for a, b in zip(c1.colors, c2.colors):
        if fwd.setdefault(a, b) != b or back.setdefault(b, a) != a:
            return False
    return True


def colors_per_face(g: PlaneGraph, c: VertexColoring) -> list[int]:
    return [len({c[v] for v in face.vertices}) for face in g.faces]


def red_class(g: PlaneGraph, c: VertexColoring) -> frozenset[tuple[int, int]]:
    """Edges whose endpoint colours form a red pair (13 or 24)."""
    return frozenset((u, v) for u, v in g.edges if K4_TABLE.color(c[u], c[v]) == RED)


def edge_set(edges: Iterable[Sequence[int]]) -> frozenset[tuple[int, int]]:
    return frozenset((min(u, v), max(u, v)) for u, v in edges)
