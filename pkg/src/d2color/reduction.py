"""Reduction from 3-colouring planar graphs to distance-two 4-colouring.

Every vertex of degree k becomes a ring of 2k squares a_i b_i c_i d_i, each
followed by the link edge c_i a_{i+1}.  Every edge vw becomes a vertex f_vw
joined to a free d_s (s even) on each of the two rings.  In any distance-two
4-colouring a ring's a's agree, its c's agree, and {b_i, d_i} is one fixed
pair of colours; adjacent rings get pairs meeting in exactly one colour.

Numbering: rings in input vertex order, each ring listing a_i, b_i, c_i, d_i
for i = 1..2k; then the f vertices in the order of the input's sorted edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Optional, Sequence

from .coloring import VertexColoring, verify_distance_two
from .errors import (
    D2ColorError,
    GraphSyntaxError,
    InternalInconsistency,
    InvalidHColoring,
    NonPlanarEmbedding,
    NotDistanceTwo,
    NotPlanarInput,
    PreconditionFailed,
)
from .plane_graph import PlaneGraph

Pair = frozenset


@dataclass(frozen=True)
class HGraph:
    """Two-element subsets of {1, 2, 3, 4}, adjacent when they share exactly one element."""

    vertices: tuple[frozenset[int], ...] = tuple(Pair(p) for p in combinations((1, 2, 3, 4), 2))

    def adjacent(self, p: frozenset[int], q: frozenset[int]) -> bool:
        return len(p & q) == 1

    @property
    def edges(self) -> list[tuple[frozenset[int], frozenset[int]]]:
        return [(p, q) for p, q in combinations(self.vertices, 2) if self.adjacent(p, q)]


H = HGraph()

# complementary pairs share a colour class
H_THREE_COLORING: dict[frozenset[int], int] = {
    Pair((1, 2)): 1,
    Pair((3, 4)): 1,
    Pair((1, 3)): 2,
    Pair((2, 4)): 2,
    Pair((1, 4)): 3,
    Pair((2, 3)): 3,
}


@dataclass(frozen=True)
class Ring:
    first: int
    k: int

    @property
    def size(self) -> int:
        return 8 * self.k

    def _id(self, i: int, off: int) -> int:
        i = (i - 1) % (2 * self.k) + 1
        return self.first + 4 * (i - 1) + off

    def a(self, i: int) -> int:
        return self._id(i, 0)

    def b(self, i: int) -> int:
        return self._id(i, 1)

    def c(self, i: int) -> int:
        return self._id(i, 2)

    def d(self, i: int) -> int:
        return self._id(i, 3)

    @property
    def slots(self) -> tuple[int, ...]:
        """Link indices open for attachment (the even ones)."""
        return tuple(range(2, 2 * self.k + 1, 2))

    def links(self) -> range:
        return range(1, 2 * self.k + 1)


def _ring_rotations(ring: Ring, attached: Mapping[int, int]) -> dict[int, list[int]]:
    """Clockwise rotations; ``attached`` maps a link index to its f vertex."""
    rot = {}
    for i in ring.links():
        a, b, c, d = ring.a(i), ring.b(i), ring.c(i), ring.d(i)
        rot[a] = [d, b, ring.c(i - 1)]
        rot[b] = [c, a]
        rot[c] = [ring.a(i + 1), b, d]
        rot[d] = ([attached[i]] if i in attached else []) + [c, a]
    return rot


def build_ring(k: int) -> tuple[PlaneGraph, Ring]:
    """A lone ring with 2k squares, vertices numbered from 0."""
    if k < 1:
        raise PreconditionFailed(f"ring needs k >= 1, got {k}")
    ring = Ring(0, k)
    rot = _ring_rotations(ring, {})
    return PlaneGraph([rot[v] for v in range(ring.size)]), ring


@dataclass(frozen=True)
class ReductionCertificate:
    vertex_to_ring: Mapping[int, Ring]
    edge_to_fvw: Mapping[tuple[int, int], int]
    slot_assignment: Mapping[tuple[tuple[int, int], int], int] = field(default_factory=dict)

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_to_ring)

    def input_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edge_to_fvw)

    def serialize(self) -> str:
        lines = []
        for v in sorted(self.vertex_to_ring):
            ring = self.vertex_to_ring[v]
            lines.append(f"vertex {v} ring {ring.first} k {ring.k}")
        for (u, v), f in sorted(self.edge_to_fvw.items()):
            s, t = self.slot_assignment[((u, v), u)], self.slot_assignment[((u, v), v)]
            lines.append(f"edge {u} {v} f {f} slots {s} {t}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "ReductionCertificate":
        rings: dict[int, Ring] = {}
        fvw: dict[tuple[int, int], int] = {}
        slots: dict[tuple[tuple[int, int], int], int] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            try:
                if line[0] == "vertex" and len(line) == 6 and line[2] == "ring" and line[4] == "k":
                    rings[int(line[1])] = Ring(int(line[3]), int(line[5]))
                elif line[0] == "edge" and len(line) == 8 and line[3] == "f" and line[5] == "slots":
                    u, v = int(line[1]), int(line[2])
                    fvw[(u, v)] = int(line[4])
                    slots[((u, v), u)] = int(line[6])
                    slots[((u, v), v)] = int(line[7])
                else:
                    raise GraphSyntaxError(lineno, f"unrecognised certificate line: {raw.strip()}")
            except ValueError as exc:
                if isinstance(exc, GraphSyntaxError):
                    raise
                raise GraphSyntaxError(lineno, f"bad integer in: {raw.strip()}") from None
        return cls(rings, fvw, slots)


def reduce(g: PlaneGraph | Sequence[Sequence[int]]) -> tuple[PlaneGraph, ReductionCertificate]:
    """Build the gadget graph and its certificate.

    Edges around v are attached to even links in the clockwise order of v's
    rotation, so the gadget graph inherits a plane embedding.
    """
    if not isinstance(g, PlaneGraph):
        try:
            g = PlaneGraph(g)
        except NonPlanarEmbedding as exc:
            raise NotPlanarInput(str(exc)) from None
    if any(d == 0 for d in g.degrees):
        raise PreconditionFailed("every input vertex needs degree at least 1")

    rings: dict[int, Ring] = {}
    nxt = 0
    for v in range(g.vertex_count):
        rings[v] = Ring(nxt, g.degree(v))
        nxt += rings[v].size
    fvw = {e: nxt + i for i, e in enumerate(g.edges)}
    slots: dict[tuple[tuple[int, int], int], int] = {}
    attached: dict[int, dict[int, int]] = {v: {} for v in rings}
    for v in range(g.vertex_count):
        for j, w in enumerate(g.neighbors(v)):
            e = (min(v, w), max(v, w))
            s = rings[v].slots[j]
            slots[(e, v)] = s
            attached[v][s] = fvw[e]

    lists: list[list[int]] = [[] for _ in range(nxt + len(fvw))]
    for v, ring in rings.items():
        for x, rot in _ring_rotations(ring, attached[v]).items():
            lists[x] = rot
    for (u, v), f in fvw.items():
        lists[f] = [rings[u].d(slots[((u, v), u)]), rings[v].d(slots[((u, v), v)])]
    try:
        gp = PlaneGraph(lists)
    except D2ColorError as exc:
        raise InternalInconsistency(f"gadget graph failed validation: {exc}") from None
    return gp, ReductionCertificate(rings, fvw, slots)


def gadget_bipartition(cert: ReductionCertificate) -> tuple[set[int], set[int]]:
    """Sides A and B: a_i, c_i, b_{i+1}, d_{i+1} for odd i on A.

    The f vertices hang off even d's, which sit on A, so they go to B.
    """
    side_a, side_b = set(), set(cert.edge_to_fvw.values())
    for ring in cert.vertex_to_ring.values():
        for i in ring.links():
            side = side_a if i % 2 else side_b
            side.update((ring.a(i), ring.c(i), ring.b(i + 1), ring.d(i + 1)))
    return side_a, side_b


def ring_pair(ring: Ring, c: VertexColoring) -> frozenset[int]:
    """The characteristic pair, after checking the ring's forced structure."""
    a_colors = {c[ring.a(i)] for i in ring.links()}
    c_colors = {c[ring.c(i)] for i in ring.links()}
    pairs = {Pair((c[ring.b(i)], c[ring.d(i)])) for i in ring.links()}
    if len(a_colors) != 1 or len(c_colors) != 1 or len(pairs) != 1:
        raise InternalInconsistency(f"ring at {ring.first} lacks the forced structure")
    return pairs.pop()


def extract_h_coloring(gp: PlaneGraph, cert: ReductionCertificate, c: VertexColoring) -> dict[int, frozenset[int]]:
    """Characteristic pair of every ring; adjacent input vertices get H-adjacent pairs."""
    bad = verify_distance_two(gp, c)
    if bad:
        raise NotDistanceTwo(f"colouring is not distance-two: {bad[0]}")
    phi = {v: ring_pair(ring, c) for v, ring in cert.vertex_to_ring.items()}
    for u, v in cert.edge_to_fvw:
        if not H.adjacent(phi[u], phi[v]):
            raise InternalInconsistency(f"pairs of {u} and {v} are not H-adjacent")
    return phi


def three_coloring_from_h(phi: Mapping[int, frozenset[int]]) -> dict[int, int]:
    return {v: H_THREE_COLORING[Pair(p)] for v, p in phi.items()}


def extract_three_coloring(gp: PlaneGraph, cert: ReductionCertificate, c: VertexColoring) -> VertexColoring:
    phi = three_coloring_from_h(extract_h_coloring(gp, cert, c))
    out = VertexColoring.from_mapping(phi, 3, cert.vertex_count)
    for u, v in cert.edge_to_fvw:
        if out[u] == out[v]:
            raise InternalInconsistency(f"extracted 3-colouring clashes on {u}-{v}")
    return out


def h_coloring_to_d2(
    g: PlaneGraph, cert: ReductionCertificate, phi: Mapping[int, Sequence[int] | frozenset[int]]
) -> VertexColoring:
    """Distance-two 4-colouring of the gadget graph realising ``phi``.

    a gets the smaller colour outside the pair and c the larger.  On an
    attached link b and f take the colour shared with the other endpoint
    and d takes the rest of the pair; free links put the smaller colour on b.
    """
    pairs = {}
    for v in range(g.vertex_count):
        p = Pair(phi.get(v, ()))
        if p not in H_THREE_COLORING:
            raise InvalidHColoring(f"vertex {v} is not mapped to a pair from 1..4")
        pairs[v] = p
    for u, v in g.edges:
        if not H.adjacent(pairs[u], pairs[v]):
            raise InvalidHColoring(f"{u} -> {sorted(pairs[u])} and {v} -> {sorted(pairs[v])} are not H-adjacent")

    n = sum(r.size for r in cert.vertex_to_ring.values()) + len(cert.edge_to_fvw)
    color: dict[int, int] = {}
    for v, ring in cert.vertex_to_ring.items():
        lo, hi = sorted({1, 2, 3, 4} - pairs[v])
        small, big = sorted(pairs[v])
        for i in ring.links():
            color[ring.a(i)], color[ring.c(i)] = lo, hi
            color[ring.b(i)], color[ring.d(i)] = small, big
    for (u, v), f in cert.edge_to_fvw.items():
        (shared,) = pairs[u] & pairs[v]
        color[f] = shared
        for x in (u, v):
            ring, s = cert.vertex_to_ring[x], cert.slot_assignment[((u, v), x)]
            (other,) = pairs[x] - {shared}
            color[ring.b(s)], color[ring.d(s)] = shared, other
    out = VertexColoring.from_mapping(color, 4, n)
    gp, _ = reduce(g)
    bad = verify_distance_two(gp, out)
    if bad:
        raise InternalInconsistency(f"constructed colouring fails: {bad[0]}")
    return out


def h_coloring_from_three_coloring(col: Mapping[int, int] | Sequence[int]) -> dict[int, frozenset[int]]:
    """A 3-colouring is an H-colouring through the triangle 12, 13, 23."""
    tri = {1: Pair((1, 2)), 2: Pair((1, 3)), 3: Pair((2, 3))}
    items = col.items() if isinstance(col, Mapping) else enumerate(col)
    return {v: tri[c] for v, c in items}


def three_colorings(g: PlaneGraph) -> Optional[list[int]]:
    """Some proper 3-colouring by plain backtracking, or None."""
    n = g.vertex_count
    color = [0] * n

    def rec(v):
        if v == n:
            return True
        for c in (1, 2, 3):
            if all(color[w] != c for w in g.neighbors(v) if w < v):
                color[v] = c
                if rec(v + 1):
                    return True
        color[v] = 0
        return False

    return list(color) if rec(0) else None
