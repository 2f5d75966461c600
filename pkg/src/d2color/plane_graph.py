"""Plane graphs stored as rotation systems.

Every edge is a pair of opposite darts.  A vertex owns the darts leaving it,
listed in clockwise order.  Faces are the orbits of the face-traversal
permutation ``next(d) = succ(twin(d))``: walk along ``d``, then leave the
head vertex along the dart following the reverse of ``d`` in its rotation.

:class:`PlaneMultigraph` is the relaxed variant that allows parallel edges
(duals, contracted graphs).  :class:`PlaneGraph` is the public simple-graph
type built from per-vertex clockwise neighbour lists.
"""

from __future__ import annotations

import struct
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from math import atan2
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    Disconnected,
    LoopOrMultiEdge,
    NonPlanarEmbedding,
    NonSymmetricAdjacency,
)

DISCONNECTED = "disconnected"
CONNECTED = "connected"
BICONNECTED = "biconnected"
TRICONNECTED = "triconnected"
_CONNECTIVITY_RANK = {DISCONNECTED: 0, CONNECTED: 1, BICONNECTED: 2, TRICONNECTED: 3}

TYPE_ONE_BARNETTE = "type_one_barnette"
TYPE_TWO_BARNETTE = "type_two_barnette"
GOODEY = "goodey"
FOUR_GRAPH = "four_graph"


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.darts)


class PlaneMultigraph:
    """Dart-level rotation system; parallel edges are permitted.

    ``origin[d]`` is the tail of dart ``d``, ``twin[d]`` its reverse and
    ``rotation[v]`` the clockwise tuple of darts leaving ``v``.
    """

    def __init__(
        self,
        vertex_count: int,
        origin: Sequence[int],
        twin: Sequence[int],
        rotation: Sequence[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
    ):
        self.vertex_count = vertex_count
        self.origin = tuple(origin)
        self.twin = tuple(twin)
        self.rotation = tuple(tuple(r) for r in rotation)
        self.labels = tuple(labels) if labels is not None else None
        self._check_darts()
        succ = [0] * len(self.origin)
        pred = [0] * len(self.origin)
        for darts in self.rotation:
            for i, d in enumerate(darts):
                succ[d] = darts[(i + 1) % len(darts)]
                pred[d] = darts[i - 1]
        self.succ = tuple(succ)
        self.pred = tuple(pred)
        self._check_euler()

    def _check_darts(self) -> None:
        m = len(self.origin)
        if len(self.twin) != m or m % 2:
            raise ValueError("dart arrays are inconsistent")
        for d, t in enumerate(self.twin):
            if t == d or self.twin[t] != d:
                raise ValueError(f"twin is not a fixed-point-free involution at dart {d}")
        seen = [False] * m
        for v, darts in enumerate(self.rotation):
            for d in darts:
                if seen[d] or self.origin[d] != v:
                    raise ValueError(f"dart {d} misplaced in rotation of vertex {v}")
                seen[d] = True
        if not all(seen):
            raise ValueError("some dart is missing from every rotation")
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise ValueError("one label per vertex required")

    def _check_euler(self) -> None:
        comp = self.component_index
        verts = Counter(comp)
        edges = Counter(comp[self.origin[d]] for d in range(0, len(self.origin)) if d < self.twin[d])
        faces = Counter(comp[self.origin[f.darts[0]]] for f in self.faces)
        for c, nv in verts.items():
            ne = edges.get(c, 0)
            nf = faces.get(c, 0) if ne else 1
            if nv - ne + nf != 2:
                raise NonPlanarEmbedding(
                    f"component {c}: V - E + F = {nv} - {ne} + {nf} != 2"
                )

    # basic structure

    @property
    def dart_count(self) -> int:
        return len(self.origin)

    @property
    def edge_count(self) -> int:
        return len(self.origin) // 2

    def head(self, d: int) -> int:
        return self.origin[self.twin[d]]

    def next_in_face(self, d: int) -> int:
        return self.succ[self.twin[d]]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rotation)

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        face_of = [-1] * self.dart_count
        faces = []
        for start in range(self.dart_count):
            if face_of[start] >= 0:
                continue
            darts = []
            d = start
            while face_of[d] < 0:
                face_of[d] = len(faces)
                darts.append(d)
                d = self.next_in_face(d)
            faces.append(Face(len(faces), tuple(darts), tuple(self.origin[x] for x in darts)))
        return tuple(faces)

    @cached_property
    def face_of_dart(self) -> tuple[int, ...]:
        out = [0] * self.dart_count
        for f in self.faces:
            for d in f.darts:
                out[d] = f.id
        return tuple(out)

    @cached_property
    def component_index(self) -> tuple[int, ...]:
        comp = [-1] * self.vertex_count
        c = 0
        for s in range(self.vertex_count):
            if comp[s] >= 0:
                continue
            comp[s] = c
            stack = [s]
            while stack:
                x = stack.pop()
                for d in self.rotation[x]:
                    y = self.head(d)
                    if comp[y] < 0:
                        comp[y] = c
                        stack.append(y)
            c += 1
        return tuple(comp)

    @property
    def is_connected(self) -> bool:
        return self.vertex_count == 0 or max(self.component_index) == 0

    def face_sizes(self) -> list[int]:
        return sorted(f.size for f in self.faces)

    def to_simple(self) -> "PlaneGraph":
        lists = [[self.head(d) for d in darts] for darts in self.rotation]
        return PlaneGraph(lists, self.labels)

    def dual(self) -> "PlaneMultigraph":
        """One vertex per face, one dart per primal dart.

        The dual dart of ``d`` leaves the face containing ``d``; its twin is
        the dual of ``twin(d)``; a dual vertex lists its darts in the face's
        traversal order.  Dualising twice returns the original rotation.
        """
        if not self.is_connected:
            raise Disconnected("dual requires a connected graph")
        rotation = [f.darts for f in self.faces]
        return PlaneMultigraph(len(rotation), self.face_of_dart, self.twin, rotation)


class PlaneGraph(PlaneMultigraph):
    """Simple plane graph built from clockwise neighbour lists.

    >>> k4 = PlaneGraph([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])
    >>> k4.face_sizes()
    [3, 3, 3, 3]
    """

    def __init__(self, rotation_lists: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None):
        lists = [tuple(int(x) for x in r) for r in rotation_lists]
        n = len(lists)
        position: list[dict[int, int]] = []
        for v, nbrs in enumerate(lists):
            pos = {}
            for i, w in enumerate(nbrs):
                if w == v or w in pos:
                    raise LoopOrMultiEdge(v, w)
                if not 0 <= w < n:
                    raise NonSymmetricAdjacency(v, w)
                pos[w] = i
            position.append(pos)
        offset = [0] * (n + 1)
        for v in range(n):
            offset[v + 1] = offset[v] + len(lists[v])
        origin = [0] * offset[n]
        twin = [0] * offset[n]
        for v, nbrs in enumerate(lists):
            for i, w in enumerate(nbrs):
                j = position[w].get(v)
                if j is None:
                    raise NonSymmetricAdjacency(v, w)
                origin[offset[v] + i] = v
                twin[offset[v] + i] = offset[w] + j
        self.neighbor_lists = tuple(lists)
        self._offset = tuple(offset)
        self._position = position
        rotation = [range(offset[v], offset[v + 1]) for v in range(n)]
        super().__init__(n, origin, twin, rotation, labels)

    @classmethod
    def from_faces(cls, faces: Iterable[Sequence[int]], vertex_count: Optional[int] = None) -> "PlaneGraph":
        """Build from consistently oriented facial walks (vertex cycles).

        Each directed edge must occur in exactly one face, its reverse in
        another.  For a face ``... a b c ...`` the rotation at ``b`` has ``c``
        immediately after ``a``.
        """
        succ: dict[int, dict[int, int]] = {}
        for face in faces:
            k = len(face)
            for i in range(k):
                a, b, c = face[i - 1], face[i], face[(i + 1) % k]
                if a in succ.setdefault(b, {}):
                    raise NonPlanarEmbedding(f"directed edge {b}->{a} occurs twice")
                succ[b][a] = c
        n = vertex_count if vertex_count is not None else max(succ) + 1
        lists: list[list[int]] = []
        for v in range(n):
            s = succ.get(v, {})
            if not s:
                lists.append([])
                continue
            first = min(s)
            cyc = [first]
            while len(cyc) <= len(s):
                nxt = s.get(cyc[-1])
                if nxt is None:
                    raise NonPlanarEmbedding(f"faces around vertex {v} do not close up")
                if nxt == first:
                    break
                cyc.append(nxt)
            if len(cyc) != len(s):
                raise NonPlanarEmbedding(f"vertex {v} is pinched")
            lists.append(cyc)
        return cls(lists)

    @classmethod
    def from_coordinates(
        cls, adjacency: Mapping[int, Iterable[int]] | Sequence[Iterable[int]], coords: Sequence[tuple[float, float]]
    ) -> "PlaneGraph":
        """Rotation read off a straight-line plane drawing (clockwise by angle)."""
        items = adjacency.items() if isinstance(adjacency, Mapping) else enumerate(adjacency)
        nbrs = {v: set(ws) for v, ws in items}
        for v, ws in list(nbrs.items()):
            for w in ws:
                nbrs.setdefault(w, set()).add(v)
        lists = []
        for v in range(len(coords)):
            x, y = coords[v]
            ws = nbrs.get(v, set())
            lists.append(sorted(ws, key=lambda w: -atan2(coords[w][1] - y, coords[w][0] - x)))
        return cls(lists)

    # adjacency helpers

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.neighbor_lists[v]

    def dart(self, u: int, v: int) -> int:
        """Id of the dart from ``u`` to ``v``."""
        return self._offset[u] + self._position[u][v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._position[u]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((u, w) for u, ws in enumerate(self.neighbor_lists) for w in ws if u < w))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(ws) for ws in self.neighbor_lists)

    def edge_faces(self, u: int, v: int) -> tuple[int, int]:
        """Faces on the two sides of edge uv (equal for a bridge)."""
        d = self.dart(u, v)
        return self.face_of_dart[d], self.face_of_dart[self.twin[d]]

    def relabel(self, perm: Sequence[int]) -> "PlaneGraph":
        """Graph with vertex ``v`` renamed ``perm[v]``; rotations unchanged."""
        lists: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for v, ws in enumerate(self.neighbor_lists):
            lists[perm[v]] = [perm[w] for w in ws]
        return PlaneGraph(lists)

    def mirror(self) -> "PlaneGraph":
        return PlaneGraph([list(reversed(ws)) for ws in self.neighbor_lists], self.labels)

    def __eq__(self, other):
        return isinstance(other, PlaneGraph) and self.neighbor_lists == other.neighbor_lists

    def __hash__(self):
        return hash(self.neighbor_lists)

    def __repr__(self):
        return f"PlaneGraph(V={self.vertex_count}, E={self.edge_count}, F={len(self.faces)})"


def build(rotation_lists: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None) -> PlaneGraph:
    return PlaneGraph(rotation_lists, labels)


def faces(g: PlaneMultigraph) -> list[Face]:
    return list(g.faces)


def dual(g: PlaneMultigraph) -> PlaneMultigraph:
    return g.dual()


# structural predicates


def bipartition(g: PlaneMultigraph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Two-colouring with the lowest vertex of every component on side A."""
    side = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for d in g.rotation[x]:
                y = g.head(d)
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    a = frozenset(v for v in range(g.vertex_count) if side[v] == 0)
    return a, frozenset(range(g.vertex_count)) - a


def square_adjacency(g: PlaneMultigraph) -> tuple[frozenset[int], ...]:
    """Vertices at distance one or two from each vertex."""
    nbrs = [{g.head(d) for d in g.rotation[v]} for v in range(g.vertex_count)]
    out = []
    for v in range(g.vertex_count):
        reach = set(nbrs[v])
        for w in nbrs[v]:
            reach |= nbrs[w]
        reach.discard(v)
        out.append(frozenset(reach))
    return tuple(out)


def _articulation_points(adj: Sequence[Iterable[int]], alive: Sequence[bool]) -> tuple[set[int], int]:
    """Cut vertices of the subgraph induced by ``alive`` and its component count."""
    n = len(adj)
    disc = [0] * n
    low = [0] * n
    timer = 1
    cuts: set[int] = set()
    components = 0
    for root in range(n):
        if not alive[root] or disc[root]:
            continue
        components += 1
        disc[root] = low[root] = timer
        timer += 1
        children = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if not alive[w] or w == parent:
                    continue
                if disc[w]:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(adj[w])))
                    break
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if parent == root:
                        children += 1
                    elif low[v] >= disc[parent]:
                        cuts.add(parent)
        if children > 1:
            cuts.add(root)
    return cuts, components


def connectivity(g: PlaneMultigraph) -> str:
    """Vertex-connectivity level, capped at three.

    A graph with k <= 3 levels needs more than k vertices for level k; the
    three-connectivity test deletes each vertex in turn and looks for cut
    vertices in what remains.
    """
    n = g.vertex_count
    adj = [sorted({g.head(d) for d in g.rotation[v]}) for v in range(n)]
    alive = [True] * n
    cuts, comps = _articulation_points(adj, alive)
    if comps != 1:
        return DISCONNECTED
    if cuts or n < 3:
        return CONNECTED
    if n < 4:
        return BICONNECTED
    for v in range(n):
        alive[v] = False
        cuts, comps = _articulation_points(adj, alive)
        alive[v] = True
        if cuts or comps != 1:
            return BICONNECTED
    return TRICONNECTED


def has_connectivity(level: str, at_least: str) -> bool:
    return _CONNECTIVITY_RANK[level] >= _CONNECTIVITY_RANK[at_least]


@dataclass(frozen=True)
class ClassificationReport:
    vertex_count: int
    edge_count: int
    degrees: tuple[int, ...]
    is_cubic: bool
    is_quartic: bool
    is_bipartite: bool
    connectivity: str
    face_sizes: tuple[int, ...]
    flags: frozenset[str]

    @property
    def face_size_counts(self) -> dict[int, int]:
        return dict(sorted(Counter(self.face_sizes).items()))


def classify(g: PlaneMultigraph) -> ClassificationReport:
    degs = g.degrees
    n = g.vertex_count
    cubic = n > 0 and all(d == 3 for d in degs)
    quartic = n > 0 and all(d == 4 for d in degs)
    bip = bipartition(g) is not None
    conn = connectivity(g)
    sizes = tuple(g.face_sizes())
    size_set = set(sizes)
    connected = conn != DISCONNECTED
    flags = set()
    if cubic and bip and conn == TRICONNECTED:
        flags.add(TYPE_ONE_BARNETTE)
    if cubic and connected and size_set <= {3, 4, 5, 6}:
        flags.add(TYPE_TWO_BARNETTE)
    if cubic and connected and size_set <= {4, 6}:
        flags.add(GOODEY)
    if quartic and connected and size_set <= {3, 4}:
        flags.add(FOUR_GRAPH)
    return ClassificationReport(
        vertex_count=n,
        edge_count=g.edge_count,
        degrees=tuple(sorted(degs)),
        is_cubic=cubic,
        is_quartic=quartic,
        is_bipartite=bip,
        connectivity=conn,
        face_sizes=sizes,
        flags=frozenset(flags),
    )


# canonical form


def _code_from(g: PlaneMultigraph, start: int, reverse: bool, best: Optional[list[int]]):
    """BFS code from ``start``; None as soon as it exceeds ``best``.

    Vertices are numbered in BFS order.  For each vertex in turn the numbers
    of its neighbours are emitted, walking its rotation from the dart it was
    discovered through, then a 0 terminator.
    """
    number = [0] * g.vertex_count
    first = [0] * g.vertex_count
    step = g.pred if reverse else g.succ
    twin, origin = g.twin, g.origin
    root = origin[start]
    number[root] = 1
    first[root] = start
    order = [root]
    code: list[int] = []
    smaller = best is None

    def emit(sym: int) -> bool:
        nonlocal smaller
        if not smaller:
            b = best[len(code)]
            if sym > b:
                return False
            if sym < b:
                smaller = True
        code.append(sym)
        return True

    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        d = first[x]
        for _ in range(len(g.rotation[x])):
            t = twin[d]
            y = origin[t]
            if not number[y]:
                order.append(y)
                number[y] = len(order)
                first[y] = t
            if not emit(number[y]):
                return None
            d = step[d]
        if not emit(0):
            return None
    return code, order


def canonical_form(g: PlaneMultigraph) -> tuple[bytes, list[int]]:
    """Canonical code and the vertex order realising it.

    The code is the lexicographically least BFS code over all starting darts
    in both orientations, so mirror images share a code.  ``order[i]`` is the
    vertex that receives canonical number ``i + 1``.
    """
    if not g.is_connected:
        raise Disconnected("canonical code requires a connected graph")
    if g.vertex_count == 0:
        return b"", []
    if g.dart_count == 0:
        return struct.pack(">2I", 1, 0), [0]
    best: Optional[list[int]] = None
    best_order: list[int] = []
    for start in range(g.dart_count):
        for reverse in (False, True):
            res = _code_from(g, start, reverse, best)
            if res is not None and (best is None or res[0] < best):
                best, best_order = res
    assert best is not None
    header = [g.vertex_count, g.edge_count]
    return struct.pack(f">{len(best) + 2}I", *header, *best), best_order


def canonical_code(g: PlaneMultigraph) -> bytes:
    return canonical_form(g)[0]


def isomorphism(g: PlaneMultigraph, h: PlaneMultigraph) -> Optional[dict[int, int]]:
    """A vertex map g -> h preserving the embedding up to reflection, if any."""
    cg, og = canonical_form(g)
    ch, oh = canonical_form(h)
    if cg != ch:
        return None
    return {og[i]: oh[i] for i in range(len(og))}
