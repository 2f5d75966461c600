"""Named plane graphs and recognisers for the colourable families.

Goodey graphs C_k are built as duals of the octahedron with every triangle
cut into a (k+1) x (k+1) triangular grid: the six degree-4 grid corners
become the six squares and everything else becomes hexagons, with k hexagons
in a straight chain between neighbouring squares and k(k-1)/2 hexagons
filling the middle of each of the eight triangular regions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import cos, isqrt, pi, sin
from typing import Iterator, Optional, Sequence

from .coloring import VertexColoring, verify_distance_two
from .errors import KTooSmall, NotFourGraph, NotGoodey
from .exact_solver import propagate_forced, solve
from .plane_graph import (
    FOUR_GRAPH,
    GOODEY,
    PlaneGraph,
    canonical_code,
    classify,
    isomorphism,
)

# building blocks


def _circle(count: int, radius: float, phase: float = 0.0) -> list[tuple[float, float]]:
    return [(radius * cos(phase + 2 * pi * i / count), radius * sin(phase + 2 * pi * i / count)) for i in range(count)]


def truncate(g: PlaneGraph) -> PlaneGraph:
    """Cut off every vertex; new vertex ids are the dart ids of ``g``."""
    lists = []
    for d in range(g.dart_count):
        around = [g.twin[d], g.succ[d], g.pred[d]] if g.degree(g.origin[d]) > 2 else [g.twin[d], g.succ[d]]
        lists.append(around)
    return PlaneGraph(lists)


def insert_face_vertices(g: PlaneGraph, insertions: Sequence[tuple[int, Sequence[int]]]) -> PlaneGraph:
    """Add one vertex inside each listed face, joined to the given positions.

    ``insertions`` holds ``(face_id, positions)`` pairs; positions index the
    face's vertex cycle.  New vertices are numbered after the old ones.
    """
    lists = [list(ws) for ws in g.neighbor_lists]
    for face_id, positions in insertions:
        cyc = g.faces[face_id].vertices
        x = len(lists)
        for j in positions:
            o, prev = cyc[j], cyc[j - 1]
            i = lists[o].index(prev)
            lists[o].insert(i + 1, x)
        lists.append([cyc[j] for j in reversed(positions)])
    return PlaneGraph(lists)


def insert_edge(g: PlaneGraph, d1: int, d2: int) -> PlaneGraph:
    """Subdivide the edges of darts ``d1``, ``d2`` (same face) and join the new vertices."""
    p, q = g.origin[d1], g.head(d1)
    r, s = g.origin[d2], g.head(d2)
    x, y = g.vertex_count, g.vertex_count + 1
    lists = [list(ws) for ws in g.neighbor_lists]
    for a, b, new in ((p, q, x), (q, p, x), (r, s, y), (s, r, y)):
        lists[a][lists[a].index(b)] = new
    lists.append([p, y, q])
    lists.append([r, x, s])
    return PlaneGraph(lists)


# generators


def gen_k4() -> PlaneGraph:
    return PlaneGraph.from_coordinates({0: [1, 2, 3], 1: [2, 3], 2: [3]}, [(0, 0)] + _circle(3, 1.0, pi / 2))


def gen_cyclic_prism(k: int) -> PlaneGraph:
    """Two 2k-cycles a_i (ids 0..2k-1) and b_i (ids 2k..4k-1) joined by rungs a_i b_i."""
    if k < 2:
        raise KTooSmall(f"cyclic prism needs k >= 2, got {k}")
    m = 2 * k
    adj = {}
    for i in range(m):
        adj[i] = [(i + 1) % m, m + i]
        adj[m + i] = [m + (i + 1) % m]
    return PlaneGraph.from_coordinates(adj, _circle(m, 2.0) + _circle(m, 1.0))


def gen_cube() -> PlaneGraph:
    return gen_cyclic_prism(2)


def _octahedron_faces() -> list[tuple[int, int, int]]:
    # vertices 0:+x 1:-x 2:+y 3:-y 4:+z 5:-z, faces oriented consistently
    faces = []
    for sx in (1, -1):
        for sy in (1, -1):
            for sz in (1, -1):
                f = (0 if sx > 0 else 1, 2 if sy > 0 else 3, 4 if sz > 0 else 5)
                faces.append(f if sx * sy * sz > 0 else (f[0], f[2], f[1]))
    return faces


def gen_octahedron() -> PlaneGraph:
    return PlaneGraph.from_faces(_octahedron_faces())


def subdivided_octahedron(m: int) -> PlaneGraph:
    """Octahedron with each face cut into m*m triangles."""
    ids: dict[frozenset, int] = {}

    def point(weights):
        key = frozenset((v, w) for v, w in weights if w)
        return ids.setdefault(key, len(ids))

    tris = []
    for a, b, c in _octahedron_faces():
        def p(i, j):
            return point(((a, m - i - j), (b, i), (c, j)))

        for i in range(m):
            for j in range(m - i):
                tris.append((p(i, j), p(i + 1, j), p(i, j + 1)))
                if i + j <= m - 2:
                    tris.append((p(i + 1, j), p(i + 1, j + 1), p(i, j + 1)))
    return PlaneGraph.from_faces(tris, len(ids))


@lru_cache(maxsize=None)
def gen_goodey_ck(k: int) -> PlaneGraph:
    """Goodey graph C_k: 8(k+1)^2 vertices, 6 squares, 4k^2 + 8k hexagons."""
    if k < 0:
        raise KTooSmall(f"C_k needs k >= 0, got {k}")
    g = subdivided_octahedron(k + 1).dual().to_simple()
    sizes = g.face_sizes()
    assert sizes.count(4) == 6 and sizes.count(6) == 4 * k * k + 8 * k, sizes
    return g


def gen_truncated_tetrahedron() -> PlaneGraph:
    return truncate(gen_k4())


def gen_k4_subdivided() -> PlaneGraph:
    """K4 with the three edges at vertex 0 subdivided by vertices 4, 5, 6."""
    pts = [(0, 0)] + _circle(3, 2.0, pi / 2) + _circle(3, 1.0, pi / 2)
    adj = {0: [4, 5, 6], 1: [4, 2, 3], 2: [5, 3], 3: [6]}
    return PlaneGraph.from_coordinates(adj, pts)


def gen_dodecahedron() -> PlaneGraph:
    """Outer pentagon 0-4, middle 10-cycle 5-14, inner pentagon 15-19."""
    pts = _circle(5, 3.0) + _circle(10, 2.0) + _circle(5, 1.0, pi / 5)
    adj: dict[int, list[int]] = {v: [] for v in range(20)}
    for i in range(5):
        adj[i] += [(i + 1) % 5, 5 + 2 * i]
        adj[15 + i] += [15 + (i + 1) % 5, 5 + 2 * i + 1]
    for j in range(10):
        adj[5 + j].append(5 + (j + 1) % 10)
    return PlaneGraph.from_coordinates(adj, pts)


def gen_petersen_adjacency() -> dict[int, set[int]]:
    """Petersen graph as a plain adjacency map (it is not planar)."""
    adj = {v: set() for v in range(10)}
    for i in range(5):
        for a, b in ((i, (i + 1) % 5), (i, 5 + i), (5 + i, 5 + (i + 2) % 5)):
            adj[a].add(b)
            adj[b].add(a)
    return adj


@lru_cache(maxsize=None)
def gen_g0() -> PlaneGraph:
    """Cube plus a degree-4 vertex in each of two opposite square faces."""
    cube = gen_cube()
    squares = [f.id for f in cube.faces if set(f.vertices) <= {0, 1, 2, 3} or set(f.vertices) <= {4, 5, 6, 7}]
    g = insert_face_vertices(cube, [(f, range(4)) for f in squares])
    assert FOUR_GRAPH in classify(g).flags and g.face_sizes() == [3] * 8 + [4] * 4
    return g


@lru_cache(maxsize=None)
def gen_g1() -> PlaneGraph:
    """Truncated cube with a degree-4 vertex in each octagon.

    The inserted vertex meets every other octagon vertex, namely those where
    the boundary walk enters a corner triangle, so every truncated-cube vertex
    gains exactly one edge and each octagon splits into four squares.
    """
    cube = gen_cube()
    t = truncate(cube)
    insertions = []
    for f in t.faces:
        if f.size != 8:
            continue
        cyc = f.vertices
        picks = [j for j in range(8) if cube.origin[cyc[j]] == cube.origin[cyc[(j + 1) % 8]]]
        insertions.append((f.id, picks))
    g = insert_face_vertices(t, insertions)
    assert FOUR_GRAPH in classify(g).flags and g.face_sizes() == [3] * 8 + [4] * 24
    return g


def gen_bridged_cubic() -> PlaneGraph:
    """Two copies of K4 with one edge subdivided, the subdivision vertices 4 and 9 joined."""
    side = [list(ws) for ws in gen_k4().neighbor_lists]
    side[0][side[0].index(1)] = 4
    side[1][side[1].index(0)] = 4
    side.append([0, 1])
    lists = side + [[w + 5 for w in ws] for ws in side]
    lists[4].append(9)
    lists[9].append(4)
    return PlaneGraph(lists)


# enumeration


def enumerate_cubic_plane_graphs(max_vertices: int) -> Iterator[PlaneGraph]:
    """Cubic plane graphs reachable from K4 by inserting an edge across a face.

    This reaches every three-connected cubic plane graph.  One representative
    per embedded isomorphism class (mirror images identified), in order of
    vertex count.
    """
    layer = {canonical_code(gen_k4()): gen_k4()}
    while layer:
        yield from layer.values()
        nxt: dict[bytes, PlaneGraph] = {}
        for g in layer.values():
            if g.vertex_count + 2 > max_vertices:
                continue
            for face in g.faces:
                for i, d1 in enumerate(face.darts):
                    for d2 in face.darts[i + 1:]:
                        if d2 == g.twin[d1]:
                            continue
                        h = insert_edge(g, d1, d2)
                        nxt.setdefault(canonical_code(h), h)
        layer = nxt


# C_k: colouring, structure, recognition


def _forced_coloring(g: PlaneGraph, r: int, seed: dict[int, int]) -> VertexColoring:
    color = propagate_forced(g, r, seed)
    if len(color) < g.vertex_count:
        found, _ = solve(g, r, None, fixed=color)
        assert found is not None, "forced propagation stalled on an uncolourable graph"
        color = dict(enumerate(found.colors))
    out = VertexColoring.from_mapping(color, r, g.vertex_count)
    assert not verify_distance_two(g, out)
    return out


@lru_cache(maxsize=None)
def goodey_ck_coloring(k: int) -> VertexColoring:
    """The distance-two 4-colouring of C_k.

    One square is coloured 4, 1, 3, 2 around its boundary; every other
    colour then follows by local forcing.
    """
    g = gen_goodey_ck(k)
    square = next(f for f in g.faces if f.size == 4)
    seed = dict(zip(square.vertices, (4, 1, 3, 2)))
    return _forced_coloring(g, 4, seed)


@dataclass(frozen=True)
class CkStructure:
    k: int
    squares: tuple[int, ...]
    chains: tuple[tuple[int, ...], ...]
    ends: tuple[tuple[int, int], ...]


def _opposite(g: PlaneGraph, face_id: int, dart: int) -> int:
    """Dart of ``face_id`` opposite (half-way round) to ``dart``."""
    darts = g.faces[face_id].darts
    i = darts.index(dart)
    return darts[(i + len(darts) // 2) % len(darts)]


def trace_ck_structure(g: PlaneGraph) -> tuple[Optional[CkStructure], str]:
    """Follow straight hexagon chains out of every square edge.

    A chain enters a hexagon through one edge and leaves through the opposite
    one until it reaches a square.  C_k shows 12 chains of length k whose
    square-adjacency graph is the octahedron.  Returns the structure, or None
    with a short explanation.
    """
    sizes = {f.size for f in g.faces}
    if not sizes <= {4, 6} or any(d != 3 for d in g.degrees):
        return None, "not a Goodey graph"
    squares = tuple(f.id for f in g.faces if f.size == 4)
    if len(squares) != 6:
        return None, f"{len(squares)} square faces"
    fod = g.face_of_dart
    chains = {}
    for s in squares:
        for d in g.faces[s].darts:
            path = []
            cur = g.twin[d]
            steps = 0
            while g.faces[fod[cur]].size == 6:
                path.append(fod[cur])
                cur = g.twin[_opposite(g, fod[cur], cur)]
                steps += 1
                if steps > len(g.faces):
                    return None, "a hexagon chain never reaches a square"
            end = fod[cur]
            if end == s:
                return None, "a chain returns to its starting square"
            key = (min(s, end), max(s, end))
            if key in chains and tuple(reversed(path)) != chains[key] and tuple(path) != chains[key]:
                return None, f"two chains join squares {key}"
            chains.setdefault(key, tuple(path) if s < end else tuple(reversed(path)))
    if len(chains) != 12:
        return None, f"{len(chains)} distinct square pairs joined, expected 12"
    lengths = {len(c) for c in chains.values()}
    if len(lengths) != 1:
        return None, f"chain lengths differ: {sorted(lengths)}"
    (k,) = lengths
    ends = tuple(sorted(chains))
    return CkStructure(k, squares, tuple(chains[e] for e in ends), ends), "ok"


def _ck_candidate(hexagons: int) -> Optional[int]:
    # 4k^2 + 8k = h  <=>  (k + 1)^2 = h / 4 + 1
    if hexagons % 4:
        return None
    s = hexagons // 4 + 1
    root = isqrt(s)
    return root - 1 if root * root == s else None


def recognize_ck(g: PlaneGraph) -> Optional[int]:
    """k with g isomorphic to C_k (as embedded graphs), else None."""
    if GOODEY not in classify_goodey(g):
        raise NotGoodey("recognize_ck needs a Goodey graph")
    k = _ck_candidate(sum(1 for f in g.faces if f.size == 6))
    if k is None:
        return None
    return k if canonical_code(g) == canonical_code(gen_goodey_ck(k)) else None


def classify_goodey(g: PlaneGraph) -> frozenset[str]:
    """Cheap subset of :func:`classify` flags (skips connectivity)."""
    if g.vertex_count and g.is_connected and all(d == 3 for d in g.degrees) and set(g.face_sizes()) <= {4, 6}:
        return frozenset({GOODEY})
    return frozenset()


def ck_coloring_for(g: PlaneGraph, k: int) -> VertexColoring:
    """Transfer the C_k colouring to an isomorphic copy ``g``."""
    iso = isomorphism(g, gen_goodey_ck(k))
    if iso is None:
        raise NotGoodey(f"graph is not C_{k}")
    base = goodey_ck_coloring(k)
    return VertexColoring(tuple(base[iso[v]] for v in range(g.vertex_count)), 4)


# four-graphs


def lemma_four_screen(g: PlaneGraph) -> bool:
    """Necessary condition for a 5-colourable four-graph.

    Every square face must share an edge with a triangle, which caps the
    number of squares at 24 (eight triangles, three sides each).
    """
    fod = g.face_of_dart
    squares = [f for f in g.faces if f.size == 4]
    if len(squares) > 24:
        return False
    for f in squares:
        if not any(g.faces[fod[g.twin[d]]].size == 3 for d in f.darts):
            return False
    return True


def _g0_coloring() -> VertexColoring:
    # the proof's colouring: apex 5, one square 1..4, the other shifted by two
    g = gen_g0()
    top, bottom = range(4), range(4, 8)
    colors = {8: 5, 9: 5}
    for i in top:
        colors[i] = i + 1
    for i in bottom:
        colors[i] = (i - 4 + 2) % 4 + 1
    c = VertexColoring.from_mapping(colors, 5, g.vertex_count)
    assert not verify_distance_two(g, c)
    return c


@lru_cache(maxsize=None)
def four_graph_colorings() -> dict[str, tuple[PlaneGraph, VertexColoring]]:
    g1 = gen_g1()
    c1, _ = solve(g1, 5)
    assert c1 is not None and not verify_distance_two(g1, c1)
    return {"g0": (gen_g0(), _g0_coloring()), "g1": (g1, c1)}


def recognize_four_graph(g: PlaneGraph) -> Optional[str]:
    """'g0' or 'g1' when g is one of the two 5-colourable four-graphs."""
    if FOUR_GRAPH not in classify(g).flags:
        raise NotFourGraph("not a four-graph")
    if not lemma_four_screen(g):
        return None
    code = canonical_code(g)
    for name, (h, _) in four_graph_colorings().items():
        if code == canonical_code(h):
            return name
    return None


def recognize_four_graph_colorable(g: PlaneGraph) -> Optional[VertexColoring]:
    name = recognize_four_graph(g)
    if name is None:
        return None
    h, c = four_graph_colorings()[name]
    iso = isomorphism(g, h)
    assert iso is not None
    return VertexColoring(tuple(c[iso[v]] for v in range(g.vertex_count)), 5)


def corpus() -> dict[str, PlaneGraph]:
    """Every named fixture graph, keyed by file stem."""
    out = {
        "k4": gen_k4(),
        "cube": gen_cube(),
        "octahedron": gen_octahedron(),
        "trunc_tet": gen_truncated_tetrahedron(),
        "k4_subdiv": gen_k4_subdivided(),
        "dodecahedron": gen_dodecahedron(),
        "g0": gen_g0(),
        "g1": gen_g1(),
        "bridged_cubic": gen_bridged_cubic(),
    }
    for k in (3, 4, 5):
        out[f"prism_{k}"] = gen_cyclic_prism(k)
    for k in range(4):
        out[f"ck_{k}"] = gen_goodey_ck(k)
    return out


GENERATORS = {
    "cube": gen_cube,
    "prism": gen_cyclic_prism,
    "ck": gen_goodey_ck,
    "g0": gen_g0,
    "g1": gen_g1,
    "octahedron": gen_octahedron,
    "trunc-tet": gen_truncated_tetrahedron,
    "k4-subdiv": gen_k4_subdivided,
    "dodecahedron": gen_dodecahedron,
    "k4": gen_k4,
    "bridged": gen_bridged_cubic,
}
