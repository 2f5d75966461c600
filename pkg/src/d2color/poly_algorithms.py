"""Polynomial-time colouring constructions for cubic plane graphs.

Each routine either builds a colouring and checks it with the distance-two
verifier before returning, or reports which hypothesis failed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping, Optional, Sequence

from .coloring import (
    BLUE,
    GREEN,
    RED,
    FaceColoring,
    VertexColoring,
    colors_per_face,
    derived_edge_coloring,
    is_distance_two,
    recover_vertex_coloring,
    red_class,
    special_edge_coloring,
    verify_face_coloring,
)
from .errors import (
    Bridge,
    DegreeTooHigh,
    InternalInconsistency,
    K4Component,
    NotBipartite,
    NotCubic,
    NotTypeTwo,
    PreconditionFailed,
)
from .plane_graph import (
    BICONNECTED,
    TYPE_TWO_BARNETTE,
    PlaneGraph,
    bipartition,
    classify,
    connectivity,
    has_connectivity,
)

# red matching

MATCHING_FAILURE = "matching-failure"
PARITY_CLASH = "parity-clash"
ODD_CYCLE = "odd-cycle"

ODD, EVEN = 1, 0


@dataclass(frozen=True)
class ParityAssignment:
    parity: tuple[int, ...]

    def is_odd(self, v: int) -> bool:
        return self.parity[v] == ODD


@dataclass(frozen=True)
class AuxiliaryGraph:
    """Same-parity pairs that must get different colours."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _two_color(adj: Sequence[Iterable[int]]) -> Optional[list[int]]:
    """Sides 0/1 with the lowest vertex of each component on side 0."""
    side = [-1] * len(adj)
    for root in range(len(adj)):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def red_parity(g: PlaneGraph, red: frozenset[tuple[int, int]]) -> Optional[ParityAssignment]:
    """Equal parity across red edges, opposite across the rest; lowest vertex even."""
    parity = [-1] * g.vertex_count
    for root in range(g.vertex_count):
        if parity[root] >= 0:
            continue
        parity[root] = EVEN
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                want = parity[u] if _norm(u, w) in red else 1 - parity[u]
                if parity[w] < 0:
                    parity[w] = want
                    queue.append(w)
                elif parity[w] != want:
                    return None
    return ParityAssignment(tuple(parity))


def auxiliary_graph(g: PlaneGraph, red: frozenset[tuple[int, int]]) -> AuxiliaryGraph:
    edges = set(red)
    for z in range(g.vertex_count):
        plain = [x for x in g.neighbors(z) if _norm(x, z) not in red]
        for i, x in enumerate(plain):
            for y in plain[i + 1:]:
                edges.add(_norm(x, y))
    return AuxiliaryGraph(g.vertex_count, frozenset(edges))


def color_with_red_matching(
    g: PlaneGraph, red: Iterable[Sequence[int]]
) -> tuple[Optional[VertexColoring], Optional[str]]:
    """Distance-two 4-colouring whose derived red class is exactly ``red``.

    Returns ``(coloring, None)`` or ``(None, reason)`` with reason one of
    MATCHING_FAILURE, PARITY_CLASH, ODD_CYCLE.
    """
    if max(g.degrees, default=0) > 3:
        raise DegreeTooHigh("red matching needs maximum degree at most 3")
    red_set = frozenset(_norm(u, v) for u, v in red)
    covered: dict[int, int] = {}
    for u, v in red_set:
        if not g.has_edge(u, v):
            return None, MATCHING_FAILURE
        for x in (u, v):
            covered[x] = covered.get(x, 0) + 1
    if any(k > 1 for k in covered.values()):
        return None, MATCHING_FAILURE
    if any(g.degree(v) == 3 and v not in covered for v in range(g.vertex_count)):
        return None, MATCHING_FAILURE

    parity = red_parity(g, red_set)
    if parity is None:
        return None, PARITY_CLASH
    side = _two_color(auxiliary_graph(g, red_set).adjacency())
    if side is None:
        return None, ODD_CYCLE
    # odd vertices take 1 or 3, even ones 2 or 4
    base = {ODD: 1, EVEN: 2}
    colors = tuple(base[parity.parity[v]] + 2 * side[v] for v in range(g.vertex_count))
    c = VertexColoring(colors, 4)
    if not is_distance_two(g, c) or red_class(g, c) != red_set:
        raise InternalInconsistency("red-matching construction produced a bad colouring")
    return c, None


def perfect_matchings(g: PlaneGraph) -> list[frozenset[tuple[int, int]]]:
    """Every perfect matching, by branching on the lowest unmatched vertex."""
    out = []
    matched = [False] * g.vertex_count
    chosen: list[tuple[int, int]] = []

    def rec(start):
        v = start
        while v < g.vertex_count and matched[v]:
            v += 1
        if v == g.vertex_count:
            out.append(frozenset(chosen))
            return
        matched[v] = True
        for w in sorted(g.neighbors(v)):
            if not matched[w]:
                matched[w] = True
                chosen.append(_norm(v, w))
                rec(v + 1)
                chosen.pop()
                matched[w] = False
        matched[v] = False

    rec(0)
    return out


# face colourings


def _face_neighbors(g: PlaneGraph) -> list[set[int]]:
    fod = g.face_of_dart
    adj: list[set[int]] = [set() for _ in g.faces]
    for d in range(g.dart_count):
        a, b = fod[d], fod[g.twin[d]]
        if a != b:
            adj[a].add(b)
    return adj


def face_three_coloring(g: PlaneGraph) -> FaceColoring:
    """A proper 3-colouring of the faces, found by backtracking."""
    if g.vertex_count == 0 or any(d != 3 for d in g.degrees):
        raise NotCubic("face three-colouring needs a cubic graph")
    if bipartition(g) is None:
        raise NotBipartite("face three-colouring needs a bipartite graph")
    fod = g.face_of_dart
    for d in range(g.dart_count):
        if fod[d] == fod[g.twin[d]]:
            raise Bridge(g.origin[d], g.head(d))
    adj = _face_neighbors(g)
    nf = len(adj)
    color = [0] * nf

    def pick():
        best, key = -1, None
        for f in range(nf):
            if color[f]:
                continue
            used = {color[h] for h in adj[f] if color[h]}
            k = (-len(used), -len(adj[f]))
            if key is None or k < key:
                best, key = f, k
        return best

    def rec(left):
        if not left:
            return True
        f = pick()
        used = {color[h] for h in adj[f]}
        for c in (RED, BLUE, GREEN):
            if c not in used:
                color[f] = c
                if rec(left - 1):
                    return True
        color[f] = 0
        return False

    # a connected bipartite bridgeless cubic plane graph always has one
    if not rec(nf):
        raise InternalInconsistency("no face 3-colouring found")
    out = FaceColoring(tuple(color))
    assert not verify_face_coloring(g, out)
    return out


def coloring_from_mod4_faces(g: PlaneGraph, f: FaceColoring) -> Optional[VertexColoring]:
    """The 4-colouring whose derived edge-colouring is the special one, if all faces are 0 mod 4.

    Colours spread edge by edge: across an edge of colour i the colour is
    the K4 partner of the current one under i.
    """
    e = special_edge_coloring(g, f)
    if any(face.size % 4 for face in g.faces):
        return None
    c = recover_vertex_coloring(g, e)
    if c is None:
        raise InternalInconsistency("face sizes are all 0 mod 4 but propagation clashed")
    if derived_edge_coloring(g, c) != e:
        raise InternalInconsistency("derived edge colouring differs from the special one")
    return c


# three colours per face

FACE_SIZES_NOT_MULTIPLE_OF_THREE = 1
NOT_BICONNECTED = 2
SHARED_EDGES_MISALIGNED = 3


def _shared_edges_aligned(g: PlaneGraph) -> bool:
    """Gaps between shared edges must agree mod 3, one face read backwards."""
    fod = g.face_of_dart
    index = {}
    for face in g.faces:
        for i, d in enumerate(face.darts):
            index[d] = i
    shared: dict[tuple[int, int], list[int]] = {}
    for d in range(g.dart_count):
        a, b = fod[d], fod[g.twin[d]]
        if a < b:
            shared.setdefault((a, b), []).append(d)
    for darts in shared.values():
        d0 = darts[0]
        for d in darts[1:]:
            n1 = index[d] - index[d0]
            n2 = index[g.twin[d]] - index[g.twin[d0]]
            if (n1 + n2) % 3:
                return False
    return True


def three_per_face_conditions(g: PlaneGraph) -> tuple[int, ...]:
    """Every violated condition among 1, 2 and 3, in order; empty when all hold.

    Condition 1 already rules out bridges: all-(+1) vertex labels would then
    satisfy Heawood's face condition, giving a 3-edge-colouring that a
    bridged cubic graph cannot have.  So 2 never fails on its own.
    """
    bad = []
    if any(face.size % 3 for face in g.faces):
        bad.append(FACE_SIZES_NOT_MULTIPLE_OF_THREE)
    if not has_connectivity(connectivity(g), BICONNECTED):
        bad.append(NOT_BICONNECTED)
    # gaps mod 3 are only well defined once every face size is 0 mod 3
    if FACE_SIZES_NOT_MULTIPLE_OF_THREE not in bad and not _shared_edges_aligned(g):
        bad.append(SHARED_EDGES_MISALIGNED)
    return tuple(bad)


def three_per_face_coloring(g: PlaneGraph) -> tuple[Optional[VertexColoring], tuple[int, ...]]:
    """Distance-two 4-colouring using exactly three colours on every face.

    The first face gets (1 2 3) repeated; each neighbouring face then
    continues the colours of a shared edge, with the colour missing from
    the coloured face in every third slot.
    """
    if g.vertex_count == 0 or any(d != 3 for d in g.degrees):
        raise NotCubic("three-per-face colouring needs a cubic graph")
    bad = three_per_face_conditions(g)
    if bad:
        return None, bad

    fod = g.face_of_dart
    color = [0] * g.vertex_count
    done = [False] * len(g.faces)

    def paint(face_id, start, pattern, step):
        cyc = g.faces[face_id].vertices
        n = len(cyc)
        for t in range(n):
            v = cyc[(start + step * t) % n]
            want = pattern[t % 3]
            if color[v] and color[v] != want:
                raise InternalInconsistency(f"face {face_id} clashes at vertex {v}")
            color[v] = want
        done[face_id] = True

    paint(0, 0, (1, 2, 3), 1)
    queue = deque([0])
    while queue:
        fid = queue.popleft()
        face = g.faces[fid]
        (missing,) = {1, 2, 3, 4} - {color[v] for v in face.vertices}
        for d in face.darts:
            other = fod[g.twin[d]]
            if done[other]:
                continue
            a, b = g.origin[d], g.head(d)
            # in the other face the twin runs b -> a
            pos = g.faces[other].darts.index(g.twin[d])
            paint(other, pos + 1, (color[a], color[b], missing), -1)
            queue.append(other)

    c = VertexColoring(tuple(color), 4)
    if not is_distance_two(g, c) or any(k != 3 for k in colors_per_face(g, c)):
        raise InternalInconsistency("three-per-face propagation gave a bad colouring")
    return c, ()


# Brooks


def _as_adjacency(h) -> list[set[int]]:
    if isinstance(h, PlaneGraph):
        return [set(s) for s in h.adjacency]
    if isinstance(h, Mapping):
        n = max(h, default=-1) + 1
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, ws in h.items():
            for w in ws:
                adj[u].add(w)
                adj[w].add(u)
        return adj
    adj = [set(ws) for ws in h]
    for u, ws in enumerate(adj):
        for w in ws:
            adj[w].add(u)
    return adj


def _components(adj: Sequence[set[int]], alive: Sequence[bool]) -> list[list[int]]:
    seen = [False] * len(adj)
    out = []
    for root in range(len(adj)):
        if seen[root] or not alive[root]:
            continue
        seen[root] = True
        comp, queue = [], deque([root])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in sorted(adj[u]):
                if alive[w] and not seen[w]:
                    seen[w] = True
                    queue.append(w)
        out.append(comp)
    return out


def _greedy_towards(adj, alive, root, color):
    """Colour ``alive`` vertices reachable from ``root`` farthest-first."""
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(adj[u]):
            if alive[w] and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    for v in sorted(dist, key=lambda x: (-dist[x], x)):
        used = {color[w] for w in adj[v] if color[w]}
        c = min({1, 2, 3} - used, default=0)
        if not c:
            raise InternalInconsistency(f"greedy step stuck at vertex {v}")
        color[v] = c


def _color_component(adj, comp, color):
    alive = [False] * len(adj)
    for v in comp:
        alive[v] = True
    low = [v for v in comp if len(adj[v]) < 3]
    if low:
        _greedy_towards(adj, alive, low[0], color)
        return
    if len(comp) == 4 and all(len(adj[v]) == 3 for v in comp):
        raise K4Component(f"component {sorted(comp)} is K4")
    # cubic: v with non-adjacent neighbours x, y and G - {x, y} connected
    for v in comp:
        nb = sorted(adj[v])
        for i, x in enumerate(nb):
            for y in nb[i + 1:]:
                if y in adj[x]:
                    continue
                alive[x] = alive[y] = False
                if len(_components(adj, alive)) == 1:
                    color[x] = color[y] = 1
                    _greedy_towards(adj, alive, v, color)
                    return
                alive[x] = alive[y] = True
    # otherwise split on a bridge and recolour one side
    for u in comp:
        for w in sorted(adj[u]):
            adj[u].discard(w)
            adj[w].discard(u)
            parts = _components(adj, alive)
            if len(parts) == 2:
                for part in parts:
                    _color_component(adj, part, color)
                adj[u].add(w)
                adj[w].add(u)
                if color[u] == color[w]:
                    side = next(p for p in parts if w in p)
                    swap = {color[w]: color[w] % 3 + 1, color[w] % 3 + 1: color[w]}
                    for x in side:
                        color[x] = swap.get(color[x], color[x])
                return
            adj[u].add(w)
            adj[w].add(u)
    raise InternalInconsistency("no Brooks configuration found")


def brooks_three_coloring(h) -> VertexColoring:
    """Proper 3-colouring of a graph with maximum degree at most 3 and no K4 component.

    ``h`` is a PlaneGraph, a mapping vertex -> neighbours, or a sequence of
    neighbour collections indexed 0..n-1.
    """
    adj = _as_adjacency(h)
    if any(len(a) > 3 for a in adj):
        raise DegreeTooHigh("Brooks three-colouring needs maximum degree at most 3")
    if any(v in a for v, a in enumerate(adj)):
        raise DegreeTooHigh("graph has a loop")
    color = [0] * len(adj)
    for comp in _components(adj, [True] * len(adj)):
        _color_component(adj, comp, color)
    for u, ws in enumerate(adj):
        assert all(color[u] != color[w] for w in ws)
    return VertexColoring(tuple(color), 3)


# six colours


def six_coloring_hypothesis(g: PlaneGraph, f: FaceColoring) -> Optional[str]:
    """Why ``f`` does not meet the six-colouring hypothesis, or None."""
    if g.vertex_count == 0 or any(d != 3 for d in g.degrees):
        return "graph is not cubic"
    if bipartition(g) is None:
        return "graph is not bipartite"
    if len(f.colors) != len(g.faces) or verify_face_coloring(g, f):
        return "face colouring is not proper"
    for face in g.faces:
        if f[face.id] == RED and face.size % 2:
            return f"red face {face.id} has odd size {face.size}"
        if f[face.id] in (BLUE, GREEN) and face.size % 4:
            return f"face {face.id} of size {face.size} is not red and not 0 mod 4"
    return None


def six_coloring_bipartite(g: PlaneGraph, f: FaceColoring) -> VertexColoring:
    """Distance-two 6-colouring from a red/blue/green face colouring.

    Red faces are contracted to points; the result is bipartite with sides A
    and B.  Each red edge (between a blue and a green face) points from its
    A end to its B end and is class one when the face traced by that dart is
    blue.  Within a class only three vertices are close: the red partner and
    the two at distance two along the red face.  Each class is 3-coloured.
    """
    why = six_coloring_hypothesis(g, f)
    if why:
        raise PreconditionFailed(why)
    fod = g.face_of_dart
    red_face = [-1] * g.vertex_count
    for face in g.faces:
        if f[face.id] == RED:
            for v in face.vertices:
                red_face[v] = face.id
    red_darts = [d for d in range(g.dart_count) if RED not in (f[fod[d]], f[fod[g.twin[d]]])]

    contracted: dict[int, set[int]] = {fid: set() for fid in set(red_face)}
    for d in red_darts:
        contracted[red_face[g.origin[d]]].add(red_face[g.head(d)])
    ids = sorted(contracted)
    pos = {fid: i for i, fid in enumerate(ids)}
    side = _two_color([[pos[x] for x in contracted[fid]] for fid in ids])
    if side is None:
        raise InternalInconsistency("contracted graph is not bipartite")

    klass = [0] * g.vertex_count
    partner = [-1] * g.vertex_count
    for d in red_darts:
        u, w = g.origin[d], g.head(d)
        if side[pos[red_face[u]]] != 0:
            continue
        k = 1 if f[fod[d]] == BLUE else 2
        klass[u] = klass[w] = k
        partner[u], partner[w] = w, u

    colors = [0] * g.vertex_count
    for k, offset in ((1, 0), (2, 3)):
        members = [v for v in range(g.vertex_count) if klass[v] == k]
        local = {v: i for i, v in enumerate(members)}
        conflict: list[set[int]] = [set() for _ in members]
        for v in members:
            conflict[local[v]].add(local[partner[v]])
        for face in g.faces:
            if f[face.id] != RED:
                continue
            cyc = face.vertices
            for i, v in enumerate(cyc):
                w = cyc[(i + 2) % len(cyc)]
                if klass[v] == k and w != v:
                    if klass[w] != k:
                        raise InternalInconsistency("classes do not alternate around a red face")
                    conflict[local[v]].add(local[w])
                    conflict[local[w]].add(local[v])
        sub = brooks_three_coloring(conflict)
        for v in members:
            colors[v] = sub[local[v]] + offset
    c = VertexColoring(tuple(colors), 6)
    if not is_distance_two(g, c):
        raise InternalInconsistency("six-colouring construction failed verification")
    return c


def six_coloring_roles(g: PlaneGraph, f: FaceColoring) -> Optional[FaceColoring]:
    """A recolouring of ``f`` (colour permutation) that meets the hypothesis, if any."""
    for perm in permutations((RED, BLUE, GREEN)):
        candidate = f.permuted(dict(zip((RED, BLUE, GREEN), perm)))
        if six_coloring_hypothesis(g, candidate) is None:
            return candidate
    return None


# type-two decision

PENTAGON_FACE = "PentagonFace"
MIXED_THREE_FOUR = "MixedThreeFour"
NOT_CK = "NotCk"
CK = "Ck"
THREE_SIX = "ThreeSix"


def decide_type_two(g: PlaneGraph) -> tuple[Optional[VertexColoring], str]:
    """Distance-two 4-colouring of a type-two graph, or None with the reason.

    The reason on success says which construction was used ('Ck' or
    'ThreeSix').
    """
    from .families import ck_coloring_for, recognize_ck

    if TYPE_TWO_BARNETTE not in classify(g).flags:
        raise NotTypeTwo("graph is not a type-two Barnette graph")
    sizes = set(g.face_sizes())
    if 5 in sizes:
        return None, PENTAGON_FACE
    if sizes <= {3, 6}:
        c, bad = three_per_face_coloring(g)
        if c is None:
            raise InternalInconsistency(f"faces of sizes 3 and 6 but conditions {bad} fail")
        return c, THREE_SIX
    if 3 in sizes:
        return None, MIXED_THREE_FOUR
    k = recognize_ck(g)
    if k is None:
        return None, NOT_CK
    return ck_coloring_for(g, k), CK
