from itertools import permutations

import networkx as nx
import pytest

from d2color.coloring import VertexColoring, verify_distance_two
from d2color.errors import (
    GraphSyntaxError,
    InvalidHColoring,
    NotDistanceTwo,
    NotPlanarInput,
    PreconditionFailed,
)
from d2color.exact_solver import iter_colorings, solve
from d2color.families import gen_k4
from d2color.plane_graph import PlaneGraph, bipartition
from d2color.reduction import (
    H_THREE_COLORING,
    H,
    ReductionCertificate,
    build_ring,
    extract_h_coloring,
    extract_three_coloring,
    gadget_bipartition,
    h_coloring_from_three_coloring,
    h_coloring_to_d2,
    reduce,
    ring_pair,
    three_colorings,
)

from oracles import all_relabelings, three_colorable, to_nx

INPUTS = {
    "edge": PlaneGraph([[1], [0]]),
    "path3": PlaneGraph([[1], [0, 2], [1]]),
    "triangle": PlaneGraph([[1, 2], [2, 0], [0, 1]]),
    "c4": PlaneGraph([[1, 3], [2, 0], [3, 1], [0, 2]]),
    "c5": PlaneGraph([[1, 4], [2, 0], [3, 1], [4, 2], [0, 3]]),
    "star": PlaneGraph([[1, 2, 3], [0], [0], [0]]),
    "k4": gen_k4(),
}
SATISFIABLE = [n for n in INPUTS if n != "k4"]


def test_h_graph():
    assert len(H.vertices) == 6 and len(H.edges) == 12
    h = nx.Graph([(tuple(sorted(p)), tuple(sorted(q))) for p, q in H.edges])
    assert nx.is_isomorphic(h, nx.octahedral_graph())
    assert all(H_THREE_COLORING[p] != H_THREE_COLORING[q] for p, q in H.edges)


@pytest.mark.parametrize("name,n", [("edge", 17), ("triangle", 51), ("k4", 102), ("path3", 34)])
def test_gadget_sizes(name, n):
    gp, cert = reduce(INPUTS[name])
    assert gp.vertex_count == n
    assert sum(r.size for r in cert.vertex_to_ring.values()) + len(cert.edge_to_fvw) == n


@pytest.mark.parametrize("name", sorted(INPUTS))
def test_gadget_is_plane_and_bipartite(name):
    gp, cert = reduce(INPUTS[name])
    assert gp.vertex_count - gp.edge_count + len(gp.faces) == 2
    assert max(gp.degrees) <= 3
    a, b = gadget_bipartition(cert)
    assert a | b == set(range(gp.vertex_count)) and not a & b
    assert all((u in a) != (v in a) for u, v in gp.edges)
    assert bipartition(gp) is not None and nx.is_bipartite(to_nx(gp))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_lone_ring_is_forced(k):
    g, ring = build_ring(k)
    seen = set()
    for c in iter_colorings(g, 4):
        for cols in all_relabelings(c.colors, 4):
            seen.add(ring_pair(ring, VertexColoring(cols, 4)))
    # every pair is realisable, and ring_pair never found a broken ring
    assert seen == set(H.vertices)


def test_build_ring_guard():
    with pytest.raises(PreconditionFailed):
        build_ring(0)


@pytest.mark.parametrize("name", SATISFIABLE)
def test_satisfiable_inputs(name):
    g = INPUTS[name]
    assert three_colorable(g.edges, g.vertex_count)
    gp, cert = reduce(g)
    c, _ = solve(gp, 4, 10**8)
    assert c is not None
    three = extract_three_coloring(gp, cert, c)
    assert all(three[u] != three[v] for u, v in g.edges)


def test_every_colouring_of_edge_gadget_extracts():
    g = INPUTS["edge"]
    gp, cert = reduce(g)
    count = 0
    for c in iter_colorings(gp, 4):
        phi = extract_h_coloring(gp, cert, c)
        assert H.adjacent(phi[0], phi[1])
        count += 1
    assert count > 0


@pytest.mark.parametrize("name", SATISFIABLE)
def test_h_coloring_round_trip(name):
    g = INPUTS[name]
    gp, cert = reduce(g)
    col = three_colorings(g)
    phi = h_coloring_from_three_coloring(col)
    c = h_coloring_to_d2(g, cert, phi)
    assert verify_distance_two(gp, c) == []
    assert extract_h_coloring(gp, cert, c) == phi


def test_every_h_coloring_of_triangle_lifts():
    g = INPUTS["triangle"]
    gp, cert = reduce(g)
    lifted = 0
    for p in permutations(H.vertices, 3):
        phi = dict(enumerate(p))
        if all(H.adjacent(phi[u], phi[v]) for u, v in g.edges):
            c = h_coloring_to_d2(g, cert, phi)
            assert extract_h_coloring(gp, cert, c) == phi
            lifted += 1
    assert lifted == 48  # triangles in the octahedron, ordered


def test_invalid_h_colorings():
    g = INPUTS["edge"]
    _, cert = reduce(g)
    with pytest.raises(InvalidHColoring):
        h_coloring_to_d2(g, cert, {0: (1, 2), 1: (3, 4)})
    with pytest.raises(InvalidHColoring):
        h_coloring_to_d2(g, cert, {0: (1, 2), 1: (1, 5)})


def test_forged_coloring_rejected():
    g = INPUTS["triangle"]
    gp, cert = reduce(g)
    c = h_coloring_to_d2(g, cert, h_coloring_from_three_coloring([1, 2, 3]))
    forged = list(c.colors)
    forged[0] = forged[gp.neighbors(0)[0]]
    with pytest.raises(NotDistanceTwo):
        extract_h_coloring(gp, cert, VertexColoring(tuple(forged), 4))


def test_no_three_colouring_of_k4():
    assert three_colorings(gen_k4()) is None
    assert not three_colorable(gen_k4().edges, 4)


def test_certificate_round_trip():
    _, cert = reduce(INPUTS["k4"])
    again = ReductionCertificate.parse(cert.serialize())
    assert again == cert


def test_certificate_syntax():
    with pytest.raises(GraphSyntaxError) as info:
        ReductionCertificate.parse("vertex 0 ring 0 k 1\nvertex one ring 8 k 1\n")
    assert info.value.line == 2
    with pytest.raises(GraphSyntaxError):
        ReductionCertificate.parse("bogus\n")


def test_reduce_preconditions():
    with pytest.raises(NotPlanarInput):
        reduce([[1, 2, 3], [0, 2, 3], [0, 3, 1], [0, 1, 2]])
    with pytest.raises(PreconditionFailed):
        reduce(PlaneGraph([[1], [0], []]))
