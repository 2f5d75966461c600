import random
from collections import Counter

import networkx as nx
import pytest

from d2color.coloring import verify_distance_two
from d2color.errors import KTooSmall, NotFourGraph, NotGoodey
from d2color.exact_solver import count_up_to_permutation, solve
from d2color.families import (
    GENERATORS,
    ck_coloring_for,
    corpus,
    enumerate_cubic_plane_graphs,
    four_graph_colorings,
    gen_bridged_cubic,
    gen_cube,
    gen_cyclic_prism,
    gen_dodecahedron,
    gen_g0,
    gen_g1,
    gen_goodey_ck,
    gen_k4,
    gen_k4_subdivided,
    gen_octahedron,
    gen_petersen_adjacency,
    gen_truncated_tetrahedron,
    goodey_ck_coloring,
    lemma_four_screen,
    recognize_ck,
    recognize_four_graph,
    recognize_four_graph_colorable,
    trace_ck_structure,
)
from d2color.plane_graph import (
    CONNECTED,
    FOUR_GRAPH,
    GOODEY,
    TRICONNECTED,
    PlaneGraph,
    canonical_code,
    classify,
    connectivity,
)

from oracles import to_nx


def medial(g):
    """Medial graph: one vertex per edge, faces from the vertices and faces of g."""
    idx = {e: i for i, e in enumerate(g.edges)}

    def e(u, v):
        return idx[(min(u, v), max(u, v))]

    faces = [[e(v, w) for w in g.neighbors(v)][::-1] for v in range(g.vertex_count)]
    for f in g.faces:
        vs = f.vertices
        faces.append([e(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))])
    return PlaneGraph.from_faces(faces)


def test_small_generators():
    assert gen_k4().face_sizes() == [3] * 4
    assert gen_octahedron().face_sizes() == [3] * 8
    assert Counter(gen_truncated_tetrahedron().face_sizes()) == {3: 4, 6: 4}
    assert gen_dodecahedron().face_sizes() == [5] * 12
    assert sorted(gen_k4_subdivided().degrees) == [2, 2, 2, 3, 3, 3, 3]
    assert nx.is_isomorphic(nx.Graph([(u, v) for u, ws in gen_petersen_adjacency().items() for v in ws]), nx.petersen_graph())


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_prism(k):
    g = gen_cyclic_prism(k)
    assert g.vertex_count == 4 * k
    assert Counter(g.face_sizes()) == ({4: 6} if k == 2 else {4: 2 * k, 2 * k: 2})
    assert nx.is_isomorphic(to_nx(g), nx.circular_ladder_graph(2 * k))


def test_prism_guard():
    with pytest.raises(KTooSmall):
        gen_cyclic_prism(1)


def test_prism_2_is_cube():
    assert canonical_code(gen_cyclic_prism(2)) == canonical_code(gen_cube())


@pytest.mark.parametrize("k", range(5))
def test_ck_shape(k):
    g = gen_goodey_ck(k)
    assert g.vertex_count == 8 * (k + 1) ** 2
    assert Counter(g.face_sizes()) == ({4: 6, 6: 4 * k * k + 8 * k} if k else {4: 6})
    rep = classify(g)
    assert GOODEY in rep.flags and rep.connectivity == TRICONNECTED


def test_c0_is_cube():
    assert canonical_code(gen_goodey_ck(0)) == canonical_code(gen_cube())


@pytest.mark.parametrize("k", range(5))
def test_ck_coloring_verifies(k):
    g = gen_goodey_ck(k)
    assert verify_distance_two(g, goodey_ck_coloring(k)) == []


@pytest.mark.parametrize("k", range(3))
def test_ck_unique(k):
    assert count_up_to_permutation(gen_goodey_ck(k), 4) == 1


@pytest.mark.parametrize("k", range(5))
def test_recognize_ck_round_trip(k):
    g = gen_goodey_ck(k)
    perm = list(range(g.vertex_count))
    random.Random(k).shuffle(perm)
    h = g.relabel(perm)
    assert recognize_ck(h) == k
    c = ck_coloring_for(h, k)
    assert verify_distance_two(h, c) == []
    assert recognize_ck(g.mirror()) == k


def test_trace_structure():
    s, why = trace_ck_structure(gen_goodey_ck(2))
    assert s is not None, why
    s, why = trace_ck_structure(gen_cyclic_prism(3))
    assert s is None and why


def test_non_ck_goodey_graphs():
    assert recognize_ck(gen_cyclic_prism(3)) is None
    seen = 0
    for g in enumerate_cubic_plane_graphs(16):
        if GOODEY not in classify(g).flags:
            continue
        seen += 1
        k = recognize_ck(g)
        # C_k is exactly the 4-colourable Goodey family
        assert (k is not None) == (solve(g, 4)[0] is not None)
    assert seen >= 3


def test_recognize_ck_guard():
    with pytest.raises(NotGoodey):
        recognize_ck(gen_k4())


def test_enumeration_counts():
    # three-connected cubic planar graphs on 4..14 vertices: 1, 1, 2, 5, 14, 50
    counts = Counter(g.vertex_count for g in enumerate_cubic_plane_graphs(14))
    assert [counts[n] for n in range(4, 15, 2)] == [1, 1, 2, 5, 14, 50]


def test_enumeration_is_cubic_and_distinct():
    gs = list(enumerate_cubic_plane_graphs(12))
    assert len({canonical_code(g) for g in gs}) == len(gs)
    for g in gs:
        assert set(g.degrees) == {3} and connectivity(g) == TRICONNECTED


def test_bridged_fixture():
    g = gen_bridged_cubic()
    assert set(g.degrees) == {3}
    assert connectivity(g) == CONNECTED
    assert len(list(nx.bridges(to_nx(g)))) == 1


def test_g0_g1_shapes():
    g0, g1 = gen_g0(), gen_g1()
    assert FOUR_GRAPH in classify(g0).flags and FOUR_GRAPH in classify(g1).flags
    assert Counter(g0.face_sizes()) == {3: 8, 4: 4}
    assert Counter(g1.face_sizes()) == {3: 8, 4: 24}
    assert lemma_four_screen(g0) and lemma_four_screen(g1)


def test_g0_g1_colourings():
    for name, (g, c) in four_graph_colorings().items():
        assert verify_distance_two(g, c) == []
        assert count_up_to_permutation(g, 5) == 1


# four-graphs as medial graphs of small polyhedra
MEDIAL_SOURCES = {
    "k4": gen_k4(),
    "cube": gen_cube(),
    "octahedron": gen_octahedron(),
    "triangular_prism": PlaneGraph.from_faces([[0, 1, 2], [5, 4, 3], [0, 3, 4, 1], [1, 4, 5, 2], [2, 5, 3, 0]]),
}


@pytest.mark.parametrize("name", sorted(MEDIAL_SOURCES))
def test_recognize_four_graph_against_solver(name):
    m = medial(MEDIAL_SOURCES[name])
    assert FOUR_GRAPH in classify(m).flags
    colourable = solve(m, 5)[0] is not None
    if colourable:
        assert lemma_four_screen(m)
    assert (recognize_four_graph(m) is not None) == colourable


def test_medial_of_k4_is_octahedron():
    assert canonical_code(medial(gen_k4())) == canonical_code(gen_octahedron())


def test_recognize_four_graph():
    assert recognize_four_graph(gen_g0()) == "g0"
    assert recognize_four_graph(gen_g1().relabel(list(range(29, -1, -1)))) == "g1"
    assert recognize_four_graph(gen_octahedron()) is None
    assert recognize_four_graph_colorable(gen_octahedron()) is None
    c = recognize_four_graph_colorable(gen_g1())
    assert verify_distance_two(gen_g1(), c) == []
    with pytest.raises(NotFourGraph):
        recognize_four_graph(gen_cube())


def test_corpus_and_generators():
    names = set(corpus())
    assert {"k4", "cube", "octahedron", "dodecahedron", "g0", "g1", "bridged_cubic"} <= names
    assert GENERATORS["ck"](1).vertex_count == 32
    assert GENERATORS["prism"](3).vertex_count == 12
