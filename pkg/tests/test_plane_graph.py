import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from d2color.errors import (
    Disconnected,
    LoopOrMultiEdge,
    NonPlanarEmbedding,
    NonSymmetricAdjacency,
)
from d2color.families import (
    corpus,
    gen_cube,
    gen_cyclic_prism,
    gen_goodey_ck,
    gen_k4,
    gen_octahedron,
)
from d2color.plane_graph import (
    BICONNECTED,
    CONNECTED,
    DISCONNECTED,
    FOUR_GRAPH,
    GOODEY,
    TRICONNECTED,
    TYPE_ONE_BARNETTE,
    TYPE_TWO_BARNETTE,
    PlaneGraph,
    bipartition,
    build,
    canonical_code,
    classify,
    connectivity,
    dual,
    faces,
    isomorphism,
    square_adjacency,
)

from helpers import load_fixture
from oracles import square_pairs, to_nx

K4_ROT = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]
GRAPHS = corpus()


def test_k4_build():
    g = build(K4_ROT)
    assert len(g.faces) == 4 and g.face_sizes() == [3, 3, 3, 3]


def test_swapped_rotation_is_rejected():
    rot = [list(r) for r in K4_ROT]
    rot[0] = [1, 3, 2]
    with pytest.raises(NonPlanarEmbedding):
        build(rot)


def test_asymmetric_and_multi_edges():
    with pytest.raises(NonSymmetricAdjacency):
        build([[1], []])
    with pytest.raises(LoopOrMultiEdge):
        build([[1, 1], [0, 0]])
    with pytest.raises(LoopOrMultiEdge):
        build([[0]])


def test_cube_faces():
    g = gen_cube()
    assert [f.size for f in faces(g)] == [4] * 6


def test_hexagonal_prism_faces():
    g = gen_cyclic_prism(3)
    assert g.edge_count == 18
    assert sum(g.face_sizes()) == 36
    assert Counter(g.face_sizes()) == {6: 2, 4: 6}


def test_every_dart_in_one_face():
    for g in GRAPHS.values():
        seen = [d for f in g.faces for d in f.darts]
        assert sorted(seen) == list(range(g.dart_count))


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_counting_identities(name):
    g = GRAPHS[name]
    assert sum(g.degrees) == 2 * g.edge_count == sum(g.face_sizes())
    assert g.vertex_count - g.edge_count + len(g.faces) == 2


def test_cube_dual_is_octahedron():
    d = dual(gen_cube())
    assert d.vertex_count == 6 and d.edge_count == 12 and d.face_sizes() == [3] * 8
    assert canonical_code(d.to_simple()) == canonical_code(gen_octahedron())


def test_k4_self_dual():
    assert canonical_code(dual(gen_k4()).to_simple()) == canonical_code(gen_k4())


def test_dual_degrees_are_face_sizes():
    g = gen_cyclic_prism(2)
    assert sorted(dual(g).degrees) == g.face_sizes()


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_double_dual(name):
    g = GRAPHS[name]
    dd = g.dual().dual()
    assert dd.face_sizes() == g.face_sizes()
    assert dd.rotation == g.rotation and dd.twin == g.twin


def test_dual_keeps_parallel_edges():
    # a 2-edge cut yields two faces sharing two edges
    d = load_fixture("two_cut_24").dual()
    pairs = Counter(frozenset((d.origin[x], d.head(x))) for x in range(d.dart_count) if x < d.twin[x])
    assert max(pairs.values()) == 2


def test_dual_rejects_disconnected():
    g = PlaneGraph([[1], [0], [3], [2]])
    with pytest.raises(Disconnected):
        dual(g)
    with pytest.raises(Disconnected):
        canonical_code(g)


def test_classify_examples():
    cube = classify(gen_cube())
    assert cube.is_cubic and cube.is_bipartite and cube.connectivity == TRICONNECTED
    assert cube.flags == {GOODEY, TYPE_ONE_BARNETTE, TYPE_TWO_BARNETTE}
    k4 = classify(gen_k4())
    assert k4.is_cubic and not k4.is_bipartite and k4.flags == {TYPE_TWO_BARNETTE}
    assert k4.face_size_counts == {3: 4}
    octa = classify(gen_octahedron())
    assert octa.is_quartic and octa.flags == {FOUR_GRAPH}


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_connectivity_matches_networkx(name):
    g = GRAPHS[name]
    k = nx.node_connectivity(to_nx(g))
    expected = [DISCONNECTED, CONNECTED, BICONNECTED, TRICONNECTED][min(k, 3)]
    assert connectivity(g) == expected


def test_connectivity_small_cases():
    assert connectivity(PlaneGraph([[1], [0]])) == CONNECTED
    assert connectivity(PlaneGraph([[1, 2], [2, 0], [0, 1]])) == BICONNECTED
    assert connectivity(PlaneGraph([[1], [0], [3], [2]])) == DISCONNECTED


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_flag_implications(name):
    rep = classify(GRAPHS[name])
    sizes = set(rep.face_sizes)
    if TYPE_ONE_BARNETTE in rep.flags:
        assert rep.is_cubic and rep.is_bipartite and rep.connectivity == TRICONNECTED
    if TYPE_TWO_BARNETTE in rep.flags:
        assert rep.is_cubic and sizes <= {3, 4, 5, 6}
    if GOODEY in rep.flags:
        assert rep.is_cubic and sizes <= {4, 6} and rep.face_size_counts[4] == 6
    if FOUR_GRAPH in rep.flags:
        assert rep.is_quartic and sizes <= {3, 4} and rep.face_size_counts[3] == 8


def test_bipartition_examples():
    a, b = bipartition(gen_cube())
    assert len(a) == len(b) == 4 and 0 in a
    assert bipartition(gen_k4()) is None
    a, b = bipartition(gen_cyclic_prism(3))
    assert len(a) == len(b) == 6


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_bipartition_agrees_with_networkx(name):
    g = GRAPHS[name]
    sides = bipartition(g)
    assert (sides is not None) == nx.is_bipartite(to_nx(g))
    if sides:
        a, _ = sides
        assert all((u in a) != (v in a) for u, v in g.edges)


def test_square_adjacency_examples():
    path = PlaneGraph([[1], [0, 2], [1]])
    sq = square_adjacency(path)
    assert sq == (frozenset({1, 2}), frozenset({0, 2}), frozenset({0, 1}))
    assert square_adjacency(PlaneGraph([[]])) == (frozenset(),)
    cube = gen_cube()
    assert all(len(s) == 6 for s in square_adjacency(cube))


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_square_adjacency_against_networkx(name):
    g = GRAPHS[name]
    sq = square_adjacency(g)
    ours = {(u, v) for u in range(g.vertex_count) for v in sq[u] if u < v}
    assert ours == square_pairs(g)


def test_codes_separate_cube_and_prism():
    assert canonical_code(gen_cube()) != canonical_code(gen_cyclic_prism(3))


def test_mirror_of_c1_has_same_code():
    g = gen_goodey_ck(1)
    assert canonical_code(g.mirror()) == canonical_code(g)


def test_codes_are_distinct_across_corpus():
    codes = {}
    for name, g in GRAPHS.items():
        codes.setdefault(canonical_code(g), []).append(name)
    dupes = [sorted(v) for v in codes.values() if len(v) > 1]
    assert dupes == [["ck_0", "cube"]]


def test_code_detects_whitney_flip():
    # flipping one side of the 2-edge cut re-embeds the same abstract graph
    g = load_fixture("two_cut_24")
    flipped = PlaneGraph([ws if v < 12 else ws[::-1] for v, ws in enumerate(g.neighbor_lists)])
    assert nx.is_isomorphic(to_nx(g), to_nx(flipped))
    assert flipped.face_sizes() != g.face_sizes()
    assert canonical_code(flipped) != canonical_code(g)


@pytest.mark.parametrize("name", ["cube", "prism_3", "ck_1", "trunc_tet", "g0", "dodecahedron", "bridged_cubic"])
@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_code_invariant_under_relabelling(name, seed):
    g = GRAPHS[name]
    perm = list(range(g.vertex_count))
    random.Random(seed).shuffle(perm)
    h = g.relabel(perm)
    assert canonical_code(h) == canonical_code(g)
    iso = isomorphism(h, g)
    assert iso is not None
    assert all(g.has_edge(iso[u], iso[v]) for u, v in h.edges)


def test_isomorphism_matches_networkx_on_abstract_graphs():
    for name in ("cube", "ck_1", "g1"):
        g = GRAPHS[name]
        perm = list(range(g.vertex_count))
        random.Random(7).shuffle(perm)
        h = g.relabel(perm)
        iso = isomorphism(g, h)
        assert nx.is_isomorphic(to_nx(g), to_nx(h))
        assert nx.utils.graphs_equal(nx.relabel_nodes(to_nx(g), iso), to_nx(h))
