import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from shadowbound.families import SetFamily, min_degree
from shadowbound.graphs import (Graph, all_graphs, canonical_form, canonical_graph6, clique_family,
                                format_edgelist, from_graph6, is_isomorphic, max_triangle_degree,
                                min_triangle_degree, parse_edgelist, shadow_graph, to_graph6,
                                triangle_degrees, triangles)

ATLAS = nx.graph_atlas_g()[1:]


def from_nx(H) -> Graph:
    return Graph.from_edges(H.number_of_nodes(), H.edges())


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def test_basic_constructors():
    K = Graph.complete(5)
    assert K.num_edges == 10 and K.degrees() == [4] * 5
    assert Graph.empty(4).num_edges == 0
    C = Graph.cycle(6)
    assert C.num_edges == 6 and set(C.degrees()) == {2}
    assert K.complement() == Graph.empty(5)
    assert Graph.complete(3).disjoint_union(Graph.complete(2)).num_edges == 4


def test_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))


def test_triangle_degrees_match_networkx_on_atlas():
    for H in ATLAS:
        G = from_nx(H)
        tri = nx.triangles(H)
        assert triangle_degrees(G) == [tri[v] for v in range(G.n)]


def test_triangle_degree_extremes():
    G = Graph.complete(6)
    assert min_triangle_degree(G) == max_triangle_degree(G) == 10
    with pytest.raises(ValueError):
        min_triangle_degree(Graph.empty(0))


@given(graphs())
def test_triangles_enumeration(G):
    listed = list(triangles(G))
    assert len(listed) * 3 == sum(triangle_degrees(G))
    assert len(set(listed)) == len(listed)


@given(graphs(max_n=20))
def test_graph6_matches_networkx(G):
    ref = nx.to_graph6_bytes(to_nx(G), header=False).strip().decode()
    assert to_graph6(G) == ref
    assert from_graph6(ref) == G


def test_graph6_large_n():
    G = Graph.cycle(100)
    s = to_graph6(G)
    assert s[0] == "~"
    assert from_graph6(s) == G
    assert from_graph6(">>graph6<<" + to_graph6(Graph.complete(4))) == Graph.complete(4)


def test_graph6_rejects_garbage():
    with pytest.raises(ValueError):
        from_graph6("D?")
    with pytest.raises(ValueError):
        from_graph6("D\x01\x01")


@given(graphs())
def test_edgelist_round_trip(G):
    assert parse_edgelist(format_edgelist(G)) == G


def test_edgelist_format():
    assert format_edgelist(Graph.from_edges(3, [(1, 2)])) == "3\n1 2\n"
    with pytest.raises(ValueError):
        parse_edgelist("0 1\n")


@settings(max_examples=200)
@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabel(G, rnd):
    order = list(range(G.n))
    rnd.shuffle(order)
    assert canonical_form(G.relabel(order)) == canonical_form(G)


def test_canonical_form_separates_atlas():
    # the atlas lists each isomorphism class once
    seen = {}
    for H in ATLAS:
        code = canonical_graph6(from_nx(H))
        assert code not in seen
        seen[code] = H


def to_nx(G: Graph):
    H = nx.empty_graph(G.n)
    H.add_edges_from(G.edges())
    return H


@settings(max_examples=150)
@given(graphs(max_n=7), graphs(max_n=7))
def test_is_isomorphic_matches_networkx(G, H):
    assert is_isomorphic(G, H) == nx.is_isomorphic(to_nx(G), to_nx(H))


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_is_isomorphic_on_relabelings(G, rnd):
    order = list(range(G.n))
    rnd.shuffle(order)
    assert is_isomorphic(G, G.relabel(order))


def test_canonical_form_of_complete_graph_is_fast():
    assert canonical_form(Graph.complete(8)) == Graph.complete(8)


def test_clique_family_counts_match_networkx():
    for H in ATLAS[::7]:
        G = from_nx(H)
        for k in (2, 3, 4):
            ref = sum(1 for c in nx.enumerate_all_cliques(H) if len(c) == k)
            assert len(clique_family(G, k)) == ref


def test_clique_family_errors():
    with pytest.raises(ValueError):
        clique_family(Graph.complete(4), 1)
    assert len(clique_family(Graph.complete(2), 3)) == 0


def test_shadow_graph():
    F = SetFamily.from_sets(5, 3, [(0, 1, 2), (2, 3, 4)])
    assert shadow_graph(F).num_edges == 6
    with pytest.raises(ValueError):
        shadow_graph(SetFamily.complete(4, 2))


@pytest.mark.parametrize("n", range(1, 6))
def test_correspondence_sandwich_graphs(n):
    for G in all_graphs(n):
        H = shadow_graph(clique_family(G, 3))
        assert all(G.has_edge(u, v) for u, v in H.edges())


@pytest.mark.parametrize("n", range(3, 6))
def test_correspondence_sandwich_families(n):
    triples = list(itertools.combinations(range(n), 3))
    for mask in range(1 << len(triples)):
        F = SetFamily.from_sets(n, 3, (triples[i] for i in range(len(triples)) if mask >> i & 1))
        closure = clique_family(shadow_graph(F), 3)
        assert F.edges <= closure.edges
        assert min_degree(closure) >= min_degree(F)


def test_all_graphs_count():
    assert sum(1 for _ in all_graphs(4)) == 64
