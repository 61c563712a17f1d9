import json
import math

import networkx as nx
import pytest

from shadowbound.constructions import build_G1, build_G2
from shadowbound.graphs import Graph, canonical_graph6, is_isomorphic, min_triangle_degree
from shadowbound.oracle import (MAX_N_GRAPH, WORKERS_ENV, SearchResult, default_workers,
                                min_edges_graph, min_shadow_family, verify_isolated_clique,
                                verify_remark_structure)

ATLAS = nx.graph_atlas_g()[1:]


def atlas_table():
    """Minimum edges and extremal classes for every (n, T), n <= 7, from the full atlas."""
    table = {}
    for H in ATLAS:
        n = H.number_of_nodes()
        G = Graph.from_edges(n, H.edges())
        m = min_triangle_degree(G)
        for T in range(m + 1):
            best = table.get((n, T))
            e = G.num_edges
            if best is None or e < best[0]:
                table[(n, T)] = (e, [G])
            elif e == best[0]:
                best[1].append(G)
    return table


TABLE = atlas_table()


@pytest.mark.parametrize("n", range(1, 8))
def test_min_edges_matches_atlas(n):
    for T in range(math.comb(n - 1, 2) + 1):
        res = min_edges_graph(n, T)
        e, graphs = TABLE[(n, T)]
        assert res.minimum == e
        # every extremal isomorphism class, exactly once
        assert sorted(canonical_graph6(G) for G in graphs) == sorted(canonical_graph6(W) for W in res.witnesses)


@pytest.mark.parametrize("n", range(1, 6))
def test_pruned_equals_unpruned(n):
    for T in range(math.comb(n - 1, 2) + 1):
        a = min_edges_graph(n, T)
        b = min_edges_graph(n, T, prune=False)
        assert a.minimum == b.minimum
        assert [canonical_graph6(W) for W in a.witnesses] == [canonical_graph6(W) for W in b.witnesses]


@pytest.mark.parametrize("n", range(3, 6))
def test_family_search_pruned_equals_unpruned(n):
    for T in range(math.comb(n - 1, 2) + 1):
        a = min_shadow_family(n, T)
        b = min_shadow_family(n, T, prune=False)
        assert a.minimum == b.minimum
        assert {tuple(F.tuples()) for F in a.witnesses} == {tuple(F.tuples()) for F in b.witnesses}


def test_family_search_n6_values():
    got = [min_shadow_family(6, T, witnesses=False).minimum for T in range(11)]
    assert got == [0, 6, 10, 11, 12, 13, 14, 15, 15, 15, 15]


def test_known_minima():
    res = min_edges_graph(6, 6)
    assert res.minimum == 14
    assert len(res.witnesses) == 1
    K6_minus = Graph.from_edges(6, [(0, 1)]).complement()
    assert is_isomorphic(res.witnesses[0], K6_minus)
    assert min_edges_graph(6, 1).minimum == 6
    assert min_edges_graph(7, 3).minimum == 12


def test_n8_structure():
    res = min_edges_graph(8, 6)
    assert res.minimum == 19
    assert all(is_isomorphic(W, build_G1(8, 4)) for W in res.witnesses)
    assert verify_remark_structure(res, 8, 4, 2) is True


def test_parallel_is_deterministic():
    ref = min_edges_graph(8, 10, workers=1)
    for w in (2, 3):
        res = min_edges_graph(8, 10, workers=w)
        assert res.minimum == ref.minimum
        assert [canonical_graph6(W) for W in res.witnesses] == [canonical_graph6(W) for W in ref.witnesses]


def test_workers_env(monkeypatch):
    monkeypatch.setenv(WORKERS_ENV, "3")
    assert default_workers() == 3
    monkeypatch.delenv(WORKERS_ENV)
    assert default_workers() == 1


def test_progress_callback():
    lines = []
    min_edges_graph(6, 4, progress=lines.append)
    assert lines and all(ln.startswith("task") for ln in lines)


def test_errors():
    with pytest.raises(ValueError):
        min_edges_graph(MAX_N_GRAPH + 1, 1)
    with pytest.raises(ValueError):
        min_edges_graph(5, 7)
    with pytest.raises(ValueError):
        min_edges_graph(6, 1, prune=False)
    with pytest.raises(ValueError):
        min_shadow_family(7, 1)
    with pytest.raises(ValueError):
        min_shadow_family(4, -1)


def test_search_result_json():
    res = min_edges_graph(6, 6)
    d = json.loads(res.to_json())
    assert d["minimum"] == 14 and d["witnesses"] == ["E^~w"]
    fam = json.loads(min_shadow_family(4, 3).to_json())
    assert fam["minimum"] == 6 and fam["witnesses"][0][0] == "4 3"
    assert isinstance(SearchResult(3, 0, 0).to_dict()["witnesses"], list)


def test_verify_isolated_clique():
    G = Graph.complete(4).disjoint_union(Graph.cycle(5))
    assert verify_isolated_clique(G, 3)
    assert not verify_isolated_clique(build_G1(10, 6), 6)
    assert not verify_isolated_clique(G, 4)


def test_verify_remark_structure():
    res = SearchResult(10, 15, 35, [build_G2(10, 6)])
    assert verify_remark_structure(res, 10, 6, 3) is True
    assert verify_remark_structure(SearchResult(10, 15, 36, [build_G1(10, 6)]), 10, 6, 3) is False
    assert verify_remark_structure(res, 10, 6.5, 3) is None
    assert verify_remark_structure(res, 11, 6, 3) is None
