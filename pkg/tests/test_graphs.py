from collections import Counter
from itertools import product
from math import factorial, prod

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import MultiGraphMatcher

from wallcross.localization.bruteforce import brute_force_graphs
from wallcross.localization.graphs import ScopeError, enumerate_graphs

SIZES = list(product((0, 1), (0, 1, 2), (1, 2, 3)))


def to_nx(graph):
    G = nx.MultiGraph()
    for i, v in enumerate(graph.vertices):
        G.add_node(i, label=(v.j, v.genus, tuple(v.legs)))
    for e in graph.edges:
        G.add_edge(e.a, e.b, degree=e.degree)
    return G


def _node_match(a, b):
    return a["label"] == b["label"]


def _edge_match(a, b):
    return sorted(x["degree"] for x in a.values()) == sorted(x["degree"] for x in b.values())


def nx_aut(graph):
    """Vertex automorphisms from networkx, times swaps of equal parallel edges."""
    G = to_nx(graph)
    vertex_maps = sum(1 for _ in MultiGraphMatcher(G, G, node_match=_node_match, edge_match=_edge_match).isomorphisms_iter())
    parallel = Counter((e.a, e.b, e.degree) for e in graph.edges)
    return vertex_maps * prod(factorial(c) for c in parallel.values())


def test_pinned_examples():
    assert [a.order for _, a in enumerate_graphs(0, 0, 1)] == [1]
    assert sorted(a.order for _, a in enumerate_graphs(0, 0, 2)) == [1, 2, 2]
    assert len(enumerate_graphs(1, 0, 1)) == 2
    (g, a), = enumerate_graphs(0, 0, 1)
    assert g.unstable_vertices() == [0, 1] and a.weight == 1


@pytest.mark.parametrize("g,n,d", SIZES)
def test_against_networkx(g, n, d):
    graphs = enumerate_graphs(g, n, d)
    nxs = [to_nx(G) for G, _ in graphs]
    for i in range(len(nxs)):
        for k in range(i + 1, len(nxs)):
            assert not nx.is_isomorphic(nxs[i], nxs[k], node_match=_node_match, edge_match=_edge_match)
    for G, aut in graphs:
        assert G.genus == g and G.degree == d and G.n_legs == n
        assert aut.order == nx_aut(G)
    assert len(graphs) == len(brute_force_graphs(g, n, d))


@pytest.mark.parametrize("g,n,d", SIZES)
def test_automorphisms_match_brute_force(g, n, d):
    ours = sorted(a.order for _, a in enumerate_graphs(g, n, d))
    assert ours == sorted(a for _, a in brute_force_graphs(g, n, d))


def test_degree_zero_graphs():
    graphs = enumerate_graphs(1, 2, 0)
    assert [G.vertices[0].j for G, _ in graphs] == ["0", "inf"]
    with pytest.raises(ScopeError):
        enumerate_graphs(0, 2, 0)


def test_out_of_scope():
    with pytest.raises(ScopeError):
        enumerate_graphs(2, 0, 1)
    with pytest.raises(ScopeError):
        enumerate_graphs(0, -1, 1)


def test_deterministic_order():
    assert enumerate_graphs(1, 1, 2) == enumerate_graphs(1, 1, 2)
    keys = [(len(G.edges), G.vertices, G.edges) for G, _ in enumerate_graphs(0, 1, 2)]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
