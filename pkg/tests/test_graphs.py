from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from classpoly import graphs as gr
from conftest import graphs, to_nx


# graph6 -----------------------------------------------------------------------


@pytest.mark.parametrize("text,expected", [
    ("A_", gr.complete(2)),
    ("Bw", gr.complete(3)),
    ("Bg", gr.path(3)),
    ("A?", gr.edgeless(2)),
    ("@", gr.edgeless(1)),
])
def test_graph6_known_strings(text, expected):
    assert gr.parse_graph6(text) == expected
    assert expected.to_graph6() == text


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    ours = g.to_graph6()
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs
    back = nx.from_graph6_bytes(ours.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges) == list(g.edges)


@given(graphs(max_n=10))
def test_graph6_roundtrip(g):
    assert gr.parse_graph6(gr.encode_graph6(g)) == g


def test_graph6_header_accepted():
    assert gr.parse_graph6(">>graph6<<Bw") == gr.complete(3)


@pytest.mark.parametrize("text,offset", [
    ("", 0),
    ("A", 1),      # missing data byte
    ("A~~", 2),    # trailing bytes
    ("zz!", 2),    # byte outside the printable range
])
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(gr.Graph6Error) as info:
        gr.parse_graph6(text)
    assert info.value.offset == offset


def test_graph6_rejects_large_n():
    with pytest.raises(gr.Graph6Error):
        gr.parse_graph6("~" + "?" * 10)


# edge lists and construction --------------------------------------------------------


def test_edge_list_roundtrip():
    g = gr.cycle(5)
    assert gr.parse_edge_list(gr.encode_edge_list(g)) == g


def test_edge_list_header_mismatch():
    with pytest.raises(gr.GraphError):
        gr.parse_edge_list("3 2\n0 1\n")


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(0, 1), (1, 0)], [(-1, 2)]])
def test_build_rejects_bad_edges(edges):
    with pytest.raises(gr.GraphError):
        gr.build(3, edges)


def test_build_sorts_edges_and_rejects_reversed_pairs():
    assert gr.build(3, [(1, 2), (0, 1)]).edges == ((0, 1), (1, 2))
    with pytest.raises(gr.GraphError):
        gr.build(3, [(2, 1)])


def test_families():
    assert gr.complete(4).m == 6
    assert gr.star(3).n == 4 and gr.star(3).m == 3 and gr.star(3).degree(0) == 3
    assert gr.complete_bipartite(2, 3).m == 6
    assert gr.path(4).edges == ((0, 1), (1, 2), (2, 3))
    assert gr.family("cycle", 4) == gr.cycle(4)
    with pytest.raises(gr.GraphError):
        gr.family("petersen", 10)
    with pytest.raises(gr.GraphError):
        gr.family("complete_bipartite", 2)


def test_join_of_complete_graphs_is_complete():
    assert gr.join(gr.complete(2), gr.complete(3)) == gr.complete(5)
    assert gr.join(gr.edgeless(2), gr.edgeless(3)) == gr.complete_bipartite(2, 3)


@given(graphs(max_n=8))
def test_complement_involution(g):
    assert gr.complement(gr.complement(g)) == g
    assert g.m + gr.complement(g).m == g.n * (g.n - 1) // 2


@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_relabel_preserves_edge_count_and_degrees(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert h.m == g.m
    assert sorted(h.degree(v) for v in range(h.n)) == sorted(g.degree(v) for v in range(g.n))


# neighbourhoods and components ---------------------------------------------------------


@given(graphs(max_n=9), st.data())
def test_induced_components_match_networkx(g, data):
    U = data.draw(st.integers(0, g.vertices))
    sub = to_nx(g).subgraph(gr.members(U))
    assert gr.component_count_induced(g, U) == nx.number_connected_components(sub)


@given(graphs(max_n=9), st.data())
def test_closed_neighbourhood(g, data):
    U = data.draw(st.integers(0, g.vertices))
    G = to_nx(g)
    expected = set(gr.members(U))
    for v in gr.members(U):
        expected |= set(G[v])
    assert gr.closed_neighborhood(g, U) == gr.vertex_set(expected)


def test_empty_set_has_no_components():
    assert gr.component_count_induced(gr.path(3), 0) == 0


@given(graphs(max_n=9))
def test_rank_and_isolated(g):
    G = to_nx(g)
    assert gr.matroid_rank(g) == g.n - nx.number_connected_components(G)
    assert gr.isolated_count(g) == nx.number_of_isolates(G)
    assert gr.is_connected(g) == nx.is_connected(G)


# invariants -------------------------------------------------------------------------


@given(graphs(max_n=9))
def test_independence_number_matches_networkx(g):
    comp = nx.complement(to_nx(g))
    alpha = max(len(c) for c in nx.find_cliques(comp))
    assert gr.independence_number(g) == alpha
    assert alpha <= gr.hansen_bound(g.n, g.m)


def _has_induced_claw(g):
    for c in range(g.n):
        nbrs = [v for v in range(g.n) if g.has_edge(c, v)]
        for a, b, d in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return True
    return False


@given(graphs(max_n=7))
def test_claw_free_by_definition(g):
    assert gr.is_claw_free(g) == (not _has_induced_claw(g))


def _has_induced_p4(g):
    for quad in combinations(range(g.n), 4):
        for order in ((0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3), (0, 2, 3, 1), (0, 3, 1, 2), (0, 3, 2, 1),
                      (1, 0, 2, 3), (1, 0, 3, 2), (1, 2, 0, 3), (1, 3, 0, 2), (2, 0, 1, 3), (2, 1, 0, 3)):
            a, b, c, d = (quad[i] for i in order)
            if (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
                    and not g.has_edge(a, c) and not g.has_edge(a, d) and not g.has_edge(b, d)):
                return True
    return False


@given(graphs(max_n=7))
def test_cographs_are_p4_free(g):
    # cographs are exactly the graphs without an induced path on four vertices
    assert gr.is_cograph(g) == (not _has_induced_p4(g))


@given(graphs(max_n=8))
def test_tree_and_path_predicates(g):
    G = to_nx(g)
    assert gr.is_tree(g) == nx.is_tree(G)
    is_pf = all(d <= 2 for _, d in G.degree) and nx.is_forest(G)
    assert gr.is_path_forest(g) == is_pf
    assert gr.is_path(g) == (is_pf and nx.is_connected(G))


def test_leaves_and_degree():
    assert gr.leaves(gr.star(4)) == 4
    assert gr.max_degree(gr.star(4)) == 4
    assert gr.leaves(gr.path(1)) == 0
    inv = gr.graph_invariants(gr.path(4))
    assert inv.is_path and inv.is_tree and inv.alpha == 2 and inv.leaves == 2


# domination --------------------------------------------------------------------------


@given(graphs(max_n=7))
def test_connected_dominating_sets_by_definition(g):
    G = to_nx(g)
    expected = []
    for U in range(1, g.vertices + 1):
        nodes = gr.members(U)
        if nx.is_dominating_set(G, nodes) and nx.is_connected(G.subgraph(nodes)):
            expected.append(U)
    assert gr.connected_dominating_sets(g) == expected
    assert bool(expected) == gr.is_connected(g)


# enumeration -------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 6))
def test_all_labeled_graphs_distinct_and_complete(n):
    gs = list(gr.all_labeled_graphs(n))
    assert len(gs) == 2 ** (n * (n - 1) // 2)
    assert len(set(gs)) == len(gs)


@pytest.mark.parametrize("n", range(1, 8))
def test_all_trees_counts(n):
    trees = list(gr.all_trees(n))
    assert len(trees) == (n ** (n - 2) if n > 1 else 1)
    assert len(set(trees)) == len(trees)
    assert all(gr.is_tree(t) for t in trees)


def test_enumeration_limits():
    with pytest.raises(gr.GraphError):
        list(gr.all_labeled_graphs(7))
