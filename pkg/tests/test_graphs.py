import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gturan.graphs import (
    Graph,
    canonical_code,
    common_neighborhood,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    induced_subgraph,
    is_connected,
    iter_bits,
    join,
    mask_of,
    path_graph,
    relabel,
    set_of,
    union_of,
)
from gturan.families import turan


@st.composite
def graphs(draw, max_n: int = 9):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [e for e in pairs if draw(st.booleans())]
    return from_edge_list(n, edges)


def test_from_edge_list_examples():
    k3 = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert k3 == complete_graph(3)
    assert from_edge_list(2, []).edge_count == 0
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.degree_sequence() == (2, 2, 2, 2)


def test_from_edge_list_errors():
    with pytest.raises(ValueError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edge_list(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(300, (0,) * 300)


def test_duplicate_edges_collapse():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count == 1


def test_disjoint_union_examples():
    g = disjoint_union([(complete_graph(3), 2)])
    assert (g.n, g.edge_count) == (6, 6)
    from gturan.counting import count_cliques

    assert count_cliques(g, 3) == 2
    g2 = disjoint_union([(complete_graph(3), 1), (complete_graph(1), 1)])
    assert (g2.n, g2.edge_count) == (4, 3)
    g3 = disjoint_union([(turan(4, 6), 7)])
    assert (g3.n, g3.edge_count) == (42, 91)


def test_disjoint_union_cap():
    with pytest.raises(ValueError):
        disjoint_union([(complete_graph(20), 20)])


def test_join_examples():
    star = join(complete_graph(1), empty_graph(3))
    assert star.degree_sequence() == (3, 1, 1, 1)
    split = join(complete_graph(2), empty_graph(2))
    assert (split.n, split.edge_count) == (4, 5)
    assert join(complete_graph(2), complete_graph(2)) == complete_graph(4)


def test_join_edge_count_formula():
    g1, g2 = cycle_graph(4), path_graph(3)
    j = join(g1, g2)
    assert j.edge_count == g1.edge_count + g2.edge_count + g1.n * g2.n


def test_induced_subgraph_examples():
    assert induced_subgraph(complete_graph(4), mask_of([0, 1, 2])) == complete_graph(3)
    c4 = cycle_graph(4)
    assert induced_subgraph(c4, mask_of([0, 2])).edge_count == 0
    assert induced_subgraph(c4, mask_of([0, 1])) == complete_graph(2)
    with pytest.raises(ValueError):
        induced_subgraph(c4, mask_of([5]))


def test_common_neighborhood_examples():
    assert common_neighborhood(complete_graph(4), mask_of([0, 1])) == mask_of([2, 3])
    c4 = cycle_graph(4)
    assert common_neighborhood(c4, mask_of([0, 2])) == mask_of([1, 3])
    g = union_of(complete_graph(3), complete_graph(1))
    assert common_neighborhood(g, mask_of([0, 1])) == mask_of([2])
    with pytest.raises(ValueError):
        common_neighborhood(c4, 0)


def test_common_neighborhood_disjoint_from_set():
    g = complete_graph(5)
    nb = common_neighborhood(g, mask_of([0, 1]))
    assert nb & mask_of([0, 1]) == 0


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_constructed_graphs_are_symmetric_and_loopless(g):
    for i in range(g.n):
        assert not g.adj[i] >> i & 1
        for j in iter_bits(g.adj[i]):
            assert g.adj[j] >> i & 1


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_join_with_nothing_and_single_union_are_identity(g):
    assert canonical_code(join(g, empty_graph(0))) == canonical_code(g)
    assert canonical_code(disjoint_union([(g, 1)])) == canonical_code(g)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert h.degree_sequence() == g.degree_sequence()
    assert h.edge_count == g.edge_count


def test_connected_components():
    g = union_of(complete_graph(3), path_graph(2), empty_graph(1))
    comps = connected_components(g)
    assert [c.bit_count() for c in comps] == [3, 2, 1]
    assert is_connected(complete_graph(4))
    assert not is_connected(empty_graph(2))


def test_set_helpers():
    assert set_of(mask_of([5, 2, 7])) == (2, 5, 7)
    assert list(iter_bits(0)) == []


def test_str_is_one_indexed():
    assert "1-2" in str(complete_graph(2))
