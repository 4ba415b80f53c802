import pytest

from orposets import (
    Graph,
    bridges,
    compose_contractions,
    connected_components,
    contract,
    contraction_from_json,
    contraction_to_json,
    cut_between,
    delete_edges,
    genus,
    graph_from_json,
    graph_to_json,
    identity_contraction,
    induced_subgraph,
    is_bridgeless,
    is_connected,
    is_stable,
    spanned_subgraph,
    subdivide,
    subset_genus,
)

THETA = Graph((0, 0), ((0, 1), (0, 1), (0, 1)))
DUMBBELL = Graph((0, 0), ((0, 0), (0, 1), (1, 1)))


def test_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph((-1,))
    with pytest.raises(ValueError):
        Graph((0,), ((0, 1),))


def test_zero_vertex_graph_is_a_value():
    empty = Graph(())
    assert empty.vertex_count == 0 and empty.edge_count == 0


def test_degree_counts_loops_twice():
    assert DUMBBELL.degree(0) == 3
    assert DUMBBELL.degree(1) == 3
    assert THETA.degree(0) == 3


def test_connected_components_respects_removed_edges():
    assert connected_components(THETA) == (frozenset({0, 1}),)
    # cutting the bridge splits the dumbbell
    assert connected_components(DUMBBELL, frozenset({1})) == (
        frozenset({0}),
        frozenset({1}),
    )
    assert is_connected(DUMBBELL)
    assert not is_connected(DUMBBELL, frozenset({1}))


def test_genus_formula():
    # sum(weights) - |V| + |E| + #components
    assert genus(THETA) == 2
    assert genus(DUMBBELL) == 2
    assert genus(Graph((2,))) == 2
    assert genus(THETA, frozenset({0})) == 1
    assert genus(THETA, frozenset({0, 1, 2})) == 0
    assert genus(DUMBBELL, frozenset({1})) == 2  # two loops, two components


def test_induced_subgraph_and_subset_genus():
    sub = induced_subgraph(DUMBBELL, {0})
    assert sub == Graph((0,), ((0, 0),))
    assert subset_genus(DUMBBELL, {0}) == 1
    assert subset_genus(DUMBBELL, {0, 1}) == genus(DUMBBELL)
    assert subset_genus(DUMBBELL, {0}, removed=frozenset({0})) == 0


def test_delete_and_spanned_subgraphs():
    assert delete_edges(THETA, {1, 2}) == Graph((0, 0), ((0, 1),))
    assert spanned_subgraph(THETA, {0}) == Graph((0, 0), ((0, 1),))
    # no edges span the zero-vertex graph
    assert spanned_subgraph(THETA, set()) == Graph(())


def test_cuts_and_bridges():
    assert cut_between(THETA, {0}) == frozenset({0, 1, 2})
    assert bridges(THETA) == frozenset()
    assert bridges(DUMBBELL) == frozenset({1})
    assert is_bridgeless(THETA)
    assert not is_bridgeless(DUMBBELL)
    assert is_bridgeless(DUMBBELL, removed=frozenset({1}))


def test_stability():
    assert is_stable(THETA)
    assert is_stable(DUMBBELL)
    # a weight-0 vertex of degree 2 is not stable
    assert not is_stable(Graph((0, 0), ((0, 1), (0, 1))))
    assert is_stable(Graph((2,)))


def test_contract_parallel_edge():
    target, gamma = contract(THETA, frozenset({0}))
    assert target == Graph((0,), ((0, 0), (0, 0)))
    assert gamma.vertex_map == (0, 0)
    # edge 0 lands on the merged vertex; 1 and 2 become the loops
    assert gamma.edge_map == (0, 0, 1)
    assert genus(target) == genus(THETA)


def test_contract_loop_adds_weight():
    target, gamma = contract(DUMBBELL, frozenset({0}))
    assert target == Graph((1, 0), ((0, 1), (1, 1)))
    assert gamma.vertex_map == (0, 1)
    assert genus(target) == genus(DUMBBELL)


def test_contract_preserves_genus_on_every_subset():
    for graph in (THETA, DUMBBELL):
        for mask in range(1, 8):
            s0 = frozenset(e for e in range(3) if mask >> e & 1)
            target, _ = contract(graph, s0)
            assert genus(target) == genus(graph)


def test_compose_with_identity():
    target, gamma = contract(THETA, frozenset({0}))
    assert compose_contractions(identity_contraction(target), gamma) == gamma
    assert compose_contractions(gamma, identity_contraction(THETA)) == gamma


def test_composition_matches_one_step_contraction():
    mid, first = contract(THETA, frozenset({0}))
    # contract the image of edge 1 next
    end, second = contract(mid, frozenset({first.edge_map[1]}))
    both = compose_contractions(second, first)
    direct_target, _ = contract(THETA, frozenset({0, 1}))
    assert both.target == end
    assert end == direct_target


def test_subdivide_layout():
    hat_graph, hat = subdivide(THETA, {1})
    assert hat_graph.weights == (0, 0, 0)
    # untouched edges first, then the two halves of edge 1
    assert hat_graph.edges == ((0, 1), (0, 1), (0, 2), (2, 1))
    assert hat.triple(1) == (2, 2, 3)
    assert hat.kept() == {0: 0, 2: 1}
    assert genus(hat_graph) == genus(THETA)


def test_graph_json_round_trip():
    for graph in (THETA, DUMBBELL, Graph((2,))):
        assert graph_from_json(graph_to_json(graph)) == graph
    with pytest.raises(ValueError):
        graph_from_json("[1, 2, 3]")


def test_contraction_json_round_trip():
    _, gamma = contract(DUMBBELL, frozenset({0, 1}))
    assert contraction_from_json(contraction_to_json(gamma)) == gamma
