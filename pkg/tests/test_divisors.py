import itertools

import pytest

from orposets import (
    Graph,
    degree,
    delete_edges,
    divisor_of,
    genus,
    hakimi_inequalities,
    hakimi_witness,
    hat_divisor,
    is_rooted,
    is_stable_divisor,
    partial_leq,
    restrict,
    sigma,
    stable_to_orientation,
    subdivide,
    subset_degree,
)
from orposets.atlas import enumerate_stable_graphs
from orposets.posets import removal_family

THETA = Graph((0, 0), ((0, 1), (0, 1), (0, 1)))
DUMBBELL = Graph((0, 0), ((0, 0), (0, 1), (1, 1)))


def test_degree_and_restriction():
    d = (1, -2, 3)
    assert degree(d) == 2
    # restriction zeroes entries outside Z but keeps the index space
    assert restrict(d, {0, 2}) == (1, 0, 3)
    assert subset_degree(d, {1, 2}) == 1
    assert partial_leq((0, 0), (1, 0))
    assert not partial_leq((2, 0), (1, 5))


def test_stable_divisor_spot_values():
    assert is_stable_divisor(THETA, (0, 1), 0)
    assert is_stable_divisor(THETA, (1, 0), 0)
    assert not is_stable_divisor(THETA, (-1, 3), 1)
    assert is_stable_divisor(DUMBBELL, (1, 1), 1)
    assert not is_stable_divisor(DUMBBELL, (2, 0), 1)


def test_sigma_matches_hand_counts():
    assert sigma(THETA, 0) == [(0, 1), (1, 0)]
    assert sigma(DUMBBELL, 1) == [(1, 1)]
    # one weight-2 vertex, no edges: the only divisor is w - 1 + b
    lone = Graph((2,))
    assert sigma(lone, 0) == [(1,)]
    assert sigma(lone, 1) == [(2,)]


def test_sigma_window_is_wide_enough():
    # widening the candidate box must not find new stable divisors
    for graph in enumerate_stable_graphs(2):
        for b in (0, 1):
            assert sigma(graph, b, widen=2) == sigma(graph, b)


def test_sigma_degree_is_constant():
    for graph in enumerate_stable_graphs(2):
        for b in (0, 1):
            for d in sigma(graph, b):
                assert degree(d) == genus(graph) - 1 + b


def test_stable_divisors_on_carriers_with_removed_edges():
    for graph in enumerate_stable_graphs(2):
        for b in (0, 1):
            for s in removal_family(graph, b):
                carrier = delete_edges(graph, s)
                assert sigma(carrier, b, widen=2) == sigma(carrier, b)


def test_stable_to_orientation_inverts_the_divisor_map():
    for graph in enumerate_stable_graphs(2):
        for s in removal_family(graph, 1):
            carrier = delete_edges(graph, s)
            for d in sigma(carrier, 1):
                o = stable_to_orientation(carrier, d)
                assert divisor_of(o) == d
                assert is_rooted(o)


def test_stable_to_orientation_edgeless_convention():
    lone = Graph((2,))
    o = stable_to_orientation(lone, (2,))
    assert o.states == () and o.b == 1
    assert divisor_of(o) == (2,)


def test_stable_to_orientation_rejects_b_zero():
    with pytest.raises(ValueError):
        stable_to_orientation(THETA, (0, 1), b=0)


def test_hakimi_witness_iff_inequalities():
    # every divisor of degree g - 1 in a small box around the feasible range
    for graph in (THETA, DUMBBELL):
        want = genus(graph) - 1
        for d in itertools.product(range(-2, 4), repeat=2):
            if degree(d) != want:
                continue
            ok = hakimi_inequalities(graph, d)
            witness = hakimi_witness(graph, d)
            assert ok == (witness is not None)
            if witness is not None:
                assert divisor_of(witness) == d


def test_hakimi_witness_rejects_wrong_degree():
    with pytest.raises(ValueError):
        hakimi_witness(THETA, (1, 1))


def test_hat_divisor_appends_ones():
    hat_graph, hat = subdivide(THETA, {0, 2})
    assert hat_divisor((0, 1), hat) == (0, 1, 1, 1)
    assert degree(hat_divisor((0, 1), hat)) == 1 + len(hat.subdivided)
    assert len(hat_divisor((0, 1), hat)) == hat_graph.vertex_count
