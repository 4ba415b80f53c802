import pytest

from orposets import (
    BACKWARD,
    BIORIENTED,
    FORWARD,
    Graph,
    Orientation,
    bioriented_edges,
    collapse_choices,
    contract,
    correction_divisor,
    degree,
    divisor_of,
    enumerate_admissible,
    genus,
    hat_contraction,
    hat_divisor,
    is_admissible,
    is_totally_cyclic,
    movable_representative,
    pull_edges,
    push_class,
    push_divisor,
    push_edges,
    push_orientation,
)
from orposets.atlas import contraction_table, enumerate_stable_graphs

THETA = Graph((0, 0), ((0, 1), (0, 1), (0, 1)))
DUMBBELL = Graph((0, 0), ((0, 0), (0, 1), (1, 1)))


def test_push_and_pull_edges():
    _, gamma = contract(THETA, frozenset({0}))
    assert push_edges(gamma, {1}) == frozenset({0})
    assert pull_edges(gamma, {0}, 1) == frozenset({1})
    assert pull_edges(gamma, set(), 1) == frozenset()


def test_pull_edges_adds_bridges_for_totally_cyclic_carriers():
    # contracting the bridge of the dumbbell leaves a two-loop target;
    # the b=0 pullback of the full target carrier must stay bridgeless
    _, gamma = contract(DUMBBELL, frozenset({1}))
    assert pull_edges(gamma, set(), 0) == frozenset({1})
    assert pull_edges(gamma, set(), 1) == frozenset()


def test_push_divisor_and_correction():
    _, gamma = contract(THETA, frozenset({0}))
    assert push_divisor(gamma, (0, 1)) == (1,)
    assert correction_divisor(gamma, frozenset({1})) == (0,)


def test_pinned_chain_instance():
    # three vertices of weight 1 joined by two triple edges; contract one
    # middle parallel edge and push a fixed totally cyclic orientation
    chain = Graph(
        (1, 1, 1), ((0, 1), (0, 1), (0, 1), (1, 2), (1, 2), (1, 2))
    )
    s = frozenset({1})
    o = Orientation(
        chain, s, (BACKWARD, FORWARD, BACKWARD, FORWARD, FORWARD), 0
    )
    assert is_admissible(o)
    assert divisor_of(o) == (1, 2, 2)
    target, gamma = contract(chain, s)
    pushed = push_orientation(gamma, o)
    assert divisor_of(pushed) == (4, 2)
    assert push_divisor(gamma, divisor_of(o)) == (3, 2)
    assert correction_divisor(gamma, s) == (1, 0)
    # pushed divisor = divisor of push minus correction
    assert push_divisor(gamma, divisor_of(o)) == (3, 2) == (4 - 1, 2 - 0)
    assert is_admissible(pushed)


def test_push_orientation_rejects_contracted_bioriented_edge():
    _, gamma = contract(THETA, frozenset({0}))
    o = Orientation(THETA, frozenset(), (BIORIENTED, FORWARD, BACKWARD), 1)
    with pytest.raises(ValueError):
        push_orientation(gamma, o)


def test_push_orientation_through_a_flipped_arrow():
    # composing with the iso onto the canonical target reverses an edge here
    atlas = enumerate_stable_graphs(2)
    table = contraction_table(atlas)
    gamma = next(
        g
        for (i, j), gs in sorted(table.items())
        for g in gs
        if any(g.edge_flips)
    )
    for o in enumerate_admissible(gamma.source, frozenset(), 0):
        pushed = push_orientation(gamma, o)
        assert is_totally_cyclic(pushed)
        want = tuple(
            p + c
            for p, c in zip(
                push_divisor(gamma, divisor_of(o)),
                correction_divisor(gamma, frozenset()),
            )
        )
        assert divisor_of(pushed) == want


def test_push_class_total_contraction_convention():
    target, gamma = contract(DUMBBELL, frozenset({0, 1, 2}))
    assert target == Graph((2,))
    tset, divisor = push_class(gamma, frozenset(), (1, 1), 1)
    assert tset == frozenset()
    assert divisor == (2,)  # the unique stable divisor on the point


def test_movable_representative_avoids_contracted_edges():
    o = Orientation(THETA, frozenset(), (BIORIENTED, FORWARD, BACKWARD), 1)
    moved = movable_representative(o, frozenset({0}))
    assert bioriented_edges(moved) == [1]
    assert divisor_of(moved) == divisor_of(o)
    # nothing to do when the bioriented edge survives
    assert movable_representative(o, frozenset({2})) is o
    with pytest.raises(ValueError):
        movable_representative(o, frozenset({0, 1, 2}))


def test_hat_contraction_round_trip():
    hat_graph, hat, hat_target, target_hat, lifted, vmap = hat_contraction(
        THETA, frozenset({1}), frozenset({1, 2})
    )
    assert hat_graph == Graph((0, 0, 0), ((0, 1), (0, 1), (0, 2), (2, 1)))
    assert sorted(lifted.contracted) == [1, 2, 3]
    assert vmap == (0,)
    assert genus(hat_graph) == genus(THETA)
    assert lifted.source == hat_graph


def test_collapse_choices_count_and_degree():
    hat_graph, hat, *_ = hat_contraction(THETA, frozenset({1}), frozenset({1}))
    choices = list(collapse_choices(hat_graph, hat))
    assert len(choices) == 2  # one per half of the subdivided edge
    d_hat = hat_divisor((0, 1), hat)
    assert degree(d_hat) == 1 + len(hat.subdivided)
