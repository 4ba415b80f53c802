import pytest

from orposets import (
    BACKWARD,
    BIORIENTED,
    FORWARD,
    Graph,
    Orientation,
    bioriented_edges,
    class_representative,
    divisor_of,
    enumerate_admissible,
    enumerate_orientations,
    equivalence_classes,
    extend_orientation,
    genus,
    is_admissible,
    is_rooted,
    is_totally_cyclic,
    move_biorientation,
    orientation_from_json,
    orientation_to_json,
    restrict_orientation,
    rooted_orient,
    strong_orient,
)
from orposets.orientations import ROOTED_MODES, TC_MODES

THETA = Graph((0, 0), ((0, 1), (0, 1), (0, 1)))
DUMBBELL = Graph((0, 0), ((0, 0), (0, 1), (1, 1)))
EMPTY = frozenset()


def test_enumeration_counts():
    # |S| kept edges, two plain states each; b=1 adds a choice of bioriented edge
    assert len(list(enumerate_orientations(THETA, EMPTY, 0))) == 8
    assert len(list(enumerate_orientations(THETA, EMPTY, 1))) == 12
    assert len(list(enumerate_orientations(DUMBBELL, EMPTY, 0))) == 8
    assert len(list(enumerate_orientations(DUMBBELL, EMPTY, 1))) == 12


def test_edgeless_carrier_yields_one_conventional_orientation():
    lone = Graph((2,))
    for b in (0, 1):
        out = list(enumerate_orientations(lone, EMPTY, b))
        assert len(out) == 1
        assert out[0].states == () and out[0].b == b
        assert divisor_of(out[0]) == (1 + b,)


def test_admissible_counts():
    assert len(list(enumerate_admissible(THETA, EMPTY, 0))) == 6
    assert len(list(enumerate_admissible(THETA, EMPTY, 1))) == 12
    # the bridge kills total cyclicity on the full dumbbell
    assert len(list(enumerate_admissible(DUMBBELL, EMPTY, 0))) == 0
    assert len(list(enumerate_admissible(DUMBBELL, EMPTY, 1))) == 8


def test_divisor_of_counts_halfedges_in():
    o = Orientation(THETA, EMPTY, (FORWARD, FORWARD, BACKWARD), 0)
    # d(v) = w(v) - 1 + #(edges into v) + #(bioriented at v)
    assert divisor_of(o) == (0, 1)
    o = Orientation(THETA, EMPTY, (BIORIENTED, FORWARD, BACKWARD), 1)
    assert divisor_of(o) == (1, 1)
    loops = Orientation(DUMBBELL, EMPTY, (FORWARD, FORWARD, BACKWARD), 0)
    # each loop sends one half-edge back into its own vertex
    assert divisor_of(loops) == (0, 1)


def test_all_mode_implementations_agree():
    for graph in (THETA, DUMBBELL):
        for o in enumerate_orientations(graph, EMPTY, 0):
            votes = {is_totally_cyclic(o, mode) for mode in TC_MODES}
            assert len(votes) == 1
        for o in enumerate_orientations(graph, EMPTY, 1):
            votes = {is_rooted(o, mode) for mode in ROOTED_MODES}
            assert len(votes) == 1


def test_strong_and_rooted_constructions():
    assert is_totally_cyclic(strong_orient(THETA))
    assert is_rooted(rooted_orient(THETA))
    assert is_rooted(rooted_orient(DUMBBELL))
    with pytest.raises(ValueError):
        strong_orient(DUMBBELL)  # bridged graphs have no such orientation


def test_equivalence_classes_frozen_counts():
    classes = equivalence_classes(enumerate_admissible(THETA, EMPTY, 0))
    assert [d for d, _ in classes] == [(0, 1), (1, 0)]
    assert [len(members) for _, members in classes] == [3, 3]
    classes = equivalence_classes(enumerate_admissible(DUMBBELL, EMPTY, 1))
    assert [d for d, _ in classes] == [(1, 1)]
    assert len(classes[0][1]) == 8


def test_class_representative_round_trip():
    for d, members in equivalence_classes(enumerate_admissible(THETA, EMPTY, 1)):
        rep = class_representative(THETA, EMPTY, d, 1)
        assert divisor_of(rep) == d
        assert rep in members


def test_moves_preserve_class():
    o = Orientation(THETA, EMPTY, (BIORIENTED, FORWARD, BACKWARD), 1)
    for e in (1, 2):
        moved = move_biorientation(o, e)
        assert bioriented_edges(moved) == [e]
        assert divisor_of(moved) == divisor_of(o)
        assert is_admissible(moved)


def test_move_onto_a_loop():
    # the directed path ends in a loop edge, which has no preferred direction
    o = Orientation(DUMBBELL, EMPTY, (BIORIENTED, FORWARD, FORWARD), 1)
    assert is_rooted(o)
    moved = move_biorientation(o, 2)
    assert moved.states == (FORWARD, BACKWARD, BIORIENTED)
    assert divisor_of(moved) == divisor_of(o) == (1, 1)
    assert is_admissible(moved)


def test_restrict_then_extend():
    big = Orientation(THETA, EMPTY, (BIORIENTED, FORWARD, BACKWARD), 1)
    small = restrict_orientation(big, {2})
    assert small.removed == frozenset({2})
    assert small.states == (BIORIENTED, FORWARD)
    assert small.b == 1
    back = extend_orientation(small, EMPTY)
    assert back.removed == EMPTY and back.b == 1
    assert back.states[0] == BIORIENTED and back.states[1] == FORWARD


def test_restricting_away_the_bioriented_edge_drops_b():
    big = Orientation(THETA, EMPTY, (BIORIENTED, FORWARD, BACKWARD), 1)
    small = restrict_orientation(big, {0})
    assert small.b == 0  # no bioriented edge survives on the carrier


def test_extend_from_the_conventional_empty_orientation():
    # single-vertex graph: the empty rooted orientation gains its first edge
    loops = Graph((1,), ((0, 0), (0, 0)))
    lone_carrier = Orientation(loops, frozenset({0, 1}), (), 1)
    out = extend_orientation(lone_carrier, {1})
    assert out.b == 1 and bioriented_edges(out) == [0]
    full = extend_orientation(out, set())
    assert full.b == 1 and bioriented_edges(full) == [0]


def test_degree_identity_on_connected_subsets():
    # |d| = g - 1 + b over the whole carrier
    for b in (0, 1):
        for o in enumerate_admissible(THETA, EMPTY, b):
            assert sum(divisor_of(o)) == genus(THETA) - 1 + b


def test_orientation_json_round_trip():
    o = Orientation(DUMBBELL, frozenset({1}), (FORWARD, BACKWARD), 0)
    assert orientation_from_json(orientation_to_json(o)) == o
