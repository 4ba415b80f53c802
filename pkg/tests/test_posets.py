import json

import numpy as np
import pytest

from orposets import (
    FinitePoset,
    Graph,
    PosetError,
    build_A,
    build_OP,
    build_OPbar,
    build_poset,
    genus,
    is_quotient_map,
    poset_to_dot,
    poset_to_json,
    quotient_by_equivalence,
)
from orposets.posets import class_label, op_label, removal_family

THETA = Graph((0, 0), ((0, 1), (0, 1), (0, 1)))
DUMBBELL = Graph((0, 0), ((0, 0), (0, 1), (1, 1)))


def test_build_poset_validates_axioms():
    with pytest.raises(PosetError):
        build_poset([0, 1], leq=lambda a, b: a != b)  # not antisymmetric
    with pytest.raises(PosetError):
        build_poset([0, 1], leq=lambda a, b: a == b == 0)  # not reflexive
    with pytest.raises(PosetError):  # 0<=1, 1<=2 but not 0<=2
        build_poset(
            [0, 1, 2], leq=lambda a, b: a == b or (a, b) in ((0, 1), (1, 2))
        )


def test_poset_navigation():
    divides = build_poset(
        [1, 2, 3, 4, 6, 12], leq=lambda a, b: b % a == 0
    )
    assert divides.minimal_elements() == [0]
    assert divides.maximal_elements() == [5]
    assert sorted(divides.covers()) == [
        (0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)
    ]


def test_quotient_requires_the_lifting_hypothesis():
    chain = build_poset([0, 1, 2], leq=lambda a, b: a == b or (a, b) == (0, 1))
    # 2 joins the class of 0 but has nothing above it in the class of 1
    with pytest.raises(PosetError, match="nothing above"):
        quotient_by_equivalence(chain, lambda x: "low" if x != 1 else "high")
    # merging the incomparable pair instead is fine
    quot, proj = quotient_by_equivalence(
        chain, lambda x: "high" if x != 0 else "low"
    )
    assert quot.size == 2 and proj == (0, 1, 1)


def test_removal_family_frozen():
    fam = lambda g, b: sorted(tuple(sorted(s)) for s in removal_family(g, b))
    assert fam(THETA, 0) == [(), (0,), (0, 1, 2), (1,), (2,)]
    assert fam(THETA, 1) == [(), (0,), (0, 1), (0, 2), (1,), (1, 2), (2,)]
    assert fam(DUMBBELL, 0) == [(0, 1), (0, 1, 2), (1,), (1, 2)]
    assert fam(DUMBBELL, 1) == [(), (0,), (0, 2), (2,)]


def test_removal_poset_is_reverse_inclusion_graded_by_genus():
    for graph in (THETA, DUMBBELL):
        for b in (0, 1):
            poset = build_A(graph, b)
            assert poset.is_graded()
            for i, s in enumerate(poset.labels):
                assert poset.ranks[i] == genus(graph, frozenset(s))
            bottoms = {poset.labels[k] for k in poset.minimal_elements()}
            if b == 0:
                # the empty carrier is vacuously bridgeless: unique bottom
                assert bottoms == {(0, 1, 2)}
            else:
                # bottoms are the inclusion-maximal connected removals
                fam = [set(s) for s in poset.labels]
                expected = {
                    tuple(sorted(s))
                    for s in fam
                    if not any(s < t for t in fam)
                }
                assert bottoms == expected


def test_orientation_poset_sizes_frozen():
    # counted by exhaustive enumeration over every removal set
    assert build_OP(THETA, 0).size == 13
    assert build_OP(THETA, 1).size == 27
    assert build_OP(DUMBBELL, 0).size == 9
    assert build_OP(DUMBBELL, 1).size == 15


def test_class_poset_sizes_frozen():
    assert build_OPbar(THETA, 0)[0].size == 6
    assert build_OPbar(THETA, 1)[0].size == 12
    assert build_OPbar(DUMBBELL, 0)[0].size == 4
    assert build_OPbar(DUMBBELL, 1)[0].size == 4


def test_class_projection_is_a_quotient_map():
    for graph in (THETA, DUMBBELL):
        for b in (0, 1):
            op = build_OP(graph, b)
            opbar, proj = build_OPbar(graph, b)
            assert opbar.is_graded()
            assert is_quotient_map(proj, op, opbar)


def test_class_poset_extremes():
    opbar, _ = build_OPbar(THETA, 0)
    assert [opbar.labels[i] for i in opbar.minimal_elements()] == [
        ((0, 1, 2), (-1, -1))
    ]
    assert [opbar.labels[i] for i in opbar.maximal_elements()] == [
        ((), (0, 1)),
        ((), (1, 0)),
    ]
    opbar, _ = build_OPbar(THETA, 1)
    # removing all edges disconnects THETA, so the full carrier is on top
    assert [opbar.labels[i] for i in opbar.maximal_elements()] == [
        ((), (0, 2)),
        ((), (1, 1)),
        ((), (2, 0)),
    ]


def test_the_reversed_lifting_quantifier_really_fails():
    # the implemented hypothesis lifts lower-class members upward; the
    # converse (every upper member dominates a lower member) is false here
    op = build_OP(THETA, 1)
    opbar, proj = build_OPbar(THETA, 1)
    a = opbar.labels.index(((0,), (0, 1)))
    b = opbar.labels.index(((), (0, 2)))
    assert opbar.leq[a, b]
    members_a = [i for i, c in enumerate(proj) if c == a]
    y = op.labels.index(((), "*++"))
    assert proj[y] == b
    assert not any(op.leq[x, y] for x in members_a)


def test_op_and_class_labels():
    o = next(iter(build_OP(THETA, 1).labels))
    removed, states = o
    assert isinstance(removed, tuple) and isinstance(states, str)
    assert set(states) <= set("+-*")


def test_json_and_dot_are_deterministic():
    poset = build_OPbar(THETA, 0)[0]
    assert poset_to_json(poset) == poset_to_json(poset)
    dot = poset_to_dot(poset)
    assert dot == poset_to_dot(poset)
    assert dot.count("[label=") == 6
    payload = json.loads(poset_to_json(poset))
    assert set(payload) == {"elements", "covers", "ranks"}
    assert len(payload["elements"]) == 6
