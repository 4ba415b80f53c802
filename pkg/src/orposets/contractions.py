"""Transport of edge sets, divisors, orientations, and classes along
contractions.

A contraction gamma: G -> H carries each object in two directions.  Edge sets
push forward by dropping the contracted edges and pull back by taking
preimages (plus, for b = 0, the bridges the removal creates).  Divisors push
by summing over vertex preimages.  Orientations push by restriction to the
surviving edges, which requires the bioriented edge (if any) to survive; at
the level of divisor classes that requirement can always be met by moving
the biorientation first, except when every carrier edge is contracted, in
which case the image carrier is a single vertex and we use its unique empty
rooted class.

The divisor identity relating the two sides is
    push(d^O) = d^(push O) - correction
where the correction counts contracted carrier-complement edges per target
vertex.  The subdivision ("hat") operations at the bottom extend a divisor
by 1 on each exceptional vertex and realize the same identity through the
2^|S| ways of collapsing exceptional vertices back.
"""

from __future__ import annotations

import itertools

from .graphs import (
    Contraction,
    Graph,
    HatData,
    bridges,
    check_edge_subset,
    connected_components,
    contract,
    subdivide,
)
from .orientations import (
    BACKWARD,
    BIORIENTED,
    FORWARD,
    Orientation,
    bioriented_edges,
    move_biorientation,
)


def push_edges(contraction: Contraction, sset) -> frozenset:
    """gamma_* S: the surviving part of S, in target edge indices."""
    sset = check_edge_subset(contraction.source, sset)
    return frozenset(
        contraction.edge_map[e] for e in sset if e not in contraction.contracted
    )


def pull_edges(contraction: Contraction, tset, b: int) -> frozenset:
    """gamma^* T: the preimage of T, plus for b = 0 the bridges of G - T."""
    tset = check_edge_subset(contraction.target, tset)
    preimage = frozenset(
        e for e in contraction.kept_edges() if contraction.edge_map[e] in tset
    )
    if b == 1:
        return preimage
    return preimage | bridges(contraction.source, preimage)


def push_divisor(contraction: Contraction, divisor) -> tuple:
    out = [0] * contraction.target.vertex_count
    for z, value in enumerate(divisor):
        out[contraction.vertex_map[z]] += value
    return tuple(out)


def correction_divisor(contraction: Contraction, sset) -> tuple:
    """Counts, per target vertex, the contracted edges lying in S."""
    sset = check_edge_subset(contraction.source, sset)
    out = [0] * contraction.target.vertex_count
    for e in contraction.contracted & sset:
        out[contraction.edge_map[e]] += 1
    return tuple(out)


def push_orientation(contraction: Contraction, o: Orientation) -> Orientation:
    """Restrict an orientation on G - S to the surviving edges of H - gamma_*S.

    The bioriented edge, if any, must survive the contraction.
    """
    if o.graph != contraction.source:
        raise ValueError("orientation does not live on the contraction source")
    if any(e in contraction.contracted for e in bioriented_edges(o)):
        raise ValueError("bioriented edge is contracted; move it first")
    state_by_target = {}
    for e, state in zip(sorted(o.kept_edges()), o.states):
        if e in contraction.contracted:
            continue
        if contraction.edge_flips[e] and state != BIORIENTED:
            state = BACKWARD if state == FORWARD else FORWARD
        state_by_target[contraction.edge_map[e]] = state
    removed = push_edges(contraction, o.removed)
    kept = sorted(contraction.target.all_edges() - removed)
    assert set(kept) == set(state_by_target)
    return Orientation(
        contraction.target,
        removed,
        tuple(state_by_target[e] for e in kept),
        o.b,
    )


def push_class(contraction: Contraction, sset, divisor, b: int):
    """Image (gamma_*S, divisor) of a class under the contraction.

    Valid for every class: the divisor of the image class is
    push(divisor) + correction even when no single representative survives
    (all carrier edges contracted), where the image carrier degenerates to a
    single vertex carrying the empty rooted class.
    """
    sset = check_edge_subset(contraction.source, sset)
    tset = push_edges(contraction, sset)
    out = tuple(
        p + c
        for p, c in zip(
            push_divisor(contraction, divisor),
            correction_divisor(contraction, sset),
        )
    )
    if b == 1:
        carrier = contraction.source.all_edges() - sset
        if carrier and carrier <= contraction.contracted:
            # image carrier is edgeless; consistency of the convention
            target = contraction.target
            assert tset == target.all_edges()
            assert len(connected_components(target, tset)) == 1
            assert out == tuple(w for w in target.weights)
    return tset, out


def movable_representative(o: Orientation, contracted) -> Orientation:
    """An equivalent orientation whose bioriented edge avoids `contracted`."""
    bios = bioriented_edges(o)
    if not bios or bios[0] not in contracted:
        return o
    candidates = sorted(set(o.kept_edges()) - set(contracted))
    if not candidates:
        raise ValueError("every carrier edge is contracted")
    return move_biorientation(o, candidates[0])


# ---------------------------------------------------------------------------
# subdivision (hat) operations

def collapse_choices(hat_graph: Graph, hat: HatData):
    """All ways of contracting one half of each subdivided edge.

    Yields (choice, contraction) where choice[e] is 0 to contract the
    tail-side half h_e and 1 for the head-side half j_e; the contraction
    maps the subdivided graph back onto a graph with the original vertex
    set in order.
    """
    for bits in itertools.product((0, 1), repeat=len(hat.subdivided)):
        s0 = frozenset(
            hat.triple(e)[1 + bit] for e, bit in zip(hat.subdivided, bits)
        )
        _, contraction = contract(hat_graph, s0)
        yield dict(zip(hat.subdivided, bits)), contraction


def hat_contraction(graph: Graph, sset, s0set):
    """Lift a contraction of G to the subdivided graphs.

    For gamma: G -> H = G/S0 and the subdivision of G at S, returns
    (hat_G, hat_of_G_data, hat_H, hat_of_H_data, lifted, vertex_map) where
    lifted contracts hat_G onto a quotient matching the subdivision of H at
    gamma_*S, and vertex_map sends each quotient vertex to the
    corresponding vertex of hat_H.  Contracted original edges that were
    subdivided contribute both halves to the lifted contracted set.
    """
    sset = check_edge_subset(graph, sset)
    s0set = check_edge_subset(graph, s0set)
    hat_graph, hat = subdivide(graph, sset)
    target, gamma = contract(graph, s0set)
    pushed = push_edges(gamma, sset - s0set)
    hat_target, target_hat = subdivide(target, pushed)

    kept = hat.kept()
    lifted_s0 = set()
    for e in s0set:
        if e in sset:
            _, h_e, j_e = hat.triple(e)
            lifted_s0 |= {h_e, j_e}
        else:
            lifted_s0.add(kept[e])
    quotient, lifted = contract(hat_graph, frozenset(lifted_s0))

    n = graph.vertex_count
    vertex_map = [None] * quotient.vertex_count
    for z in range(n):
        vertex_map[lifted.vertex_map[z]] = gamma.vertex_map[z]
    for e in hat.subdivided:
        if e in s0set:
            continue  # v_e was absorbed into an original block above
        v_e, _, _ = hat.triple(e)
        v_f, _, _ = target_hat.triple(gamma.edge_map[e])
        vertex_map[lifted.vertex_map[v_e]] = v_f
    if any(v is None for v in vertex_map):
        raise AssertionError("quotient vertex without a counterpart")
    if len(set(vertex_map)) != len(vertex_map):
        raise AssertionError("natural vertex map is not injective")
    for block, v in enumerate(vertex_map):
        if quotient.weights[block] != hat_target.weights[v]:
            raise AssertionError("weights disagree under the natural map")
    return hat_graph, hat, hat_target, target_hat, lifted, tuple(vertex_map)
