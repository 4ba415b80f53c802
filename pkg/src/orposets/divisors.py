"""Divisors on vertex-weighted graphs: stability, enumeration, orientability.

A divisor is a plain tuple of integers indexed by the vertices of its carrier
graph; the carrier is passed alongside wherever structure is needed.  Since
spanning subgraphs share the ambient vertex set, divisors on G and on G - S
live in the same index space.
"""

from __future__ import annotations

import itertools

from .graphs import (
    Graph,
    HatData,
    check_edge_subset,
    check_vertex_subset,
    connected_components,
    genus,
    is_connected,
    subset_genus,
)
from .orientations import (
    BACKWARD,
    BIORIENTED,
    FORWARD,
    Orientation,
)

Divisor = tuple  # tuple[int, ...] indexed by vertices


def check_divisor(graph: Graph, divisor) -> tuple[int, ...]:
    d = tuple(int(x) for x in divisor)
    if len(d) != graph.vertex_count:
        raise ValueError(
            f"divisor has {len(d)} entries for a {graph.vertex_count}-vertex graph"
        )
    return d


def degree(divisor) -> int:
    return sum(divisor)


def restrict(divisor, zset) -> tuple[int, ...]:
    """Zero outside Z, so the result stays in the ambient index space."""
    d = tuple(divisor)
    z = frozenset(zset)
    if any(not 0 <= v < len(d) for v in z):
        raise ValueError("vertex subset out of range")
    return tuple(x if v in z else 0 for v, x in enumerate(d))


def subset_degree(divisor, zset) -> int:
    """|d_Z|, the sum over Z only."""
    d = tuple(divisor)
    return sum(d[v] for v in frozenset(zset))


def partial_leq(first, second) -> bool:
    """Coordinatewise comparison; mismatched carriers are a domain error."""
    a, b = tuple(first), tuple(second)
    if len(a) != len(b):
        raise ValueError("divisors live on different vertex sets")
    return all(x <= y for x, y in zip(a, b))


def is_stable_divisor(graph: Graph, divisor, b: int) -> bool:
    """Break-divisor test.

    b = 1 needs a connected carrier, degree g, and |d_Z| > g(Z) - 1 for every
    nonempty Z (Z = V holds vacuously).  b = 0 on a connected carrier needs
    degree g - 1 and the same bound on proper nonempty Z; on a disconnected
    carrier the restriction to every component must be stable of degree
    g(component) - 1.
    """
    d = check_divisor(graph, divisor)
    if b not in (0, 1):
        raise ValueError("only b in {0, 1} is supported")
    if graph.vertex_count == 0:
        raise ValueError("stability is undefined on the empty graph")
    parts = connected_components(graph)
    if b == 1:
        if len(parts) != 1:
            return False
        if degree(d) != genus(graph):
            return False
        n = graph.vertex_count
        for bits in range(1, 1 << n):
            z = frozenset(v for v in range(n) if bits >> v & 1)
            if subset_degree(d, z) <= subset_genus(graph, z) - 1:
                return False
        return True
    if len(parts) == 1:
        if degree(d) != genus(graph) - 1:
            return False
        n = graph.vertex_count
        for bits in range(1, (1 << n) - 1):
            z = frozenset(v for v in range(n) if bits >> v & 1)
            if subset_degree(d, z) <= subset_genus(graph, z) - 1:
                return False
        return True
    for part in parts:
        if subset_degree(d, part) != subset_genus(graph, part) - 1:
            return False
        members = sorted(part)
        for r in range(1, len(members)):
            for combo in itertools.combinations(members, r):
                z = frozenset(combo)
                if subset_degree(d, z) <= subset_genus(graph, z) - 1:
                    return False
    return True


def _stability_windows(graph: Graph, b: int) -> list[range]:
    # d_v = w(v) - 1 + t_v with t_v in [0, deg(v) + b]; floor -1 keeps
    # isolated weight-0 components reachable.
    return [
        range(-1, graph.weights[v] + graph.degree(v) + b)
        for v in range(graph.vertex_count)
    ]


def sigma(graph: Graph, b: int, widen: int = 0) -> list[tuple[int, ...]]:
    """All stable divisors of G for the given b, in lexicographic order.

    The per-coordinate search window comes from the target-vector shape of
    orientation divisors; `widen` pads it on both sides (used by tests to
    confirm the window loses nothing).
    """
    if b not in (0, 1):
        raise ValueError("only b in {0, 1} is supported")
    want = genus(graph) - len(connected_components(graph)) + b
    windows = [
        range(w.start - widen, w.stop + widen)
        for w in _stability_windows(graph, b)
    ]
    out = []
    for d in itertools.product(*windows):
        if sum(d) == want and is_stable_divisor(graph, d, b):
            out.append(d)
    return out


def hakimi_inequalities(graph: Graph, divisor) -> bool:
    """|d_Z| >= g(Z) - 1 for every nonempty Z (degree g - 1 assumed checked)."""
    d = check_divisor(graph, divisor)
    n = graph.vertex_count
    for bits in range(1, 1 << n):
        z = frozenset(v for v in range(n) if bits >> v & 1)
        if subset_degree(d, z) < subset_genus(graph, z) - 1:
            return False
    return True


def _orientation_with_targets(graph: Graph, targets) -> Orientation | None:
    """Backtracking search for a 0-orientation with the given target vector.

    Edges are assigned in index order; cap[v] counts half-edges at v still
    unassigned, so need[v] <= cap[v] is the pruning bound.
    """
    m = graph.edge_count
    need = list(targets)
    cap = [graph.degree(v) for v in range(graph.vertex_count)]
    if any(x < 0 for x in need) or sum(need) != m:
        return None
    if any(need[v] > cap[v] for v in range(len(need))):
        return None
    states = [FORWARD] * m

    def assign(e: int) -> bool:
        if e == m:
            return all(x == 0 for x in need)
        t, h = graph.edges[e]
        cap[t] -= 1
        cap[h] -= 1
        options = ((FORWARD, h),) if t == h else ((FORWARD, h), (BACKWARD, t))
        for state, target in options:
            if need[target] == 0:
                continue
            need[target] -= 1
            if need[t] <= cap[t] and need[h] <= cap[h]:
                states[e] = state
                if assign(e + 1):
                    need[target] += 1
                    cap[t] += 1
                    cap[h] += 1
                    return True
            need[target] += 1
        cap[t] += 1
        cap[h] += 1
        return False

    if assign(0):
        return Orientation(graph, frozenset(), tuple(states), 0)
    return None


def hakimi_witness(graph: Graph, divisor) -> Orientation | None:
    """A 0-orientation O with d^O equal to the divisor, if one exists.

    The degree bound |d_Z| >= g(Z) - 1 for all Z is the exact existence
    criterion; the search and the inequalities are both evaluated and must
    agree, otherwise something is deeply wrong and we raise.
    """
    d = check_divisor(graph, divisor)
    if not is_connected(graph):
        raise ValueError("the orientability criterion assumes a connected graph")
    if degree(d) != genus(graph) - 1:
        raise ValueError("divisor degree must be g - 1")
    targets = tuple(
        d[v] - graph.weights[v] + 1 for v in range(graph.vertex_count)
    )
    witness = _orientation_with_targets(graph, targets)
    if hakimi_inequalities(graph, d) != (witness is not None):
        raise AssertionError("degree criterion and orientation search disagree")
    return witness


def stable_to_orientation(graph: Graph, divisor, b: int = 1) -> Orientation:
    """A rooted-candidate 1-orientation realizing a stable divisor.

    Subtract 1 at the first vertex, find a 0-orientation for the result, then
    biorient the first edge leaving that vertex.  The edgeless single-vertex
    graph takes the empty rooted orientation.
    """
    if b != 1:
        raise ValueError("the construction is for b = 1")
    d = check_divisor(graph, divisor)
    if not is_stable_divisor(graph, d, 1):
        raise ValueError("divisor is not stable for b = 1")
    if graph.edge_count == 0:
        return Orientation(graph, frozenset(), (), 1)
    v = 0
    lowered = tuple(x - 1 if i == v else x for i, x in enumerate(d))
    base = hakimi_witness(graph, lowered)
    if base is None:
        raise AssertionError("stable divisor lost orientability after lowering")
    state = base.state_map()
    choices = [
        e
        for e, (t, h) in enumerate(graph.edges)
        if (t == v and state[e] == FORWARD) or (h == v and state[e] == BACKWARD)
        or (t == h == v)
    ]
    if not choices:
        raise AssertionError("no edge with the lowered vertex as source")
    e = min(choices)
    state[e] = BIORIENTED
    return Orientation(
        graph, frozenset(), tuple(state[x] for x in sorted(state)), 1
    )


def hat_divisor(divisor, hat: HatData) -> tuple[int, ...]:
    """Extend a divisor across a subdivision by 1 on every exceptional vertex."""
    return tuple(divisor) + (1,) * len(hat.subdivided)
