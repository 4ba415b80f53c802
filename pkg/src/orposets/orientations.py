"""Generalized orientations on spanning subgraphs: totally cyclic and rooted.

An orientation lives on a carrier G - S, recorded as the ambient graph plus
the removed edge set S, so edge indices never shift.  Each kept edge is
Forward (along its stored (tail, head) pair), Backward, or Bioriented; the
number of bioriented edges is b, here always 0 or 1.

An edgeless carrier has exactly one orientation, the empty one, flagged with
its intended b: it counts as totally cyclic always, and as rooted exactly on
a single vertex (where O^0 = O^1).
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass

from .graphs import (
    EMPTY,
    Graph,
    bridges,
    check_edge_subset,
    check_vertex_subset,
    connected_components,
    contract,
    graph_from_json,
    graph_to_json,
    is_bridgeless,
    is_connected,
    subset_genus,
)

FORWARD, BACKWARD, BIORIENTED = 0, 1, 2
STATE_CHARS = {FORWARD: "+", BACKWARD: "-", BIORIENTED: "*"}
CHAR_STATES = {c: s for s, c in STATE_CHARS.items()}

TC_MODES = ("cuts", "inflow", "inflow-connected", "divisor", "cycles")
ROOTED_MODES = ("cuts", "inflow", "inflow-connected", "divisor", "paths")


@dataclass(frozen=True)
class Orientation:
    """A b-orientation of the carrier graph - removed.

    states are listed per kept edge in increasing edge-index order.  b is
    redundant when edges are present and mandatory information when the
    carrier is edgeless.
    """

    graph: Graph
    removed: frozenset
    states: tuple[int, ...]
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "removed", frozenset(self.removed))
        object.__setattr__(self, "states", tuple(self.states))
        check_edge_subset(self.graph, self.removed)
        kept = self.graph.edge_count - len(self.removed)
        if len(self.states) != kept:
            raise ValueError("one state per kept edge required")
        if any(s not in (FORWARD, BACKWARD, BIORIENTED) for s in self.states):
            raise ValueError("invalid edge state")
        if self.b not in (0, 1):
            raise ValueError("only b in {0, 1} is supported")
        if self.states and self.b != sum(1 for s in self.states if s == BIORIENTED):
            raise ValueError("b must equal the number of bioriented edges")

    def kept_edges(self) -> list[int]:
        return [e for e in range(self.graph.edge_count) if e not in self.removed]

    def state_of(self, e: int) -> int:
        if e in self.removed:
            raise ValueError(f"edge {e} is not in the carrier")
        pos = sum(1 for x in self.removed if x < e)
        return self.states[e - pos]

    def state_map(self) -> dict[int, int]:
        return dict(zip(self.kept_edges(), self.states))


def bioriented_edges(orientation: Orientation) -> list[int]:
    return [
        e
        for e, s in zip(orientation.kept_edges(), orientation.states)
        if s == BIORIENTED
    ]


def bioriented_edge(orientation: Orientation) -> int:
    bis = bioriented_edges(orientation)
    if len(bis) != 1:
        raise ValueError("expected exactly one bioriented edge")
    return bis[0]


def edge_targets(graph: Graph, e: int, state: int) -> tuple[int, ...]:
    """Vertices at which edge e ends under the given state (two if bioriented)."""
    t, h = graph.edges[e]
    if state == FORWARD:
        return (h,)
    if state == BACKWARD:
        return (t,)
    return (t, h)


def target_vector(orientation: Orientation) -> tuple[int, ...]:
    """t^O: per vertex, the number of half-edges ending there.

    An oriented loop contributes 1 to its vertex, a bioriented loop 2.
    """
    t = [0] * orientation.graph.vertex_count
    for e, s in zip(orientation.kept_edges(), orientation.states):
        for v in edge_targets(orientation.graph, e, s):
            t[v] += 1
    return tuple(t)


def divisor_of(orientation: Orientation) -> tuple[int, ...]:
    """d^O with d_v = w(v) - 1 + t_v; on an edgeless carrier, w(v) - 1 + b."""
    g = orientation.graph
    if not orientation.states:
        return tuple(w - 1 + orientation.b for w in g.weights)
    t = target_vector(orientation)
    return tuple(g.weights[v] - 1 + t[v] for v in range(g.vertex_count))


def t_into(orientation: Orientation, zset) -> int:
    """t^O(Z): edges not inside the induced subgraph on Z ending in Z.

    A bioriented edge crossing the boundary counts once for each side holding
    one of its target ends.
    """
    z = check_vertex_subset(orientation.graph, zset)
    count = 0
    for e, s in zip(orientation.kept_edges(), orientation.states):
        t, h = orientation.graph.edges[e]
        if t in z and h in z:
            continue
        if any(v in z for v in edge_targets(orientation.graph, e, s)):
            count += 1
    return count


def bioriented_inside(orientation: Orientation, zset) -> int:
    """b(Z): bioriented edges with both endpoints in Z."""
    z = check_vertex_subset(orientation.graph, zset)
    count = 0
    for e in bioriented_edges(orientation):
        t, h = orientation.graph.edges[e]
        if t in z and h in z:
            count += 1
    return count


def enumerate_orientations(graph: Graph, removed: frozenset = EMPTY, b: int = 0):
    """All raw b-orientations of G - removed, in lexicographic state order.

    An edgeless carrier yields the single conventional empty orientation for
    either b (admissibility filters decide whether it counts).
    """
    removed = check_edge_subset(graph, removed)
    if b not in (0, 1):
        raise ValueError("only b in {0, 1} is supported")
    kept = graph.edge_count - len(removed)
    if kept == 0:
        yield Orientation(graph, removed, (), b)
        return
    alphabet = (FORWARD, BACKWARD) if b == 0 else (FORWARD, BACKWARD, BIORIENTED)
    for states in itertools.product(alphabet, repeat=kept):
        if sum(1 for s in states if s == BIORIENTED) == b:
            yield Orientation(graph, removed, states, b)


def _component_subsets(graph: Graph, removed: frozenset):
    """Pairs (component, nonempty proper subsets of it) of the carrier."""
    for comp in connected_components(graph, removed):
        members = sorted(comp)
        subsets = []
        for r in range(1, len(members)):
            subsets.extend(frozenset(c) for c in itertools.combinations(members, r))
        yield comp, subsets


def _subset_connected(graph: Graph, zset, removed: frozenset) -> bool:
    z = frozenset(zset)
    if not z:
        return False
    adj = {v: [] for v in z}
    for e, (t, h) in enumerate(graph.edges):
        if e not in removed and t in z and h in z:
            adj[t].append(h)
            adj[h].append(t)
    seen = {min(z)}
    stack = [min(z)]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == z


def is_totally_cyclic(orientation: Orientation, mode: str = "cuts") -> bool:
    """No directed cut; four further equivalent tests for 0-orientations.

    modes: "cuts" checks every nonempty cut for targets on both sides (the
    definition, any b); "inflow" asks t^O(Z) > 0 for every nonempty proper Z
    of a component; "inflow-connected" restricts that to connected Z;
    "divisor" asks |d^O_Z| > g(Z) - 1 for connected proper Z; "cycles" asks
    that each component be strongly connected (every two vertices lie on a
    coherently directed closed walk).  The last four are stated for
    0-orientations on connected carriers and are applied per component.
    """
    g = orientation.graph
    removed = orientation.removed
    if mode == "cuts":
        n = g.vertex_count
        kept = list(zip(orientation.kept_edges(), orientation.states))
        for bits in range(1, (1 << n) - 1):
            z = frozenset(v for v in range(n) if bits >> v & 1)
            into_z = into_zc = False
            seen_cross = False
            for e, s in kept:
                t, h = g.edges[e]
                if (t in z) == (h in z):
                    continue
                seen_cross = True
                for v in edge_targets(g, e, s):
                    if v in z:
                        into_z = True
                    else:
                        into_zc = True
            if seen_cross and not (into_z and into_zc):
                return False
        return True
    if mode not in TC_MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if orientation.b != 0:
        raise ValueError(f"mode {mode!r} applies to 0-orientations")
    if mode == "cycles":
        state = orientation.state_map()
        for comp in connected_components(g, removed):
            fwd = {v: [] for v in comp}
            back = {v: [] for v in comp}
            for e, s in state.items():
                t, h = g.edges[e]
                if t not in comp:
                    continue
                if s != BACKWARD:
                    fwd[t].append(h)
                    back[h].append(t)
                if s != FORWARD:
                    fwd[h].append(t)
                    back[t].append(h)
            root = min(comp)
            for adj in (fwd, back):
                seen = {root}
                stack = [root]
                while stack:
                    v = stack.pop()
                    for w in adj[v]:
                        if w not in seen:
                            seen.add(w)
                            stack.append(w)
                if seen != comp:
                    return False
        return True
    d = divisor_of(orientation)
    for comp, subsets in _component_subsets(g, removed):
        for z in subsets:
            if mode == "inflow":
                if t_into(orientation, z) <= 0:
                    return False
            elif mode == "inflow-connected":
                if _subset_connected(g, z, removed) and t_into(orientation, z) <= 0:
                    return False
            else:  # divisor
                if _subset_connected(g, z, removed):
                    if sum(d[v] for v in z) <= subset_genus(g, z, removed) - 1:
                        return False
    return True


def is_rooted(orientation: Orientation, mode: str = "cuts") -> bool:
    """Rooted 1-orientation test, five equivalent formulations.

    modes: "cuts" is the definition (every proper Z containing the bioriented
    edge has an outgoing target); "inflow" asks t^O(Z) > 0 whenever the
    bioriented edge is not inside Z; "inflow-connected" restricts to connected
    Z; "divisor" asks |d^O_Z| > g(Z) - 1 for connected proper Z; "paths" asks
    for a directed path from the bioriented edge to every vertex.  The empty
    orientation is rooted exactly on a single-vertex carrier.
    """
    if mode not in ROOTED_MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if orientation.b != 1:
        raise ValueError("rootedness applies to 1-orientations")
    g = orientation.graph
    n = g.vertex_count
    if not orientation.states:
        return n == 1
    e0 = bioriented_edge(orientation)
    v0, v1 = g.edges[e0]
    kept = list(zip(orientation.kept_edges(), orientation.states))
    if mode == "cuts":
        for bits in range(1, (1 << n) - 1):
            z = frozenset(v for v in range(n) if bits >> v & 1)
            if v0 not in z or v1 not in z:
                continue
            ok = False
            for e, s in kept:
                t, h = g.edges[e]
                if (t in z) == (h in z):
                    continue
                if any(v not in z for v in edge_targets(g, e, s)):
                    ok = True
                    break
            if not ok:
                return False
        return True
    if mode == "paths":
        fwd = {v: [] for v in range(n)}
        for e, s in kept:
            t, h = g.edges[e]
            if s != BACKWARD:
                fwd[t].append(h)
            if s != FORWARD:
                fwd[h].append(t)
        seen = {v0, v1}
        stack = [v0, v1]
        while stack:
            v = stack.pop()
            for w in fwd[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n
    if mode in ("inflow", "inflow-connected"):
        for bits in range(1, 1 << n):
            z = frozenset(v for v in range(n) if bits >> v & 1)
            if v0 in z and v1 in z:
                continue
            if mode == "inflow-connected" and not _subset_connected(
                g, z, orientation.removed
            ):
                continue
            if t_into(orientation, z) <= 0:
                return False
        return True
    d = divisor_of(orientation)
    for bits in range(1, (1 << n) - 1):
        z = frozenset(v for v in range(n) if bits >> v & 1)
        if not _subset_connected(g, z, orientation.removed):
            continue
        if sum(d[v] for v in z) <= subset_genus(g, z, orientation.removed) - 1:
            return False
    return True


def is_admissible(orientation: Orientation) -> bool:
    """Totally cyclic when b = 0, rooted when b = 1."""
    if orientation.b == 0:
        return is_totally_cyclic(orientation, "cuts")
    return is_rooted(orientation, "cuts")


def enumerate_admissible(graph: Graph, removed: frozenset = EMPTY, b: int = 0):
    for orientation in enumerate_orientations(graph, removed, b):
        if is_admissible(orientation):
            yield orientation


def equivalence_classes(orientations) -> list[tuple[tuple[int, ...], tuple]]:
    """Group orientations by divisor; classes sorted by divisor, members by states."""
    items = list(orientations)
    if items:
        carrier = (items[0].graph, items[0].removed, items[0].b)
        if any((o.graph, o.removed, o.b) != carrier for o in items):
            raise ValueError("orientations must share carrier and b")
    groups: dict[tuple[int, ...], list[Orientation]] = {}
    for o in items:
        groups.setdefault(divisor_of(o), []).append(o)
    return [
        (d, tuple(sorted(groups[d], key=lambda o: o.states)))
        for d in sorted(groups)
    ]


def class_representative(
    graph: Graph, removed: frozenset, divisor: tuple[int, ...], b: int
) -> Orientation:
    """Lexicographically least admissible orientation with the given divisor."""
    for o in enumerate_admissible(graph, removed, b):
        if divisor_of(o) == tuple(divisor):
            return o
    raise ValueError(f"no admissible orientation with divisor {divisor}")


# ---------------------------------------------------------------------------
# constructions

def _oriented_state(graph: Graph, e: int, source: int, sink: int) -> int:
    t, h = graph.edges[e]
    if t == h:
        return FORWARD  # loop direction carries no information; fix Forward
    if (source, sink) == (t, h):
        return FORWARD
    if (source, sink) == (h, t):
        return BACKWARD
    raise ValueError(f"edge {e} does not join {source} and {sink}")


def _strong_states(graph: Graph, removed: frozenset) -> dict[int, int]:
    """Orient every kept edge so each component becomes strongly connected.

    Depth-first: tree edges point away from the root, remaining edges point
    back toward the ancestor, loops go Forward.  Requires the carrier to be
    bridgeless.
    """
    if not is_bridgeless(graph, removed):
        raise ValueError("strong orientation needs a bridgeless carrier")
    n = graph.vertex_count
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    states: dict[int, int] = {}
    for e, (t, h) in enumerate(graph.edges):
        if e in removed:
            continue
        if t == h:
            states[e] = FORWARD
        else:
            adj[t].append((e, h))
            adj[h].append((e, t))
    visited = [False] * n
    for root in range(n):
        if visited[root]:
            continue
        visited[root] = True
        stack = [(root, iter(adj[root]))]
        while stack:
            u, it = stack[-1]
            descended = False
            for e, v in it:
                if e in states:
                    continue
                states[e] = _oriented_state(graph, e, u, v)
                if not visited[v]:
                    visited[v] = True
                    stack.append((v, iter(adj[v])))
                    descended = True
                    break
            if not descended:
                stack.pop()
    return states


def strong_orient(graph: Graph) -> Orientation:
    """A deterministic totally cyclic 0-orientation of a bridgeless graph."""
    states = _strong_states(graph, EMPTY)
    ordered = tuple(states[e] for e in sorted(states))
    return Orientation(graph, EMPTY, ordered, 0)


def rooted_orient(graph: Graph) -> Orientation:
    """A deterministic rooted 1-orientation of a connected graph.

    Strong-orient each bridgeless piece of G - bridges, biorient one edge in
    the starting piece, then orient bridges away from it layer by layer.  A
    tree has no such edge; then the first bridge out of the root piece is the
    bioriented one.
    """
    if graph.vertex_count == 0 or not is_connected(graph):
        raise ValueError("rooted orientations need a connected graph")
    if graph.edge_count == 0:
        return Orientation(graph, EMPTY, (), 1)
    br = bridges(graph)
    states = _strong_states(graph, br)
    pieces = connected_components(graph, br)
    piece_of = {}
    for i, piece in enumerate(pieces):
        for v in piece:
            piece_of[v] = i
    with_edges = [
        i
        for i, piece in enumerate(pieces)
        if any(
            e not in br and graph.edges[e][0] in piece
            for e in range(graph.edge_count)
        )
    ]
    bi = None
    if with_edges:
        start = min(with_edges, key=lambda i: min(pieces[i]))
        bi = min(
            e
            for e in range(graph.edge_count)
            if e not in br and graph.edges[e][0] in pieces[start]
        )
        states[bi] = BIORIENTED
    else:
        start = piece_of[0]
    reached = set(pieces[start])
    todo = set(br)
    while todo:
        frontier = sorted(
            e
            for e in todo
            if (graph.edges[e][0] in reached) != (graph.edges[e][1] in reached)
        )
        if not frontier:
            raise ValueError("graph is not connected")
        e = frontier[0]
        t, h = graph.edges[e]
        near, far = (t, h) if t in reached else (h, t)
        if bi is None:
            states[e] = BIORIENTED
            bi = e
        else:
            states[e] = _oriented_state(graph, e, near, far)
        reached |= pieces[piece_of[far]]
        todo.discard(e)
    out = Orientation(graph, EMPTY, tuple(states[e] for e in sorted(states)), 1)
    assert is_rooted(out), "constructed orientation failed the rooted check"
    return out


def restrict_orientation(orientation: Orientation, sset) -> Orientation:
    """Forget the states on S minus the current removed set.

    If the restriction empties the carrier the declared b is inherited, so the
    empty orientation stays in the same O^b world; otherwise b is recounted
    (dropping the bioriented edge turns a 1-orientation into a 0-orientation).
    """
    s = check_edge_subset(orientation.graph, sset)
    if not (orientation.removed <= s):
        raise ValueError("restriction must remove at least the current edges")
    state = orientation.state_map()
    kept = [e for e in sorted(state) if e not in s]
    states = tuple(state[e] for e in kept)
    if states:
        b = sum(1 for x in states if x == BIORIENTED)
    else:
        b = orientation.b
    return Orientation(orientation.graph, s, states, b)


def directed_path_from_bioriented(
    orientation: Orientation, target: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """A shortest directed path (vertices, edges) starting across the
    bioriented edge and ending at target; first found in edge order wins."""
    g = orientation.graph
    if not 0 <= target < g.vertex_count:
        raise ValueError("target vertex out of range")
    e0 = bioriented_edge(orientation)
    t0, h0 = g.edges[e0]
    fwd: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.vertex_count)}
    for e, s in sorted(orientation.state_map().items()):
        if e == e0:
            continue
        t, h = g.edges[e]
        if s != BACKWARD:
            fwd[t].append((e, h))
        if s != FORWARD:
            fwd[h].append((e, t))
    prev: dict[int, tuple[int, int] | None] = {}
    queue = deque()
    for entry, other in ((h0, t0), (t0, h0)):
        if entry not in prev:
            prev[entry] = None
            queue.append(entry)
    entry_other = {h0: t0, t0: h0}
    while queue:
        v = queue.popleft()
        if v == target:
            break
        for e, w in fwd[v]:
            if w not in prev:
                prev[w] = (v, e)
                queue.append(w)
    if target not in prev:
        raise ValueError(f"no directed path from the bioriented edge to {target}")
    vertices = [target]
    edges: list[int] = []
    v = target
    while prev[v] is not None:
        u, e = prev[v]
        vertices.append(u)
        edges.append(e)
        v = u
    vertices.append(entry_other[v])
    edges.append(e0)
    return tuple(reversed(vertices)), tuple(reversed(edges))


def reverse_directed_path(
    orientation: Orientation, path: tuple[tuple[int, ...], tuple[int, ...]]
) -> Orientation:
    """Reverse a directed path that starts at the bioriented edge.

    The last edge becomes bioriented, interior edges flip, and the formerly
    bioriented first edge points back at the path's start; the divisor is
    unchanged.  The degenerate one-edge path returns the input.
    """
    vertices, edge_list = path
    if len(vertices) != len(edge_list) + 1 or not edge_list:
        raise ValueError("path must pair n+1 vertices with n edges")
    if len(set(edge_list)) != len(edge_list):
        raise ValueError("path must not repeat edges")
    state = orientation.state_map()
    e0 = edge_list[0]
    if state.get(e0) != BIORIENTED:
        raise ValueError("path must start at the bioriented edge")
    if set(orientation.graph.edges[e0]) != {vertices[0], vertices[1]}:
        raise ValueError("first edge does not join the first two vertices")
    for i, e in enumerate(edge_list[1:], start=1):
        if e not in state:
            raise ValueError(f"edge {e} is not in the carrier")
        t, h = orientation.graph.edges[e]
        if t == h:
            # a loop is directed along the path in either plain state
            if vertices[i] != t or vertices[i + 1] != t or state[e] == BIORIENTED:
                raise ValueError(f"edge {e} is not oriented along the path")
            continue
        want = _oriented_state(orientation.graph, e, vertices[i], vertices[i + 1])
        if state[e] != want:
            raise ValueError(f"edge {e} is not oriented along the path")
    if len(edge_list) == 1:
        return orientation
    new_state = dict(state)
    new_state[e0] = _oriented_state(orientation.graph, e0, vertices[1], vertices[0])
    for i, e in enumerate(edge_list[1:-1], start=1):
        new_state[e] = _oriented_state(
            orientation.graph, e, vertices[i + 1], vertices[i]
        )
    new_state[edge_list[-1]] = BIORIENTED
    return Orientation(
        orientation.graph,
        orientation.removed,
        tuple(new_state[e] for e in sorted(new_state)),
        orientation.b,
    )


def move_biorientation(orientation: Orientation, edge: int) -> Orientation:
    """An equivalent rooted orientation whose bioriented edge is the given one.

    Follows a directed path from the current bioriented edge to the source of
    the requested edge and reverses it.
    """
    state = orientation.state_map()
    if edge not in state:
        raise ValueError(f"edge {edge} is not in the carrier")
    e0 = bioriented_edge(orientation)
    if edge == e0:
        return orientation
    t, h = orientation.graph.edges[edge]
    source = t if state[edge] == FORWARD else h
    sink = h if state[edge] == FORWARD else t
    vertices, edges = directed_path_from_bioriented(orientation, source)
    return reverse_directed_path(
        orientation, (vertices + (sink,), edges + (edge,))
    )


def _induced_added_states(
    graph: Graph, tset: frozenset, sset: frozenset
) -> dict[int, int]:
    """States on S - T induced from a strong orientation of (G-T)/(E-S).

    Non-loop quotient edges hand their direction straight to the matching
    edge of G (contraction preserves the (tail, head) order); quotient loops
    induce Forward.
    """
    keep = sorted(graph.all_edges() - tset)
    carrier = Graph(graph.weights, tuple(graph.edges[e] for e in keep))
    contract_set = frozenset(i for i, e in enumerate(keep) if e not in sset)
    quotient, ctr = contract(carrier, contract_set)
    q_orient = strong_orient(quotient)
    q_state = q_orient.state_map()
    out = {}
    for i, e in enumerate(keep):
        if i in contract_set:
            continue
        j = ctr.edge_map[i]
        out[e] = FORWARD if quotient.is_loop(j) else q_state[j]
    return out


def extend_orientation(orientation: Orientation, tset) -> Orientation:
    """Extend an orientation on G - S to G - T for T ⊆ S, both in A^b.

    The added edges are oriented through a strong orientation of the quotient
    of G - T onto them; for b = 1 the bioriented edge of the input is kept
    (when the input is the conventional empty rooted orientation, the first
    added edge is bioriented instead, which only happens on one vertex).
    """
    g = orientation.graph
    t = check_edge_subset(g, tset)
    s = orientation.removed
    if not (t <= s):
        raise ValueError("extension target must keep more edges")
    if orientation.b == 0:
        if not (is_bridgeless(g, s) and is_bridgeless(g, t)):
            raise ValueError("extension needs both carriers bridgeless for b=0")
    else:
        if not (is_connected(g, s) and is_connected(g, t)):
            raise ValueError("extension needs both carriers connected for b=1")
    if t == s:
        return orientation
    added = _induced_added_states(g, t, s)
    state = orientation.state_map()
    state.update(added)
    if orientation.b == 1 and not bioriented_edges(orientation):
        state[min(added)] = BIORIENTED
    return Orientation(
        g, t, tuple(state[e] for e in sorted(state)), orientation.b
    )


# ---------------------------------------------------------------------------
# serialization

def orientation_to_json(orientation: Orientation) -> str:
    payload = {
        "graph": json.loads(graph_to_json(orientation.graph)),
        "removed": sorted(orientation.removed),
        "states": [STATE_CHARS[s] for s in orientation.states],
        "b": orientation.b,
    }
    return json.dumps(payload, sort_keys=True)


def orientation_from_json(text: str) -> Orientation:
    payload = json.loads(text)
    graph = graph_from_json(json.dumps(payload["graph"]))
    states = tuple(CHAR_STATES[c] for c in payload["states"])
    return Orientation(
        graph, frozenset(payload["removed"]), states, payload.get("b", 0)
    )
