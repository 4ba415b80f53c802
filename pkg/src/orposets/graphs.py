"""Vertex-weighted multigraphs with half-edge structure and their surgery.

Vertices are integers 0..n-1 carrying nonnegative weights; edges are ordered
(tail, head) pairs indexed by list position, so loops and parallel edges are
fine.  Edge i owns the half-edges 2i (tail side) and 2i+1 (head side); a loop
still has two distinguishable half-edges, which matters for counting targets
and for automorphisms that flip a loop.

Spanning subgraphs G - S are usually handled virtually: structural queries
accept a `removed` edge set so vertex and edge indices never shift.  The
operations that do build fresh graphs (induced_subgraph, delete_edges,
contract, subdivide, ...) keep deterministic index layouts documented on each
function.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

VertexSet = frozenset  # vertex indices of a fixed graph
EdgeSet = frozenset  # edge indices of a fixed graph

EMPTY: frozenset = frozenset()


@dataclass(frozen=True)
class Graph:
    """Immutable vertex-weighted multigraph.

    The zero-vertex graph is allowed as a value (it arises as the subgraph
    spanned by no edges); conventions such as stability or orientations are
    only defined on nonempty graphs.
    """

    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(
            self, "edges", tuple((int(t), int(h)) for t, h in self.edges)
        )
        n = len(self.weights)
        if any(w < 0 for w in self.weights):
            raise ValueError("vertex weights must be nonnegative")
        for t, h in self.edges:
            if not (0 <= t < n and 0 <= h < n):
                raise ValueError(f"edge endpoint out of range: {(t, h)}")

    @property
    def vertex_count(self) -> int:
        return len(self.weights)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Number of half-edges at v; a loop contributes 2."""
        return sum((t == v) + (h == v) for t, h in self.edges)

    def all_vertices(self) -> frozenset:
        return frozenset(range(self.vertex_count))

    def all_edges(self) -> frozenset:
        return frozenset(range(self.edge_count))

    def is_loop(self, e: int) -> bool:
        t, h = self.edges[e]
        return t == h


def check_vertex_subset(graph: Graph, zset) -> frozenset:
    z = frozenset(zset)
    if not all(isinstance(v, int) and 0 <= v < graph.vertex_count for v in z):
        raise ValueError(f"not a vertex subset of the graph: {sorted(z)}")
    return z


def check_edge_subset(graph: Graph, sset) -> frozenset:
    s = frozenset(sset)
    if not all(isinstance(e, int) and 0 <= e < graph.edge_count for e in s):
        raise ValueError(f"not an edge subset of the graph: {sorted(s)}")
    return s


def connected_components(graph: Graph, removed: frozenset = EMPTY) -> tuple:
    """Partition of the vertices of G - removed, sorted by smallest member."""
    removed = check_edge_subset(graph, removed)
    n = graph.vertex_count
    adj: list[list[int]] = [[] for _ in range(n)]
    for e, (t, h) in enumerate(graph.edges):
        if e not in removed:
            adj[t].append(h)
            adj[h].append(t)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        parts.append(frozenset(comp))
    return tuple(sorted(parts, key=min))


def component_count(graph: Graph, removed: frozenset = EMPTY) -> int:
    return len(connected_components(graph, removed))


def is_connected(graph: Graph, removed: frozenset = EMPTY) -> bool:
    return component_count(graph, removed) == 1


def genus(graph: Graph, removed: frozenset = EMPTY) -> int:
    """Genus sum(w) - |V| + |E| + c of the (spanning sub)graph G - removed."""
    removed = check_edge_subset(graph, removed)
    return (
        sum(graph.weights)
        - graph.vertex_count
        + (graph.edge_count - len(removed))
        + component_count(graph, removed)
    )


def induced_subgraph(graph: Graph, zset) -> Graph:
    """Subgraph on vertex set Z with every edge having both ends in Z.

    Vertices are relabeled by their rank in sorted(Z); edges keep their
    relative order.
    """
    z = check_vertex_subset(graph, zset)
    if not z:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    order = sorted(z)
    rank = {v: i for i, v in enumerate(order)}
    weights = tuple(graph.weights[v] for v in order)
    edges = tuple(
        (rank[t], rank[h]) for t, h in graph.edges if t in z and h in z
    )
    return Graph(weights, edges)


def subset_genus(graph: Graph, zset, removed: frozenset = EMPTY) -> int:
    """Genus of the subgraph induced on Z inside G - removed."""
    z = check_vertex_subset(graph, zset)
    removed = check_edge_subset(graph, removed)
    if not z:
        raise ValueError("genus of the empty vertex set is undefined")
    inside = [
        e
        for e, (t, h) in enumerate(graph.edges)
        if e not in removed and t in z and h in z
    ]
    adj: dict[int, list[int]] = {v: [] for v in z}
    for e in inside:
        t, h = graph.edges[e]
        adj[t].append(h)
        adj[h].append(t)
    seen = set()
    comps = 0
    for start in z:
        if start in seen:
            continue
        comps += 1
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return sum(graph.weights[v] for v in z) - len(z) + len(inside) + comps


def edges_inside(graph: Graph, zset, removed: frozenset = EMPTY) -> frozenset:
    """Edges of G - removed with both endpoints in Z (loops at Z included)."""
    z = check_vertex_subset(graph, zset)
    removed = check_edge_subset(graph, removed)
    return frozenset(
        e
        for e, (t, h) in enumerate(graph.edges)
        if e not in removed and t in z and h in z
    )


def delete_edges(graph: Graph, sset) -> Graph:
    """Spanning subgraph G - S: same vertices, edges E \\ S in original order."""
    s = check_edge_subset(graph, sset)
    return Graph(
        graph.weights,
        tuple(pair for e, pair in enumerate(graph.edges) if e not in s),
    )


def spanned_subgraph(graph: Graph, sset) -> Graph:
    """Subgraph with edge set S and only the vertices met by S.

    S = empty yields the empty graph.  Vertices are relabeled by rank in
    sorted order; edges of S keep increasing index order.
    """
    s = check_edge_subset(graph, sset)
    touched = sorted({v for e in s for v in graph.edges[e]})
    rank = {v: i for i, v in enumerate(touched)}
    weights = tuple(graph.weights[v] for v in touched)
    edges = tuple(
        (rank[graph.edges[e][0]], rank[graph.edges[e][1]]) for e in sorted(s)
    )
    return Graph(weights, edges)


def cut_between(graph: Graph, zset, removed: frozenset = EMPTY) -> frozenset:
    """Edges of G - removed with exactly one endpoint in Z.  Loops never qualify."""
    z = check_vertex_subset(graph, zset)
    removed = check_edge_subset(graph, removed)
    if not z or len(z) == graph.vertex_count:
        raise ValueError("cut needs a proper nonempty vertex subset")
    return frozenset(
        e
        for e, (t, h) in enumerate(graph.edges)
        if e not in removed and (t in z) != (h in z)
    )


def is_cut(graph: Graph, sset, removed: frozenset = EMPTY) -> bool:
    """Whether S equals E(Z, Z^c) for some vertex subset Z of G - removed."""
    s = check_edge_subset(graph, sset)
    removed = check_edge_subset(graph, removed)
    if not s:
        return False
    if s & removed:
        raise ValueError("cut candidate must avoid removed edges")
    parts = connected_components(graph, removed | s)
    # Any union of G-S components that realizes S as its boundary will do.
    for r in range(1, len(parts)):
        for combo in itertools.combinations(parts, r):
            z = frozenset().union(*combo)
            if len(z) == graph.vertex_count:
                continue
            if cut_between(graph, z, removed) == s:
                return True
    return False


def bridges(graph: Graph, removed: frozenset = EMPTY) -> frozenset:
    """Edges of G - removed whose deletion increases the component count."""
    removed = check_edge_subset(graph, removed)
    base = component_count(graph, removed)
    out = set()
    for e in range(graph.edge_count):
        if e in removed or graph.is_loop(e):
            continue
        if component_count(graph, removed | {e}) > base:
            out.add(e)
    return frozenset(out)


def is_bridgeless(graph: Graph, removed: frozenset = EMPTY) -> bool:
    return not bridges(graph, removed)


def is_semistable(graph: Graph) -> bool:
    """Connected, genus >= 2, and every weight-0 vertex has degree >= 2."""
    return (
        graph.vertex_count > 0
        and is_connected(graph)
        and genus(graph) >= 2
        and all(
            graph.degree(v) >= 2
            for v in range(graph.vertex_count)
            if graph.weights[v] == 0
        )
    )


def is_stable(graph: Graph) -> bool:
    """Connected, genus >= 2, and every weight-0 vertex has degree >= 3."""
    return (
        graph.vertex_count > 0
        and is_connected(graph)
        and genus(graph) >= 2
        and all(
            graph.degree(v) >= 3
            for v in range(graph.vertex_count)
            if graph.weights[v] == 0
        )
    )


@dataclass(frozen=True)
class Contraction:
    """A weighted edge contraction G -> G/S0, possibly composed with an iso.

    vertex_map sends source vertices to target vertices.  edge_map sends a
    contracted edge to the target vertex it lands on and any other edge to its
    target edge index.  edge_flips[e] marks kept edges whose stored
    (tail, head) pair is reversed in the target; plain contractions never flip,
    but compositions with isomorphisms may.
    """

    source: Graph
    target: Graph
    contracted: frozenset
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]
    edge_flips: tuple[bool, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "contracted", frozenset(self.contracted))
        object.__setattr__(self, "vertex_map", tuple(self.vertex_map))
        object.__setattr__(self, "edge_map", tuple(self.edge_map))
        flips = self.edge_flips or (False,) * self.source.edge_count
        object.__setattr__(self, "edge_flips", tuple(bool(f) for f in flips))
        self._validate()

    def _validate(self):
        src, dst = self.source, self.target
        check_edge_subset(src, self.contracted)
        if len(self.vertex_map) != src.vertex_count:
            raise ValueError("vertex_map length mismatch")
        if len(self.edge_map) != src.edge_count:
            raise ValueError("edge_map length mismatch")
        if len(self.edge_flips) != src.edge_count:
            raise ValueError("edge_flips length mismatch")
        if any(not 0 <= v < dst.vertex_count for v in self.vertex_map):
            raise ValueError("vertex_map image out of range")
        kept = [e for e in range(src.edge_count) if e not in self.contracted]
        image = [self.edge_map[e] for e in kept]
        if sorted(image) != list(range(dst.edge_count)):
            raise ValueError("kept edges must map bijectively onto target edges")
        for e in kept:
            u, v = src.edges[e]
            t, h = dst.edges[self.edge_map[e]]
            want = (
                (self.vertex_map[v], self.vertex_map[u])
                if self.edge_flips[e]
                else (self.vertex_map[u], self.vertex_map[v])
            )
            if (t, h) != want:
                raise ValueError(f"edge {e} does not commute with vertex_map")
        for e in sorted(self.contracted):
            u, v = src.edges[e]
            if self.vertex_map[u] != self.vertex_map[v]:
                raise ValueError(f"contracted edge {e} has unmerged endpoints")
            if self.edge_map[e] != self.vertex_map[u]:
                raise ValueError(f"contracted edge {e} must map to its vertex")
        if genus(src) != genus(dst):
            raise ValueError("contraction must preserve genus")

    def is_identity(self) -> bool:
        return (
            not self.contracted
            and self.vertex_map == tuple(range(self.source.vertex_count))
            and self.edge_map == tuple(range(self.source.edge_count))
            and not any(self.edge_flips)
        )

    def kept_edges(self) -> list[int]:
        return [e for e in range(self.source.edge_count) if e not in self.contracted]


def contract(graph: Graph, s0set) -> tuple[Graph, Contraction]:
    """Contract the edges S0, merging each component of <S0> to one vertex.

    The merged vertex absorbs the genus of the piece it replaces, where the
    piece consists of the merged vertices together with the S0-edges between
    them (other parallel edges survive as loops instead of adding weight).
    Contracting a loop deletes it and adds 1 to its vertex weight, which is
    the same rule.  Result vertices are ordered by their smallest preimage.
    """
    s0 = check_edge_subset(graph, s0set)
    n = graph.vertex_count
    # components of the spanned subgraph <S0>
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in s0:
        t, h = graph.edges[e]
        ra, rb = find(t), find(h)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    blocks: dict[int, list[int]] = {}
    for v in range(n):
        blocks.setdefault(find(v), []).append(v)
    order = sorted(blocks, key=lambda r: min(blocks[r]))
    vmap = [0] * n
    for i, r in enumerate(order):
        for v in blocks[r]:
            vmap[v] = i
    weights = []
    for r in order:
        vs = blocks[r]
        inside = [e for e in s0 if graph.edges[e][0] in vs]
        weights.append(
            sum(graph.weights[v] for v in vs) - len(vs) + len(inside) + 1
        )
    edges = []
    emap = [0] * graph.edge_count
    for e, (t, h) in enumerate(graph.edges):
        if e in s0:
            emap[e] = vmap[t]
        else:
            emap[e] = len(edges)
            edges.append((vmap[t], vmap[h]))
    target = Graph(tuple(weights), tuple(edges))
    return target, Contraction(graph, target, s0, tuple(vmap), tuple(emap))


def identity_contraction(graph: Graph) -> Contraction:
    return Contraction(
        graph,
        graph,
        frozenset(),
        tuple(range(graph.vertex_count)),
        tuple(range(graph.edge_count)),
    )


def compose_contractions(outer: Contraction, inner: Contraction) -> Contraction:
    """The contraction source(inner) -> target(outer), outer after inner."""
    if inner.target != outer.source:
        raise ValueError("contractions do not compose: middle graphs differ")
    src = inner.source
    contracted = set(inner.contracted)
    vmap = tuple(outer.vertex_map[inner.vertex_map[v]] for v in range(src.vertex_count))
    emap = []
    flips = []
    for e in range(src.edge_count):
        if e in inner.contracted:
            emap.append(outer.vertex_map[inner.edge_map[e]])
            flips.append(False)
        elif inner.edge_map[e] in outer.contracted:
            contracted.add(e)
            emap.append(outer.edge_map[inner.edge_map[e]])
            flips.append(False)
        else:
            emap.append(outer.edge_map[inner.edge_map[e]])
            flips.append(inner.edge_flips[e] ^ outer.edge_flips[inner.edge_map[e]])
    return Contraction(
        src, outer.target, frozenset(contracted), vmap, tuple(emap), tuple(flips)
    )


def quotient_to(graph: Graph, sset) -> Graph:
    """G(S) = G/(E \\ S): contract everything except S.

    The result has one vertex per component of G - S (weighted by its genus)
    and its edges are S in increasing index order.
    """
    s = check_edge_subset(graph, sset)
    return contract(graph, graph.all_edges() - s)[0]


@dataclass(frozen=True)
class HatData:
    """Index bookkeeping for subdivide(): e -> (v_e, h_e, j_e) and the
    embedding of the untouched edges."""

    subdivided: tuple[int, ...]
    exceptional: tuple[tuple[int, int, int], ...]  # aligned with subdivided
    kept_map: tuple[tuple[int, int], ...]  # (old edge, new edge) pairs

    def triple(self, e: int) -> tuple[int, int, int]:
        return self.exceptional[self.subdivided.index(e)]

    def kept(self) -> dict[int, int]:
        return dict(self.kept_map)


def subdivide(graph: Graph, sset) -> tuple[Graph, HatData]:
    """Insert a weight-0 vertex v_e in the middle of every edge e of S.

    Layout: original vertices first, then v_e for e in sorted(S); untouched
    edges first in original order, then the pair h_e = (tail, v_e),
    j_e = (v_e, head) for each e in sorted(S).
    """
    s = check_edge_subset(graph, sset)
    n = graph.vertex_count
    ordered = sorted(s)
    vslot = {e: n + i for i, e in enumerate(ordered)}
    weights = graph.weights + (0,) * len(ordered)
    edges = []
    kept_map = []
    for e, pair in enumerate(graph.edges):
        if e not in s:
            kept_map.append((e, len(edges)))
            edges.append(pair)
    triples = []
    for e in ordered:
        t, h = graph.edges[e]
        ve = vslot[e]
        triples.append((ve, len(edges), len(edges) + 1))
        edges.append((t, ve))
        edges.append((ve, h))
    return (
        Graph(weights, tuple(edges)),
        HatData(tuple(ordered), tuple(triples), tuple(kept_map)),
    )


# ---------------------------------------------------------------------------
# serialization

def graph_to_json(graph: Graph) -> str:
    payload = {
        "weights": list(graph.weights),
        "edges": [list(pair) for pair in graph.edges],
    }
    return json.dumps(payload, sort_keys=True)


def graph_from_json(text: str) -> Graph:
    payload = json.loads(text)
    if not isinstance(payload, dict) or "weights" not in payload or "edges" not in payload:
        raise ValueError("graph JSON needs 'weights' and 'edges'")
    return Graph(tuple(payload["weights"]), tuple(tuple(e) for e in payload["edges"]))


def contraction_to_json(ctr: Contraction) -> str:
    payload = {
        "source": json.loads(graph_to_json(ctr.source)),
        "target": json.loads(graph_to_json(ctr.target)),
        "contracted": sorted(ctr.contracted),
        "vertex_map": list(ctr.vertex_map),
        "edge_map": list(ctr.edge_map),
        "edge_flips": [int(f) for f in ctr.edge_flips],
    }
    return json.dumps(payload, sort_keys=True)


def contraction_from_json(text: str) -> Contraction:
    payload = json.loads(text)
    source = Graph(
        tuple(payload["source"]["weights"]),
        tuple(tuple(e) for e in payload["source"]["edges"]),
    )
    target = Graph(
        tuple(payload["target"]["weights"]),
        tuple(tuple(e) for e in payload["target"]["edges"]),
    )
    return Contraction(
        source,
        target,
        frozenset(payload["contracted"]),
        tuple(payload["vertex_map"]),
        tuple(payload["edge_map"]),
        tuple(bool(f) for f in payload["edge_flips"]),
    )
