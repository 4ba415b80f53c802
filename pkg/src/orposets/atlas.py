"""The atlas of stable graphs of a fixed genus and the genus-level posets.

A stable graph is connected, has the prescribed genus, and gives every
weight-0 vertex degree at least 3.  The atlas holds one canonical
representative per isomorphism class, ordered by (edge count, vertex count,
weights, edges).

Isomorphisms carry vertex and edge bijections plus a flip flag per edge; for
a non-loop edge the flag is forced by the vertex images, for a loop both
values occur and act differently on orientations.  Contractions between two
atlas members are tabulated as contract-then-relabel composites, one per
(contracted set, isomorphism) pair; a member relates to itself only through
the identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .contractions import pull_edges, push_class, push_edges
from .graphs import (
    Contraction,
    Graph,
    compose_contractions,
    contract,
    genus,
    identity_contraction,
    is_connected,
)
from .posets import (
    FinitePoset,
    build_OPbar,
    build_poset,
    quotient_by_equivalence,
    removal_family,
)


@dataclass(frozen=True)
class GraphIso:
    source: Graph
    target: Graph
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]
    edge_flips: tuple[bool, ...]

    def __post_init__(self):
        src, dst = self.source, self.target
        if sorted(self.vertex_map) != list(range(dst.vertex_count)):
            raise ValueError("vertex map is not a bijection")
        if sorted(self.edge_map) != list(range(dst.edge_count)):
            raise ValueError("edge map is not a bijection")
        if len(self.vertex_map) != src.vertex_count:
            raise ValueError("vertex map has wrong length")
        if len(self.edge_flips) != src.edge_count:
            raise ValueError("one flip flag per edge required")
        for z, w in enumerate(src.weights):
            if dst.weights[self.vertex_map[z]] != w:
                raise ValueError(f"weight not preserved at vertex {z}")
        for e, (t, h) in enumerate(src.edges):
            image = (self.vertex_map[t], self.vertex_map[h])
            if self.edge_flips[e]:
                image = (image[1], image[0])
            if dst.edges[self.edge_map[e]] != image:
                raise ValueError(f"edge {e} does not map onto its image")


def iso_as_contraction(iso: GraphIso) -> Contraction:
    return Contraction(
        iso.source,
        iso.target,
        frozenset(),
        iso.vertex_map,
        iso.edge_map,
        iso.edge_flips,
    )


def _iso_key(iso: GraphIso) -> tuple:
    return (iso.vertex_map, iso.edge_map, iso.edge_flips)


def compose_isos(outer: GraphIso, inner: GraphIso) -> GraphIso:
    if inner.target != outer.source:
        raise ValueError("isomorphisms do not compose")
    m = inner.source.edge_count
    return GraphIso(
        inner.source,
        outer.target,
        tuple(outer.vertex_map[v] for v in inner.vertex_map),
        tuple(outer.edge_map[e] for e in inner.edge_map),
        tuple(
            inner.edge_flips[e] != outer.edge_flips[inner.edge_map[e]]
            for e in range(m)
        ),
    )


def isomorphisms(source: Graph, target: Graph) -> list[GraphIso]:
    """All isomorphisms source -> target, loop flips enumerated separately."""
    out = []
    if source.vertex_count != target.vertex_count:
        return out
    if source.edge_count != target.edge_count:
        return out
    if sorted(source.weights) != sorted(target.weights):
        return out

    def norm(t, h):
        return (t, h) if t <= h else (h, t)

    target_groups: dict[tuple, list[int]] = {}
    for e, (t, h) in enumerate(target.edges):
        target_groups.setdefault(norm(t, h), []).append(e)

    for vperm in itertools.permutations(range(target.vertex_count)):
        if any(
            target.weights[vperm[z]] != w for z, w in enumerate(source.weights)
        ):
            continue
        source_groups: dict[tuple, list[int]] = {}
        for e, (t, h) in enumerate(source.edges):
            source_groups.setdefault(norm(vperm[t], vperm[h]), []).append(e)
        if set(source_groups) != set(target_groups):
            continue
        if any(
            len(source_groups[k]) != len(target_groups[k])
            for k in source_groups
        ):
            continue
        keys = sorted(source_groups)
        pools = [
            itertools.permutations(target_groups[k]) for k in keys
        ]
        for assignment in itertools.product(*pools):
            edge_map = [None] * source.edge_count
            for k, images in zip(keys, assignment):
                for e, f in zip(source_groups[k], images):
                    edge_map[e] = f
            loops = [
                e for e, (t, h) in enumerate(source.edges) if t == h
            ]
            base_flips = []
            ok = True
            for e, (t, h) in enumerate(source.edges):
                if t == h:
                    base_flips.append(False)
                    continue
                image = (vperm[t], vperm[h])
                actual = target.edges[edge_map[e]]
                if image == actual:
                    base_flips.append(False)
                elif (image[1], image[0]) == actual:
                    base_flips.append(True)
                else:
                    ok = False
                    break
            if not ok:
                continue
            for loop_bits in itertools.product((False, True), repeat=len(loops)):
                flips = list(base_flips)
                for e, bit in zip(loops, loop_bits):
                    flips[e] = bit
                out.append(
                    GraphIso(
                        source,
                        target,
                        tuple(vperm),
                        tuple(edge_map),
                        tuple(flips),
                    )
                )
    return out


@lru_cache(maxsize=None)
def automorphisms(graph: Graph) -> tuple[GraphIso, ...]:
    """The full automorphism group; closure is verified."""
    group = isomorphisms(graph, graph)
    seen = {_iso_key(a) for a in group}
    for a, b in itertools.product(group, repeat=2):
        if _iso_key(compose_isos(a, b)) not in seen:
            raise AssertionError("automorphisms do not close under composition")
    return tuple(group)


def find_iso(source: Graph, target: Graph) -> GraphIso | None:
    isos = isomorphisms(source, target)
    return isos[0] if isos else None


def canonical_form(graph: Graph) -> tuple:
    """Minimum relabeling over all vertex permutations; loops normalized."""
    n = graph.vertex_count
    best = None
    for vperm in itertools.permutations(range(n)):
        weights = [0] * n
        for z, w in enumerate(graph.weights):
            weights[vperm[z]] = w
        edges = sorted(
            (min(vperm[t], vperm[h]), max(vperm[t], vperm[h]))
            for t, h in graph.edges
        )
        key = (tuple(weights), tuple(edges))
        if best is None or key < best:
            best = key
    if best is None:
        best = ((), ())
    return best


def canonical_graph(graph: Graph) -> Graph:
    weights, edges = canonical_form(graph)
    return Graph(weights, edges)


def isomorphic(first: Graph, second: Graph) -> bool:
    return canonical_form(first) == canonical_form(second)


def is_stable_graph(graph: Graph, g: int) -> bool:
    if graph.vertex_count == 0 or not is_connected(graph):
        return False
    if genus(graph) != g:
        return False
    return all(
        w > 0 or graph.degree(z) >= 3 for z, w in enumerate(graph.weights)
    )


def _edge_slots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


def _candidates(g: int):
    """All stable (weights, edge multiset) shapes, with duplicates."""
    if g < 2:
        raise ValueError("stable graphs need genus >= 2")
    for n in range(1, 2 * g - 1):
        for weights in itertools.product(range(g + 1), repeat=n):
            total = sum(weights)
            m = g - total + n - 1
            if m < 0:
                continue
            for combo in itertools.combinations_with_replacement(
                _edge_slots(n), m
            ):
                graph = Graph(weights, combo)
                if is_stable_graph(graph, g):
                    yield graph


@lru_cache(maxsize=None)
def enumerate_stable_graphs(g: int) -> tuple[Graph, ...]:
    """Canonical representatives of all stable graphs of genus g."""
    reps = {}
    for graph in _candidates(g):
        key = canonical_form(graph)
        if key not in reps:
            reps[key] = Graph(key[0], key[1])
    ordered = sorted(
        reps.values(),
        key=lambda h: (h.edge_count, h.vertex_count, h.weights, h.edges),
    )
    return tuple(ordered)


def stable_graphs_slow(g: int) -> tuple[Graph, ...]:
    """Independent generator: no canonical forms anywhere, dedup by pairwise
    isomorphism search."""
    reps: list[Graph] = []
    for graph in _candidates(g):
        if not any(find_iso(graph, seen) for seen in reps):
            reps.append(graph)
    ordered = sorted(
        (canonical_graph(h) for h in reps),
        key=lambda h: (h.edge_count, h.vertex_count, h.weights, h.edges),
    )
    return tuple(ordered)


def contractions_between(source: Graph, target: Graph) -> tuple[Contraction, ...]:
    """Every contraction from source onto target.

    Composites of contract(source, S0) with an isomorphism of the quotient
    onto target, one per (nonempty S0, isomorphism) pair.  A graph relates
    to itself only through the identity: contracting a nonempty set strictly
    drops the edge count, so no other self-arrows exist.
    """
    if source == target:
        return (identity_contraction(source),)
    found = []
    for r in range(1, source.edge_count + 1):
        if source.edge_count - r != target.edge_count:
            continue
        for s0 in itertools.combinations(sorted(source.all_edges()), r):
            quotient, gamma = contract(source, frozenset(s0))
            for iso in isomorphisms(quotient, target):
                found.append(
                    compose_contractions(iso_as_contraction(iso), gamma)
                )
    return tuple(found)


@lru_cache(maxsize=None)
def contraction_table(atlas: tuple[Graph, ...]) -> dict:
    """table[(i, j)]: every contraction from atlas[i] onto atlas[j].

    Each entry composes contract(G, S0) with an isomorphism onto the
    canonical target; (i, i) holds exactly the identity.
    """
    return {
        (i, j): contractions_between(g_i, g_j)
        for i, g_i in enumerate(atlas)
        for j, g_j in enumerate(atlas)
    }


# ---------------------------------------------------------------------------
# genus-level posets

def _universal_rank(g: int, graph: Graph, sset=frozenset()) -> int:
    return 3 * g - 3 - graph.edge_count + genus(graph, sset)


def build_Sg(atlas: tuple[Graph, ...]) -> FinitePoset:
    """Stable graphs under contraction, ranked by 3g-3-|E|."""
    g = genus(atlas[0])
    table = contraction_table(atlas)
    return build_poset(
        range(len(atlas)),
        leq=lambda i, j: bool(table[(i, j)]),
        rank=lambda i: 3 * g - 3 - atlas[i].edge_count,
    )


def build_Ag(atlas: tuple[Graph, ...], b: int) -> FinitePoset:
    """Pairs (graph index, removed set) ordered through pulled edge sets."""
    g = genus(atlas[0])
    table = contraction_table(atlas)
    items = [
        (i, tuple(sorted(s)))
        for i, graph in enumerate(atlas)
        for s in removal_family(graph, b)
    ]

    def leq(a, bb):
        (i, s), (j, t) = a, bb
        sset, tset = frozenset(s), frozenset(t)
        return any(
            pull_edges(gamma, tset, b) <= sset for gamma in table[(i, j)]
        )

    return build_poset(
        items,
        leq=leq,
        rank=lambda a: _universal_rank(g, atlas[a[0]], frozenset(a[1])),
    )


def build_OPg(atlas: tuple[Graph, ...], b: int) -> FinitePoset:
    """Triples (graph index, removed set, class divisor) under pushforward.

    (i, S, d) <= (j, T, d') when some tabulated contraction carries S over T
    (T inside the image of S) and pushes the class below (T, d') in the
    class poset of the target graph.
    """
    g = genus(atlas[0])
    table = contraction_table(atlas)
    opbars = [build_OPbar(graph, b)[0] for graph in atlas]
    indexes = [
        {label: k for k, label in enumerate(p.labels)} for p in opbars
    ]
    items = []
    for i, graph in enumerate(atlas):
        for s_tuple, divisor in opbars[i].labels:
            items.append((i, s_tuple, divisor))

    def leq(a, bb):
        (i, s, d), (j, t, dp) = a, bb
        sset = frozenset(s)
        tset = frozenset(t)
        target_index = indexes[j][(t, dp)]
        for gamma in table[(i, j)]:
            if not tset <= push_edges(gamma, sset):
                continue
            image_removed, image_divisor = push_class(gamma, sset, d, b)
            label = (tuple(sorted(image_removed)), image_divisor)
            if opbars[j].leq[indexes[j][label], target_index]:
                return True
        return False

    return build_poset(
        items,
        leq=leq,
        rank=lambda a: _universal_rank(g, atlas[a[0]], frozenset(a[1])),
    )


def conjugate_key(atlas, label) -> tuple:
    """Canonical representative of the Aut-orbit of (i, S, divisor)."""
    i, s, d = label
    graph = atlas[i]
    best = None
    for alpha in automorphisms(graph):
        s_image = tuple(sorted(alpha.edge_map[e] for e in s))
        d_image = [0] * graph.vertex_count
        for z, value in enumerate(d):
            d_image[alpha.vertex_map[z]] = value
        key = (i, s_image, tuple(d_image))
        if best is None or key < best:
            best = key
    return best


def conjugacy_quotient(opg: FinitePoset, atlas: tuple[Graph, ...]):
    """Quotient of the genus-level class poset by graph automorphisms."""
    return quotient_by_equivalence(
        opg, lambda label: conjugate_key(atlas, label)
    )


def stratification_report(atlas: tuple[Graph, ...], b: int) -> dict:
    """Strata tables: divisor classes with their two dimension formulas."""
    g = genus(atlas[0])
    per_graph = []
    for i, graph in enumerate(atlas):
        opbar, _ = build_OPbar(graph, b)
        strata = []
        for s_tuple, divisor in opbar.labels:
            dim = genus(graph, frozenset(s_tuple))
            strata.append(
                {
                    "removed": list(s_tuple),
                    "divisor": list(divisor),
                    "dim": dim,
                    "universal_dim": 3 * g - 3 - graph.edge_count + dim,
                }
            )
        strata.sort(key=lambda st: (-st["dim"], st["removed"], st["divisor"]))
        per_graph.append(
            {
                "index": i,
                "weights": list(graph.weights),
                "edges": [list(pair) for pair in graph.edges],
                "aut_order": len(automorphisms(graph)),
                "strata": strata,
                "top_dim": g,
                "top_count": sum(1 for st in strata if st["dim"] == g),
            }
        )
    opg = build_OPg(atlas, b)
    quotient, projection = conjugacy_quotient(opg, atlas)
    rank_counts: dict[str, int] = {}
    for r in quotient.ranks:
        rank_counts[str(r)] = rank_counts.get(str(r), 0) + 1
    return {
        "genus": g,
        "b": b,
        "per_graph": per_graph,
        "universal": {
            "elements": quotient.size,
            "rank_counts": rank_counts,
            "top_rank": 3 * g - 3 + g,
            "top_count": rank_counts.get(str(3 * g - 3 + g), 0),
            "covers": [list(pair) for pair in quotient.covers()],
        },
    }
