"""Finite posets as explicit relation matrices, plus the orientation posets.

A poset is built from a list of items and a comparison callback; the relation
is materialized into a boolean matrix and the axioms are verified right away,
naming a violating pair or triple.  Elements are referred to by JSON-able
labels.

The posets of the calculus: A^b(G) holds the edge sets S whose removal leaves
the graph bridgeless (b = 0) or connected (b = 1), ordered by reverse
inclusion.  OP^b(G) holds the admissible b-orientations of all those G - S,
ordered by restriction; its quotient by equality of divisors on the same
carrier gives the classes.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import Graph, genus, is_bridgeless, is_connected
from .orientations import (
    STATE_CHARS,
    Orientation,
    divisor_of,
    enumerate_admissible,
    restrict_orientation,
)


class PosetError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FinitePoset:
    labels: tuple
    leq: np.ndarray  # bool matrix, leq[i, j] iff element i <= element j
    ranks: tuple | None = None

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        return self.labels.index(label)

    def leq_labels(self, a, b) -> bool:
        return bool(self.leq[self.index(a), self.index(b)])

    def strictly_less(self) -> np.ndarray:
        return self.leq & ~np.eye(self.size, dtype=bool)

    def covers(self) -> list[tuple[int, int]]:
        """Pairs (i, j) with j covering i, in index order."""
        lt = self.strictly_less()
        thru = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        cov = lt & ~thru
        return [(int(i), int(j)) for i, j in np.argwhere(cov)]

    def minimal_elements(self) -> list[int]:
        lt = self.strictly_less()
        return [i for i in range(self.size) if not lt[:, i].any()]

    def maximal_elements(self) -> list[int]:
        lt = self.strictly_less()
        return [i for i in range(self.size) if not lt[i, :].any()]

    def is_graded(self, ranks=None) -> bool:
        """Every cover step raises the rank by exactly one."""
        rk = tuple(ranks) if ranks is not None else self.ranks
        if rk is None:
            raise ValueError("no rank function given")
        return all(rk[j] == rk[i] + 1 for i, j in self.covers())


def build_poset(items, leq, key=None, rank=None) -> FinitePoset:
    """Materialize and validate a poset from a comparison callback.

    key maps an item to its JSON-able label (default: the item itself); rank,
    if given, is stored for gradedness checks.
    """
    items = list(items)
    labels = tuple(key(x) for x in items) if key else tuple(items)
    if len(set(labels)) != len(labels):
        raise PosetError("duplicate element labels")
    n = len(items)
    mat = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(items):
        for j, b in enumerate(items):
            mat[i, j] = bool(leq(a, b))
    for i in range(n):
        if not mat[i, i]:
            raise PosetError(f"not reflexive at {labels[i]!r}")
    sym = mat & mat.T & ~np.eye(n, dtype=bool)
    if sym.any():
        i, j = map(int, np.argwhere(sym)[0])
        raise PosetError(f"antisymmetry fails for {labels[i]!r}, {labels[j]!r}")
    thru = (mat.astype(np.int64) @ mat.astype(np.int64)) > 0
    bad = thru & ~mat
    if bad.any():
        i, k = map(int, np.argwhere(bad)[0])
        j = next(
            j for j in range(n) if mat[i, j] and mat[j, k]
        )
        raise PosetError(
            f"transitivity fails through {labels[i]!r} <= {labels[j]!r} <= {labels[k]!r}"
        )
    ranks = tuple(rank(x) for x in items) if rank else None
    return FinitePoset(labels, mat, ranks)


def quotient_by_equivalence(poset: FinitePoset, class_key, rank_check=True):
    """Quotient a poset by an equivalence given as a key function on labels.

    Classes are compared existentially: X <= Y iff some member of X sits
    below some member of Y.  Requires the lifting hypothesis making that
    relation transitive: whenever it holds, *every* member of X must sit
    below some member of Y.  Violations raise with an explicit witness.
    Returns (quotient, projection) where projection[i] is the quotient
    index of element i.
    """
    keys = [class_key(label) for label in poset.labels]
    order = []
    seen = {}
    for k in keys:
        if k not in seen:
            seen[k] = len(order)
            order.append(k)
    projection = tuple(seen[k] for k in keys)
    members: list[list[int]] = [[] for _ in order]
    for i, c in enumerate(projection):
        members[c].append(i)
    q = len(order)
    mat = np.zeros((q, q), dtype=bool)
    for a in range(q):
        for b in range(q):
            sub = poset.leq[np.ix_(members[a], members[b])]
            exists = bool(sub.any())
            mat[a, b] = exists
            if a == b or not exists:
                continue
            hangs = ~sub.any(axis=1)
            if hangs.any():
                i, j = map(int, np.argwhere(sub)[0])
                lo = poset.labels[members[a][i]]
                hi = poset.labels[members[b][j]]
                stuck = poset.labels[members[a][int(np.flatnonzero(hangs)[0])]]
                raise PosetError(
                    "equivalence is incompatible with the order: "
                    f"{lo!r} <= {hi!r} but {stuck!r} has nothing above it "
                    f"in the class of {hi!r}"
                )
    ranks = None
    if poset.ranks is not None:
        ranks = []
        for a in range(q):
            rs = {poset.ranks[i] for i in members[a]}
            if rank_check and len(rs) != 1:
                raise PosetError(f"rank is not constant on class {order[a]!r}")
            ranks.append(min(rs))
        ranks = tuple(ranks)
    sym = mat & mat.T & ~np.eye(q, dtype=bool)
    if sym.any():
        a, b = map(int, np.argwhere(sym)[0])
        raise PosetError(
            f"quotient antisymmetry fails for {order[a]!r}, {order[b]!r}"
        )
    thru = (mat.astype(np.int64) @ mat.astype(np.int64)) > 0
    if (thru & ~mat).any():
        a, b = map(int, np.argwhere(thru & ~mat)[0])
        raise PosetError(
            f"quotient transitivity fails for {order[a]!r}, {order[b]!r}"
        )
    return FinitePoset(tuple(order), mat, ranks), projection


def is_quotient_map(projection, source: FinitePoset, target: FinitePoset) -> bool:
    """Surjective, order-preserving, and relations in the target lift."""
    proj = tuple(projection)
    if len(proj) != source.size:
        raise ValueError("projection must assign every source element")
    if set(proj) != set(range(target.size)):
        return False
    for i in range(source.size):
        for j in range(source.size):
            if source.leq[i, j] and not target.leq[proj[i], proj[j]]:
                return False
    fibers: list[list[int]] = [[] for _ in range(target.size)]
    for i, c in enumerate(proj):
        fibers[c].append(i)
    for a in range(target.size):
        for b in range(target.size):
            if target.leq[a, b] and not any(
                source.leq[i, j] for i in fibers[a] for j in fibers[b]
            ):
                return False
    return True


# ---------------------------------------------------------------------------
# the posets of the calculus

def removal_family(graph: Graph, b: int) -> list[frozenset]:
    """A^b(G): edge sets whose removal leaves G bridgeless (b=0) or
    connected (b=1); empty for b=1 when G is disconnected."""
    if b not in (0, 1):
        raise ValueError("only b in {0, 1} is supported")
    if b == 1 and not is_connected(graph):
        return []
    out = []
    edges = sorted(graph.all_edges())
    for r in range(len(edges) + 1):
        for combo in itertools.combinations(edges, r):
            s = frozenset(combo)
            if b == 0:
                if is_bridgeless(graph, s):
                    out.append(s)
            else:
                if is_connected(graph, s):
                    out.append(s)
    return sorted(out, key=lambda s: (len(s), tuple(sorted(s))))


@lru_cache(maxsize=None)
def build_A(graph: Graph, b: int) -> FinitePoset:
    """The graded poset A^b(G) under reverse inclusion, ranked by g(G - S)."""
    family = removal_family(graph, b)
    return build_poset(
        family,
        leq=lambda s, t: t <= s,
        key=lambda s: tuple(sorted(s)),
        rank=lambda s: genus(graph, s),
    )


def _op_items(graph: Graph, b: int) -> list[Orientation]:
    items = []
    for s in removal_family(graph, b):
        items.extend(enumerate_admissible(graph, s, b))
    return items


def _op_leq(first: Orientation, second: Orientation) -> bool:
    # first <= second iff second lives on more edges and restricts to first
    if not (second.removed <= first.removed):
        return False
    return restrict_orientation(second, first.removed) == first


def op_label(orientation: Orientation) -> tuple:
    return (
        tuple(sorted(orientation.removed)),
        "".join(STATE_CHARS[s] for s in orientation.states),
    )


def class_label(orientation: Orientation) -> tuple:
    return (tuple(sorted(orientation.removed)), divisor_of(orientation))


@lru_cache(maxsize=None)
def build_OP(graph: Graph, b: int) -> FinitePoset:
    """OP^b(G): admissible orientations of all G - S, ordered by restriction."""
    items = _op_items(graph, b)
    return build_poset(
        items,
        leq=_op_leq,
        key=op_label,
        rank=lambda o: genus(graph, o.removed),
    )


@lru_cache(maxsize=None)
def build_OPbar(graph: Graph, b: int):
    """The class poset: quotient of OP^b(G) by divisor equality per carrier.

    Returns (poset, projection) with projection indexed like build_OP(G, b).
    """
    op = build_OP(graph, b)
    items = _op_items(graph, b)
    key_of = {op_label(o): class_label(o) for o in items}
    return quotient_by_equivalence(op, lambda label: key_of[label])


# ---------------------------------------------------------------------------
# serialization

def _plain(value):
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, frozenset):
        return sorted(value)
    return value


def poset_to_json(poset: FinitePoset) -> str:
    payload = {
        "elements": [_plain(label) for label in poset.labels],
        "covers": [list(pair) for pair in poset.covers()],
        "ranks": list(poset.ranks) if poset.ranks is not None else None,
    }
    return json.dumps(payload, sort_keys=True)


def poset_to_dot(poset: FinitePoset) -> str:
    lines = ["digraph poset {"]
    for i, label in enumerate(poset.labels):
        text = json.dumps(_plain(label))
        if poset.ranks is not None:
            text += f" rank {poset.ranks[i]}"
        text = text.replace('"', "'")
        lines.append(f'  n{i} [label="{text}"];')
    for i, j in poset.covers():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
