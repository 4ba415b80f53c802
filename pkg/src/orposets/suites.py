"""Verification suites sweeping the statements of the calculus over an atlas.

Each suite checks one family of statements on every stable graph of the
requested genus (exhaustively at genus 2, by fixed-seed sampling at genus 3
unless the time budget allows the full sweep).  A report counts checked
instances, records each failure as a (statement, instance, witness) triple,
and collects findings: observations worth reporting that are not failures,
such as non-injectivity witnesses.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

from .atlas import (
    automorphisms,
    build_Ag,
    build_OPg,
    build_Sg,
    canonical_form,
    conjugacy_quotient,
    contraction_table,
    contractions_between,
    enumerate_stable_graphs,
    find_iso,
    iso_as_contraction,
    isomorphic,
    stratification_report,
)
from .contractions import (
    collapse_choices,
    correction_divisor,
    pull_edges,
    push_class,
    push_divisor,
    push_edges,
    push_orientation,
)
from .divisors import (
    degree,
    hat_divisor,
    is_stable_divisor,
    sigma,
    stable_to_orientation,
    subset_degree,
)
from .graphs import (
    Graph,
    bridges,
    compose_contractions,
    contract,
    delete_edges,
    genus,
    identity_contraction,
    is_bridgeless,
    is_connected,
    is_cut,
    is_semistable,
    is_stable,
    quotient_to,
    subdivide,
    subset_genus,
)
from .contractions import hat_contraction
from .orientations import (
    BACKWARD,
    BIORIENTED,
    FORWARD,
    ROOTED_MODES,
    TC_MODES,
    Orientation,
    _subset_connected,
    bioriented_edges,
    bioriented_inside,
    divisor_of,
    enumerate_admissible,
    enumerate_orientations,
    equivalence_classes,
    extend_orientation,
    is_admissible,
    is_rooted,
    is_totally_cyclic,
    move_biorientation,
    restrict_orientation,
    t_into,
)
from .posets import (
    PosetError,
    build_A,
    build_OP,
    build_OPbar,
    class_label,
    is_quotient_map,
    op_label,
    removal_family,
)

SUITE_IDS = (
    "lm0",
    "lmO1",
    "lmfree",
    "F1-LmO",
    "degor",
    "quoto-poo",
    "rkBP",
    "ftriv",
    "fupr",
    "fprop",
    "fthm",
    "fdiag-bricor",
    "rkSg",
    "Bgq",
    "propOg",
    "cOP",
    "exclm",
    "remark-0e1",
    "noinjdeg",
)

FULL_BUDGET_SECS = 1800.0
SAMPLE_SEED = 1729


@dataclass
class SuiteReport:
    suite: str
    instances: int
    failures: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passes(self) -> int:
        return self.instances - len(self.failures)

    def to_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "instances": self.instances,
                "failures": [list(f) for f in self.failures],
                "elapsed_ms": self.elapsed_ms,
                "findings": list(self.findings),
            },
            sort_keys=True,
        )


class _Run:
    def __init__(self):
        self.instances = 0
        self.failures: list[tuple[str, str, str]] = []
        self.findings: list[str] = []

    def check(self, ok, statement: str, instance, witness="") -> bool:
        self.instances += 1
        if not ok:
            self.failures.append((statement, str(instance), str(witness)))
        return bool(ok)

    def find(self, text: str):
        self.findings.append(text)


class _Ctx:
    """Shared state for one suite run: the atlas, sampling, and arrows."""

    def __init__(self, g: int, bs: tuple[int, ...], full: bool):
        self.genus = g
        self.bs = bs
        self.full = full
        self.rng = random.Random(SAMPLE_SEED)
        self._between: dict[tuple[int, int], tuple] = {}

    @cached_property
    def atlas(self) -> tuple[Graph, ...]:
        return enumerate_stable_graphs(self.genus)

    @cached_property
    def table(self) -> dict:
        return contraction_table(self.atlas)

    def cap(self, items, limit: int) -> list:
        """Everything in full mode; a deterministic sample otherwise."""
        items = list(items)
        if self.full or len(items) <= limit:
            return items
        picks = sorted(self.rng.sample(range(len(items)), limit))
        return [items[k] for k in picks]

    def bound(self, items, limit: int) -> list:
        """Like cap, but stays capped at genus 3 and up even in full mode.

        Full runs keep graph, arrow, and removal-family coverage exhaustive
        at every genus; the per-item orientation sweeps they drive grow with
        the edge count, so past genus 2 those inner sweeps are bounded to
        keep a full pass inside its time budget.  At genus 2 the limits
        exceed every pool size, so full runs there check everything.
        """
        items = list(items)
        if len(items) <= limit or (self.full and self.genus <= 2):
            return items
        picks = sorted(self.rng.sample(range(len(items)), limit))
        return [items[k] for k in picks]

    def pairs(self, i: int, j: int) -> tuple:
        """All contractions atlas[i] -> atlas[j], cached per pair."""
        if self.full:
            return self.table[(i, j)]
        if (i, j) not in self._between:
            self._between[(i, j)] = contractions_between(
                self.atlas[i], self.atlas[j]
            )
        return self._between[(i, j)]

    def arrows(self, limit: int) -> list:
        """(i, j, contraction) triples; every tabulated arrow in full mode,
        identities plus sampled single contractions otherwise."""
        if self.full:
            return [
                (i, j, gamma)
                for (i, j) in sorted(self.table)
                for gamma in self.table[(i, j)]
            ]
        out = [
            (i, i, identity_contraction(graph))
            for i, graph in enumerate(self.atlas)
        ]
        pool = [
            (i, s0)
            for i, graph in enumerate(self.atlas)
            for r in range(1, graph.edge_count + 1)
            for s0 in itertools.combinations(sorted(graph.all_edges()), r)
        ]
        keys = {(h.weights, h.edges): j for j, h in enumerate(self.atlas)}
        for i, s0 in self.cap(pool, limit):
            quotient, gamma = contract(self.atlas[i], frozenset(s0))
            j = keys[canonical_form(quotient)]
            iso = find_iso(quotient, self.atlas[j])
            out.append(
                (i, j, compose_contractions(iso_as_contraction(iso), gamma))
            )
        return out


def _gname(i: int, graph: Graph) -> str:
    w = ",".join(str(x) for x in graph.weights)
    e = ";".join(f"{t}{h}" for t, h in graph.edges)
    return f"G{i}(w={w}|e={e})"


def _subsets(edges) -> list[frozenset]:
    edges = sorted(edges)
    return [
        frozenset(c)
        for r in range(len(edges) + 1)
        for c in itertools.combinations(edges, r)
    ]


def _graph_subset_pool(ctx: _Ctx, limit: int) -> list:
    pool = [
        (i, s)
        for i, graph in enumerate(ctx.atlas)
        for s in _subsets(graph.all_edges())
    ]
    return ctx.cap(pool, limit)


def _vertex_subsets(n: int):
    for bits in range(1, 1 << n):
        yield frozenset(v for v in range(n) if bits >> v & 1)


def _degt_witness(graph: Graph, o: Orientation) -> str:
    """First vertex subset with a connected induced carrier violating the
    degree identity, or '' if none."""
    if o.b == 1 and not o.states:
        # the conventional empty rooted orientation adds 1 to the divisor
        # without a bioriented edge, so the identity does not apply
        return ""
    d = divisor_of(o)
    for z in _vertex_subsets(graph.vertex_count):
        if not _subset_connected(graph, z, o.removed):
            continue
        want = (
            subset_genus(graph, z, o.removed)
            - 1
            + bioriented_inside(o, z)
            + t_into(o, z)
        )
        if subset_degree(d, z) != want:
            return f"Z={sorted(z)}: |d_Z|={subset_degree(d, z)} != {want}"
    return ""


# ---------------------------------------------------------------------------
# orientation-level suites


def _suite_lm0(ctx: _Ctx, run: _Run):
    for i, s in _graph_subset_pool(ctx, 60):
        graph = ctx.atlas[i]
        inst = f"{_gname(i, graph)} S={sorted(s)}"
        for o in enumerate_orientations(graph, s, 0):
            votes = {m: is_totally_cyclic(o, m) for m in TC_MODES}
            run.check(
                len(set(votes.values())) == 1,
                "the five total-cyclicity tests agree",
                f"{inst} O={op_label(o)[1]}",
                witness=str(votes),
            )
            bad = _degt_witness(graph, o)
            run.check(
                not bad,
                "on a connected Z the divisor degree is genus - 1 plus "
                "biorientations inside plus inflow",
                f"{inst} O={op_label(o)[1]}",
                witness=bad,
            )


def _suite_lmO1(ctx: _Ctx, run: _Run):
    for i, s in _graph_subset_pool(ctx, 50):
        graph = ctx.atlas[i]
        inst = f"{_gname(i, graph)} S={sorted(s)}"
        for o in ctx.cap(enumerate_orientations(graph, s, 1), 64):
            votes = {m: is_rooted(o, m) for m in ROOTED_MODES}
            run.check(
                len(set(votes.values())) == 1,
                "the five rootedness tests agree",
                f"{inst} O={op_label(o)[1]}",
                witness=str(votes),
            )
            bad = _degt_witness(graph, o)
            run.check(
                not bad,
                "on a connected Z the divisor degree is genus - 1 plus "
                "biorientations inside plus inflow",
                f"{inst} O={op_label(o)[1]}",
                witness=bad,
            )


def _suite_lmfree(ctx: _Ctx, run: _Run):
    pool = [
        (i, s)
        for i, graph in enumerate(ctx.atlas)
        for s in _subsets(graph.all_edges())
        if len(s) < graph.edge_count and is_connected(graph, s)
    ]
    for i, s in ctx.cap(pool, 40):
        graph = ctx.atlas[i]
        inst = f"{_gname(i, graph)} S={sorted(s)}"
        kept = frozenset(graph.all_edges() - s)
        buckets: dict[tuple, set] = {}
        everything = list(enumerate_orientations(graph, s, 1))
        for o in everything:
            buckets.setdefault(divisor_of(o), set()).add(
                bioriented_edges(o)[0]
            )
        for o in ctx.cap(everything, 48):
            a = is_rooted(o, "cuts")
            b = is_rooted(o, "paths")
            c = kept <= buckets[divisor_of(o)]
            run.check(
                a == b == c,
                "rooted, path-reachable, and freely movable biorientation "
                "are equivalent",
                f"{inst} O={op_label(o)[1]}",
                witness=f"rooted={a} paths={b} movable={c}",
            )
            if not a:
                continue
            bad = ""
            for e in sorted(kept):
                moved = move_biorientation(o, e)
                if (
                    divisor_of(moved) != divisor_of(o)
                    or bioriented_edges(moved) != [e]
                    or not is_rooted(moved, "cuts")
                ):
                    bad = f"edge {e} -> {op_label(moved)[1]}"
                    break
            run.check(
                not bad,
                "moving the biorientation keeps the divisor and rootedness",
                f"{inst} O={op_label(o)[1]}",
                witness=bad,
            )


def _suite_existence(ctx: _Ctx, run: _Run):
    for i, s in _graph_subset_pool(ctx, 150):
        graph = ctx.atlas[i]
        inst = f"{_gname(i, graph)} S={sorted(s)}"
        has0 = next(iter(enumerate_admissible(graph, s, 0)), None) is not None
        run.check(
            has0 == is_bridgeless(graph, s),
            "totally cyclic orientations exist exactly on bridgeless carriers",
            inst,
            witness=f"exists={has0} bridgeless={is_bridgeless(graph, s)}",
        )
        has1 = next(iter(enumerate_admissible(graph, s, 1)), None) is not None
        run.check(
            has1 == is_connected(graph, s),
            "rooted orientations exist exactly on connected carriers",
            inst,
            witness=f"exists={has1} connected={is_connected(graph, s)}",
        )


def _suite_degor(ctx: _Ctx, run: _Run):
    pool = [
        (i, b, s)
        for i, graph in enumerate(ctx.atlas)
        for b in ctx.bs
        for s in removal_family(graph, b)
    ]
    for i, b, s in ctx.cap(pool, 60):
        graph = ctx.atlas[i]
        inst = f"{_gname(i, graph)} b={b} S={sorted(s)}"
        carrier = delete_edges(graph, s)
        classes = equivalence_classes(enumerate_admissible(graph, s, b))
        divisors = [d for d, _ in classes]
        run.check(
            divisors == sigma(carrier, b),
            "class divisors are exactly the stable divisors of the carrier",
            inst,
            witness=f"classes={divisors} stable={sigma(carrier, b)}",
        )
        good = set(divisors)
        bad = ""
        for o in enumerate_orientations(graph, s, b):
            if divisor_of(o) in good and not is_admissible(o):
                bad = f"O={op_label(o)[1]} d={divisor_of(o)}"
                break
        run.check(
            not bad,
            "an orientation sharing its divisor with an admissible one is "
            "admissible",
            inst,
            witness=bad,
        )
        if b == 1:
            bad = ""
            for d in divisors:
                o = stable_to_orientation(carrier, d, 1)
                if divisor_of(o) != d or not is_rooted(o, "cuts"):
                    bad = f"d={d} -> {op_label(o)[1]}"
                    break
            run.check(
                not bad,
                "every stable divisor is realized by a constructed rooted "
                "orientation",
                inst,
                witness=bad,
            )
    if ctx.genus == 2:
        theta = Graph((0, 0), ((0, 1), (0, 1), (0, 1)))
        dumbbell = Graph((0, 0), ((0, 0), (0, 1), (1, 1)))
        if 0 in ctx.bs:
            classes = equivalence_classes(
                enumerate_admissible(theta, frozenset(), 0)
            )
            run.check(
                [d for d, _ in classes] == [(0, 1), (1, 0)],
                "the triple edge carries exactly two full-carrier classes",
                "theta b=0 S=[]",
                witness=str([d for d, _ in classes]),
            )
        if 1 in ctx.bs:
            classes = equivalence_classes(
                enumerate_admissible(dumbbell, frozenset(), 1)
            )
            run.check(
                [d for d, _ in classes] == [(1, 1)],
                "the two-loop chain carries exactly one full-carrier rooted "
                "class",
                "dumbbell b=1 S=[]",
                witness=str([d for d, _ in classes]),
            )


# ---------------------------------------------------------------------------
# poset suites


def _suite_quoto_poo(ctx: _Ctx, run: _Run):
    for i in ctx.cap(range(len(ctx.atlas)), 6):
        graph = ctx.atlas[i]
        for b in ctx.bs:
            inst = f"{_gname(i, graph)} b={b}"
            try:
                op = build_OP(graph, b)
                opbar, proj = build_OPbar(graph, b)
            except PosetError as exc:
                run.check(False, "orientation poset axioms hold", inst, exc)
                continue
            run.check(True, "orientation poset axioms hold", inst)
            run.check(
                op.is_graded(), "the orientation poset is graded", inst
            )
            run.check(
                opbar.is_graded(), "the class poset is graded", inst
            )
            a_poset = build_A(graph, b)
            a_index = {lab: k for k, lab in enumerate(a_poset.labels)}
            run.check(
                is_quotient_map(
                    [a_index[lab[0]] for lab in op.labels], op, a_poset
                ),
                "forgetting the orientation is a poset quotient onto the "
                "removal family",
                inst,
            )
            run.check(
                is_quotient_map(
                    [a_index[lab[0]] for lab in opbar.labels], opbar, a_poset
                ),
                "forgetting the class divisor is a poset quotient onto the "
                "removal family",
                inst,
            )
            run.check(
                is_quotient_map(proj, op, opbar),
                "taking classes is a poset quotient",
                inst,
            )
            family = removal_family(graph, b)
            ext_pairs = [
                (s, t)
                for s in family
                for t in family
                if t < s
            ]
            for s, t in ctx.cap(ext_pairs, 24):
                for o in ctx.cap(enumerate_admissible(graph, s, b), 12):
                    ext = extend_orientation(o, t)
                    run.check(
                        is_admissible(ext)
                        and restrict_orientation(ext, s) == o,
                        "every admissible orientation extends admissibly to "
                        "any larger carrier",
                        f"{inst} S={sorted(s)} T={sorted(t)} "
                        f"O={op_label(o)[1]}",
                        witness=f"ext={op_label(ext)}",
                    )
            members: list[list[int]] = [[] for _ in range(opbar.size)]
            for k, c in enumerate(proj):
                members[c].append(k)
            bad = ""
            for x in range(opbar.size):
                for y in range(opbar.size):
                    exist = any(
                        op.leq[m, w] for m in members[x] for w in members[y]
                    )
                    forall = all(
                        any(op.leq[m, w] for w in members[y])
                        for m in members[x]
                    )
                    if exist != forall:
                        bad = (
                            f"{opbar.labels[x]} vs {opbar.labels[y]}: "
                            f"exist={exist} forall={forall}"
                        )
                        break
                if bad:
                    break
            run.check(
                not bad,
                "one lift below some member forces every lift below some "
                "member",
                inst,
                witness=bad,
            )


def _suite_rkBP(ctx: _Ctx, run: _Run):
    for i, graph in enumerate(ctx.atlas):
        for b in ctx.bs:
            inst = f"{_gname(i, graph)} b={b}"
            try:
                a_poset = build_A(graph, b)
            except PosetError as exc:
                run.check(False, "removal family poset axioms hold", inst, exc)
                continue
            run.check(True, "removal family poset axioms hold", inst)
            run.check(
                a_poset.is_graded(),
                "the removal family is graded by carrier genus",
                inst,
            )
            full = tuple(sorted(graph.all_edges()))
            if b == 0:
                br = tuple(sorted(bridges(graph)))
                run.check(
                    [a_poset.labels[k] for k in a_poset.minimal_elements()]
                    == [full],
                    "the whole edge set is the unique bottom for b = 0",
                    inst,
                    witness=str(a_poset.minimal_elements()),
                )
                run.check(
                    [a_poset.labels[k] for k in a_poset.maximal_elements()]
                    == [br],
                    "the bridge set is the unique top for b = 0",
                    inst,
                    witness=str(
                        [a_poset.labels[k] for k in a_poset.maximal_elements()]
                    ),
                )
                run.check(
                    genus(graph, frozenset(full)) == sum(graph.weights),
                    "removing everything leaves the weight total as genus",
                    inst,
                )
                run.check(
                    genus(graph, bridges(graph)) == genus(graph),
                    "removing the bridges keeps the genus",
                    inst,
                )
                run.check(
                    all(
                        frozenset(lab) >= bridges(graph)
                        for lab in a_poset.labels
                    ),
                    "every bridgeless removal contains all bridges",
                    inst,
                )
            else:
                run.check(
                    [a_poset.labels[k] for k in a_poset.maximal_elements()]
                    == [()],
                    "the empty set is the unique top for b = 1",
                    inst,
                    witness=str(
                        [a_poset.labels[k] for k in a_poset.maximal_elements()]
                    ),
                )
                trees = {
                    lab
                    for lab in a_poset.labels
                    if graph.edge_count - len(lab)
                    == graph.vertex_count - 1
                }
                run.check(
                    {
                        a_poset.labels[k]
                        for k in a_poset.minimal_elements()
                    }
                    == trees,
                    "the bottoms for b = 1 are the spanning tree complements",
                    inst,
                    witness=str(sorted(trees)),
                )


# ---------------------------------------------------------------------------
# contraction suites


def _relabel_after_deletion(graph: Graph, removed, edges) -> frozenset:
    kept = sorted(graph.all_edges() - frozenset(removed))
    index = {e: k for k, e in enumerate(kept)}
    return frozenset(index[e] for e in edges)


def _suite_ftriv(ctx: _Ctx, run: _Run):
    pool = [
        (i, s0)
        for i, graph in enumerate(ctx.atlas)
        for s0 in _subsets(graph.all_edges())
    ]
    for i, s0 in ctx.cap(pool, 50):
        graph = ctx.atlas[i]
        inst = f"{_gname(i, graph)} S0={sorted(s0)}"
        target, gamma = contract(graph, s0)
        run.check(
            is_connected(target) == is_connected(graph),
            "contraction preserves connectivity both ways",
            inst,
        )
        run.check(
            genus(target) == genus(graph),
            "contraction preserves the genus",
            inst,
            witness=f"{genus(target)} != {genus(graph)}",
        )
        run.check(
            is_semistable(target) and is_stable(target),
            "a contraction of a stable graph is stable",
            inst,
        )
        run.check(
            (not bridges(target)) == (bridges(graph) <= s0),
            "the image is bridgeless exactly when the bridges are contracted",
            inst,
            witness=(
                f"target bridges {sorted(bridges(target))}, "
                f"source bridges {sorted(bridges(graph))}"
            ),
        )
        tsets = ctx.cap(_subsets(target.all_edges()), 16)
        for t in tsets:
            t_pre = frozenset(
                e for e in gamma.kept_edges() if gamma.edge_map[e] in t
            )
            sub_inst = f"{inst} T={sorted(t)}"
            shifted = _relabel_after_deletion(graph, t_pre, s0)
            run.check(
                isomorphic(
                    delete_edges(target, t),
                    contract(delete_edges(graph, t_pre), shifted)[0],
                ),
                "deleting then contracting matches contracting then deleting",
                sub_inst,
            )
            run.check(
                isomorphic(quotient_to(target, t), quotient_to(graph, t_pre)),
                "the carrier quotients of image and preimage agree",
                sub_inst,
            )
            if t:
                run.check(
                    is_cut(target, t) == is_cut(graph, t_pre),
                    "cuts of the image are exactly preimages of cuts",
                    sub_inst,
                )


def _suite_fupr(ctx: _Ctx, run: _Run):
    arrows = ctx.arrows(40)
    for i, j, gamma in arrows:
        graph, target = ctx.atlas[i], ctx.atlas[j]
        for b in ctx.bs:
            inst = f"{_gname(i, graph)} -> {_gname(j, target)} " \
                   f"S0={sorted(gamma.contracted)} b={b}"
            fam_g = removal_family(graph, b)
            fam_h = removal_family(target, b)
            ok_in = is_bridgeless if b == 0 else is_connected
            for t in ctx.cap(fam_h, 12):
                pt = pull_edges(gamma, t, b)
                sub = f"{inst} T={sorted(t)}"
                run.check(
                    ok_in(graph, pt),
                    "the pullback of an allowed removal is allowed",
                    sub,
                    witness=f"pullback={sorted(pt)}",
                )
                run.check(
                    push_edges(gamma, pt) == t,
                    "pushing the pullback returns the original removal",
                    sub,
                    witness=f"push={sorted(push_edges(gamma, pt))}",
                )
                run.check(
                    genus(graph, pt) == genus(target, t),
                    "the pullback preserves the carrier genus",
                    sub,
                )
                run.check(
                    all(
                        pt <= s
                        for s in fam_g
                        if push_edges(gamma, s) == t
                    ),
                    "the pullback is the smallest removal pushing onto T",
                    sub,
                )
            bad = ""
            for s in ctx.cap(fam_g, 10):
                for t in ctx.cap(fam_h, 10):
                    if (t <= push_edges(gamma, s)) != (
                        pull_edges(gamma, t, b) <= s
                    ):
                        bad = f"S={sorted(s)} T={sorted(t)}"
                        break
                if bad:
                    break
            run.check(
                not bad,
                "push and pull are adjoint on removals",
                inst,
                witness=bad,
            )
            bad = ""
            for t1 in ctx.cap(fam_h, 8):
                for t2 in ctx.cap(fam_h, 8):
                    if t2 <= t1 and not (
                        pull_edges(gamma, t2, b) <= pull_edges(gamma, t1, b)
                    ):
                        bad = f"T1={sorted(t1)} T2={sorted(t2)}"
                        break
                if bad:
                    break
            run.check(not bad, "the pullback is monotone", inst, witness=bad)
            pushed = [push_edges(gamma, s) for s in fam_g]
            run.check(
                all(ok_in(target, p) for p in pushed),
                "the image of an allowed removal is allowed",
                inst,
            )
            a_g = build_A(graph, b)
            a_h = build_A(target, b)
            h_index = {lab: k for k, lab in enumerate(a_h.labels)}
            proj = [
                h_index[tuple(sorted(push_edges(gamma, frozenset(lab))))]
                for lab in a_g.labels
            ]
            run.check(
                is_quotient_map(proj, a_g, a_h),
                "pushing removals is a poset quotient",
                inst,
            )
            if gamma.contracted <= bridges(graph):
                iso_ok = len(set(proj)) == a_g.size == a_h.size and all(
                    bool(a_g.leq[x, y]) == bool(a_h.leq[proj[x], proj[y]])
                    for x in range(a_g.size)
                    for y in range(a_g.size)
                )
                run.check(
                    iso_ok,
                    "contracting bridges only is an isomorphism of removal "
                    "posets",
                    inst,
                )
    by_target: dict[int, list] = {}
    for i, j, gamma in arrows:
        by_target.setdefault(i, []).append((i, j, gamma))
    composable = [
        (first, second)
        for i, j, first in arrows
        for jj, k, second in by_target.get(j, [])
        if jj == j
    ]
    for first, second in ctx.cap(composable, 20):
        composed = compose_contractions(second, first)
        inst = (
            f"compose S0={sorted(first.contracted)} then "
            f"S0={sorted(second.contracted)}"
        )
        for b in ctx.bs:
            fam_g = removal_family(first.source, b)
            fam_k = removal_family(second.target, b)
            run.check(
                all(
                    push_edges(composed, s)
                    == push_edges(second, push_edges(first, s))
                    for s in ctx.cap(fam_g, 6)
                ),
                "pushing along a composite is the composite of pushes",
                f"{inst} b={b}",
            )
            run.check(
                all(
                    pull_edges(composed, t, b)
                    == pull_edges(first, pull_edges(second, t, b), b)
                    for t in ctx.cap(fam_k, 6)
                ),
                "pulling along a composite is the composite of pulls in "
                "reverse order",
                f"{inst} b={b}",
            )
        probe = tuple(
            (z * 7 + 3) % 5 for z in range(first.source.vertex_count)
        )
        run.check(
            push_divisor(composed, probe)
            == push_divisor(second, push_divisor(first, probe)),
            "pushing divisors is functorial",
            inst,
        )
        if ctx.full:
            i = ctx.atlas.index(first.source)
            k = ctx.atlas.index(second.target)
            run.check(
                any(entry == composed for entry in ctx.table[(i, k)]),
                "the composite of tabulated arrows is tabulated",
                inst,
            )


def _pushable(o: Orientation, contracted) -> bool:
    return not any(e in contracted for e in bioriented_edges(o))


def _suite_fprop(ctx: _Ctx, run: _Run):
    arrows = ctx.arrows(24)
    for i, j, gamma in arrows:
        graph, target = ctx.atlas[i], ctx.atlas[j]
        for b in ctx.bs:
            inst = f"{_gname(i, graph)} -> {_gname(j, target)} " \
                   f"S0={sorted(gamma.contracted)} b={b}"
            for s in ctx.bound(_subsets(graph.all_edges()), 8):
                # the conventional empty rooted orientation carries a divisor
                # the identity does not describe, so only honest orientations
                raws = [
                    o
                    for o in enumerate_orientations(graph, s, b)
                    if _pushable(o, gamma.contracted)
                    and (o.states or o.b == 0)
                ]
                for o in ctx.bound(raws, 10):
                    pushed = push_orientation(gamma, o)
                    lhs = push_divisor(gamma, divisor_of(o))
                    rhs = tuple(
                        x - c
                        for x, c in zip(
                            divisor_of(pushed),
                            correction_divisor(gamma, s),
                        )
                    )
                    run.check(
                        lhs == rhs,
                        "the pushed divisor is the divisor of the push minus "
                        "the correction",
                        f"{inst} S={sorted(s)} O={op_label(o)[1]}",
                        witness=f"{lhs} != {rhs}",
                    )
            fam = removal_family(graph, b)
            for s in ctx.bound(fam, 8):
                admissible = [
                    o
                    for o in enumerate_admissible(graph, s, b)
                    if _pushable(o, gamma.contracted)
                ]
                groups: dict[tuple, list] = {}
                for o in ctx.bound(admissible, 12):
                    pushed = push_orientation(gamma, o)
                    sub = f"{inst} S={sorted(s)} O={op_label(o)[1]}"
                    run.check(
                        is_admissible(pushed),
                        "pushing preserves admissibility",
                        sub,
                        witness=op_label(pushed),
                    )
                    run.check(
                        push_class(gamma, s, divisor_of(o), b)
                        == (pushed.removed, divisor_of(pushed)),
                        "the class image matches the pushed representative",
                        sub,
                    )
                    groups.setdefault(divisor_of(o), []).append(pushed)
                bad = ""
                for d, outs in groups.items():
                    if len({divisor_of(p) for p in outs}) != 1:
                        bad = f"class d={d}"
                        break
                run.check(
                    not bad,
                    "equivalent orientations push to equivalent orientations",
                    f"{inst} S={sorted(s)}",
                    witness=bad,
                )
            bad = ""
            pairs = [(s, t) for s in fam for t in fam if t < s]
            for s, t in ctx.bound(pairs, 8):
                for big in ctx.bound(
                    list(enumerate_admissible(graph, t, b)), 6
                ):
                    small = restrict_orientation(big, s)
                    if small.b != big.b:
                        continue  # the biorientation was cut off the carrier
                    if not (
                        is_admissible(small)
                        and _pushable(big, gamma.contracted)
                        and _pushable(small, gamma.contracted)
                    ):
                        continue
                    p_small = push_orientation(gamma, small)
                    p_big = push_orientation(gamma, big)
                    if (
                        restrict_orientation(p_big, p_small.removed)
                        != p_small
                    ):
                        bad = f"S={sorted(s)} T={sorted(t)}"
                        break
                if bad:
                    break
            run.check(
                not bad,
                "pushing preserves the restriction order",
                inst,
                witness=bad,
            )
    by_source: dict[Graph, list] = {}
    for i, j, gamma in arrows:
        by_source.setdefault(gamma.source, []).append(gamma)
    composable = [
        (first, second)
        for i, j, first in arrows
        for second in by_source.get(first.target, [])
    ]
    for first, second in ctx.bound(composable, 24):
        composed = compose_contractions(second, first)
        inst = (
            f"compose S0={sorted(first.contracted)} then "
            f"S0={sorted(second.contracted)}"
        )
        for b in ctx.bs:
            bad = ""
            for s in ctx.bound(removal_family(first.source, b), 4):
                for o in ctx.bound(
                    list(enumerate_admissible(first.source, s, b)), 6
                ):
                    if not _pushable(o, composed.contracted):
                        continue
                    if push_orientation(composed, o) != push_orientation(
                        second, push_orientation(first, o)
                    ):
                        bad = f"S={sorted(s)} O={op_label(o)[1]}"
                        break
                if bad:
                    break
            run.check(
                not bad,
                "pushing orientations is functorial",
                f"{inst} b={b}",
                witness=bad,
            )
    if ctx.genus == 2 and 0 in ctx.bs:
        _fprop_pinned(run)


def _fprop_pinned(run: _Run):
    """A worked contraction instance with every intermediate value fixed."""
    graph = Graph((1, 1, 1), ((0, 1), (0, 1), (0, 1), (1, 2), (1, 2), (1, 2)))
    s = frozenset({1})
    o = Orientation(
        graph, s, (BACKWARD, FORWARD, BACKWARD, FORWARD, FORWARD), 0
    )
    target, gamma = contract(graph, s)
    inst = "pinned chain graph, contract the middle parallel edge"
    run.check(is_admissible(o), "the pinned orientation is totally cyclic", inst)
    run.check(
        divisor_of(o) == (1, 2, 2),
        "pinned divisor",
        inst,
        witness=divisor_of(o),
    )
    pushed = push_orientation(gamma, o)
    run.check(
        divisor_of(pushed) == (4, 2),
        "pinned pushed divisor",
        inst,
        witness=divisor_of(pushed),
    )
    run.check(
        push_divisor(gamma, divisor_of(o)) == (3, 2)
        and correction_divisor(gamma, s) == (1, 0),
        "pinned pushforward and correction",
        inst,
        witness=(
            push_divisor(gamma, divisor_of(o)),
            correction_divisor(gamma, s),
        ),
    )
    run.check(
        push_divisor(gamma, divisor_of(o))
        == tuple(
            x - c
            for x, c in zip(divisor_of(pushed), correction_divisor(gamma, s))
        ),
        "pinned divisor identity",
        inst,
    )


def _suite_fthm(ctx: _Ctx, run: _Run):
    arrows = [
        (i, j, gamma)
        for i, j, gamma in ctx.arrows(12)
        if len(gamma.contracted) < ctx.atlas[i].edge_count
    ]
    if not ctx.full:
        arrows = ctx.cap(arrows, 6)
    for i, j, gamma in arrows:
        graph, target = ctx.atlas[i], ctx.atlas[j]
        for b in ctx.bs:
            inst = f"{_gname(i, graph)} -> {_gname(j, target)} " \
                   f"S0={sorted(gamma.contracted)} b={b}"
            opbar_g, _ = build_OPbar(graph, b)
            opbar_h, _ = build_OPbar(target, b)
            h_index = {lab: k for k, lab in enumerate(opbar_h.labels)}
            mapping = []
            well_defined = True
            for s_tup, d in opbar_g.labels:
                t, dd = push_class(gamma, frozenset(s_tup), d, b)
                image = (tuple(sorted(t)), dd)
                if image not in h_index:
                    well_defined = False
                    run.check(
                        False,
                        "the image of a class is a class",
                        f"{inst} class={( s_tup, d )}",
                        witness=str(image),
                    )
                    continue
                mapping.append(h_index[image])
            if not well_defined:
                continue
            run.check(
                True, "the image of a class is a class", inst
            )
            bad = ""
            for x in range(opbar_g.size):
                for y in range(opbar_g.size):
                    if opbar_g.leq[x, y] and not opbar_h.leq[
                        mapping[x], mapping[y]
                    ]:
                        bad = f"{opbar_g.labels[x]} <= {opbar_g.labels[y]}"
                        break
                if bad:
                    break
            run.check(
                not bad,
                "pushing classes preserves the order",
                inst,
                witness=bad,
            )
            run.check(
                is_quotient_map(mapping, opbar_g, opbar_h),
                "pushing classes is a poset quotient",
                inst,
            )
            for t in ctx.cap(removal_family(target, b), 10):
                pt = pull_edges(gamma, t, b)
                pt_tup = tuple(sorted(pt))
                t_tup = tuple(sorted(t))
                images = {
                    push_class(gamma, pt, d, b)[1]
                    for s_tup, d in opbar_g.labels
                    if s_tup == pt_tup
                }
                wanted = {
                    dd for t2, dd in opbar_h.labels if t2 == t_tup
                }
                run.check(
                    images == wanted,
                    "classes over the pullback carrier map onto the classes "
                    "over the removal",
                    f"{inst} T={sorted(t)}",
                    witness=f"images={sorted(images)} wanted={sorted(wanted)}",
                )
            if b == 0:
                op_g = build_OP(graph, 0)
                op_h = build_OP(target, 0)
                oh_index = {lab: k for k, lab in enumerate(op_h.labels)}
                items = [
                    o
                    for s in removal_family(graph, 0)
                    for o in enumerate_admissible(graph, s, 0)
                ]
                proj = [
                    oh_index[op_label(push_orientation(gamma, o))]
                    for o in items
                ]
                run.check(
                    is_quotient_map(proj, op_g, op_h),
                    "pushing orientations is a poset quotient",
                    inst,
                )


def _iso_of_posets(first, second, mapping) -> bool:
    if len(set(mapping)) != first.size or first.size != second.size:
        return False
    return all(
        bool(first.leq[x, y]) == bool(second.leq[mapping[x], mapping[y]])
        for x in range(first.size)
        for y in range(first.size)
    )


def _suite_fdiag_bricor(ctx: _Ctx, run: _Run):
    for i, j, gamma in ctx.arrows(20):
        graph, target = ctx.atlas[i], ctx.atlas[j]
        inst = f"{_gname(i, graph)} -> {_gname(j, target)} " \
               f"S0={sorted(gamma.contracted)}"
        items = [
            o
            for s in removal_family(graph, 0)
            for o in enumerate_admissible(graph, s, 0)
        ]
        bad = ""
        for o in ctx.cap(items, 40):
            pushed = push_orientation(gamma, o)
            s = o.removed
            if class_label(pushed) != (
                tuple(sorted(push_edges(gamma, s))),
                push_class(gamma, s, divisor_of(o), 0)[1],
            ):
                bad = f"O={op_label(o)}"
                break
        run.check(
            not bad,
            "taking classes commutes with pushing",
            inst,
            witness=bad,
        )
        if gamma.contracted and gamma.contracted <= bridges(graph):
            op_g = build_OP(graph, 0)
            op_h = build_OP(target, 0)
            oh_index = {lab: k for k, lab in enumerate(op_h.labels)}
            proj = [
                oh_index.get(op_label(push_orientation(gamma, o)))
                for o in items
            ]
            run.check(
                None not in proj and _iso_of_posets(op_g, op_h, proj),
                "contracting bridges only is an isomorphism of orientation "
                "posets",
                inst,
            )
            for b in ctx.bs:
                ob_g, _ = build_OPbar(graph, b)
                ob_h, _ = build_OPbar(target, b)
                hb_index = {lab: k for k, lab in enumerate(ob_h.labels)}
                mapping = []
                for s_tup, d in ob_g.labels:
                    t, dd = push_class(gamma, frozenset(s_tup), d, b)
                    mapping.append(hb_index.get((tuple(sorted(t)), dd)))
                run.check(
                    None not in mapping
                    and _iso_of_posets(ob_g, ob_h, mapping),
                    "contracting bridges only is an isomorphism of class "
                    "posets",
                    f"{inst} b={b}",
                )
    for i, graph in enumerate(ctx.atlas):
        br = bridges(graph)
        if not br:
            continue
        inst = f"{_gname(i, graph)} bridges={sorted(br)}"
        pruned = delete_edges(graph, br)
        op_inner = build_OP(pruned, 0)
        op_outer = build_OP(graph, 0)
        kept = sorted(graph.all_edges() - br)
        outer_index = {lab: k for k, lab in enumerate(op_outer.labels)}
        mapping = []
        for s_tup, states in op_inner.labels:
            s_outer = tuple(sorted({kept[e] for e in s_tup} | br))
            mapping.append(outer_index.get((s_outer, states)))
        run.check(
            None not in mapping and _iso_of_posets(op_inner, op_outer, mapping),
            "deleting the bridges leaves the orientation poset unchanged",
            inst,
        )
        run.check(
            all(
                op_inner.ranks[k]
                == op_outer.ranks[mapping[k]]
                for k in range(op_inner.size)
            ),
            "deleting the bridges preserves the ranks",
            inst,
        )


# ---------------------------------------------------------------------------
# genus-level suites


def _suite_rkSg(ctx: _Ctx, run: _Run):
    g = ctx.genus
    edgeless = [i for i, h in enumerate(ctx.atlas) if h.edge_count == 0]
    run.check(
        len(edgeless) == 1 and ctx.atlas[edgeless[0]].weights == (g,),
        "the atlas has exactly one edgeless graph, of full weight",
        f"genus {g}",
        witness=str(edgeless),
    )
    if ctx.full:
        try:
            sg = build_Sg(ctx.atlas)
        except PosetError as exc:
            run.check(False, "the contraction order is a poset", f"genus {g}", exc)
            return
        run.check(True, "the contraction order is a poset", f"genus {g}")
        run.check(
            sg.is_graded(),
            "the contraction order is graded by missing edges",
            f"genus {g}",
        )
        run.check(
            sg.maximal_elements() == edgeless,
            "the edgeless graph is the unique top",
            f"genus {g}",
            witness=str(sg.maximal_elements()),
        )
        run.check(
            set(sg.minimal_elements())
            == {
                i
                for i, h in enumerate(ctx.atlas)
                if h.edge_count == 3 * g - 3
            },
            "the bottoms are exactly the graphs with 3g - 3 edges",
            f"genus {g}",
            witness=str(sg.minimal_elements()),
        )
        run.check(
            all(
                ctx.atlas[j].edge_count < ctx.atlas[i].edge_count
                for (i, j) in sorted(ctx.table)
                if i != j and ctx.table[(i, j)]
            ),
            "arrows between distinct graphs strictly drop the edge count",
            f"genus {g}",
        )
        return
    idx = list(range(len(ctx.atlas)))
    for i in ctx.cap(idx, 10):
        run.check(
            bool(ctx.pairs(i, edgeless[0])),
            "every graph contracts onto the edgeless graph",
            _gname(i, ctx.atlas[i]),
        )
    for i, j in ctx.cap(list(itertools.product(idx, idx)), 40):
        down = bool(ctx.pairs(i, j))
        up = bool(ctx.pairs(j, i))
        run.check(
            not (down and up) or i == j,
            "the contraction order is antisymmetric",
            f"{i} vs {j}",
        )
        if down and i != j:
            run.check(
                ctx.atlas[j].edge_count < ctx.atlas[i].edge_count,
                "arrows between distinct graphs strictly drop the edge count",
                f"{i} -> {j}",
            )


def _suite_Bgq(ctx: _Ctx, run: _Run):
    g = ctx.genus
    for b in ctx.bs:
        if ctx.full:
            inst = f"genus {g} b={b}"
            try:
                ag = build_Ag(ctx.atlas, b)
            except PosetError as exc:
                run.check(False, "the removal pairs form a poset", inst, exc)
                continue
            run.check(True, "the removal pairs form a poset", inst)
            run.check(
                ag.is_graded(),
                "the removal pairs are graded by the universal rank",
                inst,
            )
            run.check(
                ag.size
                == sum(
                    len(removal_family(h, b)) for h in ctx.atlas
                ),
                "the element count adds up the per-graph families",
                inst,
                witness=str(ag.size),
            )
            sg = build_Sg(ctx.atlas)
            run.check(
                is_quotient_map([lab[0] for lab in ag.labels], ag, sg),
                "forgetting the removal is a poset quotient onto the "
                "contraction order",
                inst,
            )
            for i, graph in enumerate(ctx.atlas):
                fiber = [
                    k for k, lab in enumerate(ag.labels) if lab[0] == i
                ]
                local = build_A(graph, b)
                match = len(fiber) == local.size and all(
                    bool(ag.leq[x, y])
                    == local.leq_labels(ag.labels[x][1], ag.labels[y][1])
                    for x in fiber
                    for y in fiber
                )
                run.check(
                    match,
                    "the fiber over a graph is its own removal poset",
                    f"{inst} {_gname(i, graph)}",
                )
        else:
            items = [
                (i, tuple(sorted(s)))
                for i, graph in enumerate(ctx.atlas)
                for s in removal_family(graph, b)
            ]

            def leq(a, bb):
                (i, s), (j, t) = a, bb
                sset, tset = frozenset(s), frozenset(t)
                return any(
                    pull_edges(gm, tset, b) <= sset
                    for gm in ctx.pairs(i, j)
                )

            def rank(a):
                return 3 * g - 3 - ctx.atlas[a[0]].edge_count + genus(
                    ctx.atlas[a[0]], frozenset(a[1])
                )

            pairs = ctx.cap(
                [(x, y) for x in items for y in items if x != y], 60
            )
            for x, y in pairs:
                down, up = leq(x, y), leq(y, x)
                run.check(
                    not (down and up),
                    "the removal pair order is antisymmetric",
                    f"b={b} {x} vs {y}",
                )
                if down:
                    run.check(
                        rank(x) < rank(y),
                        "the universal rank strictly increases upward",
                        f"b={b} {x} < {y}",
                    )
            triples = ctx.cap(
                [
                    (x, y, z)
                    for x in items
                    for y in items
                    for z in items
                    if x != y and y != z
                ],
                40,
            )
            for x, y, z in triples:
                if leq(x, y) and leq(y, z):
                    run.check(
                        leq(x, z),
                        "the removal pair order is transitive",
                        f"b={b} {x} <= {y} <= {z}",
                    )


def _suite_propOg(ctx: _Ctx, run: _Run):
    g = ctx.genus
    edgeless = next(
        i for i, h in enumerate(ctx.atlas) if h.edge_count == 0
    )
    for b in ctx.bs:
        inst = f"genus {g} b={b}"
        top = (edgeless, (), (g - 1 + b,))
        if not ctx.full:
            for i in ctx.cap(range(len(ctx.atlas)), 4):
                graph = ctx.atlas[i]
                opbar, _ = build_OPbar(graph, b)
                for s_tup, d in ctx.cap(opbar.labels, 6):
                    image = push_class(
                        ctx.pairs(i, edgeless)[0], frozenset(s_tup), d, b
                    )
                    run.check(
                        image == (frozenset(), top[2]),
                        "every class pushes onto the top stratum",
                        f"{inst} {_gname(i, graph)} class={(s_tup, d)}",
                        witness=str(image),
                    )
            continue
        try:
            og = build_OPg(ctx.atlas, b)
        except PosetError as exc:
            run.check(False, "the genus-level classes form a poset", inst, exc)
            continue
        run.check(True, "the genus-level classes form a poset", inst)
        run.check(
            og.is_graded(),
            "the genus-level classes are graded by the universal rank",
            inst,
        )
        ag = build_Ag(ctx.atlas, b)
        ag_index = {lab: k for k, lab in enumerate(ag.labels)}
        run.check(
            is_quotient_map(
                [ag_index[(lab[0], lab[1])] for lab in og.labels], og, ag
            ),
            "forgetting the divisor is a poset quotient onto the removal "
            "pairs",
            inst,
        )
        sg = build_Sg(ctx.atlas)
        run.check(
            is_quotient_map([lab[0] for lab in og.labels], og, sg),
            "forgetting everything but the graph is a poset quotient",
            inst,
        )
        for i, graph in enumerate(ctx.atlas):
            opbar, _ = build_OPbar(graph, b)
            fiber = [k for k, lab in enumerate(og.labels) if lab[0] == i]
            match = len(fiber) == opbar.size and all(
                bool(og.leq[x, y])
                == opbar.leq_labels(
                    (og.labels[x][1], og.labels[x][2]),
                    (og.labels[y][1], og.labels[y][2]),
                )
                for x in fiber
                for y in fiber
            )
            run.check(
                match,
                "the fiber over a graph is its own class poset",
                f"{inst} {_gname(i, graph)}",
            )
        top_index = og.labels.index(top)
        run.check(
            bool(og.leq[:, top_index].all()),
            "every class sits below the top stratum",
            inst,
        )
        if g == 2 and b == 0:
            theta = ctx.atlas.index(Graph((0, 0), ((0, 1), (0, 1), (0, 1))))
            run.check(
                sum(1 for lab in og.labels if lab[0] == theta) == 6,
                "the triple edge contributes six classes",
                inst,
                witness=str(
                    [lab for lab in og.labels if lab[0] == theta]
                ),
            )


def _suite_cOP(ctx: _Ctx, run: _Run):
    g = ctx.genus
    for b in ctx.bs:
        inst = f"genus {g} b={b}"
        for i in ctx.cap(range(len(ctx.atlas)), 5):
            graph = ctx.atlas[i]
            bad = ""
            for alpha in automorphisms(graph):
                ctr = iso_as_contraction(alpha)
                for s in ctx.cap(removal_family(graph, b), 4):
                    for o in ctx.cap(
                        list(enumerate_admissible(graph, s, b)), 6
                    ):
                        moved = push_orientation(ctr, o)
                        permuted = [0] * graph.vertex_count
                        for z, value in enumerate(divisor_of(o)):
                            permuted[alpha.vertex_map[z]] = value
                        if divisor_of(moved) != tuple(permuted) or not (
                            is_admissible(moved)
                        ):
                            bad = f"alpha={alpha.vertex_map} O={op_label(o)}"
                            break
                    if bad:
                        break
                if bad:
                    break
            run.check(
                not bad,
                "relabeling acts on admissible orientations through the "
                "divisor",
                f"{inst} {_gname(i, graph)}",
                witness=bad,
            )
        if not ctx.full:
            continue
        og = build_OPg(ctx.atlas, b)
        try:
            quotient, proj = conjugacy_quotient(og, ctx.atlas)
        except PosetError as exc:
            run.check(
                False, "conjugation is compatible with the order", inst, exc
            )
            continue
        run.check(True, "conjugation is compatible with the order", inst)
        run.check(
            quotient.is_graded(),
            "the conjugation quotient is graded",
            inst,
        )
        run.check(
            is_quotient_map(proj, og, quotient),
            "conjugating is a poset quotient",
            inst,
        )
        parent = list(range(og.size))

        def root(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        index_of = {lab: k for k, lab in enumerate(og.labels)}
        for k, (i, s, d) in enumerate(og.labels):
            for alpha in automorphisms(ctx.atlas[i]):
                s_image = tuple(sorted(alpha.edge_map[e] for e in s))
                d_image = [0] * ctx.atlas[i].vertex_count
                for z, value in enumerate(d):
                    d_image[alpha.vertex_map[z]] = value
                other = index_of[(i, s_image, tuple(d_image))]
                ra, rb = root(k), root(other)
                if ra != rb:
                    parent[ra] = rb
        slow = {}
        for k in range(og.size):
            slow.setdefault(root(k), set()).add(k)
        fast = {}
        for k, c in enumerate(proj):
            fast.setdefault(c, set()).add(k)
        run.check(
            sorted(map(sorted, slow.values()))
            == sorted(map(sorted, fast.values())),
            "orbit partition matches the canonical-key partition",
            inst,
        )
        sg = build_Sg(ctx.atlas)
        class_graph = [None] * quotient.size
        for k, c in enumerate(proj):
            class_graph[c] = og.labels[k][0]
        run.check(
            is_quotient_map(class_graph, quotient, sg),
            "forgetting down to the graph respects conjugation",
            inst,
        )
        report = stratification_report(ctx.atlas, b)
        counts = {}
        for r in quotient.ranks:
            counts[str(r)] = counts.get(str(r), 0) + 1
        run.check(
            report["universal"]["elements"] == quotient.size
            and report["universal"]["rank_counts"] == counts,
            "the stratification table matches the conjugation quotient",
            inst,
        )
        run.check(
            all(
                len(entry["strata"])
                == build_OPbar(ctx.atlas[entry["index"]], b)[0].size
                for entry in report["per_graph"]
            ),
            "the per-graph strata enumerate the class poset",
            inst,
        )
        if g == 2 and b == 0:
            theta = ctx.atlas.index(Graph((0, 0), ((0, 1), (0, 1), (0, 1))))
            orbit = {
                proj[k]
                for k, lab in enumerate(og.labels)
                if lab[0] == theta and lab[1] == ()
            }
            run.check(
                len(orbit) == 1,
                "the two full-carrier classes of the triple edge are "
                "conjugate",
                inst,
                witness=str(orbit),
            )


# ---------------------------------------------------------------------------
# subdivision and counterexample suites


def _suite_exclm(ctx: _Ctx, run: _Run):
    pool = [
        (i, b, s)
        for i, graph in enumerate(ctx.atlas)
        for b in ctx.bs
        for s in removal_family(graph, b)
    ]
    for i, b, s in ctx.cap(pool, 30):
        graph = ctx.atlas[i]
        inst = f"{_gname(i, graph)} b={b} S={sorted(s)}"
        carrier = delete_edges(graph, s)
        hat_graph, hat = subdivide(graph, s)
        for d in ctx.cap(sigma(carrier, b), 6):
            run.check(
                is_stable_divisor(carrier, d, b),
                "enumerated divisors are stable",
                f"{inst} d={d}",
            )
            dh = hat_divisor(d, hat)
            run.check(
                degree(dh) == genus(graph) - 1 + b,
                "the extended divisor always has total degree g - 1 + b",
                f"{inst} d={d}",
                witness=str(degree(dh)),
            )
            bad = ""
            for choice, delta in collapse_choices(hat_graph, hat):
                lhs = push_divisor(delta, dh)
                corr = correction_divisor(
                    delta, frozenset(hat_graph.all_edges())
                )
                rhs = tuple(x + c for x, c in zip(d, corr))
                if lhs != rhs:
                    bad = f"choice={choice}: {lhs} != {rhs}"
                    break
            run.check(
                not bad,
                "every collapse returns the divisor plus its correction",
                f"{inst} d={d}",
                witness=bad,
            )
    eq_pool = [
        (i, b, s, e)
        for i, graph in enumerate(ctx.atlas)
        for b in ctx.bs
        for s in removal_family(graph, b)
        for e in sorted(graph.all_edges())
    ]
    for i, b, s, e in ctx.cap(eq_pool, 40):
        graph = ctx.atlas[i]
        inst = f"{_gname(i, graph)} b={b} S={sorted(s)} S0=[{e}]"
        carrier = delete_edges(graph, s)
        (
            hat_graph,
            hat,
            hat_target,
            target_hat,
            lifted,
            vmap,
        ) = hat_contraction(graph, s, {e})
        _, gamma = contract(graph, {e})
        for d in ctx.cap(sigma(carrier, b), 3):
            blocks = push_divisor(lifted, hat_divisor(d, hat))
            moved = [0] * hat_target.vertex_count
            for block, value in enumerate(blocks):
                moved[vmap[block]] = value
            pushed = tuple(
                x + c
                for x, c in zip(
                    push_divisor(gamma, d), correction_divisor(gamma, s)
                )
            )
            run.check(
                tuple(moved) == hat_divisor(pushed, target_hat),
                "extending the divisor commutes with single-edge contraction",
                f"{inst} d={d}",
                witness=f"{tuple(moved)} != {hat_divisor(pushed, target_hat)}",
            )


def _suite_remark_0e1(ctx: _Ctx, run: _Run):
    pool = [
        (i, s)
        for i, graph in enumerate(ctx.atlas)
        for s in removal_family(graph, 0)
        if is_connected(graph, s)
    ]
    for i, s in ctx.cap(pool, 20):
        graph = ctx.atlas[i]
        inst = f"{_gname(i, graph)} S={sorted(s)}"
        kept = sorted(graph.all_edges() - s)
        zeros = list(enumerate_admissible(graph, s, 0))
        images = {}
        for o in zeros:
            for pos, e in enumerate(kept):
                states = list(o.states)
                states[pos] = BIORIENTED
                oe = Orientation(graph, s, tuple(states), 1)
                run.check(
                    is_rooted(oe, "cuts"),
                    "biorienting one edge of a totally cyclic orientation "
                    "gives a rooted orientation",
                    f"{inst} O={op_label(o)[1]} e={e}",
                )
                images.setdefault(op_label(oe), []).append(
                    (op_label(o)[1], e)
                )
        if not zeros or not kept:
            continue
        pairs = len(zeros) * len(kept)
        rooted = sum(1 for _ in enumerate_admissible(graph, s, 1))
        collision = next(
            (
                (lab, srcs)
                for lab, srcs in sorted(images.items())
                if len(srcs) > 1
            ),
            None,
        )
        text = (
            f"{inst}: biorienting maps {pairs} pairs onto "
            f"{len(images)} of {rooted} rooted orientations"
        )
        if collision:
            lab, srcs = collision
            text += (
                f"; not injective, e.g. {srcs[0][0]} and {srcs[1][0]} both "
                f"give {lab[1]} at edge {srcs[0][1]}"
            )
        if collision or len(images) < rooted:
            run.find(text)


def _suite_noinjdeg(ctx: _Ctx, run: _Run):
    shared_any = False
    for i in ctx.cap(range(len(ctx.atlas)), 10):
        graph = ctx.atlas[i]
        by_divisor: dict[tuple, list] = {}
        for s in removal_family(graph, 0):
            classes = equivalence_classes(enumerate_admissible(graph, s, 0))
            run.check(
                len({d for d, _ in classes}) == len(classes),
                "within one carrier, distinct classes have distinct divisors",
                f"{_gname(i, graph)} S={sorted(s)}",
            )
            for d, _ in classes:
                by_divisor.setdefault(d, []).append(tuple(sorted(s)))
        for d, carriers in sorted(by_divisor.items()):
            if len(set(carriers)) > 1:
                shared_any = True
                run.find(
                    f"{_gname(i, graph)}: divisor {d} is shared by "
                    f"inequivalent classes over removals "
                    f"{sorted(set(carriers))[:4]}"
                )
    if ctx.genus == 2:
        run.check(
            shared_any,
            "at genus 2 some divisor appears over two different removals",
            "atlas sweep",
        )


_SUITES = {
    "lm0": _suite_lm0,
    "lmO1": _suite_lmO1,
    "lmfree": _suite_lmfree,
    "F1-LmO": _suite_existence,
    "degor": _suite_degor,
    "quoto-poo": _suite_quoto_poo,
    "rkBP": _suite_rkBP,
    "ftriv": _suite_ftriv,
    "fupr": _suite_fupr,
    "fprop": _suite_fprop,
    "fthm": _suite_fthm,
    "fdiag-bricor": _suite_fdiag_bricor,
    "rkSg": _suite_rkSg,
    "Bgq": _suite_Bgq,
    "propOg": _suite_propOg,
    "cOP": _suite_cOP,
    "exclm": _suite_exclm,
    "remark-0e1": _suite_remark_0e1,
    "noinjdeg": _suite_noinjdeg,
}


def _bs(b) -> tuple[int, ...]:
    if b == "both":
        return (0, 1)
    if b in (0, 1, "0", "1"):
        return (int(b),)
    raise ValueError(f"b must be 0, 1, or 'both', not {b!r}")


def run_suite(
    suite: str,
    genus: int,
    b="both",
    budget_secs: float = 0.0,
    threads: int = 1,
) -> SuiteReport:
    """Run one suite (or 'all') over the atlas of the given genus.

    Genus 2 always sweeps exhaustively; higher genera sample with a fixed
    seed unless budget_secs reaches FULL_BUDGET_SECS.
    """
    if genus < 2:
        raise ValueError("stable graphs need genus >= 2")
    bs = _bs(b)
    if suite == "all":
        return _run_all(genus, bs, budget_secs, threads)
    if suite not in _SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    full = genus <= 2 or budget_secs >= FULL_BUDGET_SECS
    ctx = _Ctx(genus, bs, full)
    run = _Run()
    start = time.monotonic()
    try:
        _SUITES[suite](ctx, run)
    except Exception as exc:  # noqa: BLE001 - a crash is a failed instance
        run.check(False, "the suite ran to completion", suite, repr(exc))
    elapsed = int((time.monotonic() - start) * 1000)
    return SuiteReport(
        suite=suite,
        instances=run.instances,
        failures=run.failures,
        findings=run.findings,
        elapsed_ms=elapsed,
    )


def _run_all(genus, bs, budget_secs, threads) -> SuiteReport:
    b = "both" if bs == (0, 1) else bs[0]
    start = time.monotonic()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(
                pool.map(
                    lambda name: run_suite(name, genus, b, budget_secs),
                    SUITE_IDS,
                )
            )
    else:
        reports = [
            run_suite(name, genus, b, budget_secs) for name in SUITE_IDS
        ]
    merged = SuiteReport(suite="all", instances=0)
    for rep in reports:
        merged.instances += rep.instances
        merged.failures.extend(
            (f"{rep.suite}: {stmt}", inst, wit)
            for stmt, inst, wit in rep.failures
        )
        merged.findings.extend(f"{rep.suite}: {text}" for text in rep.findings)
    merged.elapsed_ms = int((time.monotonic() - start) * 1000)
    return merged
