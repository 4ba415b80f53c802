import collections

from orposets import (
    Graph,
    automorphisms,
    build_Ag,
    build_OPg,
    build_Sg,
    canonical_graph,
    conjugacy_quotient,
    contraction_table,
    contractions_between,
    enumerate_stable_graphs,
    find_iso,
    genus,
    is_stable_graph,
    isomorphic,
    isomorphisms,
    stable_graphs_slow,
    stratification_report,
    subset_genus,
)

GENUS2_ATLAS = (
    Graph((2,)),
    Graph((1,), ((0, 0),)),
    Graph((1, 1), ((0, 1),)),
    Graph((0,), ((0, 0), (0, 0))),
    Graph((0, 1), ((0, 0), (0, 1))),
    Graph((0, 0), ((0, 0), (0, 1), (1, 1))),
    Graph((0, 0), ((0, 1), (0, 1), (0, 1))),
)


def test_genus2_atlas_is_exactly_these_seven():
    assert enumerate_stable_graphs(2) == GENUS2_ATLAS


def test_atlas_agrees_with_the_unpruned_generator():
    key = lambda g: (g.weights, g.edges)
    fast = sorted((canonical_graph(g) for g in enumerate_stable_graphs(2)), key=key)
    slow = sorted((canonical_graph(g) for g in stable_graphs_slow(2)), key=key)
    assert fast == slow


def test_automorphism_orders_frozen():
    orders = [len(automorphisms(g)) for g in enumerate_stable_graphs(2)]
    assert orders == [1, 2, 2, 8, 2, 8, 12]


def test_every_atlas_member_is_stable_of_the_right_genus():
    for g_target in (2, 3):
        for graph in enumerate_stable_graphs(g_target):
            assert genus(graph) == g_target
            assert is_stable_graph(graph, g_target)


def test_genus3_atlas_count_and_edge_histogram():
    atlas = enumerate_stable_graphs(3)
    assert len(atlas) == 42
    hist = sorted(collections.Counter(g.edge_count for g in atlas).items())
    assert hist == [(0, 1), (1, 2), (2, 5), (3, 9), (4, 12), (5, 8), (6, 5)]


def test_isomorphism_detection():
    theta = GENUS2_ATLAS[6]
    relabeled = Graph((0, 0), ((1, 0), (0, 1), (1, 0)))
    assert isomorphic(theta, relabeled)
    assert find_iso(theta, relabeled) is not None
    assert len(isomorphisms(theta, relabeled)) == 12
    assert not isomorphic(theta, GENUS2_ATLAS[5])
    assert canonical_graph(relabeled) == theta


def test_contraction_table_frozen_arrow_count():
    atlas = enumerate_stable_graphs(2)
    table = contraction_table(atlas)
    assert sum(len(v) for v in table.values()) == 69
    for (i, j), arrows in table.items():
        for gamma in arrows:
            assert gamma.source == atlas[i]
            assert gamma.target == atlas[j]
        if i == j:
            # only the identity relates a graph to itself
            assert len(arrows) == 1 and not arrows[0].contracted


def test_contractions_between_theta_and_the_double_loop():
    theta, double_loop = GENUS2_ATLAS[6], GENUS2_ATLAS[3]
    arrows = contractions_between(theta, double_loop)
    # one of three parallel edges, times the eight target automorphisms
    assert len(arrows) == 24
    assert contractions_between(double_loop, theta) == ()


def test_graph_poset_ranks():
    atlas = enumerate_stable_graphs(2)
    sg = build_Sg(atlas)
    assert tuple(sg.ranks) == (3, 2, 2, 1, 1, 0, 0)
    assert sg.is_graded()
    # the edgeless graph is the unique top
    assert [sg.labels[i] for i in sg.maximal_elements()] == [0]


def test_genus_level_removal_poset_sizes():
    atlas = enumerate_stable_graphs(2)
    assert build_Ag(atlas, 0).size == 19
    assert build_Ag(atlas, 1).size == 21


def test_genus_level_class_poset_and_quotient_frozen():
    # per-rank tables double-checked against an explicit orbit partition
    atlas = enumerate_stable_graphs(2)
    opg = build_OPg(atlas, 0)
    assert opg.size == 20
    quot = conjugacy_quotient(opg, atlas)[0]
    assert quot.size == 15
    hist = sorted(collections.Counter(quot.ranks).items())
    assert hist == [(0, 2), (1, 3), (2, 4), (3, 3), (4, 2), (5, 1)]

    opg = build_OPg(atlas, 1)
    assert opg.size == 26
    quot = conjugacy_quotient(opg, atlas)[0]
    assert quot.size == 16
    hist = sorted(collections.Counter(quot.ranks).items())
    assert hist == [(0, 2), (1, 3), (2, 5), (3, 3), (4, 2), (5, 1)]


def test_stratification_dimensions():
    atlas = enumerate_stable_graphs(2)
    report = stratification_report(atlas, 0)
    for entry in report["per_graph"]:
        graph = atlas[entry["index"]]
        for stratum in entry["strata"]:
            s = frozenset(stratum["removed"])
            assert stratum["dim"] == genus(graph, s)
            assert (
                stratum["universal_dim"]
                == 3 * 2 - 3 - graph.edge_count + genus(graph, s)
            )
