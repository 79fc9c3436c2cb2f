from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthkit.enumerate import connected_graphs
from orthkit.generators import complete_graph, path_graph, triangle_chain
from orthkit.graph import SimpleGraph, is_isomorphic, line_graph
from orthkit.layout import (
    LayoutError,
    LayoutTree,
    OrthodoxRepresentation,
    TreeMetric,
    ViolationKind,
    combine_layouts,
    join_representations,
    layout_of_representation,
    normalize_representation,
    orthodox_representation,
    suppress_degree_two,
    validate_layout,
    validate_representation,
)
from orthkit.recognize import bruteforce_layout


def double_star() -> LayoutTree:
    tree = SimpleGraph((), [("p", "q"), ("p", "0"), ("p", "1"), ("q", "2"), ("q", "3")])
    return LayoutTree.identity(tree)


def star(leaves) -> LayoutTree:
    return LayoutTree.identity(SimpleGraph((), [("c", x) for x in leaves]))


def _random_tree(rng: random.Random, n: int) -> SimpleGraph:
    edges = [(str(i), str(rng.randrange(i))) for i in range(1, n)]
    return SimpleGraph([str(i) for i in range(n)], edges)


# ---------------------------------------------------------------------------
# Shared-node count
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("seed", range(20))
def test_shared_nodes_matches_explicit_paths(seed):
    rng = random.Random(seed)
    T = _random_tree(rng, rng.randint(2, 25))
    nxt = nx.Graph(list(T.edges))
    nxt.add_nodes_from(T.vertices)
    metric = TreeMetric(T)
    vs = list(T.vertices)
    for _ in range(60):
        a, b, c, d = (rng.choice(vs) for _ in range(4))
        explicit = set(nx.shortest_path(nxt, a, b)) & set(nx.shortest_path(nxt, c, d))
        assert metric.shared(a, b, c, d) == len(explicit)


# ---------------------------------------------------------------------------
# validate_layout
# ---------------------------------------------------------------------------


def test_double_star_lays_out_k4_at_t3_only():
    K4 = complete_graph(4)
    assert validate_layout(double_star(), K4, 3, 3) is None
    bad = validate_layout(double_star(), K4, 3, 2)
    assert bad is not None and bad.kind is ViolationKind.INTERSECTION_TOO_LARGE
    assert bad.witness[2] == 2


def test_star_lays_out_triangle():
    assert validate_layout(star("012"), complete_graph(3), 3, 2) is None


def test_validate_layout_reports_each_kind():
    K4 = complete_graph(4)
    T = double_star()
    missing = LayoutTree(T.tree, {x: v for x, v in T.leaf_map.items() if x != "3"})
    assert validate_layout(missing, K4, 3, 3).kind is ViolationKind.BIJECTION_BROKEN
    assert validate_layout(star("0123"), K4, 3, 3).kind is ViolationKind.DEGREE_BOUND
    cyc = LayoutTree(SimpleGraph((), [("a", "b"), ("b", "c"), ("c", "a")]), {})
    assert validate_layout(cyc, K4, 3, 3).kind is ViolationKind.NOT_A_TREE


# ---------------------------------------------------------------------------
# suppress_degree_two
# ---------------------------------------------------------------------------


def test_suppress_examples():
    T = LayoutTree.identity(SimpleGraph((), [("a", "b"), ("b", "c")]))
    assert suppress_degree_two(T).tree.edges == (("a", "c"),)
    cat = LayoutTree.identity(SimpleGraph((), [("a", "p"), ("p", "q"), ("q", "r"), ("r", "b"), ("q", "c")]))
    out = suppress_degree_two(cat)
    assert set(out.tree.edges) == {("a", "q"), ("b", "q"), ("c", "q")}
    assert suppress_degree_two(double_star()).tree == double_star().tree


def test_suppressed_cubic_tree_has_order_2n_minus_2():
    rng = random.Random(5)
    for _ in range(20):
        T = _random_tree(rng, rng.randint(3, 30))
        L = LayoutTree.identity(T)
        out = suppress_degree_two(L)
        if all(out.tree.degree(x) in (1, 3) for x in out.tree.vertices):
            assert out.tree.order == 2 * len(out.leaf_map) - 2


# ---------------------------------------------------------------------------
# Representations
# ---------------------------------------------------------------------------


def test_orthodox_representation_of_k4_at_t3():
    R = orthodox_representation(double_star(), complete_graph(4), 3, 3)
    assert R.host.order == 6 + 4
    G = line_graph(complete_graph(4))
    assert validate_representation(R, G, 3, 3) is None
    metric = TreeMetric(R.host)
    assert metric.shared(*R.paths["0-1"], *R.paths["0-2"]) == 3
    bad = validate_representation(R, G, 3, 4)
    assert bad.kind is ViolationKind.INTERSECTION_TOO_SMALL


@pytest.mark.parametrize("t", [1, 2])
def test_small_t_keeps_host(t):
    R = orthodox_representation(star("012"), complete_graph(3), t, 3)
    assert R.host == star("012").tree


def test_p4_example():
    H = SimpleGraph((), [("a", "b"), ("b", "c"), ("c", "d")])
    T = LayoutTree.identity(SimpleGraph((), [("p", "a"), ("p", "b"), ("p", "q"), ("q", "c"), ("q", "d")]))
    R = orthodox_representation(T, H, 2, 3)
    metric = TreeMetric(R.host)
    assert metric.shared(*R.paths["a-b"], *R.paths["c-d"]) == 0
    assert metric.shared(*R.paths["a-b"], *R.paths["b-c"]) >= 2
    assert validate_representation(R, line_graph(H), 3, 2) is None


def test_invalid_layout_raises_with_violation():
    with pytest.raises(LayoutError) as err:
        orthodox_representation(double_star(), complete_graph(4), 2, 3)
    assert err.value.violation.kind is ViolationKind.INTERSECTION_TOO_LARGE


def test_validate_representation_leaf_condition_and_keys():
    R = orthodox_representation(double_star(), complete_graph(4), 3, 3)
    G = line_graph(complete_graph(4))
    moved = OrthodoxRepresentation(R.host, {**R.paths, "0-1": ("p", "1")}, 3, 3)
    assert validate_representation(moved, G, 3, 3).kind is ViolationKind.LEAF_CONDITION
    short = OrthodoxRepresentation(R.host, {k: v for k, v in R.paths.items() if k != "0-1"}, 3, 3)
    assert validate_representation(short, G, 3, 3).kind is ViolationKind.BIJECTION_BROKEN


def test_layout_of_representation_round_trip():
    R = orthodox_representation(double_star(), complete_graph(4), 3, 3)
    T, H = layout_of_representation(R)
    assert is_isomorphic(H, complete_graph(4))
    assert validate_layout(T, H, 3, 3) is None
    single = OrthodoxRepresentation(SimpleGraph((), [("a", "b")]), {"u": ("a", "b")})
    assert layout_of_representation(single)[1].edges == (("a", "b"),)
    twins = OrthodoxRepresentation(SimpleGraph((), [("a", "b")]), {"u": ("a", "b"), "v": ("b", "a")})
    with pytest.raises(ValueError):
        layout_of_representation(twins)


def test_normalize_single_leaf_paths():
    host = SimpleGraph((), [("x", "m"), ("m", "y"), ("m", "z")])
    R = OrthodoxRepresentation(host, {"u": ("x", "x"), "v": ("x", "y"), "w": ("z", "z")}, 1, 3)
    G = SimpleGraph(["w"], [("u", "v")])
    assert validate_representation(R, G, 3, 1) is None
    N = normalize_representation(R)
    assert N.is_normalized()
    assert N.host.order == host.order + 4
    assert validate_representation(N, G, 3, 1) is None
    assert normalize_representation(N) is N
    twins = OrthodoxRepresentation(host, {"u": ("x", "x"), "v": ("x", "x")}, 1, 3)
    N2 = normalize_representation(twins)
    assert N2.paths["u"] == N2.paths["v"]
    assert validate_representation(N2, SimpleGraph((), [("u", "v")]), 3, 1) is None


def test_join_representations():
    edge = OrthodoxRepresentation(SimpleGraph((), [("a", "b")]), {"u": ("a", "b")}, 2, 3)
    J = join_representations(edge, edge)
    assert validate_representation(J, SimpleGraph(J.paths), 3, 2) is None
    assert len(J.paths) == 2
    lk4 = orthodox_representation(double_star(), complete_graph(4), 3, 3)
    p4 = SimpleGraph((), [("a", "b"), ("b", "c"), ("c", "d")])
    tp4 = LayoutTree.identity(SimpleGraph((), [("p", "a"), ("p", "b"), ("p", "q"), ("q", "c"), ("q", "d")]))
    lp4 = orthodox_representation(tp4, p4, 3, 3)
    J = join_representations(lk4, lp4)  # host labels p, q collide: everything gets prefixed
    g1 = line_graph(complete_graph(4))
    g2 = line_graph(p4)
    union = g1.relabel({v: "1." + v for v in g1.vertices}).disjoint_union(
        g2.relabel({v: "2." + v for v in g2.vertices})
    )
    assert validate_representation(J, union, 3, 3) is None
    with pytest.raises(ValueError):
        join_representations(OrthodoxRepresentation(edge.host, edge.paths, 2, 2), edge.__class__(edge.host, edge.paths, 2, 2))


def test_sufficiency_and_necessity_on_random_layouts():
    rng = random.Random(11)
    checked = 0
    for _ in range(150):
        T = suppress_degree_two(LayoutTree.identity(_random_tree(rng, rng.randint(3, 14))))
        leaves = sorted(T.leaf_map)
        H = SimpleGraph(leaves, [e for e in combinations(leaves, 2) if rng.random() < 0.35])
        h = max(3, T.tree.max_degree())
        t = rng.randint(1, 5)
        if H.size == 0 or validate_layout(T, H, h, t) is not None:
            continue
        R = orthodox_representation(T, H, t, h)
        G = line_graph(H)
        assert validate_representation(R, G, h, t) is None
        T2, H2 = layout_of_representation(R)
        assert validate_layout(T2, H2, h, t) is None
        assert H2.size == H.size
        checked += 1
    assert checked >= 30


# ---------------------------------------------------------------------------
# combine_layouts
# ---------------------------------------------------------------------------


def test_combine_two_paths_into_p4():
    H = path_graph(4)  # A = {0, 1}, B = {2, 3}, a = 1, b = 2
    TA = star(["0", "1", "2"])
    TB = LayoutTree.identity(SimpleGraph((), [("d", "1"), ("d", "2"), ("d", "3")]))
    out = combine_layouts(TA, TB, "1", "2", H)
    assert validate_layout(out, H, 3, 1) is None
    assert sorted(out.leaf_map.values()) == ["0", "1", "2", "3"]


def test_combine_two_triangles_sharing_a_vertex():
    H = triangle_chain(2)  # v0 v1 v2 | v2 v3 v4
    A = {"v0", "v1", "v2"}
    TA = LayoutTree.identity(SimpleGraph((), [("x", "v0"), ("x", "v1"), ("x", "y"), ("y", "v2"), ("y", "v3")]))
    TB = LayoutTree.identity(SimpleGraph((), [("c2", "v2"), ("c2", "v3"), ("c2", "v4")]))
    assert validate_layout(TA, H.subgraph(A | {"v3"}), 3, 1) is None
    out = combine_layouts(TA, TB, "v2", "v3", H)
    assert validate_layout(out, H, 3, 1) is None


def test_combine_rejects_cross_edge_missing_a():
    H = SimpleGraph((), [("a", "b"), ("c", "d"), ("a", "c")])
    TA = LayoutTree.identity(SimpleGraph((), [("k", "a"), ("k", "b"), ("k", "c")]))
    TB = LayoutTree.identity(SimpleGraph((), [("m", "a"), ("m", "b"), ("m", "d")]))
    # A = {a, c}, B = {b, d}; edge c-d crosses without touching a
    with pytest.raises(ValueError, match="cross edge"):
        combine_layouts(TA, TB, "a", "b", H)


def _gluing_splits(H: SimpleGraph):
    vs = list(H.vertices)
    for r in range(1, len(vs)):
        for A in combinations(vs, r):
            A = set(A)
            B = set(vs) - A
            for a in sorted(A):
                cross = [(u, v) for u, v in H.edges if (u in A) != (v in A)]
                if not cross or any(a not in e for e in cross):
                    continue
                for b in sorted(H.neighbors(a) & B):
                    yield A, B, a, b


@pytest.mark.parametrize("ht", [(3, 1), (3, 2), (3, 3)])
def test_gluing_both_directions_by_bruteforce(ht):
    h, t = ht
    for n in range(3, 6):
        for H in connected_graphs(n):
            whole = bruteforce_layout(H, h, t) is not None
            for A, B, a, b in _gluing_splits(H):
                TA = bruteforce_layout(H.subgraph(A | {b}), h, t)
                TB = bruteforce_layout(H.subgraph(B | {a}), h, t)
                assert whole == (TA is not None and TB is not None)
                if whole:
                    assert validate_layout(combine_layouts(TA, TB, a, b, H), H, h, t) is None


# ---------------------------------------------------------------------------
# Property: validity is monotone and survives suppression
# ---------------------------------------------------------------------------


@st.composite
def _layout_instances(draw):
    n = draw(st.integers(4, 12))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    tree = SimpleGraph([str(i) for i in range(n)], [(str(i), str(p)) for i, p in zip(range(1, n), parents)])
    leaves = [x for x in tree.vertices if tree.degree(x) == 1]
    T = LayoutTree(tree, {x: f"v{x}" for x in leaves})
    vs = sorted(T.leaf_map.values())
    pairs = list(combinations(vs, 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    H = SimpleGraph(vs, chosen)
    return T, H, draw(st.integers(3, 5)), draw(st.integers(1, 4))


@settings(max_examples=150, deadline=None)
@given(_layout_instances())
def test_validity_is_monotone_and_survives_suppression(inst):
    T, H, h, t = inst
    if validate_layout(T, H, h, t) is None:
        assert validate_layout(T, H, h + 1, t) is None
        assert validate_layout(T, H, h, t + 1) is None
        assert validate_layout(suppress_degree_two(T), H, h, t) is None
