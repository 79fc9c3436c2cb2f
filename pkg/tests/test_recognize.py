from __future__ import annotations

import random

import networkx as nx
import pytest

from orthkit.enumerate import connected_graphs
from orthkit.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    k5_minus_matching,
    paw_graph,
    path_graph,
    petersen_graph,
    triangle_chain,
)
from orthkit.graph import SimpleGraph, blocks, line_graph
from orthkit.layout import TreeMetric, validate_layout, validate_representation
from orthkit.recognize import (
    SeparatorSplit,
    bruteforce_layout,
    build_layout_blocks,
    recognize,
    recognize_orth322,
    recognize_orth_h2t,
    recursion_threshold,
    separator_split,
)
from orthkit.report import Verdict

MEMBER, NON_MEMBER, INCONCLUSIVE = Verdict.MEMBER, Verdict.NON_MEMBER, Verdict.INCONCLUSIVE


def _random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    vs = [str(i) for i in range(n)]
    return SimpleGraph(vs, [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if rng.random() < p])


def _random_connected(rng: random.Random, n: int, p: float) -> SimpleGraph:
    while True:
        g = _random_graph(rng, n, p)
        if g.is_connected():
            return g


def _assert_certified(rep, G):
    assert rep.verdict is MEMBER
    assert validate_representation(rep.certificate, G, rep.h, rep.t) is None


# ---------------------------------------------------------------------------
# ORTH[3,2,2] by blocks
# ---------------------------------------------------------------------------


def test_p3_is_a_member():
    rep = recognize_orth322(path_graph(3))
    _assert_certified(rep, path_graph(3))


def test_c4_is_rejected_by_an_oversized_block():
    rep = recognize_orth322(cycle_graph(4))
    assert rep.verdict is NON_MEMBER and rep.obstruction.kind == "oversized-block"
    assert len(rep.obstruction.vertices) == 4
    root = rep.obstruction.graph
    assert frozenset(rep.obstruction.vertices) in blocks(root).blocks


def test_line_of_paw_is_a_member():
    G = line_graph(paw_graph())
    _assert_certified(recognize_orth322(G), G)


def test_twins_and_components_are_handled():
    G = complete_graph(5).disjoint_union(line_graph(paw_graph())).disjoint_union(SimpleGraph(["lone"]))
    rep = recognize_orth322(G)
    _assert_certified(rep, G)
    assert rep.certificate.host.max_degree() <= 3


def test_non_line_graph_gives_a_witness():
    claw = SimpleGraph((), [("c", "a"), ("c", "b"), ("c", "d")])
    rep = recognize_orth322(claw)
    assert rep.verdict is NON_MEMBER and rep.obstruction.kind == "not-line-graph"
    assert set(rep.obstruction.vertices) == {"a", "b", "c", "d"}


def test_empty_graph_is_a_member():
    rep = recognize(SimpleGraph(()), 3, 2)
    assert rep.verdict is MEMBER and rep.certificate.paths == {}


# ---------------------------------------------------------------------------
# build_layout_blocks
# ---------------------------------------------------------------------------


def test_block_layout_of_triangle_is_a_star():
    T = build_layout_blocks(complete_graph(3))
    assert T.tree.order == 4 and T.tree.max_degree() == 3


@pytest.mark.parametrize("H", [paw_graph(), triangle_chain(3), path_graph(6), complete_graph(2)],
                         ids=["paw", "chain3", "P6", "K2"])
def test_block_layout_validates_at_t1(H):
    T = build_layout_blocks(H)
    assert validate_layout(T, H, 3, 1) is None
    assert len(T.leaf_map) == H.order
    if H.order > 2:
        assert T.tree.order == 2 * H.order - 2


def test_block_layout_rejects_big_blocks():
    with pytest.raises(ValueError, match="order 4"):
        build_layout_blocks(cycle_graph(4))
    with pytest.raises(ValueError):
        build_layout_blocks(SimpleGraph(["a", "b"]))


# ---------------------------------------------------------------------------
# Separators
# ---------------------------------------------------------------------------


def test_separator_of_a_path():
    H = path_graph(10)
    s = separator_split(H, 3, 2)
    assert s is not None and s.check(H, 3, 2)
    assert {len(s.A), len(s.B)} <= {4, 5, 6} and len(s.X) <= 1


def test_separator_of_an_edge():
    H = complete_graph(2)
    s = separator_split(H, 3, 2)
    assert len(s.A) == len(s.B) == 1 and s.check(H, 3, 2)


def test_k7_has_no_split():
    assert separator_split(complete_graph(7), 3, 2) is None


def test_separator_errors_and_check():
    with pytest.raises(ValueError):
        separator_split(SimpleGraph(["a"]), 3, 2)
    H = path_graph(4)
    bad = SeparatorSplit(frozenset(), frozenset({"0", "2"}), frozenset({"1", "3"}))
    assert not bad.check(H, 3, 2)


@pytest.mark.parametrize("seed", range(25))
def test_split_found_whenever_a_layout_exists(seed):
    # a layout forces a split, so a missing split must mean no layout
    rng = random.Random(seed)
    H = _random_connected(rng, rng.randint(5, 8), 0.45)
    for h, t in ((3, 2), (4, 2), (3, 1)):
        s = separator_split(H, h, t)
        if s is None:
            assert bruteforce_layout(H, h, t) is None
        else:
            assert s.check(H, h, t)


# ---------------------------------------------------------------------------
# Exhaustive search
# ---------------------------------------------------------------------------


def test_bruteforce_complete_graphs_at_33():
    T = bruteforce_layout(complete_graph(4), 3, 3)
    assert T is not None and validate_layout(T, complete_graph(4), 3, 3) is None
    assert bruteforce_layout(complete_graph(5), 3, 3) is None
    assert bruteforce_layout(k5_minus_matching(), 3, 3) is None


def test_bruteforce_errors():
    with pytest.raises(ValueError):
        bruteforce_layout(path_graph(10), 3, 2)
    with pytest.raises(ValueError):
        bruteforce_layout(path_graph(3), 2, 2)
    assert bruteforce_layout(SimpleGraph(["a"]), 3, 2) is not None


@pytest.mark.parametrize("seed", range(30))
def test_bruteforce_monotone_in_h_and_t(seed):
    rng = random.Random(300 + seed)
    H = _random_connected(rng, rng.randint(3, 6), 0.5)
    for h, t in ((3, 1), (3, 2), (3, 3), (4, 2)):
        if bruteforce_layout(H, h, t) is not None:
            assert bruteforce_layout(H, h + 1, t) is not None
            assert bruteforce_layout(H, h, t + 1) is not None


# ---------------------------------------------------------------------------
# Separator recursion
# ---------------------------------------------------------------------------


def test_two_triangles_joined_by_a_path():
    H = SimpleGraph((), [("a", "b"), ("b", "c"), ("c", "a"), ("c", "p"), ("p", "q"), ("q", "d"),
                         ("d", "e"), ("e", "f"), ("f", "d")])
    G = line_graph(H)
    rep = recognize_orth_h2t(G, 3, 2)
    _assert_certified(rep, G)
    assert recognize_orth322(G).verdict is MEMBER


@pytest.mark.parametrize("h", [3, 4, 5])
def test_c4_at_t1_is_rejected_for_every_h(h):
    assert recognize_orth_h2t(cycle_graph(4), h, 1).verdict is NON_MEMBER


def test_c4_at_t2_depends_on_h():
    assert recognize_orth_h2t(cycle_graph(4), 3, 2).verdict is NON_MEMBER
    rep = recognize_orth_h2t(cycle_graph(4), 4, 2)
    _assert_certified(rep, cycle_graph(4))
    # the star on four leaves: opposite paths meet only in the centre
    host = SimpleGraph((), [("c", str(i)) for i in range(4)])
    m = TreeMetric(host)
    assert m.shared("0", "1", "2", "3") == 1 and m.shared("0", "1", "1", "2") == 2


def test_line_of_k4_at_t1_is_rejected():
    rep = recognize_orth_h2t(line_graph(complete_graph(4)), 3, 1)
    assert rep.verdict is NON_MEMBER


def test_h2t_argument_errors():
    with pytest.raises(ValueError, match="bruteforce_layout"):
        recognize_orth_h2t(path_graph(3), 3, 3)
    with pytest.raises(ValueError):
        recognize_orth_h2t(path_graph(3), 2, 2)


def test_recursion_threshold():
    assert recursion_threshold(3) == 7 and recursion_threshold(9) == 10


@pytest.mark.parametrize("seed", range(12))
def test_recursion_matches_bruteforce_on_larger_roots(seed):
    rng = random.Random(500 + seed)
    H = _random_connected(rng, rng.randint(8, 9), rng.choice([0.25, 0.35]))
    G = line_graph(H)
    for h, t in ((3, 2), (4, 2), (4, 1)):
        rep = recognize_orth_h2t(G, h, t)
        assert (rep.verdict is MEMBER) == (bruteforce_layout(H, h, t) is not None)
        if rep.verdict is MEMBER:
            assert validate_representation(rep.certificate, G, h, t) is None


def test_long_path_root_uses_the_recursion():
    H = path_graph(40)
    G = line_graph(H)
    rep = recognize_orth_h2t(G, 4, 2)
    _assert_certified(rep, G)
    assert any("base pieces" in line for line in rep.pipeline_log)


# ---------------------------------------------------------------------------
# Dispatcher
# ---------------------------------------------------------------------------


def test_degree_two_tables():
    _assert_certified(recognize(complete_graph(5), 2, 2), complete_graph(5))
    _assert_certified(recognize(path_graph(3), 2, 1), path_graph(3))
    _assert_certified(recognize(SimpleGraph(["a", "b"]), 2, 3), SimpleGraph(["a", "b"]))
    assert recognize(path_graph(3), 2, 2).verdict is NON_MEMBER
    assert recognize(path_graph(4), 2, 1).verdict is NON_MEMBER
    G = SimpleGraph((), [("a", "b"), ("b", "c"), ("a", "x"), ("x", "b")])  # twin-blown P3
    _assert_certified(recognize(G, 2, 1), G)


def test_degree_two_tables_match_bruteforce():
    # path hosts with two leaves: every path is l-l, r-r or l-r
    for n in range(1, 5):
        for G in connected_graphs(n) + [SimpleGraph(["0", "1"])]:
            G = G.relabel({v: str(v) for v in G.vertices})
            for t in (1, 2, 3):
                rep = recognize(G, 2, t)
                expected = _path_host_member(G, t)
                assert (rep.verdict is MEMBER) == expected, (G.edges, t)


def _path_host_member(G: SimpleGraph, t: int) -> bool:
    from itertools import product

    vs = list(G.vertices)
    # l-l and r-r share one node, l-r paths share the whole host (t nodes at least)
    shared = {("l", "l"): 1, ("r", "r"): 1, ("l", "r"): 0, ("lr", "lr"): max(2, t)}
    for choice in product(("l", "r", "lr"), repeat=len(vs)):
        ok = True
        for i, u in enumerate(vs):
            for j in range(i + 1, len(vs)):
                a, b = choice[i], choice[j]
                key = (a, b) if (a, b) in shared else (b, a)
                s = shared.get(key, 1)  # l or r against l-r
                if G.has_edge(u, vs[j]) != (s >= t and (a == b or "lr" in (a, b))):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def test_dispatcher_examples_at_t3():
    rep = recognize(line_graph(petersen_graph()), 3, 3)
    assert rep.verdict is NON_MEMBER and rep.obstruction.kind == "subdivision"
    G = line_graph(complete_graph(4))
    _assert_certified(recognize(G, 3, 3), G)
    assert recognize(G, 3, 2).verdict is NON_MEMBER
    assert recognize(line_graph(complete_graph(5)), 3, 3).verdict is NON_MEMBER


def test_dispatcher_complete_roots_follow_the_leaf_bound():
    G = line_graph(complete_graph(6))
    _assert_certified(recognize(G, 4, 3), G)
    assert recognize(line_graph(complete_graph(7)), 4, 3).verdict is NON_MEMBER
    G = line_graph(complete_graph(12))
    _assert_certified(recognize(G, 4, 4), G)


def test_dispatcher_open_regime_is_inconclusive():
    rep = recognize(line_graph(complete_bipartite(5, 5)), 4, 3)
    assert rep.verdict is INCONCLUSIVE and rep.obstruction.kind == "open-regime"


def test_dispatcher_small_blocks_certify_any_t():
    G = line_graph(triangle_chain(5))
    for h, t in ((3, 3), (5, 4), (4, 7)):
        _assert_certified(recognize(G, h, t), G)


def test_dispatcher_errors():
    with pytest.raises(ValueError):
        recognize(path_graph(3), 1, 2)
    with pytest.raises(ValueError):
        recognize(path_graph(3), 3, 0)


def test_h4_t2_never_borrows_the_h3_rule():
    # C4 blocks are fine at h=4, so a rule based on blocks would be wrong here
    G = line_graph(cycle_graph(4))
    assert recognize(G, 4, 2).verdict is MEMBER
    assert recognize(G, 3, 2).verdict is NON_MEMBER


@pytest.mark.parametrize("seed", range(15))
def test_certificates_always_validate(seed):
    rng = random.Random(900 + seed)
    H = _random_connected(rng, rng.randint(4, 8), 0.35)
    G = line_graph(H)
    for h, t in ((3, 1), (3, 2), (4, 2), (3, 3), (4, 3)):
        rep = recognize(G, h, t)
        if rep.verdict is MEMBER:
            assert validate_representation(rep.certificate, G, h, t) is None
        assert rep.to_dict()["schema"] == 1


def test_line_of_petersen_matches_networkx():
    G = line_graph(petersen_graph())
    assert nx.is_isomorphic(nx.line_graph(nx.petersen_graph()), nx.Graph(list(G.edges)))
