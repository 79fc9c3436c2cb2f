from __future__ import annotations

import random

import networkx as nx
import pytest

from orthkit.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    k5_minus_matching,
    paw_graph,
    path_graph,
    petersen_graph,
    star_graph,
    subdivide,
    triangle_chain,
)
from orthkit.graph import (
    GraphParseError,
    Multigraph,
    SimpleGraph,
    blocks,
    format_edge_list,
    graph_to_dot,
    is_isomorphic,
    line_graph,
    line_graph_with_map,
    parse_graph,
    reduce_twins,
    twin_classes,
)


def _nx(g: SimpleGraph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(g.vertices)
    out.add_edges_from(g.edges)
    return out


def _random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    vs = [str(i) for i in range(n)]
    return SimpleGraph(vs, [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if rng.random() < p])


# ---------------------------------------------------------------------------
# Parsing and export
# ---------------------------------------------------------------------------


def test_parse_graph_comments_and_isolated():
    g = parse_graph("# triangle plus one\na b\nb c\n\nc a\nd\n")
    assert g.order == 4 and g.size == 3
    assert g.degree("d") == 0


def test_parse_graph_rejects_loop_with_line_number():
    with pytest.raises(GraphParseError, match="line 2"):
        parse_graph("a b\nc c\n")


def test_parse_graph_rejects_empty_and_wide_lines():
    with pytest.raises(GraphParseError):
        parse_graph("# nothing\n\n")
    with pytest.raises(GraphParseError):
        parse_graph("a b c\n")


def test_edge_list_round_trip():
    g = petersen_graph().disjoint_union(SimpleGraph(["lonely"]))
    assert parse_graph(format_edge_list(g)) == g


def test_dot_export_mentions_every_edge():
    g = paw_graph()
    dot = graph_to_dot(g, "paw", highlight=[("a", "b")])
    assert dot.startswith('graph "paw" {')
    assert dot.count("--") == g.size
    assert "color=red" in dot


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def test_generator_sizes():
    assert complete_graph(5).size == 10
    assert petersen_graph().size == 15 and {petersen_graph().degree(v) for v in petersen_graph()} == {3}
    assert complete_bipartite(3, 3).size == 9
    assert star_graph(3).max_degree() == 3
    assert k5_minus_matching().size == 8
    assert sorted(k5_minus_matching().degree(v) for v in k5_minus_matching()) == [3, 3, 3, 3, 4]
    assert triangle_chain(3).order == 7
    sub = subdivide(complete_bipartite(3, 3), "a0", "b0", 2)
    assert sub.order == 8 and not sub.has_edge("a0", "b0")


def test_petersen_matches_networkx():
    assert nx.is_isomorphic(_nx(petersen_graph()), nx.petersen_graph())


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------


def test_blocks_of_paw():
    bd = blocks(paw_graph())
    assert set(bd.blocks) == {frozenset("abc"), frozenset("cd")}
    assert bd.cut_vertices == {"c"}


def test_blocks_isolated_vertex_is_its_own_block():
    g = SimpleGraph(["z"], [("a", "b")])
    assert frozenset({"z"}) in blocks(g).blocks


@pytest.mark.parametrize("seed", range(30))
def test_blocks_match_networkx(seed):
    rng = random.Random(seed)
    g = _random_graph(rng, rng.randint(2, 14), rng.choice([0.15, 0.25, 0.4]))
    ours = {b for b in blocks(g).blocks if len(b) > 1}
    theirs = {frozenset(c) for c in nx.biconnected_components(_nx(g))}
    assert ours == theirs
    assert blocks(g).cut_vertices == set(nx.articulation_points(_nx(g)))


def test_block_cut_tree_is_a_forest():
    bd = blocks(triangle_chain(4))
    assert bd.block_cut_tree.is_tree()
    assert len(bd.blocks) == 4


# ---------------------------------------------------------------------------
# Twins
# ---------------------------------------------------------------------------


def test_twins_of_complete_graph_collapse():
    g, rep = reduce_twins(complete_graph(4))
    assert g.order == 1 and set(rep.values()) == {"0"}


@pytest.mark.parametrize("seed", range(20))
def test_twin_classes_are_closed_neighbourhood_classes(seed):
    rng = random.Random(100 + seed)
    g = _random_graph(rng, rng.randint(1, 10), 0.5)
    for cls in twin_classes(g).classes:
        assert len({g.closed_neighborhood(v) for v in cls}) == 1
    reduced, _ = reduce_twins(g)
    assert all(len(c) == 1 for c in twin_classes(reduced).classes)


# ---------------------------------------------------------------------------
# Line graphs and isomorphism
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("g", [complete_graph(4), petersen_graph(), paw_graph(), star_graph(4), cycle_graph(5)])
def test_line_graph_matches_networkx(g):
    assert nx.is_isomorphic(_nx(line_graph(g)), nx.line_graph(_nx(g)))


def test_line_graph_of_multigraph_has_parallel_copies_adjacent():
    mg = Multigraph(("a", "b", "c"), (("a", "b"), ("a", "b"), ("b", "c")))
    L, where = line_graph_with_map(mg)
    assert L.order == 3 and L.size == 3
    assert where["a-b#1"] == ("a", "b")


def test_multigraph_rejects_loops():
    with pytest.raises(ValueError):
        Multigraph(("a",), (("a", "a"),))


@pytest.mark.parametrize("seed", range(25))
def test_is_isomorphic_matches_networkx(seed):
    rng = random.Random(200 + seed)
    n = rng.randint(1, 8)
    g = _random_graph(rng, n, 0.4)
    perm = list(g.vertices)
    rng.shuffle(perm)
    h = g.relabel(dict(zip(g.vertices, perm)))
    assert is_isomorphic(g, h)
    other = _random_graph(rng, n, 0.4)
    assert is_isomorphic(g, other) == nx.is_isomorphic(_nx(g), _nx(other))


def test_is_isomorphic_cap():
    with pytest.raises(ValueError):
        is_isomorphic(path_graph(20), path_graph(20))
