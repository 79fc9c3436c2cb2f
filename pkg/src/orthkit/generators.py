"""Named small graphs used throughout tests, demos and the CLI."""

from __future__ import annotations

from itertools import combinations

from .graph import SimpleGraph


def complete_graph(n: int, prefix: str = "") -> SimpleGraph:
    vs = [f"{prefix}{i}" for i in range(n)]
    return SimpleGraph(vs, combinations(vs, 2))


def path_graph(n: int, prefix: str = "") -> SimpleGraph:
    """Path with ``n`` vertices."""
    vs = [f"{prefix}{i}" for i in range(n)]
    return SimpleGraph(vs, zip(vs, vs[1:]))


def cycle_graph(n: int, prefix: str = "") -> SimpleGraph:
    vs = [f"{prefix}{i}" for i in range(n)]
    return SimpleGraph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def star_graph(leaves: int) -> SimpleGraph:
    return SimpleGraph(["c"], [("c", f"l{i}") for i in range(leaves)])


def complete_bipartite(p: int, q: int) -> SimpleGraph:
    left = [f"a{i}" for i in range(p)]
    right = [f"b{j}" for j in range(q)]
    return SimpleGraph(left + right, [(a, b) for a in left for b in right])


def k5_minus_matching() -> SimpleGraph:
    """K5 with the two independent edges 0-1 and 2-3 removed."""
    g = complete_graph(5)
    return SimpleGraph(g.vertices, [e for e in g.edges if e not in {("0", "1"), ("2", "3")}])


def petersen_graph() -> SimpleGraph:
    outer = [(f"o{i}", f"o{(i + 1) % 5}") for i in range(5)]
    spokes = [(f"o{i}", f"i{i}") for i in range(5)]
    inner = [(f"i{i}", f"i{(i + 2) % 5}") for i in range(5)]
    return SimpleGraph((), outer + spokes + inner)


def paw_graph() -> SimpleGraph:
    return SimpleGraph((), [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])


def triangle_chain(k: int) -> SimpleGraph:
    """``k`` triangles glued consecutively at cut vertices."""
    edges = []
    for i in range(k):
        a, b, c = f"v{2 * i}", f"v{2 * i + 1}", f"v{2 * i + 2}"
        edges += [(a, b), (b, c), (a, c)]
    return SimpleGraph((), edges)


def subdivide(g: SimpleGraph, u: str, v: str, times: int = 1) -> SimpleGraph:
    """Replace edge ``uv`` by a path with ``times`` new interior vertices."""
    if not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge")
    inner = [f"{u}_{v}_{i}" for i in range(times)]
    chain = [u, *inner, v]
    edges = [e for e in g.edges if set(e) != {u, v}] + list(zip(chain, chain[1:]))
    return SimpleGraph(g.vertices, edges)
