"""Exhaustive generators for small combinatorial objects.

* leaf-labelled trees with prescribed leaf set and internal degrees in
  ``[3, h]`` (every topology exactly once, by leaf insertion);
* unlabelled trees of bounded maximum degree and diameter;
* connected graphs on ``n`` vertices up to isomorphism.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from functools import lru_cache
from itertools import combinations, permutations, product

from .graph import SimpleGraph

__all__ = [
    "LabelledTreeBuilder",
    "leaf_labelled_trees",
    "count_leaf_labelled_trees",
    "bounded_diameter_trees",
    "tree_canonical_form",
    "graph_canonical_form",
    "connected_graphs",
]


# ---------------------------------------------------------------------------
# Leaf-labelled trees by leaf insertion
# ---------------------------------------------------------------------------


class LabelledTreeBuilder:
    """Mutable tree on integer nodes used by the insertion search.

    Leaves are ``0..n-1`` (in insertion order); internal nodes are numbered
    from ``n`` upward as they are created.
    """

    def __init__(self, n_leaves: int) -> None:
        self.n = n_leaves
        self.adj: dict[int, set[int]] = {0: {1}, 1: {0}}
        self.next_internal = n_leaves

    def internal_nodes(self) -> list[int]:
        return [x for x in self.adj if x >= self.n]

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted((x, y) for x in self.adj for y in self.adj[x] if x < y)

    def attach(self, leaf: int, w: int) -> None:
        self.adj[leaf] = {w}
        self.adj[w].add(leaf)

    def detach(self, leaf: int, w: int) -> None:
        del self.adj[leaf]
        self.adj[w].discard(leaf)

    def subdivide(self, leaf: int, p: int, q: int) -> int:
        s = self.next_internal
        self.next_internal += 1
        self.adj[p].discard(q)
        self.adj[q].discard(p)
        self.adj[s] = {p, q, leaf}
        self.adj[p].add(s)
        self.adj[q].add(s)
        self.adj[leaf] = {s}
        return s

    def unsubdivide(self, leaf: int, p: int, q: int, s: int) -> None:
        del self.adj[leaf]
        del self.adj[s]
        self.adj[p].discard(s)
        self.adj[q].discard(s)
        self.adj[p].add(q)
        self.adj[q].add(p)
        self.next_internal -= 1

    def distance_oracle(self) -> Callable[[int, int], int]:
        """Distances via ancestor bitmasks from root node 0."""
        anc = {0: 1}
        depth = {0: 0}
        bit = {x: 1 << i for i, x in enumerate(self.adj)}
        anc[0] = bit[0]
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for y in self.adj[x]:
                    if y not in depth:
                        depth[y] = depth[x] + 1
                        anc[y] = anc[x] | bit[y]
                        nxt.append(y)
            frontier = nxt

        def d(a: int, b: int) -> int:
            common = (anc[a] & anc[b]).bit_count()
            return depth[a] + depth[b] - 2 * (common - 1)

        return d


def leaf_labelled_trees(
    n: int,
    h: int,
    accept: Callable[[LabelledTreeBuilder, int], bool] | None = None,
) -> Iterator[LabelledTreeBuilder]:
    """Yield every tree with leaves ``0..n-1`` and internal degrees in ``[3, h]``.

    ``accept(builder, k)`` is called after leaf ``k`` is inserted; returning
    False prunes the subtree of the search (sound whenever the predicate is
    monotone under further insertions). The yielded builder is mutated by
    the search afterwards; copy what you need.
    """
    if n < 2:
        raise ValueError("need at least two leaves")
    if h < 3 and n > 2:
        return
    b = LabelledTreeBuilder(n)
    if accept is not None and not accept(b, 1):
        return

    def rec(k: int) -> Iterator[LabelledTreeBuilder]:
        if k == n:
            yield b
            return
        for w in sorted(b.internal_nodes()):
            if len(b.adj[w]) < h:
                b.attach(k, w)
                if accept is None or accept(b, k):
                    yield from rec(k + 1)
                b.detach(k, w)
        for p, q in b.edge_list():
            if p == k or q == k:
                continue
            s = b.subdivide(k, p, q)
            if accept is None or accept(b, k):
                yield from rec(k + 1)
            b.unsubdivide(k, p, q, s)

    yield from rec(2)


def count_leaf_labelled_trees(n: int, h: int) -> int:
    return sum(1 for _ in leaf_labelled_trees(n, h))


# ---------------------------------------------------------------------------
# Unlabelled trees of bounded degree and diameter
# ---------------------------------------------------------------------------


def _rooted_code(adj: dict[int, set[int]], root: int, parent: int) -> str:
    kids = sorted(_rooted_code(adj, c, root) for c in adj[root] if c != parent)
    return "(" + "".join(kids) + ")"


def _centers(adj: dict[int, set[int]]) -> list[int]:
    remaining = set(adj)
    deg = {x: len(n) for x, n in adj.items()}
    layer = [x for x in adj if deg[x] <= 1]
    while len(remaining) > 2:
        remaining -= set(layer)
        nxt = []
        for x in layer:
            for y in adj[x]:
                if y in remaining:
                    deg[y] -= 1
                    if deg[y] == 1:
                        nxt.append(y)
        layer = nxt
    return sorted(remaining)


def tree_canonical_form(adj: dict[int, set[int]]) -> str:
    """AHU string of an unlabelled tree, rooted at its centre (or centre edge)."""
    if len(adj) == 1:
        return "()"
    cs = _centers(adj)
    if len(cs) == 1:
        return _rooted_code(adj, cs[0], -1)
    a, b = cs
    left, right = sorted((_rooted_code(adj, a, b), _rooted_code(adj, b, a)))
    return "E" + left + right


def _diameter(adj: dict[int, set[int]]) -> int:
    def far(s: int) -> tuple[int, int]:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        v = max(dist, key=dist.get)
        return v, dist[v]

    v, _ = far(next(iter(adj)))
    return far(v)[1]


def bounded_diameter_trees(max_degree: int, max_diameter: int) -> Iterator[dict[int, set[int]]]:
    """Every unlabelled tree with max degree and diameter within bounds.

    Grown from a single node by adding one leaf at a time; both bounds are
    preserved when a leaf is deleted, so every qualifying tree is reached.
    Isomorphic copies are dropped by canonical form.
    """
    seen = {"()"}
    level = [{0: set()}]
    yield level[0]
    while level:
        nxt = []
        for adj in level:
            for x in list(adj):
                if len(adj[x]) >= max_degree:
                    continue
                new = {k: set(v) for k, v in adj.items()}
                y = len(new)
                new[y] = {x}
                new[x].add(y)
                if _diameter(new) > max_diameter:
                    continue
                code = tree_canonical_form(new)
                if code in seen:
                    continue
                seen.add(code)
                nxt.append(new)
                yield new
        level = nxt


# ---------------------------------------------------------------------------
# Small graphs up to isomorphism
# ---------------------------------------------------------------------------


def graph_canonical_form(n: int, edges: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Lexicographically least relabelled edge list, permuting only within degree classes."""
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(deg[v], []).append(v)
    blocks = [classes[d] for d in sorted(classes)]
    best = None
    for choice in product(*(permutations(b) for b in blocks)):
        perm = {}
        pos = 0
        for block in choice:
            for v in block:
                perm[v] = pos
                pos += 1
        relabelled = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or relabelled < best:
            best = relabelled
    return best if best is not None else ()


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> list[tuple[tuple[int, int], ...]]:
    if n == 1:
        return [()]
    out = set()
    for g in _all_graphs(n - 1):
        for k in range(n):
            for nbrs in combinations(range(n - 1), k):
                edges = list(g) + [(u, n - 1) for u in nbrs]
                out.add(graph_canonical_form(n, edges))
    return sorted(out)


def connected_graphs(n: int) -> list[SimpleGraph]:
    """All connected graphs on ``n`` vertices (labels ``0..n-1``), one per isomorphism class."""
    if n < 1:
        return []
    result = []
    for edges in _all_graphs(n):
        g = SimpleGraph(range(n), edges)
        if g.is_connected():
            result.append(g)
    return result
