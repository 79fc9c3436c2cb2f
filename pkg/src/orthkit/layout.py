"""Tree layouts and orthodox path representations.

A layout of ``H`` is a tree whose leaves are identified with ``V(H)`` such
that the leaf-to-leaf paths of any two independent edges of ``H`` share at
most ``t - 1`` nodes. An orthodox representation assigns each vertex of
``G`` a leaf-to-leaf path of a host tree so that adjacency, sharing ``t``
nodes, and sharing a host leaf all coincide.

Paths are stored by their endpoint pair only and recomputed from the host.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Multigraph, SimpleGraph

__all__ = [
    "LayoutTree",
    "OrthodoxRepresentation",
    "Violation",
    "ViolationKind",
    "LayoutError",
    "shared_nodes",
    "TreeMetric",
    "validate_layout",
    "suppress_degree_two",
    "layout_of_representation",
    "orthodox_representation",
    "validate_representation",
    "normalize_representation",
    "join_representations",
    "combine_layouts",
]


class ViolationKind(str, enum.Enum):
    DEGREE_BOUND = "DegreeBound"
    LEAF_CONDITION = "LeafCondition"
    INTERSECTION_TOO_LARGE = "IntersectionTooLarge"
    INTERSECTION_TOO_SMALL = "IntersectionTooSmall"
    LEAF_SHARE_MISMATCH = "LeafShareMismatch"
    NOT_A_TREE = "NotATree"
    BIJECTION_BROKEN = "BijectionBroken"


@dataclass(frozen=True)
class Violation:
    """A failed check plus enough data to re-check it by hand."""

    kind: ViolationKind
    witness: tuple
    message: str = ""

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.message}"


class LayoutError(ValueError):
    def __init__(self, violation: Violation) -> None:
        super().__init__(str(violation))
        self.violation = violation


@dataclass(frozen=True)
class LayoutTree:
    """A tree plus the identification of its leaves with ``V(H)``."""

    tree: SimpleGraph
    leaf_map: Mapping[str, str] = field(hash=False)

    @classmethod
    def identity(cls, tree: SimpleGraph) -> LayoutTree:
        return cls(tree, {x: x for x in tree.leaves()})

    def node_of(self) -> dict[str, str]:
        """H vertex -> tree leaf."""
        return {v: x for x, v in self.leaf_map.items()}

    def graph_vertices(self) -> frozenset[str]:
        return frozenset(self.leaf_map.values())


@dataclass(frozen=True)
class OrthodoxRepresentation:
    host: SimpleGraph
    paths: Mapping[str, tuple[str, str]] = field(hash=False)
    t: int = 2
    h: int = 3

    def is_normalized(self) -> bool:
        return all(a != b for a, b in self.paths.values())


# ---------------------------------------------------------------------------
# Tree metric
# ---------------------------------------------------------------------------


class TreeMetric:
    """Lazy BFS distances in a tree, cached per source node."""

    def __init__(self, tree: SimpleGraph) -> None:
        self.tree = tree
        self._dist: dict[str, dict[str, int]] = {}

    def d(self, a: str, b: str) -> int:
        if a in self._dist:
            return self._dist[a][b]
        if b in self._dist:
            return self._dist[b][a]
        self._dist[a] = self.tree.distances_from(a)
        return self._dist[a][b]

    def shared(self, a: str, b: str, c: str, d: str) -> int:
        return shared_nodes(self.d, a, b, c, d)


def shared_nodes(dist, a: str, b: str, c: str, d: str) -> int:
    """Number of nodes common to the tree paths a..b and c..d.

    Uses the four-point identity: with ``s = d(a,b) + d(c,d)`` and ``m`` the
    smaller of the two other pair sums, the paths overlap in ``(s - m)/2``
    edges when ``s > m``, touch in one node when ``s == m``, and are
    ``(m - s)/2`` apart otherwise.
    """
    s = dist(a, b) + dist(c, d)
    m = min(dist(a, c) + dist(b, d), dist(a, d) + dist(b, c))
    gap = (m - s) // 2
    return max(0, 1 - gap)


# ---------------------------------------------------------------------------
# Layout validation
# ---------------------------------------------------------------------------


def _tree_violation(tree: SimpleGraph) -> Violation | None:
    if tree.is_tree():
        return None
    comps = tree.components()
    if len(comps) != 1:
        return Violation(ViolationKind.NOT_A_TREE, tuple(sorted(min(c) for c in comps)),
                         f"host has {len(comps)} components")
    return Violation(ViolationKind.NOT_A_TREE, (tree.order, tree.size),
                     f"{tree.size} edges on {tree.order} nodes: contains a cycle")


def _degree_violation(tree: SimpleGraph, h: int) -> Violation | None:
    for x in tree.vertices:
        if tree.degree(x) > h:
            return Violation(ViolationKind.DEGREE_BOUND, (x, tree.degree(x)),
                             f"node {x} has degree {tree.degree(x)} > {h}")
    return None


def validate_layout(T: LayoutTree, H: SimpleGraph, h: int, t: int) -> Violation | None:
    """Check that ``T`` is an ``(h, t)``-tree layout of ``H``; ``None`` means valid."""
    if h < 1 or t < 1:
        raise ValueError("h and t must be positive")
    bad = _tree_violation(T.tree)
    if bad:
        return bad
    leaves = set(T.tree.leaves())
    domain = set(T.leaf_map)
    if domain != leaves:
        diff = tuple(sorted(domain ^ leaves))
        return Violation(ViolationKind.BIJECTION_BROKEN, diff,
                         "leaf_map domain differs from the tree's leaves")
    image = list(T.leaf_map.values())
    if len(set(image)) != len(image) or set(image) != set(H.vertices):
        missing = tuple(sorted(set(H.vertices) - set(image)))
        extra = tuple(sorted(set(image) - set(H.vertices)))
        return Violation(ViolationKind.BIJECTION_BROKEN, missing + extra,
                         f"leaves do not match V(H) one-to-one (missing {list(missing)}, extra {list(extra)})")
    bad = _degree_violation(T.tree, h)
    if bad:
        return bad
    node = T.node_of()
    metric = TreeMetric(T.tree)
    edges = H.edges
    for i, (x, y) in enumerate(edges):
        for x2, y2 in edges[i + 1:]:
            if {x, y} & {x2, y2}:
                continue
            k = metric.shared(node[x], node[y], node[x2], node[y2])
            if k > t - 1:
                return Violation(
                    ViolationKind.INTERSECTION_TOO_LARGE, ((x, y), (x2, y2), k),
                    f"paths of independent edges {x}{y} and {x2}{y2} share {k} > {t - 1} nodes",
                )
    return None


def suppress_degree_two(T: LayoutTree) -> LayoutTree:
    """Replace every path a-b-c through a degree-2 node b by the edge ac."""
    adj = {x: set(n) for x, n in T.tree.adjacency().items()}
    changed = True
    while changed:
        changed = False
        for b in sorted(adj):
            if len(adj[b]) == 2:
                a, c = sorted(adj.pop(b))
                adj[a].discard(b)
                adj[c].discard(b)
                adj[a].add(c)
                adj[c].add(a)
                changed = True
    tree = SimpleGraph(adj, ((x, y) for x in adj for y in adj[x]))
    return LayoutTree(tree, dict(T.leaf_map))


# ---------------------------------------------------------------------------
# Layout <-> representation
# ---------------------------------------------------------------------------


def _fresh(taken: set[str], base: str) -> str:
    name = base
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def orthodox_representation(
    T: LayoutTree, H: SimpleGraph, t: int, h: int | None = None
) -> OrthodoxRepresentation:
    """Build the orthodox ``(h, 2, t)``-representation of ``L(H)`` from a layout.

    Every leaf edge gets ``t - 2`` subdivision nodes (none for ``t <= 2``).
    Vertices of ``L(H)`` are named like :func:`orthkit.graph.line_graph`
    names them (``u-v``).
    """
    if h is None:
        h = max(3, T.tree.max_degree())
    bad = validate_layout(T, H, h, t)
    if bad:
        raise LayoutError(bad)
    adj = {x: set(n) for x, n in T.tree.adjacency().items()}
    taken = set(adj)
    for leaf in sorted(T.leaf_map):
        prev = leaf
        nbrs = adj[leaf]
        if not nbrs:
            continue
        (target,) = nbrs
        for i in range(max(0, t - 2)):
            s = _fresh(taken, f"{leaf}~{i + 1}")
            adj[prev].discard(target)
            adj[target].discard(prev)
            adj[s] = {prev, target}
            adj[prev].add(s)
            adj[target].add(s)
            prev = s
    host = SimpleGraph(adj, ((x, y) for x in adj for y in adj[x]))
    node = T.node_of()
    mg = Multigraph.from_graph(H)
    paths = {lab: (node[u], node[v]) for lab, (u, v) in zip(mg.edge_labels(), mg.edges)}
    return OrthodoxRepresentation(host, paths, t, h)


def validate_representation(
    R: OrthodoxRepresentation, G: SimpleGraph, h: int, t: int
) -> Violation | None:
    """Check ``R`` is an orthodox ``(h, 2, t)``-representation of ``G``.

    Single-leaf paths are accepted here (they are legal, just not
    normalized).
    """
    bad = _tree_violation(R.host)
    if bad:
        return bad
    if set(R.paths) != set(G.vertices):
        diff = tuple(sorted(set(R.paths) ^ set(G.vertices)))
        return Violation(ViolationKind.BIJECTION_BROKEN, diff, "path keys differ from V(G)")
    bad = _degree_violation(R.host, h)
    if bad:
        return bad
    host_leaves = set(R.host.leaves())
    for u in G.vertices:
        for end in R.paths[u]:
            if end not in host_leaves:
                return Violation(ViolationKind.LEAF_CONDITION, (u, end),
                                 f"path of {u} ends at {end}, which is not a host leaf")
    metric = TreeMetric(R.host)
    vs = G.vertices
    for i, u in enumerate(vs):
        a, b = R.paths[u]
        for v in vs[i + 1:]:
            c, d = R.paths[v]
            adjacent = G.has_edge(u, v)
            k = metric.shared(a, b, c, d)
            share_leaf = bool({a, b} & {c, d})
            if adjacent and k < t:
                return Violation(ViolationKind.INTERSECTION_TOO_SMALL, (u, v, k),
                                 f"adjacent {u},{v} share only {k} < {t} nodes")
            if not adjacent and k >= t:
                return Violation(ViolationKind.INTERSECTION_TOO_LARGE, (u, v, k),
                                 f"non-adjacent {u},{v} share {k} >= {t} nodes")
            if share_leaf != adjacent:
                return Violation(ViolationKind.LEAF_SHARE_MISMATCH, (u, v),
                                 f"{u},{v}: adjacent={adjacent} but share_leaf={share_leaf}")
    return None


def layout_of_representation(R: OrthodoxRepresentation) -> tuple[LayoutTree, SimpleGraph]:
    """Recover the layout (host tree) and the root ``H`` on the host leaves."""
    if not R.is_normalized():
        raise ValueError("representation has single-leaf paths; normalize it first")
    pairs = [tuple(sorted(p)) for p in R.paths.values()]
    if len(set(pairs)) != len(pairs):
        raise ValueError("two vertices have identical paths (twins); reduce twins first")
    layout = LayoutTree.identity(R.host)
    H = SimpleGraph(R.host.leaves(), pairs)
    return layout, H


def normalize_representation(R: OrthodoxRepresentation) -> OrthodoxRepresentation:
    """Remove single-leaf paths by growing two new leaves at each such leaf."""
    bad_leaves = sorted({a for a, b in R.paths.values() if a == b})
    if not bad_leaves:
        return R
    adj = {x: set(n) for x, n in R.host.adjacency().items()}
    taken = set(adj)
    paths = dict(R.paths)
    for x in bad_leaves:
        x1 = _fresh(taken, f"{x}'")
        x2 = _fresh(taken, f"{x}''")
        adj[x].update((x1, x2))
        adj[x1] = {x}
        adj[x2] = {x}
        for u, (a, b) in paths.items():
            if a == b == x:
                paths[u] = (x1, x2)
            elif a == x:
                paths[u] = (x1, b)
            elif b == x:
                paths[u] = (a, x1)
    host = SimpleGraph(adj, ((p, q) for p in adj for q in adj[p]))
    return OrthodoxRepresentation(host, paths, R.t, R.h)


def _prefixed(R: OrthodoxRepresentation, prefix: str) -> OrthodoxRepresentation:
    ren = {x: prefix + x for x in R.host.vertices}
    return OrthodoxRepresentation(
        R.host.relabel(ren),
        {prefix + u: (ren[a], ren[b]) for u, (a, b) in R.paths.items()},
        R.t,
        R.h,
    )


def join_representations(
    R1: OrthodoxRepresentation, R2: OrthodoxRepresentation
) -> OrthodoxRepresentation:
    """Representation of the disjoint union of the two represented graphs.

    A leaf edge of each host is subdivided by a new node and the two new
    nodes are joined. If host or vertex labels collide, every label is
    prefixed with ``1.`` or ``2.``.
    """
    if R1.t != R2.t:
        raise ValueError("representations use different t")
    h = max(R1.h, R2.h)
    if h < 3:
        raise ValueError("joining needs h >= 3 (the two join nodes get degree 3)")
    if set(R1.host.vertices) & set(R2.host.vertices) or set(R1.paths) & set(R2.paths):
        R1, R2 = _prefixed(R1, "1."), _prefixed(R2, "2.")
    adj = {x: set(n) for x, n in R1.host.adjacency().items()}
    adj.update({x: set(n) for x, n in R2.host.adjacency().items()})
    taken = set(adj)
    joins = []
    for i, R in enumerate((R1, R2), start=1):
        leaf = R.host.leaves()[0]
        tnode = _fresh(taken, f"join{i}")
        adj[tnode] = set()
        if adj[leaf]:
            (nbr,) = adj[leaf]
            adj[leaf].discard(nbr)
            adj[nbr].discard(leaf)
            adj[tnode].update((leaf, nbr))
            adj[nbr].add(tnode)
        else:
            adj[tnode].add(leaf)
        adj[leaf].add(tnode)
        joins.append(tnode)
    adj[joins[0]].add(joins[1])
    adj[joins[1]].add(joins[0])
    host = SimpleGraph(adj, ((p, q) for p in adj for q in adj[p]))
    return OrthodoxRepresentation(host, {**R1.paths, **R2.paths}, R1.t, h)


def combine_layouts(
    T_A: LayoutTree,
    T_B: LayoutTree,
    a: str,
    b: str,
    H: SimpleGraph | None = None,
) -> LayoutTree:
    """Glue a layout of ``H[A + b]`` and a layout of ``H[B + a]`` into one of ``H``.

    The leaf of ``b`` in ``T_A`` and the leaf of ``a`` in ``T_B`` become
    internal and are joined by a new edge. When ``H`` is given, the gluing
    preconditions are checked: every ``A``-``B`` edge is incident with ``a``
    and ``ab`` is an edge.
    """
    node_a = {v: x for x, v in T_A.leaf_map.items()}
    node_b = {v: x for x, v in T_B.leaf_map.items()}
    if b not in node_a or a not in node_b:
        raise ValueError("T_A must contain a leaf for b and T_B a leaf for a")
    A = set(node_a) - {b}
    B = set(node_b) - {a}
    if a not in A or b not in B or A & B:
        raise ValueError("need a in A, b in B and disjoint sides")
    if H is not None:
        if set(H.vertices) != A | B:
            raise ValueError("layouts do not cover V(H) exactly")
        if not H.has_edge(a, b):
            raise ValueError(f"{a}{b} is not an edge of H")
        for u, v in H.edges:
            if (u in A) != (v in A) and a not in (u, v):
                raise ValueError(f"cross edge {u}{v} is not incident with {a}")
    adj = {x: set(n) for x, n in T_A.tree.adjacency().items()}
    taken = set(adj)
    ren = {}
    for x in T_B.tree.vertices:
        ren[x] = x if x not in taken else _fresh(taken, x)
        taken.add(ren[x])
    for x, nbrs in T_B.tree.adjacency().items():
        adj[ren[x]] = {ren[y] for y in nbrs}
    xa, xb = node_a[b], ren[node_b[a]]
    adj[xa].add(xb)
    adj[xb].add(xa)
    tree = SimpleGraph(adj, ((p, q) for p in adj for q in adj[p]))
    leaf_map = {x: v for x, v in T_A.leaf_map.items() if v != b}
    leaf_map.update({ren[x]: v for x, v in T_B.leaf_map.items() if v != a})
    return LayoutTree(tree, leaf_map)


def independent_edge_pairs(H: SimpleGraph) -> Iterable[tuple[tuple[str, str], tuple[str, str]]]:
    for e, f in combinations(H.edges, 2):
        if not set(e) & set(f):
            yield e, f
