"""Graph values and the classical decompositions the recognizers build on.

Vertex labels are strings. Every container handed out by this module is
sorted, so iteration order (and therefore every derived report) is
deterministic.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from itertools import combinations

__all__ = [
    "SimpleGraph",
    "Multigraph",
    "BlockDecomposition",
    "TwinPartition",
    "GraphParseError",
    "parse_graph",
    "format_edge_list",
    "graph_to_dot",
    "blocks",
    "twin_classes",
    "reduce_twins",
    "line_graph",
    "line_graph_with_map",
    "is_isomorphic",
    "ISOMORPHISM_CAP",
]

ISOMORPHISM_CAP = 12


class GraphParseError(ValueError):
    """Raised for malformed edge-list documents."""


def _pair(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u <= v else (v, u)


# ---------------------------------------------------------------------------
# SimpleGraph
# ---------------------------------------------------------------------------


class SimpleGraph:
    """Immutable undirected simple graph over string labels.

    Edge endpoints that are not listed in ``vertices`` are added implicitly.
    Loops raise ``ValueError``; repeated edges collapse.
    """

    __slots__ = ("_adj", "_hash")

    def __init__(
        self,
        vertices: Iterable[object] = (),
        edges: Iterable[tuple[object, object]] = (),
    ) -> None:
        adj: dict[str, set[str]] = {}
        for v in vertices:
            adj.setdefault(str(v), set())
        for u, v in edges:
            u, v = str(u), str(v)
            if u == v:
                raise ValueError(f"loop at vertex {u!r} is not allowed in a simple graph")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj: dict[str, frozenset[str]] = {
            v: frozenset(adj[v]) for v in sorted(adj)
        }
        self._hash: int | None = None

    @classmethod
    def _from_adj(cls, adj: Mapping[str, Iterable[str]]) -> SimpleGraph:
        g = cls.__new__(cls)
        g._adj = {v: frozenset(adj[v]) for v in sorted(adj)}
        g._hash = None
        return g

    # -- basic queries ------------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(self._adj)

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return tuple(
            (u, v) for u, nbrs in self._adj.items() for v in sorted(nbrs) if u < v
        )

    @property
    def order(self) -> int:
        return len(self._adj)

    @property
    def size(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def closed_neighborhood(self, v: str) -> frozenset[str]:
        return self._adj[v] | {v}

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(n) for n in self._adj.values()), default=0)

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def adjacency(self) -> dict[str, frozenset[str]]:
        return dict(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[str]:
        return iter(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"SimpleGraph(order={self.order}, edges={list(self.edges)!r})"

    # -- derived graphs -----------------------------------------------------

    def subgraph(self, keep: Iterable[str]) -> SimpleGraph:
        """Induced subgraph on ``keep``."""
        ks = set(keep)
        missing = ks - self._adj.keys()
        if missing:
            raise KeyError(f"unknown vertices {sorted(missing)}")
        return SimpleGraph._from_adj({v: self._adj[v] & ks for v in ks})

    def without(self, drop: Iterable[str]) -> SimpleGraph:
        ds = set(drop)
        return self.subgraph(v for v in self._adj if v not in ds)

    def relabel(self, mapping: Mapping[str, str]) -> SimpleGraph:
        """Rename vertices; unmapped labels are kept. The map must stay injective."""
        new = {v: mapping.get(v, v) for v in self._adj}
        if len(set(new.values())) != len(new):
            raise ValueError("relabeling is not injective")
        return SimpleGraph(new.values(), ((new[u], new[v]) for u, v in self.edges))

    def with_edges(self, extra: Iterable[tuple[str, str]]) -> SimpleGraph:
        return SimpleGraph(self.vertices, list(self.edges) + list(extra))

    def components(self) -> list[frozenset[str]]:
        seen: set[str] = set()
        comps = []
        for s in self._adj:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.order > 0 and len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and self.size == self.order - 1

    def leaves(self) -> tuple[str, ...]:
        """Vertices of degree at most one."""
        return tuple(v for v, n in self._adj.items() if len(n) <= 1)

    def distances_from(self, source: str) -> dict[str, int]:
        dist = {source: 0}
        frontier = [source]
        while frontier:
            nxt = []
            for x in frontier:
                for y in self._adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        return dist

    def path(self, source: str, target: str) -> list[str]:
        """A shortest path (the unique path when the graph is a tree)."""
        parent = {source: source}
        frontier = [source]
        while frontier and target not in parent:
            nxt = []
            for x in frontier:
                for y in sorted(self._adj[x]):
                    if y not in parent:
                        parent[y] = x
                        nxt.append(y)
            frontier = nxt
        if target not in parent:
            raise ValueError(f"no path between {source!r} and {target!r}")
        out = [target]
        while out[-1] != source:
            out.append(parent[out[-1]])
        return out[::-1]

    def disjoint_union(self, other: SimpleGraph) -> SimpleGraph:
        clash = self._adj.keys() & other._adj.keys()
        if clash:
            raise ValueError(f"vertex labels overlap: {sorted(clash)[:5]}")
        return SimpleGraph(
            self.vertices + other.vertices, self.edges + other.edges
        )


# ---------------------------------------------------------------------------
# Multigraph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Multigraph:
    """Loop-free multigraph; ``edges`` lists parallel copies separately.

    Edge ``i`` is addressed by its position; ``edge_labels()`` gives the
    names those edges carry as vertices of the line graph.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        vs = tuple(sorted({str(v) for v in self.vertices} | {str(x) for e in self.edges for x in e}))
        es = tuple(_pair(str(u), str(v)) for u, v in self.edges)
        for u, v in es:
            if u == v:
                raise ValueError(f"loop at {u!r}: multigraph roots are loop-free")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)

    @classmethod
    def from_graph(cls, g: SimpleGraph) -> Multigraph:
        return cls(g.vertices, g.edges)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def to_simple(self) -> SimpleGraph:
        if not self.is_simple():
            raise ValueError("multigraph has parallel edges")
        return SimpleGraph(self.vertices, self.edges)

    def underlying(self) -> SimpleGraph:
        """Simple graph obtained by collapsing parallel edges."""
        return SimpleGraph(self.vertices, self.edges)

    def edge_labels(self) -> tuple[str, ...]:
        seen: dict[tuple[str, str], int] = {}
        labels = []
        for e in self.edges:
            k = seen.get(e, 0)
            seen[e] = k + 1
            labels.append(f"{e[0]}-{e[1]}" if k == 0 else f"{e[0]}-{e[1]}#{k}")
        if len(set(labels)) != len(labels):
            raise ValueError("edge labels collide; vertex labels must not contain '-' or '#'")
        return tuple(labels)


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------


def parse_graph(text: str) -> SimpleGraph:
    """Parse an edge-list document.

    One edge ``u v`` per line; a single label declares an isolated vertex;
    blank lines and lines starting with ``#`` are skipped.
    """
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 1:
            vertices.append(parts[0])
        elif len(parts) == 2:
            u, v = parts
            if u == v:
                raise GraphParseError(f"line {lineno}: loop {u} {v} is not allowed")
            edges.append((u, v))
        else:
            raise GraphParseError(f"line {lineno}: expected one or two labels, got {len(parts)}")
    if not vertices and not edges:
        raise GraphParseError("empty graph document")
    return SimpleGraph(vertices, edges)


def format_edge_list(g: SimpleGraph) -> str:
    isolated = [v for v in g.vertices if g.degree(v) == 0]
    lines = [f"{u} {v}" for u, v in g.edges] + isolated
    return "\n".join(lines) + "\n"


def _dot_id(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(g: SimpleGraph, name: str = "G", highlight: Iterable[tuple[str, str]] = ()) -> str:
    """DOT text for ``g``; ``highlight`` edges are drawn red and bold."""
    marked = {_pair(u, v) for u, v in highlight}
    lines = [f"graph {_dot_id(name)} {{"]
    for v in g.vertices:
        lines.append(f"  {_dot_id(v)};")
    for u, v in g.edges:
        attr = ' [color=red, penwidth=2]' if (u, v) in marked else ""
        lines.append(f"  {_dot_id(u)} -- {_dot_id(v)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[str], ...]
    cut_vertices: frozenset[str]
    block_cut_tree: SimpleGraph = field(repr=False)

    def largest_block(self) -> frozenset[str]:
        return max(self.blocks, key=lambda b: (len(b), sorted(b)), default=frozenset())


def blocks(g: SimpleGraph) -> BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs, bridges, isolated vertices).

    Iterative Hopcroft-Tarjan with an edge stack. Block-cut tree nodes are
    named ``block:<i>`` and ``cut:<v>``.
    """
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    found: list[frozenset[str]] = []
    cuts: set[str] = set()
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        if g.degree(root) == 0:
            disc[root] = low[root] = counter
            counter += 1
            found.append(frozenset({root}))
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[tuple[str, str]] = []
        root_children = 0
        stack = [(root, "", iter(sorted(g.neighbors(root))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                comp: set[str] = set()
                while True:
                    e = edge_stack.pop()
                    comp.update(e)
                    if e == (p, v):
                        break
                found.append(frozenset(comp))
                if p == root:
                    root_children += 1
                else:
                    cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    ordered = tuple(sorted(found, key=lambda b: sorted(b)))
    bct_edges = [
        (f"block:{i}", f"cut:{c}") for i, b in enumerate(ordered) for c in sorted(b & cuts)
    ]
    bct = SimpleGraph([f"block:{i}" for i in range(len(ordered))], bct_edges)
    return BlockDecomposition(ordered, frozenset(cuts), bct)


# ---------------------------------------------------------------------------
# Twins
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[tuple[str, ...], ...]

    def representative(self) -> dict[str, str]:
        """Vertex -> smallest label of its class."""
        return {v: cls[0] for cls in self.classes for v in cls}


def twin_classes(g: SimpleGraph) -> TwinPartition:
    groups: dict[frozenset[str], list[str]] = {}
    for v in g.vertices:
        groups.setdefault(g.closed_neighborhood(v), []).append(v)
    return TwinPartition(tuple(sorted(tuple(sorted(c)) for c in groups.values())))


def reduce_twins(g: SimpleGraph) -> tuple[SimpleGraph, dict[str, str]]:
    """Identify twins; returns the twin-free quotient and vertex -> representative."""
    rep = twin_classes(g).representative()
    keep = sorted(set(rep.values()))
    return g.subgraph(keep), rep


# ---------------------------------------------------------------------------
# Line graphs
# ---------------------------------------------------------------------------


def line_graph_with_map(h: Multigraph | SimpleGraph) -> tuple[SimpleGraph, dict[str, tuple[str, str]]]:
    """Line graph plus the map from its vertices to the edges of ``h``."""
    if isinstance(h, SimpleGraph):
        h = Multigraph.from_graph(h)
    labels = h.edge_labels()
    phi = dict(zip(labels, h.edges))
    incident: dict[str, list[str]] = {v: [] for v in h.vertices}
    for lab, (u, v) in phi.items():
        incident[u].append(lab)
        incident[v].append(lab)
    ledges = set()
    for labs in incident.values():
        for a, b in combinations(labs, 2):
            ledges.add(_pair(a, b))
    return SimpleGraph(labels, ledges), phi


def line_graph(h: Multigraph | SimpleGraph) -> SimpleGraph:
    return line_graph_with_map(h)[0]


# ---------------------------------------------------------------------------
# Isomorphism (desk scale)
# ---------------------------------------------------------------------------


def is_isomorphic(g1: SimpleGraph, g2: SimpleGraph, cap: int = ISOMORPHISM_CAP) -> bool:
    """Exhaustive isomorphism test with degree pruning; orders above ``cap`` are refused."""
    if g1.order > cap or g2.order > cap:
        raise ValueError(f"is_isomorphic is limited to order <= {cap}")
    if g1.order != g2.order or g1.size != g2.size:
        return False
    key1 = {v: (g1.degree(v), sorted(g1.degree(w) for w in g1.neighbors(v))) for v in g1}
    key2 = {v: (g2.degree(v), sorted(g2.degree(w) for w in g2.neighbors(v))) for v in g2}
    if sorted(key1.values()) != sorted(key2.values()):
        return False
    # most constrained first: rare keys, then BFS-ish by degree
    order = sorted(g1.vertices, key=lambda v: (-g1.degree(v), v))
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in g2.vertices:
            if w in used or key2[w] != key1[v]:
                continue
            if any(g1.has_edge(v, x) != g2.has_edge(w, mapping[x]) for x in mapping):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0)
