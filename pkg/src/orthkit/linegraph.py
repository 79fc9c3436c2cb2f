"""Line-graph recognition and root reconstruction.

Vertices of the input are added in BFS order; each partial root is extended
by every edge placement consistent with the new vertex's earlier
neighbours. Distinct partial roots survive only while the prefix is one of
Whitney's small ambiguous cases, so the frontier stays a handful of states
and the whole search is polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Multigraph, SimpleGraph, reduce_twins

__all__ = ["RootResult", "root_graph", "is_line_graph"]


@dataclass(frozen=True)
class RootResult:
    """Outcome of :func:`root_graph`.

    For a line graph, ``root`` is set and ``phi`` maps each input vertex to
    the index of its edge in ``root.edges``. Otherwise ``witness`` holds a
    small vertex set whose induced subgraph is not a line graph.
    """

    root: Multigraph | None = None
    phi: dict[str, int] = field(default_factory=dict)
    witness: frozenset[str] | None = None

    @property
    def is_line_graph(self) -> bool:
        return self.root is not None

    def edge_of(self, v: str) -> tuple[str, str]:
        assert self.root is not None
        return self.root.edges[self.phi[v]]

    def check(self, g: SimpleGraph) -> bool:
        """Pairwise re-check: adjacency in ``g`` iff the mapped edges meet."""
        if self.root is None or set(self.phi) != set(g.vertices):
            return False
        if len(set(self.phi.values())) != len(self.phi) or len(self.phi) != self.root.size:
            return False
        vs = g.vertices
        for i, u in enumerate(vs):
            eu = set(self.edge_of(u))
            for w in vs[i + 1:]:
                if g.has_edge(u, w) != bool(eu & set(self.edge_of(w))):
                    return False
        return True


# ---------------------------------------------------------------------------
# Small cases (Whitney's exceptions are resolved here)
# ---------------------------------------------------------------------------


def _small_root(g: SimpleGraph) -> RootResult:
    vs = g.vertices
    if g.order == 1:
        return RootResult(Multigraph(("x0", "x1"), (("x0", "x1"),)), {vs[0]: 0})
    if g.order == 2:
        a, b = vs
        return RootResult(
            Multigraph(("x0", "x1", "x2"), (("x0", "x1"), ("x1", "x2"))), {a: 0, b: 1}
        )
    if g.size == 3:
        # K3: the star K1,3 is the canonical choice
        edges = (("x0", "x1"), ("x0", "x2"), ("x0", "x3"))
        return RootResult(Multigraph((), edges), {v: i for i, v in enumerate(vs)})
    mid = next(v for v in vs if g.degree(v) == 2)
    a, c = sorted(g.neighbors(mid))
    edges = (("x0", "x1"), ("x1", "x2"), ("x2", "x3"))
    return RootResult(Multigraph((), edges), {a: 0, mid: 1, c: 2})


# ---------------------------------------------------------------------------
# Incremental search over simple roots (twin-free input)
# ---------------------------------------------------------------------------


def _bfs_order(g: SimpleGraph) -> list[str]:
    start = g.vertices[0]
    order = [start]
    seen = {start}
    i = 0
    while i < len(order):
        for w in sorted(g.neighbors(order[i])):
            if w not in seen:
                seen.add(w)
                order.append(w)
        i += 1
    return order


class _State:
    __slots__ = ("edges", "inc", "n")

    def __init__(self, edges: list[tuple[int, int]], inc: list[set[int]], n: int) -> None:
        self.edges = edges
        self.inc = inc
        self.n = n

    def key(self) -> tuple[tuple[int, ...], ...]:
        # vertex incidence sets determine the partial root up to relabeling
        return tuple(sorted(tuple(sorted(s)) for s in self.inc))

    def extend(self, x: int, y: int, pos: int) -> _State:
        inc = [set(s) for s in self.inc]
        n = self.n
        if y == n:
            inc.append(set())
            n += 1
        inc[x].add(pos)
        inc[y].add(pos)
        return _State(self.edges + [(x, y)], inc, n)


def _candidates(state: _State, nbrs: set[int]) -> list[tuple[int, int]]:
    out = []
    j0 = min(nbrs)
    existing = set(state.edges)
    for x in state.edges[j0]:
        if not state.inc[x] <= nbrs:
            continue
        rest = nbrs - state.inc[x]
        if rest:
            ys = set(state.edges[min(rest)])
        else:
            ys = {z for j in nbrs for z in state.edges[j]} | {state.n}
        for y in sorted(ys):
            if y == x:
                continue
            if y < state.n and not (state.inc[y] <= nbrs and rest <= state.inc[y]):
                continue
            if (min(x, y), max(x, y)) in existing:
                continue
            out.append((min(x, y), max(x, y)) if y < state.n else (x, y))
    return out


def _simple_root_search(g: SimpleGraph) -> tuple[list[str], _State | None, int]:
    """Returns (order, state, failed_position); state is None on failure."""
    order = _bfs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    states = [_State([(0, 1)], [{0}, {0}], 2)]
    for i in range(1, len(order)):
        v = order[i]
        nbrs = {pos[w] for w in g.neighbors(v) if pos[w] < i}
        nxt: dict[tuple, _State] = {}
        for st in states:
            for x, y in _candidates(st, nbrs):
                new = st.extend(x, y, i)
                nxt.setdefault(new.key(), new)
        if not nxt:
            return order, None, i
        states = [nxt[k] for k in sorted(nxt)]
    return order, states[0], -1


def _root_twin_free(g: SimpleGraph) -> RootResult:
    order, state, failed = _simple_root_search(g)
    if state is None:
        # caller upgrades this prefix into a minimal witness
        return RootResult(witness=frozenset(order[: failed + 1]))
    names = [f"x{i}" for i in range(state.n)]
    edges = tuple((names[a], names[b]) for a, b in state.edges)
    return RootResult(Multigraph(tuple(names), edges), {v: i for i, v in enumerate(order)})


def _root_connected(g: SimpleGraph) -> RootResult:
    if g.order <= 3:
        return _small_root(g)
    reduced, rep = reduce_twins(g)
    if reduced.order == g.order:
        return _root_twin_free(g)
    inner = _root_connected(reduced)
    if inner.root is None:
        return inner
    assert inner.root is not None
    edges = list(inner.root.edges)
    phi = dict(inner.phi)
    for v in g.vertices:
        r = rep[v]
        if r != v:
            phi[v] = len(edges)
            edges.append(inner.root.edges[inner.phi[r]])
    return RootResult(Multigraph(inner.root.vertices, tuple(edges)), phi)


def is_line_graph(g: SimpleGraph) -> bool:
    """True iff every component of ``g`` is the line graph of a loop-free multigraph."""
    return all(_root_connected(g.subgraph(c)).root is not None for c in g.components())


def _minimize_witness(g: SimpleGraph, start: set[str]) -> frozenset[str]:
    current = set(start)
    if is_line_graph(g.subgraph(current)):
        current = set(g.vertices)
    chunk = max(1, len(current) // 2)
    while True:
        removed = False
        items = sorted(current)
        for k in range(0, len(items), chunk):
            trial = current - set(items[k : k + chunk])
            if trial and not is_line_graph(g.subgraph(trial)):
                current = trial
                removed = True
                break
        if removed:
            chunk = max(1, min(chunk, len(current) // 2))
            continue
        if chunk == 1:
            return frozenset(current)
        chunk = max(1, chunk // 2)


def root_graph(g: SimpleGraph) -> RootResult:
    """Reconstruct a root multigraph ``H`` with ``L(H) = g``.

    ``g`` must be connected. For twin-free ``g`` of order at least 4 the
    root is simple and unique up to isomorphism. Twins become parallel
    edges. Orders up to 3 use fixed roots (``K3`` maps to ``K1,3``).
    """
    if g.order == 0 or not g.is_connected():
        raise ValueError("root_graph needs a connected graph; split components first")
    result = _root_connected(g)
    if result.root is None:
        assert result.witness is not None
        return RootResult(witness=_minimize_witness(g, set(result.witness)))
    if not result.check(g):
        raise AssertionError("internal error: reconstructed root does not reproduce the input")
    return result

