"""Forbidden-subdivision tests for ORTH[3,2,3].

A subdivision search assigns pattern vertices to host vertices and routes
every pattern edge along an internally disjoint host path, backtracking over
both choices. The patterns are 2-connected, so the search runs block by
block.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .graph import SimpleGraph, blocks, twin_classes
from .generators import complete_bipartite, complete_graph, k5_minus_matching
from .linegraph import root_graph
from .report import Obstruction, RecognitionReport, Verdict

__all__ = [
    "SubdivisionWitness",
    "SearchBudgetExceeded",
    "SEARCH_BUDGET",
    "PATTERNS",
    "SUBDIVISION_CAP",
    "pattern",
    "contains_subdivision",
    "check_orth323_necessary",
    "is_planar",
]

SUBDIVISION_CAP = 64
SEARCH_BUDGET = 200_000  # backtracking steps per call
PATTERNS = ("K5_minus_2K2", "K33", "K25", "K5")

K25_NOTE = "K2,5 exclusion is asserted without proof; treat this verdict as conjectural"


def pattern(name: str) -> SimpleGraph:
    if name == "K5_minus_2K2":
        return k5_minus_matching()
    if name == "K33":
        return complete_bipartite(3, 3)
    if name == "K25":
        return complete_bipartite(2, 5)
    if name == "K5":
        return complete_graph(5)
    raise ValueError(f"unknown pattern {name!r}; choose from {', '.join(PATTERNS)}")


@dataclass(frozen=True)
class SubdivisionWitness:
    """Branch vertices and one host path per pattern edge."""

    branch_map: dict[str, str]
    path_map: dict[tuple[str, str], tuple[str, ...]]

    def edges(self) -> list[tuple[str, str]]:
        return [e for p in self.path_map.values() for e in zip(p, p[1:])]

    def verify(self, host: SimpleGraph, pat: SimpleGraph) -> bool:
        """Structural re-check independent of the search."""
        bm = self.branch_map
        if set(bm) != set(pat.vertices) or len(set(bm.values())) != len(bm):
            return False
        if {tuple(sorted(e)) for e in self.path_map} != set(pat.edges):
            return False
        interiors: set[str] = set()
        for (p, q), path in self.path_map.items():
            if len(path) < 2 or {path[0], path[-1]} != {bm[p], bm[q]}:
                return False
            if len(set(path)) != len(path):
                return False
            if any(not host.has_edge(x, y) for x, y in zip(path, path[1:])):
                return False
            inner = set(path[1:-1])
            if inner & set(bm.values()) or inner & interiors:
                return False
            interiors |= inner
        return True

    def to_dict(self) -> dict:
        return {
            "branch_map": dict(sorted(self.branch_map.items())),
            "paths": {f"{p}-{q}": list(path) for (p, q), path in sorted(self.path_map.items())},
        }


class SearchBudgetExceeded(RuntimeError):
    """The backtracking search gave up before deciding."""


def _pattern_order(pat: SimpleGraph) -> list[str]:
    order = [max(pat.vertices, key=lambda v: (pat.degree(v), v))]
    while len(order) < pat.order:
        placed = set(order)
        order.append(
            max(
                (v for v in pat.vertices if v not in placed),
                key=lambda v: (len(pat.neighbors(v) & placed), pat.degree(v), v),
            )
        )
    return order


@lru_cache(maxsize=None)
def _symmetry_constraints(
    vertices: tuple[str, ...], edges: tuple[tuple[str, str], ...], order: tuple[str, ...]
) -> tuple[tuple[str, str], ...]:
    """Pairs ``(p, q)`` such that some embedding in every automorphism
    class maps ``p`` to a smaller host index than ``q``.

    Built from the stabiliser chain along ``order``: ``order[i]`` must have
    the least image within its orbit under the automorphisms fixing
    ``order[:i]``.
    """
    es = {frozenset(e) for e in edges}
    autos = []
    for perm in permutations(vertices):
        sigma = dict(zip(vertices, perm))
        if all(frozenset((sigma[a], sigma[b])) in es for a, b in edges):
            autos.append(sigma)
    pairs = []
    group = autos
    for v in order:
        pairs.extend((v, u) for u in sorted({g[v] for g in group}) if u != v)
        group = [g for g in group if g[v] == v]
    return tuple(pairs)


class _Search:
    def __init__(self, host: SimpleGraph, pat: SimpleGraph, budget: int) -> None:
        self.budget = budget
        self.host = host
        self.pat = pat
        self.order = _pattern_order(pat)
        self.index = {x: i for i, x in enumerate(host.vertices)}
        self.less_than: dict[str, list[tuple[str, bool]]] = {p: [] for p in pat.vertices}
        for a, b in _symmetry_constraints(pat.vertices, tuple(pat.edges), tuple(self.order)):
            self.less_than[a].append((b, True))
            self.less_than[b].append((a, False))
        self.branch: dict[str, str] = {}
        self.paths: dict[tuple[str, str], tuple[str, ...]] = {}
        self.blocked: set[str] = set()  # branch images and path interiors

    def _paths(self, s: str, t: str) -> Iterator[tuple[str, ...]]:
        # Only chordless paths: a chord shortcuts onto a subset of vertices,
        # so some witness routes every pattern edge along an induced path.
        host, blocked = self.host, self.blocked
        stack = [s]
        on_path = {s}

        def dfs(x: str) -> Iterator[tuple[str, ...]]:
            nbrs = host.neighbors(x)
            if t in nbrs:
                yield (*stack, t)
                return
            for y in sorted(nbrs):
                if y in on_path or y in blocked:
                    continue
                if len(host.neighbors(y) & on_path) > 1:
                    continue
                stack.append(y)
                on_path.add(y)
                yield from dfs(y)
                stack.pop()
                on_path.discard(y)

        yield from dfs(s)

    def _symmetry_ok(self, p: str) -> bool:
        i = self.index[self.branch[p]]
        for q, p_smaller in self.less_than[p]:
            if q in self.branch:
                j = self.index[self.branch[q]]
                if (i < j) != p_smaller:
                    return False
        return True

    def _tick(self) -> None:
        self.budget -= 1
        if self.budget < 0:
            raise SearchBudgetExceeded("subdivision search budget exhausted")

    def _reachable(self, s: str, t: str) -> bool:
        seen = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in self.host.neighbors(x):
                if y == t:
                    return True
                if y not in seen and y not in self.blocked:
                    seen.add(y)
                    stack.append(y)
        return False

    def _pending_connected(self, edges: list[tuple[str, str]], i: int) -> bool:
        return all(self._reachable(self.branch[p], self.branch[q]) for p, q in edges[i:])

    def _free_degree_ok(self) -> bool:
        for p, x in self.branch.items():
            need = sum(1 for q in self.pat.neighbors(p) if tuple(sorted((p, q))) not in self.paths)
            if need == 0:
                continue
            images = set(self.branch.values())
            direct = {frozenset(path) for path in self.paths.values() if len(path) == 2}
            free = 0
            for y in self.host.neighbors(x):
                if y in images:
                    free += frozenset((x, y)) not in direct
                elif y not in self.blocked:
                    free += 1
            if free < need:
                return False
        return True

    def _route(self, edges: list[tuple[str, str]], i: int, k: int) -> bool:
        if i == len(edges):
            return self._assign(k + 1)
        p, q = edges[i]
        s, t = self.branch[p], self.branch[q]
        key = tuple(sorted((p, q)))
        for path in self._paths(s, t):
            self._tick()
            inner = path[1:-1]
            self.paths[key] = path if key[0] == p else tuple(reversed(path))
            self.blocked.update(inner)
            if (
                self._free_degree_ok()
                and self._pending_connected(edges, i + 1)
                and self._route(edges, i + 1, k)
            ):
                return True
            self.blocked.difference_update(inner)
            del self.paths[key]
        return False

    def _assign(self, k: int) -> bool:
        if k == len(self.order):
            return True
        p = self.order[k]
        need = self.pat.degree(p)
        for x in self.host.vertices:
            if x in self.blocked or self.host.degree(x) < need:
                continue
            self._tick()
            self.branch[p] = x
            self.blocked.add(x)
            edges = [(p, q) for q in self.order[:k] if self.pat.has_edge(p, q)]
            if (
                self._symmetry_ok(p)
                and self._free_degree_ok()
                and self._pending_connected(edges, 0)
                and self._route(edges, 0, k)
            ):
                return True
            self.blocked.discard(x)
            del self.branch[p]
        return False

    def run(self) -> SubdivisionWitness | None:
        if self._assign(0):
            return SubdivisionWitness(dict(self.branch), dict(self.paths))
        return None


def _prune_low_degree(g: SimpleGraph, keep_degree: int) -> SimpleGraph:
    """Iteratively drop vertices of degree below ``keep_degree``."""
    while True:
        low = [v for v in g.vertices if g.degree(v) < keep_degree]
        if not low:
            return g
        g = g.without(low)


def contains_subdivision(
    H: SimpleGraph, P: SimpleGraph, cap: int = SUBDIVISION_CAP, budget: int = SEARCH_BUDGET
) -> SubdivisionWitness | None:
    """Find a subgraph of ``H`` that is a subdivision of ``P``; ``None`` if there is none.

    ``P`` must be 2-connected with at most 7 vertices. The search is
    exponential in the worst case; it raises :class:`SearchBudgetExceeded`
    after ``budget`` backtracking steps rather than run unbounded.
    """
    if H.order > cap:
        raise ValueError(f"subdivision search is limited to {cap} vertices (got {H.order})")
    if P.order > 7:
        raise ValueError("patterns are limited to 7 vertices")
    work = _prune_low_degree(H, 2)
    heavy = sorted((P.degree(v) for v in P.vertices), reverse=True)
    for block in blocks(work).blocks:
        if len(block) < P.order:
            continue
        sub = work.subgraph(block)
        degs = sorted((sub.degree(v) for v in sub.vertices), reverse=True)
        if any(degs[i] < heavy[i] for i in range(len(heavy))):
            continue
        search = _Search(sub, P, budget)
        witness = search.run()
        budget = search.budget
        if witness is not None:
            return witness
    return None


def is_planar(
    H: SimpleGraph, cap: int = SUBDIVISION_CAP, budget: int = SEARCH_BUDGET
) -> tuple[bool, SubdivisionWitness | None, str | None]:
    """Kuratowski test by exhaustive search: ``(planar, witness, pattern_name)``."""
    for name in ("K5", "K33"):
        w = contains_subdivision(H, pattern(name), cap, budget)
        if w is not None:
            return False, w, name
    return True, None, None


def check_orth323_necessary(G: SimpleGraph, include_k25: bool = False) -> RecognitionReport:
    """Refute membership in ORTH[3,2,3] via the root's forbidden subdivisions.

    ``G`` must be connected, twin-free and of order at least 4. The result
    is NonMember with a witness, or Inconclusive: passing this check does
    not establish membership.
    """
    if G.order < 4 or not G.is_connected():
        raise ValueError("expects a connected graph of order >= 4")
    if any(len(c) > 1 for c in twin_classes(G).classes):
        raise ValueError("expects a twin-free graph; reduce twins first")
    log = ["check necessary conditions for ORTH[3,2,3]"]
    res = root_graph(G)
    if res.root is None:
        assert res.witness is not None
        obs = Obstruction("not-line-graph", "input is not a line graph",
                          tuple(sorted(res.witness)), G.subgraph(res.witness))
        return RecognitionReport(Verdict.NON_MEMBER, 3, 3, obstruction=obs, pipeline_log=log)
    H = res.root.to_simple()
    log.append(f"root graph: {H.order} vertices, {H.size} edges")
    names = ["K5_minus_2K2", "K33"] + (["K25"] if include_k25 else [])
    for name in names:
        try:
            w = contains_subdivision(H, pattern(name))
        except SearchBudgetExceeded:
            log.append(f"{name} subdivision search exhausted its budget")
            continue
        except ValueError as exc:  # root above the size cap
            log.append(f"{name} subdivision search skipped: {exc}")
            continue
        log.append(f"{name} subdivision in root: {'found' if w else 'absent'}")
        if w is not None:
            detail = f"root contains a subdivision of {name}"
            if name == "K25":
                detail += f" ({K25_NOTE})"
            obs = Obstruction("subdivision", detail, tuple(sorted(w.branch_map.values())),
                              H, witness=w, pattern=name)
            return RecognitionReport(Verdict.NON_MEMBER, 3, 3, obstruction=obs, pipeline_log=log)
    obs = Obstruction("open-regime", "no forbidden subdivision found; membership not decided")
    return RecognitionReport(Verdict.INCONCLUSIVE, 3, 3, obstruction=obs, pipeline_log=log)
