"""Membership decisions for ORTH[h,2,t].

Every route goes through the same pipeline: identify twins, split the
twin-free quotient into components, reconstruct each component's root
graph ``H``, decide whether ``H`` has an ``(h, t)``-tree layout, and turn
the layouts back into one orthodox representation of the input.

Layout decisions available:

* blocks of order at most 3 (exact for ``h = 3`` and ``t <= 2``);
* separator recursion with brute-force leaves (``t <= 2``, any ``h``);
* exhaustive search over leaf-labelled trees (small roots, any ``t``);
* forbidden subdivisions in the root (refutation only, ``h = t = 3``).
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from itertools import combinations

from .bounds import complete_line_graph_member, extremal_tree
from .enumerate import LabelledTreeBuilder, leaf_labelled_trees
from .graph import SimpleGraph, blocks, reduce_twins
from .layout import (
    LayoutTree,
    OrthodoxRepresentation,
    join_representations,
    orthodox_representation,
    shared_nodes,
    validate_layout,
    validate_representation,
    combine_layouts,
)
from .linegraph import root_graph
from .obstructions import check_orth323_necessary
from .report import Obstruction, RecognitionReport, Verdict

__all__ = [
    "BRUTEFORCE_CAP",
    "SeparatorSplit",
    "bruteforce_layout",
    "build_layout_blocks",
    "separator_split",
    "recognize_orth322",
    "recognize_orth_h2t",
    "recognize",
    "recursion_threshold",
]

log = logging.getLogger(__name__)

BRUTEFORCE_CAP = 9


def _fresh_namer(taken: set[str], prefix: str) -> Callable[[], str]:
    counter = [0]

    def fresh() -> str:
        while True:
            name = f"{prefix}{counter[0]}"
            counter[0] += 1
            if name not in taken:
                taken.add(name)
                return name

    return fresh


# ---------------------------------------------------------------------------
# Layouts from blocks of order <= 3
# ---------------------------------------------------------------------------


def build_layout_blocks(H: SimpleGraph) -> LayoutTree:
    """A (3,1)-tree layout of a connected graph whose blocks have order <= 3.

    Blocks are attached one at a time at an already placed cut vertex
    ``u``: the leaf edge of ``u`` is subdivided by a new node ``x``; a
    pendant edge ``uv`` hangs leaf ``v`` on ``x``, a triangle ``uvw`` hangs
    a new node ``y`` on ``x`` with leaves ``v`` and ``w``. Tree leaves carry
    the vertex labels of ``H``.
    """
    if H.order == 0 or not H.is_connected():
        raise ValueError("build_layout_blocks needs a connected, non-empty graph")
    bd = blocks(H)
    big = [b for b in bd.blocks if len(b) > 3]
    if big:
        raise ValueError(f"block {sorted(big[0])} has order {len(big[0])} > 3")
    if H.order == 1:
        return LayoutTree.identity(SimpleGraph(H.vertices))
    fresh = _fresh_namer(set(H.vertices), "n")
    adj: dict[str, set[str]] = {}

    def link(p: str, q: str) -> None:
        adj.setdefault(p, set()).add(q)
        adj.setdefault(q, set()).add(p)

    by_vertex: dict[str, list[frozenset[str]]] = {}
    for b in bd.blocks:
        for v in b:
            by_vertex.setdefault(v, []).append(b)

    first = min(bd.blocks, key=sorted)
    if len(first) == 2:
        link(*sorted(first))
    else:
        c = fresh()
        for v in sorted(first):
            link(c, v)
    done = {first}
    queue = sorted(first)
    while queue:
        u = queue.pop(0)
        for b in sorted(by_vertex[u], key=sorted):
            if b in done:
                continue
            done.add(b)
            (p,) = adj[u]
            x = fresh()
            adj[u].discard(p)
            adj[p].discard(u)
            link(u, x)
            link(x, p)
            others = sorted(b - {u})
            if len(others) == 1:
                link(x, others[0])
            else:
                y = fresh()
                link(x, y)
                for v in others:
                    link(y, v)
            queue.extend(others)
    tree = SimpleGraph(adj, ((p, q) for p in adj for q in adj[p]))
    return LayoutTree.identity(tree)


# ---------------------------------------------------------------------------
# Exhaustive search
# ---------------------------------------------------------------------------


def _bfs_vertex_order(H: SimpleGraph) -> list[str]:
    order: list[str] = []
    seen: set[str] = set()
    for s in sorted(H.vertices, key=lambda v: (-H.degree(v), v)):
        if s in seen:
            continue
        seen.add(s)
        frontier = [s]
        while frontier:
            order.extend(frontier)
            nxt = []
            for x in frontier:
                for y in sorted(H.neighbors(x)):
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
    return order


def _builder_to_layout(b: LabelledTreeBuilder, names: list[str]) -> LayoutTree:
    fresh = _fresh_namer(set(names), "i")
    label = {i: name for i, name in enumerate(names)}
    for x in sorted(b.adj):
        if x not in label:
            label[x] = fresh()
    tree = SimpleGraph([label[x] for x in b.adj], [(label[x], label[y]) for x, y in b.edge_list()])
    return LayoutTree.identity(tree)


def bruteforce_layout(
    H: SimpleGraph, h: int, t: int, cap: int = BRUTEFORCE_CAP
) -> LayoutTree | None:
    """Exhaustively search for an ``(h, t)``-tree layout of ``H``; ``None`` if none exists.

    Only trees with internal degrees in ``[3, h]`` are generated; a layout
    with degree-2 nodes stays valid after suppressing them, so nothing is
    lost. Leaves are inserted in BFS order of ``H`` and a partial tree is
    abandoned once two independent edges already share too many nodes
    (insertions never shrink a shared count).
    """
    if h < 3 or t < 1:
        raise ValueError(f"bruteforce_layout needs h >= 3 and t >= 1 (got h={h}, t={t})")
    n = H.order
    if n > cap:
        raise ValueError(f"brute-force search is limited to {cap} vertices (got {n})")
    if n == 0:
        raise ValueError("empty graph has no layout tree")
    if n == 1:
        return LayoutTree.identity(SimpleGraph(H.vertices))
    names = _bfs_vertex_order(H)
    idx = {v: i for i, v in enumerate(names)}
    edges = sorted(tuple(sorted((idx[u], idx[v]))) for u, v in H.edges)
    # pairs of independent edges, grouped by the later of their last endpoints
    pairs_upto: list[list[tuple[tuple[int, int], tuple[int, int]]]] = [[] for _ in range(n)]
    for e, f in combinations(edges, 2):
        if not set(e) & set(f):
            pairs_upto[max(e[1], f[1])].append((e, f))
    limit = t - 1

    def violates(b: LabelledTreeBuilder, pairs) -> bool:
        d = b.distance_oracle()
        return any(shared_nodes(d, *e, *f) > limit for e, f in pairs)

    def accept(b: LabelledTreeBuilder, k: int) -> bool:
        # attaching to an existing node changes no old path; subdividing may
        if len(b.adj[k]) == 1 and next(iter(b.adj[k])) < b.next_internal - 1:
            fresh_pairs = pairs_upto[k]
        else:
            fresh_pairs = [p for j in range(k + 1) for p in pairs_upto[j]]
        return not violates(b, fresh_pairs)

    for b in leaf_labelled_trees(n, h, accept):
        layout = _builder_to_layout(b, names)
        if validate_layout(layout, H, h, t) is None:
            return layout
    return None


# ---------------------------------------------------------------------------
# Separators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeparatorSplit:
    """Balanced split: ``A`` and ``B`` partition the vertices, every edge
    between ``A - X`` and ``B - X`` is absent, and ``X`` is small."""

    X: frozenset[str]
    A: frozenset[str]
    B: frozenset[str]

    def check(self, H: SimpleGraph, h: int, t: int) -> bool:
        n = H.order
        p = _separator_size(h, t)
        if self.A & self.B or self.A | self.B != set(H.vertices) or not self.X <= self.A | self.B:
            return False
        if not all(n <= h * len(s) <= (h - 1) * n for s in (self.A, self.B)):
            return False
        if len(self.X) > p:
            return False
        return not any(
            (u in self.A) != (v in self.A) and u not in self.X and v not in self.X
            for u, v in H.edges
        )


def _separator_size(h: int, t: int) -> int:
    return max(1, (h - 1) ** (t - 2)) if t >= 2 else 1


def _split_for(H: SimpleGraph, X: frozenset[str], h: int) -> SeparatorSplit | None:
    n = H.order
    rest = H.without(X)
    comps = sorted(rest.components(), key=lambda c: (len(c), sorted(c)))
    if any(len(c) * h > (h - 1) * n for c in comps):
        return None
    everything = frozenset(H.vertices)
    for c in comps:
        if h * len(c) >= n:
            return SeparatorSplit(X, c, everything - c)
    A: set[str] = set()
    for c in comps:
        A |= c
        if h * len(A) >= n:
            return SeparatorSplit(X, frozenset(A), everything - A)
    return None


def separator_split(H: SimpleGraph, h: int, t: int) -> SeparatorSplit | None:
    """A balanced split with a small separator, or ``None`` when none exists.

    ``None`` certifies that ``H`` has no ``(h, t)``-tree layout. The search
    tries ``X`` empty and then every set of ``max(1, (h-1)^(t-2))``
    vertices.
    """
    n = H.order
    if n < 2:
        raise ValueError("separator_split needs at least two vertices")
    if h < 2:
        raise ValueError("separator_split needs h >= 2")
    p = _separator_size(h, t)
    vs = sorted(H.vertices)
    if p * h >= (h - 1) * n:
        k = -(-n // h)
        A = frozenset(vs[:k])
        B = frozenset(vs[k:])
        return SeparatorSplit(B, A, B)
    for X in [()] + list(combinations(vs, p)):
        split = _split_for(H, frozenset(X), h)
        if split is not None:
            return split
    return None


# ---------------------------------------------------------------------------
# Layout deciders (one root component at a time)
# ---------------------------------------------------------------------------


@dataclass
class _Decision:
    layout: LayoutTree | None = None
    obstruction: Obstruction | None = None
    verdict: Verdict = Verdict.MEMBER


def _decide_blocks(H: SimpleGraph, log_lines: list[str]) -> _Decision:
    bd = blocks(H)
    big = [b for b in bd.blocks if len(b) > 3]
    if big:
        b = max(big, key=lambda s: (len(s), sorted(s)))
        log_lines.append(f"root block {sorted(b)} has order {len(b)} > 3")
        obs = Obstruction("oversized-block", f"root has a block of order {len(b)}",
                          tuple(sorted(b)), H)
        return _Decision(obstruction=obs, verdict=Verdict.NON_MEMBER)
    log_lines.append(f"all {len(bd.blocks)} root blocks have order <= 3")
    return _Decision(layout=build_layout_blocks(H))


def recursion_threshold(h: int) -> int:
    """Pieces up to this order are decided by exhaustive search."""
    return max(h + 1, 7)


def _union_layouts(layouts: list[LayoutTree]) -> LayoutTree:
    """Layout of a disjoint union: chain the trees through subdivided leaf edges."""
    adj: dict[str, set[str]] = {}
    leaf_map: dict[str, str] = {}
    taken: set[str] = set()
    prev_join: str | None = None
    for T in layouts:
        ren = {}
        for x in T.tree.vertices:
            name = x
            while name in taken:
                name += "'"
            taken.add(name)
            ren[x] = name
        for x, nbrs in T.tree.adjacency().items():
            adj[ren[x]] = {ren[y] for y in nbrs}
        leaf_map.update({ren[x]: v for x, v in T.leaf_map.items()})
        leaf = ren[min(T.leaf_map)]
        j = "u0"
        k = 0
        while j in taken:
            k += 1
            j = f"u{k}"
        taken.add(j)
        adj[j] = {leaf}
        for nbr in list(adj[leaf]):
            adj[leaf].discard(nbr)
            adj[nbr].discard(leaf)
            adj[nbr].add(j)
            adj[j].add(nbr)
        adj[leaf].add(j)
        if prev_join is not None:
            adj[j].add(prev_join)
            adj[prev_join].add(j)
        prev_join = j
    tree = SimpleGraph(adj, ((p, q) for p in adj for q in adj[p]))
    return LayoutTree(tree, leaf_map)


class _Recursion:
    def __init__(self, h: int, t: int, log_lines: list[str]) -> None:
        self.h = h
        self.t = t
        self.log = log_lines
        self.base = recursion_threshold(h)
        self.pieces = 0

    def layout(self, H: SimpleGraph) -> LayoutTree | _Decision:
        comps = H.components()
        if len(comps) > 1:
            parts = []
            for c in sorted(comps, key=sorted):
                sub = self.layout(H.subgraph(c))
                if isinstance(sub, _Decision):
                    return sub
                parts.append(sub)
            return _union_layouts(parts)
        n = H.order
        if n <= self.base:
            self.pieces += 1
            if n > BRUTEFORCE_CAP:
                obs = Obstruction("open-regime", f"piece of order {n} exceeds the brute-force cap",
                                  tuple(H.vertices), H)
                return _Decision(obstruction=obs, verdict=Verdict.INCONCLUSIVE)
            T = bruteforce_layout(H, self.h, self.t)
            if T is None:
                self.log.append(f"piece {sorted(H.vertices)} has no ({self.h},{self.t})-layout")
                obs = Obstruction("no-layout", "exhaustive search found no layout for this piece",
                                  tuple(H.vertices), H)
                return _Decision(obstruction=obs, verdict=Verdict.NON_MEMBER)
            return T
        split = separator_split(H, self.h, self.t)
        if split is None:
            self.log.append(f"no balanced separator in piece of order {n}")
            obs = Obstruction("no-separator", "piece has no balanced split with a one-vertex separator",
                              tuple(H.vertices), H)
            return _Decision(obstruction=obs, verdict=Verdict.NON_MEMBER)
        A, B = split.A, split.B
        if split.X and next(iter(split.X)) in B:
            A, B = B, A
        cross = sorted(
            v for x in split.X for v in H.neighbors(x) if v in B
        )
        if not split.X or not cross:
            return self._union(H, A, B)
        if len(split.X) != 1:
            raise AssertionError("separator recursion expects a one-vertex separator")
        (a,) = split.X
        b = cross[0]
        left = self.layout(H.subgraph(A | {b}))
        if isinstance(left, _Decision):
            return left
        right = self.layout(H.subgraph(B | {a}))
        if isinstance(right, _Decision):
            return right
        return combine_layouts(left, right, a, b, H)

    def _union(self, H: SimpleGraph, A: frozenset[str], B: frozenset[str]) -> LayoutTree | _Decision:
        parts = []
        for side in (A, B):
            sub = self.layout(H.subgraph(side))
            if isinstance(sub, _Decision):
                return sub
            parts.append(sub)
        return _union_layouts(parts)


def _decide_recursive(H: SimpleGraph, h: int, t: int, log_lines: list[str]) -> _Decision:
    rec = _Recursion(h, t, log_lines)
    out = rec.layout(H)
    log_lines.append(f"separator recursion used {rec.pieces} base pieces")
    if isinstance(out, _Decision):
        return out
    return _Decision(layout=out)


def _prune_unlabelled(T: LayoutTree, keep: set[str]) -> LayoutTree:
    adj = {x: set(n) for x, n in T.tree.adjacency().items()}
    leaf_map = {x: v for x, v in T.leaf_map.items() if v in keep}
    changed = True
    while changed:
        changed = False
        for x in sorted(adj):
            if len(adj[x]) <= 1 and x not in leaf_map and len(adj) > 1:
                for y in adj.pop(x):
                    adj[y].discard(x)
                changed = True
    tree = SimpleGraph(adj, ((p, q) for p in adj for q in adj[p]))
    return LayoutTree(tree, leaf_map)


def _complete_root_layout(H: SimpleGraph, h: int, t: int, log_lines: list[str]) -> _Decision | None:
    n = H.order
    if n < 4 or H.size != n * (n - 1) // 2:
        return None
    if not complete_line_graph_member(n, h, t):
        log_lines.append(f"root is K{n}; more than the {h},{t} leaf bound allows")
        obs = Obstruction("no-layout", f"root is K{n}, which exceeds the leaf bound for (h,t)=({h},{t})",
                          tuple(H.vertices), H)
        return _Decision(obstruction=obs, verdict=Verdict.NON_MEMBER)
    big = extremal_tree(h, t)
    names = dict(zip(sorted(big.leaf_map, key=int), sorted(H.vertices)))
    T = _prune_unlabelled(LayoutTree(big.tree, names), set(H.vertices))
    log_lines.append(f"root is K{n}; using a pruned extremal tree")
    return _Decision(layout=T)


def _decide_general(
    C: SimpleGraph, H: SimpleGraph, h: int, t: int, include_k25: bool, log_lines: list[str]
) -> _Decision:
    if all(len(b) <= 3 for b in blocks(H).blocks):
        log_lines.append("root blocks have order <= 3; a (3,1)-layout suffices")
        return _Decision(layout=build_layout_blocks(H))
    if h == 3 and t == 3 and C.order >= 4:
        rep = check_orth323_necessary(C, include_k25=include_k25)
        log_lines.extend(rep.pipeline_log[2:])
        if rep.verdict is Verdict.NON_MEMBER:
            return _Decision(obstruction=rep.obstruction, verdict=Verdict.NON_MEMBER)
    decided = _complete_root_layout(H, h, t, log_lines)
    if decided is not None:
        return decided
    if H.order <= BRUTEFORCE_CAP:
        T = bruteforce_layout(H, h, t)
        if T is None:
            log_lines.append(f"exhaustive search: root has no ({h},{t})-layout")
            obs = Obstruction("no-layout", "exhaustive search over leaf-labelled trees found no layout",
                              tuple(H.vertices), H)
            return _Decision(obstruction=obs, verdict=Verdict.NON_MEMBER)
        log_lines.append("exhaustive search found a layout")
        return _Decision(layout=T)
    log_lines.append(f"root has {H.order} vertices, above the brute-force cap {BRUTEFORCE_CAP}")
    obs = Obstruction("open-regime",
                      f"no exact method for (h,t)=({h},{t}) on a root of order {H.order}",
                      tuple(H.vertices), H)
    return _Decision(obstruction=obs, verdict=Verdict.INCONCLUSIVE)


# ---------------------------------------------------------------------------
# Pipeline
# ---------------------------------------------------------------------------


Decider = Callable[[SimpleGraph, SimpleGraph, list[str]], _Decision]


def _pipeline(G: SimpleGraph, h: int, t: int, decide: Decider) -> RecognitionReport:
    log_lines: list[str] = []
    if G.order == 0:
        host = SimpleGraph(["r"])
        return RecognitionReport(Verdict.MEMBER, h, t, OrthodoxRepresentation(host, {}, t, h),
                                 pipeline_log=["empty graph"])
    reduced, rep = reduce_twins(G)
    log_lines.append(f"twin reduction: {G.order} -> {reduced.order} vertices")
    comps = sorted(reduced.components(), key=sorted)
    log_lines.append(f"{len(comps)} component(s)")
    parts: list[OrthodoxRepresentation] = []
    layouts: list[tuple[SimpleGraph, LayoutTree]] = []
    pending: RecognitionReport | None = None
    for i, comp in enumerate(comps):
        C = reduced.subgraph(comp)
        res = root_graph(C)
        if res.root is None:
            assert res.witness is not None
            w = tuple(sorted(res.witness))
            log_lines.append(f"component {i}: not a line graph (witness {list(w)})")
            obs = Obstruction("not-line-graph", "an induced subgraph is not a line graph",
                              w, C.subgraph(w))
            return RecognitionReport(Verdict.NON_MEMBER, h, t, obstruction=obs, pipeline_log=log_lines)
        H = res.root.to_simple()
        log_lines.append(f"component {i}: root has {H.order} vertices and {H.size} edges")
        decision = decide(C, H, log_lines)
        if decision.verdict is Verdict.NON_MEMBER:
            return RecognitionReport(Verdict.NON_MEMBER, h, t, obstruction=decision.obstruction,
                                     pipeline_log=log_lines)
        if decision.verdict is Verdict.INCONCLUSIVE:
            if pending is None:
                pending = RecognitionReport(Verdict.INCONCLUSIVE, h, t,
                                            obstruction=decision.obstruction, pipeline_log=log_lines)
            continue
        assert decision.layout is not None
        layouts.append((H, decision.layout))
        R = orthodox_representation(decision.layout, H, t, h)
        label = {e: lab for e, lab in zip(H.edges, _edge_labels(H))}
        paths = {v: R.paths[label[res.edge_of(v)]] for v in C.vertices}
        host = R.host
        if len(comps) > 1:
            ren = {x: f"{i}.{x}" for x in host.vertices}
            host = host.relabel(ren)
            paths = {v: (ren[a], ren[b]) for v, (a, b) in paths.items()}
        parts.append(OrthodoxRepresentation(host, paths, t, h))
    if pending is not None:
        return pending
    cert = parts[0]
    for R in parts[1:]:
        cert = join_representations(cert, R)
    full = OrthodoxRepresentation(cert.host, {v: cert.paths[rep[v]] for v in G.vertices}, t, h)
    bad = validate_representation(full, G, h, t)
    if bad is not None:
        raise AssertionError(f"internal error: assembled certificate is invalid: {bad}")
    log_lines.append(f"certificate: host tree of order {full.host.order}")
    return RecognitionReport(Verdict.MEMBER, h, t, full, layouts, pipeline_log=log_lines)


def _edge_labels(H: SimpleGraph) -> list[str]:
    return [f"{u}-{v}" for u, v in H.edges]


def recognize_orth322(G: SimpleGraph) -> RecognitionReport:
    """Decide ORTH[3,2,2]: the root of every component must have blocks of order <= 3."""
    return _pipeline(G, 3, 2, lambda C, H, lines: _decide_blocks(H, lines))


def recognize_orth_h2t(G: SimpleGraph, h: int, t: int) -> RecognitionReport:
    """Decide ORTH[h,2,t] for ``t`` in {1, 2} by separator recursion on the root."""
    if t not in (1, 2):
        raise ValueError(f"recognize_orth_h2t handles t in {{1, 2}} (got {t}); use bruteforce_layout")
    if h < 3:
        raise ValueError("recognize_orth_h2t needs h >= 3")
    return _pipeline(G, h, t, lambda C, H, lines: _decide_recursive(H, h, t, lines))


# ---------------------------------------------------------------------------
# Degree bound 2
# ---------------------------------------------------------------------------


def _recognize_h2(G: SimpleGraph, t: int) -> RecognitionReport:
    """Hosts of maximum degree 2 are paths with two leaves ``l`` and ``r``.

    Every path is ``(l, l)``, ``(r, r)`` or ``(l, r)``. For ``t >= 2`` this
    leaves a single clique or two isolated vertices; for ``t = 1`` two
    cliques that overlap, with no edges between their private parts.
    """
    h = 2
    lines = ["degree bound 2: hosts are paths"]
    vs = G.vertices
    n = G.order
    classes: dict[str, list[str]] | None = None
    complete = G.size == n * (n - 1) // 2
    if n == 0:
        classes = {}
    elif complete:
        classes = {"lr": list(vs)}
    elif n == 2 and G.size == 0:
        classes = {"l": [vs[0]], "r": [vs[1]]}
    elif t == 1:
        reduced, rep = reduce_twins(G)
        members: dict[str, list[str]] = {}
        for v in vs:
            members.setdefault(rep[v], []).append(v)
        if reduced.order == 2 and reduced.size == 0:
            a, b = reduced.vertices
            classes = {"l": members[a], "r": members[b]}
        elif reduced.order == 3 and reduced.size == 2:
            mid = next(v for v in reduced.vertices if reduced.degree(v) == 2)
            a, b = sorted(v for v in reduced.vertices if v != mid)
            classes = {"l": members[a], "lr": members[mid], "r": members[b]}
    if classes is None:
        lines.append("not one of the graphs representable on a path host")
        detail = ("for t >= 2 only a clique or two isolated vertices fit"
                  if t >= 2 else "twin quotient is not K1, 2K1 or P3")
        obs = Obstruction("small-degree-table", detail, tuple(vs), G)
        return RecognitionReport(Verdict.NON_MEMBER, h, t, obstruction=obs, pipeline_log=lines)
    k = max(2, t)
    nodes = ["l"] + [f"p{i}" for i in range(1, k - 1)] + ["r"]
    host = SimpleGraph(nodes, zip(nodes, nodes[1:]))
    ends = {"l": ("l", "l"), "r": ("r", "r"), "lr": ("l", "r")}
    paths = {v: ends[c] for c, group in classes.items() for v in group}
    cert = OrthodoxRepresentation(host, paths, t, h)
    bad = validate_representation(cert, G, h, t)
    if bad is not None:
        raise AssertionError(f"internal error: path-host certificate is invalid: {bad}")
    lines.append("certificate on a path host")
    return RecognitionReport(Verdict.MEMBER, h, t, cert, pipeline_log=lines)


# ---------------------------------------------------------------------------
# Dispatcher
# ---------------------------------------------------------------------------


def recognize(G: SimpleGraph, h: int, t: int, include_k25: bool = False) -> RecognitionReport:
    """Decide membership of ``G`` in ORTH[h,2,t], as far as exact methods reach.

    * ``h = 2``: path hosts, decided directly.
    * ``h = 3``, ``t <= 2``: blocks of the root.
    * ``h >= 4``, ``t <= 2``: separator recursion.
    * ``t >= 3``: blocks of order <= 3 certify membership; complete roots
      use the leaf bound; for ``h = t = 3`` forbidden subdivisions refute;
      small roots go to exhaustive search; anything else is Inconclusive.
    """
    if h < 2 or t < 1:
        raise ValueError(f"need h >= 2 and t >= 1 (got h={h}, t={t})")
    if h == 2:
        return _recognize_h2(G, t)
    if t <= 2 and h == 3:
        rep = _pipeline(G, 3, t, lambda C, H, lines: _decide_blocks(H, lines))
    elif t <= 2:
        rep = recognize_orth_h2t(G, h, t)
    else:
        rep = _pipeline(G, h, t, lambda C, H, lines: _decide_general(C, H, h, t, include_k25, lines))
    log.debug("recognize(h=%d, t=%d): %s", h, t, rep.verdict.value)
    return rep
