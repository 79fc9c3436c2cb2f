"""Leaf bounds for trees of bounded degree and leaf diameter, and the
complete-graph families that separate consecutive degree bounds."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import SimpleGraph
from .layout import LayoutTree, validate_layout

__all__ = [
    "SeparatingInterval",
    "max_leaves",
    "extremal_tree",
    "separating_interval",
    "complete_line_graph_member",
]


def _check(h: int, t: int) -> None:
    if h < 3 or t < 3:
        raise ValueError(f"leaf bounds are stated for h >= 3 and t >= 3 (got h={h}, t={t})")


def max_leaves(h: int, t: int) -> int:
    """Most leaves a tree of max degree ``h`` can have when all leaf
    distances are at most ``t``."""
    _check(h, t)
    if t % 2:
        return 2 * (h - 1) ** ((t - 1) // 2)
    return h * (h - 1) ** (t // 2 - 1)


def extremal_tree(h: int, t: int) -> LayoutTree:
    """Tree attaining :func:`max_leaves`.

    Two adjacent roots, each carrying a full ``(h-1)``-ary tree; depths are
    ``(t-1)/2`` on both sides for odd ``t``, ``t/2`` and ``t/2 - 1`` for even
    ``t``. Leaves are named ``"0".."m-1"``, internal nodes ``r*``/``i*``;
    the leaf map is the identity, so the tree is a layout of ``K_m`` on its
    leaf names.
    """
    _check(h, t)
    depths = ((t - 1) // 2, (t - 1) // 2) if t % 2 else (t // 2, t // 2 - 1)
    edges = [("r0", "r1")]
    counter = {"leaf": 0, "inner": 0}

    def grow(node: str, depth: int) -> None:
        for _ in range(h - 1):
            if depth == 1:
                child = str(counter["leaf"])
                counter["leaf"] += 1
                edges.append((node, child))
            else:
                child = f"i{counter['inner']}"
                counter["inner"] += 1
                edges.append((node, child))
                grow(child, depth - 1)

    for side, depth in enumerate(depths):
        grow(f"r{side}", depth)
    tree = SimpleGraph((), edges)
    return LayoutTree.identity(tree)


@dataclass(frozen=True)
class SeparatingInterval:
    """Orders ``n`` with ``L(K_n)`` in ORTH[h+1,2,t] but not in ORTH[h,2,t]."""

    h: int
    t: int
    lo: int
    hi: int

    def __contains__(self, n: object) -> bool:
        return isinstance(n, int) and self.lo <= n <= self.hi

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))


def separating_interval(h: int, t: int) -> SeparatingInterval:
    _check(h, t)
    return SeparatingInterval(h, t, max_leaves(h, t) + 1, max_leaves(h + 1, t))


def _small_complete_layout(n: int) -> tuple[LayoutTree, SimpleGraph]:
    vs = [str(i) for i in range(n)]
    kn = SimpleGraph(vs, combinations(vs, 2))
    if n == 1:
        tree = SimpleGraph(["0"])
    elif n == 2:
        tree = SimpleGraph((), [("0", "1")])
    else:
        tree = SimpleGraph((), [("c", v) for v in vs])
    return LayoutTree.identity(tree), kn


def complete_line_graph_member(n: int, h: int, t: int) -> bool:
    """Whether ``L(K_n)`` lies in ORTH[h,2,t].

    For ``n >= 4`` this is ``n <= max_leaves(h, t)``. Smaller ``n`` are
    settled by validating an explicit layout (edge, or a star for ``K_3``).
    """
    _check(h, t)
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 3:
        layout, kn = _small_complete_layout(n)
        return validate_layout(layout, kn, h, t) is None
    return n <= max_leaves(h, t)
