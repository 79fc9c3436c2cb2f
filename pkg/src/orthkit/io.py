"""Text and DOT formats for layouts and orthodox representations.

Both formats start with the tree as an edge list (one ``u v`` pair per
line, a single label for an isolated node, ``#`` comments). A layout then
has a ``leaves:`` section with ``tree-leaf graph-vertex`` lines; a
representation has a ``paths:`` section with ``vertex end1 end2`` lines::

    # double star
    r0 r1
    r0 a
    ...
    leaves:
    a 0
"""

from __future__ import annotations

from .graph import GraphParseError, SimpleGraph, _dot_id
from .layout import LayoutTree, OrthodoxRepresentation

__all__ = [
    "format_layout",
    "parse_layout",
    "format_representation",
    "parse_representation",
    "parse_certificate",
    "layout_to_dot",
    "representation_to_dot",
]

_SECTIONS = ("leaves:", "paths:")


def _tree_lines(tree: SimpleGraph) -> list[str]:
    lines = [f"{u} {v}" for u, v in tree.edges]
    lines += [x for x in tree.vertices if tree.degree(x) == 0]
    return lines


def format_layout(T: LayoutTree) -> str:
    lines = ["# layout tree"] + _tree_lines(T.tree) + ["leaves:"]
    lines += [f"{x} {v}" for x, v in sorted(T.leaf_map.items())]
    return "\n".join(lines) + "\n"


def format_representation(R: OrthodoxRepresentation) -> str:
    lines = [f"# orthodox representation, h={R.h} t={R.t}"] + _tree_lines(R.host) + ["paths:"]
    lines += [f"{u} {a} {b}" for u, (a, b) in sorted(R.paths.items())]
    return "\n".join(lines) + "\n"


def _split_sections(text: str) -> dict[str, list[tuple[int, list[str]]]]:
    sections: dict[str, list[tuple[int, list[str]]]] = {"tree": []}
    current = "tree"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line in _SECTIONS:
            current = line[:-1]
            if current in sections:
                raise GraphParseError(f"line {lineno}: duplicate section {line!r}")
            sections[current] = []
            continue
        sections[current].append((lineno, line.split()))
    return sections


def _parse_tree(rows: list[tuple[int, list[str]]]) -> SimpleGraph:
    nodes: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, parts in rows:
        if len(parts) == 1:
            nodes.append(parts[0])
        elif len(parts) == 2:
            if parts[0] == parts[1]:
                raise GraphParseError(f"line {lineno}: loop at {parts[0]!r}")
            edges.append((parts[0], parts[1]))
        else:
            raise GraphParseError(f"line {lineno}: expected 'u v' or a single label")
    if not nodes and not edges:
        raise GraphParseError("tree section is empty")
    return SimpleGraph(nodes, edges)


def _pairs(rows: list[tuple[int, list[str]]], width: int, what: str) -> list[list[str]]:
    out = []
    for lineno, parts in rows:
        if len(parts) != width:
            raise GraphParseError(f"line {lineno}: {what} lines need {width} fields")
        out.append(parts)
    return out


def parse_layout(text: str) -> LayoutTree:
    sections = _split_sections(text)
    if "leaves" not in sections:
        raise GraphParseError("layout file has no 'leaves:' section")
    tree = _parse_tree(sections["tree"])
    leaf_map: dict[str, str] = {}
    for x, v in _pairs(sections["leaves"], 2, "leaves"):
        if x in leaf_map:
            raise GraphParseError(f"tree leaf {x!r} is mapped twice")
        leaf_map[x] = v
    return LayoutTree(tree, leaf_map)


def parse_representation(text: str, t: int = 2, h: int = 3) -> OrthodoxRepresentation:
    sections = _split_sections(text)
    if "paths" not in sections:
        raise GraphParseError("representation file has no 'paths:' section")
    host = _parse_tree(sections["tree"])
    paths: dict[str, tuple[str, str]] = {}
    for u, a, b in _pairs(sections["paths"], 3, "paths"):
        if u in paths:
            raise GraphParseError(f"vertex {u!r} has two paths")
        for end in (a, b):
            if end not in host:
                raise GraphParseError(f"path of {u!r} ends at {end!r}, which is not a host node")
        paths[u] = (a, b)
    return OrthodoxRepresentation(host, paths, t, h)


def parse_certificate(text: str, t: int = 2, h: int = 3) -> LayoutTree | OrthodoxRepresentation:
    """Parse whichever of the two formats ``text`` holds."""
    sections = _split_sections(text)
    if "paths" in sections:
        return parse_representation(text, t, h)
    if "leaves" in sections:
        return parse_layout(text)
    raise GraphParseError("certificate needs a 'leaves:' or 'paths:' section")


def layout_to_dot(T: LayoutTree, name: str = "layout") -> str:
    """Tree in DOT; leaves are boxes labelled with their graph vertex."""
    lines = [f"graph {_dot_id(name)} {{"]
    for x in T.tree.vertices:
        if x in T.leaf_map:
            lines.append(f"  {_dot_id(x)} [shape=box, label={_dot_id(T.leaf_map[x])}];")
        else:
            lines.append(f"  {_dot_id(x)} [shape=point];")
    lines += [f"  {_dot_id(u)} -- {_dot_id(v)};" for u, v in T.tree.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def representation_to_dot(R: OrthodoxRepresentation, name: str = "representation") -> str:
    """Host tree in DOT; each leaf lists the vertices whose paths end there."""
    ending: dict[str, list[str]] = {}
    for u, (a, b) in sorted(R.paths.items()):
        for end in sorted({a, b}):
            ending.setdefault(end, []).append(u)
    lines = [f"graph {_dot_id(name)} {{", f"  label={_dot_id(f'h={R.h} t={R.t}')};"]
    for x in R.host.vertices:
        if x in ending:
            label = f"{x}: {' '.join(ending[x])}"
            lines.append(f"  {_dot_id(x)} [shape=box, label={_dot_id(label)}];")
        else:
            lines.append(f"  {_dot_id(x)} [shape=point];")
    lines += [f"  {_dot_id(u)} -- {_dot_id(v)};" for u, v in R.host.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
