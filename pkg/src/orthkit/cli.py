"""Command-line front end: ``orthkit <subcommand> ...``.

Exit codes: 0 Member / valid / success, 1 NonMember / invalid, 2
Inconclusive, 3 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .bounds import extremal_tree, max_leaves, separating_interval
from .generators import complete_graph
from .graph import GraphParseError, SimpleGraph, format_edge_list, graph_to_dot, line_graph, parse_graph, reduce_twins
from .io import (
    format_layout,
    format_representation,
    layout_to_dot,
    parse_certificate,
    parse_layout,
    representation_to_dot,
)
from .layout import LayoutError, LayoutTree, orthodox_representation, validate_layout, validate_representation
from .linegraph import root_graph
from .obstructions import PATTERNS, SearchBudgetExceeded, check_orth323_necessary, contains_subdivision, pattern
from .recognize import recognize
from .report import Verdict

EXIT_OK = 0
EXIT_NO = 1
EXIT_INCONCLUSIVE = 2
EXIT_ERROR = 3

DEFAULT_MAX_N = 512

_VERDICT_EXIT = {
    Verdict.MEMBER: EXIT_OK,
    Verdict.NON_MEMBER: EXIT_NO,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


class CliError(Exception):
    """Input problem reported as a one-line diagnostic and exit code 3."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 2 is taken by Inconclusive
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def max_n() -> int:
    raw = os.environ.get("ORTHKIT_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise CliError(f"ORTHKIT_MAX_N must be an integer, got {raw!r}") from None
    if value < 1:
        raise CliError("ORTHKIT_MAX_N must be positive")
    return value


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_graph(path: str) -> SimpleGraph:
    try:
        g = parse_graph(_read_text(path))
    except GraphParseError as exc:
        raise CliError(f"{path}: {exc}") from None
    cap = max_n()
    if g.order > cap:
        raise CliError(f"{path}: {g.order} vertices exceeds the limit {cap} (set ORTHKIT_MAX_N)")
    return g


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}") from None


def _positive(lo: int):
    def conv(raw: str) -> int:
        try:
            value = int(raw)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}") from None
        if value < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}")
        return value

    return conv


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_recognize(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = recognize(g, args.h, args.t, include_k25=args.include_k25)
    cert_paths: list[str] = []
    if args.emit_certificate and report.certificate is not None:
        dot_path = args.emit_certificate
        _write(dot_path, representation_to_dot(report.certificate))
        _write(dot_path + ".txt", format_representation(report.certificate))
        cert_paths = [dot_path, dot_path + ".txt"]
    if args.json:
        out = report.to_dict()
        out["certificate_files"] = cert_paths
        print(json.dumps(out, indent=2, sort_keys=True))
        return _VERDICT_EXIT[report.verdict]
    print(f"verdict: {report.verdict.value} (h={args.h}, t={args.t})")
    for line in report.pipeline_log:
        print(f"  {line}")
    if report.obstruction is not None:
        obs = report.obstruction
        print(f"obstruction: {obs.kind}: {obs.detail}")
        if obs.vertices:
            print(f"  vertices: {' '.join(obs.vertices)}")
        if obs.witness is not None:
            for (p, q), path in sorted(obs.witness.path_map.items()):
                print(f"  {p}-{q}: {' '.join(path)}")
    if report.certificate is not None:
        print(f"certificate: host tree with {report.certificate.host.order} nodes")
    for p in cert_paths:
        print(f"wrote {p}")
    return _VERDICT_EXIT[report.verdict]


def cmd_validate(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    try:
        cert = parse_certificate(_read_text(args.certificate), args.t, args.h)
    except GraphParseError as exc:
        raise CliError(f"{args.certificate}: {exc}") from None
    if isinstance(cert, LayoutTree):
        what = "layout"
        bad = validate_layout(cert, g, args.h, args.t)
    else:
        what = "representation"
        bad = validate_representation(cert, g, args.h, args.t)
    if bad is None:
        print(f"ok: valid ({args.h},{args.t}) {what}")
        return EXIT_OK
    print(f"invalid {what}: {bad.kind.value}: {bad.message}")
    print(f"  witness: {bad.witness}")
    return EXIT_NO


def cmd_represent(args: argparse.Namespace) -> int:
    H = _load_graph(args.graph)
    try:
        T = parse_layout(_read_text(args.layout))
    except GraphParseError as exc:
        raise CliError(f"{args.layout}: {exc}") from None
    try:
        R = orthodox_representation(T, H, args.t, args.h)
    except LayoutError as exc:
        print(f"invalid layout: {exc}")
        return EXIT_NO
    print(representation_to_dot(R) if args.dot else format_representation(R), end="")
    return EXIT_OK


def cmd_root(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if not g.is_connected():
        raise CliError("root needs a connected graph")
    res = root_graph(g)
    if res.root is None:
        assert res.witness is not None
        w = sorted(res.witness)
        if args.json:
            print(json.dumps({"schema": 1, "line_graph": False, "witness": w}, indent=2))
        else:
            print(f"not a line graph; induced witness: {' '.join(w)}")
        return EXIT_NO
    labels = res.root.edge_labels()
    if args.json:
        out = {
            "schema": 1,
            "line_graph": True,
            "root_vertices": list(res.root.vertices),
            "root_edges": [list(e) for e in res.root.edges],
            "phi": {v: list(res.edge_of(v)) for v in sorted(res.phi)},
        }
        print(json.dumps(out, indent=2, sort_keys=True))
        return EXIT_OK
    print(f"# root: {res.root.order} vertices, {res.root.size} edges")
    for v in sorted(res.phi):
        u, w = res.edge_of(v)
        print(f"{u} {w}  # {v} ({labels[res.phi[v]]})")
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    try:
        m = max_leaves(args.h, args.t)
        interval = separating_interval(args.h, args.t)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.dot:
        print(layout_to_dot(extremal_tree(args.h, args.t), f"extremal_{args.h}_{args.t}"), end="")
        return EXIT_OK
    print(f"max_leaves({args.h},{args.t}) = {m}")
    print(f"separating interval: [{interval.lo}, {interval.hi}]")
    print(f"  L(K_n) is in ORTH[{args.h + 1},2,{args.t}] but not ORTH[{args.h},2,{args.t}] "
          f"for {interval.lo} <= n <= {interval.hi}")
    return EXIT_OK


def cmd_obstruct(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.pattern:
        try:
            w = contains_subdivision(g, pattern(args.pattern))
        except SearchBudgetExceeded:
            print(f"{args.pattern}: search budget exhausted, undecided")
            return EXIT_INCONCLUSIVE
        except ValueError as exc:
            raise CliError(str(exc)) from None
        if w is None:
            print(f"{args.pattern}: absent")
            return EXIT_OK
        if args.dot:
            print(graph_to_dot(g, f"{args.pattern}_witness", highlight=w.edges()), end="")
            return EXIT_NO
        print(f"{args.pattern}: found")
        for p, x in sorted(w.branch_map.items()):
            print(f"  branch {p} -> {x}")
        for (p, q), path in sorted(w.path_map.items()):
            print(f"  {p}-{q}: {' '.join(path)}")
        return EXIT_NO
    reduced, _ = reduce_twins(g)
    result = EXIT_OK
    for comp in sorted(reduced.components(), key=sorted):
        C = reduced.subgraph(comp)
        if C.order < 4:
            continue
        rep = check_orth323_necessary(C, include_k25=args.include_k25)
        name = min(comp)
        if rep.verdict is Verdict.NON_MEMBER:
            assert rep.obstruction is not None
            print(f"component {name}: NonMember: {rep.obstruction.detail}")
            return EXIT_NO
        print(f"component {name}: no obstruction found")
        result = EXIT_INCONCLUSIVE
    return result


def cmd_generate(args: argparse.Namespace) -> int:
    if args.family == "line-of-complete":
        if args.n is None:
            raise CliError("line-of-complete needs n")
        print(format_edge_list(line_graph(complete_graph(args.n))), end="")
        return EXIT_OK
    if args.h is None or args.t is None:
        raise CliError(f"{args.family} needs --h and --t")
    try:
        if args.family == "extremal-tree":
            print(layout_to_dot(extremal_tree(args.h, args.t), f"extremal_{args.h}_{args.t}"), end="")
            return EXIT_OK
        interval = separating_interval(args.h, args.t)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    n = interval.lo
    print(f"# L(K{n}) is in ORTH[{args.h + 1},2,{args.t}] but not in ORTH[{args.h},2,{args.t}]")
    print(format_edge_list(line_graph(complete_graph(n))), end="")
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    text = _read_text(args.graph)
    try:
        if args.layout:
            out = layout_to_dot(parse_layout(text))
        else:
            g = parse_graph(text)
            out = graph_to_dot(g, Path(args.graph).stem if args.graph != "-" else "G")
    except GraphParseError as exc:
        raise CliError(f"{args.graph}: {exc}") from None
    if args.output:
        _write(args.output, out)
    else:
        print(out, end="")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orthkit", description="Recognize orthodox path-in-tree intersection graphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def ht(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("--h", type=_positive(2), required=required, help="host degree bound (>= 2)")
        p.add_argument("--t", type=_positive(1), required=required, help="intersection threshold (>= 1)")

    p = sub.add_parser("recognize", help="decide membership in ORTH[h,2,t]")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    ht(p)
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.add_argument("--emit-certificate", metavar="DOT", help="write the certificate as DOT and DOT.txt")
    p.add_argument("--include-k25", action="store_true", help="also refute via K2,5 subdivisions (h=t=3)")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("validate", help="check a layout or representation file")
    p.add_argument("graph", help="the laid-out graph H, or the represented graph G")
    p.add_argument("certificate", help="layout (leaves:) or representation (paths:) file")
    ht(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("represent", help="turn a layout of H into a representation of L(H)")
    p.add_argument("graph", help="edge list of H")
    p.add_argument("layout", help="layout file")
    p.add_argument("--t", type=_positive(1), required=True)
    p.add_argument("--h", type=_positive(2), default=None)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("root", help="reconstruct H with L(H) = G")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_root)

    p = sub.add_parser("bounds", help="leaf bound and separating interval")
    p.add_argument("--h", type=_positive(3), required=True)
    p.add_argument("--t", type=_positive(3), required=True)
    p.add_argument("--dot", action="store_true", help="print the extremal tree as DOT instead")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("obstruct", help="forbidden-subdivision checks")
    p.add_argument("graph")
    p.add_argument("--pattern", choices=PATTERNS, help="search this subdivision in the graph itself")
    p.add_argument("--dot", action="store_true", help="with --pattern: print the graph as DOT, witness in red")
    p.add_argument("--include-k25", action="store_true")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("generate", help="emit example graphs and trees")
    p.add_argument("family", choices=("line-of-complete", "extremal-tree", "separating-example"))
    p.add_argument("n", nargs="?", type=_positive(1))
    ht(p, required=False)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("export-dot", help="convert an edge list (or layout) to DOT")
    p.add_argument("graph")
    p.add_argument("--layout", action="store_true", help="input is a layout file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"orthkit: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
