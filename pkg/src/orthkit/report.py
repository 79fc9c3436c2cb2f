"""Verdicts and reports shared by the recognizers and the CLI."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from .graph import SimpleGraph
from .layout import LayoutTree, OrthodoxRepresentation

if TYPE_CHECKING:
    from .obstructions import SubdivisionWitness

__all__ = ["Verdict", "Obstruction", "RecognitionReport", "REPORT_SCHEMA"]

REPORT_SCHEMA = 1


class Verdict(str, enum.Enum):
    MEMBER = "Member"
    NON_MEMBER = "NonMember"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Obstruction:
    """Why a graph was rejected (or why no decision was reached).

    ``kind`` is one of ``not-line-graph``, ``oversized-block``,
    ``no-separator``, ``no-layout``, ``subdivision``, ``small-degree-table``
    or ``open-regime``. ``vertices`` live in ``graph``: for
    ``not-line-graph`` that is the (twin-reduced) input component, for the
    others the reconstructed root or a piece of it.
    """

    kind: str
    detail: str
    vertices: tuple[str, ...] = ()
    graph: SimpleGraph | None = None
    witness: SubdivisionWitness | None = None
    pattern: str | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind, "detail": self.detail, "vertices": list(self.vertices)}
        if self.graph is not None:
            out["graph_edges"] = [list(e) for e in self.graph.edges]
        if self.pattern is not None:
            out["pattern"] = self.pattern
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


@dataclass
class RecognitionReport:
    verdict: Verdict
    h: int
    t: int
    certificate: OrthodoxRepresentation | None = None
    layouts: list[tuple[SimpleGraph, LayoutTree]] = field(default_factory=list)
    obstruction: Obstruction | None = None
    pipeline_log: list[str] = field(default_factory=list)

    @property
    def is_member(self) -> bool:
        return self.verdict is Verdict.MEMBER

    def to_dict(self) -> dict[str, Any]:
        cert = None
        if self.certificate is not None:
            cert = {
                "host_edges": [list(e) for e in self.certificate.host.edges],
                "host_nodes": list(self.certificate.host.vertices),
                "paths": {u: list(p) for u, p in sorted(self.certificate.paths.items())},
            }
        return {
            "schema": REPORT_SCHEMA,
            "verdict": self.verdict.value,
            "h": self.h,
            "t": self.t,
            "pipeline_log": list(self.pipeline_log),
            "obstruction": self.obstruction.to_dict() if self.obstruction else None,
            "certificate": cert,
        }
