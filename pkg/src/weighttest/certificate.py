"""Certificate files: a presentation, a weight on every edge pair, and the verification transcript.

Layout (JSON, keys sorted, rationals as ``"p/q"`` strings)::

    {
      "format": "weighttest-certificate/1",
      "presentation": "<presentation DSL text>",
      "equation": "<equation DSL text>" | null,
      "substitution": "a:g:b:x" | null,
      "weights": [{"edge": {"iota", "tau", "label", "relator", "rotation"}, "value": "p/q"}, ...],
      "report": {...}          # informational; loading re-verifies instead of trusting it
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .dsl import format_presentation, parse_presentation
from .rewrite import Presentation
from .stargraph import StarGraph, build_star_graph
from .verifier import VerificationReport, WeightFunction, WeightError, fmt_q

__all__ = ["FORMAT", "Certificate", "CertificateError", "dump_certificate", "load_certificate"]

FORMAT = "weighttest-certificate/1"


class CertificateError(ValueError):
    pass


@dataclass
class Certificate:
    presentation: Presentation
    weights: WeightFunction
    equation: str | None = None
    substitution: str | None = None
    report: dict | None = None

    @property
    def graph(self) -> StarGraph:
        return build_star_graph(self.presentation)


def _edge_dict(g: StarGraph, eid) -> dict:
    p = g.pair(eid)
    return {"iota": str(p.iota), "tau": str(p.tau), "label": str(p.label),
            "relator": p.relator, "rotation": p.rotation}


def dump_certificate(p: Presentation, theta: WeightFunction, report: VerificationReport | None = None, *,
                     equation: str | None = None, substitution: str | None = None) -> str:
    g = build_star_graph(p)
    weights = [{"edge": _edge_dict(g, e.id), "value": fmt_q(theta[e.id])} for e in g.pairs if e.id in theta]
    doc = {
        "format": FORMAT,
        "presentation": format_presentation(p),
        "equation": equation,
        "substitution": substitution,
        "weights": weights,
        "report": report.to_dict() if report is not None else None,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _rational(text) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise CertificateError(f"not an exact rational: {text!r}") from None


def load_certificate(text: str) -> Certificate:
    """Parse a certificate; edges are matched by (relator, rotation) and cross-checked.

    Missing weights are not an error here: verification reports them.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise CertificateError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise CertificateError(f"not a {FORMAT} document")
    p = parse_presentation(doc["presentation"])
    g = build_star_graph(p)
    theta: WeightFunction = {}
    for item in doc.get("weights", []):
        edge = item["edge"]
        eid = (int(edge["relator"]), int(edge["rotation"]))
        if eid not in g.index:
            raise WeightError(f"certificate names unknown edge {eid}")
        want = _edge_dict(g, eid)
        for key in ("iota", "tau", "label"):
            if key in edge and str(edge[key]) != want[key]:
                raise CertificateError(f"edge {eid}: {key} is {want[key]!r} in the graph, "
                                       f"certificate says {edge[key]!r}")
        if eid in theta:
            raise CertificateError(f"edge {eid} weighted twice")
        theta[eid] = _rational(item["value"])
    return Certificate(p, theta, doc.get("equation"), doc.get("substitution"), doc.get("report"))
