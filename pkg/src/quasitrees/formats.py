"""Text and JSON forms for ribbon graphs, matrices and polynomials.

Ribbon graph text::

    v: 0 2 1 3          # one line per vertex, half-edge ids in rotation order
    v:                  # a bare vertex
    1: 0 1 +1           # edge table, "label: h1 h2 sign"
    2: 2 3 -1
"""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .linalg import IntPolynomial
from .ribbon import RibbonGraph, RibbonGraphError

__all__ = [
    "ribbon_to_text",
    "ribbon_from_text",
    "ribbon_to_dict",
    "ribbon_from_dict",
    "matrix_to_csv",
    "poly_to_dict",
    "dumps",
]


def ribbon_to_text(G: RibbonGraph) -> str:
    lines = ["v:" + "".join(f" {h}" for h in rot) for rot in G.vertices]
    lines += [f"{lab}: {a} {b} {s:+d}" for lab, (a, b, s) in G.edges.items()]
    return "\n".join(lines) + "\n"


def ribbon_from_text(text: str) -> RibbonGraph:
    vertices, edges = [], {}
    for raw in text.splitlines():
        line = raw.split("#")[0].strip()
        if not line:
            continue
        head, _, body = line.partition(":")
        head = head.strip()
        try:
            if head == "v":
                vertices.append(tuple(int(x) for x in body.split()))
            else:
                a, b, s = body.split()
                edges[int(head)] = (int(a), int(b), int(s))
        except ValueError as exc:
            raise RibbonGraphError(f"cannot parse line {raw!r}") from exc
    return RibbonGraph(tuple(vertices), edges)


def ribbon_to_dict(G: RibbonGraph) -> dict:
    return {
        "vertices": [list(r) for r in G.vertices],
        "edges": {str(lab): [a, b, s] for lab, (a, b, s) in G.edges.items()},
        "labels": list(G.labels),
    }


def ribbon_from_dict(obj: dict) -> RibbonGraph:
    edges = {int(k): tuple(v) for k, v in obj["edges"].items()}
    return RibbonGraph(tuple(tuple(r) for r in obj["vertices"]), edges)


def matrix_to_csv(M: Sequence[Sequence[int]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(M)
    return buf.getvalue()


def poly_to_dict(p: IntPolynomial) -> dict:
    return {"coeffs": list(p.coeffs), "text": str(p)}


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
