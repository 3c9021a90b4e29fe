"""Framed chord diagrams of bouquets and their signed intersection matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .ribbon import RibbonGraph, RibbonGraphError

__all__ = [
    "FramedChordDiagram",
    "chord_diagram_from_bouquet",
    "interlaces",
    "intersection_matrix",
    "intersection_graph",
    "parse_diagram",
    "format_diagram",
]


@dataclass(frozen=True)
class FramedChordDiagram:
    """Chord ``i`` (0-based, in edge-label order) joins positions
    ``endpoints[i] = (a_i, b_i)`` on a circle numbered ``1..2n``."""

    endpoints: tuple[tuple[int, int], ...]
    framing: tuple[int, ...]
    labels: tuple[int, ...] = ()

    def __post_init__(self):
        n = len(self.endpoints)
        if len(self.framing) != n:
            raise ValueError("one framing bit per chord")
        used = sorted(p for pair in self.endpoints for p in pair)
        if used != list(range(1, 2 * n + 1)):
            raise ValueError(f"chord endpoints must use each of 1..{2 * n} once")
        if any(f not in (0, 1) for f in self.framing):
            raise ValueError("framing bits are 0 or 1")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.endpoints)

    def reoriented(self, flips) -> "FramedChordDiagram":
        """Swap ``(a_i, b_i)`` for every chord index in ``flips``."""
        flips = set(flips)
        pairs = tuple((b, a) if i in flips else (a, b) for i, (a, b) in enumerate(self.endpoints))
        return FramedChordDiagram(pairs, self.framing, self.labels)


def chord_diagram_from_bouquet(B: RibbonGraph) -> FramedChordDiagram:
    if not B.is_bouquet:
        raise RibbonGraphError(f"chord diagram needs a bouquet, got {B.num_vertices} vertices")
    position = {h: i + 1 for i, h in enumerate(B.vertices[0])}
    pairs, framing = [], []
    for a, b, s in B.edges.values():
        pa, pb = sorted((position[a], position[b]))
        pairs.append((pa, pb))
        framing.append(0 if s == 1 else 1)
    return FramedChordDiagram(tuple(pairs), tuple(framing), B.labels)


def _inside(x: int, a: int, b: int) -> bool:
    """x strictly inside the arc running forward from a to b."""
    if a < b:
        return a < x < b
    return x > a or x < b


def _sign(D: FramedChordDiagram, i: int, j: int) -> int:
    ai, bi = D.endpoints[i]
    aj, bj = D.endpoints[j]
    in_a, in_b = _inside(aj, ai, bi), _inside(bj, ai, bi)
    if in_a and not in_b:
        return 1      # a_i, a_j, b_i, b_j
    if in_b and not in_a:
        return -1     # a_i, b_j, b_i, a_j
    return 0


def interlaces(D: FramedChordDiagram, i: int, j: int) -> bool:
    for k in (i, j):
        if not 0 <= k < D.n:
            raise IndexError(f"chord index {k} out of range")
    if i == j:
        raise ValueError("a chord does not interlace itself")
    return _sign(D, i, j) != 0


def intersection_matrix(D: FramedChordDiagram) -> list[list[int]]:
    n = D.n
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = D.framing[i]
        for j in range(i + 1, n):
            s = _sign(D, i, j)
            A[i][j] = s
            A[j][i] = -s
    return A


def intersection_graph(D: FramedChordDiagram) -> set[frozenset[int]]:
    """Edges (as label pairs) of the interlacement graph."""
    L = D.labels
    return {frozenset((L[i], L[j])) for i in range(D.n) for j in range(i + 1, D.n)
            if _sign(D, i, j)}


def format_diagram(D: FramedChordDiagram) -> str:
    parts = [str(D.n)] + [f"{a} {b} {f}" for (a, b), f in zip(D.endpoints, D.framing)]
    return "; ".join(parts)


def parse_diagram(text: str) -> FramedChordDiagram:
    head, *rest = [p.strip() for p in text.strip().split(";")]
    rest = [p for p in rest if p]
    n = int(head)
    if len(rest) != n:
        raise ValueError(f"expected {n} chords, found {len(rest)}")
    pairs, framing = [], []
    for chunk in rest:
        a, b, f = (int(x) for x in chunk.split())
        pairs.append((a, b))
        framing.append(f)
    return FramedChordDiagram(tuple(pairs), tuple(framing))
