"""Ribbon graphs as signed rotation systems.

A ribbon graph is stored as a tuple of vertex rotations (cyclic sequences of
half-edge ids) plus an edge table ``label -> (h1, h2, sign)``; ``sign == -1``
marks an edge carrying a half-twist relative to the local orientations of its
end vertices.

Boundary tracing works on *flags*: each half-edge ``h`` owns two side-arcs,
``L(h)`` (towards the previous half-edge in the rotation) and ``R(h)``
(towards the next one).  Three fixed-point-free involutions act on flags:

``corner``
    ``R(h) <-> L(next(h))``, the arc of vertex boundary between two ribbon ends.
``end``
    ``L(h) <-> R(h)``, across the attaching segment of a ribbon end.
``side``
    the long sides of an edge ribbon: ``L(h1) <-> R(h2)`` for an untwisted
    edge and ``L(h1) <-> L(h2)`` for a twisted one.

The boundary of the spanning subgraph ``(V, F)`` is traced by ``corner``
together with ``side`` on flags of edges in ``F`` and ``end`` elsewhere, so
the boundary components are the orbits of that pair of involutions.  Swapping
``end`` and ``side`` on the edges of ``A`` gives the partial dual
``G^delta(A)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "RibbonGraph",
    "RibbonGraphError",
    "parse_signed_rotation",
    "from_signed_rotation",
    "signed_rotation",
    "boundary_components",
    "boundary_profile",
    "boundary_histogram",
    "quasi_tree_count",
    "quasi_tree_sets",
    "delete_edge",
    "partial_dual",
    "partial_petrial",
    "contract_edge",
    "one_vertex_join",
    "is_orientable",
    "fingerprint",
    "kappa_by_deletion_contraction",
    "path_p2",
]

# masks per vectorised chunk; 2**14 x 4|E| int64 stays well under 100 MB at |E| = 24
CHUNK_BITS = 14


class RibbonGraphError(ValueError):
    pass


def _canonical_rotation(rot: list[int]) -> tuple[int, ...]:
    if not rot:
        return ()
    k = rot.index(min(rot))
    return tuple(rot[k:] + rot[:k])


@dataclass(frozen=True)
class RibbonGraph:
    vertices: tuple[tuple[int, ...], ...]
    edges: Mapping[int, tuple[int, int, int]] = field(compare=True)

    def __post_init__(self):
        # canonical form: each rotation starts at its smallest id, vertices
        # sorted by that id, bare vertices last
        vertices = [_canonical_rotation([int(h) for h in rot]) for rot in self.vertices]
        vertices.sort(key=lambda r: (not r, r[:1]))
        vertices = tuple(vertices)
        object.__setattr__(self, "vertices", vertices)
        edges = {int(k): (int(a), int(b), int(s)) for k, (a, b, s) in self.edges.items()}
        object.__setattr__(self, "edges", dict(sorted(edges.items())))

        seen = [h for rot in vertices for h in rot]
        if len(seen) != len(set(seen)):
            raise RibbonGraphError("a half-edge appears more than once in the rotations")
        used = []
        for label, (a, b, s) in self.edges.items():
            if a == b:
                raise RibbonGraphError(f"edge {label} uses half-edge {a} twice")
            if s not in (1, -1):
                raise RibbonGraphError(f"edge {label} has sign {s}, expected +1 or -1")
            used += [a, b]
        if sorted(used) != sorted(seen):
            raise RibbonGraphError("edge table and vertex rotations disagree on half-edges")

    # -- basic accessors ---------------------------------------------------

    @property
    def labels(self) -> tuple[int, ...]:
        """Edge labels in matrix/bitmask order."""
        return tuple(self.edges)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def is_bouquet(self) -> bool:
        return len(self.vertices) == 1

    def vertex_of(self) -> dict[int, int]:
        return {h: i for i, rot in enumerate(self.vertices) for h in rot}

    def edge_of(self) -> dict[int, int]:
        out = {}
        for label, (a, b, _) in self.edges.items():
            out[a] = label
            out[b] = label
        return out

    def is_loop(self, label: int) -> bool:
        a, b, _ = self.edges[label]
        where = self.vertex_of()
        return where[a] == where[b]

    def mask_of(self, subset: Iterable[int]) -> int:
        index = {lab: i for i, lab in enumerate(self.labels)}
        mask = 0
        for lab in subset:
            if lab not in index:
                raise RibbonGraphError(f"unknown edge label {lab}")
            mask |= 1 << index[lab]
        return mask

    def subset_of(self, mask: int) -> frozenset[int]:
        return frozenset(lab for i, lab in enumerate(self.labels) if mask >> i & 1)

    # -- flag structure ----------------------------------------------------

    @cached_property
    def _flags(self):
        """Flag involutions as int arrays; flag ``2k`` is L and ``2k+1`` is R
        of the k-th half-edge in sorted id order."""
        halves = sorted(h for rot in self.vertices for h in rot)
        idx = {h: k for k, h in enumerate(halves)}
        nflag = 2 * len(halves)
        corner = np.empty(nflag, dtype=np.int64)
        end = np.arange(nflag, dtype=np.int64) ^ 1
        side = np.empty(nflag, dtype=np.int64)
        bit = np.empty(nflag, dtype=np.int64)
        for rot in self.vertices:
            d = len(rot)
            for i, h in enumerate(rot):
                r = 2 * idx[h] + 1
                l_next = 2 * idx[rot[(i + 1) % d]]
                corner[r] = l_next
                corner[l_next] = r
        for pos, (a, b, s) in enumerate(self.edges.values()):
            la, ra = 2 * idx[a], 2 * idx[a] + 1
            lb, rb = 2 * idx[b], 2 * idx[b] + 1
            if s == 1:
                pairs = ((la, rb), (ra, lb))
            else:
                pairs = ((la, lb), (ra, rb))
            for x, y in pairs:
                side[x] = y
                side[y] = x
            bit[[la, ra, lb, rb]] = pos
        bare = sum(1 for rot in self.vertices if not rot)
        return halves, corner, end, side, bit, bare

    def __repr__(self):
        return f"RibbonGraph(vertices={self.vertices!r}, edges={self.edges!r})"


# -- construction from signed rotations -----------------------------------


def parse_signed_rotation(text: str | Sequence[int]) -> RibbonGraph:
    """Parse ``"-1,4,2,1,3,2,4,3"`` (or a token sequence) into a bouquet."""
    if isinstance(text, str):
        body = text.strip().strip("()").replace(" ", "")
        tokens = [] if not body else [t for t in body.split(",")]
        try:
            tokens = [int(t) for t in tokens]
        except ValueError as exc:
            raise RibbonGraphError(f"bad token in signed rotation {text!r}") from exc
    else:
        tokens = [int(t) for t in text]
    return from_signed_rotation(tokens)


def from_signed_rotation(tokens: Sequence[int]) -> RibbonGraph:
    if any(t == 0 for t in tokens):
        raise RibbonGraphError("zero is not a valid edge label")
    counts = Counter(abs(t) for t in tokens)
    bad = sorted(lab for lab, c in counts.items() if c != 2)
    if bad:
        raise RibbonGraphError(f"labels {bad} do not occur exactly twice")
    n = len(counts)
    if sorted(counts) != list(range(1, n + 1)):
        raise RibbonGraphError(f"labels must be 1..{n}, got {sorted(counts)}")
    first: dict[int, int] = {}
    edges = {}
    for pos, t in enumerate(tokens):
        lab = abs(t)
        if lab in first:
            p = first[lab]
            sign = 1 if (tokens[p] > 0) == (t > 0) else -1
            edges[lab] = (p, pos, sign)
        else:
            first[lab] = pos
    return RibbonGraph(vertices=(tuple(range(len(tokens))),), edges=edges)


def signed_rotation(B: RibbonGraph) -> tuple[int, ...]:
    """Tokens of a bouquet in rotation order; twisted edges get a minus on
    their first occurrence."""
    if not B.is_bouquet:
        raise RibbonGraphError("signed rotation requires exactly one vertex")
    owner = B.edge_of()
    seen = set()
    out = []
    for h in B.vertices[0]:
        lab = owner[h]
        if lab not in seen and B.edges[lab][2] == -1:
            out.append(-lab)
        else:
            out.append(lab)
        seen.add(lab)
    return tuple(out)


# -- boundary tracing -------------------------------------------------------


def boundary_components(G: RibbonGraph, F: Iterable[int] = ()) -> int:
    """Number of boundary components of the spanning subgraph ``(V, F)``.

    Plain orbit walk over the flags; :func:`boundary_profile` is the
    vectorised version used for whole-profile enumeration.
    """
    mask = G.mask_of(F)
    _, corner, end, side, bit, bare = G._flags
    corner = corner.tolist()
    step = [side[f] if mask >> bit[f] & 1 else end[f] for f in range(len(corner))]
    seen = [False] * len(corner)
    count = 0
    for start in range(len(corner)):
        if seen[start]:
            continue
        count += 1
        f = start
        while not seen[f]:
            seen[f] = True
            g = int(step[f])
            seen[g] = True
            f = corner[g]
    return count + bare


def _count_cycles(perm: np.ndarray) -> np.ndarray:
    """Cycle counts of a batch of permutations (one per row)."""
    rows, n = perm.shape
    if n == 0:
        return np.zeros(rows, dtype=np.int64)
    label = np.broadcast_to(np.arange(n, dtype=np.int64), perm.shape).copy()
    p = perm.copy()
    span = 1
    while span < n:
        label = np.minimum(label, np.take_along_axis(label, p, axis=1))
        p = np.take_along_axis(p, p, axis=1)
        span *= 2
    return (label == np.arange(n)).sum(axis=1)


def _profile_range(G: RibbonGraph, lo: int, hi: int) -> np.ndarray:
    """Boundary counts for masks ``lo <= mask < hi``."""
    _, corner, end, side, bit, bare = G._flags
    masks = np.arange(lo, hi, dtype=np.int64)
    if corner.size == 0:
        return np.full(hi - lo, bare, dtype=np.int64)
    chosen = (masks[:, None] >> bit[None, :]) & 1
    step = np.where(chosen == 1, side[None, :], end[None, :])
    perm = corner[step]
    # corner∘step has two cycles per boundary component
    return _count_cycles(perm) // 2 + bare


def boundary_profile(G: RibbonGraph, lo: int = 0, hi: int | None = None) -> np.ndarray:
    """Boundary component counts indexed by edge-subset bitmask.

    Bit ``i`` of a mask selects ``G.labels[i]``; entry 0 equals ``|V|``.
    """
    if hi is None:
        hi = 1 << G.num_edges
    parts = []
    chunk = 1 << CHUNK_BITS
    for start in range(lo, hi, chunk):
        parts.append(_profile_range(G, start, min(hi, start + chunk)))
    if not parts:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(parts)


def boundary_histogram(G: RibbonGraph, lo: int = 0, hi: int | None = None) -> Counter:
    """``Counter`` mapping n -> f_n(G), the number of subsets with n boundary
    components (restricted to the mask range when given)."""
    values, counts = np.unique(boundary_profile(G, lo, hi), return_counts=True)
    return Counter({int(v): int(c) for v, c in zip(values, counts)})


def quasi_tree_count(G: RibbonGraph) -> int:
    return boundary_histogram(G).get(1, 0)


def quasi_tree_sets(G: RibbonGraph) -> list[int]:
    """Bitmasks of the quasi-tree edge sets, in increasing order."""
    return np.flatnonzero(boundary_profile(G) == 1).tolist()


# -- operations -------------------------------------------------------------


def _check_labels(G: RibbonGraph, labels: Iterable[int]) -> set[int]:
    labels = set(labels)
    unknown = labels - set(G.edges)
    if unknown:
        raise RibbonGraphError(f"unknown edge labels {sorted(unknown)}")
    return labels


def delete_edge(G: RibbonGraph, e: int) -> RibbonGraph:
    _check_labels(G, [e])
    a, b, _ = G.edges[e]
    vertices = tuple(tuple(h for h in rot if h not in (a, b)) for rot in G.vertices)
    edges = {k: v for k, v in G.edges.items() if k != e}
    return RibbonGraph(vertices, edges)


def partial_petrial(G: RibbonGraph, A: Iterable[int]) -> RibbonGraph:
    A = _check_labels(G, A)
    edges = {k: (a, b, -s if k in A else s) for k, (a, b, s) in G.edges.items()}
    return RibbonGraph(G.vertices, edges)


def partial_dual(G: RibbonGraph, A: Iterable[int]) -> RibbonGraph:
    """Partial dual ``G^delta(A)``.

    New vertices are the boundary components of ``(V, A)``; each is walked
    once and the ribbon ends met along the walk, in order, form the new
    rotation.  Ends of edges outside ``A`` keep their half-edge id; the two
    long sides of an edge in ``A`` become its new ends, the one containing
    ``L(h1)`` taking id ``h1``.
    """
    A = _check_labels(G, A)
    halves, corner, end, side, bit, bare = G._flags
    labels = G.labels
    in_a = [labels[int(bit[f])] in A for f in range(len(corner))]
    step = [int(side[f]) if in_a[f] else int(end[f]) for f in range(len(corner))]
    other = [int(end[f]) if in_a[f] else int(side[f]) for f in range(len(corner))]

    owner = G.edge_of()
    position = {h: k for k, h in enumerate(halves)}
    # which half-edge id each step-pair (a new ribbon end) carries
    end_id = {}
    for f in range(len(corner)):
        if f in end_id:
            continue
        g = step[f]
        h_f, h_g = halves[f // 2], halves[g // 2]
        if not in_a[f]:
            hid = h_f
        else:
            h1 = G.edges[owner[h_f]][0]
            l_h1 = 2 * position[h1]
            hid = h1 if l_h1 in (f, g) else (h_g if h_f == h1 else h_f)
        end_id[f] = end_id[g] = hid

    # walk each new vertex, recording which flag plays L / R of each end
    left_of, right_of = {}, {}
    rotations = []
    seen = set()
    for start in range(len(corner)):
        if start in seen:
            continue
        rot = []
        f = start
        while f not in seen:
            g = step[f]
            seen.update((f, g))
            hid = end_id[f]
            left_of[hid], right_of[hid] = f, g
            rot.append(hid)
            f = int(corner[g])
        rotations.append(rot)
    rotations += [()] * bare

    edges = {}
    for lab, (a, b, _) in G.edges.items():
        # 'other' is the side involution of the dual
        sign = 1 if other[left_of[a]] == right_of[b] else -1
        edges[lab] = (a, b, sign)
    return RibbonGraph(tuple(rotations), edges)


def contract_edge(G: RibbonGraph, e: int) -> RibbonGraph:
    return delete_edge(partial_dual(G, [e]), e)


def _relabel(G: RibbonGraph, label_shift: int, half_shift: int) -> RibbonGraph:
    vertices = tuple(tuple(h + half_shift for h in rot) for rot in G.vertices)
    edges = {k + label_shift: (a + half_shift, b + half_shift, s) for k, (a, b, s) in G.edges.items()}
    return RibbonGraph(vertices, edges)


def one_vertex_join(P: RibbonGraph, Q: RibbonGraph, vP: int = 0, vQ: int = 0,
                    arcP: int = 0, arcQ: int = 0) -> RibbonGraph:
    """Paste vertex ``vP`` of P and ``vQ`` of Q along boundary arcs.

    ``arcP = i`` is the gap just before the i-th half-edge of the rotation
    (``0 <= i < degree``, or 0 for a bare vertex).  Q's labels are shifted
    past P's so the result's label order is P's edges then Q's.
    """
    for G, v, arc in ((P, vP, arcP), (Q, vQ, arcQ)):
        if not 0 <= v < G.num_vertices:
            raise RibbonGraphError(f"vertex index {v} out of range")
        d = len(G.vertices[v])
        if not (0 <= arc < max(d, 1)):
            raise RibbonGraphError(f"gap {arc} out of range for degree {d}")
    label_shift = max(P.edges, default=0)
    half_shift = 1 + max((h for rot in P.vertices for h in rot), default=-1)
    Q = _relabel(Q, label_shift, half_shift)
    rp, rq = list(P.vertices[vP]), list(Q.vertices[vQ])
    merged = rp[arcP:] + rp[:arcP] + rq[arcQ:] + rq[:arcQ]
    vertices = [_canonical_rotation(merged)]
    vertices += [r for i, r in enumerate(P.vertices) if i != vP]
    vertices += [r for i, r in enumerate(Q.vertices) if i != vQ]
    return RibbonGraph(tuple(vertices), {**P.edges, **Q.edges})


def is_orientable(G: RibbonGraph) -> bool:
    """Whether some +-1 vertex switching makes every edge sign +1."""
    where = G.vertex_of()
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(G.num_vertices)}
    for a, b, s in G.edges.values():
        u, v = where[a], where[b]
        if u == v:
            if s == -1:
                return False
            continue
        adj[u].append((v, s))
        adj[v].append((u, s))
    state: dict[int, int] = {}
    for root in adj:
        if root in state:
            continue
        state[root] = 1
        stack = [root]
        while stack:
            u = stack.pop()
            for v, s in adj[u]:
                want = state[u] * s
                if v not in state:
                    state[v] = want
                    stack.append(v)
                elif state[v] != want:
                    return False
    return True


def fingerprint(G: RibbonGraph) -> tuple:
    """Cheap isomorphism-invariant: (|V|, |E|, sorted f_n table, orientability)."""
    hist = boundary_histogram(G)
    return (G.num_vertices, G.num_edges, tuple(sorted(hist.items())), is_orientable(G))


def kappa_by_deletion_contraction(G: RibbonGraph) -> int:
    """kappa via kappa(G) = kappa(G\\e) + kappa(G/e), down to edgeless graphs
    (one vertex -> 1, otherwise 0).  Exponential; small graphs only."""
    if not G.edges:
        return 1 if G.num_vertices == 1 else 0
    e = G.labels[-1]
    return (kappa_by_deletion_contraction(delete_edge(G, e))
            + kappa_by_deletion_contraction(contract_edge(G, e)))


def path_p2() -> RibbonGraph:
    """The plane path with two vertices and one edge."""
    return RibbonGraph(((0,), (1,)), {1: (0, 1, 1)})
