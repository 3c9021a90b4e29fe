"""Set systems and delta-matroid operations.

Feasible families are stored as frozensets of bitmasks over the ordered
ground set (bit ``i`` is ``ground[i]``).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable

from .ribbon import RibbonGraph, RibbonGraphError, quasi_tree_sets

__all__ = [
    "SetSystem",
    "from_ribbon_graph",
    "is_delta_matroid",
    "is_even",
    "twist",
    "loop_complementation",
    "handle_slide",
    "exchange_handle_ends",
    "slide_after_exchange",
    "four_term_check",
    "random_set_system",
    "neighbouring_ends",
    "ribbon_handle_slide",
    "ribbon_exchange_ends",
]

MAX_GROUND = 24


@dataclass(frozen=True)
class SetSystem:
    ground: tuple[int, ...]
    feasible: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "ground", tuple(self.ground))
        object.__setattr__(self, "feasible", frozenset(self.feasible))
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("repeated ground element")
        if len(self.ground) > MAX_GROUND:
            raise ValueError(f"ground sets are limited to {MAX_GROUND} elements")
        full = (1 << len(self.ground)) - 1
        if any(m & ~full or m < 0 for m in self.feasible):
            raise ValueError("feasible set outside the ground set")

    @classmethod
    def from_sets(cls, ground: Iterable[int], sets: Iterable[Iterable[int]]) -> "SetSystem":
        ground = tuple(ground)
        index = {x: i for i, x in enumerate(ground)}
        fam = set()
        for s in sets:
            m = 0
            for x in s:
                if x not in index:
                    raise ValueError(f"{x} is not in the ground set")
                m |= 1 << index[x]
            fam.add(m)
        return cls(ground, frozenset(fam))

    @property
    def proper(self) -> bool:
        return bool(self.feasible)

    def __len__(self):
        return len(self.feasible)

    def bit(self, x: int) -> int:
        try:
            return 1 << self.ground.index(x)
        except ValueError:
            raise ValueError(f"{x} is not in the ground set {self.ground}") from None

    def mask(self, xs: Iterable[int]) -> int:
        m = 0
        for x in xs:
            m |= self.bit(x)
        return m

    def unmask(self, m: int) -> tuple[int, ...]:
        return tuple(x for i, x in enumerate(self.ground) if m >> i & 1)

    def sets(self) -> list[tuple[int, ...]]:
        """Feasible sets as label tuples, ordered by bitmask."""
        return [self.unmask(m) for m in sorted(self.feasible)]

    def to_text(self) -> str:
        lines = [" ".join(map(str, self.ground))]
        lines += [" ".join(map(str, s)) if s else "-" for s in self.sets()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SetSystem":
        lines = [ln.strip() for ln in text.strip().splitlines()]
        ground = [int(x) for x in lines[0].split()]
        sets = [[] if ln == "-" else [int(x) for x in ln.split()] for ln in lines[1:] if ln]
        return cls.from_sets(ground, sets)

    def to_json(self) -> str:
        return json.dumps({"ground": list(self.ground), "feasible": [list(s) for s in self.sets()]})

    @classmethod
    def from_json(cls, text: str) -> "SetSystem":
        obj = json.loads(text)
        return cls.from_sets(obj["ground"], obj["feasible"])


def from_ribbon_graph(G: RibbonGraph) -> SetSystem:
    return SetSystem(G.labels, frozenset(quasi_tree_sets(G)))


def is_delta_matroid(D: SetSystem) -> bool:
    """Symmetric exchange axiom, checked exhaustively; improper systems are not delta-matroids."""
    if not D.proper:
        return False
    fam = D.feasible
    for X in fam:
        for Y in fam:
            diff = X ^ Y
            u_bits = diff
            while u_bits:
                u = u_bits & -u_bits
                u_bits ^= u
                v_bits = diff
                ok = False
                while v_bits:
                    v = v_bits & -v_bits
                    v_bits ^= v
                    if X ^ (u | v) in fam:
                        ok = True
                        break
                if not ok:
                    return False
    return True


def is_even(D: SetSystem) -> bool:
    parities = {bin(m).count("1") & 1 for m in D.feasible}
    return len(parities) <= 1


def twist(D: SetSystem, A: Iterable[int]) -> SetSystem:
    a = D.mask(A)
    return SetSystem(D.ground, frozenset(m ^ a for m in D.feasible))


def loop_complementation(D: SetSystem, e: int) -> SetSystem:
    be = D.bit(e)
    added = {m | be for m in D.feasible if not m & be}
    return SetSystem(D.ground, D.feasible ^ frozenset(added))


def _pair_bits(D: SetSystem, a: int, b: int) -> tuple[int, int]:
    if a == b:
        raise ValueError("handle operations need two distinct elements")
    return D.bit(a), D.bit(b)


def _slide_term(D: SetSystem, ba: int, bb: int) -> frozenset[int]:
    # {F + a : F + b feasible, F avoids a and b}
    return frozenset((m ^ bb) | ba for m in D.feasible if m & bb and not m & ba)


def _exchange_term(D: SetSystem, ba: int, bb: int) -> frozenset[int]:
    return frozenset(m | ba | bb for m in D.feasible if not m & (ba | bb))


def handle_slide(D: SetSystem, a: int, b: int) -> SetSystem:
    """Slide the handle of ``a`` over ``b``."""
    ba, bb = _pair_bits(D, a, b)
    return SetSystem(D.ground, D.feasible ^ _slide_term(D, ba, bb))


def exchange_handle_ends(D: SetSystem, a: int, b: int) -> SetSystem:
    ba, bb = _pair_bits(D, a, b)
    return SetSystem(D.ground, D.feasible ^ _exchange_term(D, ba, bb))


def slide_after_exchange(D: SetSystem, a: int, b: int) -> SetSystem:
    """Closed form for exchanging the ends of a, b and then sliding a over b."""
    ba, bb = _pair_bits(D, a, b)
    return SetSystem(D.ground, D.feasible ^ _exchange_term(D, ba, bb) ^ _slide_term(D, ba, bb))


def four_term_check(D: SetSystem, a: int, b: int) -> tuple[int, int, int, int, bool]:
    """``(|F|, |F~|, |F'|, |F~'|, holds)`` where holds means
    ``|F| + |F~'| - |F'| - |F~| == 0``."""
    ba, bb = _pair_bits(D, a, b)
    fam = D.feasible
    slid = fam ^ _slide_term(D, ba, bb)
    exch = fam ^ _exchange_term(D, ba, bb)
    both = exch ^ _slide_term(D, ba, bb)
    sizes = (len(fam), len(slid), len(exch), len(both))
    return (*sizes, sizes[0] + sizes[3] - sizes[2] - sizes[1] == 0)


def random_set_system(rng: random.Random, ground_size: int, p: float = 0.5) -> SetSystem:
    """Each subset feasible independently with probability p; resampled
    until nonempty."""
    ground = tuple(range(1, ground_size + 1))
    while True:
        fam = frozenset(m for m in range(1 << ground_size) if rng.random() < p)
        if fam:
            return SetSystem(ground, fam)


# -- ribbon-level handle moves on bouquets ------------------------------------

def neighbouring_ends(B: RibbonGraph, a: int, b: int) -> list[tuple[int, int]]:
    """Rotation positions ``(i, j)`` with ``j = i + 1`` (cyclically) holding
    one end of ``a`` and one end of ``b``."""
    if not B.is_bouquet:
        raise RibbonGraphError("handle moves are implemented on bouquets")
    if a == b or a not in B.edges or b not in B.edges:
        raise RibbonGraphError(f"need two distinct edges, got {a}, {b}")
    rot = B.vertices[0]
    owner = B.edge_of()
    d = len(rot)
    out = []
    for i in range(d):
        j = (i + 1) % d
        if {owner[rot[i]], owner[rot[j]]} == {a, b}:
            out.append((i, j))
    return out


def _pick(B, a, b, where):
    pairs = neighbouring_ends(B, a, b)
    if not pairs:
        raise RibbonGraphError(f"edges {a} and {b} have no neighbouring ends")
    if where is None:
        return pairs[0]
    if where not in pairs:
        raise RibbonGraphError(f"positions {where} are not neighbouring ends of {a}, {b}")
    return where


def ribbon_exchange_ends(B: RibbonGraph, a: int, b: int, where=None) -> RibbonGraph:
    """Swap a neighbouring pair of ends of ``a`` and ``b`` in the rotation."""
    i, j = _pick(B, a, b, where)
    rot = list(B.vertices[0])
    rot[i], rot[j] = rot[j], rot[i]
    return RibbonGraph((tuple(rot),), B.edges)


def ribbon_handle_slide(B: RibbonGraph, a: int, b: int, where=None) -> RibbonGraph:
    """Slide the end of ``a`` that neighbours an end of ``b`` along the
    ribbon of ``b`` to the far end of ``b``.

    The moving end follows the long side of ``b`` it starts on, so it lands
    on the opposite side of the far end for an untwisted ``b`` and on the
    same side for a twisted one; crossing the twist also reverses ``a``.
    """
    i, j = _pick(B, a, b, where)
    rot = list(B.vertices[0])
    owner = B.edge_of()
    a_pos, b_pos = (i, j) if owner[rot[i]] == a else (j, i)
    ha, hb = rot[a_pos], rot[b_pos]
    b1, b2, sb = B.edges[b]
    far = b2 if hb == b1 else b1
    a_before_b = a_pos == i
    rot.remove(ha)
    k = rot.index(far)
    # untwisted: before -> after, after -> before; twisted keeps the side
    land_before = (not a_before_b) if sb == 1 else a_before_b
    rot.insert(k if land_before else k + 1, ha)
    edges = dict(B.edges)
    if sb == -1:
        x, y, s = edges[a]
        edges[a] = (x, y, -s)
    return RibbonGraph((tuple(rot),), edges)
