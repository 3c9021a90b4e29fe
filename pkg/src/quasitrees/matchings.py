"""Perfect matchings of ladders P2 x G, by plain branching."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "SimpleGraph",
    "path_graph",
    "caterpillar",
    "grid_product",
    "count_perfect_matchings",
    "parse_edge_list",
    "format_edge_list",
]


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))
        edges = frozenset(frozenset(e) for e in self.edges)
        vs = set(self.vertices)
        for e in edges:
            if len(e) != 2:
                raise ValueError(f"loop or malformed edge {sorted(e)}")
            if not e <= vs:
                raise ValueError(f"edge {sorted(e)} uses unknown vertices")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_pairs(cls, pairs, vertices=()) -> "SimpleGraph":
        pairs = [tuple(p) for p in pairs]
        vs = set(vertices) | {v for p in pairs for v in p}
        return cls(tuple(vs), frozenset(frozenset(p) for p in pairs))


def path_graph(n: int) -> SimpleGraph:
    """P_n on vertices 1..n (n = 0 gives the empty graph)."""
    return SimpleGraph.from_pairs([(i, i + 1) for i in range(1, n)], range(1, n + 1))


def caterpillar(n: int) -> SimpleGraph:
    """T_n: the path 1-3-4-...-n with the leaf 2 hanging off vertex 3.

    This is the interlacement graph of the Fp family (chord 1 and chord 2
    both cross chord 3, then a path).
    """
    if n < 3:
        raise ValueError("the caterpillar T_n needs n >= 3")
    spine = [1] + list(range(3, n + 1))
    pairs = list(zip(spine, spine[1:])) + [(2, 3)]
    return SimpleGraph.from_pairs(pairs, range(1, n + 1))


def grid_product(G: SimpleGraph) -> SimpleGraph:
    """P2 x G: copies (v, 1) and (v, 2) of G plus a rung per vertex.

    Vertex (v, k) is encoded as ``2 * index(v) + (k - 1)``.
    """
    index = {v: i for i, v in enumerate(G.vertices)}
    pairs = []
    for v, i in index.items():
        pairs.append((2 * i, 2 * i + 1))
    for e in G.edges:
        u, v = sorted(e)
        for k in (0, 1):
            pairs.append((2 * index[u] + k, 2 * index[v] + k))
    return SimpleGraph.from_pairs(pairs, range(2 * len(G.vertices)))


def count_perfect_matchings(G: SimpleGraph) -> int:
    """Exact count; matches the lowest unmatched vertex with each free neighbour."""
    order = {v: i for i, v in enumerate(G.vertices)}
    n = len(order)
    if n % 2:
        return 0
    nbr = [0] * n
    for e in G.edges:
        u, v = (order[x] for x in e)
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u

    @lru_cache(maxsize=None)
    def count(free: int) -> int:
        if not free:
            return 1
        low = free & -free
        i = low.bit_length() - 1
        rest = free ^ low
        choices = nbr[i] & rest
        total = 0
        while choices:
            c = choices & -choices
            choices ^= c
            total += count(rest ^ c)
        return total

    return count((1 << n) - 1)


def parse_edge_list(text: str) -> SimpleGraph:
    pairs = []
    for line in text.splitlines():
        line = line.split("#")[0].strip()
        if line:
            u, v = line.split()
            pairs.append((int(u), int(v)))
    return SimpleGraph.from_pairs(pairs)


def format_edge_list(G: SimpleGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in sorted(tuple(sorted(e)) for e in G.edges))
