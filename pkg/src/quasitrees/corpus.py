"""Seeded random ribbon graphs and bouquets for the property checks."""

from __future__ import annotations

import random

from .ribbon import RibbonGraph, from_signed_rotation

__all__ = ["random_bouquet", "random_ribbon_graph", "bouquet_corpus"]


def random_bouquet(rng: random.Random, n: int, twisted: int | None = 0) -> RibbonGraph:
    """Uniform rotation of ``n`` loops with ``twisted`` non-orientable ones
    (``None``: each loop twisted with probability 1/2).

    Orientable loops get both tokens negated half the time, exercising the
    same-sign convention.
    """
    tokens = [lab for lab in range(1, n + 1) for _ in range(2)]
    rng.shuffle(tokens)
    if twisted is None:
        chosen = {lab for lab in range(1, n + 1) if rng.random() < 0.5}
    else:
        chosen = set(rng.sample(range(1, n + 1), twisted))
    # twisted: the two tokens differ in sign; orientable: they agree
    signs = {lab: [1, -1] if lab in chosen else [rng.choice((1, -1))] * 2
             for lab in range(1, n + 1)}
    return from_signed_rotation([signs[t].pop() * t for t in tokens])


def random_ribbon_graph(rng: random.Random, max_edges: int, max_vertices: int = 4) -> RibbonGraph:
    """Random half-edge pairing over 1..max_vertices vertices with random
    rotations and signs; may be disconnected and may have bare vertices."""
    m = rng.randint(0, max_edges)
    v = rng.randint(1, max_vertices)
    halves = list(range(2 * m))
    rng.shuffle(halves)
    rotations = [[] for _ in range(v)]
    for h in halves:
        rotations[rng.randrange(v)].append(h)
    pairing = list(range(2 * m))
    rng.shuffle(pairing)
    edges = {}
    for k in range(m):
        edges[k + 1] = (pairing[2 * k], pairing[2 * k + 1], rng.choice((1, -1)))
    return RibbonGraph(tuple(tuple(r) for r in rotations), edges)


def bouquet_corpus(seed: int, count: int, max_n: int, twisted: int, min_n: int = 1) -> list[RibbonGraph]:
    rng = random.Random(seed)
    return [random_bouquet(rng, rng.randint(max(min_n, twisted), max_n), twisted) for _ in range(count)]
