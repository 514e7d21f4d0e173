"""Seeded generators for test corpora of reduced transverse labeled quivers.

The shape guarantees transversality by construction: simple cycles are
planted on disjoint vertex sets (optionally sharing a single anchor
vertex), and every further arrow is a chord checked to close no new
cycle, so the planted cycles are the only ones.  Reducedness is likewise
built in: each planted cycle distributes a set of pairwise-distinct
points over its arrows.

All randomness flows through the caller's random.Random, so corpora are
reproducible from a seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exactalg import EffDivisor, ProjPoint, divisor_add
from .path_algebra import LabeledQuiver
from .quiver import Arrow, Quiver, SimpleCycle, make_simple_cycle

POINT_POOL: tuple[ProjPoint, ...] = (
    ProjPoint.infinity(),
    ProjPoint.finite(0),
    ProjPoint.finite(1),
    ProjPoint.finite(2),
    ProjPoint.finite(-1),
    ProjPoint.finite(Fraction(1, 2)),
    ProjPoint.finite(3),
    ProjPoint.finite(Fraction(-2, 3)),
)


def _reaches(adj: dict[int, set[int]], start: int, goal: int) -> bool:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        if u == goal:
            return True
        for w in adj.get(u, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def _plant_cycle(rng: random.Random, cycle_vertices: list[int],
                 arrows: list[Arrow], labels: dict[int, EffDivisor],
                 max_label_degree: int, force_points: int | None = None) -> list[int]:
    """Close the given vertices into a directed cycle and spread a set of
    distinct points over its arrows.  Returns the new arrow ids."""
    ids = []
    for k, v in enumerate(cycle_vertices):
        w = cycle_vertices[(k + 1) % len(cycle_vertices)]
        aid = len(arrows)
        arrows.append(Arrow(aid, v, w))
        ids.append(aid)
    n_points = (rng.randint(0, min(max_label_degree, len(POINT_POOL)))
                if force_points is None else force_points)
    for p in rng.sample(POINT_POOL, n_points):
        aid = rng.choice(ids)
        labels[aid] = divisor_add(labels.get(aid, EffDivisor.zero()),
                                  EffDivisor.from_pairs([(p, 1)]))
    return ids


def random_reduced_transverse(rng: random.Random,
                              max_vertices: int = 6,
                              max_label_degree: int = 3) -> LabeledQuiver:
    """One random reduced transverse labeled quiver.

    Up to two planted simple cycles (possibly sharing one anchor), then a
    handful of cycle-free chord arrows with arbitrary labels of bounded
    degree.  Isolated vertices are allowed.
    """
    n_v = rng.randint(1, max_vertices)
    order = list(range(n_v))
    rng.shuffle(order)
    arrows: list[Arrow] = []
    labels: dict[int, EffDivisor] = {}

    n_cycles = rng.choice((0, 1, 1, 2))
    taken = 0
    first_cycle: list[int] = []
    for ci in range(n_cycles):
        available = n_v - taken
        if available == 0:
            break
        length = rng.randint(1, min(available, 4))
        verts = order[taken:taken + length]
        taken += length
        # A bouquet: reuse the first cycle's anchor instead of one fresh vertex.
        if ci == 1 and first_cycle and rng.random() < 0.5:
            verts[0] = first_cycle[0]
        _plant_cycle(rng, verts, arrows, labels, max_label_degree)
        if ci == 0:
            first_cycle = verts

    adj: dict[int, set[int]] = {}
    for a in arrows:
        adj.setdefault(a.src, set()).add(a.tgt)
    for _ in range(rng.randint(0, 4)):
        u, w = rng.randrange(n_v), rng.randrange(n_v)
        if u == w or _reaches(adj, w, u):
            continue
        aid = len(arrows)
        arrows.append(Arrow(aid, u, w))
        adj.setdefault(u, set()).add(w)
        deg = rng.randint(0, max_label_degree)
        if deg:
            pairs: dict[ProjPoint, int] = {}
            for p in rng.choices(POINT_POOL, k=deg):
                pairs[p] = pairs.get(p, 0) + 1
            labels[aid] = EffDivisor.from_pairs(list(pairs.items()))

    q = Quiver(tuple(range(n_v)), tuple(arrows))
    return LabeledQuiver.make(q, labels)


def random_contraction_instance(rng: random.Random,
                                max_vertices: int = 6,
                                max_label_degree: int = 3
                                ) -> tuple[LabeledQuiver, SimpleCycle]:
    """A reduced transverse quiver holding a zero-labeled simple cycle,
    plus that cycle, ready for a contraction test."""
    n_v = rng.randint(2, max_vertices)
    order = list(range(n_v))
    rng.shuffle(order)
    arrows: list[Arrow] = []
    labels: dict[int, EffDivisor] = {}

    length = rng.randint(1, min(n_v - 1, 4))
    zero_ids = _plant_cycle(rng, order[:length], arrows, labels,
                            max_label_degree, force_points=0)
    rest = n_v - length
    if rest >= 1 and rng.random() < 0.7:
        second_len = rng.randint(1, min(rest, 4))
        verts = order[length:length + second_len]
        if rng.random() < 0.5:
            verts[0] = order[0]  # bouquet with the zero cycle
        _plant_cycle(rng, verts, arrows, labels, max_label_degree)

    adj: dict[int, set[int]] = {}
    for a in arrows:
        adj.setdefault(a.src, set()).add(a.tgt)
    for _ in range(rng.randint(0, 4)):
        u, w = rng.randrange(n_v), rng.randrange(n_v)
        if u == w or _reaches(adj, w, u):
            continue
        aid = len(arrows)
        arrows.append(Arrow(aid, u, w))
        adj.setdefault(u, set()).add(w)
        deg = rng.randint(0, max_label_degree)
        if deg:
            pairs: dict[ProjPoint, int] = {}
            for p in rng.choices(POINT_POOL, k=deg):
                pairs[p] = pairs.get(p, 0) + 1
            labels[aid] = EffDivisor.from_pairs(list(pairs.items()))

    q = Quiver(tuple(range(n_v)), tuple(arrows))
    lq = LabeledQuiver.make(q, labels)
    return lq, make_simple_cycle(q, zero_ids)
