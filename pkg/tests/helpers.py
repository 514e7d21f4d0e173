"""Builders shared across the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from quiverline import (
    Arrow,
    HomForm,
    LabeledQuiver,
    OrbifoldData,
    Path,
    ProjPoint,
    Quiver,
    build_ay,
    divisor_from_mapping,
    hom_paths,
    normal_form,
    path_label,
)


def orb(weights, points) -> OrbifoldData:
    return OrbifoldData.make(weights, points)


def ay(weights, points) -> LabeledQuiver:
    return build_ay(orb(weights, points))


def two_cycle_example(lam: int | Fraction) -> LabeledQuiver:
    """Three vertices 0, 1, 2 with a two-arrow cycle through each of 1 and 2;
    the return arrows carry the points lam and 2*lam.  At lam = 0 both labels
    collide at the origin and the simple at vertex 0 picks up a second
    syzygy there."""
    q = Quiver(
        vertices=(0, 1, 2),
        arrows=(
            Arrow("b1", 0, 1),
            Arrow("a1", 1, 0),
            Arrow("b2", 0, 2),
            Arrow("a2", 2, 0),
        ),
    )
    lam = Fraction(lam)
    return LabeledQuiver.make(q, {
        "a1": divisor_from_mapping({str(lam): 1}),
        "a2": divisor_from_mapping({str(2 * lam): 1}),
    })


def pt(text: str) -> ProjPoint:
    return ProjPoint.parse(text)


def random_form(rng: random.Random, degree: int) -> HomForm:
    return HomForm(degree, tuple(
        Fraction(rng.randint(-3, 3)) for _ in range(degree + 1)))


def random_element(rng: random.Random, lq: LabeledQuiver, v, w, twist: int):
    """A haphazard combination of basis paths w -> v at the given twist."""
    terms = []
    for p in hom_paths(lq, v, w):
        excess = twist - path_label(lq, p).degree()
        if excess >= 0 and rng.random() < 0.6:
            terms.append((p, random_form(rng, excess)))
    return normal_form(lq, terms, source=w, target=v, twist=twist)


def random_walk(rng: random.Random, lq: LabeledQuiver, max_len: int = 6):
    """A path that may wind through cycles, for exercising the rewriter."""
    q = lq.quiver
    by_src: dict = {}
    for a in q.arrows:
        by_src.setdefault(a.src, []).append(a.id)
    start = rng.choice(q.vertices)
    arrows: list = []
    here = start
    for _ in range(rng.randint(0, max_len)):
        options = by_src.get(here)
        if not options:
            break
        aid = rng.choice(options)
        arrows.append(aid)
        here = q.arrow(aid).tgt
    return Path(start, tuple(arrows))
