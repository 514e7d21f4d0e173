"""Stability of weighted point configurations on the line.

A configuration is a tuple of points of P^1 (collisions allowed) weighted
by integers chi_i.  Destabilizing subsets live inside a single collision
class: the configuration is semistable when no subset of a class carries
more than half the total weight, stable when every nonempty subset stays
strictly below half.  Weights may be negative, so the extremal subset of
a class is its positive part (or, when checking strictness in a class
with no positive weight, the single largest weight).

Genericity is a property of the weights alone: no subset at all hits
exactly half the total, so semistability and stability coincide for
every point tuple.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DimError, InvalidInput, SizeLimit
from .exactalg import ProjPoint

GENERIC_SIZE_LIMIT = 20


def _check_chi(chi: Sequence[int]) -> None:
    if not chi:
        raise InvalidInput("the weight tuple must be nonempty")
    for c in chi:
        if not isinstance(c, int) or isinstance(c, bool):
            raise InvalidInput(f"weights must be integers, got {c!r}")


def collision_classes(points: Sequence[ProjPoint]) -> tuple[tuple[int, ...], ...]:
    """Indices grouped by point equality, 1-based, ordered by first member."""
    if not points:
        raise InvalidInput("the point tuple must be nonempty")
    groups: dict[ProjPoint, list[int]] = {}
    order: list[ProjPoint] = []
    for i, p in enumerate(points, start=1):
        if p not in groups:
            groups[p] = []
            order.append(p)
        groups[p].append(i)
    return tuple(tuple(groups[p]) for p in order)


def _class_weights(chi: Sequence[int], points: Sequence[ProjPoint]
                   ) -> list[list[int]]:
    _check_chi(chi)
    if len(chi) != len(points):
        raise DimError("weights and points must have equal length")
    return [[chi[i - 1] for i in cls] for cls in collision_classes(points)]


def is_semistable(chi: Sequence[int], points: Sequence[ProjPoint]) -> bool:
    """No subset of a collision class may exceed half the total weight.

    The largest subset sum within a class is the sum of its positive
    weights (the empty subset covers the case of none), so one comparison
    per class decides all subsets at once.
    """
    half = Fraction(sum(chi), 2)
    for weights in _class_weights(chi, points):
        if sum(w for w in weights if w > 0) > half:
            return False
    return True


def is_stable(chi: Sequence[int], points: Sequence[ProjPoint]) -> bool:
    """Semistability with strict inequality on every nonempty subset.

    The semistability conjunct is not redundant: with all-negative weights
    the empty subset can violate the weak inequality while every nonempty
    subset satisfies the strict one.
    """
    if not is_semistable(chi, points):
        return False
    half = Fraction(sum(chi), 2)
    for weights in _class_weights(chi, points):
        positive = sum(w for w in weights if w > 0)
        largest_nonempty = positive if positive > 0 else max(weights)
        if largest_nonempty >= half:
            return False
    return True


def is_generic(chi: Sequence[int]) -> bool:
    """No subset of the weights sums to exactly half the total.

    Walks the achievable subset sums (the empty subset included); an odd
    total is never hit.  Guarded by size since the sum set can grow with
    the weight spread.
    """
    _check_chi(chi)
    if len(chi) > GENERIC_SIZE_LIMIT:
        raise SizeLimit(
            f"genericity check limited to {GENERIC_SIZE_LIMIT} weights")
    total = sum(chi)
    if total % 2 != 0:
        return True
    target = total // 2
    sums = {0}
    for c in chi:
        sums |= {s + c for s in sums}
    return target not in sums


def stability_report(chi: Sequence[int], points: Sequence[ProjPoint]) -> dict:
    """All three predicates plus the collision classes, JSON-shaped."""
    return {
        "semistable": is_semistable(chi, points),
        "stable": is_stable(chi, points),
        "generic": is_generic(chi),
        "classes": [list(cls) for cls in collision_classes(points)],
    }
