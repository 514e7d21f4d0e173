"""Stability of weighted point configurations on the line.

A configuration of points with integer weights is semistable when no subset
of a collision class carries more than half the total weight, stable when
every such subset carries strictly less, and a weight vector is generic when
semistability and stability coincide for every configuration.
"""

from quiverline import (
    ProjPoint,
    collision_classes,
    is_generic,
    is_semistable,
    is_stable,
    stability_report,
)


def pts(*texts):
    return [ProjPoint.parse(t) for t in texts]


rows = [
    ((1, 1, 1, 1), pts("inf", "0", "1", "2")),
    ((1, 1, 1, 1), pts("inf", "0", "1", "1")),
    ((1, 1, 1, 1), pts("inf", "0", "0", "0")),
    ((2, 1, 1, 1), pts("inf", "0", "1", "1")),
    ((1, 1, 1, 2), pts("inf", "0", "1", "1")),
]

print(f"{'weights':14s} {'points':24s} {'classes':26s} ss     stable")
for chi, lam in rows:
    classes = collision_classes(lam)
    print(f"{str(chi):14s} {str([str(p) for p in lam]):24s} "
          f"{str(classes):26s} {str(is_semistable(chi, lam)):6s} "
          f"{is_stable(chi, lam)}")

print("\ngeneric weight vectors (semistable <=> stable for every config):")
for chi in ((1, 1, 1, 1), (1, 1, 1, 2), (2, 2)):
    print(f"  {chi}: {is_generic(chi)}")

print("\nfull report for one configuration:")
print(stability_report((1, 1, 1, 1), pts("inf", "0", "1", "1")))
