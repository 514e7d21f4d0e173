"""Points, divisors, and labeled quivers: the raw material.

A labeled quiver is a finite directed graph whose arrows carry effective
divisors on the projective line.  Everything downstream (path algebras,
resolutions, certification) starts from the two validity conditions shown
here: transversality of the cycle arrangement and reducedness of the cycle
labels.
"""

from quiverline import (
    Arrow,
    LabeledQuiver,
    ProjPoint,
    Quiver,
    algebra_rank,
    acyclic_paths,
    divisor_from_mapping,
    enumerate_simple_cycles,
    has_transverse_cycles,
    is_reduced,
    is_reduced_labeling,
)
from quiverline.path_algebra import format_path

# -- Points on the projective line are exact: rationals or infinity. ------
origin = ProjPoint.parse("0")
inf = ProjPoint.parse("inf")
half = ProjPoint.parse("1/2")
print("points:", origin, inf, half)

# -- Effective divisors are finite multiplicity maps on such points. ------
d = divisor_from_mapping({"0": 1, "inf": 2})
print("divisor:", d, "degree", d.degree(), "reduced?", is_reduced(d))

# -- A quiver with two petals through a common vertex. ---------------------
q = Quiver(
    vertices=(0, 1, 2),
    arrows=(
        Arrow("b1", 0, 1),
        Arrow("a1", 1, 0),
        Arrow("b2", 0, 2),
        Arrow("a2", 2, 0),
    ),
)
lq = LabeledQuiver.make(q, {
    "a1": divisor_from_mapping({"1": 1}),
    "a2": divisor_from_mapping({"2": 1}),
})

print("\nsimple cycles:")
for cycle in enumerate_simple_cycles(q):
    print("  ", " -> ".join(str(a) for a in cycle.arrows))

print("transverse?", has_transverse_cycles(q))
print("reduced labeling?", is_reduced_labeling(lq))

# -- The path algebra is free over O(P^1) on the acyclic paths. ------------
basis = acyclic_paths(q)
print("\nrank over O(P^1):", algebra_rank(lq))
for p in basis:
    print("  ", format_path(p))
