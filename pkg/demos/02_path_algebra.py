"""Rewriting in the labeled path algebra.

Paths that wind around a cycle are not basis elements; each full turn of a
simple cycle is traded for the section of the cycle's label divisor.  With
a transverse cycle arrangement the rewriting is confluent, so elements have
a unique normal form and multiplication is well defined.
"""

from quiverline import (
    Arrow,
    GradedIndex,
    HomForm,
    LabeledQuiver,
    Path,
    Quiver,
    arrow_element,
    contract_labeled,
    format_element,
    graded_hom_dim,
    make_simple_cycle,
    multiply,
    normal_form,
    unit_element,
)
from quiverline.orbifold import OrbifoldData, build_ay

# One arm of weight 2 over the origin: vertices v0, v1.1 with a two-arrow
# petal a1.1: v0 -> v1.1 (unlabeled) and a1.2: v1.1 -> v0 (labeled by 0).
data = OrbifoldData.make([2], ["0"])
lq = build_ay(data)

# -- A full turn around the petal rewrites to a multiple of e_v0. -----------
turn = Path("v0", ("a1.1", "a1.2"))
one_turn = normal_form(lq, [(turn, HomForm.constant(1))])
print("a1.2 * a1.1 =", format_element(one_turn))

# -- Products compose right-to-left; twists add. ---------------------------
step = arrow_element(lq, "a1.1")
back = arrow_element(lq, "a1.2")
print("back * step =", format_element(multiply(lq, back, step)))
print("step * e_v0 =", format_element(multiply(lq, step, unit_element(lq, "v0"))))

# -- Graded pieces of the algebra are finite dimensional. -------------------
for twist in range(3):
    dim = graded_hom_dim(lq, GradedIndex("v0", 0), GradedIndex("v0", twist))
    print(f"dim Hom((v0,0) -> (v0,{twist})) = {dim}")

# -- Contracting a zero-labeled cycle changes nothing graded. ---------------
q = Quiver(
    vertices=("u", "v"),
    arrows=(Arrow("f", "u", "v"), Arrow("g", "v", "u")),
)
zq = LabeledQuiver.make(q, {})
zcycle = make_simple_cycle(q, ("f", "g"))
small, vmap = contract_labeled(zq, zcycle)
print("\ncontracting the unlabeled 2-cycle:",
      dict(vmap), "->", small.quiver.vertices)
before = graded_hom_dim(zq, GradedIndex("u", 0), GradedIndex("v", 2))
after = graded_hom_dim(small, GradedIndex(vmap["u"], 0), GradedIndex(vmap["v"], 2))
print("graded dim before/after:", before, after)
