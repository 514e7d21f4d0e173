"""Orbifold projective lines and their Picard lattice.

An orbifold line is the projective line with finitely many weighted points.
Its line-bundle classes form a rank-one lattice extension generated by the
fractional point classes x_i with r_i * x_i = c; the section ring dimensions
below are computed from lattice normal forms alone.
"""

from quiverline import (
    OrbifoldData,
    dualizing_element,
    pic_add,
    pic_c,
    pic_leq,
    pic_sub,
    pic_x,
    pic_zero,
    s_dim,
)

def fmt(el):
    """(m; a_1,...,a_n) display for a lattice element in normal form."""
    return f"({el.m}; {','.join(str(a) for a in el.a)})"


data = OrbifoldData.make([2, 3, 5], ["inf", "0", "1"])
print("orbifold:", data.to_json())

# -- Normal forms carry overflow in each arm into the free part. ------------
x1, x2, x3 = (pic_x(data, i) for i in (1, 2, 3))
print("x1 + x1 =", fmt(pic_add(data, x1, x1)), " (one full turn of arm 1)")
print("c       =", fmt(pic_c(data)))
print("omega   =", fmt(dualizing_element(data)))

# -- Effectivity is decided by the free coordinate of the normal form. ------
for el in (pic_zero(data), x2, pic_sub(data, pic_zero(data), x3), dualizing_element(data)):
    print(f"0 <= {fmt(el)}?", pic_leq(data, pic_zero(data), el))

# -- Hilbert data of the section ring. --------------------------------------
print("\ndim of sections in degree m*c:")
for m in range(8):
    print(f"  m={m}: {s_dim(data, pic_c(data, m))}")

print("\ndim of sections at mixed degrees:")
for el in (x1, pic_add(data, x1, x2), pic_add(data, pic_c(data), x3)):
    print(f"  {fmt(el)}: {s_dim(data, el)}")
