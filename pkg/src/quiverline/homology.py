"""Resolutions of point simples and homological-dimension certificates.

Everything here happens after localizing a labeled quiver at one point p of
the line: labels become powers of the uniformizer t (t = z - q on the finite
chart, t = 1/z at infinity), and the path algebra becomes an algebra over
the polynomial ring in t.  Projective right modules P_v flatten to free
k[t]-modules on the acyclic paths ending at v, and maps between them
flatten to polynomial matrices.  The flattening is multiplicative and
faithful, so exactness questions reduce to kernel and membership problems
over k[t], solved by exact column echelon (Hermite) reduction.

Three independent routes to the same facts keep each other honest:

* check_exactness certifies a complex over the full polynomial ring
  (kernel basis columns must be combinations of the next differential).
* truncation_exactness reduces everything modulo t^N and compares
  truncated homology dimensions against the known answers; ranks mod t^N
  come from invariant-factor valuations at t = 0, a separate elimination
  over the local ring.
* ext_dims reads off Ext(S_v, S_w) from the scalar parts of the
  differentials, which is resolution-shape independent.

Projective dimension is computed by splitting off summands along blocks
that are invertible at the point (block determinant nonzero at t = 0) and
is cross-checked against the Ext route; a disagreement or a failed
exactness certificate raises InternalError because the mathematics
guarantees both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    DimError,
    InternalError,
    InvalidInput,
    NotLocalized,
    NotReduced,
)
from .exactalg import (
    EffDivisor,
    HomForm,
    ProjPoint,
    Rat,
    divisor_section,
    format_rat,
)
from .path_algebra import (
    AlgebraElement,
    LabeledQuiver,
    add,
    cycle_label,
    format_element,
    is_reduced_labeling,
    localize_with_map,
    multiply,
    normal_form,
    path_element,
    require_transverse,
    unit_element,
    zero_element,
)
from .quiver import (
    Path,
    SimpleCycle,
    VertexId,
    acyclic_paths,
    arrows_into,
    cycle_vertices,
    enumerate_simple_cycles,
    id_key,
    path_target,
    rotate_cycle_to,
)

# ---------------------------------------------------------------------------
# Univariate polynomials over Rat: coefficient tuples, low degree first,
# with the zero polynomial as the empty tuple.

Poly = tuple[Rat, ...]

P_ZERO: Poly = ()
P_ONE: Poly = (Fraction(1),)
P_T: Poly = (Fraction(0), Fraction(1))


def poly_trim(coeffs: Iterable[Rat]) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_deg(p: Poly) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(p) - 1


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_scale(a: Poly, c: Rat) -> Poly:
    if c == 0:
        return P_ZERO
    return tuple(x * c for x in a)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return P_ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return poly_trim(out)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    rem = list(a)
    inv_lead = 1 / b[-1]
    for i in range(len(rem) - len(b), -1, -1):
        c = rem[i + len(b) - 1] * inv_lead
        if c == 0:
            continue
        quot[i] = c
        for j, y in enumerate(b):
            rem[i + j] -= c * y
    return poly_trim(quot), poly_trim(rem)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return P_ZERO
    return poly_scale(a, 1 / a[-1])


def poly_eval(p: Poly, x: Rat) -> Rat:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_shift(p: Poly, offset: Rat) -> Poly:
    """p(t + offset) as a polynomial in t."""
    acc: Poly = P_ZERO
    for c in reversed(p):
        acc = poly_add(poly_mul(acc, (Fraction(offset), Fraction(1))), (Fraction(c),))
    return acc


def poly_ord(p: Poly) -> int | None:
    """Vanishing order at t = 0; None for the zero polynomial."""
    for i, c in enumerate(p):
        if c != 0:
            return i
    return None


def format_poly(p: Poly) -> str:
    if not p:
        return "0"
    parts: list[str] = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mag = format_rat(abs(c))
        if k == 0:
            body = mag
        else:
            var = "t" if k == 1 else f"t^{k}"
            body = var if mag == "1" else f"{mag}*{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def chart_poly(f: HomForm, p: ProjPoint) -> Poly:
    """Restrict a binary form to the affine chart around p, in the local
    coordinate t (t = z - q at a finite point q, t = 1/z at infinity)."""
    if p.is_infinity:
        return poly_trim(reversed(f.coeffs))
    restricted = poly_trim(f.coeffs)
    return poly_shift(restricted, p.value)


def uniformizer_form(p: ProjPoint) -> HomForm:
    """The degree-1 form whose chart restriction at p is exactly t."""
    return divisor_section(EffDivisor.from_pairs([(p, 1)]))


# ---------------------------------------------------------------------------
# Dense polynomial matrices.


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple[Poly, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise DimError("entry count must equal rows*cols")

    def entry(self, i: int, j: int) -> Poly:
        return self.entries[i * self.cols + j]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Poly]], cols: int | None = None) -> "PolyMatrix":
        n = len(rows)
        m = len(rows[0]) if rows else (cols or 0)
        flat: list[Poly] = []
        for r in rows:
            if len(r) != m:
                raise DimError("ragged rows")
            flat.extend(poly_trim(p) for p in r)
        return PolyMatrix(n, m, tuple(flat))

    @staticmethod
    def zero(rows: int, cols: int) -> "PolyMatrix":
        return PolyMatrix(rows, cols, tuple(P_ZERO for _ in range(rows * cols)))

    @staticmethod
    def identity(n: int) -> "PolyMatrix":
        return PolyMatrix(
            n, n,
            tuple(P_ONE if i == j else P_ZERO for i in range(n) for j in range(n)),
        )

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(self.entry(i, j) for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(not e for e in self.entries)

    def mul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise DimError("inner dimensions differ")
        out: list[Poly] = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = P_ZERO
                for k in range(self.cols):
                    acc = poly_add(acc, poly_mul(self.entry(i, k), other.entry(k, j)))
                out.append(acc)
        return PolyMatrix(self.rows, other.cols, tuple(out))


# ---------------------------------------------------------------------------
# Column echelon (Hermite) reduction, kernels, and image membership.


def _echelon_columns(top_rows: int, cols: list[list[Poly]]
                     ) -> tuple[list[tuple[int, int]], list[int]]:
    """Reduce columns in place so the first top_rows rows become echelon.

    Only invertible column operations are used (axpy with polynomial
    coefficient, scaling by a nonzero rational), so the column span is
    preserved.  Returns the pivot list [(row, col)] in increasing row order
    and the surviving non-pivot column indices.
    """
    active = list(range(len(cols)))
    pivots: list[tuple[int, int]] = []
    for r in range(top_rows):
        live = [ci for ci in active if cols[ci][r]]
        while len(live) > 1:
            live.sort(key=lambda ci: (poly_deg(cols[ci][r]), ci))
            piv = live[0]
            for other in live[1:]:
                q, _ = poly_divmod(cols[other][r], cols[piv][r])
                if q:
                    qn = poly_neg(q)
                    col = cols[other]
                    pcol = cols[piv]
                    for k in range(len(col)):
                        if pcol[k]:
                            col[k] = poly_add(col[k], poly_mul(qn, pcol[k]))
            live = [ci for ci in live if cols[ci][r]]
        if not live:
            continue
        piv = live[0]
        lead = cols[piv][r][-1]
        if lead != 1:
            inv = 1 / lead
            cols[piv] = [poly_scale(e, inv) for e in cols[piv]]
        pivots.append((r, piv))
        active.remove(piv)
    return pivots, active


class HermiteBasis:
    """Column echelon form of a polynomial matrix, for membership queries."""

    def __init__(self, m: PolyMatrix) -> None:
        cols = [[m.entry(i, j) for i in range(m.rows)] for j in range(m.cols)]
        self.rows = m.rows
        self.pivots, _ = _echelon_columns(m.rows, cols)
        self.cols = cols

    def contains(self, vec: Sequence[Poly]) -> bool:
        if len(vec) != self.rows:
            raise DimError("vector length does not match the matrix")
        w = [poly_trim(v) for v in vec]
        for r, ci in self.pivots:
            if not w[r]:
                continue
            q, rem = poly_divmod(w[r], self.cols[ci][r])
            if rem:
                return False
            qn = poly_neg(q)
            col = self.cols[ci]
            for k in range(len(w)):
                if col[k]:
                    w[k] = poly_add(w[k], poly_mul(qn, col[k]))
        return all(not e for e in w)


def poly_kernel(m: PolyMatrix) -> PolyMatrix:
    """A k[t]-basis of the kernel, as columns.

    Stacks an identity under the matrix and echelonizes the top block; the
    columns whose top block vanished carry the wanted combinations in the
    bottom block.
    """
    stacked = [
        [m.entry(i, j) for i in range(m.rows)]
        + [P_ONE if k == j else P_ZERO for k in range(m.cols)]
        for j in range(m.cols)
    ]
    _, free = _echelon_columns(m.rows, stacked)
    basis = [stacked[ci][m.rows:] for ci in free]
    return PolyMatrix(
        m.cols, len(basis),
        tuple(basis[j][i] for i in range(m.cols) for j in range(len(basis))),
    )


def membership(m: PolyMatrix, vec: Sequence[Poly]) -> bool:
    """Whether vec is a polynomial combination of the columns of m."""
    return HermiteBasis(m).contains(vec)


# ---------------------------------------------------------------------------
# Rational functions regular wherever their denominator is nonzero; the
# minimization step stores entries whose reduced denominator is a unit at 0.


@dataclass(frozen=True)
class RatFunc:
    num: Poly
    den: Poly

    @staticmethod
    def make(num: Poly, den: Poly = P_ONE) -> "RatFunc":
        num = poly_trim(num)
        den = poly_trim(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            return RatFunc(P_ZERO, P_ONE)
        g = poly_gcd(num, den)
        if poly_deg(g) > 0:
            num = poly_divmod(num, g)[0]
            den = poly_divmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            inv = 1 / lead
            num = poly_scale(num, inv)
            den = poly_scale(den, inv)
        return RatFunc(num, den)

    @staticmethod
    def of(p: Poly) -> "RatFunc":
        return RatFunc.make(p)

    def is_zero(self) -> bool:
        return not self.num

    def eval_at_zero(self) -> Rat:
        d0 = poly_eval(self.den, Fraction(0))
        if d0 == 0:
            raise ZeroDivisionError("pole at the distinguished point")
        return poly_eval(self.num, Fraction(0)) / d0


def rf_add(a: RatFunc, b: RatFunc) -> RatFunc:
    return RatFunc.make(
        poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
        poly_mul(a.den, b.den),
    )


def rf_sub(a: RatFunc, b: RatFunc) -> RatFunc:
    return rf_add(a, RatFunc(poly_neg(b.num), b.den))


def rf_mul(a: RatFunc, b: RatFunc) -> RatFunc:
    return RatFunc.make(poly_mul(a.num, b.num), poly_mul(a.den, b.den))


def rf_div(a: RatFunc, b: RatFunc) -> RatFunc:
    if b.is_zero():
        raise ZeroDivisionError("division by the zero function")
    return RatFunc.make(poly_mul(a.num, b.den), poly_mul(a.den, b.num))


def _rf_matrix_inverse(m: list[list[RatFunc]]) -> list[list[RatFunc]]:
    """Exact inverse over the rational-function field (Gauss-Jordan)."""
    n = len(m)
    aug = [[m[i][j] for j in range(n)]
           + [RatFunc.of(P_ONE if k == i else P_ZERO) for k in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise InternalError("matrix not invertible over the function field")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = rf_div(RatFunc.of(P_ONE), aug[col][col])
        aug[col] = [rf_mul(inv, e) for e in aug[col]]
        for r in range(n):
            if r == col or aug[r][col].is_zero():
                continue
            f = aug[r][col]
            aug[r] = [rf_sub(e, rf_mul(f, p)) for e, p in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _rational_rank(rows: list[list[Rat]]) -> int:
    """Rank of a matrix of rationals by exact Gaussian elimination."""
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [inv * e for e in m[rank]]
        for r in range(len(m)):
            if r == rank or m[r][col] == 0:
                continue
            f = m[r][col]
            m[r] = [e - f * p for e, p in zip(m[r], m[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# Local Smith data: valuations of the invariant factors at t = 0.


def local_smith_valuations(m: PolyMatrix) -> tuple[int, ...]:
    """t-adic valuations of the invariant factors, in nondecreasing order.

    Elimination over the local ring at t = 0: the pivot is always an entry
    of minimal valuation, so every quotient used to clear its row and
    column is regular at 0 and the valuations are Smith invariants.
    """
    work: list[list[RatFunc]] = [
        [RatFunc.of(m.entry(i, j)) for j in range(m.cols)] for i in range(m.rows)
    ]
    vals: list[int] = []
    while work and work[0]:
        best: tuple[int, int, int] | None = None
        for i, row in enumerate(work):
            for j, e in enumerate(row):
                if e.is_zero():
                    continue
                v = poly_ord(e.num)
                assert v is not None
                if best is None or v < best[0]:
                    best = (v, i, j)
        if best is None:
            break
        v, pi, pj = best
        vals.append(v)
        pivot = work[pi][pj]
        for i in range(len(work)):
            if i == pi or work[i][pj].is_zero():
                continue
            f = rf_div(work[i][pj], pivot)
            work[i] = [rf_sub(e, rf_mul(f, p)) for e, p in zip(work[i], work[pi])]
        for j in range(len(work[0])):
            if j == pj or work[pi][j].is_zero():
                continue
            f = rf_div(work[pi][j], pivot)
            for i in range(len(work)):
                work[i][j] = rf_sub(work[i][j], rf_mul(f, work[i][pj]))
        work = [
            [e for j, e in enumerate(row) if j != pj]
            for i, row in enumerate(work) if i != pi
        ]
    return tuple(sorted(vals))


def truncated_rank(m: PolyMatrix, n_trunc: int) -> int:
    """k-dimension of the image of m acting on (k[t]/t^N)^cols."""
    return sum(n_trunc - min(v, n_trunc) for v in local_smith_valuations(m))


# ---------------------------------------------------------------------------
# Flattening the path algebra over the chart into polynomial matrices.


@lru_cache(maxsize=4096)
def module_basis(lq: LabeledQuiver, w: VertexId) -> tuple[Path, ...]:
    """Acyclic paths ending at w: a k[t]-basis of the projective P_w."""
    return tuple(
        p for p in acyclic_paths(lq.quiver)
        if path_target(lq.quiver, p) == w
    )


def flatten_element(lq: LabeledQuiver, p: ProjPoint, x: AlgebraElement) -> PolyMatrix:
    """Left multiplication by x as a k[t]-matrix P_source -> P_target."""
    src = module_basis(lq, x.source)
    tgt = module_basis(lq, x.target)
    index = {path: i for i, path in enumerate(tgt)}
    cols: list[list[Poly]] = []
    for gamma in src:
        out = [P_ZERO] * len(tgt)
        prod = multiply(lq, x, path_element(lq, gamma))
        for path, coeff in prod.terms:
            out[index[path]] = chart_poly(coeff, p)
        cols.append(out)
    return PolyMatrix(
        len(tgt), len(src),
        tuple(cols[j][i] for i in range(len(tgt)) for j in range(len(src))),
    )


@dataclass(frozen=True)
class AlgMatrix:
    """A matrix of algebra elements: a map between sums of projectives.

    Entry (i, j) runs from P_{col_vertices[j]} to P_{row_vertices[i]} and
    acts by left multiplication on column vectors.
    """

    row_vertices: tuple[VertexId, ...]
    col_vertices: tuple[VertexId, ...]
    entries: tuple[tuple[AlgebraElement, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.row_vertices):
            raise DimError("row count mismatch")
        for row in self.entries:
            if len(row) != len(self.col_vertices):
                raise DimError("column count mismatch")

    def entry(self, i: int, j: int) -> AlgebraElement:
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)


def alg_matrix(lq: LabeledQuiver,
               row_vertices: Sequence[VertexId],
               col_vertices: Sequence[VertexId],
               entries: Sequence[Sequence[AlgebraElement | None]]) -> AlgMatrix:
    """Assemble with None meaning the zero map between the given summands."""
    rows = []
    for i, rv in enumerate(row_vertices):
        row = []
        for j, cv in enumerate(col_vertices):
            e = entries[i][j]
            if e is None:
                e = zero_element(lq, cv, rv, 0)
            if (e.source, e.target) != (cv, rv):
                raise DimError(f"entry ({i},{j}) does not run {cv!r} -> {rv!r}")
            row.append(e)
        rows.append(tuple(row))
    return AlgMatrix(tuple(row_vertices), tuple(col_vertices), tuple(rows))


def alg_matmul(lq: LabeledQuiver, a: AlgMatrix, b: AlgMatrix) -> AlgMatrix:
    if a.col_vertices != b.row_vertices:
        raise DimError("inner summands differ")
    entries = []
    for i, rv in enumerate(a.row_vertices):
        row = []
        for j, cv in enumerate(b.col_vertices):
            acc = zero_element(lq, cv, rv, 0)
            for k in range(len(a.col_vertices)):
                x, y = a.entry(i, k), b.entry(k, j)
                if x.is_zero() or y.is_zero():
                    continue
                acc = add(lq, acc, multiply(lq, x, y))
            row.append(acc)
        entries.append(tuple(row))
    return AlgMatrix(a.row_vertices, b.col_vertices, tuple(entries))


def flatten_matrix(lq: LabeledQuiver, p: ProjPoint, m: AlgMatrix) -> PolyMatrix:
    row_sizes = [len(module_basis(lq, v)) for v in m.row_vertices]
    col_sizes = [len(module_basis(lq, v)) for v in m.col_vertices]
    total_r, total_c = sum(row_sizes), sum(col_sizes)
    grid = [[P_ZERO] * total_c for _ in range(total_r)]
    roff = 0
    for i, rs in enumerate(row_sizes):
        coff = 0
        for j, cs in enumerate(col_sizes):
            block = flatten_element(lq, p, m.entry(i, j))
            for bi in range(rs):
                for bj in range(cs):
                    grid[roff + bi][coff + bj] = block.entry(bi, bj)
            coff += cs
        roff += rs
    return PolyMatrix(total_r, total_c,
                      tuple(grid[i][j] for i in range(total_r) for j in range(total_c)))


# ---------------------------------------------------------------------------
# Free complexes resolving point simples.


@dataclass(frozen=True)
class FreeComplex:
    """A complex ... -> F1 -> F0 of sums of projectives over one chart.

    modules[k] lists the (vertex, twist) summands of F_k; diffs[k] maps
    F_{k+1} to F_k.  Twists are zero here: the chart trivializes them.
    Build through make_complex, which verifies that consecutive
    differentials compose to zero.
    """

    lq: LabeledQuiver
    point: ProjPoint
    vertex: VertexId
    modules: tuple[tuple[tuple[VertexId, int], ...], ...]
    diffs: tuple[AlgMatrix, ...]


def make_complex(lq: LabeledQuiver, point: ProjPoint, vertex: VertexId,
                 diffs: Sequence[AlgMatrix]) -> FreeComplex:
    if not diffs:
        raise InvalidInput("a complex needs at least one differential")
    for d, e in zip(diffs, diffs[1:]):
        if d.col_vertices != e.row_vertices:
            raise DimError("adjacent differentials do not chain")
        if not alg_matmul(lq, d, e).is_zero():
            raise InternalError("consecutive differentials do not compose to zero")
    modules = [tuple((v, 0) for v in diffs[0].row_vertices)]
    for d in diffs:
        modules.append(tuple((v, 0) for v in d.col_vertices))
    return FreeComplex(lq, point, vertex, tuple(modules), tuple(diffs))


def flatten_complex(c: FreeComplex) -> list[PolyMatrix]:
    return [flatten_matrix(c.lq, c.point, d) for d in c.diffs]


def _validate_localized(lq: LabeledQuiver, p: ProjPoint) -> None:
    require_transverse(lq)
    for a, lbl in zip(lq.quiver.arrows, lq.labels):
        if any(pt != p for pt in lbl.support()):
            raise NotLocalized(
                f"label of arrow {a.id!r} is not concentrated at {p}")
    for c in enumerate_simple_cycles(lq.quiver):
        lbl = cycle_label(lq, c)
        if not lbl:
            raise NotLocalized("a zero-labeled cycle survives; contract it first")
        if lbl.degree() > 1:
            raise NotReduced("a simple cycle carries a non-reduced label")


def build_simple_resolution(lq: LabeledQuiver, v: VertexId,
                            p: ProjPoint) -> FreeComplex:
    """The explicit projective resolution of the point simple at v.

    Requires the quiver to be localized at p (labels p-primary, no
    zero-labeled cycles).  With no cycle through v the shape is

        0 -> (+)_{a} P_{s(a)} --(-t; a)--> (+)_{a} P_{s(a)} (+) P_v
          --(a, t)--> P_v,

    over the arrows a into v.  With cycles rho_0..rho_r through v (each
    labeled by the single point p, with closing arrows a_i and trunks
    rho_i' so that rho_i = a_i rho_i'), the radical is generated by the
    incoming arrows alone, and the relations among them form the block map

        columns:        r copies of P_v     |  P_{s(a)}, a in Xi
        row a_0:        -rho_0' in each     |  rho_0' a
        row a_i (i>=1): rho_i' on diagonal  |  0
        rows Xi:        0                   |  -t on the diagonal

    where Xi is the set of incoming arrows not closing any of the cycles.
    """
    _validate_localized(lq, p)
    if v not in set(lq.quiver.vertices):
        raise InvalidInput(f"no vertex {v!r}")
    q = lq.quiver
    t_elt = {w: normal_form(
        lq, [(Path.trivial(w), uniformizer_form(p))]) for w in q.vertices}
    incoming = arrows_into(q, v)
    cycles = [c for c in enumerate_simple_cycles(q) if v in cycle_vertices(q, c)]

    if not cycles:
        summands = tuple(a.src for a in incoming)
        d1 = alg_matrix(
            lq, [v], list(summands) + [v],
            [[path_element(lq, Path(a.src, (a.id,))) for a in incoming]
             + [t_elt[v]]],
        )
        if not incoming:
            return make_complex(lq, p, v, [d1])
        d2_entries: list[list[AlgebraElement | None]] = []
        for i, a in enumerate(incoming):
            row: list[AlgebraElement | None] = [None] * len(incoming)
            row[i] = normal_form(
                lq,
                [(Path.trivial(a.src),
                  HomForm(1, tuple(-c for c in uniformizer_form(p).coeffs)))],
            )
            d2_entries.append(row)
        d2_entries.append(
            [path_element(lq, Path(a.src, (a.id,))) for a in incoming])
        d2 = alg_matrix(lq, list(summands) + [v], list(summands), d2_entries)
        return make_complex(lq, p, v, [d1, d2])

    # Cyclic case: every cycle through v must be cut out by exactly t.
    closing: list = []
    trunks: list[Path] = []
    for c in cycles:
        lbl = cycle_label(lq, c)
        if lbl.degree() != 1 or lbl.multiplicity(p) != 1:
            raise NotReduced("cycle through the vertex is not cut out by t")
        rot = rotate_cycle_to(q, c, v)
        closing.append(q.arrow(rot.arrows[-1]))
        trunks.append(Path(v, rot.arrows[:-1]))
    r = len(cycles) - 1
    closing_ids = {a.id for a in closing}
    xi = [a for a in incoming if a.id not in closing_ids]

    f1_verts = [a.src for a in closing] + [a.src for a in xi]
    d1 = alg_matrix(
        lq, [v], f1_verts,
        [[path_element(lq, Path(a.src, (a.id,))) for a in closing + xi]],
    )
    if r == 0 and not xi:
        return make_complex(lq, p, v, [d1])

    f2_verts = [v] * r + [a.src for a in xi]
    neg_one = HomForm.constant(-1)
    entries: list[list[AlgebraElement | None]] = []
    trunk0 = trunks[0]
    row0: list[AlgebraElement | None] = [
        path_element(lq, trunk0, neg_one) for _ in range(r)
    ]
    for a in xi:
        row0.append(path_element(lq, Path(a.src, (a.id,) + trunk0.arrows)))
    entries.append(row0)
    for i in range(1, r + 1):
        row_i: list[AlgebraElement | None] = [None] * (r + len(xi))
        row_i[i - 1] = path_element(lq, trunks[i])
        entries.append(row_i)
    for k, a in enumerate(xi):
        row_x: list[AlgebraElement | None] = [None] * (r + len(xi))
        row_x[r + k] = normal_form(
            lq,
            [(Path.trivial(a.src),
              HomForm(1, tuple(-c for c in uniformizer_form(p).coeffs)))],
        )
        entries.append(row_x)
    d2 = alg_matrix(lq, f1_verts, f2_verts, entries)
    return make_complex(lq, p, v, [d1, d2])


# ---------------------------------------------------------------------------
# Exactness certificates.


def check_exactness(c: FreeComplex) -> bool:
    """Certify exactness over k[t] at the interior stages and injectivity
    of the leftmost differential, via Hermite kernels and membership."""
    flats = flatten_complex(c)
    for d, e in zip(flats, flats[1:]):
        if not d.mul(e).is_zero():
            raise InternalError("differentials do not compose to zero")
    if poly_kernel(flats[-1]).cols != 0:
        return False
    for k in range(len(flats) - 1):
        ker = poly_kernel(flats[k])
        image = HermiteBasis(flats[k + 1])
        for j in range(ker.cols):
            if not image.contains(ker.column(j)):
                return False
    return True


def default_truncation_order(c: FreeComplex) -> int:
    max_mult = max(
        (mult for lbl in c.lq.labels for _, mult in lbl.items), default=0)
    max_deg = max(
        (poly_deg(e) for f in flatten_complex(c) for e in f.entries), default=0)
    return 1 + max_mult + max(0, max_deg)


def truncation_exactness(c: FreeComplex, n_trunc: int | None = None) -> bool:
    """Independent verdict over the truncated ring k[t]/t^N.

    The complex augments onto the one-dimensional point simple, so after
    truncation its homology must be: one dimension at F_0 (the simple),
    one at F_1 (the Tor of the simple against the truncation), zero
    beyond.  Ranks of truncated maps come from invariant-factor
    valuations, not from the Hermite machinery used by check_exactness.
    """
    n = default_truncation_order(c) if n_trunc is None else n_trunc
    if n < 1:
        raise InvalidInput("truncation order must be positive")
    flats = flatten_complex(c)
    for d, e in zip(flats, flats[1:]):
        if not d.mul(e).is_zero():
            return False
    dims = [flats[0].rows] + [f.cols for f in flats]
    ranks = [truncated_rank(f, n) for f in flats]
    if n * dims[0] - ranks[0] != 1:
        return False
    for k in range(1, len(dims)):
        kernel_dim = n * dims[k] - ranks[k - 1]
        image_dim = ranks[k] if k < len(dims) - 1 else 0
        expected = 1 if k == 1 else 0
        if kernel_dim - image_dim != expected:
            return False
    return True


# ---------------------------------------------------------------------------
# Projective dimension by splitting invertible blocks at the point.


def _blocks_from(c: FreeComplex) -> tuple[list[list[VertexId]],
                                          list[list[list[RatFunc]]]]:
    verts = [[v for v, _ in mod] for mod in c.modules]
    mats = []
    for flat in flatten_complex(c):
        mats.append([[RatFunc.of(flat.entry(i, j)) for j in range(flat.cols)]
                     for i in range(flat.rows)])
    return verts, mats


def _offsets(lq: LabeledQuiver, verts: list[VertexId]) -> list[int]:
    out = [0]
    for v in verts:
        out.append(out[-1] + len(module_basis(lq, v)))
    return out


def _split_once(lq: LabeledQuiver, verts: list[list[VertexId]],
                mats: list[list[list[RatFunc]]]) -> bool:
    """Find one block invertible at the point, split it off, return True."""
    for k, m in enumerate(mats):
        rows_off = _offsets(lq, verts[k])
        cols_off = _offsets(lq, verts[k + 1])
        for bi in range(len(verts[k])):
            ri, rj = rows_off[bi], rows_off[bi + 1]
            for bj in range(len(verts[k + 1])):
                ci, cj = cols_off[bj], cols_off[bj + 1]
                if rj - ri != cj - ci or rj == ri:
                    continue
                vals = [[m[i][j].eval_at_zero() for j in range(ci, cj)]
                        for i in range(ri, rj)]
                if _rational_rank(vals) != rj - ri:
                    continue
                block = [[m[i][j] for j in range(ci, cj)] for i in range(ri, rj)]
                inv = _rf_matrix_inverse(block)
                keep_r = [i for i in range(len(m)) if not ri <= i < rj]
                keep_c = [j for j in range(len(m[0])) if not ci <= j < cj]
                new_m = []
                for i in keep_r:
                    row = []
                    for j in keep_c:
                        acc = m[i][j]
                        for a in range(rj - ri):
                            for b in range(rj - ri):
                                if m[i][ci + b].is_zero() or m[ri + a][j].is_zero():
                                    continue
                                acc = rf_sub(
                                    acc,
                                    rf_mul(rf_mul(m[i][ci + b], inv[b][a]),
                                           m[ri + a][j]))
                        row.append(acc)
                    new_m.append(row)
                mats[k] = new_m
                del verts[k][bi]
                del verts[k + 1][bj]
                if k > 0:
                    mats[k - 1] = [
                        [e for j, e in enumerate(row)
                         if not ri <= j < rj]
                        for row in mats[k - 1]
                    ]
                if k + 1 < len(mats):
                    mats[k + 1] = [
                        row for i, row in enumerate(mats[k + 1])
                        if not ci <= i < cj
                    ]
                return True
    return False


def minimized_pd(c: FreeComplex) -> int:
    """Largest index with a nonzero differential after all split-offs."""
    verts, mats = _blocks_from(c)
    while _split_once(c.lq, verts, mats):
        pass
    pd = 0
    for k, m in enumerate(mats):
        if m and m[0] and any(not e.is_zero() for row in m for e in row):
            pd = max(pd, k + 1)
    return pd


# ---------------------------------------------------------------------------
# Ext dimensions straight from the scalar parts (resolution-independent).


def _scalar_part(lq: LabeledQuiver, p: ProjPoint, x: AlgebraElement) -> Rat:
    """Constant term at t = 0 of the trivial-path coefficient; this is how
    a same-vertex map acts on the simple quotient."""
    for path, coeff in x.terms:
        if path.is_trivial():
            return poly_eval(chart_poly(coeff, p), Fraction(0))
    return Fraction(0)


def ext_dims(c: FreeComplex) -> dict[tuple[VertexId, int], int]:
    """dim Ext^i(S_v, S_w) for every vertex w and 0 <= i <= length.

    Applies Hom(-, S_w) to the complex: each P_u summand contributes k if
    u = w, and the induced maps are the scalar parts of the same-vertex
    entries.  Valid for any projective resolution of S_v.
    """
    summands = [[v for v, _ in mod] for mod in c.modules]
    out: dict[tuple[VertexId, int], int] = {}
    for w in c.lq.quiver.vertices:
        positions = [[i for i, u in enumerate(mod) if u == w] for mod in summands]
        deltas: list[list[list[Rat]]] = []
        for k, d in enumerate(c.diffs):
            rows = positions[k + 1]
            cols = positions[k]
            deltas.append([
                [_scalar_part(c.lq, c.point, d.entry(ci, ri)) for ci in cols]
                for ri in rows
            ])
        for i in range(len(summands)):
            dim_here = len(positions[i])
            out_rank = _rational_rank(deltas[i]) if i < len(deltas) and deltas[i] else 0
            in_rank = _rational_rank(deltas[i - 1]) if i > 0 and deltas[i - 1] else 0
            out[(w, i)] = dim_here - out_rank - in_rank
            if out[(w, i)] < 0:
                raise InternalError("scalar complex dimensions are inconsistent")
    return out


# ---------------------------------------------------------------------------
# Reports.


@dataclass(frozen=True)
class ResolutionReport:
    vertex: VertexId
    point: ProjPoint
    complex: FreeComplex
    pd: int
    ext: dict[tuple[VertexId, int], int]

    def to_json(self) -> dict:
        mods = [[[v, tw] for v, tw in mod] for mod in self.complex.modules]
        diffs = [
            [[format_element(d.entry(i, j)) for j in range(len(d.col_vertices))]
             for i in range(len(d.row_vertices))]
            for d in self.complex.diffs
        ]
        ext = [
            {"target": v, "i": i, "dim": dim}
            for (v, i), dim in sorted(
                self.ext.items(), key=lambda kv: (id_key(kv[0][0]), kv[0][1]))
            if dim
        ]
        return {
            "vertex": self.vertex,
            "point": str(self.point),
            "pd": self.pd,
            "modules": mods,
            "differentials": diffs,
            "ext": ext,
        }


def resolve(lq: LabeledQuiver, v: VertexId, p: ProjPoint) -> ResolutionReport:
    """Localize, resolve the point simple, certify, and measure pd.

    pd is computed twice (block minimization and the Ext route); any
    disagreement, or a failed exactness certificate, is an InternalError
    since the theory guarantees both.
    """
    require_transverse(lq)
    if not is_reduced_labeling(lq):
        raise NotReduced("some simple cycle carries a non-reduced label")
    if v not in set(lq.quiver.vertices):
        raise InvalidInput(f"no vertex {v!r}")
    local, vmap = localize_with_map(lq, p)
    complex_ = build_simple_resolution(local, vmap[v], p)
    if not check_exactness(complex_):
        raise InternalError("constructed resolution failed the exactness check")
    pd = minimized_pd(complex_)
    ext = ext_dims(complex_)
    pd_via_ext = max((i for (_, i), dim in ext.items() if dim), default=0)
    if pd != pd_via_ext:
        raise InternalError(
            f"pd disagreement: minimization {pd}, ext {pd_via_ext}")
    return ResolutionReport(v, p, complex_, pd, ext)


def pd_simple(lq: LabeledQuiver, v: VertexId, p: ProjPoint) -> int:
    return resolve(lq, v, p).pd


@dataclass(frozen=True)
class CertificationReport:
    lq: LabeledQuiver
    table: tuple[tuple[VertexId, ProjPoint, int], ...]
    max_pd: int

    @property
    def satisfied(self) -> bool:
        return self.max_pd <= 2

    def to_json(self) -> dict:
        return {
            "quiver": self.lq.to_json(),
            "table": [
                {"vertex": v, "point": str(p), "pd": pd}
                for v, p, pd in self.table
            ],
            "max_pd": self.max_pd,
            "theorem_hdOQ_satisfied": self.satisfied,
        }


def certification_points(lq: LabeledQuiver) -> tuple[ProjPoint, ...]:
    """Support of all labels plus one rational point off every label."""
    support = {pt for lbl in lq.labels for pt in lbl.support()}
    k = 0
    while ProjPoint.finite(k) in support:
        k += 1
    outside = ProjPoint.finite(k)
    return tuple(sorted(support, key=lambda pt: pt.sort_key())) + (outside,)


def certify_hd(lq: LabeledQuiver) -> CertificationReport:
    """pd of every point simple at every interesting point, with the
    homological-dimension bound asserted by the caller via `satisfied`."""
    require_transverse(lq)
    if not is_reduced_labeling(lq):
        raise NotReduced("some simple cycle carries a non-reduced label")
    points = certification_points(lq)
    table = []
    for v in sorted(lq.quiver.vertices, key=id_key):
        for p in points:
            table.append((v, p, pd_simple(lq, v, p)))
    max_pd = max(pd for _, _, pd in table)
    return CertificationReport(lq, tuple(table), max_pd)
