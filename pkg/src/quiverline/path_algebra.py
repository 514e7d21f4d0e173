"""Divisor-labeled quivers and their path algebras over the projective line.

A labeled quiver attaches an effective divisor to every arrow.  The algebra
it generates is spanned, as a module over the homogeneous coordinate ring,
by acyclic paths: any path that closes a simple cycle rewrites to the
shorter path times the section of the cycle's divisor.  The rewriting is
confluent exactly when distinct simple cycles share at most one vertex, so
every operation that relies on normal forms insists on that property.

Elements are graded.  An element of twist d from w to v stores, for each
acyclic path gamma: w -> v, a binary form of degree d - deg(D_gamma); the
inclusion into forms of degree d multiplies by divisor_section(D_gamma).
Twist is preserved by rewriting since the coefficient gains exactly the
degree the path label loses.

Paths are stored in application order (index 0 acts first); the printer
emits composition order, right to left.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .errors import (
    ComposeError,
    InvalidInput,
    NonzeroCycleLabel,
    NotTransverse,
)
from .exactalg import (
    EffDivisor,
    HomForm,
    ProjPoint,
    divisor_add,
    divisor_from_mapping,
    divisor_section,
    divisor_to_mapping,
    form_add,
    form_mul,
    h0_dim,
    is_reduced,
)
from .quiver import (
    ArrowId,
    Path,
    Quiver,
    SimpleCycle,
    VertexId,
    contract_cycle,
    enumerate_simple_cycles,
    has_transverse_cycles,
    acyclic_paths,
    path_key,
    path_target,
    path_vertices,
    validate_path,
)

_EMPTY = EffDivisor(())


@dataclass(frozen=True)
class LabeledQuiver:
    """A quiver with an effective divisor on every arrow.

    Labels are stored positionally, aligned with `quiver.arrows`, which
    keeps the whole structure hashable for caching.
    """

    quiver: Quiver
    labels: tuple[EffDivisor, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.quiver.arrows):
            raise InvalidInput("need exactly one label per arrow")

    @staticmethod
    def make(quiver: Quiver,
             labels: Mapping[ArrowId, EffDivisor] | None = None) -> "LabeledQuiver":
        """Build from a partial mapping; unlisted arrows get the zero divisor."""
        labels = dict(labels or {})
        known = {a.id for a in quiver.arrows}
        for aid in labels:
            if aid not in known:
                raise InvalidInput(f"label for unknown arrow {aid!r}")
        return LabeledQuiver(
            quiver,
            tuple(labels.get(a.id, _EMPTY) for a in quiver.arrows),
        )

    def label(self, arrow_id: ArrowId) -> EffDivisor:
        return _label_map(self)[arrow_id]

    def to_json(self) -> dict:
        data = self.quiver.to_json()
        data["labels"] = {
            str(a.id): divisor_to_mapping(lbl)
            for a, lbl in zip(self.quiver.arrows, self.labels)
            if lbl
        }
        return data

    @staticmethod
    def from_json(data: dict) -> "LabeledQuiver":
        quiver = Quiver.from_json(data)
        raw = data.get("labels", {})
        if not isinstance(raw, dict):
            raise InvalidInput("labels must be an object keyed by arrow id")
        by_str = {str(a.id): a.id for a in quiver.arrows}
        if len(by_str) != len(quiver.arrows):
            raise InvalidInput("arrow ids collide after string conversion")
        labels: dict[ArrowId, EffDivisor] = {}
        for key, mapping in raw.items():
            if key not in by_str:
                raise InvalidInput(f"label for unknown arrow {key!r}")
            labels[by_str[key]] = divisor_from_mapping(mapping)
        return LabeledQuiver.make(quiver, labels)


@lru_cache(maxsize=512)
def _label_map(lq: LabeledQuiver) -> dict[ArrowId, EffDivisor]:
    return {a.id: lbl for a, lbl in zip(lq.quiver.arrows, lq.labels)}


def require_transverse(lq: LabeledQuiver) -> None:
    if not has_transverse_cycles(lq.quiver):
        raise NotTransverse("two distinct simple cycles share more than one vertex")


def path_label(lq: LabeledQuiver, p: Path) -> EffDivisor:
    """Sum of the arrow labels along p; the trivial path carries nothing."""
    validate_path(lq.quiver, p)
    total = _EMPTY
    for aid in p.arrows:
        total = divisor_add(total, lq.label(aid))
    return total


def cycle_label(lq: LabeledQuiver, c: SimpleCycle) -> EffDivisor:
    total = _EMPTY
    for aid in c.arrows:
        total = divisor_add(total, lq.label(aid))
    return total


def is_reduced_labeling(lq: LabeledQuiver) -> bool:
    """Every simple cycle's total label is squarefree."""
    return all(is_reduced(cycle_label(lq, c))
               for c in enumerate_simple_cycles(lq.quiver))


@dataclass(frozen=True)
class GradedIndex:
    """A vertex together with a twist, indexing a graded piece."""

    vertex: VertexId
    twist: int


@dataclass(frozen=True)
class AlgebraElement:
    """A graded algebra element: acyclic paths w -> v with form coefficients.

    `terms` is sorted by the deterministic path order and holds no zero
    coefficients, so dataclass equality is semantic equality.
    """

    source: VertexId
    target: VertexId
    twist: int
    terms: tuple[tuple[Path, HomForm], ...]

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, p: Path) -> HomForm | None:
        for q, c in self.terms:
            if q == p:
                return c
        return None


# A reduction strategy picks one candidate (i, j) from the nonempty list of
# vertex-index pairs bounding a removable simple-cycle segment.
Strategy = Callable[[list[tuple[int, int]]], tuple[int, int]]

_STRATEGIES: dict[str, Strategy] = {
    "first": lambda cands: min(cands, key=lambda ij: (ij[1], ij[0])),
    "last": lambda cands: max(cands, key=lambda ij: (ij[0], ij[1])),
}


def _cycle_candidates(verts: tuple[VertexId, ...]) -> list[tuple[int, int]]:
    """All (i, j) with verts[i] == verts[j] and no repeat strictly inside."""
    out: list[tuple[int, int]] = []
    for j in range(1, len(verts)):
        for i in range(j):
            if verts[i] != verts[j]:
                continue
            seg = verts[i:j]
            if len(set(seg)) == len(seg):
                out.append((i, j))
    return out


def _reduce_path(lq: LabeledQuiver, p: Path, coeff: HomForm,
                 pick: Strategy) -> tuple[Path, HomForm]:
    """Rewrite until acyclic, folding each removed cycle into the coefficient."""
    arrows = p.arrows
    base = p.base
    while True:
        verts = path_vertices(lq.quiver, Path(base, arrows))
        cands = _cycle_candidates(verts)
        if not cands:
            return Path(base, arrows), coeff
        i, j = pick(cands)
        removed = _EMPTY
        for aid in arrows[i:j]:
            removed = divisor_add(removed, lq.label(aid))
        coeff = form_mul(coeff, divisor_section(removed))
        arrows = arrows[:i] + arrows[j:]


def normal_form(lq: LabeledQuiver,
                terms: Iterable[tuple[Path, HomForm]],
                *,
                source: VertexId | None = None,
                target: VertexId | None = None,
                twist: int | None = None,
                strategy: str | Strategy = "first") -> AlgebraElement:
    """Rewrite a formal combination of (path, coefficient) pairs to the basis.

    All paths must share endpoints and sit in one twist (coefficient degree
    plus label degree); pass the endpoints and twist explicitly to build a
    zero element from no terms.  The result does not depend on `strategy`
    when the quiver is transverse, which is the only case accepted.
    """
    require_transverse(lq)
    pick = _STRATEGIES[strategy] if isinstance(strategy, str) else strategy
    acc: dict[Path, HomForm] = {}
    for p, coeff in terms:
        validate_path(lq.quiver, p)
        p_twist = coeff.degree + path_label(lq, p).degree()
        if source is None:
            source, target, twist = p.base, path_target(lq.quiver, p), p_twist
        if (p.base, path_target(lq.quiver, p)) != (source, target):
            raise InvalidInput("terms mix different endpoints")
        if p_twist != twist:
            raise InvalidInput(f"term twist {p_twist} does not match {twist}")
        red_p, red_c = _reduce_path(lq, p, coeff, pick)
        prev = acc.get(red_p)
        acc[red_p] = red_c if prev is None else form_add(prev, red_c)
    if source is None or target is None or twist is None:
        raise InvalidInput("an empty combination needs explicit endpoints and twist")
    kept = sorted(
        ((p, c) for p, c in acc.items() if not c.is_zero()),
        key=lambda pc: path_key(lq.quiver, pc[0]),
    )
    return AlgebraElement(source, target, twist, tuple(kept))


def zero_element(lq: LabeledQuiver, source: VertexId, target: VertexId,
                 twist: int) -> AlgebraElement:
    return normal_form(lq, (), source=source, target=target, twist=twist)


def unit_element(lq: LabeledQuiver, v: VertexId) -> AlgebraElement:
    """The idempotent e_v at twist 0."""
    return normal_form(lq, [(Path.trivial(v), HomForm.constant(1))])


def path_element(lq: LabeledQuiver, p: Path,
                 coeff: HomForm | None = None) -> AlgebraElement:
    """One path as an element, by default with unit coefficient at its
    minimal twist deg(D_p)."""
    if coeff is None:
        coeff = HomForm.constant(1)
    return normal_form(lq, [(p, coeff)])


def arrow_element(lq: LabeledQuiver, arrow_id: ArrowId) -> AlgebraElement:
    a = lq.quiver.arrow(arrow_id)
    return path_element(lq, Path(a.src, (arrow_id,)))


def add(lq: LabeledQuiver, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if (x.source, x.target) != (y.source, y.target):
        raise ComposeError("can only add elements with equal endpoints")
    # Zero sits in every twist, so let it absorb into the other summand.
    if x.is_zero():
        return y
    if y.is_zero():
        return x
    if x.twist != y.twist:
        raise ComposeError("can only add elements of equal twist")
    return normal_form(lq, list(x.terms) + list(y.terms),
                       source=x.source, target=x.target, twist=x.twist)


def scale(lq: LabeledQuiver, x: AlgebraElement, form: HomForm) -> AlgebraElement:
    """Multiply by a global form; raises the twist by its degree."""
    return normal_form(
        lq,
        [(p, form_mul(form, c)) for p, c in x.terms],
        source=x.source, target=x.target, twist=x.twist + form.degree,
    )


def multiply(lq: LabeledQuiver, x: AlgebraElement, y: AlgebraElement,
             *, strategy: str | Strategy = "first") -> AlgebraElement:
    """Compose x after y (paths of y act first); twists add."""
    require_transverse(lq)
    if x.source != y.target:
        raise ComposeError(
            f"cannot compose: x starts at {x.source!r}, y ends at {y.target!r}")
    raw = [
        (Path(py.base, py.arrows + px.arrows), form_mul(cx, cy))
        for py, cy in y.terms
        for px, cx in x.terms
    ]
    return normal_form(lq, raw, source=y.source, target=x.target,
                       twist=x.twist + y.twist, strategy=strategy)


@lru_cache(maxsize=2048)
def hom_paths(lq: LabeledQuiver, v: VertexId, w: VertexId) -> tuple[Path, ...]:
    """Acyclic paths w -> v, in the global deterministic order."""
    return tuple(
        p for p in acyclic_paths(lq.quiver)
        if p.base == w and path_target(lq.quiver, p) == v
    )


def hom_bundle(lq: LabeledQuiver, v: VertexId, w: VertexId) -> list[EffDivisor]:
    """Divisors D_gamma over acyclic paths gamma: w -> v.

    The graded piece from (w, m) to (v, n) then has one summand of
    dimension h0_dim(n - m, D_gamma) per entry.
    """
    require_transverse(lq)
    return [path_label(lq, p) for p in hom_paths(lq, v, w)]


def graded_hom_dim(lq: LabeledQuiver, frm: GradedIndex, to: GradedIndex) -> int:
    require_transverse(lq)
    d = to.twist - frm.twist
    return sum(h0_dim(d, divisor)
               for divisor in hom_bundle(lq, to.vertex, frm.vertex))


def algebra_rank(lq: LabeledQuiver) -> int:
    """Rank of the whole algebra as a sheaf on the line."""
    return len(acyclic_paths(lq.quiver))


def contract_labeled(lq: LabeledQuiver, c: SimpleCycle
                     ) -> tuple[LabeledQuiver, dict[VertexId, VertexId]]:
    """Contract a zero-labeled simple cycle; surviving arrows keep labels."""
    require_transverse(lq)
    if cycle_label(lq, c):
        raise NonzeroCycleLabel("only a cycle with zero total label may be contracted")
    new_quiver, vmap = contract_cycle(lq.quiver, c)
    keep = {a.id for a in new_quiver.arrows}
    labels = {aid: lbl for aid, lbl in _label_map(lq).items() if aid in keep}
    return LabeledQuiver.make(new_quiver, labels), vmap


def localize_with_map(lq: LabeledQuiver, p: ProjPoint
                      ) -> tuple[LabeledQuiver, dict[VertexId, VertexId]]:
    """Keep only the p-part of every label, then contract all cycles that
    became unlabeled.  The returned map sends original vertices to their
    images under the contractions."""
    require_transverse(lq)
    local = LabeledQuiver(
        lq.quiver,
        tuple(
            EffDivisor.from_pairs([(p, lbl.multiplicity(p))])
            if lbl.multiplicity(p) else _EMPTY
            for lbl in lq.labels
        ),
    )
    total_map = {v: v for v in lq.quiver.vertices}
    while True:
        dead = next(
            (c for c in enumerate_simple_cycles(local.quiver)
             if not cycle_label(local, c)),
            None,
        )
        if dead is None:
            return local, total_map
        local, step = contract_labeled(local, dead)
        total_map = {v: step[img] for v, img in total_map.items()}


def localize_at(lq: LabeledQuiver, p: ProjPoint) -> LabeledQuiver:
    """The labeled quiver seen near one point of the line."""
    return localize_with_map(lq, p)[0]


def format_path(p: Path) -> str:
    if not p.arrows:
        return f"e_{p.base}"
    return "*".join(str(a) for a in reversed(p.arrows))


def format_element(x: AlgebraElement) -> str:
    """Deterministic one-line text, suitable for golden files."""
    if not x.terms:
        return "0"
    return " + ".join(f"({c}) {format_path(p)}" for p, c in x.terms)
