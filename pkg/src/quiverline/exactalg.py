"""Exact arithmetic on the projective line.

Everything is done over Q with `fractions.Fraction`; no floating point
anywhere.  The three core values:

* :class:`ProjPoint` is a point of P^1 over Q, either a finite point [q : 1]
  or the point at infinity [1 : 0].
* :class:`EffDivisor` is an effective divisor: a finite multiset of points,
  stored as a sorted tuple of (point, positive multiplicity) pairs.
* :class:`HomForm` is a homogeneous bivariate form of a fixed degree in the
  coordinates u0, u1.  `coeffs[k]` is the coefficient of u0^k * u1^(d-k).
  The zero form of any degree is allowed and keeps its degree tag.

`divisor_section` builds the canonical defining form of a divisor (factor
u0 - q*u1 per finite point q, factor u1 per point at infinity), normalized so
the leading nonzero coefficient is 1.  `h0_dim`/`h1_dim` are the cohomology
dimensions of O(d)(-D) on P^1; their difference is d - deg D + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InvalidInput

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def format_rat(q: Rat) -> str:
    """Canonical string for a rational: "p/q", or "p" when integral."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Rat:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"not a rational literal: {text!r}") from exc


@dataclass(frozen=True)
class ProjPoint:
    """A rational point of P^1: finite [value : 1] or infinity [1 : 0]."""

    value: Rat | None  # None encodes the point at infinity

    @staticmethod
    def finite(q: Rat | int) -> "ProjPoint":
        return ProjPoint(Fraction(q))

    @staticmethod
    def infinity() -> "ProjPoint":
        return ProjPoint(None)

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def sort_key(self) -> tuple:
        # Finite points in value order, infinity last.
        if self.value is None:
            return (1, _ZERO)
        return (0, self.value)

    @staticmethod
    def parse(text: str) -> "ProjPoint":
        if text == "inf":
            return ProjPoint.infinity()
        return ProjPoint.finite(parse_rat(text))

    def __str__(self) -> str:
        return "inf" if self.value is None else format_rat(self.value)


@dataclass(frozen=True)
class EffDivisor:
    """Effective divisor on P^1: points with positive integer multiplicities."""

    items: tuple[tuple[ProjPoint, int], ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for point, mult in self.items:
            if not isinstance(mult, int) or mult <= 0:
                raise InvalidInput(f"multiplicity must be a positive int, got {mult!r}")
            if point in seen:
                raise InvalidInput(f"duplicate point {point} in divisor")
            seen.add(point)
        ordered = tuple(sorted(self.items, key=lambda it: it[0].sort_key()))
        object.__setattr__(self, "items", ordered)

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[ProjPoint, int]]) -> "EffDivisor":
        acc: dict[ProjPoint, int] = {}
        for point, mult in pairs:
            acc[point] = acc.get(point, 0) + mult
        return EffDivisor(tuple((p, m) for p, m in acc.items() if m != 0))

    @staticmethod
    def zero() -> "EffDivisor":
        return EffDivisor(())

    def degree(self) -> int:
        return sum(m for _, m in self.items)

    def multiplicity(self, point: ProjPoint) -> int:
        for p, m in self.items:
            if p == point:
                return m
        return 0

    def support(self) -> tuple[ProjPoint, ...]:
        return tuple(p for p, _ in self.items)

    def __bool__(self) -> bool:
        return bool(self.items)

    def __str__(self) -> str:
        if not self.items:
            return "0"
        return " + ".join(
            (f"{p}" if m == 1 else f"{m}({p})") for p, m in self.items
        )


def divisor_from_mapping(data: Mapping[str, int]) -> EffDivisor:
    """Build a divisor from a JSON-style mapping of point strings to mults."""
    pairs = []
    for key, mult in data.items():
        if not isinstance(mult, int):
            raise InvalidInput(f"multiplicity for {key!r} must be an int")
        pairs.append((ProjPoint.parse(key), mult))
    return EffDivisor.from_pairs(pairs)


def divisor_to_mapping(div: EffDivisor) -> dict[str, int]:
    return {str(p): m for p, m in div.items}


def divisor_add(a: EffDivisor, b: EffDivisor) -> EffDivisor:
    return EffDivisor.from_pairs(tuple(a.items) + tuple(b.items))


def is_reduced(div: EffDivisor) -> bool:
    """True iff every multiplicity is 1 (the divisor is multiplicity-free)."""
    return all(m == 1 for _, m in div.items)


@dataclass(frozen=True)
class HomForm:
    """Homogeneous form of fixed degree in u0, u1 with rational coefficients."""

    degree: int
    coeffs: tuple[Rat, ...]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise InvalidInput("form degree must be >= 0")
        if len(self.coeffs) != self.degree + 1:
            raise InvalidInput(
                f"degree {self.degree} form needs {self.degree + 1} coefficients,"
                f" got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @staticmethod
    def zero(degree: int) -> "HomForm":
        return HomForm(degree, (_ZERO,) * (degree + 1))

    @staticmethod
    def constant(value: Rat | int) -> "HomForm":
        return HomForm(0, (Fraction(value),))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            u0_pow, u1_pow = k, self.degree - k
            factors = []
            if u0_pow:
                factors.append("u0" if u0_pow == 1 else f"u0^{u0_pow}")
            if u1_pow:
                factors.append("u1" if u1_pow == 1 else f"u1^{u1_pow}")
            mono = "*".join(factors)
            if not mono:
                parts.append(format_rat(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{format_rat(c)}*{mono}")
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def form_add(a: HomForm, b: HomForm) -> HomForm:
    if a.degree != b.degree:
        raise InvalidInput("cannot add forms of different degrees")
    return HomForm(a.degree, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def form_scale(a: HomForm, c: Rat | int) -> HomForm:
    c = Fraction(c)
    return HomForm(a.degree, tuple(c * x for x in a.coeffs))


def form_mul(a: HomForm, b: HomForm) -> HomForm:
    deg = a.degree + b.degree
    out = [_ZERO] * (deg + 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            if y != 0:
                out[i + j] += x * y
    return HomForm(deg, tuple(out))


def form_eval(f: HomForm, point: ProjPoint) -> Rat:
    """Evaluate at the standard affine representative ([q:1] or [1:0])."""
    if point.is_infinity:
        return f.coeffs[f.degree]
    acc = _ZERO
    q = point.value
    power = _ONE
    for c in f.coeffs:
        acc += c * power
        power *= q
    return acc


def form_restrict_finite(f: HomForm) -> tuple[Rat, ...]:
    """Coefficients of f(z, 1) as a univariate polynomial in z = u0/u1."""
    coeffs = list(f.coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def form_vanishing_order(f: HomForm, point: ProjPoint) -> int:
    """Order of vanishing of a nonzero form at a point of P^1."""
    if f.is_zero():
        raise InvalidInput("vanishing order of the zero form is undefined")
    if point.is_infinity:
        # Multiplicity of the factor u1 = degree minus degree of f(z, 1).
        return f.degree - (len(form_restrict_finite(f)) - 1)
    coeffs = list(form_restrict_finite(f))
    q = point.value
    order = 0
    while coeffs:
        # Synthetic division of the chart polynomial by (z - q).
        acc = _ZERO
        for c in reversed(coeffs):
            acc = acc * q + c
        if acc != 0:
            break
        new = [_ZERO] * (len(coeffs) - 1)
        carry = _ZERO
        for k in range(len(coeffs) - 1, 0, -1):
            carry = coeffs[k] + carry * q
            new[k - 1] = carry
        coeffs = new
        order += 1
    return order


def _normalize_leading(f: HomForm) -> HomForm:
    for k in range(f.degree, -1, -1):
        if f.coeffs[k] != 0:
            lead = f.coeffs[k]
            return f if lead == 1 else form_scale(f, _ONE / lead)
    return f


def divisor_section(div: EffDivisor) -> HomForm:
    """The canonical form of degree deg(div) vanishing exactly on div.

    Finite point q contributes (u0 - q*u1); infinity contributes u1. The
    result is normalized so its leading nonzero coefficient equals 1.
    """
    out = HomForm.constant(1)
    for point, mult in div.items:
        if point.is_infinity:
            factor = HomForm(1, (_ONE, _ZERO))  # u1
        else:
            factor = HomForm(1, (-point.value, _ONE))  # u0 - q*u1
        for _ in range(mult):
            out = form_mul(out, factor)
    return _normalize_leading(out)


def h0_dim(d: int, div: EffDivisor) -> int:
    """dim H^0(P^1, O(d)(-D)) = max(0, d - deg D + 1)."""
    return max(0, d - div.degree() + 1)


def h1_dim(d: int, div: EffDivisor) -> int:
    """dim H^1(P^1, O(d)(-D)) = max(0, deg D - d - 1)."""
    return max(0, (div.degree() - d) - 1)
