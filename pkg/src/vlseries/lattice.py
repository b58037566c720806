"""Finite pointwise models of Archimedean complex vector lattices.

A model is a finite labeled index set X; elements are functions X -> scalars
stored in canonical coordinate order.  R^X with X finite is universally
complete and Dedekind complete, so the order-theoretic series machinery of
the rest of the library applies verbatim, and every lattice operation is
coordinatewise.

Scalars come in two modes: exact (``fractions.Fraction``) and approximate
(``float``).  Exact arithmetic never consults tolerances; as soon as a float
enters, comparisons use the active :class:`~vlseries.tolerance.ToleranceConfig`
with per-coordinate scale ``max(1, |lhs|, |rhs|)``.  Mixing the two modes in
one operation promotes to approximate and stamps a ``mixed-mode`` flag on the
result, which reports surface.

The complex modulus is computed in two ways: the closed pointwise form
``sqrt(re^2 + im^2)`` and the supremum of ``cos(t)*f + sin(t)*g`` over a
finite angle grid.  The grid form exists to validate the supremum definition
empirically (it underestimates the closed form by a relative factor of at
most ``1 - cos(pi/K)``); the closed form is the one used by the rest of the
library.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Union

from .errors import BadGrid, ModelMismatch
from .tolerance import active_tolerance

Number = Union[Fraction, float]

MIXED_MODE = "mixed-mode"
HEURISTIC = "heuristic"
SUPPORT_FRAGILE = "support-fragile"


# ---------------------------------------------------------------------------
# scalar helpers


def as_number(x) -> Number:
    """Normalize a scalar: ints and Fractions are exact, floats approximate."""
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return x
    raise TypeError(f"not a scalar: {x!r}")


def is_exact(x: Number) -> bool:
    return isinstance(x, Fraction)


def _scale(x: Number, y: Number) -> float:
    return max(1.0, abs(float(x)), abs(float(y)))


def number_leq(x: Number, y: Number) -> bool:
    """x <= y; exact when both operands are exact, else tolerant."""
    if is_exact(x) and is_exact(y):
        return x <= y
    return float(x) <= float(y) + active_tolerance().eps_cmp * _scale(x, y)


def number_lt(x: Number, y: Number) -> bool:
    """Strict x < y; under tolerance, x must clear y by eps_cmp * scale."""
    if is_exact(x) and is_exact(y):
        return x < y
    return float(x) < float(y) - active_tolerance().eps_cmp * _scale(x, y)


def number_close(x: Number, y: Number) -> bool:
    if is_exact(x) and is_exact(y):
        return x == y
    return abs(float(x) - float(y)) <= active_tolerance().eps_cmp * _scale(x, y)


def number_is_zero(x: Number) -> bool:
    return number_close(x, Fraction(0))


def exact_sqrt(x: Fraction) -> Fraction | None:
    """The exact square root of a nonnegative rational, or None."""
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def number_sqrt(x: Number) -> Number:
    """Square root, staying exact on perfect squares of rationals."""
    if is_exact(x):
        r = exact_sqrt(x)
        if r is not None:
            return r
    return math.sqrt(float(x))


# ---------------------------------------------------------------------------
# models and elements


@dataclass(frozen=True)
class IndexSet:
    """A finite labeled index set with a fixed canonical coordinate order."""

    points: tuple[str, ...]

    def __post_init__(self):
        if isinstance(self.points, list):
            object.__setattr__(self, "points", tuple(self.points))
        if len(self.points) == 0:
            raise ValueError("index set must have at least one point")
        if any(not p for p in self.points):
            raise ValueError("point labels must be nonempty")
        if len(set(self.points)) != len(self.points):
            raise ValueError("point labels must be unique")

    @property
    def size(self) -> int:
        return len(self.points)

    def index(self, label: str) -> int:
        return self.points.index(label)

    def __iter__(self):
        return iter(self.points)


def _check_same_model(a, b) -> None:
    if a.model != b.model:
        raise ModelMismatch(f"{a.model.points} vs {b.model.points}")


@dataclass(frozen=True)
class RealElement:
    """An element of the real part of the model: one scalar per point."""

    model: IndexSet
    values: tuple[Number, ...]
    flags: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        vals = tuple(as_number(v) for v in self.values)
        if len(vals) != self.model.size:
            raise ValueError("value count does not match the model size")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "flags", frozenset(self.flags))

    @property
    def is_exact(self) -> bool:
        return all(is_exact(v) for v in self.values)

    @property
    def mode(self) -> str:
        return "exact" if self.is_exact else "approx"

    def value_at(self, label: str) -> Number:
        return self.values[self.model.index(label)]

    def with_flags(self, *extra: str) -> "RealElement":
        return RealElement(self.model, self.values, self.flags | set(extra))

    def map(self, fn: Callable[[Number], Number]) -> "RealElement":
        return RealElement(self.model, tuple(fn(v) for v in self.values), self.flags)

    def zip(self, other: "RealElement", fn: Callable[[Number, Number], Number]) -> "RealElement":
        _check_same_model(self, other)
        flags = self.flags | other.flags
        if self.is_exact != other.is_exact:
            flags = flags | {MIXED_MODE}
        vals = tuple(fn(a, b) for a, b in zip(self.values, other.values))
        return RealElement(self.model, vals, flags)

    # vector-space structure
    def __add__(self, other: "RealElement") -> "RealElement":
        return self.zip(other, lambda a, b: a + b)

    def __sub__(self, other: "RealElement") -> "RealElement":
        return self.zip(other, lambda a, b: a - b)

    def __neg__(self) -> "RealElement":
        return self.map(lambda a: -a)

    def __mul__(self, other):
        if isinstance(other, RealElement):
            return self.zip(other, lambda a, b: a * b)
        c = as_number(other)
        return self.map(lambda a: a * c)

    __rmul__ = __mul__

    def __abs__(self) -> "RealElement":
        return abs_real(self)

    def max_abs(self) -> float:
        return max(abs(float(v)) for v in self.values)


@dataclass(frozen=True)
class ComplexElement:
    """f + ig with f, g real elements on one model."""

    re: RealElement
    im: RealElement

    def __post_init__(self):
        _check_same_model(self.re, self.im)

    @property
    def model(self) -> IndexSet:
        return self.re.model

    @property
    def flags(self) -> frozenset[str]:
        return self.re.flags | self.im.flags

    @property
    def is_exact(self) -> bool:
        return self.re.is_exact and self.im.is_exact

    def __add__(self, other: "ComplexElement") -> "ComplexElement":
        return ComplexElement(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexElement") -> "ComplexElement":
        return ComplexElement(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ComplexElement":
        return ComplexElement(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, ComplexElement):
            return ComplexElement(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, RealElement):
            return ComplexElement(self.re * other, self.im * other)
        if isinstance(other, complex):
            return ComplexElement(
                self.re * other.real - self.im * other.imag,
                self.re * other.imag + self.im * other.real,
            )
        c = as_number(other)
        return ComplexElement(self.re * c, self.im * c)

    __rmul__ = __mul__

    def value_at(self, label: str) -> complex:
        return complex(float(self.re.value_at(label)), float(self.im.value_at(label)))


def real_element(model: IndexSet, values: Iterable) -> RealElement:
    return RealElement(model, tuple(values))


def complex_element(model: IndexSet, values: Iterable) -> ComplexElement:
    """Build f + ig from complex scalars, or (re, im) pairs of scalars."""
    res, ims = [], []
    for v in values:
        if isinstance(v, complex):
            res.append(v.real)
            ims.append(v.imag)
        elif isinstance(v, tuple):
            res.append(as_number(v[0]))
            ims.append(as_number(v[1]))
        else:
            res.append(as_number(v))
            ims.append(Fraction(0))
    return ComplexElement(RealElement(model, tuple(res)), RealElement(model, tuple(ims)))


def as_complex(x: Union[RealElement, ComplexElement]) -> ComplexElement:
    if isinstance(x, ComplexElement):
        return x
    return ComplexElement(x, zero(x.model))


def zero(model: IndexSet) -> RealElement:
    return RealElement(model, (Fraction(0),) * model.size)


def const(model: IndexSet, c) -> RealElement:
    v = as_number(c)
    return RealElement(model, (v,) * model.size)


# ---------------------------------------------------------------------------
# lattice operations


def sup2(f: RealElement, g: RealElement) -> RealElement:
    """Coordinatewise supremum f v g."""
    return f.zip(g, max)


def inf2(f: RealElement, g: RealElement) -> RealElement:
    """Coordinatewise infimum f ^ g."""
    return f.zip(g, min)


def pos_part(f: RealElement) -> RealElement:
    return sup2(f, zero(f.model))


def neg_part(f: RealElement) -> RealElement:
    return sup2(-f, zero(f.model))


def abs_real(f: RealElement) -> RealElement:
    return sup2(f, -f)


def square_mean(f: RealElement, g: RealElement) -> RealElement:
    """The closed pointwise form of sup over angles of cos(t)*f + sin(t)*g.

    Coordinatewise sqrt(f^2 + g^2); stays exact where the sum of squares is
    a perfect rational square (in particular when one argument is 0).
    """
    return f.zip(g, lambda a, b: number_sqrt(a * a + b * b))


@lru_cache(maxsize=32)
def _angle_table(k: int) -> tuple[tuple[float, float], ...]:
    return tuple((math.cos(2.0 * math.pi * j / k), math.sin(2.0 * math.pi * j / k)) for j in range(k))


def square_mean_grid(f: RealElement, g: RealElement, K: int | None = None) -> RealElement:
    """Grid realization of the supremum definition of the modulus.

    Maximum of cos(t_j)*f + sin(t_j)*g over t_j = 2*pi*j/K.  Underestimates
    :func:`square_mean` by a relative factor of at most 1 - cos(pi/K).
    """
    _check_same_model(f, g)
    if K is None:
        K = active_tolerance().grid_K
    if K < 4:
        raise BadGrid(f"grid size {K} < 4")
    table = _angle_table(K)
    vals = []
    for a, b in zip(f.values, g.values):
        af, bf = float(a), float(b)
        vals.append(max(c * af + s * bf for c, s in table))
    flags = f.flags | g.flags
    return RealElement(f.model, tuple(vals), flags)


def cmodulus(z: ComplexElement) -> RealElement:
    """|f + ig| via the closed square-mean form."""
    return square_mean(z.re, z.im)


# ---------------------------------------------------------------------------
# order relations


def leq(f: RealElement, g: RealElement) -> bool:
    """f <= g at every point (exact, or within eps_cmp * scale per coordinate)."""
    _check_same_model(f, g)
    return all(number_leq(a, b) for a, b in zip(f.values, g.values))


def is_positive(f: RealElement) -> bool:
    return leq(zero(f.model), f)


def is_weak_order_unit(u: RealElement) -> bool:
    """u >= 0 with strictly positive value at every point.

    On a finite model this is equivalent to invertibility of u.
    """
    return all(number_lt(Fraction(0), v) for v in u.values)


def strictly_dominates(x: RealElement, y: RealElement) -> bool:
    """The relation x << y: (y - x)^+ is a weak order unit.

    Equivalently x <= y with y - x invertible; pointwise, x(t) < y(t)
    everywhere.
    """
    _check_same_model(x, y)
    return is_weak_order_unit(pos_part(y - x))


def sup_of(elements: Sequence[RealElement]) -> RealElement:
    """Supremum of a finite nonempty family."""
    if not elements:
        raise ValueError("sup of empty family")
    acc = elements[0]
    for e in elements[1:]:
        acc = sup2(acc, e)
    return acc


def inf_of(elements: Sequence[RealElement]) -> RealElement:
    if not elements:
        raise ValueError("inf of empty family")
    acc = elements[0]
    for e in elements[1:]:
        acc = inf2(acc, e)
    return acc


def elements_close(f: RealElement, g: RealElement, tol: float | None = None) -> bool:
    """Coordinatewise agreement, either by eps_cmp semantics or a given tol."""
    _check_same_model(f, g)
    if tol is None:
        return all(number_close(a, b) for a, b in zip(f.values, g.values))
    return all(abs(float(a) - float(b)) <= tol for a, b in zip(f.values, g.values))
