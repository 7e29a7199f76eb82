"""Slope functions with an explicit ``+inf`` for vanishing denominators."""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import PreconditionError
from .lattice import (
    ChernCharacter,
    CohClass,
    DivisorClass,
    class_H,
    cup,
    fiber_class,
    integrate,
    is_ample,
    pair,
    pairing,
)


@functools.total_ordering
@dataclass(frozen=True)
class SlopeValue:
    """A rational slope or ``+inf``; ``+inf`` sits above every finite value and equals itself."""

    value: Fraction | None

    @classmethod
    def finite(cls, x) -> "SlopeValue":
        return cls(Fraction(x))

    @classmethod
    def ratio(cls, num, den) -> "SlopeValue":
        return PLUS_INFINITY if den == 0 else cls(Fraction(num) / Fraction(den))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def _key(self, other: Any):
        if isinstance(other, SlopeValue):
            return other
        if isinstance(other, (int, Fraction)):
            return SlopeValue(Fraction(other))
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        o = self._key(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value == o.value

    def __lt__(self, other: Any) -> bool:
        o = self._key(other)
        if o is NotImplemented:
            return NotImplemented
        if self.value is None:
            return False
        return o.value is None or self.value < o.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        if self.value is None:
            return "+inf"
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    __repr__ = __str__


PLUS_INFINITY = SlopeValue(None)


def _require_ample(w: DivisorClass) -> None:
    if not is_ample(w):
        raise PreconditionError(f"polarisation ({w.alpha}, {w.beta}) is not ample")


def mu_H(ch: CohClass, w: DivisorClass) -> SlopeValue:
    """``c1 . w^(dim-1) / rank``; on the threefold this is ``c1 . w^2 / a00``."""
    _require_ample(w)
    geo = ch.geometry
    wc = w.as_class(geo)
    prod = ch.degree_part(1)
    for _ in range(geo.dim - 1):
        prod = cup(prod, wc)
    return SlopeValue.ratio(integrate(prod), ch[0, 0])


def mu_H_of_transform(ch: CohClass, w: DivisorClass) -> SlopeValue:
    """Slope of the transformed class, from the closed formula in the entries of ``ch``.

    Threefold: ``2d (-a00 a^2 + 2 a11 a b) / a10`` for ``w = (a, b)``.
    Surface: ``(a11 b - a00 a) / a10``.
    """
    _require_ample(w)
    geo = ch.geometry
    a, b = Fraction(w.alpha), Fraction(w.beta)
    if geo.kind == "threefold":
        num = 2 * geo.d * (-ch[0, 0] * a * a + 2 * ch[1, 1] * a * b)
    else:
        num = ch[1, 1] * b - ch[0, 0] * a
    return SlopeValue.ratio(num, ch[1, 0])


def mu_f(ch: CohClass) -> SlopeValue:
    """Fiber degree over rank: ``c1 . f / a00 = a10 / a00``."""
    return SlopeValue.ratio(pair(ch.degree_part(1), fiber_class(ch.geometry)), ch[0, 0])


def mu_upper_star(ch: CohClass) -> SlopeValue:
    """``c1 . H . D / rank`` (threefold, ``= 2d a01 / a00``); ``c1 . h / rank`` on the surface."""
    if ch.geometry.kind == "threefold":
        num = pairing(ch, "c1.HD")
    else:
        num = pair(ch.degree_part(1), class_H(ch.geometry))
    return SlopeValue.ratio(num, ch[0, 0])


def mu_lower_star(ch: CohClass) -> SlopeValue:
    """``ch2 . D / (c1 . D^2) = a11 / a10`` on the threefold; ``a11 / a10`` on the surface."""
    if ch.geometry.kind == "threefold":
        return SlopeValue.ratio(pairing(ch, "ch2.D"), pairing(ch, "c1.D2"))
    return SlopeValue.ratio(ch[1, 1], pairing(ch, "c1.f"))


class Trichotomy(enum.Enum):
    PREDICT_WIT0 = "PredictWIT0"
    PREDICT_BOUNDARY = "PredictBoundary"
    PREDICT_WIT1 = "PredictWIT1"


def slope_trichotomy(ch: ChernCharacter) -> Trichotomy:
    """Label predicted for a mu_f-semistable class of nonzero rank from the sign of ``mu_f``."""
    if ch[0, 0] == 0:
        raise PreconditionError("the fiber-degree trichotomy needs nonzero rank")
    m = mu_f(ch).value
    if m > 0:
        return Trichotomy.PREDICT_WIT0
    if m == 0:
        return Trichotomy.PREDICT_BOUNDARY
    return Trichotomy.PREDICT_WIT1
