"""Exact univariate polynomials and their eventual sign.

A :class:`RationalPoly` is a polynomial in one named formal parameter
(``m``, ``n`` or ``s``).  Coefficients are usually :class:`fractions.Fraction`
but any commutative ring element supporting ``+``, ``-``, ``*`` works, so a
polynomial in ``m`` may carry polynomials in ``n`` as its coefficients.

"For n >> 0" statements are decided by :func:`eventual_sign`, which reads the
leading coefficient, and :func:`cauchy_threshold`, which certifies an integer
beyond which the sign never changes again.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Any, Iterable, Sequence


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, sign: int) -> "Order":
        return cls((sign > 0) - (sign < 0))


def _is_zero(c: Any) -> bool:
    return c == 0


def _normalize(c: Any) -> Any:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class RationalPoly:
    """Polynomial with exact coefficients, stored lowest degree first.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and degree ``-1``.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Iterable[Any] = (), var: str = "n"):
        cs = [_normalize(c) if not isinstance(c, RationalPoly) else c for c in coeffs]
        for c in cs:
            if isinstance(c, float):
                raise TypeError("floating point coefficients are not allowed")
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: Any = 1, var: str = "n") -> "RationalPoly":
        return cls([0] * degree + [coeff], var)

    @classmethod
    def constant(cls, c: Any, var: str = "n") -> "RationalPoly":
        return cls([c], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Any:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k: int) -> Any:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    # ring operations -------------------------------------------------

    def _lift(self, other: Any) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            if other.var != self.var and other.degree > 0 and self.degree > 0:
                raise ValueError(f"parameter mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPoly([other], self.var)
        return NotImplemented  # type: ignore[return-value]

    def _var_with(self, other: "RationalPoly") -> str:
        return self.var if self.degree > 0 or other.degree <= 0 else other.var

    def __add__(self, other: Any) -> "RationalPoly":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return RationalPoly(
            [self.coefficient(k) + o.coefficient(k) for k in range(n)], self._var_with(o)
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other: Any) -> "RationalPoly":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "RationalPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "RationalPoly":
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return RationalPoly((), self._var_with(o))
        out: list[Any] = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return RationalPoly(out, self._var_with(o))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            raise TypeError("polynomial division is not supported")
        return RationalPoly([Fraction(c) / other for c in self.coeffs], self.var)

    def __pow__(self, k: int) -> "RationalPoly":
        out = RationalPoly([1], self.var)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPoly):
            if self.degree > 0 and other.degree > 0 and self.var != other.var:
                return False
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.var if self.degree > 0 else None, self.coeffs))

    def __call__(self, x: Any) -> Any:
        acc: Any = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _normalize(acc) if isinstance(acc, Fraction) else acc

    evaluate = __call__

    def map_coefficients(self, fn) -> "RationalPoly":
        return RationalPoly([fn(c) for c in self.coeffs], self.var)

    def __repr__(self) -> str:
        return f"RationalPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if _is_zero(c):
                continue
            cs = f"({c})" if isinstance(c, RationalPoly) or (
                isinstance(c, Fraction) and c.denominator != 1) else str(c)
            if k == 0:
                terms.append(cs)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                terms.append(mono if cs == "1" else f"-{mono}" if cs == "-1" else f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def eventual_sign(p: RationalPoly | int | Fraction) -> int:
    """Sign of ``p(x)`` for all sufficiently large ``x``."""
    lead = p.leading if isinstance(p, RationalPoly) else p
    if isinstance(lead, RationalPoly):
        return eventual_sign(lead)
    return (lead > 0) - (lead < 0)


def poly_compare_large_param(p: RationalPoly, q: RationalPoly) -> Order:
    """Compare ``p`` and ``q`` at every sufficiently large parameter value."""
    if p.degree > 0 and q.degree > 0 and p.var != q.var:
        raise ValueError(f"parameter mismatch: {p.var} vs {q.var}")
    return Order.of(eventual_sign(p - q))


def cauchy_threshold(*polys: RationalPoly | int | Fraction) -> int:
    """Smallest integer ``N >= 1`` beyond every real root of the given polynomials.

    Uses the Cauchy bound ``|r| < 1 + max |c_i / c_lead|``; for ``x >= N``
    each nonzero polynomial has the sign of its leading coefficient.
    """
    bound = Fraction(1)
    for p in polys:
        if not isinstance(p, RationalPoly) or p.degree <= 0:
            continue
        lead = Fraction(p.leading)
        m = max(abs(Fraction(c) / lead) for c in p.coeffs[:-1])
        bound = max(bound, 1 + m)
    return max(1, math.ceil(bound))


def lex_compare(a: Sequence[Any], b: Sequence[Any]) -> tuple[Order, int]:
    """Lexicographic comparison returning the order and the deciding index.

    The index is ``len(a)`` when the sequences agree everywhere.
    """
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return (Order.GREATER if x > y else Order.LESS), i
    return Order.EQUAL, len(a)
