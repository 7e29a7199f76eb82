"""The algebraic cohomology ring of C x S (and of C x T) in the Kunneth basis.

Classes are 2 x 3 matrices (threefold, S a Picard-rank-one K3 with
``H_S^2 = 2d``) or 2 x 2 matrices (surface, T a curve of genus ``g``).  Entry
``(i, j)`` is the coefficient of ``e_i (x) f_j``; ``e_0, e_1`` are the unit and
point class of the elliptic curve C, ``f_0, f_1, f_2`` the unit, hyperplane
and point class of S (``f_0, f_1`` for T).  The class ``e_i (x) f_j`` sits in
degree ``i + j``, so entries on one antidiagonal share a degree.

Divisors: ``D = e_0 (x) f_1`` (pull-back of H_S, resp. the fiber class f of
the surface) and ``H = e_1 (x) f_0`` (the section {c} x S, resp. h).

Entries are exact: ``int`` or :class:`~fractions.Fraction`, or
:class:`~chernfm.poly.RationalPoly` for formal polarisations.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, ClassVar, Iterator, Union

from .errors import GeometryMismatch, PreconditionError
from .poly import RationalPoly

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Threefold:
    """X = C x S with S a K3 surface of Picard rank one, ``H_S^2 = 2d``."""

    d: int = 1
    kind: ClassVar[str] = "threefold"
    ncols: ClassVar[int] = 3
    dim: ClassVar[int] = 3

    def __post_init__(self):
        if not isinstance(self.d, int) or isinstance(self.d, bool) or self.d < 1:
            raise PreconditionError(f"threefold needs an integer d >= 1, got {self.d!r}")

    def factor_product(self, j1: int, j2: int) -> int:
        # f_1 . f_1 = 2d f_2 on S; anything past f_2 vanishes
        if j1 + j2 > 2:
            return 0
        return 2 * self.d if j1 == j2 == 1 else 1

    @property
    def default_param(self) -> str:
        return "n"


@dataclass(frozen=True)
class Surface:
    """X = C x T with T a smooth projective curve of genus ``g``."""

    g: int = 1
    kind: ClassVar[str] = "surface"
    ncols: ClassVar[int] = 2
    dim: ClassVar[int] = 2

    def __post_init__(self):
        if not isinstance(self.g, int) or isinstance(self.g, bool) or self.g < 0:
            raise PreconditionError(f"surface needs an integer genus g >= 0, got {self.g!r}")

    def factor_product(self, j1: int, j2: int) -> int:
        return 1 if j1 + j2 <= 1 else 0

    @property
    def default_param(self) -> str:
        return "s"


GeometryParams = Union[Threefold, Surface]


def _clean(x: Any) -> Any:
    if isinstance(x, bool):
        raise TypeError("booleans are not cohomology coefficients")
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed; use Fraction")
    if isinstance(x, Fraction):
        return int(x.numerator) if x.denominator == 1 else x
    if isinstance(x, RationalPoly):
        if x.degree <= 0:
            return _clean(Fraction(x.leading)) if x.degree == 0 else 0
        return x
    if isinstance(x, int):
        return int(x)
    if isinstance(x, str):
        return _clean(Fraction(x))
    raise TypeError(f"unsupported coefficient {x!r}")


@dataclass(frozen=True, eq=False)
class CohClass:
    """A class in H*_alg(X) with exact (possibly formal) coefficients."""

    geometry: GeometryParams
    matrix: tuple[tuple[Any, ...], tuple[Any, ...]]

    def __post_init__(self):
        rows = tuple(tuple(_clean(x) for x in row) for row in self.matrix)
        if len(rows) != 2 or any(len(r) != self.geometry.ncols for r in rows):
            raise PreconditionError(
                f"{self.geometry.kind} classes are 2 x {self.geometry.ncols} matrices"
            )
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def zero(cls, geometry: GeometryParams):
        return cls(geometry, ((0,) * geometry.ncols, (0,) * geometry.ncols))

    @classmethod
    def basis(cls, geometry: GeometryParams, i: int, j: int):
        rows = [[0] * geometry.ncols for _ in range(2)]
        rows[i][j] = 1
        return cls(geometry, (tuple(rows[0]), tuple(rows[1])))

    @classmethod
    def from_entries(cls, geometry: GeometryParams, *entries):
        """Row-major constructor: ``(a00, a01, a02, a10, a11, a12)`` on the threefold."""
        if len(entries) == 1 and not isinstance(entries[0], (int, Fraction, str, RationalPoly)):
            entries = tuple(entries[0])
        n = geometry.ncols
        if len(entries) != 2 * n:
            raise PreconditionError(f"expected {2 * n} entries, got {len(entries)}")
        return cls(geometry, (tuple(entries[:n]), tuple(entries[n:])))

    def __getitem__(self, ij: tuple[int, int]) -> Any:
        i, j = ij
        return self.matrix[i][j]

    @property
    def entries(self) -> tuple[Any, ...]:
        return self.matrix[0] + self.matrix[1]

    def items(self) -> Iterator[tuple[tuple[int, int], Any]]:
        for i in range(2):
            for j in range(self.geometry.ncols):
                yield (i, j), self.matrix[i][j]

    def degree_part(self, k: int) -> "CohClass":
        """The component of cohomological degree ``2k`` (entries with ``i + j == k``)."""
        rows = [[x if i + j == k else 0 for j, x in enumerate(row)] for i, row in enumerate(self.matrix)]
        return CohClass(self.geometry, (tuple(rows[0]), tuple(rows[1])))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.geometry == other.geometry and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.geometry, self.matrix))

    # arithmetic ----------------------------------------------------------

    def _same_geometry(self, other: "CohClass") -> None:
        if self.geometry != other.geometry:
            raise GeometryMismatch(f"{self.geometry} vs {other.geometry}")

    def _result_type(self, other: "CohClass | None" = None) -> type:
        if isinstance(self, ChernCharacter) and (other is None or isinstance(other, ChernCharacter)):
            return ChernCharacter
        return CohClass

    def __add__(self, other: "CohClass") -> "CohClass":
        if not isinstance(other, CohClass):
            return NotImplemented
        self._same_geometry(other)
        rows = tuple(
            tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(self.matrix, other.matrix)
        )
        return self._result_type(other)(self.geometry, rows)

    def __neg__(self) -> "CohClass":
        return self._result_type()(self.geometry, tuple(tuple(-x for x in r) for r in self.matrix))

    def __sub__(self, other: "CohClass") -> "CohClass":
        if not isinstance(other, CohClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: Any) -> "CohClass":
        if isinstance(k, CohClass):
            return cup(self, k)
        rows = tuple(tuple(x * k for x in r) for r in self.matrix)
        if isinstance(self, ChernCharacter) and isinstance(k, int):
            return ChernCharacter(self.geometry, rows)
        return CohClass(self.geometry, rows)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "(" + "; ".join(", ".join(str(x) for x in row) for row in self.matrix) + ")"


@dataclass(frozen=True, eq=False)
class ChernCharacter(CohClass):
    """A Chern character: a cohomology class with integral entries.

    The matrix is ``((a00, a01, a02), (a10, a11, a12))`` on the threefold and
    ``((a00, a01), (a10, a11))`` on the surface.
    """

    def __post_init__(self):
        super().__post_init__()
        for x in self.entries:
            if not isinstance(x, int):
                raise PreconditionError(f"Chern character entries must be integers, got {x!r}")

    @property
    def rank(self) -> int:
        return self.matrix[0][0]

    @property
    def c1(self) -> tuple[int, int]:
        """``(a01, a10)``: the coefficients of D and H."""
        return self.matrix[0][1], self.matrix[1][0]

    @property
    def ch2(self) -> tuple[int, ...]:
        if self.geometry.kind == "surface":
            return (self.matrix[1][1],)
        return self.matrix[0][2], self.matrix[1][1]

    @property
    def ch3(self) -> int:
        if self.geometry.kind != "threefold":
            raise PreconditionError("ch3 only exists on the threefold")
        return self.matrix[1][2]

    def ch(self, k: int) -> CohClass:
        return self.degree_part(k)


def as_chern(u: CohClass) -> ChernCharacter:
    return u if isinstance(u, ChernCharacter) else ChernCharacter(u.geometry, u.matrix)


# ring structure --------------------------------------------------------------

def _cup2(u: CohClass, v: CohClass) -> CohClass:
    if u.geometry != v.geometry:
        raise GeometryMismatch(f"{u.geometry} vs {v.geometry}")
    geo = u.geometry
    n = geo.ncols
    out: list[list[Any]] = [[0] * n for _ in range(2)]
    for i1 in range(2):
        for j1 in range(n):
            x = u.matrix[i1][j1]
            if x == 0:
                continue
            for i2 in range(2 - i1):
                for j2 in range(n - j1):
                    y = v.matrix[i2][j2]
                    if y == 0:
                        continue
                    c = geo.factor_product(j1, j2)
                    if c:
                        out[i1 + i2][j1 + j2] = out[i1 + i2][j1 + j2] + c * x * y
    return CohClass(geo, (tuple(out[0]), tuple(out[1])))


def cup(u: CohClass, v: CohClass, *more: CohClass) -> CohClass:
    """Cup product; ``(e_a f_b)(e_c f_d) = (e_a e_c)(f_b f_d)`` on basis classes."""
    out = _cup2(u, v)
    for w in more:
        out = _cup2(out, w)
    return out


def unit(geometry: GeometryParams) -> CohClass:
    return CohClass.basis(geometry, 0, 0)


def integrate(u: CohClass) -> Any:
    """Degree of the top-dimensional component, i.e. the coefficient of e_1 (x) f_top."""
    return u.matrix[1][u.geometry.ncols - 1]


def point_class(geometry: GeometryParams) -> CohClass:
    return CohClass.basis(geometry, 1, geometry.ncols - 1)


def class_D(geometry: GeometryParams) -> CohClass:
    """``e_0 (x) f_1``: pull-back of H_S on the threefold, the fiber class f on the surface."""
    return CohClass.basis(geometry, 0, 1)


def class_H(geometry: GeometryParams) -> CohClass:
    """``e_1 (x) f_0``: the section {c} x S, resp. the horizontal section h."""
    return CohClass.basis(geometry, 1, 0)


def fiber_class(geometry: GeometryParams) -> CohClass:
    """Class of a fiber C x {pt} of the projection to S (resp. T)."""
    return CohClass.basis(geometry, 0, geometry.ncols - 1)


def todd_class(geometry: GeometryParams) -> CohClass:
    """td(C x S) = 1 + 2[pt_S]; td(C x T) = 1 + (1 - g)[pt_T]."""
    if geometry.kind == "threefold":
        return CohClass(geometry, ((1, 0, 2), (0, 0, 0)))
    return CohClass(geometry, ((1, 1 - geometry.g), (0, 0)))


CHI_CONVENTIONS = ("grr", "naive")


def euler_characteristic(ch: CohClass, chi_convention: str = "grr") -> Any:
    """chi = integral of ch . td(X).

    ``chi_convention="naive"`` drops the Todd class (td = 1); on the surface
    this returns ``a11``, the constant term used by the fiber-like tables.
    At ``g = 1`` both conventions agree on the surface.
    """
    if chi_convention == "grr":
        return integrate(cup(ch, todd_class(ch.geometry)))
    if chi_convention == "naive":
        return integrate(ch)
    raise PreconditionError(f"unknown chi convention {chi_convention!r}")


def restrict_to_section(ch: CohClass) -> tuple[Any, ...]:
    """Class of the restriction to a generic {c} x S: the first matrix row."""
    return tuple(ch.matrix[0])


def restrict_to_fiber(ch: CohClass) -> tuple[Any, Any]:
    """Class of the restriction to a generic fiber C x {s}: ``(a00, a10)``."""
    return ch.matrix[0][0], ch.matrix[1][0]


# polarisations ---------------------------------------------------------------

@dataclass(frozen=True)
class DivisorClass:
    """``alpha * D + beta * H``; on the surface ``th + sf`` has alpha = s, beta = t."""

    alpha: Any
    beta: Any

    def __post_init__(self):
        object.__setattr__(self, "alpha", _clean(self.alpha))
        object.__setattr__(self, "beta", _clean(self.beta))

    @property
    def is_formal(self) -> bool:
        return isinstance(self.alpha, RationalPoly) or isinstance(self.beta, RationalPoly)

    def as_class(self, geometry: GeometryParams) -> CohClass:
        rows = [[0] * geometry.ncols for _ in range(2)]
        rows[0][1] = self.alpha
        rows[1][0] = self.beta
        return CohClass(geometry, (tuple(rows[0]), tuple(rows[1])))


def is_ample(w: DivisorClass) -> bool:
    """The ample cone is the open quadrant ``alpha > 0, beta > 0``."""
    if w.is_formal:
        raise PreconditionError("ampleness of a formal polarisation is not decidable here")
    return w.alpha > 0 and w.beta > 0


def fiber_like_polarisation(geometry: GeometryParams, param: str | None = None) -> DivisorClass:
    """``H + nD`` (threefold) or ``h + sf`` (surface, t = 1) with the parameter formal."""
    var = param or geometry.default_param
    return DivisorClass(RationalPoly([0, 1], var), 1)


# intersection pairings -----------------------------------------------------------

@functools.lru_cache(maxsize=None)
def pairing_functional(geometry: GeometryParams, w: CohClass) -> tuple[Any, ...]:
    """Row-major coefficients of the linear form ``v -> integrate(v . w)``."""
    return tuple(
        integrate(cup(CohClass.basis(geometry, i, j), w))
        for i in range(2)
        for j in range(geometry.ncols)
    )


def pair(v: CohClass, w: CohClass) -> Any:
    """``integrate(v . w)`` evaluated through a cached linear functional."""
    if v.geometry != w.geometry:
        raise GeometryMismatch(f"{v.geometry} vs {w.geometry}")
    fn = pairing_functional(v.geometry, w)
    return sum(a * b for a, b in zip(fn, v.entries) if b)


@functools.lru_cache(maxsize=None)
def _pairing_classes(geometry: GeometryParams) -> dict[str, CohClass]:
    D, H, pt = class_D(geometry), class_H(geometry), point_class(geometry)
    one = unit(geometry)
    if geometry.kind == "threefold":
        return {
            "rank": pt,
            "c1.D2": cup(D, D),
            "c1.HD": cup(H, D),
            "ch2.D": D,
            "ch2.H": H,
            "ch3": one,
        }
    return {
        "rank": pt,
        "c1.f": D,
        "c1.h": H,
        "ch2": one,
    }


def pairings(v: CohClass) -> dict[str, Any]:
    """The intersection numbers that determine ``v``, all via cup and integrate.

    Threefold keys: ``rank, c1.D2, c1.HD, ch2.D, ch2.H, ch3``; surface keys:
    ``rank, c1.f, c1.h, ch2``.
    """
    return {name: pair(v, w) for name, w in _pairing_classes(v.geometry).items()}


def pairing(v: CohClass, name: str) -> Any:
    return pair(v, _pairing_classes(v.geometry)[name])


# Hilbert polynomials ------------------------------------------------------------

def hilbert_polynomial(
    ch: CohClass,
    w: DivisorClass | None = None,
    *,
    formal: bool = False,
    param: str | None = None,
    chi_convention: str = "grr",
) -> RationalPoly:
    """``P(m) = integral of ch . exp(m w) . td(X)`` as a polynomial in ``m``.

    With ``formal=True`` (or a formal ``w``) the polarisation is the
    fiber-like ``H + nD`` / ``h + sf`` and every coefficient is itself a
    :class:`RationalPoly` in ``n`` (resp. ``s``).  ``chi_convention="naive"``
    uses td = 1, reproducing ``m^2 a00 ts + m(a01 t + a10 s) + a11`` on the
    surface.
    """
    geo = ch.geometry
    if w is None:
        if not formal:
            raise PreconditionError("a polarisation is required unless formal=True")
        w = fiber_like_polarisation(geo, param)
    if chi_convention == "grr":
        td = todd_class(geo)
    elif chi_convention == "naive":
        td = unit(geo)
    else:
        raise PreconditionError(f"unknown chi convention {chi_convention!r}")
    omega = w.as_class(geo)
    term = cup(ch, td)
    coeffs: list[Any] = []
    for k in range(geo.dim + 1):
        coeffs.append(Fraction(1, math.factorial(k)) * integrate(term))
        term = cup(term, omega)
    if formal or w.is_formal:
        var = param or geo.default_param
        for x in (w.alpha, w.beta):
            if isinstance(x, RationalPoly):
                var = x.var
        coeffs = [c if isinstance(c, RationalPoly) else RationalPoly([c], var) for c in coeffs]
    return RationalPoly(coeffs, "m")
