"""Gieseker comparisons for fiber-like polarisations.

On the threefold the polarisation is ``H + nD`` with ``n -> oo``; on the
surface it is ``h + sf`` with ``s -> oo``.  Every "for n >> 0" statement is
reduced to the eventual sign of an exact polynomial, and each verdict carries
the Cauchy threshold ``N0`` past which that sign is certified.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError
from .lattice import (
    CohClass,
    DivisorClass,
    euler_characteristic,
    hilbert_polynomial,
    pairing,
    pairings,
)
from .poly import Order, RationalPoly, cauchy_threshold, eventual_sign, lex_compare


class VerdictKind(enum.Enum):
    DESTABILIZES = "Destabilizes"
    NEUTRAL = "Neutral"
    STRICTLY_BELOW = "StrictlyBelow"

    @classmethod
    def from_order(cls, order: Order) -> "VerdictKind":
        return {
            Order.GREATER: cls.DESTABILIZES,
            Order.EQUAL: cls.NEUTRAL,
            Order.LESS: cls.STRICTLY_BELOW,
        }[order]


@dataclass(frozen=True)
class Verdict:
    """Outcome of comparing a subobject class against the ambient class.

    ``index`` is the position of the deciding stage in ``stages``; a Neutral
    verdict has ``index == len(stages)``.  ``threshold`` is the certified
    ``N0`` for asymptotic comparisons, ``None`` when no parameter is involved.
    """

    kind: VerdictKind
    index: int
    stages: tuple[str, ...]
    threshold: int | None = None

    def __post_init__(self):
        if not 0 <= self.index <= len(self.stages):
            raise ValueError("witness index out of range")
        if (self.kind is VerdictKind.NEUTRAL) != (self.index == len(self.stages)):
            raise ValueError("Neutral verdicts and only those exhaust the stages")

    @property
    def witness(self) -> str:
        return "neutral" if self.index == len(self.stages) else self.stages[self.index]

    @property
    def order(self) -> Order:
        return {
            VerdictKind.DESTABILIZES: Order.GREATER,
            VerdictKind.NEUTRAL: Order.EQUAL,
            VerdictKind.STRICTLY_BELOW: Order.LESS,
        }[self.kind]


# threefold, positive rank ----------------------------------------------------

LEX3_STAGES = ("c1.D2/rk", "c1.HD/rk", "ch2.D/rk", "ch2.H/rk", "chi/rk")


def lex_vector_3d(ch: CohClass) -> tuple[Fraction, ...]:
    """``(c1.D^2, c1.HD, ch2.D, ch2.H, chi)`` divided by the rank (td_1 vanishes)."""
    if ch.geometry.kind != "threefold":
        raise PreconditionError("lex_vector_3d is defined on the threefold")
    p = pairings(ch)
    rk = p["rank"]
    if rk == 0:
        raise PreconditionError("lex_vector_3d needs nonzero rank")
    chi = euler_characteristic(ch)
    return tuple(
        Fraction(x, rk) for x in (p["c1.D2"], p["c1.HD"], p["ch2.D"], p["ch2.H"], chi)
    )


def destabilizes_3d(sub: CohClass, ambient: CohClass) -> Verdict:
    """Lexicographic comparison of :func:`lex_vector_3d`; Greater means Destabilizes."""
    order, idx = lex_compare(lex_vector_3d(sub), lex_vector_3d(ambient))
    return Verdict(VerdictKind.from_order(order), idx, LEX3_STAGES)


# threefold, two-dimensional classes ---------------------------------------------

TWO_DIM_STAGES = ("leading", "n^2", "n^1", "chi:n^2", "chi:n^1")


def _two_dim_data(ch: CohClass, var: str = "n"):
    p = pairings(ch)
    if p["rank"] != 0:
        raise PreconditionError("destabilizes_2d compares rank-zero classes")
    # c1 . w^2 and ch2 . w for w = H + nD
    b = RationalPoly([0, 2 * p["c1.HD"], p["c1.D2"]], var)
    a = RationalPoly([p["ch2.H"], p["ch2.D"]], var)
    if b.is_zero():
        raise PreconditionError("c1 . (H + nD)^2 vanishes identically; the class is not 2-dimensional")
    return a, b, euler_characteristic(ch)


def destabilizes_2d(sub: CohClass, ambient: CohClass) -> Verdict:
    """Compare reduced Hilbert polynomials of 2-dimensional classes for ``n >> 0``.

    With ``B = c1 . w^2`` and ``A = ch2 . w`` the reduced polynomial is
    ``m^2 + (2A/B) m + 2 chi/B``.  The m-coefficients are compared through
    ``A' B - A B'`` (a cubic with no constant term) times the eventual signs
    of ``B`` and ``B'``; if that vanishes identically the constants decide via
    ``chi' B - chi B'``.  The witness names the degree of the deciding term.
    """
    a1, b1, chi1 = _two_dim_data(sub)
    a0, b0, chi0 = _two_dim_data(ambient)
    sgn = eventual_sign(b1) * eventual_sign(b0)
    delta = a1 * b0 - a0 * b1
    if not delta.is_zero():
        stage = {3: 0, 2: 1, 1: 2}[delta.degree]
        order = Order.of(eventual_sign(delta) * sgn)
        return Verdict(VerdictKind.from_order(order), stage, TWO_DIM_STAGES,
                       cauchy_threshold(delta, b0, b1))
    gamma = b0 * chi1 - b1 * chi0
    if not gamma.is_zero():
        stage = {2: 3, 1: 4}[gamma.degree]
        order = Order.of(eventual_sign(gamma) * sgn)
        return Verdict(VerdictKind.from_order(order), stage, TWO_DIM_STAGES,
                       cauchy_threshold(gamma, b0, b1))
    return Verdict(VerdictKind.NEUTRAL, len(TWO_DIM_STAGES), TWO_DIM_STAGES,
                   cauchy_threshold(b0, b1))


# surface --------------------------------------------------------------------

class SurfaceCase(enum.Enum):
    TORSION_FREE = "TorsionFree"
    ONE_DIMENSIONAL = "OneDimensional"

    @classmethod
    def parse(cls, value: "SurfaceCase | str") -> "SurfaceCase":
        if isinstance(value, SurfaceCase):
            return value
        key = str(value).replace("-", "").replace("_", "").lower()
        for member in cls:
            if member.value.lower() == key:
                return member
        raise PreconditionError(f"unknown surface case {value!r}")


TORSION_FREE_STAGES = ("fiber-degree/rk", "h-degree/rk", "chi/rk")
ONE_DIM_STAGES = ("chi-vs-fiber-degree", "chi-vs-h-degree")


def surface_compare(
    sub: CohClass,
    ambient: CohClass,
    case: "SurfaceCase | str",
    chi_convention: str = "grr",
) -> Verdict:
    """Staged comparison for ``h + sf`` with ``s >> 0`` on ``C x T``.

    Torsion-free: compare ``c1.f/rk``, then ``c1.h/rk``, then ``chi/rk``.
    One-dimensional: with ``den = c1.h + s c1.f`` compare ``chi'/den'`` with
    ``chi/den``; the cross-multiplied difference is ``s d1 + d0`` where
    ``d1 = chi' a10 - chi a10'`` and ``d0 = chi' a01 - chi a01'``.
    """
    if sub.geometry.kind != "surface" or ambient.geometry.kind != "surface":
        raise PreconditionError("surface_compare needs surface classes")
    case = SurfaceCase.parse(case)
    chi1 = euler_characteristic(sub, chi_convention)
    chi0 = euler_characteristic(ambient, chi_convention)
    p1, p0 = pairings(sub), pairings(ambient)
    if case is SurfaceCase.TORSION_FREE:
        if p1["rank"] == 0 or p0["rank"] == 0:
            raise PreconditionError("torsion-free comparison needs nonzero ranks")
        v1 = [Fraction(x, p1["rank"]) for x in (p1["c1.f"], p1["c1.h"], chi1)]
        v0 = [Fraction(x, p0["rank"]) for x in (p0["c1.f"], p0["c1.h"], chi0)]
        order, idx = lex_compare(v1, v0)
        # m-coefficient difference times s is (delta fiber) s + (delta h)
        threshold = cauchy_threshold(RationalPoly([v1[1] - v0[1], v1[0] - v0[0]], "s"))
        return Verdict(VerdictKind.from_order(order), idx, TORSION_FREE_STAGES, threshold)
    if p1["rank"] != 0 or p0["rank"] != 0:
        raise PreconditionError("one-dimensional comparison needs rank-zero classes")
    if p0["c1.f"] == 0:
        raise PreconditionError("the ambient class must have c1 . f != 0")
    if p1["c1.f"] == 0 and p1["c1.h"] == 0:
        raise PreconditionError("the subobject class is 0-dimensional")
    den1 = RationalPoly([p1["c1.h"], p1["c1.f"]], "s")
    den0 = RationalPoly([p0["c1.h"], p0["c1.f"]], "s")
    sgn = eventual_sign(den1) * eventual_sign(den0)
    d1 = chi1 * p0["c1.f"] - chi0 * p1["c1.f"]
    d0 = chi1 * p0["c1.h"] - chi0 * p1["c1.h"]
    # chi'/den' > chi/den  <=>  (chi' den - chi den') sgn > 0
    diff = RationalPoly([d0, d1], "s")
    threshold = cauchy_threshold(diff, den0, den1)
    if d1 != 0:
        return Verdict(VerdictKind.from_order(Order.of(d1 * sgn)), 0, ONE_DIM_STAGES, threshold)
    if d0 != 0:
        return Verdict(VerdictKind.from_order(Order.of(d0 * sgn)), 1, ONE_DIM_STAGES, threshold)
    return Verdict(VerdictKind.NEUTRAL, 2, ONE_DIM_STAGES, threshold)


# oracles ----------------------------------------------------------------------

def reduced_hilbert_compare(sub: CohClass, ambient: CohClass, chi_convention: str = "grr") -> Order:
    """Compare reduced Hilbert polynomials with a formal fiber-like polarisation.

    Coefficients of ``m^k`` are polynomials in ``n`` (or ``s``); the ratio
    ``c'_k / L'`` is compared with ``c_k / L`` through the eventual sign of
    ``c'_k L - c_k L'`` corrected by the eventual signs of the leading terms.
    Used as an oracle for the staged comparators.
    """
    P1 = hilbert_polynomial(sub, formal=True, chi_convention=chi_convention)
    P0 = hilbert_polynomial(ambient, formal=True, chi_convention=chi_convention)
    if P1.degree != P0.degree:
        raise PreconditionError("reduced Hilbert polynomials of different dimension")
    L1, L0 = P1.leading, P0.leading
    sgn = eventual_sign(L1) * eventual_sign(L0)
    for k in range(P0.degree - 1, -1, -1):
        cross = P1.coefficient(k) * L0 - P0.coefficient(k) * L1
        s = eventual_sign(cross)
        if s:
            return Order.of(s * sgn)
    return Order.EQUAL


def reduced_hilbert_at(ch: CohClass, n: int, chi_convention: str = "grr") -> tuple[Fraction, ...]:
    """Coefficients (highest first) of ``P(m) / leading`` at the polarisation ``(n, 1)``."""
    P = hilbert_polynomial(ch, DivisorClass(n, 1), chi_convention=chi_convention)
    lead = Fraction(P.leading)
    if lead == 0:
        raise PreconditionError(f"Hilbert polynomial vanishes at n = {n}")
    return tuple(Fraction(P.coefficient(k)) / lead for k in range(P.degree, -1, -1))


def evaluation_order(sub: CohClass, ambient: CohClass, n: int, chi_convention: str = "grr") -> Order:
    """Lexicographic order of the evaluated reduced Hilbert coefficient vectors."""
    v1 = reduced_hilbert_at(sub, n, chi_convention)
    v0 = reduced_hilbert_at(ambient, n, chi_convention)
    if len(v1) != len(v0):
        raise PreconditionError("evaluated Hilbert polynomials of different degree")
    return lex_compare(v1, v0)[0]


def verdict_matches_evaluation(
    verdict: Verdict, sub: CohClass, ambient: CohClass, offsets: Sequence[int] = (0, 7),
    chi_convention: str = "grr",
) -> bool:
    """Check a staged verdict against explicit evaluation at ``N0 + k`` for each offset."""
    if verdict.threshold is None:
        raise PreconditionError("verdict carries no threshold")
    return all(
        evaluation_order(sub, ambient, verdict.threshold + k, chi_convention) == verdict.order
        for k in offsets
    )
