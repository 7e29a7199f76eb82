"""Cohomological action of the relative Fourier-Mukai transform.

On the Kunneth lattice the transform sends ``e_i (x) f_j`` to
``(-1)^(i+1) e_(1-i) (x) f_j``: the two rows of the Chern matrix swap and the
old first row picks up a sign.  Applying it twice is ``-id`` (the involution
pulls back trivially on these classes and the shift contributes the sign).
"""

from __future__ import annotations

import enum

from .errors import PreconditionError
from .lattice import ChernCharacter, CohClass, as_chern, class_D, cup, integrate, unit


def fm_transform(ch: CohClass) -> CohClass:
    """``(a0*; a1*) -> (a1*; -a0*)``."""
    top, bottom = ch.matrix
    rows = (tuple(bottom), tuple(-x for x in top))
    return type(ch)(ch.geometry, rows)


def fm_inverse(ch: CohClass) -> CohClass:
    """Inverse of :func:`fm_transform`, equal to ``-fm_transform``."""
    return -fm_transform(ch)


def basis_image(geometry, i: int, j: int) -> ChernCharacter:
    """Image of ``e_i (x) f_j`` under the formula ``(-1)^(i+1) e_(1-i) (x) f_j``."""
    return as_chern(CohClass.basis(geometry, 1 - i, j) * (-1) ** (i + 1))


class Wit(enum.Enum):
    WIT0 = "WIT0"
    WIT1 = "WIT1"

    @classmethod
    def parse(cls, value: "Wit | str") -> "Wit":
        return value if isinstance(value, Wit) else cls(str(value).upper())


def wit_weight(ch: CohClass, codim: int):
    """``ch_{1,c} . D^(top - c)``: the second-row entry in column ``c`` paired with D-powers."""
    geo = ch.geometry
    if codim not in range(geo.ncols):
        raise PreconditionError(f"codim must lie in 0..{geo.ncols - 1} on the {geo.kind}")
    component = CohClass.basis(geo, 1, codim) * ch[1, codim]
    power = unit(geo)
    for _ in range(geo.ncols - 1 - codim):
        power = cup(power, class_D(geo))
    return integrate(cup(component, power))


def wit_sign_check(ch: CohClass, wit: "Wit | str", codim: int) -> bool:
    """Necessary sign condition for a WIT sheaf in the relative codimension-``c`` range.

    WIT1 requires ``ch_{1,c} . D^(2-c) <= 0`` and WIT0 requires ``>= 0`` (on the
    surface the exponent is ``1 - c``).  A pass says nothing about sufficiency.
    """
    value = wit_weight(ch, codim)
    return value <= 0 if Wit.parse(wit) is Wit.WIT1 else value >= 0
