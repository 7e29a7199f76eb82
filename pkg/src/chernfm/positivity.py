"""Sign constraints forced on Chern characters of coherent sheaves on C x S.

Each case pairs a vanishing pattern of the Chern matrix with the entries that
must then be nonnegative.  They are necessary conditions only: a class can
pass every matched case without being the class of any sheaf.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import PreconditionError
from .lattice import ChernCharacter, Threefold, pairings

ENTRY_NAMES = ("a00", "a01", "a02", "a10", "a11", "a12")


@dataclass(frozen=True)
class PatternCase:
    case_id: int
    zeros: tuple[str, ...]
    nonneg: tuple[str, ...]
    support: str


CASES: tuple[PatternCase, ...] = (
    PatternCase(1, ("a00",), ("a01", "a10"), "torsion"),
    PatternCase(2, ("a00", "a01"), ("a02", "a10"),
                "0-dimensional on all but finitely many fibers"),
    PatternCase(3, ("a00", "a01", "a02"), ("a10",), "0-dimensional on every fiber"),
    PatternCase(4, ("a00", "a10"), ("a01",), "vanishes on a general fiber"),
    PatternCase(5, ("a00", "a01", "a10"), ("a02", "a11"), "support of dimension at most 1"),
    PatternCase(6, ("a00", "a01", "a10", "a11"), ("a02",), "supported on finitely many fibers"),
    PatternCase(7, ("a00", "a01", "a02", "a10"), (),
                "support of dimension at most 1, 0-dimensional on every fiber"),
    PatternCase(8, ("a00", "a01", "a02", "a10", "a11"), ("a12",),
                "supported at finitely many points"),
)


def entry_coordinates(ch: ChernCharacter) -> dict[str, object]:
    """Recover the matrix entries from intersection numbers.

    ``a00 = rank``, ``a01 = c1.HD / 2d``, ``a10 = c1.D^2 / 2d``,
    ``a11 = ch2.D / 2d``, ``a02 = ch2.H``, ``a12 = ch3``.
    """
    if ch.geometry.kind != "threefold":
        raise PreconditionError("positivity cases are stated on the threefold")
    p = pairings(ch)
    two_d = 2 * ch.geometry.d
    vals = (p["rank"], p["c1.HD"], p["ch2.H"], p["c1.D2"], p["ch2.D"], p["ch3"])
    scaled = (1, two_d, 1, two_d, two_d, 1)
    out = {}
    for name, v, s in zip(ENTRY_NAMES, vals, scaled):
        q, r = divmod(v, s)
        out[name] = q if r == 0 else v / s
    return out


@dataclass(frozen=True)
class CaseResult:
    case: PatternCase
    passed: bool
    violated: tuple[str, ...] = ()

    @property
    def case_id(self) -> int:
        return self.case.case_id


def _classify_coords(coords: dict[str, object]) -> list[CaseResult]:
    results = []
    for case in CASES:
        if all(coords[z] == 0 for z in case.zeros):
            bad = tuple(x for x in case.nonneg if coords[x] < 0)
            results.append(CaseResult(case, not bad, bad))
    return results


def classify_pattern(ch: ChernCharacter) -> list[CaseResult]:
    """Matched cases with pass/fail and the violated entries."""
    return _classify_coords(entry_coordinates(ch))


def passes_positivity(ch: ChernCharacter) -> bool:
    """True when every matched case passes; otherwise the class is not a sheaf class."""
    return all(r.passed for r in classify_pattern(ch))


def in_coh_sec(ch: ChernCharacter) -> bool:
    c = entry_coordinates(ch)
    return c["a00"] == c["a01"] == c["a02"] == 0


def in_coh_corner(ch: ChernCharacter) -> bool:
    c = entry_coordinates(ch)
    return c["a00"] == c["a01"] == 0


@dataclass(frozen=True)
class SerreCertificate:
    closed: bool
    patterns: tuple[str, ...]
    forced_zero: tuple[tuple[str, ...], ...] = field(default=())


def serre_closure_check(ch: ChernCharacter, parts: Sequence[ChernCharacter]) -> SerreCertificate:
    """Check that a decomposition of a ``coh^sec`` / ``coh^corner`` class stays in the pattern.

    Preconditions: the parts sum to ``ch``, each has rank zero and each passes
    its matched positivity cases.  For ``coh^sec`` the entries ``a01`` and
    ``a02`` of every part are forced to vanish; for ``coh^corner`` only
    ``a01``.  The certificate lists the forced entries per part.
    """
    if not parts:
        raise PreconditionError("need at least one part")
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    if total != ch:
        raise PreconditionError("parts do not sum to ch")
    coords = [entry_coordinates(p) for p in parts]
    for i, c in enumerate(coords):
        if c["a00"] != 0:
            raise PreconditionError(f"part {i} has nonzero rank")
        bad = [r for r in _classify_coords(c) if not r.passed]
        if bad:
            raise PreconditionError(
                f"part {i} violates case {bad[0].case_id} ({', '.join(bad[0].violated)} < 0)"
            )
    if in_coh_sec(ch):
        patterns, forced = ("sec", "corner"), ("a01", "a02")
    elif in_coh_corner(ch):
        patterns, forced = ("corner",), ("a01",)
    else:
        return SerreCertificate(True, ())
    ok = all(c[name] == 0 for c in coords for name in forced)
    return SerreCertificate(ok, patterns, tuple(forced for _ in parts))


def admissible_subcharacters(ch: ChernCharacter, bound: int) -> Iterator[ChernCharacter]:
    """Integer classes ``ch'`` in ``[-bound, bound]^6`` with ``ch'`` and ``ch - ch'`` sheaf-compatible.

    Both must pass every matched positivity case; ranks satisfy
    ``0 <= rk ch' <= rk ch``.  Output is in lexicographic entry order.
    """
    geo = ch.geometry
    if not isinstance(geo, Threefold):
        raise PreconditionError("admissible_subcharacters works on the threefold")
    if bound < max(abs(x) for x in ch.entries):
        raise PreconditionError("bound must dominate every entry of ch")
    rng = range(-bound, bound + 1)
    rk = ch[0, 0]
    for a00 in rng:
        if not 0 <= a00 <= rk:
            continue
        for rest in itertools.product(rng, repeat=5):
            sub = ChernCharacter.from_entries(geo, a00, *rest)
            if passes_positivity(sub) and passes_positivity(ch - sub):
                yield sub
