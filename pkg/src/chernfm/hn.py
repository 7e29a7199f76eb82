"""Harder-Narasimhan filtrations for slope-like functions on finite subobject lattices.

A :class:`SubobjectLattice` stands in for the subobjects of one object E of a
noetherian abelian category: each element carries the class
``(C0, C1)`` of the subobject.  The order must be a lattice, labels must be
additive across ``A ^ B`` and ``A v B`` and every interval must satisfy the
slope-like positivity (``C0 >= 0`` and ``C1 >= 0`` when ``C0 = 0``).  On such a
fixture the HN filtration

    E01 <= E0 <= E1 <= ... <= Em = E

has ``E01`` the largest subobject with ``C0 = C1 = 0``, ``E0`` the largest with
``C0 = 0`` and semistable factors of strictly decreasing slope above ``E0``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InvalidFixture, PreconditionError
from .poly import Order
from .slopes import PLUS_INFINITY, SlopeValue


@functools.total_ordering
@dataclass(frozen=True)
class KClass:
    C0: int
    C1: Fraction

    def __post_init__(self):
        if isinstance(self.C0, bool) or not isinstance(self.C0, int):
            raise PreconditionError(f"C0 must be an integer, got {self.C0!r}")
        if isinstance(self.C1, float):
            raise PreconditionError("C1 must be exact")
        object.__setattr__(self, "C1", Fraction(self.C1))

    def __add__(self, other: "KClass") -> "KClass":
        return KClass(self.C0 + other.C0, self.C1 + other.C1)

    def __sub__(self, other: "KClass") -> "KClass":
        return KClass(self.C0 - other.C0, self.C1 - other.C1)

    def __lt__(self, other: "KClass") -> bool:
        return (self.C0, self.C1) < (other.C0, other.C1)

    def scale_c1(self, k) -> "KClass":
        return KClass(self.C0, self.C1 * Fraction(k))

    def __str__(self) -> str:
        c1 = self.C1
        return f"({self.C0}, {c1.numerator if c1.denominator == 1 else c1})"


ZERO = KClass(0, Fraction(0))


def slope(c: KClass) -> SlopeValue:
    """``C1 / C0``, or ``+inf`` when ``C0 = 0``."""
    return PLUS_INFINITY if c.C0 == 0 else SlopeValue(c.C1 / c.C0)


def p_compare(a: KClass, b: KClass) -> Order:
    """Order of reduced polynomials ``m + C1/C0``; classes with ``C0 = 0`` are p-maximal."""
    if a.C0 == 0 or b.C0 == 0:
        return Order.of((a.C0 == 0) - (b.C0 == 0))
    return Order.of((a.C1 / a.C0 > b.C1 / b.C0) - (a.C1 / a.C0 < b.C1 / b.C0))


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple[str, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


class SubobjectLattice:
    """Finite poset of subobjects with additive ``KClass`` labels.

    ``leq`` lists generating relations ``(a, b)`` meaning ``a <= b``; the
    reflexive-transitive closure is taken, and meets and joins are derived
    from it.  Construction does not validate; use :func:`validate_lattice` or
    :meth:`require_valid`.
    """

    def __init__(self, labels: Mapping[str, KClass], leq: Iterable[tuple[str, str]], name: str = ""):
        self.name = name
        self.ids: tuple[str, ...] = tuple(labels)
        self.labels: dict[str, KClass] = dict(labels)
        self.relations = tuple((str(a), str(b)) for a, b in leq)
        for a, b in self.relations:
            if a not in self.labels or b not in self.labels:
                raise InvalidFixture(f"relation ({a}, {b}) names an unknown element")
        up = {x: {x} for x in self.ids}
        for a, b in self.relations:
            up[a].add(b)
        changed = True
        while changed:
            changed = False
            for x in self.ids:
                reach = set().union(*(up[y] for y in up[x]))
                if reach != up[x]:
                    up[x] = reach
                    changed = True
        self._up = {x: frozenset(s) for x, s in up.items()}
        self._meet: dict[tuple[str, str], str | None] = {}
        self._join: dict[tuple[str, str], str | None] = {}

    def __len__(self) -> int:
        return len(self.ids)

    def leq(self, a: str, b: str) -> bool:
        return b in self._up[a]

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    def label(self, x: str) -> KClass:
        return self.labels[x]

    def _extremal(self, candidates: Sequence[str], least: bool) -> str | None:
        for c in candidates:
            if all(self.leq(c, o) if least else self.leq(o, c) for o in candidates):
                return c
        return None

    def join_or_none(self, a: str, b: str) -> str | None:
        key = (a, b)
        if key not in self._join:
            ub = [x for x in self.ids if self.leq(a, x) and self.leq(b, x)]
            self._join[key] = self._extremal(ub, least=True)
        return self._join[key]

    def meet_or_none(self, a: str, b: str) -> str | None:
        key = (a, b)
        if key not in self._meet:
            lb = [x for x in self.ids if self.leq(x, a) and self.leq(x, b)]
            self._meet[key] = self._extremal(lb, least=False)
        return self._meet[key]

    def join(self, a: str, b: str) -> str:
        j = self.join_or_none(a, b)
        if j is None:
            raise InvalidFixture(f"{a} and {b} have no join")
        return j

    def meet(self, a: str, b: str) -> str:
        m = self.meet_or_none(a, b)
        if m is None:
            raise InvalidFixture(f"{a} and {b} have no meet")
        return m

    def join_all(self, xs: Iterable[str]) -> str:
        out = self.bottom
        for x in xs:
            out = self.join(out, x)
        return out

    @property
    def bottom(self) -> str:
        b = self._extremal(self.ids, least=True)
        if b is None:
            raise InvalidFixture("lattice has no bottom element")
        return b

    @property
    def top(self) -> str:
        t = self._extremal(self.ids, least=False)
        if t is None:
            raise InvalidFixture("lattice has no top element")
        return t

    def interval(self, lo: str, hi: str, *, open_below: bool = True) -> list[str]:
        """Elements ``x`` with ``lo < x <= hi`` (or ``lo <= x <= hi``)."""
        return [
            x for x in self.ids
            if self.leq(x, hi) and self.leq(lo, x) and not (open_below and x == lo)
        ]

    def quotient(self, lo: str, hi: str) -> KClass:
        return self.labels[hi] - self.labels[lo]

    def scaled(self, k) -> "SubobjectLattice":
        """Copy with every ``C1`` multiplied by ``k``."""
        return SubobjectLattice({x: c.scale_c1(k) for x, c in self.labels.items()},
                                self.relations, self.name)

    def require_valid(self) -> "SubobjectLattice":
        report = validate_lattice(self)
        if not report.ok:
            v = report.violations[0]
            raise InvalidFixture(f"{self.name or 'lattice'}: {v.kind} at {v.witness}: {v.message}")
        return self


def validate_lattice(L: SubobjectLattice) -> ValidationReport:
    """Check the order, additivity and positivity axioms exhaustively."""
    out: list[Violation] = []
    for a, b in itertools.combinations(L.ids, 2):
        if L.leq(a, b) and L.leq(b, a):
            out.append(Violation("order", (a, b), "antisymmetry fails"))
    if out:
        return ValidationReport(tuple(out))
    try:
        bottom = L.bottom
        L.top
    except InvalidFixture as exc:
        return ValidationReport((Violation("order", (), str(exc)),))
    if L.label(bottom) != ZERO:
        out.append(Violation("bottom", (bottom,), "bottom label must be (0, 0)"))
    for a, b in itertools.combinations_with_replacement(L.ids, 2):
        j, m = L.join_or_none(a, b), L.meet_or_none(a, b)
        if j is None or m is None:
            out.append(Violation("order", (a, b), "missing " + ("join" if j is None else "meet")))
            continue
        if L.label(j) + L.label(m) != L.label(a) + L.label(b):
            out.append(Violation("additivity", (a, b),
                                 f"label({j}) + label({m}) != label({a}) + label({b})"))
    for a in L.ids:
        for b in L.ids:
            if a != b and L.leq(a, b):
                q = L.quotient(a, b)
                if q.C0 < 0:
                    out.append(Violation("positivity", (a, b), "C0 not monotone"))
                elif q.C0 == 0 and q.C1 < 0:
                    out.append(Violation("positivity", (a, b), "C1 < 0 on a C0 = 0 subquotient"))
    return ValidationReport(tuple(out))


def _maximal_with(L: SubobjectLattice, pred) -> str:
    qualifying = [x for x in L.ids if pred(L.label(x))]
    j = L.join_all(qualifying)
    if not pred(L.label(j)) or not all(L.leq(x, j) for x in qualifying):
        raise InvalidFixture("qualifying subobjects are not closed under join")
    return j


def torsion_part(L: SubobjectLattice) -> str:
    """Largest element with ``C0 = 0``."""
    return _maximal_with(L, lambda c: c.C0 == 0)


def b01_part(L: SubobjectLattice) -> str:
    """Largest element with ``C0 = C1 = 0``."""
    return _maximal_with(L, lambda c: c.C0 == 0 and c.C1 == 0)


def maximal_destabilizer(L: SubobjectLattice, floor: str, ceiling: str | None = None) -> str:
    """The largest ``F`` in ``(floor, ceiling]`` of maximal slope relative to ``floor``.

    The maximisers are joined and the join is checked to be a maximiser too;
    failure means the fixture cannot come from an abelian category.
    """
    ceiling = L.top if ceiling is None else ceiling
    cands = L.interval(floor, ceiling)
    if not cands:
        raise PreconditionError(f"empty interval ({floor}, {ceiling}]")
    slopes = {}
    for x in cands:
        q = L.quotient(floor, x)
        if q.C0 == 0:
            raise PreconditionError(f"{x} / {floor} has C0 = 0; start above the torsion part")
        slopes[x] = q.C1 / q.C0
    best = max(slopes.values())
    j = L.join_all([x for x in cands if slopes[x] == best])
    if j not in slopes or slopes[j] != best:
        raise InvalidFixture(f"join {j} of the maximal-slope subobjects is not maximal")
    return j


@dataclass(frozen=True)
class HNFiltration:
    """Chain ``[E01, E0, E1, ..., Em]`` with ``Em`` the top.

    ``factors[0]`` is the class of ``E01``; ``factors[i]`` for ``i >= 1`` is the
    class of ``chain[i] / chain[i-1]``.  When ``E0`` is already the top the
    chain ends ``[..., top, top]`` with a zero last factor.
    """

    chain: tuple[str, ...]
    factors: tuple[KClass, ...]

    @property
    def free_factors(self) -> tuple[KClass, ...]:
        return tuple(f for f in self.factors[2:] if f.C0 > 0)

    @property
    def slopes(self) -> tuple[SlopeValue, ...]:
        return tuple(slope(f) for f in self.free_factors)


def _make(L: SubobjectLattice, chain: Sequence[str]) -> HNFiltration:
    factors = [L.label(chain[0])]
    factors += [L.quotient(a, b) for a, b in zip(chain, chain[1:])]
    return HNFiltration(tuple(chain), tuple(factors))


def _semistable(L: SubobjectLattice, lo: str, hi: str) -> bool:
    q = L.quotient(lo, hi)
    if q.C0 <= 0:
        return False
    return all(p_compare(L.quotient(lo, x), q) is not Order.GREATER for x in L.interval(lo, hi))


def hn_filtration(L: SubobjectLattice) -> HNFiltration:
    """Greedy HN filtration: torsion layers, then repeated maximal destabilisers."""
    L.require_valid()
    e01, e0 = b01_part(L), torsion_part(L)
    chain = [e01, e0]
    cur, top = e0, L.top
    while cur != top:
        cur = maximal_destabilizer(L, cur)
        chain.append(cur)
    if e0 == top:
        chain.append(top)
    filt = _make(L, chain)
    free = chain[1:] if e0 != top else []
    for lo, hi in zip(free, free[1:]):
        if not _semistable(L, lo, hi):
            raise InvalidFixture(f"factor {hi}/{lo} is not semistable")
    s = filt.slopes
    if any(x <= y for x, y in zip(s, s[1:])):
        raise InvalidFixture("HN slopes are not strictly decreasing")
    return filt


def _is_hn_chain(L: SubobjectLattice, e01: str, e0: str, free: Sequence[str]) -> bool:
    c01, c0 = L.label(e01), L.label(e0)
    if not (c01.C0 == 0 and c01.C1 == 0 and L.leq(e01, e0) and c0.C0 == 0):
        return False
    # E0/E01 has no nonzero subobject with C0 = C1 = 0
    if any(L.quotient(e01, x) == ZERO for x in L.interval(e01, e0)):
        return False
    # E/E0 has no nonzero subobject with C0 = 0
    if any(L.quotient(e0, x).C0 == 0 for x in L.interval(e0, L.top)):
        return False
    steps = list(zip([e0, *free], free))
    if not all(_semistable(L, lo, hi) for lo, hi in steps):
        return False
    slopes = [L.quotient(lo, hi).C1 / L.quotient(lo, hi).C0 for lo, hi in steps]
    return all(x > y for x, y in zip(slopes, slopes[1:]))


def _strict_chains(L: SubobjectLattice, start: str, end: str):
    if start == end:
        yield []
        return
    for x in L.interval(start, end):
        for rest in _strict_chains(L, x, end):
            yield [x, *rest]


def hn_by_exhaustion(L: SubobjectLattice) -> HNFiltration:
    """Enumerate every chain and keep those meeting the HN conditions; exactly one must survive."""
    L.require_valid()
    top = L.top
    found = []
    for e01 in L.ids:
        for e0 in L.ids:
            for free in _strict_chains(L, e0, top):
                if _is_hn_chain(L, e01, e0, free):
                    found.append([e01, e0, *free] if free else [e01, e0, top])
    if len(found) != 1:
        raise InvalidFixture(f"expected exactly one HN chain, found {len(found)}")
    return _make(L, found[0])


def mu_max(L: SubobjectLattice) -> SlopeValue | None:
    """Slope of ``E1/E0``; ``None`` when there is no positive-``C0`` layer."""
    s = hn_filtration(L).slopes
    return s[0] if s else None


def mu_min(L: SubobjectLattice) -> SlopeValue | None:
    s = hn_filtration(L).slopes
    return s[-1] if s else None
