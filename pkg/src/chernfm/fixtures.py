"""Builders for subobject-lattice fixtures and access to the shipped corpus.

Lattices of downsets of a finite poset are distributive, and summing element
weights over a downset gives additive labels.  Chains and Boolean lattices
are special cases; ``m3`` supplies a modular, non-distributive example.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from importlib import resources
from typing import Iterable, Mapping, Sequence

from .hn import KClass, SubobjectLattice, ZERO


def _k(c) -> KClass:
    return c if isinstance(c, KClass) else KClass(int(c[0]), Fraction(c[1]))


def chain_lattice(factors: Sequence, name: str = "") -> SubobjectLattice:
    """``0 < E1 < ... < En`` where ``factors[i]`` is the class of ``E(i+1)/Ei``."""
    ids = ["0"] + [f"E{i + 1}" for i in range(len(factors))]
    labels, acc = {"0": ZERO}, ZERO
    for x, f in zip(ids[1:], factors):
        acc = acc + _k(f)
        labels[x] = acc
    return SubobjectLattice(labels, list(zip(ids, ids[1:])), name)


def downset_lattice(weights: Mapping[str, object], below: Iterable[tuple[str, str]] = (),
                    name: str = "") -> SubobjectLattice:
    """Lattice of downsets of the poset generated by ``below`` (pairs ``p < q``)."""
    points = list(weights)
    down = {p: {p} for p in points}
    for p, q in below:
        down[q].add(p)
    changed = True
    while changed:
        changed = False
        for p in points:
            new = set().union(*(down[x] for x in down[p]))
            if new != down[p]:
                down[p], changed = new, True
    sets = []
    for r in range(len(points) + 1):
        for combo in itertools.combinations(points, r):
            s = frozenset(combo)
            if all(down[p] <= s for p in s):
                sets.append(s)

    def ident(s: frozenset) -> str:
        return "{" + ",".join(p for p in points if p in s) + "}"

    labels = {}
    for s in sets:
        acc = ZERO
        for p in s:
            acc = acc + _k(weights[p])
        labels[ident(s)] = acc
    covers = [(ident(a), ident(b)) for a in sets for b in sets if a < b and len(b - a) == 1]
    return SubobjectLattice(labels, covers, name)


def boolean_lattice(atoms: Mapping[str, object], name: str = "") -> SubobjectLattice:
    return downset_lattice(atoms, (), name)


def m3_lattice(atom, floor=(0, 0), name: str = "") -> SubobjectLattice:
    """Diamond with three atoms over ``T``: additivity forces equal atom classes."""
    base, w = _k(floor), _k(atom)
    labels = {"0": ZERO}
    rel = []
    low = "0"
    if base != ZERO:
        labels["T"] = base
        rel.append(("0", "T"))
        low = "T"
    for x in "xyz":
        labels[x] = base + w
        rel += [(low, x), (x, "E")]
    labels["E"] = base + w + w
    return SubobjectLattice(labels, rel, name)


def pentagon_lattice(a, c, name: str = "") -> SubobjectLattice:
    """``0 < a < b < E`` and ``0 < c < E``; additivity forces ``label(b) = label(a)``."""
    ka, kc = _k(a), _k(c)
    labels = {"0": ZERO, "a": ka, "b": ka, "c": kc, "E": ka + kc}
    rel = [("0", "a"), ("a", "b"), ("b", "E"), ("0", "c"), ("c", "E")]
    return SubobjectLattice(labels, rel, name)


def corpus_names() -> list[str]:
    root = resources.files("chernfm") / "data" / "hn_fixtures"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str) -> dict:
    root = resources.files("chernfm") / "data" / "hn_fixtures"
    return json.loads((root / name).read_text())


def load_corpus() -> dict[str, dict]:
    return {n: load_fixture(n) for n in corpus_names()}
