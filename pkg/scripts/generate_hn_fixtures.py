"""Regenerate the shipped HN fixture corpus.

Expected chains are computed by exhaustive search over all chains and frozen
into each file, so the greedy engine is checked against an independent oracle.
"""

import json
import pathlib

from chernfm.fixtures import (
    boolean_lattice,
    chain_lattice,
    downset_lattice,
    m3_lattice,
    pentagon_lattice,
)
from chernfm.hn import SubobjectLattice, KClass, hn_by_exhaustion
from chernfm.jsonio import filtration_to_json, lattice_to_json

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "chernfm" / "data" / "hn_fixtures"

SPECS = {
    "chain_5_3": ("Two-step chain with factor slopes 5 then 3.",
                  chain_lattice([(1, 5), (1, 3)])),
    "chain_total_slopes_5_3": ("Labels (1, 5) < (2, 6): subobject slope 5 against total slope 3.",
                               chain_lattice([(1, 5), (1, 1)])),
    "chain_semistable": ("Proper subobject has smaller slope than the top.",
                         chain_lattice([(1, 1), (1, 5)])),
    "singleton": ("The zero object.", SubobjectLattice({"0": KClass(0, 0)}, [])),
    "all_torsion": ("Every subobject has C0 = 0.", chain_lattice([(0, 1), (0, 2)])),
    "torsion_plus_free": ("Torsion part below a semistable free quotient.",
                          chain_lattice([(0, 1), (1, 2)])),
    "b01_b0_free_layers": ("Nonzero E01 and E0 layers below two free factors.",
                           chain_lattice([(0, 0), (0, 2), (1, 5), (1, 1)])),
    "b01_only": ("Single nonzero subobject with class (0, 0).", chain_lattice([(0, 0)])),
    "tie_diamond": ("Two incomparable slope-5 atoms; the top has slope 5 as well.",
                    boolean_lattice({"a": (1, 5), "b": (1, 5)})),
    "boolean_5_5_1": ("Two slope-5 atoms join to the maximal destabiliser.",
                      boolean_lattice({"a": (1, 5), "b": (1, 5), "c": (1, 1)})),
    "m3_tie": ("Modular diamond with three equal atoms.", m3_lattice((1, 5))),
    "m3_over_torsion": ("Modular diamond sitting over a torsion subobject.",
                        m3_lattice((1, 5), floor=(0, 1))),
    "pentagon": ("Non-modular pentagon with a (0, 0) subquotient.",
                 pentagon_lattice((1, 5), (1, 1))),
    "degenerate_c0_eq_c1": ("C1 = C0 on every object: all slopes equal 1.",
                            boolean_lattice({"a": (1, 1), "b": (2, 2), "c": (3, 3)})),
    "degenerate_chain": ("Chain with C1 = C0 everywhere.", chain_lattice([(1, 1), (2, 2), (1, 1)])),
    "four_step_decreasing": ("Four free factors with slopes 9, 5, 2, -3.",
                             chain_lattice([(1, 9), (1, 5), (2, 4), (1, -3)])),
    "rational_c1": ("Rational labels: slopes 1/3 then 1/6.",
                    chain_lattice([(1, "1/3"), (2, "1/3")])),
    "equal_slope_merge": ("Consecutive equal slopes merge into one factor.",
                          chain_lattice([(1, 5), (1, 5), (1, 1)])),
    "negative_slopes": ("Free factors of negative slope.", chain_lattice([(1, -1), (1, -4)])),
    "torsion_quotient_on_top": ("The top quotient by the free part is torsion.",
                                chain_lattice([(1, 1), (0, 2)])),
    "boolean_torsion_atom": ("Boolean lattice with a torsion atom.",
                             boolean_lattice({"t": (0, 2), "x": (1, 4), "y": (1, 0)})),
    "boolean_b01_atom": ("Boolean lattice with a (0, 0) atom and a torsion atom.",
                         boolean_lattice({"z": (0, 0), "t": (0, 1), "x": (2, 3)})),
    "boolean_semistable": ("Three atoms of equal slope.",
                           boolean_lattice({"a": (1, 2), "b": (2, 4), "c": (3, 6)})),
    "boolean_four_atoms": ("Four atoms with mixed slopes.",
                           boolean_lattice({"a": (1, 3), "b": (1, 3), "c": (2, 2), "d": (1, -5)})),
    "downset_hidden": ("The destabiliser needs an element of low slope underneath it.",
                       downset_lattice({"p": (1, 2), "q": (1, 8), "r": (1, 4)}, [("p", "q")])),
    "downset_mixed": ("Downsets of a five-point poset with torsion and free weights.",
                      downset_lattice({"t": (0, 3), "p": (1, 1), "q": (2, 9), "r": (1, 6), "s": (1, -2)},
                                      [("t", "q"), ("p", "q"), ("q", "s"), ("r", "s")])),
    "downset_b01_hidden": ("A (0, 0) point that only appears above a free point.",
                           downset_lattice({"p": (1, 4), "z": (0, 0), "q": (1, 1)}, [("p", "z")])),
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    for name, (description, lattice) in SPECS.items():
        lattice.name = name
        expected = filtration_to_json(hn_by_exhaustion(lattice))
        doc = lattice_to_json(lattice, description=description, expected=expected)
        (OUT / f"{name}.json").write_text(json.dumps(doc, indent=2) + "\n")
    print(f"wrote {len(SPECS)} fixtures to {OUT}")


if __name__ == "__main__":
    main()
