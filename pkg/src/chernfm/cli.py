"""Command-line interface: ``chernfm <subcommand> ...``.

Exit status: 0 success, 1 verification failure, 2 malformed input,
3 precondition violation or invalid fixture.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import jsonio
from .errors import InvalidFixture, MalformedInput, PreconditionError
from .fm import fm_inverse, fm_transform
from .gieseker import destabilizes_2d, destabilizes_3d, surface_compare
from .hn import hn_by_exhaustion, hn_filtration
from .lattice import ChernCharacter, DivisorClass, GeometryParams, Surface, Threefold
from .positivity import admissible_subcharacters, classify_pattern
from .slopes import mu_H, mu_f, mu_lower_star, mu_upper_star
from .verify import (
    SUITES,
    verify_chi_correspondence,
    verify_involution,
    verify_lemma20_table,
    verify_slope_correspondence,
    verify_surface_identities,
    verify_theorem1_box,
)

EXIT_OK, EXIT_VERIFY, EXIT_MALFORMED, EXIT_PRECONDITION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 by default; keep that code
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--geometry", choices=("threefold", "surface"))
    p.add_argument("--d", type=int, help="K3 degree parameter, H_S^2 = 2d")
    p.add_argument("--g", type=int, help="genus of the base curve T")
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.add_argument("--out", help="write results to this file instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="chernfm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("transform", parents=[common], help="cohomological Fourier-Mukai transform")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--inverse", action="store_true", help="also print the inverse transform")

    p = sub.add_parser("slope", parents=[common], help="mu_H, mu_f, mu*, mu_*")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--polarisation", "-w", default=None,
                   help="alpha,beta for w = alpha D + beta H (default 1,1)")

    p = sub.add_parser("compare", parents=[common], help="asymptotic Gieseker comparison")
    p.add_argument("sub")
    p.add_argument("ambient")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--dim", type=int, choices=(2, 3))
    group.add_argument("--surface-case", choices=("torsion-free", "one-dimensional"))
    p.add_argument("--chi-convention", choices=("grr", "naive"), default="grr")

    p = sub.add_parser("classify", parents=[common], help="positivity case table")
    p.add_argument("input", nargs="?", default="-")

    p = sub.add_parser("enumerate-subs", parents=[common], help="admissible subcharacters as JSON lines")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--bound", type=int, required=True)

    p = sub.add_parser("hn", parents=[common], help="Harder-Narasimhan filtration of a lattice fixture")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--exhaustive", action="store_true", help="use the brute-force oracle")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--ch", default=None,
                   help="theorem1 character: a file path or six comma-separated integers")
    p.add_argument("--max-pairs", type=int, default=1000)
    return parser


# input helpers -------------------------------------------------------------------

def _read(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from exc
    return jsonio.loads(text)


def _flag_geometry(args) -> GeometryParams | None:
    kind = args.geometry
    if kind is None:
        if args.g is not None and args.d is None:
            kind = "surface"
        elif args.d is not None:
            kind = "threefold"
        else:
            return None
    if kind == "threefold":
        if args.g is not None:
            raise PreconditionError("--g does not apply to the threefold")
        return Threefold(1 if args.d is None else args.d)
    if args.d is not None:
        raise PreconditionError("--d does not apply to the surface")
    return Surface(1 if args.g is None else args.g)


def _geometry(args) -> GeometryParams:
    return _flag_geometry(args) or Threefold(1)


def _character(args, path: str) -> ChernCharacter:
    obj = _read(path)
    flagged = _flag_geometry(args)
    ch = jsonio.character_from_json(obj, flagged or Threefold(1))
    explicit = args.geometry is not None or args.d is not None or args.g is not None
    if explicit and isinstance(obj, dict) and "geometry" in obj and flagged != ch.geometry:
        raise PreconditionError(
            f"{path}: file geometry {ch.geometry} conflicts with command-line {flagged}"
        )
    return ch


def _fmt(x: Any) -> str:
    r = jsonio.render_rational(x)
    return str(r)


def _matrix(ch) -> str:
    return "(" + "; ".join(", ".join(_fmt(x) for x in row) for row in ch.matrix) + ")"


# subcommands ------------------------------------------------------------------------

def _cmd_transform(args):
    ch = _character(args, args.input)
    out = {"input": jsonio.character_to_json(ch),
           "transform": jsonio.character_to_json(fm_transform(ch))}
    lines = [f"transform: {_matrix(fm_transform(ch))}"]
    if args.inverse:
        out["inverse"] = jsonio.character_to_json(fm_inverse(ch))
        lines.append(f"inverse:   {_matrix(fm_inverse(ch))}")
    return out, lines, EXIT_OK


def _cmd_slope(args):
    ch = _character(args, args.input)
    w = DivisorClass(1, 1)
    if args.polarisation:
        parts = args.polarisation.split(",")
        if len(parts) != 2:
            raise MalformedInput("--polarisation expects alpha,beta")
        w = DivisorClass(jsonio.parse_rational(parts[0].strip()), jsonio.parse_rational(parts[1].strip()))
    values = {
        "mu_H": mu_H(ch, w),
        "mu_f": mu_f(ch),
        "mu_upper_star": mu_upper_star(ch),
        "mu_lower_star": mu_lower_star(ch),
    }
    out = {"character": jsonio.character_to_json(ch),
           "polarisation": [_fmt(w.alpha), _fmt(w.beta)]}
    out.update({k: jsonio.render_rational(v) for k, v in values.items()})
    lines = [f"{k:14s} {v}" for k, v in values.items()]
    return out, lines, EXIT_OK


def _cmd_compare(args):
    sub, amb = _character(args, args.sub), _character(args, args.ambient)
    if sub.geometry != amb.geometry:
        raise PreconditionError("the two characters live on different geometries")
    if args.surface_case or sub.geometry.kind == "surface":
        case = args.surface_case or ("torsion-free" if amb[0, 0] else "one-dimensional")
        verdict = surface_compare(sub, amb, case, args.chi_convention)
    else:
        dim = args.dim or (3 if amb[0, 0] else 2)
        verdict = destabilizes_3d(sub, amb) if dim == 3 else destabilizes_2d(sub, amb)
    out = jsonio.verdict_to_json(verdict)
    lines = [f"verdict:   {verdict.kind.value}", f"witness:   {verdict.witness}",
             f"threshold: {verdict.threshold if verdict.threshold is not None else '-'}"]
    return out, lines, EXIT_OK


def _cmd_classify(args):
    ch = _character(args, args.input)
    rows = classify_pattern(ch)
    out = {"character": jsonio.character_to_json(ch), "cases": [
        {"case": r.case_id, "passed": r.passed, "violated": list(r.violated),
         "support": r.case.support} for r in rows]}
    lines = [f"case {r.case_id}: {'PASS' if r.passed else 'FAIL'}"
             + (f" ({', '.join(v + ' < 0' for v in r.violated)}; not a sheaf class)" if r.violated else "")
             + f"  [{r.case.support}]" for r in rows] or ["no case matches (nonzero rank)"]
    return out, lines, EXIT_OK


def _cmd_enumerate(args):
    ch = _character(args, args.input)
    subs = [jsonio.character_to_json(s)["matrix"] for s in admissible_subcharacters(ch, args.bound)]
    out = {"character": jsonio.character_to_json(ch), "bound": args.bound, "candidates": subs}
    lines = [json.dumps(m) for m in subs]
    return out, lines, EXIT_OK


def _cmd_hn(args):
    L = jsonio.lattice_from_json(_read(args.input))
    filt = (hn_by_exhaustion if args.exhaustive else hn_filtration)(L)
    out = jsonio.filtration_to_json(filt)
    slopes = out["slopes"]
    out["mu_max"] = slopes[0] if slopes else None
    out["mu_min"] = slopes[-1] if slopes else None
    lines = [
        "filtration: " + " <= ".join(filt.chain),
        "factors:    " + ", ".join(str(c) for c in filt.factors),
        "slopes:     " + (", ".join(str(s) for s in slopes) if slopes else "(none)"),
    ]
    if not slopes:
        lines.append("mu_max/mu_min: undefined (no layer with C0 > 0)")
    return out, lines, EXIT_OK


def _cmd_verify(args):
    geo = _geometry(args)
    bound = args.bound
    suite = args.suite
    if suite == "involution":
        rep = verify_involution(2 if bound is None else bound, geo)
    elif suite in ("slopes", "chi", "theorem1"):
        if geo.kind != "threefold":
            raise PreconditionError(f"suite {suite} runs on the threefold")
        b = 3 if bound is None else bound
        if suite == "slopes":
            rep = verify_slope_correspondence(b, geo.d)
        elif suite == "chi":
            rep = verify_chi_correspondence(b, geo.d)
        else:
            rep = verify_theorem1_box(_theorem_character(args, geo), b)
    else:
        g = args.g if args.g is not None else 1
        if args.d is not None or args.geometry == "threefold":
            raise PreconditionError(f"suite {suite} runs on the surface")
        b = 3 if bound is None else bound
        rep = (verify_surface_identities(b, g) if suite == "surface"
               else verify_lemma20_table(b, g, args.max_pairs))
    out = rep.to_json()
    lines = [f"suite: {rep.suite}", f"cases: {rep.cases}, failures: {rep.failures}"]
    if rep.skipped:
        lines.append(f"skipped (gated): {rep.skipped}")
    if rep.flagged:
        lines.append(f"flagged: {rep.flagged}")
    for k, v in sorted(rep.branches.items()):
        lines.append(f"  {k}: {v}")
    for ce in rep.counterexamples:
        lines.append(f"  counterexample: {json.dumps(ce)}")
    return out, lines, EXIT_OK if rep.ok else EXIT_VERIFY


def _theorem_character(args, geo) -> ChernCharacter:
    spec = args.ch or "0,0,0,1,0,2"
    if all(part.strip().lstrip("-").isdigit() for part in spec.split(",")):
        entries = [int(x) for x in spec.split(",")]
        if len(entries) != 6:
            raise MalformedInput("--ch needs six integers")
        return ChernCharacter.from_entries(geo, *entries)
    return _character(args, spec)


COMMANDS = {
    "transform": _cmd_transform,
    "slope": _cmd_slope,
    "compare": _cmd_compare,
    "classify": _cmd_classify,
    "enumerate-subs": _cmd_enumerate,
    "hn": _cmd_hn,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, lines, status = COMMANDS[args.command](args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (PreconditionError, InvalidFixture) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    text = jsonio.dumps(out) if args.json else "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
