"""JSON encodings: rationals as bare integers or ``"p/q"`` strings, never floats."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .errors import MalformedInput, PreconditionError
from .gieseker import Verdict
from .hn import HNFiltration, KClass, SubobjectLattice
from .lattice import ChernCharacter, DivisorClass, GeometryParams, Surface, Threefold
from .poly import RationalPoly
from .slopes import SlopeValue

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def render_rational(x: Any) -> Any:
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, SlopeValue):
        return "+inf" if x.is_infinite else render_rational(x.value)
    if isinstance(x, RationalPoly):
        return {"var": x.var, "coeffs": [render_rational(c) for c in x.coeffs]}
    raise TypeError(f"cannot render {x!r} as an exact rational")


def parse_rational(v: Any) -> int | Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise MalformedInput(f"{v!r} is not an exact rational (use an integer or \"p/q\")")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        m = _RATIONAL.match(v)
        if m:
            num, den = int(m.group(1)), int(m.group(2) or 1)
            if den == 0:
                raise MalformedInput(f"zero denominator in {v!r}")
            q = Fraction(num, den)
            return int(q.numerator) if q.denominator == 1 else q
    raise MalformedInput(f"{v!r} is not an exact rational")


def parse_slope(v: Any) -> SlopeValue:
    if v == "+inf":
        return SlopeValue(None)
    return SlopeValue(Fraction(parse_rational(v)))


def parse_integer(v: Any) -> int:
    q = parse_rational(v)
    if not isinstance(q, int):
        raise MalformedInput(f"{v!r} is not an integer")
    return q


def geometry_to_json(geo: GeometryParams) -> dict:
    if isinstance(geo, Threefold):
        return {"kind": "threefold", "d": geo.d}
    return {"kind": "surface", "g": geo.g}


def geometry_from_json(obj: Any) -> GeometryParams:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise MalformedInput("geometry must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "threefold":
        return Threefold(parse_integer(obj.get("d", 1)))
    if kind == "surface":
        return Surface(parse_integer(obj.get("g", 1)))
    raise MalformedInput(f"unknown geometry kind {kind!r}")


def character_to_json(ch: ChernCharacter) -> dict:
    return {
        "geometry": geometry_to_json(ch.geometry),
        "matrix": [[render_rational(x) for x in row] for row in ch.matrix],
    }


def character_from_json(obj: Any, default_geometry: GeometryParams | None = None) -> ChernCharacter:
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise MalformedInput("a Chern character needs a 'matrix'")
    if "geometry" in obj:
        geo = geometry_from_json(obj["geometry"])
    elif default_geometry is not None:
        geo = default_geometry
    else:
        raise MalformedInput("no geometry given")
    rows = obj["matrix"]
    if not isinstance(rows, list) or len(rows) != 2 or not all(isinstance(r, list) for r in rows):
        raise MalformedInput("matrix must be a list of two rows")
    if any(len(r) != geo.ncols for r in rows):
        raise MalformedInput(f"{geo.kind} matrix rows need {geo.ncols} entries")
    return ChernCharacter(geo, tuple(tuple(parse_integer(x) for x in r) for r in rows))


def divisor_from_json(obj: Any) -> DivisorClass:
    if isinstance(obj, list) and len(obj) == 2:
        return DivisorClass(parse_rational(obj[0]), parse_rational(obj[1]))
    if isinstance(obj, dict) and {"alpha", "beta"} <= set(obj):
        return DivisorClass(parse_rational(obj["alpha"]), parse_rational(obj["beta"]))
    raise MalformedInput("a polarisation is [alpha, beta] or {'alpha':..., 'beta':...}")


def kclass_to_json(c: KClass) -> dict:
    return {"C0": c.C0, "C1": render_rational(c.C1)}


def lattice_to_json(L: SubobjectLattice, **extra: Any) -> dict:
    out: dict[str, Any] = {"name": L.name} if L.name else {}
    out["elements"] = [{"id": x, **kclass_to_json(L.label(x))} for x in L.ids]
    out["leq"] = [list(r) for r in L.relations]
    out.update(extra)
    return out


def lattice_from_json(obj: Any) -> SubobjectLattice:
    if not isinstance(obj, dict) or "elements" not in obj or "leq" not in obj:
        raise MalformedInput("a lattice fixture needs 'elements' and 'leq'")
    labels = {}
    for e in obj["elements"]:
        if not isinstance(e, dict) or not {"id", "C0", "C1"} <= set(e):
            raise MalformedInput("each element needs 'id', 'C0' and 'C1'")
        key = str(e["id"])
        if key in labels:
            raise MalformedInput(f"duplicate element id {key!r}")
        labels[key] = KClass(parse_integer(e["C0"]), Fraction(parse_rational(e["C1"])))
    pairs = obj["leq"]
    if not isinstance(pairs, list) or not all(isinstance(p, list) and len(p) == 2 for p in pairs):
        raise MalformedInput("'leq' must be a list of [a, b] pairs")
    return SubobjectLattice(labels, [(str(a), str(b)) for a, b in pairs], str(obj.get("name", "")))


def filtration_to_json(f: HNFiltration) -> dict:
    return {
        "chain": list(f.chain),
        "factors": [kclass_to_json(c) for c in f.factors],
        "slopes": [render_rational(s) for s in f.slopes],
    }


def verdict_to_json(v: Verdict) -> dict:
    return {
        "verdict": v.kind.value,
        "witness": v.witness,
        "index": v.index,
        "threshold": v.threshold,
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def loads(text: str) -> Any:
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc


def _reject_float(s: str):
    raise MalformedInput(f"floating point literal {s} is not allowed; use \"p/q\"")
