"""JSON form of every representation. Scalars are exact strings such as "1/2-3i"."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import MalformedSpec
from .kernel import KernelTerm, canonicalize
from .representations import (
    CircleSymbol,
    CircleTerm,
    GeometricTerm,
    LineSymbol,
    LineTerm,
    Representation,
    SequenceRep,
    kind_of,
)
from .scalars import ComplexScalar, Polynomial
from .sign import SignMatrix


def scalar_to_json(x: ComplexScalar) -> str:
    return str(x)


def poly_to_json(p: Polynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def _scalar(value, where: str) -> ComplexScalar:
    if isinstance(value, bool) or isinstance(value, float):
        raise MalformedSpec(f"{where}: use an integer or a rational string, not {value!r}")
    try:
        return ComplexScalar.coerce(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise MalformedSpec(f"{where}: {exc}") from None


def _poly(value, where: str) -> Polynomial:
    if not isinstance(value, list):
        raise MalformedSpec(f"{where}: expected a list of coefficients")
    return Polynomial(_scalar(c, f"{where}[{i}]") for i, c in enumerate(value))


def _field(obj: dict, key: str, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise MalformedSpec(f"{where}: missing field {key!r}")
    return obj[key]


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedSpec(f"{where}: expected an integer")
    return value


def _list(value, where: str) -> list:
    if not isinstance(value, list):
        raise MalformedSpec(f"{where}: expected a list")
    return value


def to_json(x: Representation) -> dict[str, Any]:
    kind = kind_of(x)
    if kind == "kernel":
        return {"type": "kernel",
                "terms": [{"alpha": str(t.alpha), "poly": poly_to_json(t.poly)} for t in x.all_terms()]}
    if kind == "line":
        return {"type": "line",
                "terms": [{"alpha": str(t.alpha), "Q": poly_to_json(t.Q), "K": t.K} for t in x.terms]}
    if kind == "circle":
        return {"type": "circle", "polynomial_part": poly_to_json(x.polynomial_part),
                "poles": [{"gamma": str(t.gamma), "R": poly_to_json(t.R), "K": t.K} for t in x.pole_terms]}
    return {"type": "sequence", "tau": [str(c) for c in x.tau],
            "geometric": [{"q": str(g.q), "T": poly_to_json(g.T)} for g in x.geometric_terms]}


def from_json(obj: Any, kind: str | None = None) -> Representation:
    """Parse a JSON object; `kind` overrides or must agree with its "type" field."""
    if not isinstance(obj, dict):
        raise MalformedSpec("input must be a JSON object")
    declared = obj.get("type")
    if kind is None:
        kind = declared
    elif declared is not None and declared != kind:
        raise MalformedSpec(f"input declares type {declared!r} but {kind!r} was requested")
    if kind == "kernel":
        terms = []
        for i, t in enumerate(_list(_field(obj, "terms", "kernel"), "terms")):
            w = f"terms[{i}]"
            terms.append(KernelTerm(_scalar(_field(t, "alpha", w), w + ".alpha"), _poly(_field(t, "poly", w), w + ".poly")))
        return canonicalize(terms)
    if kind == "line":
        terms = []
        for i, t in enumerate(_list(_field(obj, "terms", "line"), "terms")):
            w = f"terms[{i}]"
            terms.append(LineTerm(_scalar(_field(t, "alpha", w), w + ".alpha"), _poly(_field(t, "Q", w), w + ".Q"),
                                  _int(_field(t, "K", w), w + ".K")))
        return LineSymbol(tuple(terms))
    if kind == "circle":
        poles = []
        for i, t in enumerate(_list(obj.get("poles", []), "poles")):
            w = f"poles[{i}]"
            poles.append(CircleTerm(_scalar(_field(t, "gamma", w), w + ".gamma"), _poly(_field(t, "R", w), w + ".R"),
                                    _int(_field(t, "K", w), w + ".K")))
        return CircleSymbol(_poly(obj.get("polynomial_part", []), "polynomial_part"), tuple(poles))
    if kind == "sequence":
        geo = []
        for i, g in enumerate(_list(obj.get("geometric", []), "geometric")):
            w = f"geometric[{i}]"
            geo.append(GeometricTerm(_scalar(_field(g, "q", w), w + ".q"), _poly(_field(g, "T", w), w + ".T")))
        tau = [_scalar(c, f"tau[{i}]") for i, c in enumerate(_list(obj.get("tau", []), "tau"))]
        return SequenceRep(tuple(tau), tuple(geo))
    raise MalformedSpec(f"unknown representation type {kind!r}")


def load(path: str | Path, kind: str | None = None) -> Representation:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MalformedSpec(f"cannot read {path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedSpec(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return from_json(obj, kind)


def sign_matrix_to_json(S: SignMatrix) -> list[dict]:
    return [
        {"kind": b.kind, "alpha": str(b.alpha), "entries": [[str(x) for x in row] for row in b.entries]}
        for b in S.blocks
    ]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)


__all__ = ["dumps", "from_json", "load", "poly_to_json", "sign_matrix_to_json", "to_json"]
