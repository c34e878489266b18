"""Quiver input documents.

A document is a JSON object::

    {"vertices": 2, "arrows": [[1, 2], [1, 2], [1, 2]], "d": [3, 4],
     "theta": [12, -9], "linearisation": [3, -2]}

``theta`` defaults to the canonical stability and ``linearisation`` to
:func:`quiversod.core.default_linearisation`.  Unknown fields are errors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .core import Moduli, Quiver, QuiverError, Vector, default_linearisation

FIELDS = ("vertices", "arrows", "d", "theta", "linearisation")
REQUIRED = ("vertices", "arrows", "d")


class InputError(QuiverError):
    pass


@dataclass(frozen=True)
class Problem:
    quiver: Quiver
    d: Vector
    theta: Vector | None = None
    linearisation: Vector | None = None

    @property
    def moduli(self) -> Moduli:
        return Moduli(self.quiver, self.d, self.theta)

    def linearisation_or_default(self) -> Vector:
        return self.linearisation if self.linearisation is not None else default_linearisation(self.d)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {
            "vertices": self.quiver.vertex_count,
            "arrows": [list(a) for a in self.quiver.arrows],
            "d": list(self.d),
        }
        if self.theta is not None:
            out["theta"] = list(self.theta)
        if self.linearisation is not None:
            out["linearisation"] = list(self.linearisation)
        return out


def _int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"field '{name}' must be an integer, got {value!r}")
    return value


def _int_list(value, name: str, length: int | None = None) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise InputError(f"field '{name}' must be an array of integers")
    out = tuple(_int(v, name) for v in value)
    if length is not None and len(out) != length:
        raise InputError(f"field '{name}' must have {length} entries, got {len(out)}")
    return out


def parse_problem(doc: Mapping) -> Problem:
    if not isinstance(doc, Mapping):
        raise InputError("input document must be a JSON object")
    unknown = sorted(set(doc) - set(FIELDS))
    if unknown:
        raise InputError(f"unknown field(s): {', '.join(repr(u) for u in unknown)}")
    for name in REQUIRED:
        if name not in doc:
            raise InputError(f"missing required field '{name}'")
    n = _int(doc["vertices"], "vertices")
    if n < 1:
        raise InputError("field 'vertices' must be positive")
    arrows_raw = doc["arrows"]
    if not isinstance(arrows_raw, list):
        raise InputError("field 'arrows' must be an array of [source, target] pairs")
    arrows = []
    for a in arrows_raw:
        pair = _int_list(a, "arrows", 2)
        if not all(1 <= v <= n for v in pair):
            raise InputError(f"field 'arrows': vertex out of range in {list(pair)}")
        arrows.append(pair)
    d = _int_list(doc["d"], "d", n)
    theta = _int_list(doc["theta"], "theta", n) if doc.get("theta") is not None else None
    lin = _int_list(doc["linearisation"], "linearisation", n) if doc.get("linearisation") is not None else None
    try:
        quiver = Quiver(n, tuple(arrows))
    except QuiverError as exc:
        raise InputError(f"field 'arrows': {exc}") from exc
    return Problem(quiver, d, theta, lin)


def load_problem(path: str | Path) -> Problem:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read input file {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"input file {path} is not valid JSON: {exc}") from exc
    return parse_problem(doc)


def parse_int_list(text: str, name: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise InputError(f"option --{name} expects comma-separated integers, got {text!r}") from exc
