"""Bit-exact text interchange format for weight systems.

Documents are JSON with a fixed key order and explicit schema version:

    {
      "schema_version": "1",
      "obstruction": [b1, b2],
      "orientation": 1,
      "genus": 0,
      "circle_boundaries": [[p, q], ...],
      "fixed_cycles": [[{"pair": [a, b], "f": f}, ...], ...],
      "exceptional": [{"alpha": a, "gamma1": g1, "gamma2": g2}, ...]
    }

All integers are decimal with no width limit.  Parsing keeps sign
representatives and component order verbatim, so parse(serialize(W)) equals
W field by field and serialize(parse(text)) reproduces the canonical layout
byte for byte.  Structural problems raise :class:`DocumentError`; legality
is a separate question answered by :func:`t2orbits.core.validate`.
"""

from __future__ import annotations

import json

from .core import ExceptionalOrbit, FixedCycle, IsotropyPair, WeightSystem
from .errors import DocumentError

SCHEMA_VERSION = "1"

_TOP_KEYS = ("schema_version", "obstruction", "orientation", "genus",
             "circle_boundaries", "fixed_cycles", "exceptional")


def to_document(system: WeightSystem) -> dict:
    """The document dictionary for a weight system, with fixed key order."""
    return {
        "schema_version": SCHEMA_VERSION,
        "obstruction": list(system.obstruction),
        "orientation": system.orientation,
        "genus": system.genus,
        "circle_boundaries": [[p.m, p.n] for p in system.circle_boundaries],
        "fixed_cycles": [
            [{"pair": [p.m, p.n], "f": f} for p, f in cycle.entries()]
            for cycle in system.fixed_cycles
        ],
        "exceptional": [
            {"alpha": e.alpha, "gamma1": e.gamma1, "gamma2": e.gamma2}
            for e in system.exceptional
        ],
    }


def _inline(value) -> str:
    return json.dumps(value, separators=(", ", ": "))


def serialize(system: WeightSystem) -> str:
    """Multi-line canonical serialization, trailing newline included.

    The layout is fixed (one line per cycle entry and per Seifert triple,
    pairs inline), so serializing a parsed document reproduces it byte for
    byte; the output is ordinary JSON either way.
    """
    doc = to_document(system)
    out = ["{"]
    out.append(f'  "schema_version": {_inline(doc["schema_version"])},')
    out.append(f'  "obstruction": {_inline(doc["obstruction"])},')
    out.append(f'  "orientation": {doc["orientation"]},')
    out.append(f'  "genus": {doc["genus"]},')
    out.append(f'  "circle_boundaries": {_inline(doc["circle_boundaries"])},')
    if doc["fixed_cycles"]:
        out.append('  "fixed_cycles": [')
        for l, cycle in enumerate(doc["fixed_cycles"]):
            out.append("    [")
            for w, entry in enumerate(cycle):
                comma = "," if w + 1 < len(cycle) else ""
                out.append(f"      {_inline(entry)}{comma}")
            out.append("    ]" + ("," if l + 1 < len(doc["fixed_cycles"]) else ""))
        out.append("  ],")
    else:
        out.append('  "fixed_cycles": [],')
    if doc["exceptional"]:
        out.append('  "exceptional": [')
        for j, entry in enumerate(doc["exceptional"]):
            comma = "," if j + 1 < len(doc["exceptional"]) else ""
            out.append(f"    {_inline(entry)}{comma}")
        out.append("  ]")
    else:
        out.append('  "exceptional": []')
    out.append("}")
    return "\n".join(out) + "\n"


def serialize_compact(system: WeightSystem) -> str:
    """Single-line serialization used for streaming enumeration output."""
    return json.dumps(to_document(system), separators=(",", ":"))


def _need(doc: dict, key: str):
    if key not in doc:
        raise DocumentError(f"missing key '{key}'")
    return doc[key]


def _as_int(value, where: str) -> int:
    # bool is an int subclass; a document saying "true" is malformed.
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where} must be an integer, got {value!r}")
    return value


def _as_int_pair(value, where: str) -> tuple:
    if not isinstance(value, list) or len(value) != 2:
        raise DocumentError(f"{where} must be a pair of integers, got {value!r}")
    return (_as_int(value[0], where), _as_int(value[1], where))


def from_document(doc) -> WeightSystem:
    """Build the weight system a document describes, verbatim.

    Raises :class:`DocumentError` on any structural problem: wrong types,
    missing or unknown keys, unsupported schema version, empty cycles.
    """
    if not isinstance(doc, dict):
        raise DocumentError(f"document must be an object, got {type(doc).__name__}")
    unknown = set(doc) - set(_TOP_KEYS)
    if unknown:
        raise DocumentError(f"unknown keys {sorted(unknown)}")
    version = _need(doc, "schema_version")
    if version != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {version!r}")

    obstruction = _as_int_pair(_need(doc, "obstruction"), "obstruction")
    orientation = _as_int(_need(doc, "orientation"), "orientation")
    genus = _as_int(_need(doc, "genus"), "genus")

    raw_circles = _need(doc, "circle_boundaries")
    if not isinstance(raw_circles, list):
        raise DocumentError("circle_boundaries must be a list")
    circles = tuple(IsotropyPair(*_as_int_pair(p, f"circle_boundaries[{i}]"))
                    for i, p in enumerate(raw_circles))

    raw_cycles = _need(doc, "fixed_cycles")
    if not isinstance(raw_cycles, list):
        raise DocumentError("fixed_cycles must be a list")
    cycles = []
    for l, raw in enumerate(raw_cycles):
        where = f"fixed_cycles[{l}]"
        if not isinstance(raw, list) or not raw:
            raise DocumentError(f"{where} must be a non-empty list of entries")
        pairs = []
        dets = []
        for w, entry in enumerate(raw):
            spot = f"{where}[{w}]"
            if not isinstance(entry, dict) or set(entry) != {"pair", "f"}:
                raise DocumentError(f"{spot} must be an object with keys pair, f")
            pairs.append(IsotropyPair(*_as_int_pair(entry["pair"], f"{spot}.pair")))
            dets.append(_as_int(entry["f"], f"{spot}.f"))
        cycles.append(FixedCycle(tuple(pairs), tuple(dets)))

    raw_exc = _need(doc, "exceptional")
    if not isinstance(raw_exc, list):
        raise DocumentError("exceptional must be a list")
    exceptional = []
    for j, entry in enumerate(raw_exc):
        where = f"exceptional[{j}]"
        if not isinstance(entry, dict) or set(entry) != {"alpha", "gamma1", "gamma2"}:
            raise DocumentError(
                f"{where} must be an object with keys alpha, gamma1, gamma2")
        exceptional.append(ExceptionalOrbit(
            _as_int(entry["alpha"], f"{where}.alpha"),
            _as_int(entry["gamma1"], f"{where}.gamma1"),
            _as_int(entry["gamma2"], f"{where}.gamma2"),
        ))

    return WeightSystem(
        obstruction=obstruction,
        orientation=orientation,
        genus=genus,
        circle_boundaries=circles,
        fixed_cycles=tuple(cycles),
        exceptional=tuple(exceptional),
    )


def parse(text: str) -> WeightSystem:
    """Parse a serialized document; :class:`DocumentError` on bad input."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"not valid JSON: {err}") from None
    return from_document(doc)
