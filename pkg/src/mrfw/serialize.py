"""JSON interchange documents for rings, character tables, and S-matrix data.

Every document is an envelope {"schema", "kind", "payload"} with kind one
of "ring", "chartable", "premodular", or "report".  Exact scalars are
serialized structurally: rationals as integers or "p/q" strings, quadratic
values as {"p", "q", "D"}, cyclotomic values as {"order", "coeffs"}.
Decimal strings never appear.  Canonical form is sorted-key, two-space
indented UTF-8 with a trailing newline; load then save is the identity on
canonical files.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .chartab import CharacterTable
from .ring import FusionRing
from .scalars import CycNumber, QuadExt

SCHEMA_VERSION = 1
KINDS = ("ring", "chartable", "premodular", "report")


class DocumentError(ValueError):
    """Raised when a document fails schema validation."""


# ---------------------------------------------------------------------------
# scalars


def fraction_to_json(x: Fraction) -> int | str:
    x = Fraction(x)
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


def fraction_from_json(v: Any) -> Fraction:
    if isinstance(v, bool):
        raise DocumentError(f"not a rational: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        num, sep, den = v.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"not a rational: {v!r}") from exc
    raise DocumentError(f"not a rational: {v!r}")


def scalar_to_json(x: Any) -> Any:
    if isinstance(x, QuadExt):
        if x.is_rational:
            return fraction_to_json(x.as_fraction())
        return {
            "p": fraction_to_json(x.p),
            "q": fraction_to_json(x.q),
            "D": x.D,
        }
    if isinstance(x, CycNumber):
        if x.is_rational:
            return fraction_to_json(x.as_fraction())
        return {
            "order": x.order,
            "coeffs": [fraction_to_json(c) for c in x.coeffs],
        }
    if isinstance(x, (int, Fraction)):
        return fraction_to_json(Fraction(x))
    raise DocumentError(f"unsupported scalar type: {type(x).__name__}")


def scalar_from_json(v: Any) -> Fraction | QuadExt | CycNumber:
    if isinstance(v, dict):
        keys = set(v)
        if keys == {"p", "q", "D"}:
            return QuadExt(
                fraction_from_json(v["p"]),
                fraction_from_json(v["q"]),
                int(v["D"]),
            )
        if keys == {"order", "coeffs"}:
            return CycNumber(
                int(v["order"]),
                [fraction_from_json(c) for c in v["coeffs"]],
            )
        raise DocumentError(f"unknown scalar object keys: {sorted(keys)}")
    return fraction_from_json(v)


# ---------------------------------------------------------------------------
# envelopes


def _envelope(kind: str, payload: dict) -> dict:
    return {"schema": SCHEMA_VERSION, "kind": kind, "payload": payload}


def _require_keys(obj: dict, required: set[str], optional: set[str], where: str):
    if not isinstance(obj, dict):
        raise DocumentError(f"{where} must be an object")
    keys = set(obj)
    missing = required - keys
    unknown = keys - required - optional
    if missing:
        raise DocumentError(f"{where} missing fields: {sorted(missing)}")
    if unknown:
        raise DocumentError(f"{where} has unknown fields: {sorted(unknown)}")


def ring_to_doc(ring: FusionRing) -> dict:
    return _envelope(
        "ring",
        {
            "labels": list(ring.labels),
            "N": [[[int(x) for x in row] for row in plane] for plane in ring.N],
        },
    )


def ring_from_payload(payload: dict) -> FusionRing:
    _require_keys(payload, {"labels", "N"}, set(), "ring payload")
    labels = payload["labels"]
    N = payload["N"]
    n = len(labels)
    if (
        len(N) != n
        or any(len(plane) != n for plane in N)
        or any(len(row) != n for plane in N for row in plane)
    ):
        raise DocumentError("structure constant tensor is not rank x rank x rank")
    for plane in N:
        for row in plane:
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                    raise DocumentError(
                        f"structure constant {x!r} is not a nonnegative integer"
                    )
    return FusionRing([str(s) for s in labels], N)


def table_to_doc(t: CharacterTable) -> dict:
    payload: dict[str, Any] = {
        "order": t.order,
        "class_sizes": list(t.class_sizes),
        "characters": [[scalar_to_json(v) for v in row] for row in t.characters],
    }
    if t.name:
        payload["name"] = t.name
    if t.inverse_perm is not None:
        payload["inverse_perm"] = list(t.inverse_perm)
    return _envelope("chartable", payload)


def table_from_payload(payload: dict) -> CharacterTable:
    _require_keys(
        payload,
        {"order", "class_sizes", "characters"},
        {"name", "inverse_perm"},
        "chartable payload",
    )
    rows = []
    for row in payload["characters"]:
        vals = []
        for v in row:
            s = scalar_from_json(v)
            if isinstance(s, QuadExt):
                raise DocumentError(
                    "character values must be rational or cyclotomic"
                )
            vals.append(s)
        rows.append(vals)
    return CharacterTable(
        int(payload["order"]),
        [int(s) for s in payload["class_sizes"]],
        rows,
        name=str(payload.get("name", "")),
        inverse_perm=payload.get("inverse_perm"),
    )


def premodular_to_doc(ring: FusionRing, dims, twists) -> dict:
    return _envelope(
        "premodular",
        {
            "ring": ring_to_doc(ring)["payload"],
            "dims": [scalar_to_json(d) for d in dims],
            "twists": [scalar_to_json(t) for t in twists],
        },
    )


def premodular_from_payload(payload: dict) -> tuple[FusionRing, list, list]:
    _require_keys(payload, {"ring", "dims", "twists"}, set(), "premodular payload")
    ring = ring_from_payload(payload["ring"])
    dims = [scalar_from_json(v) for v in payload["dims"]]
    twists = [scalar_from_json(v) for v in payload["twists"]]
    return ring, dims, twists


def report_doc(payload: dict) -> dict:
    return _envelope("report", payload)


# ---------------------------------------------------------------------------
# load / save


def parse_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    _require_keys(doc, {"schema", "kind", "payload"}, set(), "document")
    if doc["schema"] != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema version: {doc['schema']!r}")
    if doc["kind"] not in KINDS:
        raise DocumentError(f"unknown document kind: {doc['kind']!r}")
    # payloads of structured kinds are validated eagerly
    if doc["kind"] == "ring":
        ring_from_payload(doc["payload"])
    elif doc["kind"] == "chartable":
        table_from_payload(doc["payload"])
    elif doc["kind"] == "premodular":
        premodular_from_payload(doc["payload"])
    return doc


def load_document(path: str | Path) -> dict:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def canonical_dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def save_document(doc: dict, path: str | Path) -> None:
    Path(path).write_text(canonical_dumps(doc), encoding="utf-8")
