"""Canonical JSON documents for layouts."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

import jsonschema
import numpy as np

from linlay.layout import KINDS, VARIANTS, Layout, LayoutError, Part

SCHEMA_VERSION = 1

LAYOUT_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "n", "kind", "variant", "parts"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "n": {"type": "integer", "minimum": 0},
        "kind": {"enum": sorted(KINDS)},
        "variant": {"enum": sorted(VARIANTS)},
        "parts": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "edges"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "integer"},
                    "edges": {
                        "type": "array",
                        "items": {
                            "type": "array",
                            "items": {"type": "integer"},
                            "minItems": 2,
                            "maxItems": 2,
                        },
                    },
                },
            },
        },
        "metadata": {
            "type": "object",
            "properties": {
                "construction": {"type": "string"},
                "parameters": {"type": "object"},
                "bound_budget": {"type": ["number", "null"]},
            },
        },
    },
}


class DocumentError(LayoutError):
    """A layout document that cannot be loaded; ``code`` tells which check failed."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(obj[k]) for k in sorted(obj, key=str)}
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    return obj


def layout_to_document(layout: Layout) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "n": int(layout.n),
        "kind": layout.kind,
        "variant": layout.variant,
        "parts": [
            {"id": int(p.id), "edges": p.edges.tolist()} for p in sorted(layout.parts, key=lambda p: p.id)
        ],
    }
    if layout.metadata:
        doc["metadata"] = _plain(layout.metadata)
    return doc


def serialize_layout(layout: Layout) -> str:
    """Byte-stable JSON: fixed key order, parts by id, edges sorted."""
    return json.dumps(layout_to_document(layout), separators=(",", ":"), allow_nan=False) + "\n"


def document_to_layout(doc: dict) -> Layout:
    try:
        jsonschema.validate(doc, LAYOUT_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "document"
        raise DocumentError("schema", f"schema violation at {where}: {exc.message}") from None
    n = doc["n"]
    ids = [p["id"] for p in doc["parts"]]
    if len(set(ids)) != len(ids):
        raise DocumentError("schema", "schema violation: part ids are not unique")
    seen: dict[tuple[int, int], int] = {}
    parts = []
    for p in doc["parts"]:
        for a, b in p["edges"]:
            if not (1 <= a <= n and 1 <= b <= n):
                raise DocumentError("range", f"index out of range: edge [{a},{b}] in part {p['id']} (n={n})")
            if a >= b:
                raise DocumentError("schema", f"schema violation: edge [{a},{b}] is not normalized a < b")
            if (a, b) in seen:
                raise DocumentError(
                    "duplicate", f"edge covered twice: [{a},{b}] in parts {seen[(a, b)]} and {p['id']}"
                )
            seen[(a, b)] = p["id"]
        parts.append(Part(p["id"], p["edges"]))
    return Layout(n, parts, doc["kind"], doc["variant"], doc.get("metadata", {}))


def parse_layout(text: str) -> Layout:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("schema", f"schema violation: not JSON ({exc.msg})") from None
    return document_to_layout(doc)


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent or ".")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_layout(path: str | os.PathLike) -> Layout:
    return parse_layout(Path(path).read_text(encoding="utf-8"))
