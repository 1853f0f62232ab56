"""Canonical structured-text serialization.

Every domain and analysis type serializes to a JSON record tagged with a
``"type"`` field. The writer is canonical: field order is fixed by the
encoder, floats are written with 17 significant digits (``%.17g``, always
with a decimal point or exponent so float-ness survives the round trip), and
no whitespace varies. Two equal values therefore always produce byte-equal
text, and ``deserialize(serialize(v)) == v`` exactly.

Type modules register their codecs at import time via :func:`register`.
"""

from __future__ import annotations

import json
from typing import Any, Callable

import numpy as np

_ENCODERS: dict[type, tuple[str, Callable[[Any], dict]]] = {}
_DECODERS: dict[str, Callable[[dict], Any]] = {}


def register(tag: str, cls: type, encode: Callable[[Any], dict],
             decode: Callable[[dict], Any]) -> None:
    """Register a codec for ``cls`` under the record tag ``tag``."""
    _ENCODERS[cls] = (tag, encode)
    _DECODERS[tag] = decode


def to_record(value: Any) -> dict:
    """Encode a registered value as a tagged, JSON-compatible dict."""
    try:
        tag, encode = _ENCODERS[type(value)]
    except KeyError:
        raise TypeError(f"no codec registered for {type(value).__name__}") from None
    record = {"type": tag}
    record.update(encode(value))
    return record


def from_record(record: dict) -> Any:
    """Decode a tagged dict produced by :func:`to_record`."""
    if not isinstance(record, dict) or "type" not in record:
        raise ValueError("record must be a dict with a 'type' tag")
    tag = record["type"]
    try:
        decode = _DECODERS[tag]
    except KeyError:
        raise ValueError(f"unknown record type {tag!r}") from None
    return decode(record)


def encode_value(value: Any) -> Any:
    """Tagged record for registered types; lists recurse; primitives pass."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    return to_record(value)


def decode_value(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, list):
        return [decode_value(v) for v in obj]
    return from_record(obj)


def serialize(value: Any) -> str:
    """Canonical text for any registered core/analysis value (or list of)."""
    return canonical_json(encode_value(value))


def deserialize(text: str) -> Any:
    return decode_value(json.loads(text))


def format_float(x: float) -> str:
    """17-significant-digit decimal that parses back to the exact same double."""
    x = float(x)
    if not np.isfinite(x):
        raise ValueError("non-finite values are not serializable")
    out = format(x, ".17g")
    if "." not in out and "e" not in out and "E" not in out:
        out += ".0"
    return out


def canonical_json(obj: Any) -> str:
    """Deterministic JSON text: fixed field order, canonical float format."""
    parts: list[str] = []
    _write(obj, parts)
    return "".join(parts)


def _write(obj: Any, parts: list[str]) -> None:
    if obj is None or obj is True or obj is False:
        parts.append("null" if obj is None else ("true" if obj else "false"))
    elif isinstance(obj, str):
        parts.append(json.dumps(obj, ensure_ascii=False))
    elif isinstance(obj, (int, np.integer)) and not isinstance(obj, bool):
        parts.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        parts.append(format_float(float(obj)))
    elif isinstance(obj, dict):
        parts.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if not isinstance(key, str):
                raise TypeError("record keys must be strings")
            if i:
                parts.append(",")
            parts.append(json.dumps(key, ensure_ascii=False))
            parts.append(":")
            _write(value, parts)
        parts.append("}")
    elif isinstance(obj, (list, tuple)):
        parts.append("[")
        for i, value in enumerate(obj):
            if i:
                parts.append(",")
            _write(value, parts)
        parts.append("]")
    else:
        raise TypeError(f"cannot serialize value of type {type(obj).__name__}")


# -- array <-> record helpers ------------------------------------------------

def encode_vector(a: np.ndarray) -> list:
    return [float(v) for v in np.asarray(a, dtype=np.float64).ravel()]


def decode_vector(data, *, name: str = "vector") -> np.ndarray:
    arr = np.asarray([float(v) for v in data], dtype=np.float64)
    return arr


def encode_int_vector(a: np.ndarray) -> list:
    return [int(v) for v in np.asarray(a).ravel()]


def encode_matrix(a: np.ndarray) -> dict:
    a = np.asarray(a, dtype=np.float64)
    return {
        "rows": int(a.shape[0]),
        "cols": int(a.shape[1]),
        "data": [float(v) for v in a.ravel()],
    }


def decode_matrix(record: dict, *, name: str = "matrix") -> np.ndarray:
    rows, cols = int(record["rows"]), int(record["cols"])
    data = [float(v) for v in record["data"]]
    if rows < 0 or cols < 0 or rows * cols != len(data):
        raise ValueError(f"{name}: rows*cols != data length")
    return np.asarray(data, dtype=np.float64).reshape(rows, cols)
