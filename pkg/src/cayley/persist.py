"""JSON group documents.

A document stores the element list (integers or nested arrays) and the
table as element indices::

    {"elements": [1, 2, 4, 7], "format_version": 1, "table": [[0, 1, 2, 3], ...]}

Encoding is canonical (sorted keys, fixed separators), so decoding and
re-encoding a document reproduces it byte for byte.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .core import Elem, Group, RawTable, format_elem

FORMAT_VERSION = 1


class MalformedDocumentError(ValueError):
    pass


def _encode_elem(x: Elem):
    if isinstance(x, tuple):
        return [_encode_elem(y) for y in x]
    return x


def _decode_elem(v, where: str) -> Elem:
    if isinstance(v, list):
        return tuple(_decode_elem(y, f"{where}[{i}]") for i, y in enumerate(v))
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise MalformedDocumentError(f"{where}: {v!r} is not a non-negative integer or array")
    return v


def encode(t: Union[RawTable, Group]) -> str:
    if isinstance(t, Group):
        t = t.raw
    pos = {}
    for i, x in enumerate(t.elements):
        pos.setdefault(x, i)
    table = []
    for i, row in enumerate(t.table):
        out = []
        for j, x in enumerate(row):
            if x not in pos:
                raise ValueError(
                    f"table[{i}][{j}] = {format_elem(x)} is not an element; "
                    "documents can only hold closed tables"
                )
            out.append(pos[x])
        table.append(out)
    doc = {
        "elements": [_encode_elem(x) for x in t.elements],
        "format_version": FORMAT_VERSION,
        "table": table,
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def decode(text: str) -> RawTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocumentError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise MalformedDocumentError("top level: expected an object")
    for key in ("elements", "format_version", "table"):
        if key not in doc:
            raise MalformedDocumentError(f"{key}: missing field")
    if doc["format_version"] != FORMAT_VERSION:
        raise MalformedDocumentError(
            f"format_version: unsupported version {doc['format_version']!r}"
        )
    raw_elems = doc["elements"]
    if not isinstance(raw_elems, list):
        raise MalformedDocumentError("elements: expected an array")
    elements = [_decode_elem(v, f"elements[{i}]") for i, v in enumerate(raw_elems)]
    rows = doc["table"]
    if not isinstance(rows, list):
        raise MalformedDocumentError("table: expected an array")
    n = len(elements)
    table = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise MalformedDocumentError(f"table[{i}]: expected an array")
        out = []
        for j, k in enumerate(row):
            if isinstance(k, bool) or not isinstance(k, int):
                raise MalformedDocumentError(f"table[{i}][{j}]: {k!r} is not an index")
            if not 0 <= k < n:
                raise MalformedDocumentError(f"table[{i}][{j}]: index {k} out of range 0..{n - 1}")
            out.append(elements[k])
        table.append(out)
    return RawTable(elements, table)


def save_group(t: Union[RawTable, Group], path) -> None:
    Path(path).write_text(encode(t), encoding="utf-8")


def load_group(path) -> RawTable:
    return decode(Path(path).read_text(encoding="utf-8"))
