"""JSON documents for matrices, summand pairs and block quadruples.

A matrix document looks like::

    {"rows": 2, "cols": 2, "entries": [["1/2", "-i"], [0, "3+2/5i"]]}

Entries are scalar literals (or plain JSON integers).  A pair document
holds two matrix documents under ``P``/``Q`` (or ``E``/``F``); a block
document holds ``A``, ``B``, ``C`` and ``D``.
"""
from __future__ import annotations

import json
from pathlib import Path

from .block import BlockInstance
from .errors import ShapeError
from .matrix import Matrix
from .scalar import parse_scalar, to_scalar

__all__ = [
    "matrix_to_doc",
    "matrix_from_doc",
    "read_document",
    "read_matrix",
    "read_pair",
    "read_blocks",
    "pair_to_doc",
    "blocks_to_doc",
    "dumps",
]


class FormatError(ValueError):
    """A document does not follow the matrix file format."""


def matrix_to_doc(x: Matrix) -> dict:
    return {"rows": x.rows, "cols": x.cols, "entries": x.to_strings()}


def _entry(value):
    if isinstance(value, bool):
        raise FormatError(f"boolean is not a scalar: {value!r}")
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, int):
        return to_scalar(value)
    raise FormatError(f"scalar entries must be literals or integers, got {value!r}")


def matrix_from_doc(doc) -> Matrix:
    if not isinstance(doc, dict) or not {"rows", "cols", "entries"} <= doc.keys():
        raise FormatError("matrix document needs 'rows', 'cols' and 'entries'")
    rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
        raise FormatError("'rows' and 'cols' must be nonnegative integers")
    if not isinstance(entries, list) or len(entries) != rows:
        raise ShapeError(f"'entries' has {len(entries) if isinstance(entries, list) else '?'} rows, expected {rows}")
    flat = []
    for row in entries:
        if not isinstance(row, list) or len(row) != cols:
            raise ShapeError(f"every row of 'entries' must have {cols} values")
        flat.extend(_entry(v) for v in row)
    return Matrix.from_scalars(rows, cols, flat)


def read_document(path) -> dict:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise FormatError(f"{path}: top level must be an object")
    return doc


def read_matrix(path) -> Matrix:
    return matrix_from_doc(read_document(path))


def pair_from_doc(doc: dict) -> tuple[Matrix, Matrix]:
    for first, second in (("P", "Q"), ("E", "F")):
        if first in doc and second in doc:
            return matrix_from_doc(doc[first]), matrix_from_doc(doc[second])
    raise FormatError("pair document needs keys P and Q (or E and F)")


def read_pair(path) -> tuple[Matrix, Matrix]:
    return pair_from_doc(read_document(path))


def blocks_from_doc(doc: dict) -> BlockInstance:
    missing = [k for k in "ABCD" if k not in doc]
    if missing:
        raise FormatError(f"block document is missing {', '.join(missing)}")
    return BlockInstance(*(matrix_from_doc(doc[k]) for k in "ABCD"))


def read_blocks(path) -> BlockInstance:
    return blocks_from_doc(read_document(path))


def pair_to_doc(p: Matrix, q: Matrix, names=("P", "Q")) -> dict:
    return {names[0]: matrix_to_doc(p), names[1]: matrix_to_doc(q)}


def blocks_to_doc(inst: BlockInstance) -> dict:
    return {"A": matrix_to_doc(inst.a), "B": matrix_to_doc(inst.b),
            "C": matrix_to_doc(inst.c), "D": matrix_to_doc(inst.d)}


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
