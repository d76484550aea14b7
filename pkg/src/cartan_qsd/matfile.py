"""JSON matrix files: ``{"dim": d, "entries": [[[re, im], ...], ...]}``."""

from __future__ import annotations

import json
from numbers import Real

import numpy as np


class MatrixFormatError(ValueError):
    """The document does not describe a finite square complex matrix."""


def _reject_constant(name: str):
    raise MatrixFormatError(f"non-finite number {name} in matrix file")


def _number(x, where: str) -> float:
    if isinstance(x, bool) or not isinstance(x, Real):
        raise MatrixFormatError(f"{where}: expected a number, got {x!r}")
    v = float(x)
    if not np.isfinite(v):
        raise MatrixFormatError(f"{where}: non-finite value")
    return v


def loads_matrix(text: str) -> np.ndarray:
    """Parse a matrix document.

    Raises:
        MatrixFormatError: on malformed JSON, a wrong shape, or NaN/Inf.
    """
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "dim" not in doc or "entries" not in doc:
        raise MatrixFormatError("document needs 'dim' and 'entries' fields")
    dim, rows = doc["dim"], doc["entries"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise MatrixFormatError(f"dim must be a positive integer, got {dim!r}")
    if not isinstance(rows, list) or len(rows) != dim:
        raise MatrixFormatError(f"expected {dim} rows")
    out = np.empty((dim, dim), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise MatrixFormatError(f"row {i} does not have {dim} entries")
        for j, pair in enumerate(row):
            if not isinstance(pair, list) or len(pair) != 2:
                raise MatrixFormatError(f"entry ({i},{j}) is not a [re, im] pair")
            out[i, j] = complex(_number(pair[0], f"entry ({i},{j})"), _number(pair[1], f"entry ({i},{j})"))
    return out


def dumps_matrix(m) -> str:
    """Serialize with shortest round-trip float text, one row per line."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains NaN or Inf entries")
    rows = [json.dumps([[float(z.real), float(z.imag)] for z in row]) for row in a]
    return '{"dim": %d, "entries": [\n  %s\n]}\n' % (a.shape[0], ",\n  ".join(rows))


def load_matrix(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        return loads_matrix(fh.read())


def save_matrix(path, m) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_matrix(m))
