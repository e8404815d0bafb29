"""JSON encodings shared by the library types and the command line tool.

Complex numbers are two-element arrays ``[re, im]``, vectors are lists of
those, and matrices are row-major nested lists.  The encoding is fixed so
files round-trip bit-identically and diff cleanly.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "complex_to_json",
    "complex_from_json",
    "vector_to_json",
    "vector_from_json",
    "matrix_to_json",
    "matrix_from_json",
]


def complex_to_json(z) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def complex_from_json(obj, name: str = "complex") -> complex:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise ValueError(f"{name} must be a [re, im] pair, got {obj!r}")
    return complex(float(obj[0]), float(obj[1]))


def vector_to_json(v) -> list[list[float]]:
    return [complex_to_json(z) for z in np.asarray(v).ravel()]


def vector_from_json(obj, name: str = "vector") -> np.ndarray:
    if not isinstance(obj, list):
        raise ValueError(f"{name} must be a list of [re, im] pairs")
    return np.array(
        [complex_from_json(entry, name) for entry in obj], dtype=np.complex128
    )


def matrix_to_json(M) -> list[list[list[float]]]:
    return [[complex_to_json(z) for z in row] for row in np.asarray(M)]


def matrix_from_json(obj, name: str = "matrix") -> np.ndarray:
    if not isinstance(obj, list) or not obj:
        raise ValueError(f"{name} must be a non-empty nested list")
    rows = [vector_from_json(row, name) for row in obj]
    if any(r.size != len(rows) for r in rows):
        raise ValueError(f"{name} must be square, row-major")
    return np.array(rows, dtype=np.complex128)
