"""Multi-index utilities and multivariate polynomials over C^d.

Multi-indices are tuples of non-negative integers.  The canonical basis
order everywhere in the package is graded lexicographic: ascending total
degree, lexicographic within each degree.  ``MPoly`` stores finitely many
monomial coefficients and supports the arithmetic the generator module
needs (sum, product, partial derivatives).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import jsonio
from .linalg import as_scalar, as_vector

__all__ = [
    "monomials_of_degree",
    "multi_indices",
    "mi_factorial",
    "MPoly",
]


def monomials_of_degree(d: int, k: int):
    """Yield multi-indices of length ``d`` summing to ``k``, lex ascending."""
    if d == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in monomials_of_degree(d - 1, k - first):
            yield (first,) + rest


def multi_indices(d: int, max_degree: int) -> list[tuple[int, ...]]:
    """All multi-indices with |alpha| <= max_degree in graded-lex order."""
    if d < 1 or max_degree < 0:
        raise ValueError("need d >= 1 and max_degree >= 0")
    out: list[tuple[int, ...]] = []
    for k in range(max_degree + 1):
        out.extend(monomials_of_degree(d, k))
    return out


def mi_factorial(alpha: tuple[int, ...]) -> float:
    """Multi-index factorial alpha! as a float (fine for |alpha| <= 24)."""
    out = 1.0
    for a in alpha:
        out *= math.factorial(a)
    return out


@dataclass(frozen=True)
class MPoly:
    """Multivariate polynomial: map from multi-indices to coefficients.

    Zero coefficients are dropped on construction; instances are treated
    as immutable values.
    """

    dim: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        clean: dict[tuple[int, ...], complex] = {}
        for alpha, c in self.coeffs.items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != self.dim or any(a < 0 for a in alpha):
                raise ValueError(f"bad multi-index {alpha!r}")
            c = as_scalar(c, "coefficient")
            if c != 0:
                clean[alpha] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, d: int) -> "MPoly":
        return cls(d, {})

    @classmethod
    def constant(cls, d: int, c) -> "MPoly":
        return cls(d, {(0,) * d: c})

    @classmethod
    def monomial(cls, d: int, alpha, c=1.0) -> "MPoly":
        return cls(d, {tuple(alpha): c})

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return max(sum(alpha) for alpha in self.coeffs)

    def __add__(self, other: "MPoly") -> "MPoly":
        if self.dim != other.dim:
            raise ValueError("polynomial dimensions differ")
        out = dict(self.coeffs)
        for alpha, c in other.coeffs.items():
            out[alpha] = out.get(alpha, 0.0) + c
        return MPoly(self.dim, out)

    def scale(self, c) -> "MPoly":
        c = as_scalar(c, "scale")
        return MPoly(self.dim, {a: c * v for a, v in self.coeffs.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + other.scale(-1.0)

    def __mul__(self, other: "MPoly") -> "MPoly":
        if self.dim != other.dim:
            raise ValueError("polynomial dimensions differ")
        out: dict[tuple[int, ...], complex] = {}
        for a1, c1 in self.coeffs.items():
            for a2, c2 in other.coeffs.items():
                key = tuple(x + y for x, y in zip(a1, a2))
                out[key] = out.get(key, 0.0) + c1 * c2
        return MPoly(self.dim, out)

    def partial(self, k: int) -> "MPoly":
        """Partial derivative with respect to the k-th coordinate."""
        if not 0 <= k < self.dim:
            raise ValueError("coordinate index out of range")
        out: dict[tuple[int, ...], complex] = {}
        for alpha, c in self.coeffs.items():
            if alpha[k] > 0:
                beta = list(alpha)
                beta[k] -= 1
                out[tuple(beta)] = c * alpha[k]
        return MPoly(self.dim, out)

    def evaluate(self, z) -> complex:
        z = as_vector(z, self.dim, "z")
        total = 0.0 + 0.0j
        for alpha, c in self.coeffs.items():
            total += c * complex(np.prod(z ** np.array(alpha)))
        return complex(total)

    def to_json(self) -> dict:
        terms = [
            {"alpha": list(alpha), "coeff": jsonio.complex_to_json(c)}
            for alpha, c in sorted(self.coeffs.items(), key=_graded_key)
        ]
        return {"d": self.dim, "terms": terms}

    @classmethod
    def from_json(cls, obj: dict) -> "MPoly":
        if not isinstance(obj, dict) or "d" not in obj:
            raise ValueError("polynomial JSON must be an object with 'd'")
        d = int(obj["d"])
        coeffs: dict[tuple[int, ...], complex] = {}
        for term in obj.get("terms", []):
            alpha = tuple(int(a) for a in term["alpha"])
            c = jsonio.complex_from_json(term["coeff"], "coeff")
            coeffs[alpha] = coeffs.get(alpha, 0.0) + c
        return cls(d, coeffs)


def _graded_key(item):
    alpha = item[0]
    return (sum(alpha), alpha)
