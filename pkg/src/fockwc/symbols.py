"""Affine-exponential symbols and their exact operator calculus.

A symbol is the quadruple (theta, ell, Q, q) encoding the weight and the
self-map

    psi(z) = theta * e^{<z, ell>},      phi(z) = Q z + q,

the class in which every weighted composition operator with a symmetry
on the Fock space F^2(C^d) lives.  The operator C f = psi * (f o phi)
acts on reproducing kernels K_w(u) = e^{<u, w>} by

    C K_w = theta * e^{<q, w>} * K_{Q* w + ell},

which makes the whole calculus (products, adjoints, unitary similarity)
exact arithmetic on the four components.  All operations return new
values; symbols are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import jsonio
from .errors import PreconditionError
from .linalg import adj, as_matrix, as_scalar, as_vector, is_unitary, pairing

__all__ = [
    "ScaledKernel",
    "WcSymbol",
    "identity_symbol",
    "evaluate",
    "act_on_kernel",
    "compose",
    "adjoint_symbol",
    "negate_theta",
    "unitary_similarity",
    "symbols_equal",
    "symbol_distance",
]

# absolute floor under the relative equality threshold
_EQ_FLOOR = 1e-12


@dataclass(frozen=True)
class ScaledKernel:
    """A scalar multiple of one reproducing kernel: coeff * K_point."""

    coeff: complex
    point: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeff", as_scalar(self.coeff, "coeff"))
        pt = as_vector(self.point, name="point")
        pt.flags.writeable = False
        object.__setattr__(self, "point", pt)

    @property
    def dim(self) -> int:
        return self.point.size

    def __call__(self, x) -> complex:
        """Evaluate coeff * K_point at x, i.e. coeff * e^{<x, point>}."""
        x = as_vector(x, self.dim, "x")
        return self.coeff * complex(np.exp(pairing(x, self.point)))


@dataclass(frozen=True)
class WcSymbol:
    """Symbol (theta, ell, Q, q) of a weighted composition operator.

    ``theta`` must be nonzero (the weight is a nonzero entire function)
    and all components finite, with matching dimensions.
    """

    theta: complex
    ell: np.ndarray
    Q: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        theta = as_scalar(self.theta, "theta")
        if theta == 0:
            raise ValueError("theta must be nonzero")
        ell = as_vector(self.ell, name="ell")
        d = ell.size
        Q = as_matrix(self.Q, d, "Q")
        q = as_vector(self.q, d, "q")
        for arr in (ell, Q, q):
            arr.flags.writeable = False
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "q", q)

    @property
    def dim(self) -> int:
        return self.ell.size

    def to_json(self) -> dict:
        return {
            "d": self.dim,
            "theta": jsonio.complex_to_json(self.theta),
            "ell": jsonio.vector_to_json(self.ell),
            "Q": jsonio.matrix_to_json(self.Q),
            "q": jsonio.vector_to_json(self.q),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "WcSymbol":
        if not isinstance(obj, dict):
            raise ValueError("symbol JSON must be an object")
        try:
            d = int(obj["d"])
            theta = jsonio.complex_from_json(obj["theta"], "theta")
            ell = jsonio.vector_from_json(obj["ell"], "ell")
            Q = jsonio.matrix_from_json(obj["Q"], "Q")
            q = jsonio.vector_from_json(obj["q"], "q")
        except KeyError as exc:
            raise ValueError(f"symbol JSON is missing field {exc}") from exc
        if ell.size != d:
            raise ValueError("symbol JSON has inconsistent dimension")
        return cls(theta, ell, Q, q)


def identity_symbol(d: int) -> WcSymbol:
    """The symbol of the identity operator: (1, 0, I, 0)."""
    if d < 1:
        raise ValueError("dimension must be positive")
    return WcSymbol(1.0, np.zeros(d), np.eye(d), np.zeros(d))


def evaluate(S: WcSymbol, z) -> tuple[complex, np.ndarray]:
    """Pointwise values (psi(z), phi(z)) by the defining formulas."""
    z = as_vector(z, S.dim, "z")
    psi = S.theta * complex(np.exp(pairing(z, S.ell)))
    return psi, S.Q @ z + S.q


def act_on_kernel(S: WcSymbol, w) -> ScaledKernel:
    """Image of K_w under C_S: theta e^{<q, w>} K_{Q* w + ell}."""
    w = as_vector(w, S.dim, "w")
    coeff = S.theta * complex(np.exp(pairing(S.q, w)))
    return ScaledKernel(coeff, adj(S.Q) @ w + S.ell)


def compose(S1: WcSymbol, S2: WcSymbol) -> WcSymbol:
    """Symbol of the operator product C_{S1} C_{S2}.

    Pointwise, psi = psi1 * (psi2 o phi1) and phi = phi2 o phi1, which in
    components reads

        (theta1 theta2 e^{<q1, ell2>},  ell1 + Q1* ell2,  Q2 Q1,  Q2 q1 + q2).
    """
    if S1.dim != S2.dim:
        raise ValueError("compose requires symbols of equal dimension")
    theta = S1.theta * S2.theta * complex(np.exp(pairing(S1.q, S2.ell)))
    return WcSymbol(
        theta,
        S1.ell + adj(S1.Q) @ S2.ell,
        S2.Q @ S1.Q,
        S2.Q @ S1.q + S2.q,
    )


def adjoint_symbol(S: WcSymbol) -> WcSymbol:
    """Symbol of the adjoint: (theta, ell, Q, q) -> (conj theta, q, Q*, ell).

    The adjoint acts on kernels by C* K_z = conj(psi(z)) K_{phi(z)}, and this
    quadruple is the unique symbol realizing that action.
    """
    return WcSymbol(np.conj(S.theta), S.q.copy(), adj(S.Q), S.ell.copy())


def negate_theta(S: WcSymbol) -> WcSymbol:
    """Same symbol with the weight scalar negated (for skew symmetry tests)."""
    return WcSymbol(-S.theta, S.ell.copy(), S.Q.copy(), S.q.copy())


def unitary_similarity(S: WcSymbol, U, V) -> WcSymbol:
    """Conjugated symbol under C_S = C_U C_{S~} C_V with unitary U, V.

    S~ = (theta, U ell, V* Q U*, V* q); the inverse transform is the same map
    with (U*, V*).  Raises ``PreconditionError`` unless U and V are unitary
    to within 1e-10.
    """
    U = as_matrix(U, S.dim, "U")
    V = as_matrix(V, S.dim, "V")
    for name, W in (("U", U), ("V", V)):
        ok, defect = is_unitary(W, 1e-10)
        if not ok:
            raise PreconditionError(
                f"{name} is not unitary (defect {defect:.2e})"
            )
    return WcSymbol(S.theta, U @ S.ell, adj(V) @ S.Q @ adj(U), adj(V) @ S.q)


def symbol_distance(S1: WcSymbol, S2: WcSymbol) -> float:
    """Largest componentwise deviation between two symbols."""
    if S1.dim != S2.dim:
        raise ValueError("symbols have different dimensions")
    return max(
        abs(S1.theta - S2.theta),
        float(np.max(np.abs(S1.ell - S2.ell))),
        float(np.max(np.abs(S1.Q - S2.Q))),
        float(np.max(np.abs(S1.q - S2.q))),
    )


def _magnitude(S: WcSymbol) -> float:
    return max(
        abs(S.theta),
        float(np.max(np.abs(S.ell))) if S.ell.size else 0.0,
        float(np.max(np.abs(S.Q))),
        float(np.max(np.abs(S.q))) if S.q.size else 0.0,
    )


def symbols_equal(S1: WcSymbol, S2: WcSymbol, tol: float = 1e-10) -> bool:
    """Componentwise equality with relative tolerance and absolute floor.

    The symbol representation is unique (theta = psi(0), ell from the
    exponent, Q and q from phi), so this decides equality of the operators
    on their common class.
    """
    scale = 1.0 + max(_magnitude(S1), _magnitude(S2))
    return symbol_distance(S1, S2) <= max(tol * scale, _EQ_FLOOR)
