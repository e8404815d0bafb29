"""Conjugations J_{A,b,c} on the Fock space and their symbol calculus.

The antilinear operator

    J f(z) = c * e^{<z, conj(b)>} * conj(f(conj(A z + b)))

is a conjugation (involutive antilinear isometry) exactly when

    (i)   A^{-1} = A* = conj(A)      (A unitary and symmetric),
    (ii)  A conj(b) + b = 0,
    (iii) |c|^2 e^{|b|^2} = 1.

It acts on reproducing kernels by J K_w = c e^{<b, conj(w)>} K_{A* conj(w) + conj(b)},
which drives everything here: transforming symbols by J C J, forming the
J-adjoint symbol of J C* J, and constructing a conjugation that makes a
given real-symmetric or bounded-normal operator J-selfadjoint.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import jsonio
from .errors import NotApplicableError, PreconditionError
from .linalg import (
    adj,
    as_matrix,
    as_scalar,
    as_vector,
    herm_eig,
    normal_eig,
    op_norm,
    pairing,
)
from .symbols import ScaledKernel, WcSymbol, adjoint_symbol

__all__ = [
    "ConjugationParams",
    "identity_conjugation",
    "validate",
    "require_valid",
    "apply_to_kernel",
    "conjugate_by_J",
    "j_adjoint_symbol",
    "find_conjugation_real_symmetric",
    "find_conjugation_normal",
]


@dataclass(frozen=True)
class ConjugationParams:
    """Parameters (A, b, c) of the candidate conjugation J_{A,b,c}."""

    A: np.ndarray
    b: np.ndarray
    c: complex

    def __post_init__(self):
        A = as_matrix(self.A, name="A")
        b = as_vector(self.b, A.shape[0], "b")
        c = as_scalar(self.c, "c")
        A.flags.writeable = False
        b.flags.writeable = False
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def dim(self) -> int:
        return self.b.size

    def to_json(self) -> dict:
        return {
            "d": self.dim,
            "A": jsonio.matrix_to_json(self.A),
            "b": jsonio.vector_to_json(self.b),
            "c": jsonio.complex_to_json(self.c),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ConjugationParams":
        if not isinstance(obj, dict):
            raise ValueError("conjugation JSON must be an object")
        try:
            A = jsonio.matrix_from_json(obj["A"], "A")
            b = jsonio.vector_from_json(obj["b"], "b")
            c = jsonio.complex_from_json(obj["c"], "c")
        except KeyError as exc:
            raise ValueError(f"conjugation JSON is missing field {exc}") from exc
        if "d" in obj and int(obj["d"]) != b.size:
            raise ValueError("conjugation JSON has inconsistent dimension")
        return cls(A, b, c)


def identity_conjugation(d: int) -> ConjugationParams:
    """Coordinatewise conjugation f -> conj(f(conj(z))): (I, 0, 1)."""
    return ConjugationParams(np.eye(d), np.zeros(d), 1.0)


def validate(J: ConjugationParams, tol: float = 1e-9) -> tuple[bool, dict]:
    """Check the three conjugation conditions; residuals are absolute.

    Residual 1 covers condition (i) as max(unitarity, symmetry) defect of A,
    residual 2 is ||A conj(b) + b||, residual 3 is | |c|^2 e^{|b|^2} - 1 |.
    """
    eye = np.eye(J.dim)
    residuals = {
        "matrix": max(
            op_norm(J.A @ adj(J.A) - eye), op_norm(J.A - J.A.T)
        ),
        "vector": float(np.linalg.norm(J.A @ np.conj(J.b) + J.b)),
        "scalar": abs(
            abs(J.c) ** 2 * float(np.exp(np.linalg.norm(J.b) ** 2)) - 1.0
        ),
    }
    return max(residuals.values()) <= tol, residuals


def require_valid(J: ConjugationParams, tol: float = 1e-9) -> None:
    """Raise ``PreconditionError`` unless ``J`` is a valid conjugation."""
    ok, residuals = validate(J, tol)
    if not ok:
        raise PreconditionError(
            "conjugation parameters violate the admissibility conditions: "
            + ", ".join(f"{k}={v:.3e}" for k, v in residuals.items())
        )


def apply_to_kernel(J: ConjugationParams, w) -> ScaledKernel:
    """Image of K_w under J: c e^{<b, conj(w)>} K_{A* conj(w) + conj(b)}."""
    require_valid(J)
    w = as_vector(w, J.dim, "w")
    coeff = J.c * complex(np.exp(pairing(J.b, np.conj(w))))
    return ScaledKernel(coeff, adj(J.A) @ np.conj(w) + np.conj(J.b))


def conjugate_by_J(S: WcSymbol, J: ConjugationParams) -> WcSymbol:
    """Symbol of the twisted operator J C_S J.

    Closed form obtained by pushing f through J, C_S, J and collecting the
    exponentials (the correctness gate is the pointwise antilinear oracle,
    exercised in the test suite):

        Q' = conj(AQ) A
        q' = conj(AQ) b + conj(A q) + conj(b)
        l' = A* conj(l) + A* Q^t b + conj(b)
        theta' = |c|^2 conj(theta)
                 * exp(l.b + conj(b).conj(Q)b + conj(q.b))

    where dots denote the unconjugated bilinear sum.
    """
    require_valid(J)
    if S.dim != J.dim:
        raise ValueError("symbol and conjugation dimensions differ")
    A, b, c = J.A, J.b, J.c
    AQbar = np.conj(A @ S.Q)
    Qp = AQbar @ A
    qp = AQbar @ b + np.conj(A @ S.q) + np.conj(b)
    lp = adj(A) @ np.conj(S.ell) + adj(A) @ S.Q.T @ b + np.conj(b)
    expo = (
        np.dot(S.ell, b)
        + np.dot(np.conj(b), np.conj(S.Q) @ b)
        + np.conj(np.dot(S.q, b))
    )
    theta_p = abs(c) ** 2 * np.conj(S.theta) * complex(np.exp(expo))
    return WcSymbol(theta_p, lp, Qp, qp)


def j_adjoint_symbol(S: WcSymbol, J: ConjugationParams) -> WcSymbol:
    """Symbol of J C_S* J, the J-adjoint of C_S.

    A symbol is a fixed point of this map exactly when C_S is J-selfadjoint.
    """
    return conjugate_by_J(adjoint_symbol(S), J)


# --- constructive procedures -------------------------------------------------

# relative cutoff deciding when an eigenvalue counts as the fixed point 1
_FIXED_EIG_TOL = 1e-8
# relative cutoff below which block components of q, l count as zero
_ZERO_VEC_TOL = 1e-13


def _complete_unitary(cols: list[np.ndarray], n: int) -> np.ndarray:
    """Extend orthonormal columns to a full unitary matrix."""
    if not cols:
        return np.eye(n, dtype=np.complex128)
    C = np.column_stack(cols)
    if C.shape[1] == n:
        return C.astype(np.complex128)
    rest = scipy.linalg.null_space(np.conj(C).T)
    return np.column_stack([C, rest]).astype(np.complex128)


def _pairing_symmetric_unitary(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Symmetric unitary W with W u = conj(v) for ||u|| = ||v|| > 0.

    W is the matrix of x -> J(conj(x)) where J is the conjugation pairing
    conj(u)/||u|| with conj(v)/||v||; in the orthonormal basis (g1, g2) of
    their span it is [[beta, gamma], [gamma, -conj(beta)]], extended by the
    identity on the orthogonal complement.
    """
    n = u.size
    p = np.conj(u) / np.linalg.norm(u)
    r = np.conj(v) / np.linalg.norm(v)
    beta = complex(np.vdot(p, r))
    resid = r - beta * p
    gamma = float(np.linalg.norm(resid))
    if gamma <= 1e-13:
        G = _complete_unitary([p], n)
        K = np.eye(n, dtype=np.complex128)
        K[0, 0] = beta
    else:
        g2 = resid / gamma
        G = _complete_unitary([p, g2], n)
        K = np.eye(n, dtype=np.complex128)
        K[0, 0] = beta
        K[0, 1] = K[1, 0] = gamma
        K[1, 1] = -np.conj(beta)
    return G @ K @ G.T


def find_conjugation_real_symmetric(
    S: WcSymbol, tol: float = 1e-9
) -> ConjugationParams:
    """Conjugation making a (skew-)real-symmetric operator J-selfadjoint.

    With Q = V M V* Hermitian and u = V* q, the phases
    alpha_m = -arg(u_m) make e^{i alpha_m} u_m real, and

        A = conj(V) diag(e^{2 i alpha_m}) V*,   b = 0,   c = 1

    is a symmetric unitary with (AQ)^t = AQ and A q = conj(q).  Zero
    entries of u take phase 0, so the construction is deterministic.
    Raises ``NotApplicableError`` outside the (skew-)real-symmetric class.
    """
    from .classify import check_real_symmetric, check_skew_real_symmetric

    ok_real, _ = check_real_symmetric(S, tol)
    ok_skew, _ = check_skew_real_symmetric(S, tol)
    if not (ok_real or ok_skew):
        raise NotApplicableError(
            "operator is not (skew-)real symmetric; no construction applies"
        )
    dec = herm_eig(S.Q)
    V = dec.unitary
    u = adj(V) @ S.q
    phases = np.exp(-2j * np.angle(u))
    A = np.conj(V) @ (phases[:, None] * adj(V))
    return ConjugationParams(A, np.zeros(S.dim), 1.0)


def find_conjugation_normal(S: WcSymbol, tol: float = 1e-9) -> ConjugationParams:
    """Conjugation making a bounded-normal operator J-selfadjoint.

    Same scheme as the real-symmetric case with Q = V M V* normal,
    u = V* q and v = V* ell.  On eigenvalue groups with lambda != 1 the
    diagonal phases alpha_m = -arg((1 - conj(lambda)) u_m) already force
    l = conj(A q).  On a group with lambda = 1 the class conditions leave
    u and v coupled only through ||u|| = ||v||, so the block of A is the
    symmetric unitary pairing u with conj(v) (identity when both vanish);
    a plain zero phase there would break J-selfadjointness whenever
    v != conj(u) on that eigenspace.
    """
    from .classify import check_normal_bounded

    ok, _ = check_normal_bounded(S, tol)
    if not ok:
        raise NotApplicableError(
            "operator is not normal-bounded; no construction applies"
        )
    dec = normal_eig(S.Q)
    V = dec.unitary
    u = adj(V) @ S.q
    v = adj(V) @ S.ell
    scale = 1.0 + op_norm(S.Q)
    zero_tol = _ZERO_VEC_TOL * (
        1.0 + float(np.linalg.norm(S.q)) + float(np.linalg.norm(S.ell))
    )
    W = np.zeros((S.dim, S.dim), dtype=np.complex128)
    for j, group in enumerate(dec.groups):
        idx = list(group)
        lam = dec.group_eigenvalue(j)
        if abs(1.0 - lam) > _FIXED_EIG_TOL * scale:
            phases = np.exp(-2j * np.angle((1.0 - np.conj(lam)) * u[idx]))
            W[idx, idx] = phases
        else:
            uj, vj = u[idx], v[idx]
            if np.linalg.norm(uj) <= zero_tol or np.linalg.norm(vj) <= zero_tol:
                W[np.ix_(idx, idx)] = np.eye(len(idx))
            else:
                W[np.ix_(idx, idx)] = _pairing_symmetric_unitary(uj, vj)
    A = np.conj(V) @ W @ adj(V)
    return ConjugationParams(A, np.zeros(S.dim), 1.0)
