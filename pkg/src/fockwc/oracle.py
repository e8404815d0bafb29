"""Two independent verification engines for the symbol calculus.

Engine one works on finite spans of reproducing kernels, where every inner
product is exact scalar arithmetic through the reproducing property
``<K_w, K_z> = e^{<z, w>}``.  Engine two builds finite sections of the
operators on the orthonormal monomial basis ``e_alpha = z^alpha/sqrt(alpha!)``
up to a total degree, by purely combinatorial series expansion (never
quadrature).  Closed-form identities elsewhere in the package are validated
against both.

Truncated sections exploit the factorization C = (multiply by psi) o
(compose with phi): composition is degree non-increasing, so the truncated
matrix is the product of a multiplication section and a composition section
with no extra truncation error in between.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .conjugation import ConjugationParams, apply_to_kernel, require_valid
from .errors import DegreeCapError, PreconditionError
from .linalg import as_vector, op_norm, pairing
from .polynomials import MPoly, mi_factorial, multi_indices
from .symbols import ScaledKernel, WcSymbol, act_on_kernel, adjoint_symbol

__all__ = [
    "MAX_TRUNC_DEGREE",
    "KernelCombo",
    "inner",
    "combo_norm",
    "apply_symbol",
    "apply_conjugation",
    "pairing_defect",
    "adjoint_defect",
    "j_symmetry_defect",
    "TruncOp",
    "AntilinearTruncOp",
    "trunc_symbol_matrix",
    "trunc_conjugation_matrix",
    "kernel_coeff_vector",
    "poly_coeff_vector",
    "exp_tail",
    "cross_check",
]

# factorials are computed in floating point; degrees beyond this cap are
# refused rather than silently losing accuracy
MAX_TRUNC_DEGREE = 24


# --- kernel span engine ------------------------------------------------------


@dataclass(frozen=True)
class KernelCombo:
    """Finite linear combination of reproducing kernels, sum_i c_i K_{z_i}.

    The empty combination is the zero function.
    """

    dim: int
    terms: tuple[ScaledKernel, ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        terms = tuple(self.terms)
        for t in terms:
            if not isinstance(t, ScaledKernel):
                raise ValueError("terms must be ScaledKernel instances")
            if t.dim != self.dim:
                raise ValueError("kernel point dimension mismatch")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_pairs(cls, dim: int, pairs) -> "KernelCombo":
        return cls(dim, tuple(ScaledKernel(c, p) for c, p in pairs))

    def scale(self, a) -> "KernelCombo":
        return KernelCombo(
            self.dim,
            tuple(ScaledKernel(a * t.coeff, t.point) for t in self.terms),
        )

    def __add__(self, other: "KernelCombo") -> "KernelCombo":
        if self.dim != other.dim:
            raise ValueError("kernel combo dimensions differ")
        return KernelCombo(self.dim, self.terms + other.terms)

    def __sub__(self, other: "KernelCombo") -> "KernelCombo":
        return self + other.scale(-1.0)

    def __call__(self, x) -> complex:
        return complex(sum(t(x) for t in self.terms))

    def to_json(self) -> dict:
        from . import jsonio

        return {
            "d": self.dim,
            "terms": [
                {
                    "coeff": jsonio.complex_to_json(t.coeff),
                    "point": jsonio.vector_to_json(t.point),
                }
                for t in self.terms
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "KernelCombo":
        from . import jsonio

        if not isinstance(obj, dict) or "d" not in obj:
            raise ValueError("kernel combo JSON must be an object with 'd'")
        d = int(obj["d"])
        terms = [
            ScaledKernel(
                jsonio.complex_from_json(t["coeff"], "coeff"),
                jsonio.vector_from_json(t["point"], "point"),
            )
            for t in obj.get("terms", [])
        ]
        return cls(d, tuple(terms))


def inner(F: KernelCombo, G: KernelCombo) -> complex:
    """Fock inner product of kernel combinations via reproducing property.

    <sum_i c_i K_{w_i}, sum_j d_j K_{z_j}> = sum_ij c_i conj(d_j) e^{<z_j, w_i>}.
    """
    if F.dim != G.dim:
        raise ValueError("kernel combo dimensions differ")
    total = 0.0 + 0.0j
    for ti in F.terms:
        for tj in G.terms:
            total += (
                ti.coeff
                * np.conj(tj.coeff)
                * np.exp(pairing(tj.point, ti.point))
            )
    return complex(total)


def combo_norm(F: KernelCombo) -> float:
    """Fock norm of a kernel combination."""
    return math.sqrt(max(inner(F, F).real, 0.0))


def apply_symbol(S: WcSymbol, F: KernelCombo) -> KernelCombo:
    """Apply C_S termwise: c_i K_{w_i} -> c_i * act_on_kernel(S, w_i)."""
    if S.dim != F.dim:
        raise ValueError("symbol and combo dimensions differ")
    out = []
    for t in F.terms:
        img = act_on_kernel(S, t.point)
        out.append(ScaledKernel(t.coeff * img.coeff, img.point))
    return KernelCombo(F.dim, tuple(out))


def apply_conjugation(J: ConjugationParams, F: KernelCombo) -> KernelCombo:
    """Apply J termwise; antilinearity conjugates the coefficients."""
    if J.dim != F.dim:
        raise ValueError("conjugation and combo dimensions differ")
    out = []
    for t in F.terms:
        img = apply_to_kernel(J, t.point)
        out.append(ScaledKernel(np.conj(t.coeff) * img.coeff, img.point))
    return KernelCombo(F.dim, tuple(out))


def _check_points(points, dim: int) -> list[np.ndarray]:
    pts = [as_vector(p, dim, "point") for p in points]
    if len(pts) < 2:
        raise ValueError("need at least two kernel points")
    return pts


def pairing_defect(S: WcSymbol, T: WcSymbol, points) -> float:
    """How far T is from being the adjoint of S, on a kernel span.

    Largest relative deviation of <C_S K_zi, K_zj> from <K_zi, C_T K_zj>
    over all point pairs; vanishes (to roundoff) iff T = adjoint_symbol(S)
    on the span.
    """
    if S.dim != T.dim:
        raise ValueError("symbol dimensions differ")
    pts = _check_points(points, S.dim)
    imgs_S = [act_on_kernel(S, z) for z in pts]
    imgs_T = [act_on_kernel(T, z) for z in pts]
    worst = 0.0
    scale = 1.0
    for i, ai in enumerate(imgs_S):
        for j, z in enumerate(pts):
            lhs = ai.coeff * np.exp(pairing(z, ai.point))
            aj = imgs_T[j]
            rhs = np.conj(aj.coeff) * np.exp(pairing(aj.point, pts[i]))
            worst = max(worst, abs(lhs - rhs))
            scale = max(scale, 1.0 + abs(lhs))
    return worst / scale


def adjoint_defect(S: WcSymbol, points) -> float:
    """pairing_defect of S against its closed-form adjoint symbol."""
    return pairing_defect(S, adjoint_symbol(S), points)


def j_symmetry_defect(S: WcSymbol, J: ConjugationParams, points) -> float:
    """Asymmetry of the bilinear form [f, g] = <C_S f, J g> on kernels.

    C_S is J-selfadjoint iff the form is symmetric; the returned value is
    the largest relative deviation |[K_zi, K_zj] - [K_zj, K_zi]|.
    """
    require_valid(J)
    if S.dim != J.dim:
        raise ValueError("symbol and conjugation dimensions differ")
    pts = _check_points(points, S.dim)
    imgs = [act_on_kernel(S, z) for z in pts]
    conj_imgs = [apply_to_kernel(J, z) for z in pts]
    m = len(pts)
    B = np.zeros((m, m), dtype=np.complex128)
    for i in range(m):
        for j in range(m):
            kj = conj_imgs[j]
            B[i, j] = (
                imgs[i].coeff
                * np.conj(kj.coeff)
                * np.exp(pairing(kj.point, imgs[i].point))
            )
    scale = 1.0 + float(np.max(np.abs(B)))
    return float(np.max(np.abs(B - B.T))) / scale


# --- truncated section engine ------------------------------------------------


class _IndexTables:
    """Precomputed combinatorics for one (dimension, degree) pair."""

    def __init__(self, d: int, N: int):
        self.indices = multi_indices(d, N)
        self.pos = {alpha: i for i, alpha in enumerate(self.indices)}
        self.alpha = np.array(self.indices, dtype=np.int64)
        self.degree = self.alpha.sum(axis=1)
        self.fact = np.array(
            [mi_factorial(a) for a in self.indices], dtype=np.float64
        )
        self.sqrt_fact = np.sqrt(self.fact)
        # scatter maps for multiplication by z_j on raw coefficient vectors
        self.shifts = []
        for j in range(d):
            src, dst = [], []
            for i, alpha in enumerate(self.indices):
                if self.degree[i] < N:
                    up = list(alpha)
                    up[j] += 1
                    src.append(i)
                    dst.append(self.pos[tuple(up)])
            self.shifts.append(
                (np.array(src, dtype=np.intp), np.array(dst, dtype=np.intp))
            )
        # (gamma, delta) pairs with |gamma| + |delta| <= N, for assembling
        # multiplication-operator sections in one vectorized store
        rows, cols, deltas = [], [], []
        for ig, gamma in enumerate(self.indices):
            room = N - int(self.degree[ig])
            for idl, delta in enumerate(self.indices):
                if self.degree[idl] > room:
                    break
                rows.append(self.pos[tuple(g + x for g, x in zip(gamma, delta))])
                cols.append(ig)
                deltas.append(idl)
        self.pair_rows = np.array(rows, dtype=np.intp)
        self.pair_cols = np.array(cols, dtype=np.intp)
        self.pair_deltas = np.array(deltas, dtype=np.intp)


_TABLES: dict[tuple[int, int], _IndexTables] = {}


def _tables(d: int, N: int) -> _IndexTables:
    if N < 0:
        raise ValueError("truncation degree must be non-negative")
    if N > MAX_TRUNC_DEGREE:
        raise DegreeCapError(
            f"truncation degree {N} exceeds cap {MAX_TRUNC_DEGREE}"
        )
    key = (d, N)
    if key not in _TABLES:
        _TABLES[key] = _IndexTables(d, N)
    return _TABLES[key]


def _wc_section(c0: complex, wvec: np.ndarray, B: np.ndarray,
                beta: np.ndarray, N: int) -> np.ndarray:
    """Section of f -> c0 e^{z.wvec} f(B z + beta) on the normalized basis.

    Dots denote the plain bilinear sum.  Built as (multiplication section)
    @ (composition section) on raw monomial coefficients, then rescaled by
    sqrt(beta!/alpha!).
    """
    d = wvec.size
    tab = _tables(d, N)
    n = len(tab.indices)

    comp = np.zeros((n, n), dtype=np.complex128)
    comp[0, 0] = 1.0
    for col in range(1, n):
        alpha = tab.indices[col]
        k = next(i for i, a in enumerate(alpha) if a > 0)
        down = list(alpha)
        down[k] -= 1
        v = comp[:, tab.pos[tuple(down)]]
        out = beta[k] * v
        for j in range(d):
            src, dst = tab.shifts[j]
            if B[k, j] != 0:
                out[dst] += B[k, j] * v[src]
        comp[:, col] = out

    evec = np.prod(
        np.power(wvec[None, :], tab.alpha), axis=1
    ) / tab.fact
    mult = np.zeros((n, n), dtype=np.complex128)
    mult[tab.pair_rows, tab.pair_cols] = c0 * evec[tab.pair_deltas]

    raw = mult @ comp
    return raw * (tab.sqrt_fact[:, None] / tab.sqrt_fact[None, :])


@dataclass(frozen=True)
class TruncOp:
    """Finite section of a linear operator on monomials of degree <= N."""

    dim: int
    degree: int
    matrix: np.ndarray

    def apply(self, v: np.ndarray) -> np.ndarray:
        return self.matrix @ np.asarray(v, dtype=np.complex128)

    @property
    def indices(self) -> list[tuple[int, ...]]:
        return list(_tables(self.dim, self.degree).indices)


@dataclass(frozen=True)
class AntilinearTruncOp:
    """Finite section of an antilinear operator: v -> matrix @ conj(v)."""

    dim: int
    degree: int
    matrix: np.ndarray

    def apply(self, v: np.ndarray) -> np.ndarray:
        return self.matrix @ np.conj(np.asarray(v, dtype=np.complex128))

    @property
    def indices(self) -> list[tuple[int, ...]]:
        return list(_tables(self.dim, self.degree).indices)


def trunc_symbol_matrix(S: WcSymbol, N: int) -> TruncOp:
    """Section of C_S: entry (beta, alpha) is
    sqrt(beta!/alpha!) [z^beta](theta e^{<z,ell>} (Qz+q)^alpha)."""
    mat = _wc_section(S.theta, np.conj(S.ell), S.Q, S.q, N)
    return TruncOp(S.dim, N, mat)


def trunc_conjugation_matrix(J: ConjugationParams, N: int) -> AntilinearTruncOp:
    """Antilinear section of J, from J e_alpha = c e^{z.b} (Az+b)^alpha/sqrt(alpha!)."""
    require_valid(J)
    mat = _wc_section(J.c, J.b, J.A, J.b, N)
    return AntilinearTruncOp(J.dim, N, mat)


def kernel_coeff_vector(w, N: int) -> np.ndarray:
    """Basis coefficients of K_w up to degree N: conj(w)^alpha/sqrt(alpha!)."""
    w = as_vector(w, name="w")
    tab = _tables(w.size, N)
    return np.prod(
        np.power(np.conj(w)[None, :], tab.alpha), axis=1
    ) / tab.sqrt_fact


def poly_coeff_vector(f: MPoly, N: int) -> np.ndarray:
    """Basis coefficients of a polynomial: z^alpha has coefficient sqrt(alpha!)."""
    tab = _tables(f.dim, N)
    if f.degree() > N:
        raise ValueError("polynomial degree exceeds the truncation degree")
    v = np.zeros(len(tab.indices), dtype=np.complex128)
    for alpha, c in f.coeffs.items():
        i = tab.pos[alpha]
        v[i] = c * tab.sqrt_fact[i]
    return v


def exp_tail(rho: float, N: int) -> float:
    """Tail of the exponential series: sum_{k>N} rho^k / k!."""
    if rho < 0:
        raise ValueError("rho must be non-negative")
    term = rho ** (N + 1) / math.factorial(N + 1)
    total = 0.0
    for k in range(N + 1, N + 200):
        total += term
        term *= rho / (k + 1)
        if term <= total * 1e-18 + 1e-300:
            break
    return total


def cross_check(S: WcSymbol, w, N: int, tol: float = 1e-8) -> float:
    """Agreement of the two engines on the kernel action of C_S.

    Compares the truncated-matrix path T_N(S) k_N(w) against the closed
    form theta e^{<q,w>} k_N(Q* w + ell) on coefficients of degree <= N/2.
    A precondition enforces the declared truncation-error bound

        sqrt(#rows) sqrt((N/2)!) |theta| e^{sqrt(d)||ell||} tail(rho, N),
        rho = (||Q|| sqrt(d) + ||q||) ||w||,

    to be below ``tol`` (Cauchy estimate on the unit polydisc), so a
    residual above ``tol`` signals a genuine disagreement, not truncation.
    """
    w = as_vector(w, S.dim, "w")
    d = S.dim
    m = N // 2
    tab = _tables(d, N)
    n_rows = int(np.count_nonzero(tab.degree <= m))
    rho = (op_norm(S.Q) * math.sqrt(d) + float(np.linalg.norm(S.q))) * float(
        np.linalg.norm(w)
    )
    bound = (
        math.sqrt(n_rows)
        * math.sqrt(math.factorial(m))
        * abs(S.theta)
        * math.exp(math.sqrt(d) * float(np.linalg.norm(S.ell)))
        * exp_tail(rho, N)
    )
    if not bound < tol:
        raise PreconditionError(
            f"truncation tail bound {bound:.3e} is not below tol={tol:.1e}; "
            "shrink the data or raise N"
        )
    T = trunc_symbol_matrix(S, N)
    lhs = T.apply(kernel_coeff_vector(w, N))
    img = act_on_kernel(S, w)
    rhs = img.coeff * kernel_coeff_vector(img.point, N)
    mask = tab.degree <= m
    return float(np.linalg.norm((lhs - rhs)[mask]))
