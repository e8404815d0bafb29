"""Seeded random generators for symbols, conjugations, and semigroup data.

Each generator takes a ``numpy.random.Generator`` so every suite is
reproducible from its seed.  Constructed-to-pass inputs are built from the
defining conditions themselves (projections and explicit solves), never by
calling the code under test.
"""

import numpy as np

from fockwc import ConjugationParams, SemigroupParams, WcSymbol, adj, op_norm


def crandn(rng, *shape, scale=1.0):
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def rand_unitary(rng, d):
    U, _ = np.linalg.qr(crandn(rng, d, d))
    return U


def rand_valid_conjugation(rng, d, with_b=True, b_scale=0.3):
    """Random (A, b, c) satisfying the three conjugation conditions.

    A = U U^t is symmetric unitary; b = y - A conj(y) solves A conj(b) + b = 0
    for any y; |c| = e^{-|b|^2/2} with a random phase.
    """
    U = rand_unitary(rng, d)
    A = U @ U.T
    if with_b:
        y = crandn(rng, d, scale=b_scale)
        b = y - A @ np.conj(y)
    else:
        b = np.zeros(d)
    c = np.exp(-np.linalg.norm(b) ** 2 / 2) * np.exp(1j * rng.uniform(0, 2 * np.pi))
    return ConjugationParams(A, b, c)


def rand_symbol(rng, d, scale=0.7):
    theta = crandn(rng)
    while abs(theta) < 0.1:
        theta = crandn(rng)
    return WcSymbol(
        theta,
        crandn(rng, d, scale=scale),
        crandn(rng, d, d, scale=scale),
        crandn(rng, d, scale=scale),
    )


def rand_real_symmetric_symbol(rng, d, eigenvalues=None, skew=False):
    """theta real (or imaginary), Q Hermitian, ell = q."""
    if eigenvalues is None:
        eigenvalues = rng.uniform(-1.0, 1.0, d)
    V = rand_unitary(rng, d)
    Q = V @ np.diag(np.asarray(eigenvalues, dtype=float)) @ adj(V)
    q = crandn(rng, d, scale=0.7)
    theta = rng.uniform(0.5, 2.0) * (1j if skew else 1.0)
    return WcSymbol(theta, q.copy(), Q, q)


def rand_j_selfadjoint_pair(rng, d, with_b=True):
    """(S, J) built directly from the selfadjointness conditions:
    Q = A*(sym(A Q0)) so (AQ)^t = AQ, then ell from the closed formula."""
    J = rand_valid_conjugation(rng, d, with_b=with_b)
    A, b = J.A, J.b
    Q0 = crandn(rng, d, d, scale=0.7)
    AQ = A @ Q0
    Q = adj(A) @ (0.5 * (AQ + AQ.T))
    q = crandn(rng, d, scale=0.7)
    ell = np.conj(A @ q) + np.conj(b) - adj(Q) @ np.conj(b)
    theta = crandn(rng)
    while abs(theta) < 0.1:
        theta = crandn(rng)
    return WcSymbol(theta, ell, Q, q), J


def rand_normal_bounded_symbol(rng, d, with_fixed_eig=False, with_repeats=False):
    """Member of the bounded-normal class built eigenvalue-wise.

    Eigenvalues live in the closed unit disk.  On blocks with lambda != 1
    the flow condition pins ell's coordinates to mu * q's, with the
    unimodular mu = (1 - conj(lambda))/(1 - lambda); on a lambda = 1 block
    only the norms are coupled, so ell's block is a random rotation of the
    right length.
    """
    lams = []
    while len(lams) < d:
        lam = crandn(rng, scale=0.5)
        if abs(lam) > 1.0:
            lam = lam / abs(lam) * rng.uniform(0.3, 1.0)
        lams.append(lam)
        if with_repeats and len(lams) < d and rng.random() < 0.5:
            lams.append(lam)
    lams = np.array(lams[:d])
    if with_fixed_eig:
        lams[0] = 1.0
    V = rand_unitary(rng, d)
    Q = V @ np.diag(lams) @ adj(V)
    u = crandn(rng, d, scale=0.7)
    v = np.empty(d, dtype=complex)
    for k, lam in enumerate(lams):
        if abs(1.0 - lam) > 1e-12:
            v[k] = (1.0 - np.conj(lam)) / (1.0 - lam) * u[k]
        else:
            phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
            v[k] = phase * abs(u[k])
    theta = crandn(rng)
    while abs(theta) < 0.1:
        theta = crandn(rng)
    return WcSymbol(theta, V @ v, Q, V @ u)


def rand_semigroup_params(rng, d, norm_cap=1.0, theta_scale=0.5):
    Omega = crandn(rng, d, d, scale=0.5)
    nrm = op_norm(Omega)
    if nrm > norm_cap:
        Omega = Omega * (norm_cap / nrm)
    return SemigroupParams(
        Omega,
        crandn(rng, d, scale=0.7),
        crandn(rng, d, scale=0.7),
        crandn(rng, scale=theta_scale),
    )


def rand_j_semigroup_pair(rng, d, with_b=True, norm_cap=1.0):
    """(P, J) satisfying the semigroup selfadjointness conditions.

    Omega is projected so A Omega is symmetric; ell* is set by the
    first-derivative identity ell* = conj(A q*) - Omega* conj(b), which is
    explicit, implies the displayed second-order condition, and keeps the
    whole family J-selfadjoint even for singular Omega.
    """
    J = rand_valid_conjugation(rng, d, with_b=with_b)
    A, b = J.A, J.b
    Om0 = crandn(rng, d, d, scale=0.7)
    AOm = A @ Om0
    Omega = adj(A) @ (0.5 * (AOm + AOm.T))
    nrm = op_norm(Omega)
    if nrm > norm_cap:
        Omega = Omega * (norm_cap / nrm)
    q_star = crandn(rng, d, scale=0.7)
    ell_star = np.conj(A @ q_star) - adj(Omega) @ np.conj(b)
    return SemigroupParams(Omega, q_star, ell_star, crandn(rng, scale=0.5)), J


def rand_points(rng, d, n, radius=1.5):
    """n points with |z| <= radius (the kernel Gram conditioning regime)."""
    pts = []
    for _ in range(n):
        z = crandn(rng, d)
        nz = np.linalg.norm(z)
        if nz > radius:
            z = z * (radius / nz) * rng.uniform(0.3, 1.0)
        pts.append(z)
    return pts


def rand_kernel_combo(rng, d, n, radius=1.5):
    from fockwc import KernelCombo

    return KernelCombo.from_pairs(
        d, [(crandn(rng), p) for p in rand_points(rng, d, n, radius)]
    )


def combo_termwise_dev(F, G):
    """Relative termwise distance between two kernel combos.

    Exact comparison of the representations; a Gram-matrix norm of F - G
    bottoms out near sqrt(eps) from cancellation when F and G are close.
    """
    assert len(F.terms) == len(G.terms)
    worst = 0.0
    for a, b in zip(F.terms, G.terms):
        scale = 1.0 + abs(a.coeff) + float(np.linalg.norm(a.point))
        dev = abs(a.coeff - b.coeff) + float(np.linalg.norm(a.point - b.point))
        worst = max(worst, dev / scale)
    return worst
