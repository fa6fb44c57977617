"""Dense complex matrix kernels shared by the whole package.

Three operations carry all the analytic weight elsewhere: an
eigendecomposition for normal matrices (unitary and skew-Hermitian inputs),
simultaneous diagonalization of commuting real symmetric matrices, and the
matrix exponential of a skew-Hermitian matrix.

Everything is reduced to Hermitian eigensolves: a normal matrix splits into
commuting Hermitian parts, and a single solve of a generically weighted
combination recovers a joint eigenbasis.  The weight is drawn from a fixed
list of incommensurate constants, so results are deterministic and a
degenerate combination for one weight is broken by the next.

Matrices are plain numpy complex arrays; operations are pure and never
modify their inputs.  Residual thresholds are relative to the Frobenius
norm of the input, falling back to absolute for zero input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    NoConvergence,
    NotCommuting,
    NotNormal,
    NotSkewHermitian,
    NotSymmetric,
)

TWO_PI = 2.0 * np.pi

# Mixing weights for the generic-combination trick in eig_normal and
# simdiag_real_symmetric.  Irrational and pairwise incommensurate.
_MIX_WEIGHTS = (
    0.7853981633974483,   # pi/4
    1.618033988749895,    # golden ratio
    0.5772156649015329,   # Euler-Mascheroni
    2.302585092994046,    # ln 10
    0.36787944117144233,  # 1/e
    3.141592653589793,    # pi
)


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds used by every operation in the package.

    membership_tol bounds Frobenius-norm residuals of the membership laws,
    cluster_tol is the angular radius for grouping eigenvalues on the unit
    circle, and branch_margin is the minimum angular distance an eigenvalue
    may have from a logarithm branch point.
    """

    membership_tol: float = 1e-9
    cluster_tol: float = 1e-6
    branch_margin: float = 1e-8

    def __post_init__(self):
        if min(self.membership_tol, self.cluster_tol, self.branch_margin) <= 0.0:
            raise ValueError("tolerances must be strictly positive")
        if self.cluster_tol <= self.membership_tol:
            raise ValueError("cluster_tol must exceed membership_tol")


#: Process-wide defaults; read-only after import.
DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class EigenDecomposition:
    """Unitary eigenvector matrix P and eigenvalues with X = P D P*.

    Eigenvalues are sorted by ascending principal argument in (-pi, pi],
    ties broken by ascending imaginary part; P's columns follow the same
    order.
    """

    P: np.ndarray
    eigenvalues: np.ndarray


def as_matrix(x) -> np.ndarray:
    """Validate and normalize x into a square complex128 array."""
    a = np.asarray(x, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError("matrix side must be at least 1")
    if not np.all(np.isfinite(a.view(float))):
        raise ValueError("matrix entries must be finite")
    return a


def frobenius(a) -> float:
    return float(np.linalg.norm(a))


def _scale(a) -> float:
    """Frobenius norm of the input, or 1 for the zero matrix."""
    nrm = frobenius(a)
    return nrm if nrm > 0.0 else 1.0


def _offdiag_norm(a) -> float:
    return frobenius(a - np.diag(np.diagonal(a)))


def angular_distance(a, b):
    """Distance between angles on the circle, folded into [0, pi]."""
    return np.abs(np.mod(np.asarray(a) - b + np.pi, TWO_PI) - np.pi)


def spectral_margin(eigenvalues, alpha: float) -> float:
    """Smallest angular distance from any eigenvalue's argument to alpha."""
    return float(np.min(angular_distance(np.angle(eigenvalues), alpha)))


def cluster_angles(angles, tol: float) -> list[np.ndarray]:
    """Single-linkage clusters of angles on the circle, linking gaps <= tol.

    Returns index arrays into the input; the wrap-around gap links the first
    and last sorted groups.  Cluster order follows the sorted angles.
    """
    angles = np.asarray(angles, dtype=float)
    if angles.size == 0:
        return []
    order = np.argsort(angles, kind="stable")
    sorted_angles = angles[order]
    gaps = np.diff(sorted_angles)
    pieces = np.split(order, np.nonzero(gaps > tol)[0] + 1)
    if len(pieces) > 1 and TWO_PI - (sorted_angles[-1] - sorted_angles[0]) <= tol:
        pieces[0] = np.concatenate([pieces.pop(), pieces[0]])
    return pieces


def eig_normal(X, tol: Tolerances = DEFAULT_TOLERANCES) -> EigenDecomposition:
    """Eigendecomposition of a normal matrix via its Hermitian parts.

    Splits X = H1 + i H2 with H1, H2 commuting Hermitian and solves the
    Hermitian problem for H1 + mu H2 with a generic weight mu; the joint
    eigenbasis diagonalizes X.  Eigenvalues are recovered as Rayleigh
    quotients and the decomposition is accepted only after a residual
    check, retrying with the next weight on failure.

    Raises NotNormal when the commutator residual of X exceeds
    100 * membership_tol (relative), and NoConvergence when every weight
    fails the residual check.
    """
    X = as_matrix(X)
    s = _scale(X)
    Xh = X.conj().T
    if frobenius(X @ Xh - Xh @ X) > 100.0 * tol.membership_tol * s * s:
        raise NotNormal("matrix does not commute with its conjugate transpose")

    H1 = (X + Xh) / 2.0
    H2 = (X - Xh) / 2.0j
    E = np.eye(X.shape[0])
    for mu in _MIX_WEIGHTS:
        _, V = np.linalg.eigh(H1 + mu * H2)
        lam = np.einsum("ij,ij->j", V.conj(), X @ V)
        order = np.lexsort((lam.imag, np.angle(lam)))
        V = V[:, order]
        lam = lam[order]
        if frobenius(X @ V - V * lam) <= tol.membership_tol * s:
            if frobenius(V @ V.conj().T - E) > tol.membership_tol:
                V, _ = np.linalg.qr(V)
            return EigenDecomposition(P=V, eigenvalues=lam)
    raise NoConvergence("no mixing weight separated the spectrum")


def exp_skew_hermitian(H, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Unitary exponential of a skew-Hermitian matrix.

    Diagonalizes -iH (Hermitian) and exponentiates the eigenvalues, so the
    result is unitary by construction up to roundoff.
    """
    H = as_matrix(H)
    if frobenius(H + H.conj().T) > 100.0 * tol.membership_tol * _scale(H):
        raise NotSkewHermitian("matrix is not skew-Hermitian")
    w, V = np.linalg.eigh(-1j * H)
    return (V * np.exp(1j * w)) @ V.conj().T


def simdiag_real_symmetric(
    S1, S2, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Jointly diagonalize two commuting real symmetric matrices.

    Returns (B, d1, d2) with B real orthogonal, det(B) = +1, and
    tB S1 B = diag(d1), tB S2 B = diag(d2) within tolerance.  The joint
    basis comes from one symmetric eigensolve of a generically weighted
    combination of the normalized inputs, retried with fresh weights until
    both off-diagonal residuals pass.
    """
    S1 = as_matrix(S1)
    S2 = as_matrix(S2)
    if S1.shape != S2.shape:
        raise NotCommuting("matrices must share a common shape")
    s1, s2 = _scale(S1), _scale(S2)
    for S, s in ((S1, s1), (S2, s2)):
        if frobenius(S.imag) > tol.membership_tol * s:
            raise NotSymmetric("matrix has a non-negligible imaginary part")
        if frobenius(S - S.T) > tol.membership_tol * s:
            raise NotSymmetric("matrix is not symmetric")
    if frobenius(S1 @ S2 - S2 @ S1) > 100.0 * tol.membership_tol * s1 * s2:
        raise NotCommuting("matrices do not commute")

    A1 = S1.real
    A2 = S2.real
    for mu in _MIX_WEIGHTS:
        _, B = np.linalg.eigh(A1 / s1 + mu * (A2 / s2))
        D1 = B.T @ A1 @ B
        D2 = B.T @ A2 @ B
        if (
            _offdiag_norm(D1) <= tol.membership_tol * s1
            and _offdiag_norm(D2) <= tol.membership_tol * s2
        ):
            if np.linalg.det(B) < 0.0:
                B = B.copy()
                B[:, -1] = -B[:, -1]
            return B, np.diagonal(D1).copy(), np.diagonal(D2).copy()
    raise NoConvergence("no mixing weight split the joint eigenbasis")


def matrix_to_json(m) -> dict:
    """Serialize a square complex matrix as {"n":..., "entries":[[re,im],...]}."""
    m = as_matrix(m)
    entries = [[float(z.real), float(z.imag)] for z in m.ravel()]
    return {"n": int(m.shape[0]), "entries": entries}


def matrix_from_json(doc: dict) -> np.ndarray:
    """Parse the matrix JSON format back into a complex array."""
    n = int(doc["n"])
    entries = doc["entries"]
    if n < 1 or len(entries) != n * n:
        raise ValueError(f"expected {n * n} entries for side {n}, got {len(entries)}")
    flat = np.array([complex(re, im) for re, im in entries])
    return as_matrix(flat.reshape(n, n))
