"""Constructive congruence factorizations of the two matrix families.

factor_symmetric writes a symmetric special unitary X as P tP, and
factor_skew writes a skew-symmetric special unitary X as P J tP, with
P special unitary in both cases; factor_aii composes the skew case with
the twist by J that defines the AII model.

The symmetric algorithm jointly diagonalizes the commuting real symmetric
matrices X + conj(X) and i(X - conj(X)) by a rotation B, halves the
resulting unit eigenvalues with square roots whose product is fixed to 1,
and returns P = B C.

The skew algorithm pairs each eigenvector v (eigenvalue lam) with conj(v)
(eigenvalue -lam), builds the real orthonormal vectors
w = (v + conj(v))/sqrt(2) and w' = -i(v - conj(v))/sqrt(2), assembles them
into a rotation B, and scales by C = diag(c, c) with c_k^2 = i lam_k so
that tB X B = C J tC.

A genuine obstruction lives in the skew case: det(B C) = +-1 is a
congruence invariant of X, and the skew special unitary matrices split
into two orbits accordingly.  Only the orbit of J itself (the one
containing every sampled AII pullback) admits P in SU(2n); for the other
orbit the advertised determinant repair provably breaks the reconstruction
identity, so factor_skew raises ComponentObstruction instead of returning
a wrong factor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ComponentObstruction,
    DimensionMismatch,
    NoConvergence,
    NotInSpace,
    OddPairingFailure,
    RootProductFailure,
)
from .linalg_core import (
    DEFAULT_TOLERANCES,
    TWO_PI,
    Tolerances,
    angular_distance,
    as_matrix,
    cluster_angles,
    eig_normal,
    frobenius,
    simdiag_real_symmetric,
)
from .spaces import Family, SpaceKind, SpacePoint, is_member, structural_J


@dataclass(frozen=True)
class FactorizationIntermediates:
    """Diagnostic record: rotation B, diagonal factor C, chosen roots."""

    B: np.ndarray
    C: np.ndarray
    roots: np.ndarray


@dataclass(frozen=True)
class FactorizationResult:
    """Special unitary factor P and the Frobenius reconstruction residual."""

    P: np.ndarray
    residual: float
    intermediates: FactorizationIntermediates | None = None


def _half_angle_roots(values: np.ndarray) -> np.ndarray:
    """Square roots of unit-modulus values, argument halved into [0, pi)."""
    return np.exp(0.5j * np.mod(np.angle(values), TWO_PI))


def factor_symmetric(X, tol: Tolerances = DEFAULT_TOLERANCES) -> FactorizationResult:
    """Factor a symmetric special unitary X as P tP with P in SU(n)."""
    X = as_matrix(X)
    n = X.shape[0]
    report = is_member(SpaceKind.ai(n), X, tol)
    if not report.member:
        raise NotInSpace(
            "input is not a symmetric special unitary matrix "
            f"(max residual {report.max_residual:.3e})"
        )

    B, a, b = simdiag_real_symmetric(X + X.conj(), 1j * (X - X.conj()), tol)
    mu = (a - 1j * b) / 2.0
    det_x = np.linalg.det(X)
    if abs(np.prod(mu) - det_x) > 100.0 * tol.membership_tol:
        raise RootProductFailure("diagonalized eigenvalues do not multiply to det X")

    roots = _half_angle_roots(mu)
    prod = np.prod(roots)
    # prod is +-1 up to roundoff; one sign flip restores the +1 branch.
    if abs(prod + 1.0) < abs(prod - 1.0):
        roots[-1] = -roots[-1]
        prod = -prod
    if abs(prod - 1.0) > 100.0 * tol.membership_tol:
        raise RootProductFailure("root product could not be normalized to 1")

    P = B * roots
    residual = frobenius(X - P @ P.T)
    if residual > 10.0 * tol.membership_tol * max(frobenius(X), 1.0):
        raise NoConvergence(f"symmetric factorization residual {residual:.3e}")
    return FactorizationResult(
        P=P,
        residual=residual,
        intermediates=FactorizationIntermediates(B=B, C=np.diag(roots), roots=roots),
    )


def block_swap_repair(C: np.ndarray) -> np.ndarray:
    """Multiply C by the coordinate swap of positions 0 and n.

    Flips the sign of det(C); applying it twice returns the original C.
    """
    C = as_matrix(C)
    m = C.shape[0]
    if m % 2:
        raise DimensionMismatch("repair needs an even side")
    n = m // 2
    K = np.eye(m)
    K[0, 0] = K[n, n] = 0.0
    K[0, n] = K[n, 0] = 1.0
    return C @ K


def _conjugation_pairs(X, dec, tol: Tolerances):
    """Pick one eigenvector per conjugation pair (v, conj v).

    Clusters the eigenvalue angles, keeps the clusters whose representative
    angle lies in [0, pi) (exactly one of each opposite pair does), and
    checks that the opposite cluster exists with equal size.  Returns the
    chosen eigenvalues and eigenvectors.
    """
    angles = np.angle(dec.eigenvalues)
    clusters = cluster_angles(angles, tol.cluster_tol)
    reps = np.array(
        [float(np.angle(np.mean(np.exp(1j * angles[c])))) for c in clusters]
    )
    chosen = [i for i, rep in enumerate(reps) if 0.0 <= rep < np.pi]
    matched = set()
    for i in chosen:
        partner = None
        for j in range(len(clusters)):
            if j in chosen or j in matched:
                continue
            if angular_distance(reps[j], reps[i] - np.pi) <= 10.0 * tol.cluster_tol:
                partner = j
                break
        if partner is None or len(clusters[partner]) != len(clusters[i]):
            raise OddPairingFailure(
                "eigenvalues do not pair under negation; spectrum is not skew-like"
            )
        matched.add(partner)
    if len(matched) + len(chosen) != len(clusters):
        raise OddPairingFailure("some eigenvalue clusters were left unpaired")

    idx = np.concatenate([clusters[i] for i in chosen])
    vs = dec.P[:, idx]
    lams = np.einsum("ij,ij->j", vs.conj(), X @ vs)
    return lams, vs


def factor_skew(X, tol: Tolerances = DEFAULT_TOLERANCES) -> FactorizationResult:
    """Factor a skew-symmetric special unitary X as P J tP with P in SU(2n).

    Raises ComponentObstruction when X lies in the congruence orbit not
    containing J, where no such P exists.
    """
    X = as_matrix(X)
    m = X.shape[0]
    if m % 2:
        raise DimensionMismatch("skew special unitary matrices have even side")
    n = m // 2
    unitarity = frobenius(X @ X.conj().T - np.eye(m))
    determinant = float(abs(np.linalg.det(X) - 1.0))
    skewness = frobenius(X.T + X)
    if max(unitarity, determinant, skewness) > tol.membership_tol:
        raise NotInSpace(
            "input is not a skew-symmetric special unitary matrix "
            f"(residuals {unitarity:.3e}/{determinant:.3e}/{skewness:.3e})"
        )

    dec = eig_normal(X, tol)
    lams, vs = _conjugation_pairs(X, dec, tol)
    if lams.shape[0] != n:
        raise OddPairingFailure(f"expected {n} pairs, found {lams.shape[0]}")

    # Real orthonormal basis, one (w, w') pair per eigenvector.
    w = np.sqrt(2.0) * vs.real
    wp = np.sqrt(2.0) * vs.imag
    B = np.empty((m, m))
    B[:, :n] = w
    B[:, n:] = wp
    if frobenius(B.T @ B - np.eye(m)) > 100.0 * tol.membership_tol:
        raise OddPairingFailure("paired basis lost orthonormality")

    if np.linalg.det(B) < 0.0:
        # Swapping v_1 with conj(v_1) negates lam_1 and the first w' column.
        lams[0] = -lams[0]
        B[:, n] = -B[:, n]

    roots = _half_angle_roots(1j * lams)
    C = np.diag(np.concatenate([roots, roots]))
    det_c = np.prod(roots) ** 2
    repaired = False
    if det_c.real < 0.0:
        C = block_swap_repair(C)
        repaired = True

    J = structural_J(n)
    P = B @ C
    residual = frobenius(X - P @ J @ P.T)
    if residual > 10.0 * tol.membership_tol * max(frobenius(X), 1.0):
        if repaired:
            raise ComponentObstruction(
                "det(B C) = -1: the input lies in the skew congruence orbit "
                "that admits no factor P in SU(2n)"
            )
        raise NoConvergence(f"skew factorization residual {residual:.3e}")
    return FactorizationResult(
        P=P,
        residual=residual,
        intermediates=FactorizationIntermediates(B=B, C=C, roots=roots),
    )


def factor_aii(point: SpacePoint, tol: Tolerances = DEFAULT_TOLERANCES) -> FactorizationResult:
    """Factor an AII member X as J P J tP by pulling back to the skew model.

    Y = tJ X is skew-symmetric special unitary whenever X is a member; the
    skew factor P then reconstructs X as J (P J tP).
    """
    if point.kind.family is not Family.AII:
        raise DimensionMismatch("factor_aii expects an AII point")
    report = is_member(point.kind, point.matrix, tol)
    if not report.member:
        raise NotInSpace(
            f"input fails the AII membership laws (max residual {report.max_residual:.3e})"
        )
    J = structural_J(point.kind.n)
    Y = J.T @ point.matrix
    inner = factor_skew(Y, tol)
    residual = frobenius(point.matrix - J @ inner.P @ J @ inner.P.T)
    return FactorizationResult(
        P=inner.P, residual=residual, intermediates=inner.intermediates
    )
