"""Eigenvalue-avoidance covers of the two families.

The cover for parameter n consists of the n open sets
A_r = { members X : lambda_r is not an eigenvalue of X } for unit-modulus
lambda_1, ..., lambda_n.  The default choice lambda_r = e^{i pi/(2n)}
e^{2 pi i r/n} keeps the lambdas equally spaced and certifies both
non-unit-product conditions at once: the plain product is +-i (symmetric
family) and the squared product is -1 (twisted family), so no member can
have all the lambdas as eigenvalues and the A_r cover the space.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotInSpace, OddMultiplicity
from .linalg_core import (
    DEFAULT_TOLERANCES,
    Tolerances,
    angular_distance,
    cluster_angles,
    eig_normal,
    frobenius,
)
from .spaces import Family, SpaceKind, SpacePoint, is_member, sample_points


@dataclass(frozen=True)
class CoverConfig:
    """Avoided eigenvalues and the non-unit-product certificate."""

    kind: SpaceKind
    lambdas: tuple[complex, ...]
    certificate: complex


@dataclass(frozen=True)
class CoverClassification:
    """Per-set membership, angular margins, and the recommended set index."""

    memberships: tuple[bool, ...]
    margins: tuple[float, ...]
    witness: int


@dataclass(frozen=True)
class CoverAuditReport:
    kind: SpaceKind
    trials: int
    covered_fraction: float
    occupancy: tuple[int, ...]
    min_witness_margin: float


def default_cover(kind: SpaceKind) -> CoverConfig:
    """The standard cover lambda_r = e^{i pi/(2n)} e^{2 pi i r/n}, r = 1..n."""
    n = kind.n
    lambdas = tuple(
        complex(np.exp(1j * (np.pi / (2 * n) + 2 * np.pi * r / n)))
        for r in range(1, n + 1)
    )
    product = complex(np.prod(np.array(lambdas)))
    certificate = product if kind.family is Family.AI else product**2
    return CoverConfig(kind=kind, lambdas=lambdas, certificate=certificate)


def classify(
    config: CoverConfig, point: SpacePoint, tol: Tolerances = DEFAULT_TOLERANCES
) -> CoverClassification:
    """Angular margins of the spectrum against each avoided eigenvalue.

    memberships[r] holds when the margin is at least branch_margin; the
    witness maximizes the margin, ties going to the lowest index.  Works
    for any unitary of the right side (membership in the space itself is
    not required), so impossibility certificates can be classified too.
    """
    if point.kind != config.kind:
        raise DimensionMismatch(
            f"point kind {point.kind} does not match cover kind {config.kind}"
        )
    X = point.matrix
    m = config.kind.ambient_size
    if frobenius(X @ X.conj().T - np.eye(m)) > 100.0 * tol.membership_tol * max(
        frobenius(X), 1.0
    ):
        raise NotInSpace("classification needs a unitary matrix")
    angles = np.angle(eig_normal(X, tol).eigenvalues)
    margins = tuple(
        float(np.min(angular_distance(angles, np.angle(lam))))
        for lam in config.lambdas
    )
    memberships = tuple(margin >= tol.branch_margin for margin in margins)
    witness = int(np.argmax(margins))
    return CoverClassification(memberships=memberships, margins=margins, witness=witness)


def multiplicity_audit(
    point: SpacePoint, tol: Tolerances = DEFAULT_TOLERANCES
) -> list[tuple[complex, int]]:
    """Clustered spectrum of a twisted-family member with multiplicities.

    Every eigenvalue of an AII member has even multiplicity (conjugating an
    eigenvector by J yields an independent one), so any odd cluster means a
    clustering failure or a non-member and raises OddMultiplicity.
    """
    if point.kind.family is not Family.AII:
        raise DimensionMismatch("multiplicity audit applies to AII points")
    report = is_member(point.kind, point.matrix, tol)
    if not report.member:
        raise NotInSpace(
            f"input fails the membership laws (max residual {report.max_residual:.3e})"
        )
    eig = eig_normal(point.matrix, tol).eigenvalues
    angles = np.angle(eig)
    out = []
    for cluster in cluster_angles(angles, tol.cluster_tol):
        spread = float(np.max(angular_distance(angles[cluster][:, None], angles[cluster])))
        if spread > 10.0 * tol.cluster_tol:
            raise OddMultiplicity(
                f"cluster spread {spread:.3e} exceeds 10x cluster_tol"
            )
        if len(cluster) % 2:
            raise OddMultiplicity(
                f"eigenvalue cluster of odd size {len(cluster)} found"
            )
        rep = complex(np.mean(eig[cluster]))
        rep /= abs(rep)
        out.append((rep, int(len(cluster))))
    return out


def cover_audit(
    kind: SpaceKind,
    trials: int,
    seed: int,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> CoverAuditReport:
    """Sample members and classify each against the default cover.

    Reports the covered fraction (provably 1.0; anything less is a bug),
    how many samples landed in each set, and the smallest witness margin
    observed.
    """
    if trials < 1:
        raise ValueError("trials must be a positive integer")
    config = default_cover(kind)
    occupancy = [0] * kind.n
    covered = 0
    min_witness_margin = np.inf
    for point in sample_points(kind, trials, seed, tol):
        cls = classify(config, point, tol)
        if any(cls.memberships):
            covered += 1
        for r, hit in enumerate(cls.memberships):
            occupancy[r] += int(hit)
        min_witness_margin = min(min_witness_margin, cls.margins[cls.witness])
    return CoverAuditReport(
        kind=kind,
        trials=trials,
        covered_fraction=covered / trials,
        occupancy=tuple(occupancy),
        min_witness_margin=float(min_witness_margin),
    )
