"""Matrix models of the two quotient families.

A point of the symmetric family AI(n) is a transpose-symmetric special
unitary matrix in SU(n); a point of the twisted family AII(n) is a matrix
X in SU(2n) obeying tX = J X tJ for the structural block matrix J.
This module provides the membership predicates, J itself, Haar sampling
through the transitive group actions, and the quaternion-block embedding
of the compact symplectic group.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionMismatch, NotSymplectic
from .linalg_core import (
    DEFAULT_TOLERANCES,
    Tolerances,
    as_matrix,
    frobenius,
    matrix_from_json,
    matrix_to_json,
)


class Family(str, Enum):
    AI = "AI"
    AII = "AII"


@dataclass(frozen=True)
class SpaceKind:
    """Tagged descriptor selecting the family and its parameter n.

    AI(n) lives in SU(n); AII(n) lives in SU(2n), so the ambient matrix
    side is n or 2n respectively.
    """

    family: Family
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be a positive integer")

    @property
    def ambient_size(self) -> int:
        return self.n if self.family is Family.AI else 2 * self.n

    @classmethod
    def ai(cls, n: int) -> "SpaceKind":
        return cls(Family.AI, n)

    @classmethod
    def aii(cls, n: int) -> "SpaceKind":
        return cls(Family.AII, n)


@dataclass(frozen=True)
class SpacePoint:
    """A kind together with an ambient matrix of the matching side.

    Construction checks only the dimension; run is_member for the laws.
    """

    kind: SpaceKind
    matrix: np.ndarray

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if m.shape[0] != self.kind.ambient_size:
            raise DimensionMismatch(
                f"{self.kind.family.value}({self.kind.n}) needs side "
                f"{self.kind.ambient_size}, got {m.shape[0]}"
            )
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class MembershipReport:
    """Per-law residuals and the resulting verdict."""

    unitarity: float
    determinant: float
    symmetry: float
    member: bool

    @property
    def max_residual(self) -> float:
        return max(self.unitarity, self.determinant, self.symmetry)


def structural_J(n: int) -> np.ndarray:
    """The 2n x 2n block matrix with -E in the upper right, E lower left.

    Satisfies J tJ = E, J^2 = -E and det(J) = 1.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    J = np.zeros((2 * n, 2 * n), dtype=complex)
    J[:n, n:] = -np.eye(n)
    J[n:, :n] = np.eye(n)
    return J


def is_member(kind: SpaceKind, X, tol: Tolerances = DEFAULT_TOLERANCES) -> MembershipReport:
    """Check the three membership laws and report individual residuals.

    Unitarity ||X X* - E||, determinant |det X - 1|, and the family's
    symmetry law: ||tX - X|| for AI, ||tX - J X tJ|| for AII.  The verdict
    is true when all residuals are at most membership_tol.
    """
    X = as_matrix(X)
    m = kind.ambient_size
    if X.shape[0] != m:
        raise DimensionMismatch(f"expected side {m}, got {X.shape[0]}")
    unitarity = frobenius(X @ X.conj().T - np.eye(m))
    determinant = float(abs(np.linalg.det(X) - 1.0))
    if kind.family is Family.AI:
        symmetry = frobenius(X.T - X)
    else:
        J = structural_J(kind.n)
        symmetry = frobenius(X.T - J @ X @ J.T)
    member = max(unitarity, determinant, symmetry) <= tol.membership_tol
    return MembershipReport(unitarity, determinant, symmetry, member)


def haar_special_unitary(m: int, rng: np.random.Generator) -> np.ndarray:
    """Draw a Haar-uniform element of SU(m).

    QR of a complex Ginibre matrix with the R-diagonal phases folded into
    Q gives Haar on U(m); dividing by an m-th root of the determinant
    lands in SU(m).
    """
    z = (rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    q = q * np.exp(-1j * np.angle(np.linalg.det(q)) / m)
    return q


def sample_points(
    kind: SpaceKind,
    count: int,
    seed: int,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> list[SpacePoint]:
    """Draw count points of the space, deterministically from the seed.

    AI: X = P tP and AII: X = J (P J tP) for Haar P; both formulas push the
    Haar measure through the transitive action, so every output passes
    is_member.
    """
    rng = np.random.default_rng(seed)
    m = kind.ambient_size
    out = []
    for _ in range(count):
        P = haar_special_unitary(m, rng)
        if kind.family is Family.AI:
            X = P @ P.T
        else:
            J = structural_J(kind.n)
            X = J @ (P @ J @ P.T)
        out.append(SpacePoint(kind, X))
    return out


def sample(kind: SpaceKind, seed: int, tol: Tolerances = DEFAULT_TOLERANCES) -> SpacePoint:
    """Draw a single point; equals sample_points(kind, 1, seed)[0]."""
    return sample_points(kind, 1, seed, tol)[0]


def symplectic_embed(A, B, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Embed the quaternion matrix with complex blocks (A, B) into SU(2n).

    Returns the block matrix [[A, -conj(B)], [B, conj(A)]].  For a
    quaternion-unitary input the result is unitary and preserves J under
    congruence, which is verified post hoc; NotSymplectic is raised when
    the J-preservation residual exceeds tolerance.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise DimensionMismatch("blocks A and B must have equal square shapes")
    n = A.shape[0]
    M = np.block([[A, -B.conj()], [B, A.conj()]])
    J = structural_J(n)
    residual = frobenius(M @ J @ M.T - J)
    if residual > 100.0 * tol.membership_tol * max(frobenius(M), 1.0):
        raise NotSymplectic(
            f"embedded blocks do not preserve J (residual {residual:.3e})"
        )
    return M


def point_to_json(point: SpacePoint) -> dict:
    return {
        "family": point.kind.family.value,
        "n": int(point.kind.n),
        "matrix": matrix_to_json(point.matrix),
    }


def point_from_json(doc: dict) -> SpacePoint:
    kind = SpaceKind(Family(doc["family"]), int(doc["n"]))
    return SpacePoint(kind, matrix_from_json(doc["matrix"]))
