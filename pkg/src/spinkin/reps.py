"""Generators of the (j,0)+(0,j) and (j,0)x(0,j) representations and the 4-vector
representation.

Conventions: the top block is the right-handed (j,0) component, boosted by
exp(+J.phi); inside each block the basis is the J_z eigenbasis descending from
+j to -j; the metric signature is (+,-,-,-).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "HalfInt",
    "pauli_matrices",
    "spin_matrices",
    "RepGenerators",
    "rep_generators",
    "LorentzTransform",
    "vector_boost",
    "vector_rotation",
    "tensor_rep_generators",
    "MINKOWSKI_METRIC",
]

MINKOWSKI_METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True, order=True)
class HalfInt:
    """Spin label j stored as twice its value, so j = twice/2 with twice >= 1."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int) or self.twice < 1:
            raise ValueError(f"twice must be a positive integer, got {self.twice!r}")

    @property
    def j(self) -> float:
        return self.twice / 2.0

    @property
    def block_dim(self) -> int:
        """Dimension 2j+1 of one chiral block."""
        return self.twice + 1

    @property
    def dim(self) -> int:
        """Dimension 2(2j+1) of the (j,0)+(0,j) representation."""
        return 2 * (self.twice + 1)

    @classmethod
    def coerce(cls, value) -> "HalfInt":
        """Accept a HalfInt, an int/float spin value, or a string like '3/2'."""
        if isinstance(value, cls):
            return value
        twice = Fraction(value) * 2
        if twice.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer spin")
        return cls(int(twice))

    def __str__(self) -> str:
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"


def pauli_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    return sx, sy, sz


def spin_matrices(j) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Hermitian angular-momentum matrices (J_x, J_y, J_z) of dimension 2j+1.

    J_z = diag(j, j-1, ..., -j); ladder coefficients sqrt(j(j+1) - m(m+1)).
    For j = 1/2 this returns the Pauli matrices over 2.
    """
    j = HalfInt.coerce(j)
    d = j.block_dim
    m = j.j - np.arange(d)
    Jz = np.diag(m).astype(complex)
    Jp = np.zeros((d, d), dtype=complex)
    for k in range(1, d):
        Jp[k - 1, k] = np.sqrt(j.j * (j.j + 1) - m[k] * (m[k] + 1))
    Jm = Jp.conj().T
    Jx = (Jp + Jm) / 2.0
    Jy = (Jp - Jm) / 2.0j
    return Jx, Jy, Jz


@dataclass(frozen=True)
class RepGenerators:
    """Rotation/boost generators and the chiral block swap eta on (j,0)+(0,j).

    J_a = diag(J_a, J_a), K_a = diag(-i J_a, +i J_a), eta = offdiag(I, I);
    eta commutes with rotations and anti-commutes with boosts.
    """

    j: HalfInt
    dim: int
    J: tuple[np.ndarray, np.ndarray, np.ndarray]
    K: tuple[np.ndarray, np.ndarray, np.ndarray]
    eta: np.ndarray

    def J_dot(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        return sum(self.J[a] * theta[a] for a in range(3))

    def K_dot(self, phi) -> np.ndarray:
        phi = np.asarray(phi, dtype=float)
        return sum(self.K[a] * phi[a] for a in range(3))


def rep_generators(j) -> RepGenerators:
    """Build the (j,0)+(0,j) generators with the block conventions above."""
    j = HalfInt.coerce(j)
    Jx, Jy, Jz = spin_matrices(j)
    d = j.block_dim
    Z = np.zeros((d, d), dtype=complex)
    I = np.eye(d, dtype=complex)
    J = tuple(np.block([[a, Z], [Z, a]]) for a in (Jx, Jy, Jz))
    K = tuple(np.block([[-1j * a, Z], [Z, 1j * a]]) for a in (Jx, Jy, Jz))
    eta = np.block([[Z, I], [I, Z]])
    return RepGenerators(j=j, dim=j.dim, J=J, K=K, eta=eta)


@dataclass(frozen=True)
class LorentzTransform:
    """4x4 real matrix acting on (p0, p1, p2, p3) with metric (+,-,-,-)."""

    matrix: np.ndarray

    def __post_init__(self):
        M = np.asarray(self.matrix, dtype=float)
        if M.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {M.shape}")
        object.__setattr__(self, "matrix", M)

    def metric_residual(self) -> float:
        """|| Lambda^T g Lambda - g ||, zero for a true Lorentz transform."""
        g = MINKOWSKI_METRIC
        return float(np.linalg.norm(self.matrix.T @ g @ self.matrix - g))

    def apply(self, fourvec: np.ndarray) -> np.ndarray:
        return self.matrix @ np.asarray(fourvec, dtype=float)

    def compose(self, other: "LorentzTransform") -> "LorentzTransform":
        return LorentzTransform(self.matrix @ other.matrix)


RAPIDITY_MAX = 30.0


def vector_boost(phi) -> LorentzTransform:
    """Pure boost with rapidity vector phi: cosh/sinh entries along phi-hat.

    Maps the rest momentum (m, 0) to (m cosh phi, m sinh phi phi-hat).
    """
    phi = np.asarray(phi, dtype=float)
    if phi.shape != (3,) or not np.all(np.isfinite(phi)):
        raise ValueError("rapidity must be a finite 3-vector")
    r = float(np.linalg.norm(phi))
    if r > RAPIDITY_MAX:
        raise ValueError(f"rapidity {r:.3f} exceeds the overflow cap {RAPIDITY_MAX}")
    L = np.eye(4)
    if r == 0.0:
        return LorentzTransform(L)
    n = phi / r
    L[0, 0] = np.cosh(r)
    L[0, 1:] = np.sinh(r) * n
    L[1:, 0] = np.sinh(r) * n
    L[1:, 1:] = np.eye(3) + (np.cosh(r) - 1.0) * np.outer(n, n)
    return LorentzTransform(L)


def vector_rotation(theta) -> LorentzTransform:
    """Spatial rotation by angle |theta| about theta-hat (right-hand rule)."""
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (3,) or not np.all(np.isfinite(theta)):
        raise ValueError("rotation vector must be a finite 3-vector")
    ang = float(np.linalg.norm(theta))
    L = np.eye(4)
    if ang == 0.0:
        return LorentzTransform(L)
    n = theta / ang
    X = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
    L[1:, 1:] = np.eye(3) + np.sin(ang) * X + (1.0 - np.cos(ang)) * (X @ X)
    return LorentzTransform(L)


def tensor_rep_generators(j) -> tuple[tuple[np.ndarray, ...], tuple[np.ndarray, ...]]:
    """Generators (J, K) of (j,0)x(0,j) on the (2j+1)^2-dimensional space.

    K = (-iJ) x I + I x (+iJ) and J = J x I + I x J as Kronecker sums.
    """
    j = HalfInt.coerce(j)
    Jx, Jy, Jz = spin_matrices(j)
    I = np.eye(j.block_dim, dtype=complex)
    Jt = tuple(np.kron(a, I) + np.kron(I, a) for a in (Jx, Jy, Jz))
    Kt = tuple(np.kron(-1j * a, I) + np.kron(I, 1j * a) for a in (Jx, Jy, Jz))
    return Jt, Kt
