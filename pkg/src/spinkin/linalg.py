"""Dense complex linear-algebra kernel: matrix exponentials, nullspaces, Kronecker
products, anti-linear maps, and the repo-wide matrix JSON schema.

All operations are pure functions on immutable values (inputs are never mutated,
outputs are fresh arrays), so everything here is safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "expm",
    "expm_hermitian",
    "expm_i_hermitian",
    "nullspace",
    "kron",
    "AntiLinearMap",
    "antilinear_compose",
    "commutator",
    "anticommutator",
    "frob",
    "matrix_to_json",
    "matrix_from_json",
    "vector_to_json",
    "vector_from_json",
]

# Padé order used by expm (scaling-and-squaring, fixed order 13, Higham 2005
# coefficients). theta13 is the 1-norm bound below which no scaling is needed.
EXPM_PADE_ORDER = 13
_THETA13 = 5.371920351148152
_PADE13 = (
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
)


def _as_square(M: np.ndarray, name: str = "matrix") -> np.ndarray:
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"{name} must be square, got shape {M.shape}")
    if not np.all(np.isfinite(M.view(float))):
        raise ValueError(f"{name} has non-finite entries")
    return M


def expm(M: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring with a fixed order-13 Padé core."""
    M = _as_square(M)
    n = M.shape[0]
    norm1 = np.linalg.norm(M, 1)
    s = 0
    if norm1 > _THETA13:
        s = int(np.ceil(np.log2(norm1 / _THETA13)))
    A = M / (2.0**s)
    b = _PADE13
    I = np.eye(n, dtype=complex)
    A2 = A @ A
    A4 = A2 @ A2
    A6 = A4 @ A2
    U = A @ (A6 @ (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I)
    V = A6 @ (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I
    F = np.linalg.solve(V - U, V + U)
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(s):
            F = F @ F
    if not np.all(np.isfinite(F.view(float))):
        raise ValueError("matrix exponential overflowed after scaling")
    return F


def expm_hermitian(H: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """exp(H) for Hermitian H via eigendecomposition (exactly positive definite)."""
    H = _as_square(H)
    if np.linalg.norm(H - H.conj().T) > tol * max(1.0, np.linalg.norm(H)):
        raise ValueError("matrix is not Hermitian")
    w, U = np.linalg.eigh(H)
    if w.max(initial=0.0) > 700.0:
        raise ValueError("matrix exponential overflows double precision")
    return (U * np.exp(w)) @ U.conj().T


def expm_i_hermitian(H: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """exp(iH) for Hermitian H via eigendecomposition (exactly unitary spectrum)."""
    H = _as_square(H)
    if np.linalg.norm(H - H.conj().T) > tol * max(1.0, np.linalg.norm(H)):
        raise ValueError("matrix is not Hermitian")
    w, U = np.linalg.eigh(H)
    return (U * np.exp(1j * w)) @ U.conj().T


def nullspace(M: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Orthonormal basis of the numerical kernel of M, as columns.

    Singular values below tol times the largest singular value count as zero.
    Returns an (n, k) array; k = 0 for an injective map, k = n for the zero map.
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {M.shape}")
    if not np.all(np.isfinite(M.view(float))):
        raise ValueError("matrix has non-finite entries")
    n = M.shape[1]
    if M.size == 0:
        return np.eye(n, dtype=complex)
    _, s, Vh = np.linalg.svd(M)
    smax = s[0] if s.size else 0.0
    if smax == 0.0:
        return np.eye(n, dtype=complex)
    rank = int(np.sum(s > tol * smax))
    return Vh[rank:].conj().T


def kron(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Kronecker product; dimensions multiply."""
    return np.kron(np.asarray(A, dtype=complex), np.asarray(B, dtype=complex))


@dataclass(frozen=True)
class AntiLinearMap:
    """Anti-linear map psi -> matrix @ conj(psi).

    Anti-linearity A(c*psi) = conj(c)*A(psi) holds by construction.
    """

    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix", _as_square(self.matrix, "linear part"))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, psi: np.ndarray) -> np.ndarray:
        return self.matrix @ np.conj(np.asarray(psi, dtype=complex))

    def squared(self) -> np.ndarray:
        """The linear map A o A, with matrix M conj(M)."""
        return antilinear_compose(self, self)

    def conjugated_by(self, B: np.ndarray) -> "AntiLinearMap":
        """B o A o B^-1 as an anti-linear map: matrix B M conj(B)^-1."""
        B = _as_square(B)
        return AntiLinearMap(B @ self.matrix @ np.linalg.inv(np.conj(B)))


def antilinear_compose(A: AntiLinearMap, B: AntiLinearMap) -> np.ndarray:
    """Linear part of the composition A o B, i.e. M_A conj(M_B)."""
    if A.dim != B.dim:
        raise ValueError(f"dimension mismatch: {A.dim} vs {B.dim}")
    return A.matrix @ np.conj(B.matrix)


def commutator(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return A @ B - B @ A


def anticommutator(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return A @ B + B @ A


def frob(M: np.ndarray) -> float:
    return float(np.linalg.norm(M, "fro"))


# ---------------------------------------------------------------------------
# Repo-wide matrix JSON schema: {"rows": n, "cols": n, "data": [[re, im], ...]}
# row-major. Floats round-trip bit-exactly through repr/json.

def matrix_to_json(M: np.ndarray) -> dict:
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {M.shape}")
    data = [[float(z.real), float(z.imag)] for z in M.reshape(-1)]
    return {"rows": int(M.shape[0]), "cols": int(M.shape[1]), "data": data}


def matrix_from_json(obj: dict) -> np.ndarray:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    data = obj["data"]
    if len(data) != rows * cols:
        raise ValueError(f"data length {len(data)} does not match {rows}x{cols}")
    flat = np.array([complex(re, im) for re, im in data], dtype=complex)
    return flat.reshape(rows, cols)


def vector_to_json(v: np.ndarray) -> list:
    v = np.asarray(v, dtype=complex).reshape(-1)
    return [[float(z.real), float(z.imag)] for z in v]


def vector_from_json(obj: list) -> np.ndarray:
    return np.array([complex(re, im) for re, im in obj], dtype=complex)
