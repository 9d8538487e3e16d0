"""Charge conjugation, Elko eigenspinor bases, the basis-dependent G operator,
the Schur rotation-invariance conditions, and numerical certification of the
spin-1/2 no-go results (no anti-linear fully kinematic operator; no rotation-
invariant G from a genuine basis; direction dependence at the origin).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kinematics import KinematicOperatorFamily, rotation_matrix
from .linalg import AntiLinearMap, nullspace
from .reps import HalfInt, RepGenerators, pauli_matrices, rep_generators

__all__ = [
    "THETA",
    "wigner_theta",
    "charge_conjugation",
    "Cx2Basis",
    "ElkoBasis",
    "elko_pair",
    "elko_basis",
    "g_operator",
    "schur_conditions",
    "schur_condition_family",
    "rotation_commutant_residual",
    "nogo_witness",
    "nogo_monte_carlo",
    "antilinear_rest_map",
    "antilinear_family",
    "antilinear_kinematic_solutions",
    "AntilinearSolutionSpace",
    "helicity_spinors",
    "helicity_g",
    "helicity_origin_discontinuity",
]

# Wigner time-reversal matrix: Theta^2 = -I and Theta J Theta^-1 = -conj(J)
# for the spin-1/2 generators.
THETA = np.array([[0.0, -1.0], [1.0, 0.0]], dtype=complex)


def wigner_theta() -> np.ndarray:
    return THETA.copy()


def charge_conjugation() -> AntiLinearMap:
    """C = offdiag(i Theta, -i Theta) o K; anti-linear with C^2 = I."""
    Z = np.zeros((2, 2), dtype=complex)
    return AntiLinearMap(np.block([[Z, 1j * THETA], [-1j * THETA, Z]]))


@dataclass(frozen=True)
class Cx2Basis:
    """A pair u, v in C^2; a genuine basis when det [u v] != 0."""

    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.u, dtype=complex).reshape(2)
        v = np.asarray(self.v, dtype=complex).reshape(2)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def det(self) -> complex:
        """det of the column matrix [u v] = a d - b c."""
        return complex(self.u[0] * self.v[1] - self.u[1] * self.v[0])

    def require_nondegenerate(self, tol: float = 1e-10):
        if abs(self.det) <= tol:
            raise ValueError(f"u, v are degenerate: |det| = {abs(self.det):.3e}")


@dataclass(frozen=True)
class ElkoBasis:
    """The four charge-conjugation eigenspinors built from a C^2 pair:
    C-eigenvalue +1 on u_plus/v_plus, -1 on u_minus/v_minus."""

    u_plus: np.ndarray
    u_minus: np.ndarray
    v_plus: np.ndarray
    v_minus: np.ndarray

    def stack(self) -> np.ndarray:
        """Columns ordered (u+, v+, u-, v-), matching diag(1, 1, -1, -1)."""
        return np.column_stack([self.u_plus, self.v_plus, self.u_minus, self.v_minus])


def elko_pair(u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(+-i Theta conj(u), u) stacked as 4-spinors; the map u -> output is
    non-linear in u (it involves conj(u))."""
    u = np.asarray(u, dtype=complex).reshape(2)
    top = THETA @ np.conj(u)
    return np.concatenate([1j * top, u]), np.concatenate([-1j * top, u])


def elko_basis(basis: Cx2Basis) -> ElkoBasis:
    basis.require_nondegenerate()
    up, um = elko_pair(basis.u)
    vp, vm = elko_pair(basis.v)
    return ElkoBasis(u_plus=up, u_minus=um, v_plus=vp, v_minus=vm)


def g_operator(basis: Cx2Basis) -> np.ndarray:
    """The unique linear operator with eigenvalue +1 on u_plus/v_plus and -1 on
    u_minus/v_minus, i.e. diag(1, 1, -1, -1) in the Elko basis.

    Closed form in u = (a, b), v = (c, d); every entry is i times a difference
    x - conj(x) over det [u v] (or its conjugate in the lower block).
    """
    basis.require_nondegenerate()
    a, b = basis.u
    c, d = basis.v
    cj = np.conj
    det = basis.det
    detb = cj(det)
    G = np.zeros((4, 4), dtype=complex)
    G[0, 2] = 1j * (b * cj(d) - d * cj(b)) / det
    G[0, 3] = 1j * (c * cj(b) - a * cj(d)) / det
    G[1, 2] = 1j * (d * cj(a) - b * cj(c)) / det
    G[1, 3] = 1j * (a * cj(c) - c * cj(a)) / det
    G[2, 0] = 1j * (c * cj(a) - a * cj(c)) / detb
    G[2, 1] = 1j * (c * cj(b) - a * cj(d)) / detb
    G[3, 0] = 1j * (d * cj(a) - b * cj(c)) / detb
    G[3, 1] = 1j * (d * cj(b) - b * cj(d)) / detb
    return G


def schur_conditions(basis: Cx2Basis) -> tuple[float, float]:
    """(r1, r2) = (|a conj(d) - c conj(b)|, |Im(a conj(c)) - Im(b conj(d))|).

    Both vanish exactly when G(u, v) commutes with every rotation.
    """
    a, b = basis.u
    c, d = basis.v
    r1 = abs(a * np.conj(d) - c * np.conj(b))
    r2 = abs(np.imag(a * np.conj(c)) - np.imag(b * np.conj(d)))
    return float(r1), float(r2)


def schur_condition_family(lam: complex, b: complex, d: complex) -> Cx2Basis:
    """The first Schur condition solved exactly: a = lam conj(b), c = lam conj(d).

    If additionally Im(b conj(d)) = 0 the second condition holds too, and then
    det [u v] = 0: the pair degenerates, which is the no-go.
    """
    return Cx2Basis(
        u=np.array([lam * np.conj(b), b], dtype=complex),
        v=np.array([lam * np.conj(d), d], dtype=complex),
    )


def rotation_commutant_residual(
    G: np.ndarray,
    rep: RepGenerators | None = None,
    samples: int = 20,
    seed: int = 0,
) -> float:
    """max over random rotations R of ||[G, D(R)]||_F / ||G||_F with D the
    spin-1/2 rotation representative diag(exp(i sigma.theta/2), same)."""
    if rep is None:
        rep = rep_generators(HalfInt(1))
    rng = np.random.default_rng(seed)
    worst = 0.0
    scale = float(np.linalg.norm(G))
    for _ in range(samples):
        d = rng.normal(size=3)
        d /= np.linalg.norm(d)
        D = rotation_matrix(rep, rng.uniform(0.0, np.pi) * d)
        worst = max(worst, float(np.linalg.norm(G @ D - D @ G)) / scale)
    return worst


def nogo_witness(basis: Cx2Basis, tol: float = 1e-10) -> dict:
    """Report (r1, r2, |det|) with the no-go implication: if both Schur
    conditions hold to tol then u, v cannot form a basis."""
    r1, r2 = schur_conditions(basis)
    det = abs(basis.det)
    if r1 <= tol and r2 <= tol:
        if det <= tol:
            conclusion = "rotation-invariant: u, v degenerate (no-go)"
        else:
            conclusion = "borderline: conditions within tol but det above it"
    else:
        conclusion = "not rotation-invariant"
    return {"r1": r1, "r2": r2, "det_uv": det, "conclusion": conclusion}


def nogo_monte_carlo(
    samples: int = 10_000,
    seed: int = 20240811,
    det_min: float = 0.1,
    threshold: float = 0.01,
) -> dict:
    """Sweep random unit-norm pairs with |det| >= det_min and record the
    smallest max(r1, r2) seen; the no-go predicts it stays above threshold.

    The threshold is empirical (from the observed distribution at this seed),
    not a theorem constant; it is recorded in the report alongside the seed.
    """
    rng = np.random.default_rng(seed)
    floor = np.inf
    count = 0
    while count < samples:
        z = rng.normal(size=4) + 1j * rng.normal(size=4)
        u = z[:2] / np.linalg.norm(z[:2])
        v = z[2:] / np.linalg.norm(z[2:])
        basis = Cx2Basis(u=u, v=v)
        if abs(basis.det) < det_min:
            continue
        count += 1
        r1, r2 = schur_conditions(basis)
        floor = min(floor, max(r1, r2))
    return {
        "samples": samples,
        "seed": seed,
        "det_min": det_min,
        "threshold": threshold,
        "min_max_r": float(floor),
        "pass": bool(floor > threshold),
    }


def antilinear_rest_map(a: complex, b: complex) -> AntiLinearMap:
    """The rest-frame anti-linear family diag(a Theta, b Theta) o K."""
    Z = np.zeros((2, 2), dtype=complex)
    return AntiLinearMap(np.block([[a * THETA, Z], [Z, b * THETA]]))


def antilinear_family(rep: RepGenerators, a: complex, b: complex) -> KinematicOperatorFamily:
    """The anti-linear candidate family; satisfies the anticommutation
    condition but its square is -diag(|a|^2 I, |b|^2 I), never the identity."""
    if rep.j != HalfInt(1):
        raise ValueError("the anti-linear family is a spin-1/2 construction")
    return KinematicOperatorFamily(rep=rep, rest_matrix=antilinear_rest_map(a, b).matrix, antilinear=True)


@dataclass(frozen=True)
class AntilinearSolutionSpace:
    """Solution space of the anti-linear anticommutation condition."""

    basis: tuple[AntiLinearMap, ...]
    dimension: int
    singular_values: np.ndarray
    span_residual: float


def antilinear_kinematic_solutions(rep: RepGenerators, tol: float = 1e-10) -> AntilinearSolutionSpace:
    """Solve {M o K anticommutes with each boost generator} over M.

    For an anti-linear map the conjugation flips the i in exp(i K.phi), so the
    matrix condition is K_a M - M conj(K_a) = 0 for each a. The solution space
    is exactly 2-complex-dimensional, spanned by diag(Theta, 0) o K and
    diag(0, Theta) o K; the span residual against that pair is reported.
    """
    if rep.j != HalfInt(1):
        raise ValueError("the classification is stated for spin 1/2")
    n = rep.dim
    I = np.eye(n, dtype=complex)
    rows = []
    for Ka in rep.K:
        # row-major vec: vec(Ka M) = (Ka kron I) vec(M), vec(M Kc) = (I kron Kc^T) vec(M)
        rows.append(np.kron(Ka, I) - np.kron(I, np.conj(Ka).T))
    system = np.vstack(rows)
    _, sv, _ = np.linalg.svd(system)
    ns = nullspace(system, tol=tol)
    dim = ns.shape[1]

    span_residual = 0.0
    Z = np.zeros((2, 2), dtype=complex)
    for block in (np.block([[THETA, Z], [Z, Z]]), np.block([[Z, Z], [Z, THETA]])):
        vec = block.reshape(-1)
        proj = ns @ (ns.conj().T @ vec)
        span_residual = max(span_residual, float(np.linalg.norm(proj - vec) / np.linalg.norm(vec)))

    maps = tuple(AntiLinearMap(ns[:, k].reshape(n, n)) for k in range(dim))
    return AntilinearSolutionSpace(
        basis=maps, dimension=dim, singular_values=sv, span_residual=span_residual
    )


# ---------------------------------------------------------------------------
# Helicity-based G and its direction dependence at the origin.

# Phase references for the +/- helicity eigenvectors. Any single ray-based
# phase rule makes G(-n) = G(n) exactly (the two helicity rays swap under
# n -> -n and G is swap-invariant), and real references collapse the whole
# x-z plane; two generic references keep the directional limits distinct.
_REF_PLUS = np.array([1.0, 1.0j], dtype=complex) / np.sqrt(2.0)
_REF_MINUS = np.array([2.0, 1.0], dtype=complex) / np.sqrt(5.0)


def _fix_phase(w: np.ndarray, ref: np.ndarray) -> np.ndarray:
    overlap = np.vdot(ref, w)
    if abs(overlap) < 1e-12:
        # fallback: largest-magnitude component real positive
        overlap = w[int(np.argmax(np.abs(w)))]
    return w * (np.conj(overlap) / abs(overlap))


def helicity_spinors(p_vec) -> tuple[np.ndarray, np.ndarray]:
    """(+1, -1) helicity eigenvectors of sigma.p-hat with deterministic phases.

    The eigenvectors depend only on the direction of p (any |p| > 0 gives the
    same pair), which is what makes the origin limit direction-dependent.
    """
    p = np.asarray(p_vec, dtype=float).reshape(3)
    pn = np.linalg.norm(p)
    if pn == 0.0 or not np.all(np.isfinite(p)):
        raise ValueError("helicity needs a non-zero finite momentum direction")
    n = p / pn
    sx, sy, sz = pauli_matrices()
    H = sx * n[0] + sy * n[1] + sz * n[2]
    _, U = np.linalg.eigh(H)  # eigenvalues ascending: (-1, +1)
    return _fix_phase(U[:, 1], _REF_PLUS), _fix_phase(U[:, 0], _REF_MINUS)


def helicity_g(p_vec) -> np.ndarray:
    """G built from the helicity eigenvectors at momentum p (direction only)."""
    u, v = helicity_spinors(p_vec)
    return g_operator(Cx2Basis(u=u, v=v))


def helicity_origin_discontinuity(
    mass: float,
    epsilons: tuple[float, float] = (1e-3, 1e-6),
    directions: tuple = ((0.0, 0.0, 1.0), (1.0, 0.0, 0.0), (0.0, 0.0, -1.0)),
) -> dict:
    """Compare helicity-based G at momenta eps*n for several directions n.

    Along a fixed ray G is Cauchy as eps -> 0 (it depends on the direction
    only), while the limits along different rays stay a finite Frobenius
    distance apart: the operator has no limit at the origin. The mass is
    validated and reported; G itself is mass-independent.
    """
    if not mass > 0.0:
        raise ValueError(f"mass must be positive, got {mass}")
    eps_large, eps_small = max(epsilons), min(epsilons)
    dirs = [np.asarray(d, dtype=float) for d in directions]
    ray_cauchy = {}
    limits = {}
    for k, n in enumerate(dirs):
        G_large = helicity_g(eps_large * n)
        G_small = helicity_g(eps_small * n)
        key = ",".join(f"{x:g}" for x in n)
        ray_cauchy[key] = float(np.linalg.norm(G_large - G_small))
        limits[key] = G_small
    keys = list(limits)
    pairwise = {}
    for i in range(len(keys)):
        for k in range(i + 1, len(keys)):
            pairwise[f"({keys[i]}) vs ({keys[k]})"] = float(
                np.linalg.norm(limits[keys[i]] - limits[keys[k]])
            )
    return {
        "mass": float(mass),
        "epsilons": [float(eps_large), float(eps_small)],
        "ray_cauchy": ray_cauchy,
        "pairwise_distance": pairwise,
        "limits": limits,
    }
