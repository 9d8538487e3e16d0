"""Residual suites behind `spinkin check`: every algebraic identity the library
claims, swept over seeded random inputs with explicit tolerances.

Each suite returns a plain dict (JSON-ready) with max residuals, the
tolerances applied, and a pass flag; run_all composes them.
"""

from __future__ import annotations

import numpy as np

from . import decomposition as dec
from . import elko
from .dirac import boosted_spinors, dirac_operator
from .higherspin import field_equation_residual, swap_operator_at, tensor_swap_operator
from .kinematics import (
    FourMomentum,
    covariance_residual,
    is_fully_kinematic,
    parity_family,
    parity_operator,
    random_boost_pair,
    random_rotation_pair,
    sample_momenta,
    scaled_swap_family,
)
from .linalg import anticommutator
from .reps import HalfInt, rep_generators, tensor_rep_generators

__all__ = ["run_all", "SUITES"]


def dirac_parity_suite(seed: int, samples: int = 1000, tol: float = 1e-10) -> dict:
    """||m P(q) - gamma.p||_F / ||gamma.p||_F over random on-shell momenta."""
    rep = rep_generators(HalfInt(1))
    rng = np.random.default_rng(seed)
    worst = 0.0
    for q in sample_momenta(rng, samples):
        slash = dirac_operator(q)
        r = np.linalg.norm(q.m * parity_operator(rep, q) - slash) / np.linalg.norm(slash)
        worst = max(worst, float(r))
    return {
        "samples": samples,
        "max_residuals": {"identification": worst},
        "tolerances": {"identification": tol},
        "pass": bool(worst <= tol),
    }


def involution_suite(seed: int, per_spin: int = 100, tol: float = 1e-7) -> dict:
    """P_j(q)^2 = I, eigenvalues +-1 with multiplicities (2j+1, 2j+1), and a
    momentum-independent determinant, for j in {1/2, 1, 3/2, 2}."""
    rng = np.random.default_rng(seed)
    worst_sq = worst_ev = worst_det = 0.0
    mult_ok = True
    for twice in (1, 2, 3, 4):
        j = HalfInt(twice)
        rep = rep_generators(j)
        det_expected = (-1.0) ** j.block_dim  # sign of the block-swap permutation
        for q in sample_momenta(rng, per_spin):
            P = parity_operator(rep, q)
            worst_sq = max(worst_sq, float(np.linalg.norm(P @ P - np.eye(j.dim))))
            ev = np.linalg.eigvals(P)
            worst_ev = max(worst_ev, float(np.max(np.abs(np.abs(ev.real) - 1.0) + np.abs(ev.imag))))
            plus = int(np.sum(ev.real > 0))
            mult_ok = mult_ok and plus == j.block_dim and ev.size - plus == j.block_dim
            worst_det = max(worst_det, float(abs(np.linalg.det(P) - det_expected)))
    residuals = {"square": worst_sq, "eigenvalue": worst_ev, "det": worst_det}
    ok = mult_ok and all(v <= tol for v in residuals.values())
    return {
        "per_spin_samples": per_spin,
        "max_residuals": residuals,
        "multiplicities_ok": mult_ok,
        "tolerances": {k: tol for k in residuals},
        "pass": bool(ok),
    }


def field_equation_suite(seed: int, per_spin: int = 25, tol: float = 1e-9) -> dict:
    """Boosted u/v spinors solve their sign's field equation for j <= 2."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for twice in (1, 2, 3, 4):
        for q in sample_momenta(rng, per_spin):
            basis = boosted_spinors(HalfInt(twice), q)
            for w in basis.u:
                worst = max(worst, field_equation_residual(HalfInt(twice), w, q, +1))
            for w in basis.v:
                worst = max(worst, field_equation_residual(HalfInt(twice), w, q, -1))
    return {
        "per_spin_samples": per_spin,
        "max_residuals": {"field_equation": worst},
        "tolerances": {"field_equation": tol},
        "pass": bool(worst <= tol),
    }


def covariance_suite(seed: int, per_spin: int = 100, tol: float = 1e-8) -> dict:
    """Parity-family covariance under random pure boosts and rotations, j <= 3/2."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for twice in (1, 2, 3):
        rep = rep_generators(HalfInt(twice))
        fam = parity_family(rep)
        momenta = sample_momenta(rng, per_spin)
        for q in momenta:
            L, D = random_boost_pair(rep, rng)
            worst = max(worst, covariance_residual(fam, q, L, D))
            L, D = random_rotation_pair(rep, rng)
            worst = max(worst, covariance_residual(fam, q, L, D))
    return {
        "per_spin_samples": per_spin,
        "max_residuals": {"covariance": worst},
        "tolerances": {"covariance": tol},
        "pass": bool(worst <= tol),
    }


def kinematic_checker_suite(seed: int, tol: float = 1e-8) -> dict:
    """Definition-level checks: parity is fully kinematic, the off-diagonal
    scale family is for any a != 0, and the anti-linear family fails the
    involution condition by at least 1 on the |a|, |b| grid."""
    rng = np.random.default_rng(seed)
    rep_half = rep_generators(HalfInt(1))

    parity_ok = True
    for twice in (1, 2):
        rep = rep_generators(HalfInt(twice))
        report = is_fully_kinematic(parity_family(rep), samples=25, tol=tol, seed=seed + twice)
        parity_ok = parity_ok and report.fully_kinematic

    swap_ok = True
    for _ in range(10):
        a = rng.uniform(0.2, 5.0) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        report = is_fully_kinematic(scaled_swap_family(rep_half, a), samples=10, tol=tol, seed=seed)
        swap_ok = swap_ok and report.fully_kinematic

    # anti-linear grid: anticommutes but the square stays >= 1 away from I
    q = FourMomentum(1.0, (0.3, -0.2, 0.5))
    grid = np.logspace(-1, 1, 5)
    min_gap = np.inf
    anti_ok = True
    for amag in grid:
        for bmag in grid:
            a = amag * np.exp(1j * rng.uniform(0, 2 * np.pi))
            b = bmag * np.exp(1j * rng.uniform(0, 2 * np.pi))
            fam = elko.antilinear_family(rep_half, a, b)
            anti_ok = anti_ok and fam.anticommutator_residual() <= tol
            gap = np.linalg.norm(fam.squared_at(q) - np.eye(4))
            min_gap = min(min_gap, float(gap))
    return {
        "parity_fully_kinematic": bool(parity_ok),
        "scaled_swap_fully_kinematic": bool(swap_ok),
        "antilinear_anticommutes": bool(anti_ok),
        "max_residuals": {"antilinear_square_gap_min": float(min_gap)},
        "tolerances": {"conditions": tol, "antilinear_square_gap_min": 1.0},
        "pass": bool(parity_ok and swap_ok and anti_ok and min_gap >= 1.0),
    }


def antilinear_solutions_suite(seed: int, tol: float = 1e-10) -> dict:
    """The anti-linear anticommutation system has a 2-complex-dimensional
    solution space spanned by diag(Theta,0) o K and diag(0,Theta) o K."""
    space = elko.antilinear_kinematic_solutions(rep_generators(HalfInt(1)), tol=tol)
    return {
        "dimension": space.dimension,
        "max_residuals": {"span": space.span_residual},
        "tolerances": {"span": tol},
        "pass": bool(space.dimension == 2 and space.span_residual <= tol),
    }


def _block_scalar_deviation(G: np.ndarray) -> float:
    """Distance of each 2x2 block of a 4x4 matrix from a scalar multiple of I."""
    out = 0.0
    for r in (0, 2):
        for c in (0, 2):
            blk = G[r : r + 2, c : c + 2]
            out = max(out, float(np.linalg.norm(blk - (np.trace(blk) / 2.0) * np.eye(2))))
    return out


def elko_nogo_suite(seed: int, mc_samples: int = 10_000) -> dict:
    """The Schur/no-go chain: random bases always violate a condition;
    exact-condition pairs are degenerate; commutant residual tracks the
    conditions in both directions."""
    rng = np.random.default_rng(seed)
    mc = elko.nogo_monte_carlo(samples=mc_samples, seed=seed)

    worst_det = 0.0
    for _ in range(100):
        lam = rng.normal() + 1j * rng.normal()
        b = rng.normal() + 1j * rng.normal()
        t = rng.normal()  # d = t b keeps Im(b conj(d)) = 0: both conditions hold
        basis = elko.schur_condition_family(lam, b, t * b)
        r1, r2 = elko.schur_conditions(basis)
        if max(r1, r2) > 1e-12:
            worst_det = np.inf
            break
        worst_det = max(worst_det, abs(basis.det))

    # both directions of the Schur equivalence
    equivalence_ok = True
    for _ in range(200):
        z = rng.normal(size=4) + 1j * rng.normal(size=4)
        basis = elko.Cx2Basis(u=z[:2] / np.linalg.norm(z[:2]), v=z[2:] / np.linalg.norm(z[2:]))
        if abs(basis.det) < 0.1:
            continue
        r1, r2 = elko.schur_conditions(basis)
        comm = elko.rotation_commutant_residual(elko.g_operator(basis), samples=20, seed=seed)
        equivalence_ok = equivalence_ok and ((comm <= 1e-9) == (max(r1, r2) <= 1e-10))
    # conditions-hold side, at the operator level: block-scalar matrices
    # (the Schur commutant) do commute with every rotation
    scalar_comm = 0.0
    for _ in range(5):
        blocks = rng.normal(size=4) + 1j * rng.normal(size=4)
        G = np.zeros((4, 4), dtype=complex)
        G[:2, :2] = blocks[0] * np.eye(2)
        G[:2, 2:] = blocks[1] * np.eye(2)
        G[2:, :2] = blocks[2] * np.eye(2)
        G[2:, 2:] = blocks[3] * np.eye(2)
        scalar_comm = max(scalar_comm, elko.rotation_commutant_residual(G, samples=20, seed=seed))
    # conditions-fail side: r1-only and r2-only families are detected
    fam_r1 = elko.schur_condition_family(1.0, 1.0, 1j)  # r1 = 0, r2 = 2, det = 2i
    detect_r2 = elko.rotation_commutant_residual(elko.g_operator(fam_r1), samples=20, seed=seed)
    fam_r2 = elko.Cx2Basis(u=np.array([1.0, 0.0]), v=np.array([0.0, 1.0]))  # r2 = 0, r1 = 1
    detect_r1 = elko.rotation_commutant_residual(elko.g_operator(fam_r2), samples=20, seed=seed)

    ok = (
        mc["pass"]
        and worst_det <= 1e-10
        and equivalence_ok
        and scalar_comm <= 1e-12
        and detect_r1 > 1e-3
        and detect_r2 > 1e-3
    )
    return {
        "monte_carlo": mc,
        "max_residuals": {
            "constructed_family_det": float(worst_det),
            "block_scalar_commutant": scalar_comm,
        },
        "schur_equivalence_ok": bool(equivalence_ok),
        "commutant_detects_r1": float(detect_r1),
        "commutant_detects_r2": float(detect_r2),
        "tolerances": {"constructed_family_det": 1e-10, "block_scalar_commutant": 1e-12},
        "pass": bool(ok),
    }


_G_E1_E2 = np.array(
    [[0, 0, 0, -1j], [0, 0, 1j, 0], [0, -1j, 0, 0], [1j, 0, 0, 0]], dtype=complex
)


def g_operator_suite(seed: int, samples: int = 100, tol: float = 1e-10) -> dict:
    """G(u,v)^2 = I and the four eigenvalue relations for random bases; the
    u=e1, v=e2 case reproduces the derived matrix entrywise."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    done = 0
    while done < samples:
        z = rng.normal(size=4) + 1j * rng.normal(size=4)
        basis = elko.Cx2Basis(u=z[:2], v=z[2:])
        if abs(basis.det) < 0.05:
            continue
        done += 1
        G = elko.g_operator(basis)
        eb = elko.elko_basis(basis)
        worst = max(worst, float(np.linalg.norm(G @ G - np.eye(4))))
        for w, s in ((eb.u_plus, 1), (eb.u_minus, -1), (eb.v_plus, 1), (eb.v_minus, -1)):
            worst = max(worst, float(np.linalg.norm(G @ w - s * w) / np.linalg.norm(w)))
    explicit = float(
        np.max(np.abs(elko.g_operator(elko.Cx2Basis(u=np.array([1.0, 0]), v=np.array([0, 1.0]))) - _G_E1_E2))
    )
    return {
        "samples": samples,
        "max_residuals": {"relations": worst, "e1_e2_case": explicit},
        "tolerances": {"relations": tol, "e1_e2_case": 1e-14},
        "pass": bool(worst <= tol and explicit <= 1e-14),
    }


def decomposition_suite(seed: int, samples: int = 100, tol: float = 1e-9) -> dict:
    """gamma.p = m K(q) Xi(q) for the canonical and helicity-Elko bases."""
    rng = np.random.default_rng(seed)
    worst = {"canonical": 0.0, "helicity": 0.0}
    for q in sample_momenta(rng, samples):
        for name, basis in (
            ("canonical", dec.canonical_rest_basis(HalfInt(1), q.m)),
            ("helicity", dec.elko_rest_basis(q.m)),
        ):
            worst[name] = max(worst[name], dec.decomposition_residual(basis, q))
    ok = all(v <= tol for v in worst.values())
    return {
        "samples": samples,
        "max_residuals": worst,
        "tolerances": {k: tol for k in worst},
        "pass": bool(ok),
    }


def tensor_swap_suite(seed: int, per_spin: int = 50, tol: float = 1e-9) -> dict:
    """S^2 = I exactly, {S, K_a} = 0, and the boosted swap fixes the tensor
    image of every +1 parity eigenspinor."""
    rng = np.random.default_rng(seed)
    worst_alg = 0.0
    worst_int = 0.0
    exact_sq = 0.0
    for twice in (1, 2):
        j = HalfInt(twice)
        S = tensor_swap_operator(j)
        exact_sq = max(exact_sq, float(np.max(np.abs(S @ S - np.eye(S.shape[0])))))
        _, Kt = tensor_rep_generators(j)
        for Ka in Kt:
            worst_alg = max(worst_alg, float(np.linalg.norm(anticommutator(S, Ka))))
        d = j.block_dim
        for q in sample_momenta(rng, per_spin):
            A = swap_operator_at(j, q)
            basis = boosted_spinors(j, q)
            for w in basis.u:
                t_psi = np.kron(w[:d], w[d:])
                worst_int = max(
                    worst_int, float(np.linalg.norm(A @ t_psi - t_psi) / np.linalg.norm(t_psi))
                )
    return {
        "per_spin_samples": per_spin,
        "max_residuals": {"square_exact": exact_sq, "anticommutator": worst_alg, "intertwining": worst_int},
        "tolerances": {"square_exact": 0.0, "anticommutator": 1e-12, "intertwining": tol},
        "pass": bool(exact_sq == 0.0 and worst_alg <= 1e-12 and worst_int <= tol),
    }


def origin_suite(mass: float = 1.0) -> dict:
    """Helicity-based G: Cauchy along rays, direction-dependent at the origin."""
    report = elko.helicity_origin_discontinuity(mass)
    ray_worst = max(report["ray_cauchy"].values())
    z_x = report["pairwise_distance"]["(0,0,1) vs (1,0,0)"]
    z_nz = report["pairwise_distance"]["(0,0,1) vs (0,0,-1)"]
    ok = ray_worst <= 1e-6 and z_x > 0.1 and z_nz > 0.1
    return {
        "max_residuals": {"ray_cauchy": float(ray_worst)},
        "distances": {"z_vs_x": float(z_x), "z_vs_neg_z": float(z_nz)},
        "tolerances": {"ray_cauchy": 1e-6, "direction_distance_min": 0.1},
        "pass": bool(ok),
    }


SUITES = (
    ("dirac_parity", dirac_parity_suite),
    ("involution", involution_suite),
    ("field_equation", field_equation_suite),
    ("covariance", covariance_suite),
    ("kinematic_checker", kinematic_checker_suite),
    ("antilinear_solutions", antilinear_solutions_suite),
    ("elko_nogo", elko_nogo_suite),
    ("g_operator", g_operator_suite),
    ("decomposition", decomposition_suite),
    ("tensor_swap", tensor_swap_suite),
)


def run_all(seed: int) -> dict:
    """Run every suite with per-suite seeds derived from the given seed."""
    suites = {}
    for offset, (name, fn) in enumerate(SUITES):
        suites[name] = fn(seed + offset)
    suites["origin"] = origin_suite()
    return {
        "seed": seed,
        "suites": suites,
        "pass": bool(all(s["pass"] for s in suites.values())),
    }
