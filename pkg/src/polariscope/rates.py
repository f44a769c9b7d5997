"""Coincidence rates for partially distinguishable polarized photons.

The rate for a detection pattern eta factors as Re(u^dag R u) / Z:

  * u collects one product of network amplitudes per distinct rearrangement
    of eta (the configuration basis),
  * R = sum_sigma B_sigma Pi_sigma weights permutation matrices with the
    internal-state overlap products B_sigma,
  * Z is the squared norm of the input state, which differs from a plain
    multinomial factor when photons sharing a port are distinguishable.

Polarization-sensitive detection runs on the doubled 2m-mode network with
spectral overlaps only; polarization-blind detection either sums sensitive
rates over all compatible patterns or, for patterns without repeated ports,
absorbs polarization into the overlaps and runs on the m-mode matrix alone.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from .permgroup import ConfigBasis, Permutation, block_transform, enumerate_sn
from .photonics import (
    HORIZONTAL,
    GaussianProfile,
    InsensitiveDetection,
    PhotonInput,
    Scenario,
    SensitiveDetection,
    build_network,
    enumerate_polarized_outputs,
    occupation_of,
    overlap_full,
    overlap_tau,
)

TRIAD_EPS = 1e-14

__all__ = [
    "beta_matrix",
    "b_sigma",
    "rate_matrix",
    "u_vector",
    "input_norm",
    "coincidence_sensitive",
    "coincidence_insensitive",
    "InsensitiveRates",
    "triad_phase",
    "block_analysis",
    "BlockAnalysis",
    "rate_bundle",
    "RateBundle",
    "mimic_solver",
    "MimicResult",
]


def beta_matrix(photons, mode: str = "tau") -> np.ndarray:
    """Pairwise internal-state overlaps beta[a, b] = <a|b>; mode 'tau' uses
    spectrum and arrival time only, 'full' multiplies in the Jones inner
    product."""
    if mode not in ("tau", "full"):
        raise ValueError(f"mode must be 'tau' or 'full', got {mode!r}")
    pair = overlap_tau if mode == "tau" else overlap_full
    n = len(photons)
    beta = np.empty((n, n), dtype=complex)
    for a in range(n):
        beta[a, a] = 1.0
        for b in range(a + 1, n):
            beta[a, b] = pair(photons[a], photons[b])
            beta[b, a] = beta[a, b].conjugate()
    return beta


def b_sigma(sigma: Permutation, photons, mode: str = "tau", beta=None) -> complex:
    """Overlap product B_sigma = prod_i beta[sigma(i), i]."""
    if beta is None:
        beta = beta_matrix(photons, mode)
    prod = 1.0 + 0.0j
    for i in range(sigma.n):
        prod *= beta[sigma(i + 1) - 1, i]
    return prod


def rate_matrix(photons, basis: ConfigBasis, mode: str = "tau") -> np.ndarray:
    """R = sum_sigma B_sigma Pi_sigma on the configuration basis; Hermitian
    and positive semidefinite."""
    n = len(photons)
    beta = beta_matrix(photons, mode)
    size = len(basis)
    lookup = {c: k for k, c in enumerate(basis.configs)}
    r = np.zeros((size, size), dtype=complex)
    for sigma in enumerate_sn(n):
        b = b_sigma(sigma, photons, beta=beta)
        for d, cfg in enumerate(basis.configs):
            c = lookup[tuple(cfg[j - 1] for j in sigma.images)]
            r[d, c] += b
    return r


def u_vector(matrix: np.ndarray, basis: ConfigBasis, in_config) -> np.ndarray:
    """Component k is the product of matrix elements routing input mode
    in_config[i] to output mode basis.configs[k][i]."""
    cols = [int(x) - 1 for x in in_config]
    u = np.empty(len(basis), dtype=complex)
    for k, cfg in enumerate(basis.configs):
        prod = 1.0 + 0.0j
        for i, out in enumerate(cfg):
            prod *= matrix[out - 1, cols[i]]
        u[k] = prod
    return u


def input_norm(photons) -> float:
    """Squared norm of the input Fock state: sum of full overlap products
    over permutations that fix the port assignment.  Equals the factorial
    of each port multiplicity only for mutually indistinguishable photons."""
    ports = tuple(p.port for p in photons)
    beta = beta_matrix(photons, "full")
    z = 0.0 + 0.0j
    for sigma in enumerate_sn(len(photons)):
        if all(ports[sigma(i + 1) - 1] == ports[i] for i in range(len(ports))):
            z += b_sigma(sigma, photons, beta=beta)
    return float(z.real)


def coincidence_sensitive(scenario: Scenario) -> float:
    """Rate for one polarization-resolved detection pattern."""
    det = scenario.detector
    if not isinstance(det, SensitiveDetection):
        raise ValueError("scenario does not use polarization-sensitive detection")
    return _sensitive_rate(scenario, det.eta)


def _sensitive_rate(scenario: Scenario, eta) -> float:
    u_net = build_network(scenario)
    basis = ConfigBasis.from_config(eta)
    u = u_vector(u_net, basis, scenario.input_ports())
    r = rate_matrix(scenario.photons, basis, "tau")
    z = input_norm(scenario.photons)
    return float(np.real(u.conj() @ r @ u) / z)


@dataclass(frozen=True)
class InsensitiveRates:
    """total sums polarization-resolved rates over all compatible patterns;
    absorbed is the single-matrix evaluation with polarization folded into
    the overlaps, available when no detected port repeats."""

    total: float
    absorbed: Optional[float]


def coincidence_insensitive(scenario: Scenario) -> InsensitiveRates:
    det = scenario.detector
    if not isinstance(det, InsensitiveDetection):
        raise ValueError("scenario does not use polarization-blind detection")
    mu, m = det.mu, scenario.m

    seen = set()
    total = 0.0
    for eta in enumerate_polarized_outputs(mu, m):
        occ = occupation_of(eta, 2 * m)
        if occ in seen:
            continue
        seen.add(occ)
        total += _sensitive_rate(scenario, eta)

    absorbed = None
    if len(set(mu)) == len(mu):
        basis = ConfigBasis.from_config(mu)
        u = u_vector(scenario.tspatial, basis, scenario.input_ports())
        r = rate_matrix(scenario.photons, basis, "full")
        z = input_norm(scenario.photons)
        absorbed = float(np.real(u.conj() @ r @ u) / z)
    return InsensitiveRates(total=total, absorbed=absorbed)


def triad_phase(photons, mode: str = "tau") -> float:
    """arg(beta_31 beta_12 beta_23) for three photons; the lowest-order
    overlap invariant that survives taking absolute values pairwise.
    Raises when any factor vanishes."""
    if len(photons) != 3:
        raise ValueError("triad phase needs exactly three photons")
    beta = beta_matrix(photons, mode)
    prod = beta[2, 0] * beta[0, 1] * beta[1, 2]
    if abs(prod) < TRIAD_EPS:
        raise ValueError("triad phase undefined: an overlap product vanishes")
    return cmath.phase(prod)


@dataclass(frozen=True)
class BlockAnalysis:
    """Rate matrix of a three-photon pattern in the block basis.

    perm_coeff and det_coeff multiply the symmetric and antisymmetric
    one-dimensional blocks; (mixed_a, mixed_b, mixed_c) fill the two
    identical 2x2 mixed-symmetry blocks [[a, b], [b*, c]] up to the
    ordering of the two copies.  contributions splits the rate by block
    when the amplitude vector is supplied.
    """

    matrix: np.ndarray
    perm_coeff: float
    det_coeff: float
    mixed_a: float
    mixed_b: complex
    mixed_c: float
    u_transformed: Optional[np.ndarray] = None
    contributions: Optional[dict] = None


def block_analysis(photons, mode: str = "tau", u=None) -> BlockAnalysis:
    """Transform the three-photon rate matrix into its block-diagonal form.

    Valid for patterns whose configuration basis has full size 6 (no
    repeated detector mode); u, when given, must be the amplitude vector
    on that basis and yields the per-block rate contributions.
    """
    if len(photons) != 3:
        raise ValueError("block analysis needs exactly three photons")
    basis = ConfigBasis.from_config((1, 2, 3))
    r = rate_matrix(photons, basis, mode)
    v = block_transform(3)
    mat = v @ r @ v.T
    perm_c = float(mat[0, 0].real)
    det_c = float(mat[1, 1].real)
    mixed_a = float(mat[2, 2].real)
    mixed_b = complex(mat[2, 3])
    mixed_c = float(mat[3, 3].real)
    ut = None
    contrib = None
    if u is not None:
        u = np.asarray(u, dtype=complex)
        if u.shape != (6,):
            raise ValueError("amplitude vector must have length 6")
        ut = v @ u
        full = np.real(ut.conj() @ mat @ ut)
        sym = float(np.real(np.abs(ut[0]) ** 2 * mat[0, 0]))
        anti = float(np.real(np.abs(ut[1]) ** 2 * mat[1, 1]))
        mixed = float(np.real(ut[2:].conj() @ mat[2:, 2:] @ ut[2:]))
        contrib = {
            "symmetric": sym,
            "antisymmetric": anti,
            "mixed": mixed,
            "total": float(full),
        }
    return BlockAnalysis(
        matrix=mat,
        perm_coeff=perm_c,
        det_coeff=det_c,
        mixed_a=mixed_a,
        mixed_b=mixed_b,
        mixed_c=mixed_c,
        u_transformed=ut,
        contributions=contrib,
    )


@dataclass(frozen=True)
class RateBundle:
    """Everything the rate report prints for one scenario."""

    rate: float
    rate_absorbed: Optional[float]
    triad: Optional[float]
    b_table: dict
    block: Optional[BlockAnalysis]


def rate_bundle(scenario: Scenario) -> RateBundle:
    det = scenario.detector
    sensitive = isinstance(det, SensitiveDetection)
    mode = "tau" if sensitive else "full"

    if sensitive:
        rate = coincidence_sensitive(scenario)
        absorbed = None
    else:
        both = coincidence_insensitive(scenario)
        rate, absorbed = both.total, both.absorbed

    n = scenario.n
    table = {}
    beta = beta_matrix(scenario.photons, mode)
    for sigma in enumerate_sn(n):
        key = "".join(str(x) for x in sigma.images)
        table[key] = b_sigma(sigma, scenario.photons, beta=beta)

    triad = None
    if n == 3:
        try:
            triad = triad_phase(scenario.photons, mode)
        except ValueError:
            triad = None

    block = None
    if n == 3 and sensitive and len(set(det.eta)) == 3:
        u_net = build_network(scenario)
        basis = ConfigBasis.from_config(det.eta)
        u = u_vector(u_net, basis, scenario.input_ports())
        block = block_analysis(scenario.photons, "tau", u=u)
    return RateBundle(
        rate=rate, rate_absorbed=absorbed, triad=triad, b_table=table, block=block
    )


# ---------------------------------------------------------------------------
# mimicking overlaps with an unpolarized Gaussian family


@dataclass(frozen=True)
class MimicResult:
    """Arrival times and third width of the matched Gaussian family; residual
    is the largest overlap-product mismatch at the optimum."""

    tau_prime: tuple
    width: float
    residual: float
    converged: bool


_MIMIC_SIGMAS = [
    Permutation((2, 1, 3)),
    Permutation((3, 2, 1)),
    Permutation((1, 3, 2)),
    Permutation((2, 3, 1)),
]


def _family_photons(x, omega0: float, delta: float, sigma0: float):
    t2, t3, logw = x
    centers = (omega0 - delta, omega0, omega0 + delta)
    widths = (sigma0, sigma0, float(np.exp(logw)))
    taus = (0.0, t2, t3)
    return tuple(
        PhotonInput(
            port=i + 1,
            tau=taus[i],
            jones=HORIZONTAL,
            profile=GaussianProfile(centers[i], widths[i]),
        )
        for i in range(3)
    )


def _family_targets(photons) -> np.ndarray:
    beta = beta_matrix(photons, "full")
    vals = [b_sigma(s, photons, beta=beta) for s in _MIMIC_SIGMAS]
    return np.array(vals, dtype=complex)


def mimic_solver(
    scenario_or_photons,
    omega0: float = 10.0,
    delta: float = 1.0,
    sigma0: float = 1.0,
    restarts: int = 8,
    seed: int = 11,
    tol: float = 1e-8,
) -> MimicResult:
    """Fit an unpolarized Gaussian family to the overlap products of three
    photons.

    The family fixes three distinct spectral centers (omega0 - delta,
    omega0, omega0 + delta); free parameters are two arrival times and the
    width of the third photon.  Distinct centers let arrival times steer
    the phase of the cyclic overlap product, which coincident centers can
    never do.  Targets are the overlap products of the three transpositions
    and one three-cycle; a target outside the family's reach comes back
    with converged False and the residual it got stuck at.
    """
    if isinstance(scenario_or_photons, Scenario):
        photons = scenario_or_photons.photons
    else:
        photons = tuple(scenario_or_photons)
    if len(photons) != 3:
        raise ValueError("mimic solver needs exactly three photons")
    target = _family_targets(photons)

    def objective(x):
        diff = _family_targets(_family_photons(x, omega0, delta, sigma0)) - target
        return float(np.sum(diff.real ** 2) + np.sum(diff.imag ** 2))

    rng = np.random.default_rng(seed)
    best = None
    for k in range(restarts):
        x0 = np.array([0.0, 0.0, 0.0])
        if k:
            x0 = x0 + rng.uniform(-1.5, 1.5, size=3)
        res = minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={"xatol": 1e-12, "fatol": 1e-18, "maxiter": 4000, "maxfev": 6000},
        )
        if best is None or res.fun < best.fun:
            best = res
        if best.fun < (tol * 1e-2) ** 2:
            break

    x = best.x
    achieved = _family_targets(_family_photons(x, omega0, delta, sigma0))
    residual = float(np.max(np.abs(achieved - target)))
    return MimicResult(
        tau_prime=(0.0, float(x[0]), float(x[1])),
        width=float(np.exp(x[2])),
        residual=residual,
        converged=residual <= tol,
    )
