"""Independent cross-checks for the rate pipeline.

Two deliberately different routes to the same numbers:

  * rate_permanent_formalism expands the rate as a literal double sum over
    photon permutations, weighting network amplitude products with pairwise
    overlaps; no configuration basis, no group matrices.

  * rate_fock_grid discretizes each spectral amplitude on a frequency grid
    and evaluates the exact rate of the resulting finite multimode model,
    polarization entering through the input state rather than through the
    network.  It converges to the continuum answer as the grid refines and
    is the only route that never touches the overlap integrals.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .photonics import (
    GaussianProfile,
    InsensitiveDetection,
    JonesVector,
    PhotonInput,
    Scenario,
    SensitiveDetection,
    build_network,
    enumerate_polarized_outputs,
    occupation_of,
)
from .rates import beta_matrix, input_norm

MAX_FOCK_PHOTONS = 3
MAX_FOCK_MODES = 8
MAX_FOCK_BINS = 64
MIN_FOCK_BINS = 8

__all__ = ["rate_permanent_formalism", "rate_fock_grid", "random_scenario", "random_unitary"]


def random_unitary(rng, m: int) -> np.ndarray:
    """Haar-ish m x m unitary from a QR factorization with phase fixing."""
    a = rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))
    q, r = np.linalg.qr(a)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_scenario(
    rng,
    m: int = 3,
    n: int = 3,
    insensitive: bool = False,
    repeated_ports: bool = False,
    repeated_outputs: bool = False,
) -> Scenario:
    """Seeded scenario generator for cross-check sweeps: random network,
    Gaussian photons with scattered centers, widths, arrival times, and
    polarizations."""
    t = random_unitary(rng, m)
    if repeated_ports:
        ports = sorted(int(x) for x in rng.integers(1, m + 1, size=n))
    else:
        ports = sorted(int(x) + 1 for x in rng.permutation(m)[:n])
    port_jones = {}
    photons = []
    for i, port in enumerate(ports):
        if port not in port_jones:
            raw = rng.standard_normal(4)
            c = (raw[0] + 1j * raw[1], raw[2] + 1j * raw[3])
            norm = math.sqrt(abs(c[0]) ** 2 + abs(c[1]) ** 2)
            port_jones[port] = JonesVector(c[0] / norm, c[1] / norm)
        photons.append(
            PhotonInput(
                port=port,
                tau=float(rng.uniform(-1.5, 1.5)),
                jones=port_jones[port],
                profile=GaussianProfile(
                    omega0=float(rng.uniform(9.0, 11.0)),
                    sigma=float(rng.uniform(0.7, 1.4)),
                ),
            )
        )
    if insensitive:
        if repeated_outputs:
            mu = tuple(int(x) for x in rng.integers(1, m + 1, size=n))
        else:
            mu = tuple(int(x) + 1 for x in rng.permutation(m)[:n])
        detector = InsensitiveDetection(mu)
    else:
        if repeated_outputs:
            eta = tuple(int(x) for x in rng.integers(1, 2 * m + 1, size=n))
        else:
            eta = tuple(int(x) + 1 for x in rng.permutation(2 * m)[:n])
        detector = SensitiveDetection(eta)
    return Scenario(m=m, tspatial=t, photons=tuple(photons), detector=detector)


def rate_permanent_formalism(scenario: Scenario) -> float:
    """Rate from the permutation double sum, bypassing the group pipeline."""
    det = scenario.detector
    if isinstance(det, SensitiveDetection):
        return _double_sum(scenario, det.eta)
    total = 0.0
    seen = set()
    for eta in enumerate_polarized_outputs(det.mu, scenario.m):
        occ = occupation_of(eta, 2 * scenario.m)
        if occ in seen:
            continue
        seen.add(occ)
        total += _double_sum(scenario, eta)
    return total


def _double_sum(scenario: Scenario, eta) -> float:
    u_in = build_network(scenario).T  # row = input mode, column = output mode
    beta = beta_matrix(scenario.photons, "tau")
    v = scenario.input_ports()
    n = scenario.n

    amp = {}
    for sigma in itertools.permutations(range(n)):
        prod = 1.0 + 0.0j
        for k in range(n):
            prod *= u_in[v[sigma[k]] - 1, eta[k] - 1]
        amp[sigma] = prod

    total = 0.0 + 0.0j
    for sigma, a_s in amp.items():
        for rho, a_r in amp.items():
            w = a_s.conjugate() * a_r
            for k in range(n):
                w *= beta[sigma[k], rho[k]]
            total += w

    repeats = 1.0
    for c in occupation_of(eta, 2 * scenario.m):
        repeats *= math.factorial(c)
    return float(total.real / (repeats * input_norm(scenario.photons)))


def rate_fock_grid(scenario: Scenario, bins: int = 48) -> float:
    """Rate of the frequency-discretized model.

    Each photon becomes a vector over (channel, grid point) modes; the
    network acts on the channel index only.  Exact within the discrete
    model, approximate against the continuum.
    """
    if not MIN_FOCK_BINS <= bins <= MAX_FOCK_BINS:
        raise ValueError(f"bins must lie in {MIN_FOCK_BINS}..{MAX_FOCK_BINS}")
    n, m = scenario.n, scenario.m
    if n > MAX_FOCK_PHOTONS:
        raise ValueError(f"grid oracle limited to {MAX_FOCK_PHOTONS} photons")
    if 2 * m > MAX_FOCK_MODES:
        raise ValueError(f"grid oracle limited to {MAX_FOCK_MODES} polarized modes")
    for p in scenario.photons:
        if not isinstance(p.profile, GaussianProfile):
            raise ValueError("grid oracle supports Gaussian profiles only")

    centers = [p.profile.omega0 for p in scenario.photons]
    smax = max(p.profile.sigma for p in scenario.photons)
    mid = float(np.mean(centers))
    grid = np.linspace(mid - 6.0 * smax, mid + 6.0 * smax, bins)

    # photon vectors over doubled channels x grid
    psi = np.zeros((n, 2 * m, bins), dtype=complex)
    for i, p in enumerate(scenario.photons):
        c = p.profile.amplitude(grid) * np.exp(-1j * p.tau * grid)
        c = c / np.linalg.norm(c)
        psi[i, p.port - 1] = p.jones.c1 * c
        psi[i, p.port - 1 + m] = p.jones.c2 * c

    net = np.zeros((2 * m, 2 * m), dtype=complex)
    net[:m, :m] = scenario.tspatial
    net[m:, m:] = scenario.tspatial
    psi_out = np.einsum("dc,icg->idg", net, psi)

    gram = np.einsum("idg,jdg->ij", psi.conj(), psi)
    z = 0.0 + 0.0j
    for sigma in itertools.permutations(range(n)):
        z += math.prod(gram[i, sigma[i]] for i in range(n))
    z = float(z.real)

    det = scenario.detector
    if isinstance(det, SensitiveDetection):
        return _grid_pattern_rate(psi_out, det.eta, z)
    total = 0.0
    seen = set()
    for eta in enumerate_polarized_outputs(det.mu, m):
        occ = occupation_of(eta, 2 * m)
        if occ in seen:
            continue
        seen.add(occ)
        total += _grid_pattern_rate(psi_out, eta, z)
    return total


def _grid_pattern_rate(psi_out: np.ndarray, eta, z: float) -> float:
    """Sum of squared n-photon amplitudes over all grid assignments."""
    n = psi_out.shape[0]
    rows = [psi_out[:, e - 1, :] for e in eta]  # each (n, bins)

    if n == 1:
        amp = rows[0][0]
    elif n == 2:
        amp = np.einsum("a,b->ab", rows[0][0], rows[1][1])
        amp += np.einsum("a,b->ab", rows[0][1], rows[1][0])
    else:
        amp = None
        for sigma in itertools.permutations(range(3)):
            term = np.einsum(
                "a,b,c->abc", rows[0][sigma[0]], rows[1][sigma[1]], rows[2][sigma[2]]
            )
            amp = term if amp is None else amp + term

    repeats = 1.0
    for c in occupation_of(eta, psi_out.shape[1]):
        repeats *= math.factorial(c)
    return float(np.sum(np.abs(amp) ** 2) / (repeats * z))
