"""Acceptance battery: one test per criterion, one PASS line each.

Run with pytest -v; each passing test prints its criterion line so the
battery reads as a checklist even inside a larger run.
"""

import itertools
import math
import time

import numpy as np
import pytest

from polariscope.matfunc import permanent, scatter_submatrix
from polariscope.permgroup import (
    ConfigBasis,
    Permutation,
    block_transform,
    perm_matrix,
)
from polariscope.photonics import (
    JonesVector,
    Scenario,
    SensitiveDetection,
    build_network,
    dump_scenario,
    occupation_of,
)
from polariscope.oracle import (
    random_scenario,
    rate_fock_grid,
    rate_permanent_formalism,
)
from polariscope import rates
from polariscope.rates import (
    beta_matrix,
    block_analysis,
    coincidence_insensitive,
    coincidence_sensitive,
    mimic_solver,
    triad_phase,
    u_vector,
)

from conftest import H, beamsplitter, gauss_photon, hom_scenario, tritter_scenario
from test_rates import _R_PRODUCTS, _distinguishable_photons, _random_jones


def _done(line):
    print(f"\n{line}: PASS")


def _pipeline_rate(sc):
    if isinstance(sc.detector, SensitiveDetection):
        return coincidence_sensitive(sc)
    return coincidence_insensitive(sc).total


def test_c01_two_photon_interference():
    for sensitive in (True, False):
        dip = _pipeline_rate(hom_scenario(0.0, sensitive=sensitive))
        assert abs(dip) <= 1e-10
        plateau = _pipeline_rate(hom_scenario(6.0, sensitive=sensitive))
        assert plateau == pytest.approx(0.5, abs=1e-3)
    _done("criterion 01 two-photon dip and plateau")


def test_c02_formalism_equivalence_hundred_scenarios():
    rng = np.random.default_rng(101)
    start = time.monotonic()
    worst = 0.0
    for k in range(100):
        sc = random_scenario(
            rng,
            m=3,
            n=3,
            insensitive=bool(k % 2),
            repeated_ports=(k % 3 == 0),
            repeated_outputs=(k % 5 == 0),
        )
        worst = max(worst, abs(_pipeline_rate(sc) - rate_permanent_formalism(sc)))
    elapsed = time.monotonic() - start
    assert worst <= 1e-10, f"worst mismatch {worst}"
    assert elapsed < 10.0, f"took {elapsed:.1f} s"
    _done(f"criterion 02 formalism equivalence (worst {worst:.2e}, {elapsed:.1f} s)")


def test_c03_polarization_absorption_identity():
    rng = np.random.default_rng(103)
    worst = 0.0
    for k in range(20):
        sc = random_scenario(rng, m=3, n=3, insensitive=True,
                             repeated_ports=(k % 4 == 0))
        both = coincidence_insensitive(sc)
        worst = max(worst, abs(both.total - both.absorbed))
    assert worst <= 1e-10
    _done(f"criterion 03 absorbed-polarization identity (worst {worst:.2e})")


def test_c04_printed_matrix_fixtures():
    basis = ConfigBasis.from_config((1, 2, 3))
    maps = {
        (2, 1, 3): [3, 5, 1, 6, 2, 4],
        (2, 3, 1): [4, 6, 2, 5, 1, 3],
        (1, 3, 2): [2, 1, 4, 3, 6, 5],
    }
    for images, cols in maps.items():
        mat = perm_matrix(Permutation(images), basis)
        assert [int(np.argmax(row)) + 1 for row in mat] == cols

    v = block_transform(3)
    assert np.max(np.abs(v @ v.T - np.eye(6))) <= 1e-12
    swap = perm_matrix(Permutation((2, 1, 3)), basis)
    assert np.max(np.abs(v @ swap @ v.T - np.diag([1, -1, -1, 1, 1, -1]))) <= 1e-12

    rng = np.random.default_rng(104)
    photons = tuple(
        gauss_photon(i + 1, float(rng.uniform(-1, 1)),
                     omega0=float(rng.uniform(9.5, 10.5)),
                     sigma=float(rng.uniform(0.8, 1.3)))
        for i in range(3)
    )
    beta = beta_matrix(photons, "tau")
    r = rates.rate_matrix(photons, basis, "tau")
    worst = 0.0
    for d in range(6):
        for c in range(6):
            a1, b1, a2, b2, a3, b3 = _R_PRODUCTS[d][c]
            expected = beta[a1 - 1, b1 - 1] * beta[a2 - 1, b2 - 1] * beta[a3 - 1, b3 - 1]
            worst = max(worst, abs(r[d, c] - expected))
    assert worst <= 1e-10

    pair = (gauss_photon(1, 0.0), gauss_photon(2, 0.0), gauss_photon(3, 1.3))
    rho = abs(beta_matrix(pair, "tau")[0, 2])
    collapse = block_analysis(pair).matrix
    expected = np.diag([2 + 4 * rho ** 2, 0, 0, 2 - 2 * rho ** 2, 2 - 2 * rho ** 2, 0])
    assert np.max(np.abs(collapse - expected)) <= 1e-10
    _done("criterion 04 printed matrix fixtures")


def test_c05_triad_phase_properties():
    rng = np.random.default_rng(105)
    for _ in range(10):
        taus = rng.uniform(-2, 2, size=3)
        photons = tuple(gauss_photon(i + 1, float(taus[i])) for i in range(3))
        assert abs(triad_phase(photons, "tau")) <= 1e-12

    jones = tuple(_random_jones(rng) for _ in range(3))
    base = None
    for _ in range(6):
        taus = rng.uniform(-2, 2, size=3)
        photons = tuple(
            gauss_photon(i + 1, float(taus[i]), jones=jones[i]) for i in range(3)
        )
        phi = triad_phase(photons, "full")
        base = phi if base is None else base
        assert abs(phi - base) <= 1e-12
    _done("criterion 05 triad phase invariances")


def test_c06_interference_limits():
    rng = np.random.default_rng(106)
    jones = _random_jones(rng)
    photons = tuple(gauss_photon(i + 1, 0.4, jones=jones) for i in range(3))
    for eta in [(1, 2, 6), (2, 2, 5)]:
        sc = Scenario(m=3, tspatial=tritter_scenario().tspatial, photons=photons,
                      detector=SensitiveDetection(eta))
        sub = scatter_submatrix(build_network(sc), eta, (1, 2, 3))
        repeats = np.prod([math.factorial(eta.count(c)) for c in set(eta)])
        assert coincidence_sensitive(sc) == pytest.approx(
            abs(permanent(sub)) ** 2 / repeats, abs=1e-12)

    for eta in [(1, 2, 6), (2, 2, 5)]:
        sc = Scenario(m=3, tspatial=tritter_scenario().tspatial,
                      photons=_distinguishable_photons((1, 2, 3)),
                      detector=SensitiveDetection(eta))
        sub = scatter_submatrix(build_network(sc), eta, (1, 2, 3))
        repeats = np.prod([math.factorial(eta.count(c)) for c in set(eta)])
        assert coincidence_sensitive(sc) == pytest.approx(
            permanent(np.abs(sub) ** 2).real / repeats, abs=1e-12)

    shared = _random_jones(rng)
    sc = tritter_scenario(taus=(0.0, 0.5, -0.3), jones=(shared,) * 3)
    from polariscope.photonics import InsensitiveDetection

    blind = Scenario(m=3, tspatial=sc.tspatial, photons=sc.photons,
                     detector=InsensitiveDetection((1, 2, 3)))
    basis = ConfigBasis.from_config((1, 2, 3))
    u = u_vector(sc.tspatial, basis, (1, 2, 3))
    r = rates.rate_matrix(sc.photons, basis, "tau")
    spatial = float(np.real(u.conj() @ r @ u))
    assert coincidence_insensitive(blind).total == pytest.approx(spatial, abs=1e-12)
    _done("criterion 06 indistinguishable, distinguishable, unpolarized limits")


def test_c07_probability_conservation():
    rng = np.random.default_rng(107)
    for n, m in [(2, 2), (3, 3), (2, 3)]:
        sc = random_scenario(rng, m=m, n=n)
        total = 0.0
        seen = set()
        for eta in itertools.product(range(1, 2 * m + 1), repeat=n):
            occ = occupation_of(eta, 2 * m)
            if occ in seen:
                continue
            seen.add(occ)
            probe = Scenario(m=m, tspatial=sc.tspatial, photons=sc.photons,
                             detector=SensitiveDetection(eta))
            total += coincidence_sensitive(probe)
        assert total == pytest.approx(1.0, abs=1e-9), f"n={n} m={m}: {total}"
    _done("criterion 07 probability conservation")


def test_c08_frequency_grid_oracle():
    start = time.monotonic()
    rng = np.random.default_rng(108)
    worst = 0.0
    for k in range(4):
        sc = random_scenario(rng, m=3, n=3, insensitive=bool(k % 2))
        worst = max(worst, abs(rate_fock_grid(sc, bins=48) - _pipeline_rate(sc)))
    assert worst <= 1e-5

    photons = (gauss_photon(1, -6.0), gauss_photon(2, 6.0))
    sc = Scenario(m=2, tspatial=beamsplitter(), photons=photons,
                  detector=SensitiveDetection((1, 2)))
    exact = coincidence_sensitive(sc)
    errs = [abs(rate_fock_grid(sc, bins=b) - exact) for b in (16, 32, 64)]
    assert errs[0] > errs[1] > errs[2]

    hom_err = abs(rate_fock_grid(hom_scenario(0.7), bins=32)
                  - coincidence_sensitive(hom_scenario(0.7)))
    assert hom_err <= 1e-6
    elapsed = time.monotonic() - start
    assert elapsed < 120.0
    _done(f"criterion 08 frequency-grid oracle (worst {worst:.2e}, {elapsed:.1f} s)")


def test_c09_mimic_family_recovery():
    from polariscope.rates import _family_photons

    rng = np.random.default_rng(109)
    worst_res, worst_tau = 0.0, 0.0
    for _ in range(20):
        x = np.array([
            float(rng.uniform(-1.2, 1.2)),
            float(rng.uniform(-1.2, 1.2)),
            float(rng.uniform(-0.5, 0.5)),
        ])
        target = _family_photons(x, 10.0, 1.0, 1.0)
        got = mimic_solver(target)
        assert got.converged
        worst_res = max(worst_res, got.residual)
        worst_tau = max(
            worst_tau,
            abs(got.tau_prime[1] - x[0]),
            abs(got.tau_prime[2] - x[1]),
        )
    assert worst_res <= 1e-8
    assert worst_tau <= 1e-6
    _done(f"criterion 09 mimic recovery (res {worst_res:.2e}, dtau {worst_tau:.2e})")


def test_c10_performance(tmp_path):
    rng = np.random.default_rng(110)
    a = rng.standard_normal((20, 20)) + 1j * rng.standard_normal((20, 20))
    start = time.monotonic()
    permanent(a)
    perm_time = time.monotonic() - start
    assert perm_time < 1.0, f"20x20 permanent took {perm_time:.2f} s"

    from polariscope.cli import main

    path = tmp_path / "hom.json"
    dump_scenario(hom_scenario(0.4), path)
    t_multi = tmp_path / "multi.csv"
    start = time.monotonic()
    rc = main([
        "landscape", "--scenario", str(path),
        "--axis1", "tau2=-4:4:101", "--axis2", "theta2=0:1.5:101",
        "--out", str(t_multi), "--threads", "4",
    ])
    sweep_time = time.monotonic() - start
    assert rc == 0
    assert sweep_time < 30.0, f"101x101 sweep took {sweep_time:.1f} s"

    t_single = tmp_path / "single.csv"
    rc = main([
        "landscape", "--scenario", str(path),
        "--axis1", "tau2=-4:4:101", "--axis2", "theta2=0:1.5:101",
        "--out", str(t_single), "--threads", "1",
    ])
    assert rc == 0
    assert t_single.read_bytes() == t_multi.read_bytes()
    _done(f"criterion 10 performance (perm {perm_time:.2f} s, sweep {sweep_time:.1f} s)")
