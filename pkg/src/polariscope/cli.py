"""Command line front end.

Subcommands:

  rate       single-scenario rate report as JSON
  landscape  sweep one or two photon parameters, write CSV
  verify     run the built-in cross-check battery
  mimic      fit the Gaussian mimic family to a three-photon scenario

Scenario files are JSON; see the README for the schema.  Landscape output
is deterministic and byte-identical for any --threads value.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import re
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import oracle, rates
from .matfunc import permanent, permanent_naive
from .permgroup import ConfigBasis, Permutation, block_transform, enumerate_sn, perm_matrix
from .photonics import (
    InsensitiveDetection,
    JonesVector,
    Scenario,
    SensitiveDetection,
    load_scenario,
    occupation_of,
)

_AXIS_RE = re.compile(r"^(tau|theta|phi)(\d+)=([^:]+):([^:]+):(\d+)$")

__all__ = ["main"]


def _pair(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


# ---------------------------------------------------------------------------
# rate


def _block_to_dict(block) -> dict:
    d = {
        "perm_coeff": block.perm_coeff,
        "det_coeff": block.det_coeff,
        "mixed_a": block.mixed_a,
        "mixed_b": _pair(block.mixed_b),
        "mixed_c": block.mixed_c,
    }
    if block.contributions is not None:
        d["contributions"] = block.contributions
    return d


def _cmd_rate(args) -> int:
    scenario = load_scenario(args.scenario)
    bundle = rates.rate_bundle(scenario)
    out = {
        "rate": bundle.rate,
        "triad_phase": bundle.triad,
        "b_sigma": {k: _pair(v) for k, v in bundle.b_table.items()},
    }
    if bundle.rate_absorbed is not None:
        out["rate_absorbed"] = bundle.rate_absorbed
    if bundle.block is not None:
        out["block"] = _block_to_dict(bundle.block)
    _emit_json(out, args.out)
    return 0


def _emit_json(obj, path) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if path:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# landscape


def _parse_axis(spec: str):
    m = _AXIS_RE.match(spec)
    if not m:
        raise ValueError(
            f"axis spec {spec!r} must look like tau2=-5:5:101 "
            "(variables: tau<i>, theta<i>, phi<i>)"
        )
    kind, idx, start, stop, count = m.groups()
    count = int(count)
    if count < 1:
        raise ValueError("axis needs at least one point")
    values = [float(x) for x in np.linspace(float(start), float(stop), count)]
    return kind, int(idx), values


def _apply_axis(scenario: Scenario, kind: str, idx: int, value: float) -> Scenario:
    if not 1 <= idx <= scenario.n:
        raise ValueError(f"photon index {idx} outside 1..{scenario.n}")
    photon = scenario.photons[idx - 1]
    if kind == "tau":
        photon = dataclasses.replace(photon, tau=value)
    else:
        theta, phi = photon.jones.angles()
        if kind == "theta":
            theta = value
        else:
            phi = value
        photon = dataclasses.replace(photon, jones=JonesVector.from_angles(theta, phi))
    photons = list(scenario.photons)
    photons[idx - 1] = photon
    return Scenario(
        m=scenario.m,
        tspatial=scenario.tspatial,
        photons=tuple(photons),
        detector=scenario.detector,
    )


def _point_rate(scenario: Scenario) -> float:
    if isinstance(scenario.detector, SensitiveDetection):
        return rates.coincidence_sensitive(scenario)
    return rates.coincidence_insensitive(scenario).total


def _cmd_landscape(args) -> int:
    scenario = load_scenario(args.scenario)
    kind1, idx1, vals1 = _parse_axis(args.axis1)
    if args.axis2:
        kind2, idx2, vals2 = _parse_axis(args.axis2)
    else:
        kind2, idx2, vals2 = None, None, [0.0]

    def row(i: int):
        base = _apply_axis(scenario, kind1, idx1, vals1[i])
        out = []
        for v2 in vals2:
            sc = base if kind2 is None else _apply_axis(base, kind2, idx2, v2)
            out.append(_point_rate(sc))
        return out

    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            grid = list(pool.map(row, range(len(vals1))))
    else:
        grid = [row(i) for i in range(len(vals1))]

    with open(args.out, "w", newline="\n") as fh:
        fh.write("# polariscope landscape\n")
        fh.write("axis1,axis2,rate\n")
        for i, v1 in enumerate(vals1):
            for j, v2 in enumerate(vals2):
                fh.write(f"{v1!r},{v2!r},{grid[i][j]!r}\n")
    return 0


# ---------------------------------------------------------------------------
# mimic


def _cmd_mimic(args) -> int:
    scenario = load_scenario(args.scenario)
    result = rates.mimic_solver(scenario)
    _emit_json(
        {
            "tau_prime": list(result.tau_prime),
            "width": result.width,
            "residual": result.residual,
            "converged": result.converged,
        },
        args.out,
    )
    return 0 if result.converged else 1


# ---------------------------------------------------------------------------
# verify


def _check_homomorphism() -> float:
    basis = ConfigBasis.from_config((1, 2, 3))
    mats = {s: perm_matrix(s, basis) for s in enumerate_sn(3)}
    err = 0.0
    for a, ma in mats.items():
        for b, mb in mats.items():
            err = max(err, float(np.max(np.abs(ma @ mb - mats[a * b]))))
    return err


def _check_block_fixture() -> float:
    v = block_transform(3)
    err = float(np.max(np.abs(v @ v.T - np.eye(6))))
    swap = perm_matrix(Permutation((2, 1, 3)), ConfigBasis.from_config((1, 2, 3)))
    diag = v @ swap @ v.T
    err = max(err, float(np.max(np.abs(diag - np.diag([1, -1, -1, 1, 1, -1])))))
    basis = ConfigBasis.from_config((1, 2, 3))
    for s in enumerate_sn(3):
        blocked = v @ perm_matrix(s, basis) @ v.T
        for (r0, r1), (c0, c1) in _offblocks():
            err = max(err, float(np.max(np.abs(blocked[r0:r1, c0:c1]))))
    return err


def _offblocks():
    bounds = [(0, 1), (1, 2), (2, 4), (4, 6)]
    out = []
    for i, r in enumerate(bounds):
        for j, c in enumerate(bounds):
            if i != j:
                out.append((r, c))
    return out


def _check_permanent() -> float:
    rng = np.random.default_rng(23)
    err = 0.0
    for _ in range(4):
        a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        err = max(err, abs(permanent(a) - permanent_naive(a)))
    return err


def _check_formalisms(count: int = 20) -> float:
    rng = np.random.default_rng(41)
    err = 0.0
    for k in range(count):
        sc = oracle.random_scenario(
            rng,
            m=3,
            n=3,
            insensitive=bool(k % 2),
            repeated_ports=(k % 3 == 0),
            repeated_outputs=(k % 4 == 0),
        )
        a = _point_rate(sc)
        b = oracle.rate_permanent_formalism(sc)
        err = max(err, abs(a - b))
    return err


def _check_absorbed() -> float:
    rng = np.random.default_rng(59)
    err = 0.0
    for _ in range(10):
        sc = oracle.random_scenario(rng, m=3, n=3, insensitive=True)
        both = rates.coincidence_insensitive(sc)
        err = max(err, abs(both.total - both.absorbed))
    return err


def _check_conservation() -> float:
    import itertools

    rng = np.random.default_rng(67)
    err = 0.0
    for _ in range(3):
        sc = oracle.random_scenario(rng, m=2, n=2)
        total = 0.0
        seen = set()
        for eta in itertools.product(range(1, 5), repeat=2):
            occ = occupation_of(eta, 4)
            if occ in seen:
                continue
            seen.add(occ)
            probe = Scenario(
                m=sc.m,
                tspatial=sc.tspatial,
                photons=sc.photons,
                detector=SensitiveDetection(eta),
            )
            total += rates.coincidence_sensitive(probe)
        err = max(err, abs(total - 1.0))
    return err


def _check_rejection() -> float:
    try:
        Scenario(
            m=2,
            tspatial=np.array([[1.0, 0.0], [0.0, 2.0]]),
            photons=(),
            detector=SensitiveDetection((1, 2)),
        )
    except ValueError:
        return 0.0
    return 1.0


def _check_grid_hom() -> float:
    from .photonics import GaussianProfile, PhotonInput

    t = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)
    jones = JonesVector(1.0 + 0.0j, 0.0j)
    photons = tuple(
        PhotonInput(port=p, tau=0.0, jones=jones, profile=GaussianProfile(10.0, 1.0))
        for p in (1, 2)
    )
    sc = Scenario(
        m=2, tspatial=t, photons=photons, detector=SensitiveDetection((1, 2))
    )
    return abs(oracle.rate_fock_grid(sc, bins=32) - rates.coincidence_sensitive(sc))


def _check_grid_random() -> float:
    rng = np.random.default_rng(73)
    err = 0.0
    for k in range(4):
        sc = oracle.random_scenario(rng, m=3, n=3, insensitive=bool(k % 2))
        err = max(err, abs(oracle.rate_fock_grid(sc, bins=48) - _point_rate(sc)))
    return err


def _cmd_verify(args) -> int:
    checks = [
        ("permutation homomorphism", _check_homomorphism, 1e-12),
        ("block transform fixture", _check_block_fixture, 1e-10),
        ("permanent vs naive", _check_permanent, 1e-8),
        ("formalism agreement", _check_formalisms, 1e-10),
        ("absorbed polarization", _check_absorbed, 1e-10),
        ("probability conservation", _check_conservation, 1e-9),
        ("input validation", _check_rejection, 0.5),
    ]
    if args.level == "full":
        checks += [
            ("grid oracle: two photons", _check_grid_hom, 1e-6),
            ("grid oracle: random", _check_grid_random, 1e-5),
        ]
    failed = False
    for name, fn, tol in checks:
        err = fn()
        ok = err <= tol
        failed = failed or not ok
        print(f"{name:28s} {err:11.3e}  {'PASS' if ok else 'FAIL'}")
    return 1 if failed else 0


# ---------------------------------------------------------------------------


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="polariscope",
        description="coincidence rates for partially distinguishable polarized photons",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rate = sub.add_parser("rate", help="rate report for one scenario")
    p_rate.add_argument("--scenario", required=True)
    p_rate.add_argument("--out", default=None)
    p_rate.set_defaults(fn=_cmd_rate)

    p_land = sub.add_parser("landscape", help="sweep photon parameters to CSV")
    p_land.add_argument("--scenario", required=True)
    p_land.add_argument("--axis1", required=True, metavar="VAR=START:STOP:COUNT")
    p_land.add_argument("--axis2", default=None, metavar="VAR=START:STOP:COUNT")
    p_land.add_argument("--out", required=True)
    p_land.add_argument("--threads", type=int, default=1)
    p_land.set_defaults(fn=_cmd_landscape)

    p_ver = sub.add_parser("verify", help="run the cross-check battery")
    p_ver.add_argument("--level", choices=("fast", "full"), default="fast")
    p_ver.set_defaults(fn=_cmd_verify)

    p_mim = sub.add_parser("mimic", help="fit the Gaussian mimic family")
    p_mim.add_argument("--scenario", required=True)
    p_mim.add_argument("--out", default=None)
    p_mim.set_defaults(fn=_cmd_mimic)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
