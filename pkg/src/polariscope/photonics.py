"""Physical layer: photons, spectral profiles, polarization, networks.

A scenario bundles an m-port spatial unitary, the injected photons (port,
arrival time, Jones vector, spectral amplitude), and a detection pattern.
Internally everything runs on the doubled 2m-mode description where modes
1..m carry the first polarization component and modes m+1..2m the second;
the full network is the spatial unitary acting identically on both blocks,
composed with a per-port polarization rotation that maps component one of
each occupied port onto that port's Jones vector.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field

import numpy as np

MAX_PHOTONS = 8

UNITARY_TOL = 1e-10
JONES_TOL = 1e-12
PROFILE_NORM_TOL = 1e-9

__all__ = [
    "JonesVector",
    "GaussianProfile",
    "TabulatedProfile",
    "PhotonInput",
    "SensitiveDetection",
    "InsensitiveDetection",
    "Scenario",
    "polarization_matrix",
    "build_network",
    "overlap_tau",
    "overlap_full",
    "enumerate_polarized_outputs",
    "occupation_of",
    "scenario_from_dict",
    "scenario_to_dict",
    "load_scenario",
    "dump_scenario",
]


@dataclass(frozen=True)
class JonesVector:
    """Normalized two-component polarization state."""

    c1: complex
    c2: complex

    def __post_init__(self):
        norm = abs(self.c1) ** 2 + abs(self.c2) ** 2
        if abs(norm - 1.0) > JONES_TOL:
            raise ValueError(f"Jones vector not normalized: |c|^2 = {norm!r}")

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> "JonesVector":
        return cls(math.cos(theta), cmath.exp(1j * phi) * math.sin(theta))

    def angles(self):
        """(theta, phi) with c1 = cos(theta), c2 = e^{i phi} sin(theta),
        up to the overall phase of the vector."""
        theta = math.atan2(abs(self.c2), abs(self.c1))
        phi = cmath.phase(self.c2) - cmath.phase(self.c1) if abs(self.c2) > 0 else 0.0
        return theta, phi

    def inner(self, other: "JonesVector") -> complex:
        return self.c1.conjugate() * other.c1 + self.c2.conjugate() * other.c2


HORIZONTAL = JonesVector(1.0 + 0.0j, 0.0j)


@dataclass(frozen=True)
class GaussianProfile:
    """Gaussian spectral amplitude centered at omega0; sigma is the standard
    deviation of the intensity |phi|^2."""

    omega0: float
    sigma: float

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")

    def amplitude(self, omega) -> np.ndarray:
        omega = np.asarray(omega, dtype=float)
        s2 = self.sigma ** 2
        return (2.0 * math.pi * s2) ** -0.25 * np.exp(
            -((omega - self.omega0) ** 2) / (4.0 * s2)
        )


@dataclass(frozen=True, eq=False)
class TabulatedProfile:
    """Spectral amplitude sampled on a strictly increasing grid, normalized
    so the trapezoid rule integrates |phi|^2 to one."""

    omega: np.ndarray
    amp: np.ndarray

    def __post_init__(self):
        omega = np.asarray(self.omega, dtype=float)
        amp = np.asarray(self.amp, dtype=complex)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "amp", amp)
        if omega.ndim != 1 or amp.shape != omega.shape:
            raise ValueError("omega and amp must be 1-d arrays of equal length")
        if omega.size < 2 or np.any(np.diff(omega) <= 0):
            raise ValueError("omega grid must be strictly increasing")
        norm = np.trapezoid(np.abs(amp) ** 2, omega)
        if abs(norm - 1.0) > PROFILE_NORM_TOL:
            raise ValueError(f"tabulated profile not normalized: integral = {norm!r}")

    def amplitude(self, omega) -> np.ndarray:
        omega = np.asarray(omega, dtype=float)
        if omega.shape != self.omega.shape or not np.array_equal(omega, self.omega):
            raise ValueError("tabulated profile evaluated off its own grid")
        return self.amp

    def __eq__(self, other):
        return (
            isinstance(other, TabulatedProfile)
            and np.array_equal(self.omega, other.omega)
            and np.array_equal(self.amp, other.amp)
        )


@dataclass(frozen=True)
class PhotonInput:
    port: int
    tau: float
    jones: JonesVector
    profile: object

    def __post_init__(self):
        if not isinstance(self.profile, (GaussianProfile, TabulatedProfile)):
            raise ValueError("profile must be Gaussian or tabulated")


@dataclass(frozen=True)
class SensitiveDetection:
    """One detector per polarized mode; eta lists the firing modes in 1..2m,
    one entry per photon."""

    eta: tuple

    def __post_init__(self):
        object.__setattr__(self, "eta", tuple(int(x) for x in self.eta))


@dataclass(frozen=True)
class InsensitiveDetection:
    """Polarization-blind detectors on spatial ports; mu in 1..m."""

    mu: tuple

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(int(x) for x in self.mu))


@dataclass(frozen=True, eq=False)
class Scenario:
    m: int
    tspatial: np.ndarray
    photons: tuple
    detector: object

    def __post_init__(self):
        t = np.asarray(self.tspatial, dtype=complex)
        object.__setattr__(self, "tspatial", t)
        object.__setattr__(self, "photons", tuple(self.photons))
        _validate_scenario(self)

    @property
    def n(self) -> int:
        return len(self.photons)

    def input_ports(self) -> tuple:
        return tuple(p.port for p in self.photons)


def _validate_scenario(sc: Scenario) -> None:
    m, t = sc.m, sc.tspatial
    if m < 1:
        raise ValueError("m must be at least 1")
    if t.shape != (m, m):
        raise ValueError(f"spatial matrix must be {m}x{m}, got {t.shape}")
    if np.max(np.abs(t.conj().T @ t - np.eye(m))) > UNITARY_TOL:
        raise ValueError("spatial matrix is not unitary")
    if not 1 <= len(sc.photons) <= MAX_PHOTONS:
        raise ValueError(f"need 1..{MAX_PHOTONS} photons, got {len(sc.photons)}")

    port_jones = {}
    for p in sc.photons:
        if not 1 <= p.port <= m:
            raise ValueError(f"photon port {p.port} outside 1..{m}")
        prev = port_jones.setdefault(p.port, p.jones)
        # photons sharing a port must live in one polarization mode, or the
        # doubled-mode description would need two rotations on that port
        if abs(prev.c1 - p.jones.c1) > JONES_TOL or abs(prev.c2 - p.jones.c2) > JONES_TOL:
            raise ValueError(f"photons on port {p.port} carry different Jones vectors")

    det = sc.detector
    n = len(sc.photons)
    if isinstance(det, SensitiveDetection):
        if len(det.eta) != n:
            raise ValueError("detection pattern length must equal photon number")
        if any(not 1 <= x <= 2 * m for x in det.eta):
            raise ValueError(f"sensitive detection modes must lie in 1..{2 * m}")
    elif isinstance(det, InsensitiveDetection):
        if len(det.mu) != n:
            raise ValueError("detection pattern length must equal photon number")
        if any(not 1 <= x <= m for x in det.mu):
            raise ValueError(f"insensitive detection ports must lie in 1..{m}")
    else:
        raise ValueError("detector must be sensitive or insensitive")


def polarization_matrix(jones: JonesVector, psi: float = 0.0) -> np.ndarray:
    """SU(2) rotation with the Jones vector as first column; psi fixes the
    free phase of the orthogonal column (rates do not depend on it)."""
    ph = cmath.exp(1j * psi)
    return np.array(
        [
            [jones.c1, -ph * jones.c2.conjugate()],
            [jones.c2, ph * jones.c1.conjugate()],
        ]
    )


def build_network(scenario: Scenario, psi: float = 0.0) -> np.ndarray:
    """2m x 2m network: spatial unitary on both polarization blocks, after
    per-port rotations aligning component one with each port's Jones vector.

    psi is the free phase of each rotation's second column; detection rates
    cannot depend on it because inputs only occupy the first column."""
    m = scenario.m
    rot = {p.port: polarization_matrix(p.jones, psi) for p in scenario.photons}
    pmat = np.eye(2 * m, dtype=complex)
    for port, r in rot.items():
        i = port - 1
        pmat[i, i] = r[0, 0]
        pmat[i, i + m] = r[0, 1]
        pmat[i + m, i] = r[1, 0]
        pmat[i + m, i + m] = r[1, 1]
    full = np.zeros((2 * m, 2 * m), dtype=complex)
    full[:m, :m] = scenario.tspatial
    full[m:, m:] = scenario.tspatial
    return full @ pmat


def overlap_tau(a: PhotonInput, b: PhotonInput) -> complex:
    """Spectral overlap including arrival times, ignoring polarization:
    integral of conj(phi_a) phi_b e^{i omega (tau_a - tau_b)}."""
    dtau = a.tau - b.tau
    pa, pb = a.profile, b.profile
    if isinstance(pa, GaussianProfile) and isinstance(pb, GaussianProfile):
        return _gaussian_overlap(pa, pb, dtau)
    grid = _common_grid(pa, pb)
    fa = pa.amplitude(grid)
    fb = pb.amplitude(grid)
    vals = np.conj(fa) * fb * np.exp(1j * grid * dtau)
    return complex(np.trapezoid(vals, grid))


def overlap_full(a: PhotonInput, b: PhotonInput) -> complex:
    """Full internal-state overlap: spectral part times the Jones inner
    product."""
    return a.jones.inner(b.jones) * overlap_tau(a, b)


def _gaussian_overlap(pa: GaussianProfile, pb: GaussianProfile, dtau: float) -> complex:
    s1, s2 = pa.sigma, pb.sigma
    w1, w2 = pa.omega0, pb.omega0
    aa = (s1 ** 2 + s2 ** 2) / (4.0 * s1 ** 2 * s2 ** 2)
    bb = w1 / (2.0 * s1 ** 2) + w2 / (2.0 * s2 ** 2) + 1j * dtau
    cc = w1 ** 2 / (4.0 * s1 ** 2) + w2 ** 2 / (4.0 * s2 ** 2)
    pref = math.sqrt(2.0 * s1 * s2 / (s1 ** 2 + s2 ** 2))
    return pref * cmath.exp(bb ** 2 / (4.0 * aa) - cc)


def _common_grid(pa, pb) -> np.ndarray:
    if isinstance(pa, TabulatedProfile) and isinstance(pb, TabulatedProfile):
        if pa.omega.shape != pb.omega.shape or not np.array_equal(pa.omega, pb.omega):
            raise ValueError("tabulated profiles must share one frequency grid")
        return pa.omega
    if isinstance(pa, TabulatedProfile):
        return pa.omega
    return pb.omega


def enumerate_polarized_outputs(mu, m: int):
    """All sensitive patterns compatible with polarization-blind clicks on
    the ports mu: each photon independently lands in component one (port)
    or component two (port + m), first photon varying slowest."""
    n = len(mu)
    out = []
    for k in range(1 << n):
        out.append(
            tuple(mu[i] + m * ((k >> (n - 1 - i)) & 1) for i in range(n))
        )
    return out


def occupation_of(config, num_modes: int) -> tuple:
    occ = [0] * num_modes
    for x in config:
        occ[x - 1] += 1
    return tuple(occ)


# ---------------------------------------------------------------------------
# serialization


def _c(pair) -> complex:
    re, im = pair
    return complex(float(re), float(im))


def _pair(z: complex):
    return [float(z.real), float(z.imag)]


def _profile_from_dict(d: dict):
    if "gaussian" in d:
        g = d["gaussian"]
        return GaussianProfile(float(g["omega0"]), float(g["sigma"]))
    if "tabulated" in d:
        t = d["tabulated"]
        amp = np.array([_c(p) for p in t["amp"]])
        return TabulatedProfile(np.asarray(t["omega"], dtype=float), amp)
    raise ValueError(f"unknown profile type: {sorted(d)}")


def _profile_to_dict(p) -> dict:
    if isinstance(p, GaussianProfile):
        return {"gaussian": {"omega0": p.omega0, "sigma": p.sigma}}
    return {
        "tabulated": {
            "omega": [float(w) for w in p.omega],
            "amp": [_pair(z) for z in p.amp],
        }
    }


def scenario_from_dict(d: dict) -> Scenario:
    m = int(d["m"])
    t = np.array([[_c(x) for x in row] for row in d["T"]])
    photons = []
    for pd in d["photons"]:
        jones = JonesVector(_c(pd["jones"]["c1"]), _c(pd["jones"]["c2"]))
        photons.append(
            PhotonInput(
                port=int(pd["port"]),
                tau=float(pd["tau"]),
                jones=jones,
                profile=_profile_from_dict(pd["profile"]),
            )
        )
    det = d["detector"]
    if "sensitive" in det:
        detector = SensitiveDetection(tuple(det["sensitive"]["eta"]))
    elif "insensitive" in det:
        detector = InsensitiveDetection(tuple(det["insensitive"]["mu"]))
    else:
        raise ValueError(f"unknown detector type: {sorted(det)}")
    return Scenario(m=m, tspatial=t, photons=tuple(photons), detector=detector)


def scenario_to_dict(sc: Scenario) -> dict:
    det = sc.detector
    if isinstance(det, SensitiveDetection):
        det_d = {"sensitive": {"eta": list(det.eta)}}
    else:
        det_d = {"insensitive": {"mu": list(det.mu)}}
    return {
        "m": sc.m,
        "T": [[_pair(z) for z in row] for row in sc.tspatial],
        "photons": [
            {
                "port": p.port,
                "tau": p.tau,
                "jones": {"c1": _pair(p.jones.c1), "c2": _pair(p.jones.c2)},
                "profile": _profile_to_dict(p.profile),
            }
            for p in sc.photons
        ],
        "detector": det_d,
    }


def load_scenario(path) -> Scenario:
    with open(path) as fh:
        return scenario_from_dict(json.load(fh))


def dump_scenario(sc: Scenario, path) -> None:
    with open(path, "w") as fh:
        json.dump(scenario_to_dict(sc), fh, indent=2)
        fh.write("\n")
