import cmath
import math

import numpy as np
import pytest

from polariscope.photonics import (
    GaussianProfile,
    InsensitiveDetection,
    JonesVector,
    PhotonInput,
    Scenario,
    SensitiveDetection,
)

H = JonesVector(1.0 + 0.0j, 0.0j)


def beamsplitter() -> np.ndarray:
    return np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)


def tritter() -> np.ndarray:
    zeta = cmath.exp(2j * math.pi / 3.0)
    return np.array(
        [[zeta ** (-(j * k)) for k in range(3)] for j in range(3)]
    ) / math.sqrt(3.0)


def gauss_photon(port, tau, jones=H, omega0=10.0, sigma=1.0) -> PhotonInput:
    return PhotonInput(
        port=port, tau=tau, jones=jones, profile=GaussianProfile(omega0, sigma)
    )


def hom_scenario(tau, eta=(1, 2), sensitive=True) -> Scenario:
    photons = (gauss_photon(1, 0.0), gauss_photon(2, tau))
    det = SensitiveDetection(eta) if sensitive else InsensitiveDetection(eta)
    return Scenario(m=2, tspatial=beamsplitter(), photons=photons, detector=det)


def tritter_scenario(taus=(0.0, 0.3, -0.5), jones=None, eta=(1, 2, 3)) -> Scenario:
    if jones is None:
        jones = (H, H, H)
    photons = tuple(
        gauss_photon(i + 1, taus[i], jones=jones[i]) for i in range(3)
    )
    return Scenario(
        m=3, tspatial=tritter(), photons=photons, detector=SensitiveDetection(eta)
    )


@pytest.fixture
def rng():
    return np.random.default_rng(19)
