"""
Mimicking polarized photons with plain Gaussians
================================================

Coincidence rates depend on the photons' internal states only through the
permutation-indexed overlap products.  Whenever an unpolarized Gaussian
family reproduces those products, it produces identical rates in every
network, even though the physical states differ.  The solver fits two
arrival times and one spectral width against the overlap products of a
polarized target; a target outside the family's reach is reported as such
instead of being silently approximated.
"""

import cmath
import math

import numpy as np

from polariscope import (
    GaussianProfile,
    InsensitiveDetection,
    JonesVector,
    PhotonInput,
    Scenario,
    b_sigma,
    coincidence_insensitive,
    mimic_solver,
)
from polariscope.permgroup import Permutation
from polariscope.rates import _family_photons

zeta = cmath.exp(2j * math.pi / 3.0)
tritter = np.array(
    [[zeta ** (-(j * k)) for k in range(3)] for j in range(3)]
) / math.sqrt(3.0)

# a target the family can reach: overlap products generated by the family
# itself, then dressed in polarization language through the rates they give
x_true = np.array([0.55, -0.8, 0.3])
target = _family_photons(x_true, 10.0, 1.0, 1.0)
fit = mimic_solver(target)
print("feasible target")
print("  arrival times:", np.round(fit.tau_prime, 6), "(true:", [0.0, *map(float, x_true[:2])], ")")
print("  third width  :", round(fit.width, 6), "(true:", round(math.exp(x_true[2]), 6), ")")
print("  residual     :", fit.residual, "converged:", fit.converged)

sc_target = Scenario(m=3, tspatial=tritter, photons=target,
                     detector=InsensitiveDetection((1, 2, 3)))
mimic_photons = _family_photons(
    np.array([fit.tau_prime[1], fit.tau_prime[2], math.log(fit.width)]), 10.0, 1.0, 1.0)
sc_mimic = Scenario(m=3, tspatial=tritter, photons=mimic_photons,
                    detector=InsensitiveDetection((1, 2, 3)))
print("  rate of target:", coincidence_insensitive(sc_target).total)
print("  rate of mimic :", coincidence_insensitive(sc_mimic).total)

# an unreachable target: three photons in distinct polarization states
# whose pairwise overlaps are all large
jones = (
    JonesVector.from_angles(0.0, 0.0),
    JonesVector.from_angles(0.35, 0.4),
    JonesVector.from_angles(0.35, -0.4),
)
polarized = tuple(
    PhotonInput(port=i + 1, tau=0.0, jones=jones[i],
                profile=GaussianProfile(omega0=10.0, sigma=1.0))
    for i in range(3)
)
print()
print("overlap products of the polarized target:")
for images in [(2, 1, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1)]:
    val = b_sigma(Permutation(images), polarized, "full")
    print(f"  {images}: {val:.6f}")
bad = mimic_solver(polarized)
print("infeasible target: converged =", bad.converged,
      " residual =", round(bad.residual, 4))
