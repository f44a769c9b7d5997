"""Coincidence rates and landscapes for partially distinguishable polarized
photons in linear-optical networks."""

from .matfunc import determinant, immanant, permanent, scatter_submatrix
from .permgroup import (
    ConfigBasis,
    Permutation,
    act,
    block_transform,
    character,
    enumerate_sn,
    perm_matrix,
)
from .photonics import (
    GaussianProfile,
    InsensitiveDetection,
    JonesVector,
    PhotonInput,
    Scenario,
    SensitiveDetection,
    TabulatedProfile,
    build_network,
    load_scenario,
    scenario_from_dict,
    scenario_to_dict,
)
from .rates import (
    BlockAnalysis,
    InsensitiveRates,
    MimicResult,
    RateBundle,
    b_sigma,
    beta_matrix,
    block_analysis,
    coincidence_insensitive,
    coincidence_sensitive,
    input_norm,
    mimic_solver,
    rate_bundle,
    rate_matrix,
    triad_phase,
    u_vector,
)

__version__ = "0.1.0"

__all__ = [
    "Permutation",
    "ConfigBasis",
    "enumerate_sn",
    "act",
    "perm_matrix",
    "character",
    "block_transform",
    "permanent",
    "determinant",
    "immanant",
    "scatter_submatrix",
    "JonesVector",
    "GaussianProfile",
    "TabulatedProfile",
    "PhotonInput",
    "SensitiveDetection",
    "InsensitiveDetection",
    "Scenario",
    "build_network",
    "load_scenario",
    "scenario_from_dict",
    "scenario_to_dict",
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
    "__version__",
]
