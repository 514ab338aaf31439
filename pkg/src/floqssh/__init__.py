"""Floquet non-Hermitian SSH chain simulator.

Library and CLI for a two-segment periodically driven chain with
asymmetric hopping: one-period evolution operators, quasienergy
spectra, singular spectra of the shifted evolution operator, momentum-
and real-space winding numbers, and disorder-averaged sweeps.
"""

__version__ = "0.1.0"

from .errors import (
    BranchCutError,
    ConfigError,
    ConvergenceError,
    FloqsshError,
    GapClosedError,
    NumericalError,
)
from .model import (
    DisorderSpec,
    DriveProtocol,
    ModelParams,
    bloch_hamiltonian,
    chiral_conjugation_check,
    chiral_operator,
    realspace_hamiltonian,
    sample_disorder,
)
from .floquet import (
    FloquetOperator,
    QuasienergySpectrum,
    bloch_evolution,
    effective_hamiltonian,
    quasienergies,
    realspace_evolution,
)
from .invariants import (
    MINUS,
    PLUS,
    SingularSpectrum,
    WindingResult,
    doubled_hamiltonian,
    momentum_winding,
    realspace_winding,
    singular_spectrum,
    winding_bloch_static,
    winding_gbz_static,
    zero_mode_count,
)
from .observables import EdgeMode, StateSet, classify_edge_modes, localization_profile, wipr

__all__ = [
    "__version__",
    "BranchCutError",
    "ConfigError",
    "ConvergenceError",
    "FloqsshError",
    "GapClosedError",
    "NumericalError",
    "DisorderSpec",
    "DriveProtocol",
    "ModelParams",
    "bloch_hamiltonian",
    "chiral_conjugation_check",
    "chiral_operator",
    "realspace_hamiltonian",
    "sample_disorder",
    "FloquetOperator",
    "QuasienergySpectrum",
    "bloch_evolution",
    "effective_hamiltonian",
    "quasienergies",
    "realspace_evolution",
    "MINUS",
    "PLUS",
    "SingularSpectrum",
    "WindingResult",
    "doubled_hamiltonian",
    "momentum_winding",
    "realspace_winding",
    "singular_spectrum",
    "winding_bloch_static",
    "winding_gbz_static",
    "zero_mode_count",
    "EdgeMode",
    "StateSet",
    "classify_edge_modes",
    "localization_profile",
    "wipr",
]
