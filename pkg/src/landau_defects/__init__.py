"""Exact Landau levels around topological line defects, with a numerical cross-check."""

from .errors import ConfigError, DomainError, GridError, InteriorDiskWarning, NumericalError
from .geometry import (
    Disclination,
    DisclinationDisk,
    Dispiration,
    KKDispiration,
    ScrewDislocation,
    classify_singularity,
    effective_alpha,
    metric_at,
)
from .special import kummer_poly, kummer_series
from .spectra import (
    EnergyLevel,
    FieldConfig,
    QuantumNumbers,
    cancellation_flux,
    degeneracy_report,
    energy,
    energy_disclination,
    energy_dispiration,
    energy_kaluza_klein,
    energy_screw,
)
from .wavefunctions import count_nodes, normalize, radial_eigenfunction
from .oracle import GridSpec, RadialProblem, build_radial_problem, cross_validate, solve_eigenvalues

__version__ = "0.1.0"

__all__ = [
    "build_radial_problem",
    "cancellation_flux",
    "classify_singularity",
    "ConfigError",
    "count_nodes",
    "cross_validate",
    "degeneracy_report",
    "Disclination",
    "DisclinationDisk",
    "Dispiration",
    "DomainError",
    "effective_alpha",
    "energy",
    "energy_disclination",
    "energy_dispiration",
    "energy_kaluza_klein",
    "energy_screw",
    "EnergyLevel",
    "FieldConfig",
    "GridError",
    "GridSpec",
    "InteriorDiskWarning",
    "KKDispiration",
    "kummer_poly",
    "kummer_series",
    "metric_at",
    "normalize",
    "NumericalError",
    "QuantumNumbers",
    "radial_eigenfunction",
    "RadialProblem",
    "ScrewDislocation",
    "solve_eigenvalues",
]
