"""Exact spectra for a 2D quantum ring with a dipolar impurity.

Pseudoharmonic radial confinement plus an in-plane dipole term and an
Aharonov-Bohm flux. The angular problem maps onto Mathieu characteristic
values; the radial problem is solved in closed form. Everything exposed
here is cross-checked against independent finite-difference eigensolvers
in :mod:`qring.oracle`.
"""
from .errors import (
    ConvergenceError,
    DomainError,
    EvaluationError,
    IntegrationError,
    NumericsError,
    ParameterError,
    PoleError,
    QringError,
    SupercriticalError,
    UsageError,
)
from .hyper import gamma, hyp1f1_poly, laguerre, normalization_constant
from .mathieu import (
    Branch,
    FourierCoeffs,
    MathieuChar,
    char_value,
    char_value_fractional,
    char_value_series,
    eval_angular,
    fourier_coeffs,
    series_p8_estimate,
)
from .oracle import (
    ConvergenceReport,
    FdSpectrum,
    angular_fd_eigs,
    convergence_report,
    radial_fd_eigs,
)
from .params import (
    HARTREE_EV,
    MaterialSpec,
    PhoParams,
    SystemParams,
    builtin_materials,
    ev_to_hartree,
    from_material,
    from_pho,
    get_material,
    hartree_to_ev,
    is_tan_inkson,
    parse_config,
)
from .spectrum import (
    QuantumState,
    SpectrumRow,
    SweepConfig,
    ab_correction,
    angular_eigenvalue,
    correction,
    energy,
    qr_energy,
    radial_exponent,
    sweep,
    transition,
)
from .wavefun import (
    ProfileTable,
    WaveSpec,
    count_radial_nodes,
    make_wave,
    normalize_numeric,
    psi,
    radial_profile,
    renormalized,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "ConvergenceError",
    "ConvergenceReport",
    "DomainError",
    "EvaluationError",
    "FdSpectrum",
    "FourierCoeffs",
    "HARTREE_EV",
    "IntegrationError",
    "MathieuChar",
    "MaterialSpec",
    "NumericsError",
    "ParameterError",
    "PhoParams",
    "PoleError",
    "ProfileTable",
    "QringError",
    "QuantumState",
    "SpectrumRow",
    "SupercriticalError",
    "SweepConfig",
    "SystemParams",
    "UsageError",
    "WaveSpec",
    "ab_correction",
    "angular_eigenvalue",
    "angular_fd_eigs",
    "builtin_materials",
    "char_value",
    "char_value_fractional",
    "char_value_series",
    "convergence_report",
    "correction",
    "count_radial_nodes",
    "energy",
    "ev_to_hartree",
    "eval_angular",
    "fourier_coeffs",
    "from_material",
    "from_pho",
    "gamma",
    "get_material",
    "hartree_to_ev",
    "hyp1f1_poly",
    "is_tan_inkson",
    "laguerre",
    "make_wave",
    "normalization_constant",
    "normalize_numeric",
    "parse_config",
    "psi",
    "qr_energy",
    "radial_exponent",
    "radial_fd_eigs",
    "radial_profile",
    "renormalized",
    "series_p8_estimate",
    "sweep",
    "transition",
]
