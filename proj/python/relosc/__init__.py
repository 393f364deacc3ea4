"""Relativistic linear singular oscillator."""

from ._core import (
    CdhParams,
    CollapseError,
    ParameterError,
    OscillatorParams,
    Regime,
    SpectralSolution,
    VerificationReport,
    binding_energy,
    cdh_recurrence,
    cdh_series,
    check_names,
    classify_regime,
    compute_alpha_nu,
    critical_coupling,
    energy_level,
    ln_gamma,
    make_quadrature_grid,
    meixner_pollaczek,
    nonrel_wavefunction,
    overlap_matrix,
    run_verification_suite,
    wavefunction,
)

__all__ = [
    "CdhParams",
    "CollapseError",
    "ParameterError",
    "OscillatorParams",
    "Regime",
    "SpectralSolution",
    "VerificationReport",
    "binding_energy",
    "cdh_recurrence",
    "cdh_series",
    "check_names",
    "classify_regime",
    "compute_alpha_nu",
    "critical_coupling",
    "energy_level",
    "ln_gamma",
    "make_quadrature_grid",
    "meixner_pollaczek",
    "nonrel_wavefunction",
    "overlap_matrix",
    "run_verification_suite",
    "wavefunction",
]
