"""Membrane wave / half-space diffusion toolkit.

Everything lives in the compiled extension; this package just re-exports it.
"""

from ._core import (
    caputo_derivative,
    dtn_flux,
    fractional_dispersion,
    frac_kernel_n,
    identity_check,
    longwave_asymptote,
    memory_kernel_m,
    nondimensionalize,
    psd_certificate,
    run_experiment,
    shortwave_asymptote,
    simulate_coupled,
    simulate_fractional,
    solve_dispersion,
)

__all__ = [
    "caputo_derivative",
    "dtn_flux",
    "fractional_dispersion",
    "frac_kernel_n",
    "identity_check",
    "longwave_asymptote",
    "memory_kernel_m",
    "nondimensionalize",
    "psd_certificate",
    "run_experiment",
    "shortwave_asymptote",
    "simulate_coupled",
    "simulate_fractional",
    "solve_dispersion",
]

__version__ = "0.1.0"
