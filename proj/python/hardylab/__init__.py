"""Spectral experiments on de Branges-Rovnyak spaces (C++ core)."""

from ._core import (
    DimensionError,
    DomainError,
    Error,
    ExtremePointError,
    Factorization,
    FourierSeries,
    GridError,
    MateSolution,
    NumericalError,
    ParseError,
    PythagoreanPair,
    Settings,
    commutation_residual,
    factorize_rational,
    gevrey_fit,
    hankel_continuity_probe,
    lotto_sarason_check,
    non_extremality_margin,
    parse_function,
    pythagorean_mate,
    run_scenario,
    solve_mate,
    toeplitz_preimage,
)

__all__ = [name for name in dir() if not name.startswith("_")]
