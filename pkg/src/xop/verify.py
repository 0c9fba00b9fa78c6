"""Isospectrality verification: solve original and extended operators on the
same grids, Richardson-extrapolate, and bundle spectral differences with
closed-form residuals and Gram orthogonality checks into one report."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UsageError
from .exceptional import gram_matrix, max_offdiag_ratio
from .spectral import (
    Grid,
    SpectrumResult,
    apply_coordinate_weight,
    discretize,
    eigen_lowest,
    extrapolate,
    residual_on_operator,
)
from .systems import ReducedSystem, SystemParams, reduce_system, system_to_dict

__all__ = [
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "VerificationReport",
    "isospectral_compare",
    "solve_variant",
]

_RESIDUAL_DEGREES = (1, 2, 3)
_GRAM_MEMBERS = 4


@dataclass(frozen=True)
class Tolerances:
    spectral_radial: float = 1e-4
    spectral_angular: float = 1e-3
    residual: float = 1e-8
    gram: float = 1e-7

    def __post_init__(self):
        for name, value in vars(self).items():
            if not value > 0:
                raise UsageError(f"tolerance {name} must be positive, got {value}")

    def scaled(self, factor: float) -> "Tolerances":
        if not factor > 0:
            raise UsageError(f"tolerance scale must be positive, got {factor}")
        return Tolerances(*(factor * v for v in vars(self).values()))


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class VerificationReport:
    system: SystemParams
    level_count: int
    eigenvalues_original: tuple[float, ...]
    eigenvalues_extended: tuple[float, ...]
    spectral_diffs: tuple[float, ...]
    max_wavefunction_residual: float
    gram_max_offdiag: float
    spectral_tolerance: float
    residual_tolerance: float
    gram_tolerance: float
    extrapolation_error: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "system": system_to_dict(self.system),
            "level_count": self.level_count,
            "eigenvalues_original": list(self.eigenvalues_original),
            "eigenvalues_extended": list(self.eigenvalues_extended),
            "spectral_diffs": list(self.spectral_diffs),
            "max_wavefunction_residual": self.max_wavefunction_residual,
            "gram_max_offdiag": self.gram_max_offdiag,
            "tolerances": {
                "spectral": self.spectral_tolerance,
                "residual": self.residual_tolerance,
                "gram": self.gram_tolerance,
            },
            "extrapolation_error": self.extrapolation_error,
            "passed": self.passed,
        }


def solve_variant(reduced: ReducedSystem, variant: str, levels: int,
                  grid_points: int, domain: tuple[float, float] | None = None) -> SpectrumResult:
    """Extrapolated spectrum of one potential variant on the default grids."""
    lo, hi = domain if domain is not None else reduced.grid_domain
    if variant == "original":
        potential = reduced.operator_potential
    elif variant == "extended":
        potential = reduced.operator_extended
    else:
        raise UsageError(f"variant must be 'original' or 'extended', got {variant!r}")
    coarse_grid = Grid(lo, hi, grid_points)
    results = []
    for grid in (coarse_grid, coarse_grid.refined()):
        op = discretize(potential, grid)
        if reduced.eigen_weight is not None:
            op = apply_coordinate_weight(op, reduced.eigen_weight)
        results.append(eigen_lowest(op, levels))
    return extrapolate(*results)


def _closed_form_residual(reduced: ReducedSystem, levels: int) -> float:
    lo, hi = reduced.residual_window
    samples = np.linspace(lo, hi, 200)
    worst = 0.0
    for degree in _RESIDUAL_DEGREES[: max(1, min(len(_RESIDUAL_DEGREES), levels))]:
        psi = reduced.wavefunction("exceptional", degree)
        energy = reduced.energy(degree - 1)
        worst = max(worst, residual_on_operator(
            reduced.operator_extended, psi, energy, samples,
            eigen_weight=reduced.eigen_weight,
        ))
    return worst


def isospectral_compare(params: SystemParams, levels: int = 4, *,
                        grid_points: int = 2000,
                        tolerances: Tolerances = DEFAULT_TOLERANCES,
                        domain: tuple[float, float] | None = None) -> VerificationReport:
    """Compare the lowest `levels` extrapolated eigenvalues of the original
    and extended operators and run the residual and orthogonality checks.

    Eigenvalues are energies, except for the hydrogen-like system where the
    eigenproblem is the coupling form and they are the quantized couplings.
    """
    if not 1 <= levels <= 8:
        raise UsageError(f"levels must lie in 1..8, got {levels}")
    reduced = reduce_system(params)
    original = solve_variant(reduced, "original", levels, grid_points, domain)
    extended = solve_variant(reduced, "extended", levels, grid_points, domain)
    diffs = np.abs(extended.eigenvalues - original.eigenvalues)
    residual = _closed_form_residual(reduced, levels)
    gram = gram_matrix(reduced.x1_family, _GRAM_MEMBERS)
    gram_off = max_offdiag_ratio(gram)
    spectral_tol = (tolerances.spectral_radial if reduced.coordinate == "r"
                    else tolerances.spectral_angular)
    passed = bool(
        np.max(diffs) <= spectral_tol
        and residual <= tolerances.residual
        and gram_off <= tolerances.gram
    )
    return VerificationReport(
        system=params,
        level_count=levels,
        eigenvalues_original=tuple(float(v) for v in original.eigenvalues),
        eigenvalues_extended=tuple(float(v) for v in extended.eigenvalues),
        spectral_diffs=tuple(float(v) for v in diffs),
        max_wavefunction_residual=float(residual),
        gram_max_offdiag=float(gram_off),
        spectral_tolerance=spectral_tol,
        residual_tolerance=tolerances.residual,
        gram_tolerance=tolerances.gram,
        extrapolation_error=max(original.extrapolation_error, extended.extrapolation_error),
        passed=passed,
    )
