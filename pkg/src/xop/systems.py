"""The five exactly solvable systems and their rational extensions.

Each system carries three potential variants:

* ``original`` -- the solvable base potential,
* ``shift`` -- the rational term that turns it into its isospectral partner,
* ``extended`` -- their pointwise sum.

The ``ve_*`` functions reproduce the source expressions for the rational
terms verbatim (in the polynomial-equation normalization they were derived
in).  The ``shift`` used by the eigenvalue pipeline is the same rational
profile transported to the Schrodinger operator, which fixes overall scale
and sign; the transport factors were pinned by requiring the closed-form
extended wavefunctions to satisfy the extended operators exactly (see
tests/test_systems.py) rather than by transcription.

Radial oscillators use xi = omega r^2 / 2 and energies (2n + l + 3/2) omega.
The Dirac oscillator reduces, after rescaling the radial coordinate by
sqrt(2), to the omega = 1 oscillator operator -u'' + [l(l+1)/r^2 + r^2/4] u,
whose spectrum is exactly E_n = 2n + l + 3/2; its printed form (in the
unscaled coordinate, where xi = r^2) is kept as a labelled accessor.

The hydrogen-like system is conditionally exactly solvable: with the radial
variable fixed at chi = 1 scale the energy sits at -1/4 and the Coulomb
coupling is quantized at lambda_n = n + s + 1.  Its eigenproblem is therefore
posed in coupling form  A u = lambda (1/r) u  with
A = -d^2/dr^2 + s(s+1)/r^2 + 1/4 (+ shift), and "isospectral" means equal
coupling spectra.  The plain bound-state form with a fixed coupling
``lambda_c`` is exposed for potential plots and the Coulomb-level
cross-check.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .calculus import Jet2, jet_exp, jet_identity, jet_poly, jet_pow
from .errors import DomainError, ParameterError, UsageError
from .exceptional import (
    ClassicalJacobi,
    ClassicalLaguerre,
    FamilySpec,
    X1Jacobi,
    X1Laguerre,
    x1_polynomial,
)
from .polynomials import Polynomial, jacobi_polynomial, laguerre_polynomial

__all__ = [
    "HartmannRadial",
    "HartmannAngularI",
    "HartmannAngularII",
    "DiracOscillator",
    "HydrogenLike",
    "SystemParams",
    "Interval",
    "PotentialFn",
    "ReducedSystem",
    "system_from_dict",
    "system_to_dict",
    "system_from_json",
    "reduce_system",
    "reduce_hartmann_radial",
    "reduce_dirac_oscillator",
    "reduce_hydrogen",
    "ve_hartmann_radial",
    "ve_hartmann_angular_i",
    "ve_hartmann_angular_ii",
    "ve_dirac_oscillator",
    "ve_hydrogen",
    "potential_hartmann_angular_i_printed",
    "dirac_oscillator_potential_printed",
    "hydrogen_standard_energy",
    "analytic_energy",
    "wavefunction",
    "hydrogen_s_parameter",
]


# ---------------------------------------------------------------------------
# parameter records

def _require_level(l) -> int:
    if l != int(l) or l < 0:
        raise ParameterError(f"orbital index must be a nonnegative integer, got {l}")
    return int(l)


@dataclass(frozen=True)
class HartmannRadial:
    """Radial channel of the ring-shaped oscillator: V = l(l+1)/r^2 + omega^2 r^2/4."""

    l: int
    omega: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "l", _require_level(self.l))
        if not self.omega > 0:
            raise ParameterError(f"omega must be positive, got {self.omega}")


@dataclass(frozen=True)
class HartmannAngularI:
    """First angular family; Jacobi variable z = cos(theta) on (0, pi)."""

    lambda_a: float
    s: float

    def __post_init__(self):
        if not self.lambda_a > 0:
            raise ParameterError(f"lambda_a must be positive, got {self.lambda_a}")
        b = self.pole
        if not abs(b) > 1:
            raise ParameterError(
                f"pole inside domain: (2s-1)/(2 lambda) = {b} must lie outside [-1, 1]"
            )
        al, be = self.jacobi_ab
        if not (al > -1 and be > -1):
            raise ParameterError(
                f"Jacobi exponents ({al}, {be}) must exceed -1"
            )

    @property
    def pole(self) -> float:
        return (2 * self.s - 1) / (2 * self.lambda_a)

    @property
    def jacobi_ab(self) -> tuple[float, float]:
        return self.s - self.lambda_a - 0.5, self.s + self.lambda_a - 0.5


@dataclass(frozen=True)
class HartmannAngularII:
    """Second angular family; Jacobi variable z = cos(2 theta) on (0, pi/2)."""

    lambda_a: float
    s: float

    def __post_init__(self):
        if self.s == self.lambda_a:
            raise ParameterError("s = lambda_a makes the pole parameter infinite")
        b = self.pole
        if not abs(b) > 1:
            raise ParameterError(
                f"pole inside domain: (s+lambda-1)/(s-lambda) = {b} must lie outside [-1, 1]"
            )
        al, be = self.jacobi_ab
        if not (al > -1 and be > -1):
            raise ParameterError(f"Jacobi exponents ({al}, {be}) must exceed -1")

    @property
    def pole(self) -> float:
        return (self.s + self.lambda_a - 1) / (self.s - self.lambda_a)

    @property
    def jacobi_ab(self) -> tuple[float, float]:
        return self.lambda_a - 0.5, self.s - 0.5


@dataclass(frozen=True)
class DiracOscillator:
    """Dirac oscillator radial channel in natural units (omega = 1)."""

    l: int
    omega: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "l", _require_level(self.l))
        if self.omega != 1.0:
            raise ParameterError(
                "the Dirac oscillator reduction is taken in natural units; omega must be 1"
            )


@dataclass(frozen=True)
class HydrogenLike:
    """Relativistic hydrogen-like radial channel, radial variable at chi = 1 scale."""

    s: float
    lambda_c: float
    chi: float = 1.0

    def __post_init__(self):
        if not self.s > 0:
            raise ParameterError(f"s must be positive (positive root), got {self.s}")
        if not self.chi > 0:
            raise ParameterError(f"chi must be positive, got {self.chi}")


SystemParams = Union[
    HartmannRadial, HartmannAngularI, HartmannAngularII, DiracOscillator, HydrogenLike
]

_SYSTEM_KINDS = {
    cls.__name__: cls
    for cls in (HartmannRadial, HartmannAngularI, HartmannAngularII,
                DiracOscillator, HydrogenLike)
}


def system_to_dict(params: SystemParams) -> dict:
    fields = {}
    for key, value in vars(params).items():
        fields[key] = int(value) if isinstance(value, int) else float(value)
    return {"kind": type(params).__name__, "params": fields}


def system_from_dict(data: dict) -> SystemParams:
    try:
        cls = _SYSTEM_KINDS[data["kind"]]
        params = data.get("params", {})
    except (KeyError, TypeError) as exc:
        raise UsageError(f"invalid system spec: {data!r}") from exc
    try:
        return cls(**params)
    except TypeError as exc:
        raise UsageError(f"invalid parameters for {data['kind']}: {params!r}") from exc


def system_from_json(text: str) -> SystemParams:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"system spec is not valid JSON: {exc}") from exc
    return system_from_dict(data)


def hydrogen_s_parameter(l: int, coupling_sq: float) -> float:
    """Positive root of s(s+1) = l(l+1) - coupling_sq."""
    rhs = _require_level(l) * (int(l) + 1) - coupling_sq
    disc = 1.0 + 4.0 * rhs
    if disc <= 1.0:
        raise ParameterError(
            f"no positive root: l(l+1) - coupling_sq = {rhs} must be positive"
        )
    return 0.5 * (-1.0 + math.sqrt(disc))


# ---------------------------------------------------------------------------
# potentials

@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float
    lo_open: bool = True
    hi_open: bool = True

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        lo_ok = (x > self.lo) if self.lo_open else (x >= self.lo)
        hi_ok = (x < self.hi) if self.hi_open else (x <= self.hi)
        return bool(np.all(lo_ok & hi_ok))


@dataclass(frozen=True)
class PotentialFn:
    """A potential variant bound to its system, domain and coordinate."""

    system: SystemParams
    variant: str  # "original" | "shift" | "extended"
    domain: Interval
    coordinate: str  # "r" | "theta"
    fn: Callable[[np.ndarray], np.ndarray]

    def __call__(self, x):
        return self.fn(np.asarray(x, dtype=float))


# printed rational terms, exactly as derived in the polynomial equations ----

def ve_hartmann_radial(params: HartmannRadial, r):
    """1/(xi+m) - (2l+1)/(xi+m)^2 with xi = omega r^2/2, m = l + 1/2."""
    xi = params.omega * np.asarray(r, dtype=float) ** 2 / 2
    u = xi + params.l + 0.5
    return 1.0 / u - (2 * params.l + 1) / u**2


def ve_hartmann_angular_i(params: HartmannAngularI, z):
    """2b/(b-z) - (2-2b^2)/(b-z)^2 with b = (2s-1)/(2 lambda), z = cos(theta)."""
    b = params.pole
    z = np.asarray(z, dtype=float)
    if np.any(z <= -1) or np.any(z >= 1):
        raise DomainError("z = cos(theta) must lie in (-1, 1)")
    return 2 * b / (b - z) - (2 - 2 * b**2) / (b - z) ** 2


def ve_hartmann_angular_ii(params: HartmannAngularII, z):
    """2b/(z-b) - (2-2b^2)/(z-b)^2 with b = (s+lambda-1)/(s-lambda)."""
    b = params.pole
    z = np.asarray(z, dtype=float)
    if np.any(z <= -1) or np.any(z >= 1):
        raise DomainError("z = cos(2 theta) must lie in (-1, 1)")
    return 2 * b / (z - b) - (2 - 2 * b**2) / (z - b) ** 2


def ve_dirac_oscillator(params: DiracOscillator, r):
    """1/(r^2+m) - 2m/(r^2+m)^2 with m = (2l+1)/2, in the unscaled coordinate."""
    u = np.asarray(r, dtype=float) ** 2 + params.l + 0.5
    return 1.0 / u - (2 * params.l + 1) / u**2


def ve_hydrogen(params: HydrogenLike, r):
    """1/(r+2s+1) - 2(2s+1)/(r+2s+1)^2."""
    kk = 2 * params.s + 1
    u = np.asarray(r, dtype=float) + kk
    return 1.0 / u - 2 * kk / u**2


# operator-level shifts (what actually extends the Schrodinger operators) ---

def _jacobi_insertion(b: float, z):
    # the rational term entering the polynomial equation next to the eigenvalue
    return 2 * z / (b - z) - 2 * (1 - z**2) / (b - z) ** 2


def _oscillator_shift(l: int, omega: float, r):
    xi = omega * r**2 / 2
    u = xi + l + 0.5
    return 2 * omega * (1.0 / u - (2 * l + 1) / u**2)


def _shift_fn(params: SystemParams) -> Callable:
    if isinstance(params, HartmannRadial):
        return lambda r: _oscillator_shift(params.l, params.omega, r)
    if isinstance(params, DiracOscillator):
        return lambda r: _oscillator_shift(params.l, 1.0, r)
    if isinstance(params, HydrogenLike):
        def hydrogen_shift(r):
            return ve_hydrogen(params, r) / r
        return hydrogen_shift
    if isinstance(params, HartmannAngularI):
        return lambda theta: -_jacobi_insertion(params.pole, np.cos(theta))
    return lambda theta: -4.0 * _jacobi_insertion(params.pole, np.cos(2 * theta))


def _original_fn(params: SystemParams) -> Callable:
    if isinstance(params, HartmannRadial):
        return lambda r: params.l * (params.l + 1) / r**2 + params.omega**2 * r**2 / 4
    if isinstance(params, DiracOscillator):
        return lambda r: params.l * (params.l + 1) / r**2 + r**2 / 4
    if isinstance(params, HydrogenLike):
        return lambda r: params.s * (params.s + 1) / r**2 - params.lambda_c / r
    if isinstance(params, HartmannAngularI):
        la, s = params.lambda_a, params.s
        def angular_i(theta):
            sin2 = np.sin(theta) ** 2
            return ((la**2 + s**2 - s) - la * (2 * s - 1) * np.cos(theta)) / sin2
        return angular_i
    la, s = params.lambda_a, params.s
    return lambda theta: la * (la - 1) / np.sin(theta) ** 2 + s * (s - 1) / np.cos(theta) ** 2


def potential_hartmann_angular_i_printed(params: HartmannAngularI, theta):
    """First angular potential in its textbook-printed form, with csc^2
    coefficient (lambda^2 + s^2 + s).

    Kept for documentation: the eigenproblem -H'' + V H = (s+n)^2 H with the
    Jacobi-form closed solutions requires the coefficient (lambda^2+s^2-s)
    used by ``reduce_system`` instead (the two differ by 2s csc^2 theta).
    """
    la, s = params.lambda_a, params.s
    theta = np.asarray(theta, dtype=float)
    if np.any(theta <= 0) or np.any(theta >= np.pi):
        raise DomainError("theta must lie in (0, pi)")
    sin2 = np.sin(theta) ** 2
    return ((la**2 + s**2 + s) - la * (2 * s - 1) * np.cos(theta)) / sin2


def dirac_oscillator_potential_printed(params: DiracOscillator, r, energy: float):
    """As-printed modified Dirac oscillator potential
    r^2/2 + l(l+1)/r^2 - E + ve; documentation only (the spectral pipeline
    uses the rescaled operator form, see module docstring)."""
    r = np.asarray(r, dtype=float)
    return (r**2 / 2 + params.l * (params.l + 1) / r**2 - energy
            + ve_dirac_oscillator(params, r))


# ---------------------------------------------------------------------------
# energies and families

def analytic_energy(params: SystemParams, n: int) -> float:
    """Eigenvalue of the system's eigenproblem at level n (0-based).

    For HydrogenLike this is the quantized coupling lambda_n = n + s + 1 of
    the coupling-form eigenproblem; all other systems return plain energies.
    """
    if n < 0 or n != int(n):
        raise UsageError(f"level must be a nonnegative integer, got {n}")
    n = int(n)
    if isinstance(params, HartmannRadial):
        return (2 * n + params.l + 1.5) * params.omega
    if isinstance(params, DiracOscillator):
        return 2 * n + params.l + 1.5
    if isinstance(params, HydrogenLike):
        return n + params.s + 1
    if isinstance(params, HartmannAngularI):
        return (params.s + n) ** 2
    return (params.lambda_a + params.s + 2 * n) ** 2


def hydrogen_standard_energy(params: HydrogenLike, n: int) -> float:
    """Bound-state energy -lambda_c^2 / (4 (n+s+1)^2) of the fixed-coupling form."""
    if n < 0 or n != int(n):
        raise UsageError(f"level must be a nonnegative integer, got {n}")
    return -params.lambda_c**2 / (4.0 * (n + params.s + 1) ** 2)


def _classical_family(params: SystemParams) -> FamilySpec:
    if isinstance(params, (HartmannRadial, DiracOscillator)):
        return ClassicalLaguerre(params.l + 0.5)
    if isinstance(params, HydrogenLike):
        return ClassicalLaguerre(2 * params.s + 1)
    al, be = params.jacobi_ab
    return ClassicalJacobi(al, be)


def _x1_family(params: SystemParams) -> FamilySpec:
    if isinstance(params, (HartmannRadial, DiracOscillator)):
        return X1Laguerre(params.l + 0.5)
    if isinstance(params, HydrogenLike):
        return X1Laguerre(2 * params.s + 1)
    if isinstance(params, HartmannAngularI):
        return X1Jacobi(a=params.lambda_a, b=params.pole)
    return X1Jacobi(a=(params.s - params.lambda_a) / 2, b=params.pole)


# ---------------------------------------------------------------------------
# closed-form wavefunctions

def _coordinate_jet(params: SystemParams, x: np.ndarray) -> Jet2:
    """Jet of the polynomial variable as a function of the physical coordinate."""
    if isinstance(params, HartmannRadial):
        w = params.omega
        return Jet2(w * x**2 / 2, w * x, np.full_like(x, w))
    if isinstance(params, DiracOscillator):
        return Jet2(x**2 / 2, x, np.ones_like(x))
    if isinstance(params, HydrogenLike):
        return jet_identity(x)
    if isinstance(params, HartmannAngularI):
        return Jet2(np.cos(x), -np.sin(x), -np.cos(x))
    return Jet2(np.cos(2 * x), -2 * np.sin(2 * x), -4 * np.cos(2 * x))


def _prefactor_jet(params: SystemParams, z: Jet2) -> Jet2:
    """Solvable-system prefactor jet in the physical coordinate, built
    through the polynomial-variable jet z."""
    if isinstance(params, (HartmannRadial, DiracOscillator)):
        return jet_pow(z, (params.l + 1) / 2) * jet_exp(z * (-0.5))
    if isinstance(params, HydrogenLike):
        return jet_pow(z, params.s + 1) * jet_exp(z * (-0.5))
    if isinstance(params, HartmannAngularI):
        a_exp = (params.s - params.lambda_a) / 2
        b_exp = (params.s + params.lambda_a) / 2
    else:
        a_exp = params.lambda_a / 2
        b_exp = params.s / 2
    one = Jet2(np.ones_like(z.val), np.zeros_like(z.val), np.zeros_like(z.val))
    return jet_pow(one - z, a_exp) * jet_pow(one + z, b_exp)


def _pole_offset(params: SystemParams) -> tuple[float, float]:
    """(c0, c1) such that the pole factor is c0 + c1 * z."""
    if isinstance(params, (HartmannRadial, DiracOscillator)):
        return params.l + 0.5, 1.0
    if isinstance(params, HydrogenLike):
        return 2 * params.s + 1, 1.0
    return params.pole, -1.0  # b - z


def _classical_polynomial(params: SystemParams, n: int) -> Polynomial:
    fam = _classical_family(params)
    if isinstance(fam, ClassicalLaguerre):
        return laguerre_polynomial(n, fam.k)
    return jacobi_polynomial(n, fam.alpha, fam.beta)


def wavefunction(params: SystemParams, variant: str, n: int) -> Callable[[np.ndarray], Jet2]:
    """Closed-form eigenfunction with analytic first/second derivatives.

    variant "original": level n >= 0, prefactor times the classical
    polynomial.  variant "exceptional": X1 degree n >= 1 (level n-1),
    prefactor times the X1 polynomial over the pole factor; degree 0 does not
    exist (codimension gap).
    """
    if variant not in ("original", "exceptional"):
        raise UsageError(f"variant must be 'original' or 'exceptional', got {variant!r}")
    if n != int(n) or n < 0:
        raise UsageError(f"index must be a nonnegative integer, got {n}")
    n = int(n)
    if variant == "exceptional":
        if n == 0:
            raise UsageError("codimension gap: no degree-0 exceptional wavefunction")
        poly = x1_polynomial(_x1_family(params), n).polynomial
    else:
        poly = _classical_polynomial(params, n)
    c0, c1 = _pole_offset(params)
    domain = _domain(params)

    def psi(x) -> Jet2:
        x = np.asarray(x, dtype=float)
        if not domain.contains(x):
            raise DomainError(
                f"coordinate outside open domain ({domain.lo}, {domain.hi})"
            )
        z = _coordinate_jet(params, x)
        value = _prefactor_jet(params, z) * jet_poly(poly, z)
        if variant == "exceptional":
            value = value / (z * c1 + c0)
        return value

    return psi


# ---------------------------------------------------------------------------
# reduction

@dataclass(frozen=True)
class ReducedSystem:
    """Everything the spectral pipeline needs for one system."""

    params: SystemParams
    coordinate: str
    domain: Interval
    grid_domain: tuple[float, float]
    original: PotentialFn
    shift: PotentialFn
    extended: PotentialFn
    classical_family: FamilySpec
    x1_family: FamilySpec
    operator_potential: Callable[[np.ndarray], np.ndarray]
    eigen_weight: Callable[[np.ndarray], np.ndarray] | None
    residual_window: tuple[float, float]

    def energy(self, n: int) -> float:
        return analytic_energy(self.params, n)

    def operator_extended(self, x):
        return self.operator_potential(x) + self.shift(x)

    def wavefunction(self, variant: str, n: int):
        return wavefunction(self.params, variant, n)


def _domain(params: SystemParams) -> Interval:
    if isinstance(params, (HartmannRadial, DiracOscillator, HydrogenLike)):
        return Interval(0.0, math.inf)
    if isinstance(params, HartmannAngularI):
        return Interval(0.0, math.pi)
    return Interval(0.0, math.pi / 2)


_ANGULAR_CLIP = 1e-2


def _grid_domain(params: SystemParams) -> tuple[float, float]:
    # truncation radii keep the dropped prefactor tail below 1e-12 of its peak
    if isinstance(params, HartmannRadial):
        return 0.0, 20.0 / math.sqrt(params.omega)
    if isinstance(params, DiracOscillator):
        return 0.0, 20.0
    if isinstance(params, HydrogenLike):
        return 0.0, 80.0
    if isinstance(params, HartmannAngularI):
        return _ANGULAR_CLIP, math.pi - _ANGULAR_CLIP
    return _ANGULAR_CLIP, math.pi / 2 - _ANGULAR_CLIP


def _residual_window(params: SystemParams) -> tuple[float, float]:
    if isinstance(params, HartmannRadial):
        return 0.05, 12.0 / math.sqrt(params.omega)
    if isinstance(params, DiracOscillator):
        return 0.05, 12.0
    if isinstance(params, HydrogenLike):
        return 0.1, 40.0
    if isinstance(params, HartmannAngularI):
        return 0.15, math.pi - 0.15
    return 0.08, math.pi / 2 - 0.08


def reduce_system(params: SystemParams) -> ReducedSystem:
    """Build the full reduced description (potentials, families, eigenform)."""
    coordinate = "r" if isinstance(params, (HartmannRadial, DiracOscillator, HydrogenLike)) else "theta"
    domain = _domain(params)
    original = _original_fn(params)
    shift = _shift_fn(params)

    def extended(x):
        return original(x) + shift(x)

    if isinstance(params, HydrogenLike):
        s = params.s

        def operator_potential(r):
            return s * (s + 1) / r**2 + 0.25

        def eigen_weight(r):
            return 1.0 / r
    else:
        operator_potential = original
        eigen_weight = None

    def as_potential(variant, fn):
        return PotentialFn(params, variant, domain, coordinate, fn)

    return ReducedSystem(
        params=params,
        coordinate=coordinate,
        domain=domain,
        grid_domain=_grid_domain(params),
        original=as_potential("original", original),
        shift=as_potential("shift", shift),
        extended=as_potential("extended", extended),
        classical_family=_classical_family(params),
        x1_family=_x1_family(params),
        operator_potential=operator_potential,
        eigen_weight=eigen_weight,
        residual_window=_residual_window(params),
    )


def reduce_hartmann_radial(l: int, omega: float = 1.0) -> ReducedSystem:
    return reduce_system(HartmannRadial(l=l, omega=omega))


def reduce_dirac_oscillator(l: int, omega: float = 1.0) -> ReducedSystem:
    return reduce_system(DiracOscillator(l=l, omega=omega))


def reduce_hydrogen(s: float, lambda_c: float | None = None, chi: float = 1.0) -> ReducedSystem:
    if lambda_c is None:
        lambda_c = s + 1.0  # ground state sits exactly at -1/4
    return reduce_system(HydrogenLike(s=s, lambda_c=lambda_c, chi=chi))
