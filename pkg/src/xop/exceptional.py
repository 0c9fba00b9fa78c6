"""Exceptional (X1) Laguerre and Jacobi polynomial families.

The X1 families are codimension-1: their polynomial sequences start at degree
one.  Members are computed as polynomial eigenfunctions of the rational
second-order operators

    X1-Laguerre:  -x y'' + (x-k)/(x+k) [ (x+k+1) y' - y ]          = lam y
    X1-Jacobi:    (x^2-1) y'' + 2a (1-bx)/(b-x) [ (x-c) y' - y ]   = lam y

after clearing the denominator, which turns each into a banded generalized
matrix pencil on the monomial basis.  The relative sign inside the bracket is
fixed by requiring that polynomial eigenfunctions exist at every degree; the
opposite sign admits none (see tests), which is how the convention was pinned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np
import scipy.linalg

from .errors import (
    AccuracyError,
    ConsistencyError,
    DomainError,
    ParameterError,
    UsageError,
)
from .polynomials import Polynomial, jacobi_polynomial, laguerre_polynomial
from .quadrature import QuadratureRule, finite_rule, semi_infinite_rule

__all__ = [
    "ClassicalLaguerre",
    "ClassicalJacobi",
    "X1Laguerre",
    "X1Jacobi",
    "FamilySpec",
    "EigenPair",
    "family_from_dict",
    "family_to_dict",
    "family_domain",
    "family_eigenvalue",
    "x1_jacobi_alpha_beta",
    "x1_jacobi_from_classical",
    "x1_eigenpairs",
    "x1_polynomial",
    "degree0_eigenfunction_exists",
    "ode_residual",
    "weight",
    "family_members",
    "gram_matrix",
    "max_offdiag_ratio",
]


# ---------------------------------------------------------------------------
# family specifications

@dataclass(frozen=True)
class ClassicalLaguerre:
    k: float

    def __post_init__(self):
        if not self.k > -1:
            raise ParameterError(f"Laguerre parameter must exceed -1, got k={self.k}")


@dataclass(frozen=True)
class ClassicalJacobi:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1 and self.beta > -1):
            raise ParameterError(
                f"Jacobi parameters must exceed -1, got ({self.alpha}, {self.beta})"
            )


@dataclass(frozen=True)
class X1Laguerre:
    k: float

    def __post_init__(self):
        if not self.k > 0:
            raise ParameterError(
                f"pole inside domain: X1-Laguerre needs k > 0 so -k stays off [0, inf), got k={self.k}"
            )


@dataclass(frozen=True)
class X1Jacobi:
    a: float
    b: float
    c: float | None = None

    def __post_init__(self):
        if self.a == 0:
            raise ParameterError("X1-Jacobi parameter a must be nonzero")
        if not abs(self.b) > 1:
            raise ParameterError(
                f"pole inside domain: X1-Jacobi needs |b| > 1, got b={self.b}"
            )
        c = self.b + 1.0 / self.a
        if self.c is None:
            object.__setattr__(self, "c", c)
        elif abs(self.c - c) > 1e-12 * (1 + abs(c)):
            raise ParameterError(
                f"X1-Jacobi requires c = b + 1/a = {c}, got c={self.c}"
            )


FamilySpec = Union[ClassicalLaguerre, ClassicalJacobi, X1Laguerre, X1Jacobi]

_FAMILY_KINDS = {
    "ClassicalLaguerre": ClassicalLaguerre,
    "ClassicalJacobi": ClassicalJacobi,
    "X1Laguerre": X1Laguerre,
    "X1Jacobi": X1Jacobi,
}


def family_to_dict(family: FamilySpec) -> dict:
    params = {k: float(v) for k, v in vars(family).items() if v is not None}
    return {"kind": type(family).__name__, "params": params}


def family_from_dict(data: dict) -> FamilySpec:
    try:
        kind = data["kind"]
        params = data.get("params", {})
        cls = _FAMILY_KINDS[kind]
    except (KeyError, TypeError) as exc:
        raise UsageError(f"invalid family spec: {data!r}") from exc
    try:
        return cls(**params)
    except TypeError as exc:
        raise UsageError(f"invalid parameters for {kind}: {params!r}") from exc


def family_domain(family: FamilySpec) -> tuple[float, float]:
    if isinstance(family, (ClassicalLaguerre, X1Laguerre)):
        return (0.0, math.inf)
    return (-1.0, 1.0)


def x1_jacobi_alpha_beta(a: float, b: float) -> tuple[float, float]:
    """Classical (alpha, beta) hiding behind X1-Jacobi (a, b): from
    beta - alpha = 2a and beta + alpha = 2ab."""
    if not abs(b) > 1:
        raise ParameterError(f"|b| must exceed 1, got b={b}")
    return a * b - a, a * b + a


def x1_jacobi_from_classical(alpha: float, beta: float) -> X1Jacobi:
    if alpha == beta:
        raise ParameterError("X1-Jacobi needs alpha != beta (a would vanish)")
    a = 0.5 * (beta - alpha)
    b = (beta + alpha) / (beta - alpha)
    return X1Jacobi(a=a, b=b)


@dataclass(frozen=True)
class EigenPair:
    eigenvalue: float
    polynomial: Polynomial


def family_eigenvalue(family: FamilySpec, degree: int) -> float:
    """Eigenvalue of the degree-`degree` member under the family's operator
    (classical operators oriented so the eigenvalue is +n resp. +n(n+a+b+1))."""
    if isinstance(family, ClassicalLaguerre):
        return float(degree)
    if isinstance(family, ClassicalJacobi):
        return degree * (degree + family.alpha + family.beta + 1)
    if isinstance(family, X1Laguerre):
        return float(degree - 1)
    return (degree - 1) * (degree + 2 * family.a * family.b)


# ---------------------------------------------------------------------------
# matrix pencils on the monomial basis

def _laguerre_pencil(k: float, size: int, bracket_sign: float = -1.0):
    """Rows 0..size+1 of T - lam S where T y = -x(x+k) y'' + (x-k)(x+k+1) y'
    + sign (x-k) y and S y = (x+k) y, on monomial columns 0..size."""
    T = np.zeros((size + 2, size + 1))
    S = np.zeros((size + 2, size + 1))
    for j in range(size + 1):
        jj = j * (j - 1)
        T[j, j] += -jj
        if j >= 1:
            T[j - 1, j] += -k * jj
        # (x-k)(x+k+1) = x^2 + x - k^2 - k
        T[j + 1, j] += j
        T[j, j] += j
        if j >= 1:
            T[j - 1, j] += -(k * k + k) * j
        T[j + 1, j] += bracket_sign
        T[j, j] += -bracket_sign * k
        S[j + 1, j] += 1.0
        S[j, j] += k
    return T, S


def _jacobi_pencil(a: float, b: float, c: float, size: int, bracket_sign: float = -1.0):
    """Same layout for T y = (b-x)(x^2-1) y'' + 2a(1-bx)(x-c) y'
    + sign 2a(1-bx) y and S y = (b-x) y."""
    T = np.zeros((size + 2, size + 1))
    S = np.zeros((size + 2, size + 1))
    for j in range(size + 1):
        jj = j * (j - 1)
        # (b-x)(x^2-1) = b x^2 - b - x^3 + x
        T[j, j] += b * jj
        if j >= 2:
            T[j - 2, j] += -b * jj
        T[j + 1, j] += -jj
        if j >= 1:
            T[j - 1, j] += jj
        # 2a(1-bx)(x-c) = 2a(-b x^2 + (1+bc) x - c)
        T[j + 1, j] += -2 * a * b * j
        T[j, j] += 2 * a * (1 + b * c) * j
        if j >= 1:
            T[j - 1, j] += -2 * a * c * j
        T[j, j] += bracket_sign * 2 * a
        T[j + 1, j] += -bracket_sign * 2 * a * b
        S[j, j] += b
        S[j + 1, j] += -1.0
    return T, S


def _pencil(family: FamilySpec, size: int, bracket_sign: float = -1.0):
    if isinstance(family, X1Laguerre):
        return _laguerre_pencil(family.k, size, bracket_sign)
    if isinstance(family, X1Jacobi):
        return _jacobi_pencil(family.a, family.b, family.c, size, bracket_sign)
    raise UsageError(f"{type(family).__name__} is not an X1 family")


_RESIDUAL_TOL = 1e-9


def _leading_order_eigenvalue(family: FamilySpec, degree: int, bracket_sign: float) -> float:
    """Eigenvalue forced by the x^(degree+1) row of the cleared pencil."""
    if isinstance(family, X1Laguerre):
        return float(degree + bracket_sign)
    return degree * (degree - 1) + 2 * family.a * family.b * (degree + bracket_sign)


def _monic_candidate(vec: np.ndarray, degree: int) -> Polynomial | None:
    """Truncate an eigenvector to the target degree and normalize; None when
    the leading coefficient is lost in the vector's noise floor."""
    head = vec[: degree + 1]
    top = np.max(np.abs(head))
    if top == 0 or abs(head[degree]) < 1e-9 * top:
        return None
    return Polynomial(head / head[degree])


def _sample_points(family: FamilySpec, count: int = 50) -> np.ndarray:
    """Chebyshev points on the family's test window ([0, 40] or [-0.99, 0.99])."""
    lo, hi = (0.0, 40.0) if isinstance(family, (ClassicalLaguerre, X1Laguerre)) else (-0.99, 0.99)
    theta = (2 * np.arange(1, count + 1) - 1) * np.pi / (2 * count)
    return 0.5 * (lo + hi) + 0.5 * (hi - lo) * np.cos(theta)


def _nullspace_candidate(family: FamilySpec, degree: int, bracket_sign: float):
    """Recovery path: smallest singular vector of the rectangular pencil
    rows at the leading-order eigenvalue, restricted to degree <= degree."""
    lam = _leading_order_eigenvalue(family, degree, bracket_sign)
    T, S = _pencil(family, degree, bracket_sign)
    _, _, vt = np.linalg.svd(T - lam * S)
    return _monic_candidate(vt[-1], degree), lam


def _recurrence_candidate(family: FamilySpec, degree: int, bracket_sign: float):
    """Recovery path for high degrees: the banded pencil solved top-down from
    the monic leading coefficient.  Coefficients grow toward degree zero, so
    the recurrence runs in the stable direction; extended precision buys an
    extra margin."""
    lam = _leading_order_eigenvalue(family, degree, bracket_sign)
    T, S = _pencil(family, degree, bracket_sign)
    m = np.asarray(T - lam * S, dtype=np.longdouble)
    v = np.zeros(degree + 1, dtype=np.longdouble)
    v[degree] = 1.0  # monic by construction; no noise-floor question here
    for row in range(degree, 0, -1):
        acc = np.dot(m[row, row:], v[row:])
        denom = m[row, row - 1]
        if abs(denom) < 1e-12 * (1 + np.max(np.abs(m[row]))):
            return None, lam  # degenerate row (eigenvalue collision)
        v[row - 1] = -acc / denom
    return Polynomial(v.astype(float)), lam


def x1_eigenpairs(family: FamilySpec, n_max: int, _bracket_sign: float = -1.0):
    """All X1 eigenpairs with degrees 1..n_max, monic, ascending by degree.

    The projected square pencil is solved once (generalized eigensolve);
    eigenvectors are assigned to degrees through the leading-order eigenvalue
    and certified by the rational-ODE residual, which also screens out the
    spurious modes the projection introduces.  Degrees whose eigenvector is
    drowned in projection noise are recovered from a per-degree null-space
    solve of the same pencil.  Degree zero is absent by construction
    (codimension-1 gap).  Raises ConsistencyError when some degree in
    1..n_max has no certified polynomial eigenfunction, the symptom of a
    wrong bracket-sign convention.
    """
    if not isinstance(family, (X1Laguerre, X1Jacobi)):
        raise UsageError(
            f"x1_eigenpairs needs an X1 family, got {type(family).__name__}"
        )
    if not 1 <= n_max <= 32:
        raise UsageError(f"n_max must lie in 1..32, got {n_max}")
    points = _sample_points(family)

    def certify(degree, lam, poly):
        if poly is None:
            return None
        pair = EigenPair(float(lam), poly)
        resid = ode_residual(family, pair, points, scaled=True,
                             _bracket_sign=_bracket_sign)
        if resid <= _RESIDUAL_TOL:
            return (resid, pair)
        # high degrees: the scaled residual may sit at the float64 evaluation
        # noise floor (|coefficient| sums times eps) while the coefficient
        # vector solves the cleared pencil exactly; certify against that floor
        raw = ode_residual(family, pair, points, _bracket_sign=_bracket_sign)
        floor_terms = _ode_terms(family, pair, points, _bracket_sign, _absolute=True)
        noise_floor = 64 * np.finfo(float).eps * np.max(sum(floor_terms))
        return (resid, pair) if raw <= noise_floor else None

    T, S = _pencil(family, n_max, _bracket_sign)
    vals, vecs = scipy.linalg.eig(T[: n_max + 1, :], S[: n_max + 1, :])
    best: dict[int, tuple[float, EigenPair]] = {}
    for degree in range(1, n_max + 1):
        target = _leading_order_eigenvalue(family, degree, _bracket_sign)
        for i in range(vals.size):
            lam = vals[i]
            if not np.isfinite(lam.real):
                continue
            if abs(lam - target) > 1e-6 * (1 + abs(target)):
                continue
            vec = vecs[:, i]
            pivot = np.argmax(np.abs(vec))
            vec = (vec / vec[pivot]).real
            outcome = certify(degree, lam.real, _monic_candidate(vec, degree))
            if outcome and (degree not in best or outcome[0] < best[degree][0]):
                best[degree] = outcome
        if degree not in best:
            for recover in (_recurrence_candidate, _nullspace_candidate):
                poly, lam = recover(family, degree, _bracket_sign)
                outcome = certify(degree, lam, poly)
                if outcome:
                    best[degree] = outcome
                    break
    missing = sorted(set(range(1, n_max + 1)) - set(best))
    if missing:
        raise ConsistencyError(
            f"no polynomial eigenfunction at degrees {missing} for "
            f"{family_to_dict(family)}; this indicates a wrong bracket sign "
            "convention in the X1 operator"
        )
    return [best[d][1] for d in range(1, n_max + 1)]


def x1_polynomial(family: FamilySpec, degree: int) -> EigenPair:
    """Single X1 member of the given degree (degree >= 1)."""
    if degree == 0:
        raise UsageError(
            "codimension gap: X1 families have no degree-0 member"
        )
    return x1_eigenpairs(family, degree)[degree - 1]


def degree0_eigenfunction_exists(family: FamilySpec) -> bool:
    """Direct feasibility check of (T - lam S) applied to the constant
    polynomial: solvable only if all nontrivial rows agree on lam."""
    T, S = _pencil(family, 0)
    t, s = T[:, 0], S[:, 0]
    lams = []
    for ti, si in zip(t, s):
        if si != 0:
            lams.append(ti / si)
        elif ti != 0:
            return False
    return len(lams) > 0 and max(lams) - min(lams) < 1e-12 * (1 + abs(lams[0]))


# ---------------------------------------------------------------------------
# residuals

def _ode_terms(family, pair, x, _bracket_sign=-1.0, _absolute=False):
    """Additive terms of L[y] - lam y at the points x.

    With _absolute=True every factor is replaced by its magnitude bound
    (|coefficients| evaluated at |x|), giving the scale floating-point
    evaluation noise is proportional to.
    """
    p = pair.polynomial
    if _absolute:
        p = Polynomial(np.abs(p.coeffs))
        x = np.abs(x)
    y, y1, y2 = p(x), p.derivative()(x), p.derivative(2)(x)
    lam = pair.eigenvalue
    if _absolute:
        y, y1, y2 = np.abs(y), np.abs(y1), np.abs(y2)

    def factors(*values):
        return [np.abs(v) for v in values] if _absolute else list(values)

    if isinstance(family, ClassicalLaguerre):
        k = family.k
        f1, f2 = factors(-x, -(k + 1 - x))
        terms = [f1 * y2, f2 * y1]
    elif isinstance(family, ClassicalJacobi):
        al, be = family.alpha, family.beta
        f1, f2 = factors(-(1 - x**2), -(be - al - (al + be + 2) * x))
        terms = [f1 * y2, f2 * y1]
    elif isinstance(family, X1Laguerre):
        k = family.k
        ratio = (x - k) / (x + k)
        f1, f2, f3 = factors(-x, ratio * (x + k + 1), _bracket_sign * ratio)
        terms = [f1 * y2, f2 * y1, f3 * y]
    else:
        a, b, c = family.a, family.b, family.c
        ratio = 2 * a * (1 - b * x) / (b - x)
        f1, f2, f3 = factors(x**2 - 1, ratio * (x - c), _bracket_sign * ratio)
        terms = [f1 * y2, f2 * y1, f3 * y]
    terms.append(abs(lam) * y if _absolute else -lam * y)
    return terms


def ode_residual(family: FamilySpec, pair: EigenPair, sample_points,
                 *, scaled: bool = False, _bracket_sign: float = -1.0) -> float:
    """max |L[y] - lam y| over the samples, derivatives taken analytically
    from the coefficient vector.

    With scaled=True the maximum is divided by (1 + max |term|), the scale
    the residual invariants are stated against.
    """
    x = np.asarray(sample_points, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("sample points must be finite")
    if isinstance(family, X1Laguerre) and np.any(x == -family.k):
        raise DomainError(f"sample point at pole x = {-family.k}")
    if isinstance(family, X1Jacobi) and np.any(x == family.b):
        raise DomainError(f"sample point at pole x = {family.b}")
    terms = _ode_terms(family, pair, x, _bracket_sign)
    resid = np.max(np.abs(sum(terms)))
    if not scaled:
        return float(resid)
    scale = 1.0 + max(np.max(np.abs(t)) for t in terms)
    return float(resid / scale)


# ---------------------------------------------------------------------------
# weights, members, Gram matrices

def weight(family: FamilySpec, x):
    """Orthogonality weight at points strictly inside the family domain."""
    x = np.asarray(x, dtype=float)
    lo, hi = family_domain(family)
    if np.any(x <= lo) or np.any(x >= hi):
        raise DomainError(f"weight argument outside open domain ({lo}, {hi})")
    if isinstance(family, ClassicalLaguerre):
        return np.exp(family.k * np.log(x) - x)
    if isinstance(family, X1Laguerre):
        return np.exp(family.k * np.log(x) - x) / (x + family.k) ** 2
    if isinstance(family, ClassicalJacobi):
        return (1 - x) ** family.alpha * (1 + x) ** family.beta
    al, be = x1_jacobi_alpha_beta(family.a, family.b)
    return (1 - x) ** al * (1 + x) ** be / (x - family.b) ** 2


def family_members(family: FamilySpec, n_max: int) -> list[Polynomial]:
    """First n_max members: degrees 0..n_max-1 for classical families,
    degrees 1..n_max for X1 families."""
    if n_max < 1:
        raise UsageError("n_max must be positive")
    if isinstance(family, ClassicalLaguerre):
        return [laguerre_polynomial(n, family.k) for n in range(n_max)]
    if isinstance(family, ClassicalJacobi):
        return [jacobi_polynomial(n, family.alpha, family.beta) for n in range(n_max)]
    return [pair.polynomial for pair in x1_eigenpairs(family, n_max)]


def _weight_exponents(family: FamilySpec) -> tuple[float, float]:
    if isinstance(family, ClassicalLaguerre):
        return family.k, 0.0
    if isinstance(family, X1Laguerre):
        return family.k, 0.0
    if isinstance(family, ClassicalJacobi):
        return family.beta, family.alpha  # near -1 resp. +1
    al, be = x1_jacobi_alpha_beta(family.a, family.b)
    return be, al


def default_quadrature(family: FamilySpec) -> QuadratureRule:
    e_lo, e_hi = _weight_exponents(family)
    if isinstance(family, (ClassicalLaguerre, X1Laguerre)):
        return semi_infinite_rule(exponent_zero=e_lo)
    return finite_rule(-1.0, 1.0, exponent_lo=e_lo, exponent_hi=e_hi)


def _gram_on_rule(members, family, rule):
    vals = np.vstack([p(rule.nodes) for p in members])
    scaled = vals * (weight(family, rule.nodes) * rule.weights)
    g = scaled @ vals.T
    return 0.5 * (g + g.T)


def gram_matrix(family: FamilySpec, n_max: int, quad: QuadratureRule | None = None,
                *, tol: float = 1e-10, max_refinements: int = 6) -> np.ndarray:
    """Gram matrix G_ij = integral p_i p_j w over the first n_max members.

    The rule is refined (panels halved) until two successive levels agree to
    `tol` relative to the largest entry; disagreement past `max_refinements`
    raises AccuracyError.
    """
    if not 1 <= n_max <= 16:
        raise UsageError(f"n_max must lie in 1..16, got {n_max}")
    members = family_members(family, n_max)
    if quad is not None and quad.domain != family_domain(family):
        raise UsageError(
            f"quadrature rule covers {quad.domain}, family lives on "
            f"{family_domain(family)}"
        )
    rule = quad if quad is not None else default_quadrature(family)
    g_prev = _gram_on_rule(members, family, rule)
    for _ in range(max_refinements):
        rule = rule.refined()
        g = _gram_on_rule(members, family, rule)
        if np.max(np.abs(g - g_prev)) <= tol * (1.0 + np.max(np.abs(g))):
            return g
        g_prev = g
    raise AccuracyError(
        f"Gram quadrature did not converge to {tol} within "
        f"{max_refinements} refinements for {family_to_dict(family)}"
    )


def max_offdiag_ratio(gram: np.ndarray) -> float:
    """max_{i != j} |G_ij| / sqrt(G_ii G_jj); zero for a 1x1 matrix."""
    d = np.sqrt(np.diag(gram))
    normalized = gram / np.outer(d, d)
    off = normalized - np.diag(np.diag(normalized))
    return float(np.max(np.abs(off)))
