"""Panel-based Gauss-Legendre quadrature.

Finite intervals get panels graded geometrically toward endpoints that carry
algebraic weight singularities.  The half line is mapped to (0, 1) through
x = t / (1 - t) first, with grading toward t = 0 only (the exponential decay
at the far end needs none).  A rule knows how to produce its own refinement
(every panel split in two), which is what the convergence checks in
gram-matrix assembly rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError

__all__ = ["QuadratureRule", "finite_rule", "semi_infinite_rule"]


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes/weights for integration over `domain` (possibly via a map).

    `base_weight_sum` records the total weight in the pre-map coordinate, so
    the constant-integrand check stays meaningful for mapped half-line rules.
    """

    nodes: np.ndarray
    weights: np.ndarray
    domain: tuple[float, float]
    base_weight_sum: float
    _boundaries: np.ndarray = field(repr=False)
    _order: int = field(repr=False)
    _mapped: bool = field(repr=False)

    def __post_init__(self):
        for name in ("nodes", "weights", "_boundaries"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if np.any(self.weights <= 0):
            raise ParameterError("quadrature weights must be positive")

    @property
    def size(self) -> int:
        return self.nodes.size

    def refined(self) -> "QuadratureRule":
        """Same construction with every panel split in half."""
        b = self._boundaries
        mid = 0.5 * (b[:-1] + b[1:])
        newb = np.sort(np.concatenate([b, mid]))
        return _assemble(newb, self._order, self._mapped, self.domain)

    def integrate(self, values: np.ndarray) -> float:
        return float(np.dot(np.asarray(values, dtype=float), self.weights))


def _assemble(boundaries, order, mapped, domain) -> QuadratureRule:
    # no caching: rules stay pure functions of their arguments
    t_ref, w_ref = np.polynomial.legendre.leggauss(order)
    lo = boundaries[:-1]
    width = np.diff(boundaries)
    t = (lo[:, None] + 0.5 * width[:, None] * (t_ref[None, :] + 1.0)).ravel()
    w = (0.5 * width[:, None] * w_ref[None, :]).ravel()
    base_sum = float(np.sum(w))
    if mapped:
        # x = t/(1-t) maps (0,1) -> (0,inf); dx = dt/(1-t)^2
        x = t / (1.0 - t)
        w = w / (1.0 - t) ** 2
        return QuadratureRule(x, w, domain, base_sum, boundaries, order, True)
    return QuadratureRule(t, w, domain, base_sum, boundaries, order, False)


def _graded_boundaries(lo, hi, depth_lo, depth_hi):
    """Panel boundaries on [lo, hi], geometrically graded toward each end
    (the two gradings meet at the midpoint)."""
    width = hi - lo
    pts = [lo, hi]
    pts.extend(lo + width * 0.5 ** np.arange(1, depth_lo + 1))
    pts.extend(hi - width * 0.5 ** np.arange(1, depth_hi + 1))
    return np.unique(np.asarray(pts, dtype=float))


def _depth_for_exponent(exponent: float) -> int:
    # mass of x^p below 2^-d scales like 2^(-d(1+p)); push it under ~1e-13
    if exponent <= -1:
        raise ParameterError(
            f"weight exponent {exponent} is not integrable (must exceed -1)"
        )
    return max(12, math.ceil(44.0 / (1.0 + exponent)))


def finite_rule(lo: float, hi: float, exponent_lo: float = 0.0,
                exponent_hi: float = 0.0, order: int = 16) -> QuadratureRule:
    """Rule on [lo, hi] for integrands behaving like (x-lo)^e_lo near lo and
    (hi-x)^e_hi near hi."""
    if not lo < hi:
        raise ParameterError("interval must satisfy lo < hi")
    b = _graded_boundaries(lo, hi, _depth_for_exponent(exponent_lo),
                           _depth_for_exponent(exponent_hi))
    return _assemble(b, order, mapped=False, domain=(lo, hi))


def semi_infinite_rule(exponent_zero: float = 0.0, order: int = 16) -> QuadratureRule:
    """Rule on (0, inf) through x = t/(1-t), for integrands ~ x^e near 0 with
    (super)exponential decay at infinity."""
    b = _graded_boundaries(0.0, 1.0, _depth_for_exponent(exponent_zero), 4)
    return _assemble(b, order, mapped=True, domain=(0.0, math.inf))
