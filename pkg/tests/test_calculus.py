"""Jet arithmetic against centered finite differences.

The pole-quotient identity (H = f/(x-b) with |b| > 1, derivatives expanded
analytically) is the algebra every closed-form wavefunction rests on, so it
gets checked directly at finite-difference accuracy.
"""

import numpy as np

from xop import Polynomial
from xop.calculus import jet_exp, jet_identity, jet_poly, jet_pow


def finite_differences(fn, x, h=1e-5):
    # stencil in extended precision so the step-h comparison measures the
    # O(h^2) truncation error, not float64 cancellation in the stencil
    x = np.asarray(x, dtype=np.longdouble)
    h = np.longdouble(h)
    d1 = (fn(x + h) - fn(x - h)) / (2 * h)
    d2 = (fn(x + h) - 2 * fn(x) + fn(x - h)) / h**2
    return d1.astype(float), d2.astype(float)


def test_pole_quotient_identity():
    rng = np.random.default_rng(7)
    for b in (1.5, -1.25, 2.0, -3.0):
        for _ in range(5):
            coeffs = rng.uniform(-2.0, 2.0, size=rng.integers(2, 6))
            f = Polynomial(coeffs)
            x = rng.uniform(-0.95, 0.95, 20)
            clong = np.asarray(coeffs, dtype=np.longdouble)

            def h_of(t):
                return np.polynomial.polynomial.polyval(t, clong) / (t - b)

            jet = jet_poly(f, jet_identity(x)) / (jet_identity(x) - b)
            d1, d2 = finite_differences(h_of, x)
            scale = 1 + np.max(np.abs(jet.val))  # fd truncation grows with |H|
            assert np.allclose(jet.val, h_of(x).astype(float), rtol=1e-13)
            assert np.max(np.abs(jet.d1 - d1)) < 1e-6 * scale
            assert np.max(np.abs(jet.d2 - d2)) < 1e-6 * scale


def test_product_and_power_jets():
    x = np.linspace(0.3, 3.0, 25)

    def fn(t):
        return t**1.7 * np.exp(-t / 2)

    u = jet_identity(x)
    jet = jet_pow(u, 1.7) * jet_exp(u * (-0.5))
    d1, d2 = finite_differences(fn, x)
    assert np.allclose(jet.val, fn(x), rtol=1e-13)
    assert np.max(np.abs(jet.d1 - d1)) < 1e-6
    assert np.max(np.abs(jet.d2 - d2)) < 1e-5


def test_composition_chain_rule():
    theta = np.linspace(0.3, np.pi - 0.3, 30)
    z = np.cos(theta)
    f = Polynomial([0.5, -1.0, 2.0])

    def fn(t):
        return f(np.cos(t)) / (2.0 - np.cos(t))

    from xop.calculus import Jet2

    zjet = Jet2(z, -np.sin(theta), -np.cos(theta))
    jet = jet_poly(f, zjet) / (zjet * (-1.0) + 2.0)
    d1, d2 = finite_differences(fn, theta)
    assert np.allclose(jet.val, fn(theta), rtol=1e-13)
    assert np.max(np.abs(jet.d1 - d1)) < 1e-6
    assert np.max(np.abs(jet.d2 - d2)) < 1e-5
