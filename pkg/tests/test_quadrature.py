"""Quadrature rules and Gram-matrix orthogonality.

The Gram cross-check at small size uses scipy.integrate.quad (adaptive
QUADPACK) as an independent oracle for the panel rules.
"""

import numpy as np
import pytest
from scipy import integrate, special

from xop import (
    AccuracyError,
    ClassicalJacobi,
    ClassicalLaguerre,
    ParameterError,
    UsageError,
    X1Jacobi,
    X1Laguerre,
    finite_rule,
    gram_matrix,
    max_offdiag_ratio,
    semi_infinite_rule,
    weight,
    x1_eigenpairs,
)


def test_finite_rule_integrates_constants_exactly():
    rule = finite_rule(-1.0, 1.0)
    assert rule.base_weight_sum == pytest.approx(2.0, abs=1e-12)
    assert np.all(rule.nodes > -1.0) and np.all(rule.nodes < 1.0)
    assert np.all(rule.weights > 0)


def test_semi_infinite_rule_base_measure():
    rule = semi_infinite_rule()
    # pre-map measure of (0, 1) is 1
    assert rule.base_weight_sum == pytest.approx(1.0, abs=1e-12)
    assert np.all(rule.nodes > 0)


def test_semi_infinite_rule_gamma_integral():
    rule = semi_infinite_rule(exponent_zero=0.5)
    value = rule.integrate(np.exp(0.5 * np.log(rule.nodes) - rule.nodes))
    assert value == pytest.approx(special.gamma(1.5), rel=1e-12)


def test_refinement_halves_panels():
    rule = semi_infinite_rule()
    finer = rule.refined()
    assert finer.size == 2 * rule.size
    assert finer.base_weight_sum == pytest.approx(1.0, abs=1e-12)


def test_rejects_nonintegrable_exponent():
    with pytest.raises(ParameterError):
        finite_rule(-1.0, 1.0, exponent_lo=-1.0)


# --- Gram matrices -------------------------------------------------------------

def test_classical_laguerre_gram():
    g = gram_matrix(ClassicalLaguerre(0.5), 4)
    assert g.shape == (4, 4)
    assert np.allclose(g, g.T, atol=1e-12 * np.max(np.abs(g)))
    assert np.all(np.diag(g) > 0)
    assert max_offdiag_ratio(g) < 1e-8
    # diagonal oracle: Gamma(n + k + 1) / n!
    for n in range(4):
        want = special.gamma(n + 1.5) / special.factorial(n)
        assert g[n, n] == pytest.approx(want, rel=1e-11)


def test_classical_jacobi_gram():
    g = gram_matrix(ClassicalJacobi(0.5, 1.5), 4)
    assert max_offdiag_ratio(g) < 1e-8
    assert np.all(np.diag(g) > 0)


def test_x1_laguerre_gram_orthogonality():
    g = gram_matrix(X1Laguerre(0.5), 4)
    assert max_offdiag_ratio(g) < 1e-8


def test_x1_jacobi_gram_orthogonality():
    g = gram_matrix(X1Jacobi(a=2.0, b=1.25), 4)
    assert max_offdiag_ratio(g) < 1e-7


def test_trivial_gram_is_one_by_one_positive():
    for fam in (ClassicalLaguerre(0.5), X1Laguerre(0.5), X1Jacobi(a=2.0, b=1.25)):
        g = gram_matrix(fam, 1)
        assert g.shape == (1, 1) and g[0, 0] > 0


def test_x1_gram_against_quadpack_oracle():
    fam = X1Laguerre(0.5)
    pairs = x1_eigenpairs(fam, 2)
    g = gram_matrix(fam, 2)
    for i in range(2):
        for j in range(2):
            want, err = integrate.quad(
                lambda x: pairs[i].polynomial(x) * pairs[j].polynomial(x)
                * x**0.5 * np.exp(-x) / (x + 0.5) ** 2,
                0.0, np.inf,
            )
            assert g[i, j] == pytest.approx(want, rel=1e-8, abs=1e-9)


def test_frozen_x1_laguerre_diagonal():
    # values frozen from the QUADPACK oracle
    g = gram_matrix(X1Laguerre(0.5), 2)
    assert g[0, 0] == pytest.approx(2.658680776358246, rel=1e-10)
    assert g[1, 1] == pytest.approx(2.2155673136318987, rel=1e-10)


def test_gram_accepts_supplied_rule():
    fam = ClassicalLaguerre(0.5)
    rule = semi_infinite_rule(exponent_zero=0.5)
    g = gram_matrix(fam, 3, quad=rule)
    assert max_offdiag_ratio(g) < 1e-8


def test_gram_rejects_mismatched_rule_domain():
    with pytest.raises(UsageError):
        gram_matrix(ClassicalLaguerre(0.5), 2, quad=finite_rule(-1.0, 1.0))


def test_gram_usage_and_accuracy_errors():
    with pytest.raises(UsageError):
        gram_matrix(ClassicalLaguerre(0.5), 0)
    with pytest.raises(UsageError):
        gram_matrix(ClassicalLaguerre(0.5), 17)
    # the (a=1.5, b=-1.5) family has alpha = -3.75: not an integrable weight
    with pytest.raises((AccuracyError, ParameterError)):
        gram_matrix(X1Jacobi(a=1.5, b=-1.5), 2)


def test_gram_nonconvergence_raises_accuracy_error():
    fam = ClassicalLaguerre(0.5)
    coarse = semi_infinite_rule(exponent_zero=0.5, order=2)
    with pytest.raises(AccuracyError):
        gram_matrix(fam, 6, quad=coarse, max_refinements=1)
