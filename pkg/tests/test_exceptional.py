"""X1 families: eigenpair construction against independent oracles.

The main oracle rebuilds the cleared-denominator operator columns with plain
polynomial arithmetic (np.polynomial), stacks the full rectangular system at
the analytically known eigenvalue, and reads the eigenvector off the SVD
null space -- no code shared with the pencil assembly under test.
"""

import numpy as np
import pytest

from xop import (
    ClassicalJacobi,
    ClassicalLaguerre,
    ConsistencyError,
    DomainError,
    EigenPair,
    ParameterError,
    Polynomial,
    UsageError,
    X1Jacobi,
    X1Laguerre,
    degree0_eigenfunction_exists,
    family_eigenvalue,
    family_from_dict,
    family_to_dict,
    ode_residual,
    weight,
    x1_eigenpairs,
    x1_jacobi_alpha_beta,
    x1_jacobi_from_classical,
    x1_polynomial,
)
from xop.exceptional import _sample_points

P = np.polynomial.polynomial


# --- independent null-space oracle -------------------------------------------

def monomial(j):
    c = np.zeros(j + 1)
    c[j] = 1.0
    return c


def cleared_column_laguerre(k, j):
    """(T - lam S)[x^j] as polynomial coefficient arrays (T, S separately)."""
    y = monomial(j)
    y1, y2 = P.polyder(y), P.polyder(y, 2)
    t = P.polyadd(
        P.polyadd(
            P.polymul([0.0, -k, -1.0], y2),            # -x(x+k) y''
            P.polymul([-k * k - k, 1.0, 1.0], y1),      # (x-k)(x+k+1) y'
        ),
        P.polymul([k, -1.0], y),                        # -(x-k) y
    )
    s = P.polymul([k, 1.0], y)
    return t, s


def cleared_column_jacobi(a, b, c, j):
    y = monomial(j)
    y1, y2 = P.polyder(y), P.polyder(y, 2)
    t = P.polyadd(
        P.polyadd(
            P.polymul(P.polymul([b, -1.0], [-1.0, 0.0, 1.0]), y2),  # (b-x)(x^2-1) y''
            P.polymul(P.polymul([2 * a, -2 * a * b], [-c, 1.0]), y1),  # 2a(1-bx)(x-c) y'
        ),
        P.polymul([-2 * a, 2 * a * b], y),               # -2a(1-bx) y
    )
    s = P.polymul([b, -1.0], y)
    return t, s


def nullspace_member(family, degree):
    """Monic degree-`degree` solution of the rectangular system at the known
    eigenvalue, via SVD."""
    lam = family_eigenvalue(family, degree)
    rows = degree + 2
    system = np.zeros((rows, degree + 1))
    for j in range(degree + 1):
        if isinstance(family, X1Laguerre):
            t, s = cleared_column_laguerre(family.k, j)
        else:
            t, s = cleared_column_jacobi(family.a, family.b, family.c, j)
        col = np.zeros(rows)
        col[: t.size] = t
        col[: s.size] -= lam * s
        system[:, j] = col
    _, sing, vt = np.linalg.svd(system)
    assert sing[-1] < 1e-8, "no null space at the analytic eigenvalue"
    vec = vt[-1]
    return vec / vec[degree]


LAGUERRE_KS = (0.5, 1.5, 2.5)
JACOBI_ABS = ((1.0, 2.0), (2.0, 1.25), (1.5, -1.5))


@pytest.mark.parametrize("k", LAGUERRE_KS)
def test_x1_laguerre_matches_nullspace_oracle(k):
    fam = X1Laguerre(k)
    pairs = x1_eigenpairs(fam, 6)
    assert [p.polynomial.degree for p in pairs] == [1, 2, 3, 4, 5, 6]
    for d, pair in enumerate(pairs, start=1):
        assert pair.eigenvalue == pytest.approx(d - 1, abs=1e-9)
        oracle = nullspace_member(fam, d)
        assert np.allclose(pair.polynomial.coeffs, oracle, rtol=1e-8, atol=1e-8)


@pytest.mark.parametrize("ab", JACOBI_ABS)
def test_x1_jacobi_matches_nullspace_oracle(ab):
    a, b = ab
    fam = X1Jacobi(a=a, b=b)
    pairs = x1_eigenpairs(fam, 6)
    assert [p.polynomial.degree for p in pairs] == [1, 2, 3, 4, 5, 6]
    for d, pair in enumerate(pairs, start=1):
        assert pair.eigenvalue == pytest.approx((d - 1) * (d + 2 * a * b), abs=1e-8)
        oracle = nullspace_member(fam, d)
        assert np.allclose(pair.polynomial.coeffs, oracle, rtol=1e-8, atol=1e-8)


def test_known_low_degree_members():
    # hand-derived closed forms
    p1 = x1_polynomial(X1Laguerre(1.5), 1)
    assert np.allclose(p1.polynomial.coeffs, [2.5, 1.0], atol=1e-10)
    assert p1.eigenvalue == pytest.approx(0.0, abs=1e-10)
    p2 = x1_polynomial(X1Laguerre(1.5), 2)
    assert np.allclose(p2.polynomial.coeffs, [-5.25, 0.0, 1.0], atol=1e-9)
    j1 = x1_polynomial(X1Jacobi(a=2.0, b=1.25), 1)
    assert np.allclose(j1.polynomial.coeffs, [-1.75, 1.0], atol=1e-10)
    j2 = x1_polynomial(X1Jacobi(a=2.0, b=1.25), 2)
    assert np.allclose(j2.polynomial.coeffs, [1.0, -61.0 / 28.0, 1.0], atol=1e-9)
    assert j2.eigenvalue == pytest.approx(7.0, abs=1e-9)


def test_bracket_sign_oracle():
    """The opposite in-bracket sign admits no full polynomial family; this is
    the oracle that pinned the convention."""
    for k in LAGUERRE_KS:
        with pytest.raises(ConsistencyError):
            x1_eigenpairs(X1Laguerre(k), 4, _bracket_sign=+1.0)
    with pytest.raises(ConsistencyError):
        x1_eigenpairs(X1Jacobi(a=2.0, b=1.25), 4, _bracket_sign=+1.0)


def test_degree_gap():
    for k in LAGUERRE_KS:
        assert not degree0_eigenfunction_exists(X1Laguerre(k))
    for a, b in JACOBI_ABS:
        assert not degree0_eigenfunction_exists(X1Jacobi(a=a, b=b))


def test_x1_eigenpairs_usage_errors():
    with pytest.raises(UsageError):
        x1_eigenpairs(ClassicalLaguerre(0.5), 3)
    with pytest.raises(UsageError):
        x1_eigenpairs(X1Laguerre(0.5), 0)
    with pytest.raises(UsageError):
        x1_eigenpairs(X1Laguerre(0.5), 33)
    with pytest.raises(UsageError):
        x1_polynomial(X1Laguerre(0.5), 0)


# --- ODE residuals ------------------------------------------------------------

def chebyshev_points(lo, hi, n=50):
    theta = (2 * np.arange(1, n + 1) - 1) * np.pi / (2 * n)
    return 0.5 * (lo + hi) + 0.5 * (hi - lo) * np.cos(theta)


def test_classical_laguerre_residual_exact():
    from xop import laguerre_polynomial

    pair = EigenPair(2.0, laguerre_polynomial(2, 0.5))
    pts = chebyshev_points(0.0, 40.0)
    assert ode_residual(ClassicalLaguerre(0.5), pair, pts) < 1e-10


def test_x1_laguerre_residual_from_eigenpairs():
    pts = chebyshev_points(0.0, 40.0)
    for pair in x1_eigenpairs(X1Laguerre(0.5), 3):
        assert ode_residual(X1Laguerre(0.5), pair, pts) < 1e-9


def test_x1_jacobi_residual_from_eigenpairs():
    pts = chebyshev_points(-0.99, 0.99)
    fam = X1Jacobi(a=2.0, b=1.25)
    for pair in x1_eigenpairs(fam, 2):
        assert ode_residual(fam, pair, pts) < 1e-10


def test_scaled_residual_invariant_all_spec_families():
    for k in LAGUERRE_KS:
        fam = X1Laguerre(k)
        pts = chebyshev_points(0.0, 40.0)
        for pair in x1_eigenpairs(fam, 6):
            assert ode_residual(fam, pair, pts, scaled=True) <= 1e-9
    for a, b in JACOBI_ABS:
        fam = X1Jacobi(a=a, b=b)
        pts = chebyshev_points(-0.99, 0.99)
        for pair in x1_eigenpairs(fam, 6):
            assert ode_residual(fam, pair, pts, scaled=True) <= 1e-9


def test_perturbed_polynomial_fails_residual():
    from xop import laguerre_polynomial

    base = laguerre_polynomial(2, 0.5)
    coeffs = base.coeffs.copy()
    coeffs[-1] += 1e-3
    pair = EigenPair(2.0, Polynomial(coeffs))
    pts = chebyshev_points(0.0, 40.0)
    assert ode_residual(ClassicalLaguerre(0.5), pair, pts) > 1e-4


def test_residual_pole_rejection():
    pair = x1_polynomial(X1Laguerre(0.5), 1)
    with pytest.raises(DomainError):
        ode_residual(X1Laguerre(0.5), pair, [-0.5])
    jfam = X1Jacobi(a=2.0, b=1.25)
    jpair = x1_polynomial(jfam, 1)
    with pytest.raises(DomainError):
        ode_residual(jfam, jpair, [1.25])


def test_internal_sample_points_span_the_stated_windows():
    lag = _sample_points(X1Laguerre(0.5))
    assert lag.size == 50 and lag.min() > 0.0 and lag.max() < 40.0
    jac = _sample_points(X1Jacobi(a=2.0, b=1.25))
    assert jac.min() > -0.99 and jac.max() < 0.99


# --- weights and the (a, b) <-> (alpha, beta) map ------------------------------

def test_weight_examples():
    assert weight(ClassicalLaguerre(0.0), 0.7) == pytest.approx(np.exp(-0.7), rel=1e-15)
    # (0.5 + 0.5)^2 = 1 in the denominator
    assert weight(X1Laguerre(0.5), 0.5) == pytest.approx(0.5**0.5 * np.exp(-0.5), rel=1e-14)
    # alpha = ab - a = 0.5, beta = ab + a = 4.5; at x=0 the Jacobi factors are 1
    assert weight(X1Jacobi(a=2.0, b=1.25), 0.0) == pytest.approx(1 / 1.5625, rel=1e-14)


def test_weight_domain_errors():
    with pytest.raises(DomainError):
        weight(ClassicalLaguerre(0.5), -1.0)
    with pytest.raises(DomainError):
        weight(X1Jacobi(a=2.0, b=1.25), 1.0)


def test_alpha_beta_inversion_roundtrip():
    alpha, beta = x1_jacobi_alpha_beta(2.0, 1.25)
    assert (alpha, beta) == (0.5, 4.5)
    fam = x1_jacobi_from_classical(alpha, beta)
    assert fam.a == pytest.approx(2.0) and fam.b == pytest.approx(1.25)
    with pytest.raises(ParameterError):
        x1_jacobi_alpha_beta(2.0, 0.5)
    with pytest.raises(ParameterError):
        x1_jacobi_from_classical(1.0, 1.0)


def test_family_invariants():
    with pytest.raises(ParameterError):
        X1Laguerre(0.0)
    with pytest.raises(ParameterError):
        X1Jacobi(a=2.0, b=0.5)
    with pytest.raises(ParameterError):
        X1Jacobi(a=0.0, b=2.0)
    with pytest.raises(ParameterError):
        X1Jacobi(a=2.0, b=1.25, c=2.0)  # c != b + 1/a
    fam = X1Jacobi(a=2.0, b=1.25)
    assert fam.c == pytest.approx(1.75)
    with pytest.raises(ParameterError):
        ClassicalJacobi(-1.0, 0.0)


def test_family_serialization_roundtrip():
    for fam in (ClassicalLaguerre(0.5), ClassicalJacobi(0.5, -0.5),
                X1Laguerre(1.5), X1Jacobi(a=2.0, b=1.25)):
        data = family_to_dict(fam)
        assert family_from_dict(data) == fam
    with pytest.raises(UsageError):
        family_from_dict({"kind": "NoSuchFamily", "params": {}})


def test_x1_jacobi_eigenvalue_matches_angular_level_formula():
    # degree d eigenvalue equals the classical angular eigenvalue n^2 + 2sn
    # at n = d - 1, with 2ab = 2s - 1
    s, lam = 2.5, 1.0
    fam = X1Jacobi(a=lam, b=(2 * s - 1) / (2 * lam))
    for d in range(1, 6):
        n = d - 1
        assert family_eigenvalue(fam, d) == pytest.approx(n**2 + 2 * s * n, abs=1e-12)


def test_high_degree_families_certify_to_cap():
    # the n_max cap; high Laguerre degrees certify against the evaluation
    # noise floor (see x1_eigenpairs docstring)
    for fam in (X1Laguerre(0.5), X1Jacobi(a=2.0, b=1.25)):
        pairs = x1_eigenpairs(fam, 32)
        assert [p.polynomial.degree for p in pairs] == list(range(1, 33))
