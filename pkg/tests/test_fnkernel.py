import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import special as sp

from sneddon import fnkernel as fk
from sneddon.errors import DivergentAtOne, PoleProximity, SlowConvergence
from sneddon.zeros import bessel_zeros

NUS = (-0.4, 0.25, 1.3)


def test_bessel_j_examples():
    assert fk.bessel_j(0, 1e-300) == pytest.approx(1.0)
    assert fk.bessel_j(0.5, math.pi / 2) == pytest.approx(2 / math.pi, rel=1e-14)
    assert abs(fk.bessel_j(0, 2.404825557695773)) < 1e-15


def test_bessel_y_examples():
    assert fk.bessel_y(0.5, math.pi) == pytest.approx(math.sqrt(2) / math.pi, rel=1e-13)
    assert abs(fk.bessel_y(0.5, math.pi / 2)) < 1e-15


@pytest.mark.parametrize("nu", NUS)
@pytest.mark.parametrize("x", (0.5, 2.0, 10.0, 40.0))
def test_wronskian(nu, x):
    w = fk.bessel_j(nu, x) * fk.bessel_yp(nu, x) - fk.bessel_jp(nu, x) * fk.bessel_y(nu, x)
    assert w == pytest.approx(2 / (math.pi * x), rel=1e-8)


@given(st.floats(-0.9, 20), st.floats(0.1, 150))
def test_three_term_recurrence(nu, x):
    lhs = fk.bessel_j(nu - 1, x) + fk.bessel_j(nu + 1, x)
    rhs = 2 * nu / x * fk.bessel_j(nu, x)
    assert abs(lhs - rhs) <= 1e-9 * max(abs(lhs), abs(fk.bessel_j(nu, x)), 1e-3)


def test_phi_examples():
    for nu in (-0.7, 0.0, 0.5, 2.3, 17.0):
        assert fk.phi(nu, 0.0) == 1.0
    assert abs(fk.phi(0.5, math.pi)) < 1e-15
    j = bessel_zeros(0.7, 1).zeros[0]
    assert abs(fk.phi(0.7, j)) < 1e-14


@given(st.floats(-0.9, 10), st.floats(0, 30))
def test_phi_even_and_matches_definition(nu, z):
    assert fk.phi(nu, z) == fk.phi(nu, -z)
    if z > 0.1:
        ref = 2**nu * sp.gamma(nu + 1) * sp.jv(nu, z) / z**nu
        assert fk.phi(nu, z) == pytest.approx(ref, rel=1e-10, abs=1e-13)


@pytest.mark.parametrize("nu", NUS + (0.0, 3.5))
@pytest.mark.parametrize("z", (0.3, 2.0, 2.9, 3.1, 8.0))
def test_phi_derivative_identity(nu, z):
    h = 1e-5
    fd = (fk.phi(nu, z + h) - fk.phi(nu, z - h)) / (2 * h)
    assert fk.phi_prime(nu, z) == pytest.approx(fd, rel=1e-6, abs=1e-9)


def test_phi_pole_rejected():
    with pytest.raises(PoleProximity):
        fk.phi(-1.0, 0.5)
    # J itself is regular at negative integer orders
    assert fk.bessel_j(-1.0, 0.7) == pytest.approx(-fk.bessel_j(1.0, 0.7), rel=1e-15)


def test_phi_taylor_coeffs():
    assert list(fk.phi_taylor_coeffs(3.3, 0).coeffs) == [1.0]
    np.testing.assert_allclose(fk.phi_taylor_coeffs(0, 2).coeffs, [1, -0.25, 1 / 64], rtol=1e-15)
    for nu in NUS:
        c = fk.phi_taylor_coeffs(nu, 30)
        assert c(0.5) == pytest.approx(fk.phi(nu, 0.5), abs=1e-12)


@pytest.mark.parametrize("nu", NUS)
def test_growth_bound_does_not_grow(nu):
    x = np.linspace(1, 200, 4000)
    env = np.abs(sp.jv(nu, x)) * np.sqrt(x)
    # the running maximum over the late half stays below the early maximum
    assert env[2000:].max() <= env[:2000].max() * 1.001
    assert env.max() < 1.5


def test_gamma_digamma_harmonic():
    assert fk.gamma(5) == 24.0
    assert fk.digamma(1) == pytest.approx(-fk.EULER_GAMMA, rel=1e-15)
    assert fk.harmonic_number(3) == pytest.approx(1 + 1 / 2 + 1 / 3, rel=1e-14)
    assert fk.harmonic_number(0.5) == pytest.approx(2 - 2 * math.log(2), rel=1e-13)
    assert fk.binom(0.5, 0.5) == pytest.approx(1.0)
    with pytest.raises(PoleProximity):
        fk.gamma(-3.0)


def test_hyp2f1_examples():
    assert fk.hyp2f1(0, 2.2, 3.1, 0.7) == 1.0
    for t in (0.1, 0.5, 0.9, 0.9995):
        assert fk.hyp2f1(0.7, 1.3, 1.3, t) == pytest.approx((1 - t) ** -0.7, rel=1e-11)
        assert fk.hyp2f1(1, 1, 2, t) == pytest.approx(-math.log1p(-t) / t, rel=1e-11)
    a, b, c = 0.3, 0.4, 1.9
    assert fk.hyp2f1(a, b, c, 1.0) == pytest.approx(
        sp.gamma(c) * sp.gamma(c - a - b) / (sp.gamma(c - a) * sp.gamma(c - b)), rel=1e-13
    )
    with pytest.raises(DivergentAtOne):
        fk.hyp2f1(1.0, 1.5, 2.0, 1.0)


@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.2, 5), st.floats(0, 0.95))
def test_hyp2f1_against_scipy(a, b, c, t):
    ref = sp.hyp2f1(a, b, c, t)
    assert fk.hyp2f1(a, b, c, t) == pytest.approx(ref, rel=1e-10, abs=1e-12)


def test_hyp_pfq_examples():
    assert fk.hyp_pfq([0.0, 2.0], [3.0], 0.5) == 1.0
    assert fk.hyp1f2(1, 1.4, 2.2, 0.0) == 1.0
    a, b, t = 0.3, 1.7, 1e-4
    approx = 1 + (1 - a) / (2 * (b + 2)) * t
    assert fk.hyp3f2(1, 1, 1 - a, 2, b + 2, t) == pytest.approx(approx, rel=1e-8)
    with pytest.raises(SlowConvergence):
        fk.hyp3f2(1, 1, 0.7, 2, 3.7, 0.9999)


@given(st.floats(-2, 2), st.floats(0.3, 4), st.floats(0.3, 4), st.floats(-30, 30))
def test_hyp1f2_against_mpmath(a, b1, b2, t):
    import mpmath

    ref = float(mpmath.hyp1f2(a, b1, b2, t))
    assert fk.hyp1f2(a, b1, b2, t) == pytest.approx(ref, rel=1e-10, abs=1e-12)


def test_bessel_mean_product_derivative():
    for u in (5.0, 999.9, 1000.1, 5000.0):
        h = 1e-3 * u
        fd = (fk.bessel_mean_product(1.5, 0.5, u + h) - fk.bessel_mean_product(1.5, 0.5, u - h)) / (2 * h)
        assert fk.bessel_mean_product(1.5, 0.5, u, deriv=1) == pytest.approx(fd, rel=1e-5)
