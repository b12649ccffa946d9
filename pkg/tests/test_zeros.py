import json
import math

import numpy as np
import pytest
from scipy import optimize, special as sp

from sneddon.errors import IndexOutOfRange
from sneddon.zeros import ZeroTable, bessel_zeros, clear_cache, load_tables, mcmahon, save_tables, zero_weight

NUS = (-0.4, 0.0, 0.25, 0.5, 1.3, 7.5, 30.0)


def test_half_order_zeros():
    t = bessel_zeros(0.5, 100)
    np.testing.assert_allclose(t.zeros, np.pi * np.arange(1, 101), rtol=0, atol=1e-12)
    assert zero_weight(t, 1) == pytest.approx(2 / math.pi**2, rel=1e-13)
    assert zero_weight(t, 5) == pytest.approx(2 / (5 * math.pi**2), rel=1e-13)


def test_first_zero_of_j0_against_bisection():
    ref = optimize.bisect(lambda x: sp.j0(x), 2.0, 3.0, xtol=1e-15)
    assert bessel_zeros(0, 1).zeros[0] == pytest.approx(ref, abs=1e-12)
    assert bessel_zeros(0, 1).zeros[0] == pytest.approx(2.404825557695773, abs=1e-14)


@pytest.mark.parametrize("nu", NUS)
def test_residual_and_mcmahon(nu):
    t = bessel_zeros(nu, 2000)
    j = t.zeros
    scale = np.abs(sp.jvp(nu, j) * j)
    assert np.all(np.abs(sp.jv(nu, j)) <= 1e-12 * scale)
    res = np.abs(j - (np.arange(1, 2001) + nu / 2 - 0.25) * np.pi)
    if nu <= 1.3:
        assert np.all(res <= 1)
    assert np.all(np.diff(res[9:]) <= 1e-12)


@pytest.mark.parametrize("nu", NUS[:-1])
def test_interlacing(nu):
    a = bessel_zeros(nu, 201).zeros
    b = bessel_zeros(nu + 1, 200).zeros
    assert np.all(a[:200] < b) and np.all(b < a[1:201])


@pytest.mark.parametrize("nu", NUS)
def test_weight_asymptotics(nu):
    t = bessel_zeros(nu, 1000)
    pw = np.pi * t.zeros * t.weights
    assert np.all(np.abs(pw[49:] - 2) <= 0.05)
    band = t.zeros[9:] * t.weights[9:]
    assert band.max() / band.min() <= 3


def test_table_is_immutable_and_lazy():
    clear_cache()
    small = bessel_zeros(1.3, 10)
    big = bessel_zeros(1.3, 5000)
    np.testing.assert_array_equal(small.zeros, big.zeros[:10])
    with pytest.raises(ValueError):
        big.zeros[0] = 1.0
    with pytest.raises(IndexOutOfRange):
        zero_weight(small, 11)
    with pytest.raises(IndexOutOfRange):
        small.head(50)


def test_cache_file_round_trip(tmp_path):
    t = bessel_zeros(0.25, 50)
    path = tmp_path / "zeros.json"
    save_tables(path, [t])
    data = json.loads(path.read_text())
    assert set(data[0]) == {"nu", "zeros", "weights"}
    (back,) = load_tables(path)
    assert isinstance(back, ZeroTable)
    np.testing.assert_array_equal(back.zeros, t.zeros)
    np.testing.assert_array_equal(back.weights, t.weights)


def test_mcmahon_is_close_for_large_m():
    t = bessel_zeros(2.0, 1000)
    assert abs(mcmahon(2.0, 1000) - t.zeros[-1]) < 1e-12


def test_rejects_bad_orders():
    with pytest.raises(ValueError):
        bessel_zeros(-1.5, 3)
    with pytest.raises(ValueError):
        bessel_zeros(31, 3)
