import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from addison.kernel import frac, g_k, p1, p1_fourier, p1_point
from addison.result import DomainError

finite = st.floats(-1e6, 1e6, allow_nan=False)


def test_p1_at_integers_and_half():
    assert p1(0.0) == -0.5
    assert p1(3.0) == -0.5
    assert p1(-2.0) == -0.5
    assert p1(0.5) == 0.0
    assert p1(2.25) == pytest.approx(-0.25)


def test_frac_of_tiny_negative_stays_below_one():
    assert 0.0 <= frac(-1e-300) < 1.0
    arr = frac(np.array([-1e-300, -0.25, 1.75]))
    assert np.all((arr >= 0) & (arr < 1))
    np.testing.assert_allclose(arr[1:], [0.75, 0.75])


def test_p1_point():
    pt = p1_point(1.75)
    assert (pt.x, pt.value) == (1.75, 0.25)


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_nonfinite_rejected(bad):
    with pytest.raises(DomainError):
        p1(bad)
    with pytest.raises(DomainError):
        frac(np.array([0.0, bad]))


@given(finite)
def test_p1_periodic_and_bounded(x):
    assert -0.5 <= p1(x) < 0.5
    assert p1(x + 1.0) == pytest.approx(p1(x), abs=1e-9)


@given(st.floats(-100, 100, allow_nan=False).filter(lambda x: abs(x - round(x)) > 1e-9))
def test_p1_odd_off_integers(x):
    assert p1(-x) == pytest.approx(-p1(x), abs=1e-12)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_g_k_is_the_compressed_difference(k):
    xs = np.linspace(0.0, 3.0, 601)[:-1] + 1e-4
    np.testing.assert_allclose(g_k(k, xs), -p1(xs) + p1(k * xs) / k, atol=1e-12)


@pytest.mark.parametrize("k", [2, 3, 6])
def test_g_k_steps_drop_by_one_over_k(k):
    vals = [g_k(k, (j + 0.5) / k) for j in range(k)]
    assert vals[0] == pytest.approx(0.5 * (1 - 1 / k))
    np.testing.assert_allclose(np.diff(vals), -1.0 / k)
    assert sum(vals) == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("k", [1, 0, 2.5])
def test_g_k_rejects_bad_k(k):
    with pytest.raises(DomainError):
        g_k(k, 0.3)


def test_fourier_partial_sum_approaches_p1():
    xs = np.array([0.1, 0.3, 0.77])
    err = {J: np.max(np.abs(p1_fourier(xs, J) - p1(xs))) for J in (50, 400)}
    assert err[400] < err[50] / 4
    assert err[400] < 0.01


def test_fourier_scalar_large_argument_reduced():
    assert p1_fourier(1e6 + 0.25, 2000) == pytest.approx(p1_fourier(0.25, 2000), abs=1e-12)


def test_fourier_rejects_bad_J():
    with pytest.raises(DomainError):
        p1_fourier(0.3, 0)
