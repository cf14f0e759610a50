import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from addison.kinkelin import (KINKELIN_METHODS, MAX_TAYLOR, MOMENT_SIN_METHODS, MOMENT_X_METHODS,
                              gamma_moment_sin, gamma_moment_x, gamma_taylor, glaisher_limit, hyp1F2,
                              kinkelin, p1_a8_integrand, reorder_bracket, reorder_closed, reorder_sum)
from addison.result import DomainError
from oracles import FROZEN

K = FROZEN["zeta_prime_m1"]


def test_taylor_coefficients_vs_mpmath():
    c = gamma_taylor().coeffs
    ref = oracles.mp.taylor(lambda z: oracles.mp.gamma(z + 1), 0, 12)
    np.testing.assert_allclose(c[:13], [float(r) for r in ref], atol=1e-14)
    assert max(gamma_taylor().residuals) < 1e-14


def test_taylor_reproduces_gamma():
    g = gamma_taylor()
    for z in (-0.3, 0.2, 0.5):
        assert g(z) == pytest.approx(math.gamma(z + 1), rel=1e-10)


def test_taylor_bounds():
    with pytest.raises(DomainError):
        gamma_taylor(MAX_TAYLOR + 1)


@pytest.mark.parametrize("method", KINKELIN_METHODS)
def test_kinkelin_routes(method):
    assert kinkelin(method).value == pytest.approx(K, abs=1e-10)


def test_kinkelin_p1_share():
    share = kinkelin("p1_a8").info["p1_share"]
    assert 0.015 <= share <= 0.025


def test_p1_integrand_is_small_and_decays():
    xs = np.array([1.25, 10.25, 100.25])
    vals = np.abs(p1_a8_integrand(xs))
    assert np.all(np.diff(vals) < 0)


def test_kinkelin_unknown_method():
    with pytest.raises(DomainError):
        kinkelin("nope")


@pytest.mark.parametrize("method", MOMENT_X_METHODS)
def test_moment_x_routes(method):
    assert gamma_moment_x(method).value == pytest.approx(FROZEN["gamma_moment_x"], abs=1e-9)


def test_moment_x_second_taylor_form():
    assert gamma_moment_x("taylor_a3", form=2).value == pytest.approx(FROZEN["gamma_moment_x"], abs=1e-9)


@pytest.mark.parametrize("lam", [0.5, 1.0, 3.0])
def test_moment_x_lambda_independence(lam):
    assert gamma_moment_x("laplace_a10", lam=lam).value == pytest.approx(FROZEN["gamma_moment_x"], abs=1e-9)


@pytest.mark.parametrize("method", MOMENT_SIN_METHODS)
def test_moment_sin_routes(method):
    assert gamma_moment_sin(1.0, method).value == pytest.approx(FROZEN["gamma_moment_sin"], abs=1e-9)


@given(st.floats(-math.pi / 2, math.pi / 2).filter(lambda a: abs(a) > 1e-3))
def test_moment_sin_vs_mpmath(alpha):
    mp = oracles.mp
    ref = float(mp.quad(lambda x: mp.sin(alpha * x) * mp.gamma(x), [0, 1]))
    assert gamma_moment_sin(alpha).value == pytest.approx(ref, abs=1e-9)


def test_moment_sin_odd_and_zero():
    assert gamma_moment_sin(0.0).value == 0.0
    assert gamma_moment_sin(-0.7).value == pytest.approx(-gamma_moment_sin(0.7).value)


def test_moment_sin_domain():
    with pytest.raises(DomainError):
        gamma_moment_sin(2.0)


@pytest.mark.parametrize("form", [1, 2])
def test_antiderivative_forms(form):
    v = gamma_moment_sin(math.pi / 2, "antiderivative_a13", form=form).value
    assert v == pytest.approx(gamma_moment_sin(math.pi / 2, "onef2_a12").value, abs=1e-12)


def test_truncated_series_without_poles_converges_slowly():
    short = gamma_moment_sin(1.0, pole_correction=False, terms=10)
    full = gamma_moment_sin(1.0)
    assert abs(short.value - full.value) > 1e-6
    assert abs(short.value - full.value) <= short.err_est


@given(st.floats(0.1, 3.0), st.floats(0.5, 2.0), st.floats(-3.0, 3.0))
def test_hyp1f2_vs_mpmath(a, b, x):
    ref = float(oracles.mp.hyp1f2(a, b, b + 0.5, x))
    assert hyp1F2(a, b, b + 0.5, x).value == pytest.approx(ref, rel=1e-12, abs=1e-14)


def test_reordered_series():
    assert reorder_sum().value == pytest.approx(reorder_closed(), abs=1e-12)
    # the expansion used for large j continues the direct formula
    assert reorder_bracket(63) == pytest.approx(
        sum((-1) ** (p + 1) / (p * (p + 1)) * 63.0 ** (1 - p) for p in range(3, 12)), abs=1e-12)
    with pytest.raises(DomainError):
        reorder_bracket(1)


@pytest.mark.parametrize("N", [10, 100, 1000])
def test_glaisher_limit(N):
    r = glaisher_limit(N)
    assert abs(r.value - FROZEN["ln_glaisher"]) <= r.err_est
