import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from addison.result import DomainError, PoleError, PrecisionError
from addison.zetafun import (EULER_GAMMA, bernoulli_number, bernoulli_poly, digamma, h_func, harmonic,
                             hurwitz, hurwitz_sderiv, loggamma_taylor, psi_fast, stieltjes,
                             stieltjes_batch, stieltjes_difference_series, trigamma_fast, zeta,
                             zeta_nderiv, zeta_prime_neg)
from oracles import FROZEN


@given(st.floats(-0.9, 8.0).filter(lambda s: abs(s - 1) > 1e-3), st.floats(0.05, 5.0))
def test_hurwitz_vs_mpmath(s, a):
    r = hurwitz(s, a)
    ref = oracles.hurwitz(s, a)
    assert abs(r.value - ref) <= 1e-9 * max(1.0, abs(ref))


@pytest.mark.parametrize("s", [-0.5, 0.0, 0.5, 2.0, 3.0, 10.0])
def test_zeta_vs_mpmath(s):
    assert zeta(s).value == pytest.approx(float(oracles.mp.zeta(s)), abs=1e-10)


def test_zeta_pole_and_range():
    with pytest.raises(PoleError):
        zeta(1.0)
    with pytest.raises(DomainError):
        zeta(-2.0)
    with pytest.raises(DomainError):
        hurwitz(2.0, 0.0)


@pytest.mark.parametrize("n, s", [(1, 2.0), (1, 3.5), (2, 2.0), (3, 4.0)])
def test_zeta_nderiv_vs_mpmath(n, s):
    r = zeta_nderiv(n, s)
    ref = float(oracles.mp.zeta(s, derivative=n))
    assert abs(r.value - ref) <= max(1e-9, 10 * r.err_est)


def test_zeta_nderiv_domain():
    with pytest.raises(DomainError):
        zeta_nderiv(1, 0.5)
    with pytest.raises(DomainError):
        zeta_nderiv(0, 2.0)


@given(st.floats(0.2, 5.0).filter(lambda s: abs(s - 1) > 1e-2), st.floats(0.1, 3.0))
def test_hurwitz_sderiv_vs_mpmath(s, a):
    r = hurwitz_sderiv(s, a)
    assert abs(r.value - oracles.hurwitz_sderiv(s, a)) <= 1e-8 * max(1.0, abs(r.value))


@pytest.mark.parametrize("n", [0, 1, 2, 5, 10])
@pytest.mark.parametrize("a", [0.25, 1.0, 1.5, 2.0])
def test_stieltjes_vs_mpmath(n, a):
    r = stieltjes(n, a)
    ref = oracles.stieltjes(n, a)
    assert abs(r.value - ref) <= max(1e-9 * max(1.0, abs(ref)), r.err_est)


def test_stieltjes_frozen():
    assert stieltjes(1).value == pytest.approx(FROZEN["stieltjes_1"], abs=1e-12)
    assert stieltjes(2).value == pytest.approx(FROZEN["stieltjes_2"], abs=1e-12)


def test_stieltjes_err_est_honest_at_cap():
    r = stieltjes(20)
    assert abs(r.value - oracles.stieltjes(20)) <= r.err_est


def test_stieltjes_limits():
    with pytest.raises(PrecisionError):
        stieltjes(21)
    with pytest.raises(PrecisionError):
        stieltjes_batch(25, 1.0)
    with pytest.raises(DomainError):
        stieltjes(1, 2.5)
    with pytest.raises(DomainError):
        stieltjes(-1)


def test_stieltjes_batch_matches_single():
    batch = stieltjes_batch(6, 0.75)
    for n in (0, 3, 6):
        assert batch[n].value == pytest.approx(stieltjes(n, 0.75).value, abs=1e-12)


@pytest.mark.parametrize("j, a, b", [(1, 0.5, 1.0), (2, 1.0, 2.0), (3, 0.25, 1.75)])
def test_stieltjes_difference_series(j, a, b):
    r = stieltjes_difference_series(j, a, b)
    ref = oracles.stieltjes(j, a) - oracles.stieltjes(j, b)
    assert abs(r.value - ref) <= 1e-9


@given(st.floats(0.05, 50.0))
def test_digamma_vs_mpmath(a):
    assert digamma(a).value == pytest.approx(oracles.digamma(a), abs=1e-10)


def test_vectorised_psi_trigamma():
    xs = np.array([0.3, 1.0, 7.5, 40.0])
    np.testing.assert_allclose(psi_fast(xs), [oracles.digamma(x) for x in xs], atol=1e-13)
    ref = [float(oracles.mp.psi(1, x)) for x in xs]
    np.testing.assert_allclose(trigamma_fast(xs), ref, atol=1e-12)


@given(st.integers(0, 2000))
def test_harmonic_numbers(n):
    assert harmonic(n) == pytest.approx(math.fsum(1.0 / k for k in range(1, n + 1)), abs=1e-12)


def test_bernoulli_numbers_exact():
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(12) == Fraction(-691, 2730)
    assert all(bernoulli_number(k) == 0 for k in range(3, 41, 2))


@given(st.integers(0, 8), st.floats(-2.0, 2.0))
def test_bernoulli_poly_vs_mpmath(k, q):
    assert bernoulli_poly(k, q) == pytest.approx(oracles.bernoulli_poly(k, q), abs=1e-12)


@given(st.integers(1, 8), st.floats(-1.0, 1.0))
def test_bernoulli_poly_difference(k, x):
    assert bernoulli_poly(k, x + 1) - bernoulli_poly(k, x) == pytest.approx(k * x ** (k - 1), abs=1e-11)


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_zeta_prime_neg_vs_mpmath(k):
    r = zeta_prime_neg(k)
    assert r.value == pytest.approx(oracles.zeta_prime(1 - k), abs=1e-12)


def test_zeta_prime_minus_one_frozen():
    assert zeta_prime_neg(2).value == pytest.approx(FROZEN["zeta_prime_m1"], abs=1e-13)


@pytest.mark.parametrize("s", [0.5, 1.0, 2.0, 3.5])
def test_h_func_closed_form(s):
    r = h_func(s)
    if s == 1.0:
        ref = FROZEN["half_minus_gamma"]
    else:
        ref = -float(oracles.mp.zeta(s)) / s + (s + 1) / (2 * s * (s - 1))
    assert r.value == pytest.approx(ref, abs=1e-10)


@given(st.floats(0.01, 0.9), st.integers(2, 40))
def test_loggamma_taylor_bound(x, terms):
    r = loggamma_taylor(x, terms)
    assert abs(r.value - oracles.loggamma(x)) <= r.err_est + 1e-14


def test_loggamma_taylor_domain():
    with pytest.raises(DomainError):
        loggamma_taylor(1.0, 10)
    with pytest.raises(DomainError):
        loggamma_taylor(0.5, 1)


def test_euler_gamma_constant():
    assert EULER_GAMMA == FROZEN["euler_gamma"]
