import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.special import exp1

import oracles
from addison.constants import (MOMENTS, SOMOS_METHODS, ConstantRecord, SomosArgs, euler_sum_direct,
                               euler_sum_H, expint_e1, gamma_zeta_series, glaisher_lnA, hyperfactorial,
                               loggamma_moment, registry, registry_json, somos_exact, somos_gamma_limit,
                               somos_ln, somos_recurrence, somos_series_second)
from addison.result import DomainError, Eval, PrecisionError
from oracles import FROZEN


@given(st.floats(1e-300, 700.0))
def test_e1_vs_mpmath_within_err_est(x):
    r = expint_e1(x)
    assert abs(r.value - float(oracles.mp.e1(x))) <= r.err_est


@given(st.floats(1e-4, 40.0))
def test_e1_vs_scipy(x):
    assert expint_e1(x).value == pytest.approx(exp1(x), rel=4e-15)


@pytest.mark.parametrize("t", [1.0, 0.5, math.inf, math.nan])
def test_somos_args(t):
    with pytest.raises(DomainError):
        SomosArgs(t)


@pytest.mark.parametrize("method", SOMOS_METHODS)
def test_somos2_routes(method):
    assert somos_ln(2.0, method).value == pytest.approx(FROZEN["ln_somos2"], abs=1e-10)


@given(st.floats(1.05, 20.0))
def test_somos_routes_vs_direct_series(t):
    ref = float(oracles.mp.nsum(lambda n: oracles.mp.log(n) / oracles.mp.mpf(t) ** n, [1, oracles.mp.inf]))
    for m in SOMOS_METHODS:
        assert somos_ln(t, m).value == pytest.approx(ref, abs=1e-8, rel=1e-9)


def test_somos_second_series():
    assert somos_series_second(2.0).value == pytest.approx(FROZEN["ln_somos2"], abs=1e-13)


def test_somos_t10_dominated_by_leading_terms():
    lead = math.log(2) / 100 + math.log(3) / 1000
    assert somos_ln(10.0).value == pytest.approx(lead, rel=0.02)


@pytest.mark.parametrize("n", range(0, 7))
def test_somos_recurrence_matches_exact(n):
    assert somos_recurrence(n).value == pytest.approx(somos_exact(n), abs=1e-9)


def test_somos_recurrence_known_values():
    assert somos_recurrence(3).value == pytest.approx(math.log(12), abs=1e-9)
    assert somos_recurrence(4).value == pytest.approx(math.log(576), abs=1e-9)


def test_somos_recurrence_overflow_and_domain():
    with pytest.raises(PrecisionError):
        somos_recurrence(2000)
    with pytest.raises(DomainError):
        somos_recurrence(-1)
    with pytest.raises(DomainError):
        somos_recurrence(1.5)


def test_somos_gamma_limit_tends_to_minus_gamma():
    vals = [somos_gamma_limit(z).value for z in (0.1, 0.01, 0.001, 1e-4)]
    res = [abs(v + FROZEN["euler_gamma"]) for v in vals]
    assert all(b < a for a, b in zip(res, res[1:]))
    assert res[-1] < 1e-3
    with pytest.raises(DomainError):
        somos_gamma_limit(0.5)


@pytest.mark.parametrize("kind", ["alternating", "shifted"])
def test_gamma_zeta_series(kind):
    r = gamma_zeta_series(kind)
    assert abs(r.value + FROZEN["euler_gamma"]) <= r.err_est + 1e-15


def _euler_ref(s, a):
    mp = oracles.mp
    with mp.workdps(20):
        return float(mp.nsum(lambda n: mp.harmonic(n) / (n + a) ** s, [1, mp.inf], method="euler-maclaurin"))


@pytest.mark.parametrize("s, a", [(2.0, 1.0), (3.0, 1.0), (2.5, 0.5), (2.0, -0.5)])
def test_euler_sum_vs_mpmath(s, a):
    assert euler_sum_H(s, a).value == pytest.approx(_euler_ref(s, a), abs=1e-9)


def test_euler_sum_closed_forms():
    assert euler_sum_H(2.0, 1.0).value == pytest.approx(FROZEN["zeta3"], abs=1e-10)
    assert euler_sum_H(3.0, 1.0).value == pytest.approx(FROZEN["zeta4_over_4"], abs=1e-10)


def test_euler_sum_direct_route():
    r = euler_sum_direct(2.0, 1.0, N=100_000)
    assert abs(r.value - FROZEN["zeta3"]) <= r.err_est


@pytest.mark.parametrize("s, a", [(1.0, 1.0), (2.0, -1.0), (2.0, -1.5)])
def test_euler_sum_domain(s, a):
    with pytest.raises(DomainError):
        euler_sum_H(s, a)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_hyperfactorial_integers(n):
    # K(n) = prod_{k<n} k^k
    assert hyperfactorial(float(n)).value == pytest.approx(sum(k * math.log(k) for k in range(1, n)),
                                                           abs=1e-9)


@pytest.mark.parametrize("x", [0.5, 2.5, 4.25])
def test_hyperfactorial_vs_mpmath(x):
    # mpmath's hyperfac(x) is K(x + 1)
    ref = float(oracles.mp.log(oracles.mp.hyperfac(x - 1)))
    assert hyperfactorial(x).value == pytest.approx(ref, abs=1e-9)
    with pytest.raises(DomainError):
        hyperfactorial(-1.0)


@pytest.mark.parametrize("which", sorted(MOMENTS))
def test_loggamma_moments(which):
    closed, quad = loggamma_moment(which)
    n, upper = MOMENTS[which]
    mp = oracles.mp
    ref = float(mp.quad(lambda z: z ** n * mp.loggamma(z), [0, upper]))
    assert closed.value == pytest.approx(ref, abs=1e-9)
    assert quad.value == pytest.approx(ref, abs=1e-9)


def test_glaisher_relation():
    assert glaisher_lnA().value == pytest.approx(FROZEN["ln_glaisher"], abs=1e-11)
    assert glaisher_lnA("addison").value == pytest.approx(FROZEN["ln_glaisher"], abs=1e-11)
    with pytest.raises(DomainError):
        glaisher_lnA("nope")


def test_record_validation():
    with pytest.raises(DomainError):
        ConstantRecord("x", 1.0, "folklore", {})
    with pytest.raises(DomainError):
        ConstantRecord("x", 1.0, "printed", {"m": 3})
    rec = ConstantRecord("x", 1.0, "printed", {"m": lambda spec: Eval(1.0)})
    with pytest.raises(DomainError):
        rec.evaluate("other")


def test_log_valued_reference_residual():
    rec = registry()["somos2"]
    assert rec.log_valued
    assert rec.reference_residual(math.log(1.66169)) == pytest.approx(0.0, abs=1e-15)


def test_registry_immutable_and_complete():
    reg = registry()
    assert reg is registry()
    for rec in reg.values():
        assert rec.methods
        for m in rec.methods:
            assert callable(rec.methods[m])
    assert "catalan" in registry_json()


CHEAP = ["catalan", "euler_gamma", "glaisher_lnA", "zeta_prime_2", "L4_1", "L4_3",
         "L4_prime_1", "log_sqrt_2pi", "stieltjes_1", "somos2"]


@pytest.mark.parametrize("name", CHEAP)
def test_registry_routes_agree(name):
    rec = registry()[name]
    evals = [rec.evaluate(m) for m in rec.methods]
    for a in evals:
        for b in evals:
            assert abs(a.value - b.value) <= a.err_est + b.err_est + 1e-12
