import math

import pytest
from hypothesis import example, given
from hypothesis import strategies as st

import oracles
from addison.lerch import (hyp2f1_reduced, hyp_check_phi, lerch_phi, lerch_phi_sderiv,
                           lerch_series_oracle, polylog, polylog_moment)
from addison.result import DomainError
from addison.verify import lerch_grid

zs = st.floats(-0.95, 0.95)
ss = st.floats(0.0, 4.0)
as_ = st.floats(0.2, 4.0)


@given(zs, ss, as_)
def test_representation_vs_mpmath(z, s, a):
    r = lerch_phi(z, s, a)
    ref = oracles.lerch(z, s, a)
    assert abs(r.value - ref) <= 1e-9 * max(1.0, abs(ref))


@given(zs, ss, as_)
def test_series_oracle_vs_mpmath(z, s, a):
    r = lerch_series_oracle(z, s, a)
    ref = oracles.lerch(z, s, a)
    assert abs(r.value - ref) <= r.err_est + 1e-13 * max(1.0, abs(ref))


def test_grid_has_sixty_generic_points():
    pts = lerch_grid()
    generic = [p for p in pts if p[0] not in (0.0, 1.0)]
    assert len(generic) == 60
    assert {p[0] for p in pts} >= {0.0, 1.0}


def test_grid_representation_vs_series():
    worst = max(abs(lerch_phi(*p).value - lerch_series_oracle(*p).value) for p in lerch_grid())
    assert worst <= 1e-9


@pytest.mark.parametrize("z, s, a", [(1.0, 2.0, 1.0), (1.0, 3.0, 0.5), (-1.0, 2.0, 1.0), (-1.0, 1.5, 2.0)])
def test_unit_circle(z, s, a):
    assert lerch_phi(z, s, a).value == pytest.approx(oracles.lerch(z, s, a), abs=1e-10)
    assert lerch_series_oracle(z, s, a).value == pytest.approx(oracles.lerch(z, s, a), abs=1e-12)


def test_zero_argument():
    assert lerch_phi(0.0, 2.0, 3.0).value == 3.0 ** -2


@pytest.mark.parametrize("args", [(1.5, 2.0, 1.0), (1.0, 1.0, 1.0), (-1.0, 0.5, 1.0),
                                  (0.5, 2.0, 0.0), (0.5, math.nan, 1.0)])
def test_lerch_domain(args):
    with pytest.raises(DomainError):
        lerch_phi(*args)


@given(st.floats(0.5, 4.0), st.floats(-1.0, 1.0).filter(lambda z: abs(z) < 0.999))
@example(1.5, -0.9375)
def test_polylog_vs_mpmath(s, z):
    assert polylog(s, z).value == pytest.approx(oracles.polylog(s, z), abs=1e-10)


def test_polylog_relation_to_lerch():
    assert polylog(2.0, 0.5).value == pytest.approx(0.5 * lerch_phi(0.5, 2.0, 1.0).value, abs=1e-12)
    assert polylog(2.0, 1.0).value == pytest.approx(math.pi ** 2 / 6, abs=1e-10)


@pytest.mark.parametrize("z, s, a", [(0.5, 2.0, 1.0), (0.9, 0.5, 2.0), (-0.5, 3.0, 0.5)])
def test_sderiv_vs_mpmath(z, s, a):
    assert lerch_phi_sderiv(z, s, a).value == pytest.approx(oracles.lerch_sderiv(z, s, a), abs=1e-9)


@pytest.mark.parametrize("alpha", [-0.5, 0.1, 0.5, 1.0, 2.5])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_polylog_moment_vs_quadrature(alpha, n):
    mp = oracles.mp
    ref = float(mp.quad(lambda t: t ** (alpha - 1) * mp.polylog(n, t), [0, 1]))
    r = polylog_moment(alpha, n)
    assert abs(r.value - ref) <= max(1e-9, r.err_est)


def test_polylog_moment_branches_agree():
    for n in (1, 2, 3):
        a = polylog_moment(0.3, n, closed_form=True).value
        b = polylog_moment(0.3, n, closed_form=False).value
        assert a == pytest.approx(b, abs=1e-9)


@given(st.integers(1, 8), st.floats(0.05, 3.0))
def test_hyp2f1_reduced(n, alpha):
    ref = float(oracles.mp.hyp2f1(1, n, n + 1, -alpha)) / n
    assert hyp2f1_reduced(n, alpha) == pytest.approx(ref, rel=1e-8, abs=1e-12)


@pytest.mark.parametrize("k, a, z", [(0, 1.0, 0.5), (1, 0.5, -0.7), (2, 2.0, 0.9), (3, 1.5, 0.3)])
def test_hypergeometric_form(k, a, z):
    series, phi = hyp_check_phi(k, a, z)
    assert series.value == pytest.approx(phi.value, abs=1e-10)
