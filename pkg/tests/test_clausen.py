import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.special import sici

import oracles
from addison.clausen import (CHI4, CharacterTable, L4_odd_closed, L4_prime1, catalan, clausen,
                             clausen2_ci, clausen_fourier, cosint, dirichlet_L, dirichlet_L4,
                             load_character_table)
from addison.result import DomainError, PoleError
from oracles import FROZEN


@given(st.floats(1e-6, 60.0))
def test_cosint_vs_mpmath_and_scipy(z):
    r = cosint(z)
    assert abs(r.value - float(oracles.mp.ci(z))) <= r.err_est
    assert r.value == pytest.approx(sici(z)[1], abs=2e-15)


def test_cosint_domain():
    with pytest.raises(DomainError):
        cosint(0.0)


@given(st.integers(2, 5), st.floats(0.05, 2 * math.pi - 0.05))
def test_clausen_vs_polylog(n, theta):
    assert clausen(n, theta).value == pytest.approx(oracles.clausen(n, theta), abs=1e-10)


@pytest.mark.parametrize("theta", [0.5, 1.0, 2.0, 3.0])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_clausen_parity(n, theta):
    a = clausen(n, theta).value
    b = clausen(n, 2 * math.pi - theta).value
    assert a == pytest.approx(-b if n % 2 == 0 else b, abs=1e-9)


@pytest.mark.parametrize("theta", [0.4, 1.1, 2.5])
def test_clausen2_duplication(theta):
    # Cl_2(2 theta) = 2 Cl_2(theta) - 2 Cl_2(pi - theta)
    lhs = clausen(2, 2 * theta).value
    rhs = 2 * clausen(2, theta).value - 2 * clausen(2, math.pi - theta).value
    assert lhs == pytest.approx(rhs, abs=1e-9)


@pytest.mark.parametrize("theta", [0.3, 1.0, math.pi / 2, 3.0])
def test_clausen2_ci_route(theta):
    assert clausen2_ci(theta).value == pytest.approx(oracles.clausen(2, theta), abs=1e-10)


def test_clausen_fourier_bound():
    r = clausen_fourier(3, 1.0, 20_000)
    assert abs(r.value - oracles.clausen(3, 1.0)) <= r.err_est


def test_catalan_routes():
    G = FROZEN["catalan"]
    assert catalan().value == pytest.approx(G, abs=1e-11)
    assert clausen(2, math.pi / 2).value == pytest.approx(G, abs=1e-11)
    assert dirichlet_L4(2.0).value == pytest.approx(G, abs=1e-11)


@pytest.mark.parametrize("s", [0.0, 0.5, 1.0, 2.0, 3.0, 4.5])
def test_dirichlet_L4_vs_hurwitz_oracle(s):
    assert dirichlet_L4(s).value == pytest.approx(oracles.dirichlet_L4(s), abs=1e-10)


def test_dirichlet_L4_known_values():
    assert dirichlet_L4(1.0).value == pytest.approx(math.pi / 4, abs=1e-12)
    assert dirichlet_L4(3.0).value == pytest.approx(FROZEN["L4_3"], abs=1e-12)


def test_principal_character_is_zeta_with_euler_factor():
    chi = CharacterTable.principal_mod(2)
    assert dirichlet_L(3.0, chi).value == pytest.approx(0.875 * FROZEN["zeta3"], abs=1e-10)
    with pytest.raises(PoleError):
        dirichlet_L(1.0, chi)
    with pytest.raises(DomainError):
        dirichlet_L(0.5, chi)


def test_character_mod3_vs_mpmath():
    chi = CharacterTable(3, (1.0, -1.0, 0.0), False)
    ref = float(oracles.mp.dirichlet(2, [0, 1, -1]))
    assert dirichlet_L(2.0, chi).value == pytest.approx(ref, abs=1e-10)


@pytest.mark.parametrize("values", [
    (1.0, 0.0, 1.0),          # chi(3) must vanish mod 3
    (1.0, 0.5, 0.0),          # not +-1
    (-1.0, 1.0, 0.0),         # chi(1) != 1
    (1.0, 0.0, 1.0, 0.0, 1.0),  # wrong length for mod 3
])
def test_character_validation(values):
    with pytest.raises(DomainError):
        CharacterTable(3, values, False)


def test_character_principal_flag_checked():
    with pytest.raises(DomainError):
        CharacterTable(4, (1.0, 0.0, 1.0, 0.0), False)


def test_non_multiplicative_rejected():
    # mod 5 with chi(2) = chi(3) = chi(4) = -1 breaks chi(4) = chi(2)^2
    with pytest.raises(DomainError):
        CharacterTable(5, (1.0, -1.0, -1.0, -1.0, 0.0), False)


def test_load_character_table(tmp_path):
    p = tmp_path / "chi4.txt"
    p.write_text("4\n1 0 -1 0\n")
    assert load_character_table(p) == CHI4
    bad = tmp_path / "bad.txt"
    bad.write_text("four\n1 0 -1 0\n")
    with pytest.raises(DomainError):
        load_character_table(bad)


def test_L4_prime1_routes():
    ref = FROZEN["L4_prime_1"]
    assert L4_prime1("stieltjes").value == pytest.approx(ref, abs=1e-12)
    assert L4_prime1("closed_form").value == pytest.approx(ref, abs=1e-14)
    fd = L4_prime1("finite_difference")
    assert abs(fd.value - ref) <= fd.err_est


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_L4_odd_closed_corrected(m):
    assert L4_odd_closed(m) == pytest.approx(oracles.dirichlet_L4(2 * m + 1), rel=1e-13)


def test_L4_odd_closed_printed_agrees_for_even_m():
    assert L4_odd_closed(0, "printed") == pytest.approx(math.pi / 4)
    assert L4_odd_closed(2, "printed") == pytest.approx(L4_odd_closed(2))
