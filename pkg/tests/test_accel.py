import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from addison import _accel_py, accel

backends = accel.backends()
compiled = pytest.mark.skipif("cython" not in backends, reason="compiled backend not built")


def _pair(name, *args):
    return getattr(backends["python"], name)(*args), getattr(backends["cython"], name)(*args)


def _close(a, b, rel=1e-12):
    if isinstance(a, tuple):
        return all(_close(x, y, rel) for x, y in zip(a, b))
    return abs(a - b) <= rel * max(1.0, abs(a))


def test_names_exported():
    for name in accel._NAMES:
        assert callable(getattr(accel, name))
        assert callable(getattr(_accel_py, name))


@compiled
@given(st.sampled_from([accel.POWLOG, accel.LOGRATIO, accel.XLOG]), st.floats(0.5, 3.0),
       st.integers(0, 2), st.floats(0.01, 1.0), st.floats(0.1, 2.0), st.integers(0, 5000))
def test_stencil_sum_agrees(kind, p0, p1, b, a, n):
    args = (kind, p0, float(p1), b, a, [0.0, 0.5, 1.0], [1.0, -2.0, 1.0], 0, n)
    assert _close(*_pair("stencil_sum", *args))


@compiled
@given(st.floats(-0.99, 0.99), st.floats(0.0, 3.0), st.floats(0.1, 3.0), st.integers(0, 3000))
def test_lerch_partial_agrees(z, s, a, n):
    assert _close(*_pair("lerch_partial", z, s, a, 0, n))


@compiled
@given(st.floats(0.1, 6.0), st.floats(1.5, 4.0), st.integers(0, 2), st.booleans(), st.integers(1, 5000))
def test_trig_log_sum_agrees(theta, power, logpow, use_sin, n):
    assert _close(*_pair("trig_log_sum", theta, power, logpow, use_sin, 1, n))


@compiled
@given(st.integers(1, 1000), st.integers(0, 5000))
def test_rational_sum_agrees(i0, n):
    assert _close(*_pair("rational_sum", [2.0, 1.0, 2.0], [0.0, 1.0, 1.0], 1.0, i0, i0 + n))


@compiled
@given(st.integers(1, 100), st.integers(0, 5000))
def test_alt_fraclog_sum_agrees(j0, n):
    assert _close(*_pair("alt_fraclog_sum", j0, j0 + n))


@compiled
@given(st.floats(1.5, 4.0), st.floats(-0.5, 2.0), st.integers(0, 5000))
def test_harmonic_dirichlet_agrees(s, a, n):
    assert _close(*_pair("harmonic_dirichlet", s, a, 1, 1 + n, 0.0))


def test_empty_ranges_are_zero():
    for mod in backends.values():
        assert mod.lerch_partial(0.5, 2.0, 1.0, 5, 5) == 0.0
        assert mod.rational_sum([1.0], [1.0], 1.0, 3, 3) == 0.0


def _backend_in_subprocess(env_value):
    env = dict(os.environ, ADDISON_PURE_PYTHON=env_value)
    out = subprocess.run([sys.executable, "-c", "from addison import accel; print(accel.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_pure_python_switch():
    assert _backend_in_subprocess("1") == "python"
    if "cython" in backends:
        assert _backend_in_subprocess("0") == "cython"


def test_results_identical_under_fallback():
    code = ("from addison.refine import gamma_addison, zeta_prime_addison;"
            "print(repr(gamma_addison().value), repr(zeta_prime_addison(2.0).value))")
    vals = []
    for flag in ("1", "0"):
        env = dict(os.environ, ADDISON_PURE_PYTHON=flag)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        vals.append([float(v) for v in out.stdout.split()])
    for a, b in zip(*vals):
        assert abs(a - b) <= 1e-13
