"""Riemann and Hurwitz zeta, their s-derivatives, Stieltjes constants,
digamma, Bernoulli polynomials and zeta' at negative integers.

Every transcendental value here comes from P1-weighted integrals evaluated by
:mod:`addison.quad`; the closed-form pieces are elementary.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import accel
from .quad import DEFAULT, QuadSpec, integrate_p1
from .result import DomainError, Eval, PoleError, PrecisionError, combine

EULER_GAMMA = 0.57721566490153286061
LOG_2PI = math.log(2.0 * math.pi)
STIELTJES_MAX_ORDER = 20


def _check_s_not_one(s):
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")


def _check_a(a):
    if not (math.isfinite(a) and a > 0):
        raise DomainError(f"Hurwitz shift a must be positive, got {a!r}")


# ------------------------------------------------------------------ zeta

def hurwitz_parts(s: float, a: float, spec: QuadSpec = DEFAULT):
    """Split zeta(s, a) into a regular Eval and the pole coefficient.

    zeta(s, a) = regular + a**(1-s)/(s-1).  Callers that combine several
    shifts with weights summing to zero can cancel the pole analytically.
    """
    if not s > -1:
        raise DomainError(f"representation valid for s > -1, got s={s!r}")
    _check_a(a)
    integral = integrate_p1(lambda x: (x + a) ** (-s - 1.0), 0.0, spec)
    regular = integral.shifted(offset=0.5 * a ** (-s), scale=-s)
    return regular, a ** (1.0 - s)


def hurwitz(s: float, a: float, spec: QuadSpec = DEFAULT) -> Eval:
    """Hurwitz zeta for s > -1, s != 1, a > 0."""
    _check_s_not_one(s)
    regular, pole = hurwitz_parts(s, a, spec)
    return regular.shifted(offset=pole / (s - 1.0))


def zeta(s: float, spec: QuadSpec = DEFAULT) -> Eval:
    """Riemann zeta for s > -1, s != 1."""
    _check_s_not_one(s)
    if s == 0:
        return Eval(-0.5, 0.0, 0)
    if s > 1:
        integral = integrate_p1(lambda x: x ** (-s - 1.0), 1.0, spec)
        return integral.shifted(offset=1.0 / (s - 1.0) + 0.5, scale=-s)
    return hurwitz(s, 1.0, spec)


@lru_cache(maxsize=None)
def zeta_int(k: int) -> float:
    """Memoised zeta(k) for integers k >= 2 (write-once cache)."""
    return zeta(float(k)).value


@lru_cache(maxsize=None)
def zeta_prime_int(k: int) -> float:
    return zeta_nderiv(1, float(k)).value


def loggamma_taylor(x: float, terms: int) -> Eval:
    """-ln x - gamma x + sum_{k=2}^{terms} (-1)^k zeta(k) x^k / k for 0 < x < 1.

    The terms alternate and shrink in magnitude, so the first omitted term
    bounds the remainder.
    """
    if not 0 < x < 1:
        raise DomainError("need 0 < x < 1")
    if int(terms) != terms or terms < 2:
        raise DomainError("terms must be an integer >= 2")
    parts = [-math.log(x), -EULER_GAMMA * x]
    parts += [(-1) ** k * zeta_int(k) * x ** k / k for k in range(2, int(terms) + 1)]
    nxt = zeta_int(int(terms) + 1) * x ** (terms + 1) / (terms + 1)
    return Eval(math.fsum(parts), nxt + 1e-16 * len(parts), int(terms))


def zeta_nderiv(n: int, s: float, spec: QuadSpec = DEFAULT) -> Eval:
    """n-th derivative of zeta at s > 1 from log-power P1 integrals."""
    if int(n) != n or n < 1:
        raise DomainError("derivative order n must be a positive integer")
    _check_s_not_one(s)
    if not s > 1:
        raise DomainError("derivative representation requires s > 1")
    n = int(n)

    def f(x):
        lx = np.log(x)
        base = x ** (-s - 1.0) * lx ** (n - 1)
        return np.stack([base, base * lx])

    r = integrate_p1(f, 1.0, spec)
    i_lo, i_hi = r.value
    sign = (-1) ** n
    value = sign * math.factorial(n) / (s - 1.0) ** (n + 1) + sign * n * i_lo - sign * s * i_hi
    return Eval(value, (n + abs(s)) * r.err_est, r.work)


def hurwitz_sderiv(s: float, a: float, spec: QuadSpec = DEFAULT) -> Eval:
    """d/ds zeta(s, a) for s > 0, s != 1, a > 0."""
    _check_s_not_one(s)
    if not s > 0:
        raise DomainError("s-derivative representation requires s > 0")
    _check_a(a)

    def f(x):
        y = x + a
        base = y ** (-s - 1.0)
        return np.stack([base, base * np.log(y)])

    r = integrate_p1(f, 0.0, spec)
    i0, i1 = r.value
    la = math.log(a)
    p = a ** (1.0 - s)
    value = (-la / (2.0 * a ** s) - p / (s - 1.0) ** 2 - p * la / (s - 1.0)
             - i0 + s * i1)
    return Eval(value, (1.0 + abs(s)) * r.err_est, r.work)


# ------------------------------------------------------------- Stieltjes

def _log_power_peak(n: int) -> float:
    """max over x >= 1 of |ln^{n-1}(x) (n - ln x)| / x^2."""
    t = np.linspace(0.0, 4.0 * n + 8.0, 4001)
    return float(np.max(np.abs(t ** (n - 1) * (n - t) * np.exp(-2.0 * t))))


def _stieltjes_integrals(nmax: int, a: float, spec: QuadSpec):
    """I_n(a) = int_{1-a}^inf P1(y) phi_n'(y + a) dy, phi_n = ln^n x / x, n=1..nmax.

    The integrand peaks near x = e^{n/2} at a height that grows like
    (n/2e)^n, so the attainable absolute accuracy is floored at a small
    multiple of that height times the unit roundoff.
    """
    orders = np.arange(1, nmax + 1, dtype=float)[:, None]
    floor = 256 * np.finfo(float).eps * _log_power_peak(nmax)
    if floor > spec.tol:
        spec = spec.with_tol(floor)

    def f(y):
        x = y + a
        lx = np.log(x)
        return lx[None, :] ** (orders - 1.0) * (orders - lx[None, :]) / (x * x)[None, :]

    return integrate_p1(f, 1.0 - a, spec)


def stieltjes_batch(nmax: int, a: float, spec: QuadSpec = DEFAULT) -> list[Eval]:
    """gamma_n(a) for n = 0..nmax from one shared quadrature.

    For a in (0, 1] the n = 0 term of the defining sum is split off; for
    a in (1, 2] the integral alone is gamma_n(a).
    """
    if int(nmax) != nmax or nmax < 0:
        raise DomainError("order must be a non-negative integer")
    if nmax > STIELTJES_MAX_ORDER:
        raise PrecisionError(
            f"gamma_n beyond n={STIELTJES_MAX_ORDER} is dominated by rounding in double precision")
    if not (0 < a <= 2):
        raise DomainError(f"shift a must lie in (0, 2], got {a!r}")
    out = [digamma(a, spec).shifted(scale=-1.0)]
    if nmax == 0:
        return out
    r = _stieltjes_integrals(int(nmax), a, spec)
    la = math.log(a)
    vals = np.atleast_1d(r.value)
    for n in range(1, int(nmax) + 1):
        lead = la ** n / a if a <= 1 else 0.0
        out.append(Eval(lead + float(vals[n - 1]), r.err_est, r.work))
    return out


def stieltjes(n: int, a: float = 1.0, spec: QuadSpec = DEFAULT) -> Eval:
    """Generalised Stieltjes constant gamma_n(a), a in (0, 2], 0 <= n <= 20."""
    if int(n) != n or n < 0:
        raise DomainError("order must be a non-negative integer")
    if n > STIELTJES_MAX_ORDER:
        raise PrecisionError(
            f"gamma_n beyond n={STIELTJES_MAX_ORDER} is dominated by rounding in double precision")
    if not (0 < a <= 2):
        raise DomainError(f"shift a must lie in (0, 2], got {a!r}")
    if n == 0:
        return digamma(a, spec).shifted(scale=-1.0)
    r = _stieltjes_integrals(int(n), a, spec)
    lead = math.log(a) ** n / a if a <= 1 else 0.0
    return Eval(lead + float(np.atleast_1d(r.value)[-1]), r.err_est, r.work)


def stieltjes_difference_series(j: int, a: float, b: float, tol: float = 1e-12) -> Eval:
    """sum_{n>=0} [ln^j(n+a)/(n+a) - ln^j(n+b)/(n+b)] = gamma_j(a) - gamma_j(b).

    Summed directly to N terms with the remainder from Euler-Maclaurin,
    using the closed antiderivative ln^{j+1}(x)/(j+1) of each part.
    """
    _check_a(a)
    _check_a(b)
    N = 4096
    direct = (accel.stencil_sum(accel.POWLOG, 1.0, j, 1.0, a, [0.0], [1.0], 0, N)
              - accel.stencil_sum(accel.POWLOG, 1.0, j, 1.0, b, [0.0], [1.0], 0, N))

    def part(x):
        lx = math.log(x)
        value = lx ** j / x
        d1 = lx ** (j - 1) * (j - lx) / x ** 2
        return value, d1

    ya, yb = N + a, N + b
    integral = -(math.log(ya) ** (j + 1) - math.log(yb) ** (j + 1)) / (j + 1)
    fa, da = part(ya)
    fb, db = part(yb)
    tail = integral + 0.5 * (fa - fb) - (da - db) / 12.0
    err = abs(da - db) / ya ** 2 + 1e-15 * N
    return Eval(direct + tail, err, N)


# --------------------------------------------------------------- digamma

def digamma(a: float, spec: QuadSpec = DEFAULT) -> Eval:
    """psi(a) for a > 0 from the P1 representation of psi(b + 1)."""
    _check_a(a)
    b = a - 1.0 if a > 1 else a
    integral = integrate_p1(lambda y: (y + b) ** -2.0, 1.0, spec)
    value = math.log(b + 1.0) - 0.5 / (b + 1.0) + integral.value
    if a <= 1:
        value -= 1.0 / a
    return Eval(value, integral.err_est, integral.work)


def harmonic(n: int) -> float:
    """Harmonic number H_n = psi(n + 1) + gamma."""
    if int(n) != n or n < 0:
        raise DomainError("n must be a non-negative integer")
    if n == 0:
        return 0.0
    return digamma(float(n) + 1.0).value + EULER_GAMMA


def psi_fast(x):
    """Vectorised digamma for x > 0 (recurrence up to 16, then asymptotic)."""
    x = np.asarray(x, dtype=float)
    acc = np.zeros_like(x)
    y = x.copy()
    for _ in range(16):
        small = y < 16.0
        if not np.any(small):
            break
        acc -= np.where(small, 1.0 / np.where(small, y, 1.0), 0.0)
        y = np.where(small, y + 1.0, y)
    inv2 = 1.0 / (y * y)
    series = inv2 * (1 / 12 - inv2 * (1 / 120 - inv2 * (1 / 252 - inv2 * (
        1 / 240 - inv2 * (1 / 132 - inv2 * (691 / 32760 - inv2 / 12))))))
    return acc + np.log(y) - 0.5 / y - series


def trigamma_fast(x):
    """Vectorised trigamma for x > 0."""
    x = np.asarray(x, dtype=float)
    acc = np.zeros_like(x)
    y = x.copy()
    for _ in range(16):
        small = y < 16.0
        if not np.any(small):
            break
        acc += np.where(small, 1.0 / np.where(small, y, 1.0) ** 2, 0.0)
        y = np.where(small, y + 1.0, y)
    inv = 1.0 / y
    inv2 = inv * inv
    series = inv + 0.5 * inv2 + inv * inv2 * (1 / 6 - inv2 * (1 / 30 - inv2 * (1 / 42 - inv2 * (
        1 / 30 - inv2 * (5 / 66 - inv2 * (691 / 2730 - inv2 * 7 / 6))))))
    return acc + series


# ------------------------------------------------------------ Bernoulli

@lru_cache(maxsize=None)
def bernoulli_number(k: int) -> Fraction:
    """Exact Bernoulli number B_k with B_1 = -1/2."""
    if k < 0:
        raise DomainError("k must be non-negative")
    b = [Fraction(1)]
    for m in range(1, k + 1):
        b.append(-sum(math.comb(m + 1, j) * b[j] for j in range(m)) / (m + 1))
    return b[k]


def bernoulli_poly(k: int, q: float) -> float:
    """Bernoulli polynomial B_k(q) from the binomial expansion in B_j."""
    if int(k) != k or k < 0:
        raise DomainError("k must be a non-negative integer")
    k = int(k)
    if q == 0:
        return float(bernoulli_number(k)) if k != 1 else -0.5
    if isinstance(q, Fraction) or (isinstance(q, int)):
        q = Fraction(q)
        return float(sum(math.comb(k, j) * bernoulli_number(j) * q ** (k - j) for j in range(k + 1)))
    terms = [math.comb(k, j) * float(bernoulli_number(j)) * q ** (k - j) for j in range(k + 1)]
    return math.fsum(terms)


# ----------------------------------------------------- negative integers

def zeta_prime_neg(k: int, spec: QuadSpec = DEFAULT) -> Eval:
    """zeta'(1 - k) for integers k >= 2 by differentiating the reflection formula.

    zeta(1-s) = 2 (2 pi)^{-s} cos(pi s/2) Gamma(s) zeta(s), so
    zeta'(1-k) = -d/ds[...] at s = k, which needs zeta(k), zeta'(k), psi(k).
    """
    if int(k) != k or k < 2:
        raise DomainError("k must be an integer >= 2")
    k = int(k)
    z = zeta(float(k), spec)
    zp = zeta_nderiv(1, float(k), spec)
    psi = digamma(float(k), spec)
    pref = 2.0 * (2.0 * math.pi) ** (-k) * math.factorial(k - 1)
    c = math.cos(math.pi * k / 2.0)
    sn = math.sin(math.pi * k / 2.0)
    if k % 2:
        c = 0.0
    else:
        sn = 0.0
    # derivative of f(s) = 2 (2pi)^-s cos(pi s/2) Gamma(s) zeta(s)
    dlog = -LOG_2PI + psi.value
    value_f_prime = pref * (c * (dlog * z.value + zp.value) - 0.5 * math.pi * sn * z.value)
    value = -value_f_prime
    err = pref * (abs(c) * (abs(z.value) * psi.err_est + abs(dlog) * z.err_est + zp.err_est)
                  + 0.5 * math.pi * abs(sn) * z.err_est)
    return Eval(value, err, z.work + zp.work + psi.work)


# ------------------------------------------------------------ h(s) helper

def h_func(s: float, spec: QuadSpec = DEFAULT) -> Eval:
    """h(s) = int_1^inf x^{-s-1} P1(x) dx = -zeta(s)/s + (s+1)/(2 s (s-1)).

    The P1 integral is used directly, so h(1) = 1/2 - gamma needs no limit.
    """
    if not s > 0:
        raise DomainError("h(s) requires s > 0")
    return integrate_p1(lambda x: x ** (-s - 1.0), 1.0, spec)
