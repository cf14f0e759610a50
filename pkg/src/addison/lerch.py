"""Lerch transcendent, polylogarithm, their s-derivatives and polylog moments.

The integral representation used for z in (0, 1] is

    Phi(z, s, a) = a^-s + z/(2 (a+1)^s) + int_1^inf z^x (x+a)^-s dx
                   + int_1^inf [z^x ln z (x+a)^-s - s z^x (x+a)^(-s-1)] P1(x) dx.

Negative z is reduced to z^2 by splitting the series into even and odd
indices, so no branch of z^x for z < 0 is ever needed.
"""

from __future__ import annotations

import math

import numpy as np

from . import accel
from ._hyper import pfq
from .quad import DEFAULT, QuadSpec, integrate_p1, integrate_semi_inf
from .result import DomainError, Eval, TruncationError, combine
from .zetafun import EULER_GAMMA, digamma, h_func, zeta_int


def _check(z, s, a):
    if not (math.isfinite(z) and math.isfinite(s) and math.isfinite(a)):
        raise DomainError("arguments must be finite")
    if abs(z) > 1:
        raise DomainError(f"|z| must not exceed 1, got z={z!r}")
    if abs(z) == 1 and not s > 1:
        raise DomainError("on |z| = 1 the series needs s > 1")
    if not a > 0:
        raise DomainError(f"a must be positive, got {a!r}")


def _phi_positive(z, s, a, spec):
    """Integral representation for 0 < z <= 1."""
    lz = math.log(z)
    head = a ** (-s) + z / (2.0 * (a + 1.0) ** s)
    if z == 1.0:
        plain = Eval((a + 1.0) ** (1.0 - s) / (s - 1.0))
    else:
        plain = integrate_semi_inf(lambda x: np.exp(x * lz) * (x + a) ** (-s), 1.0, spec)

    def weight(x):
        y = x + a
        return np.exp(x * lz) * (lz - s / y) * y ** (-s)

    p1 = integrate_p1(weight, 1.0, spec)
    return combine([plain, p1], const=head)


def lerch_phi(z: float, s: float, a: float, spec: QuadSpec = DEFAULT) -> Eval:
    """Lerch transcendent sum_{n>=0} z^n / (n+a)^s for real |z| <= 1, a > 0."""
    _check(z, s, a)
    if z == 0:
        return Eval(a ** (-s))
    if z > 0:
        return _phi_positive(z, s, a, spec)
    z2 = z * z
    if z2 == 0:
        # z^2 underflows; the z^2 terms are below double resolution
        return Eval(a ** (-s) + z * (a + 1.0) ** (-s))
    even = _phi_positive(z2, s, 0.5 * a, spec)
    odd = _phi_positive(z2, s, 0.5 * (a + 1.0), spec)
    return combine([even, odd], [2.0 ** (-s), z * 2.0 ** (-s)])


def _zeta_tail(s, a, start):
    """sum_{n>=start} (n+a)^-s by Euler-Maclaurin with exact derivatives."""
    x = start + a

    def deriv(k):
        c = 1.0
        for i in range(k):
            c *= -(s + i)
        return c * x ** (-s - k)

    integral = x ** (1.0 - s) / (s - 1.0)
    corr = [0.5 * deriv(0), -deriv(1) / 12.0, deriv(3) / 720.0, -deriv(5) / 30240.0]
    nxt = abs(deriv(7)) / 1209600.0
    return integral + math.fsum(corr), nxt


def lerch_series_oracle(z: float, s: float, a: float, N: int | None = None) -> Eval:
    """Partial sum of the defining series with a tail bound or estimate.

    With ``N`` omitted the number of terms is chosen so that the tail is
    below double-precision resolution.  For z = 1 the tail is added by
    Euler-Maclaurin; for z = -1 the series is split into two z = 1 sums.
    """
    _check(z, s, a)
    if z == -1:
        lo = lerch_series_oracle(1.0, s, 0.5 * a, N)
        hi = lerch_series_oracle(1.0, s, 0.5 * (a + 1.0), N)
        return combine([lo, hi], [2.0 ** (-s), -(2.0 ** (-s))])
    if z == 1:
        n = 1024 if N is None else int(N)
        head = accel.lerch_partial(1.0, s, a, 0, n + 1)
        tail, err = _zeta_tail(s, a, n + 1)
        return Eval(head + tail, err + 1e-16 * abs(head) * 4, n + 1)
    if z == 0:
        return Eval(a ** (-s), 0.0, 1)
    az = abs(z)

    def bound(n):
        t = az ** (n + 1) * (n + 1 + a) ** (-s)
        growth = ((n + 2 + a) / (n + 1 + a)) ** (-s) if s < 0 else 1.0
        rho = az * growth
        return t / (1.0 - rho) if rho < 1 else math.inf

    if N is None:
        n = 64
        while bound(n) > 1e-17 * max(1.0, a ** (-s)) and n < 50_000_000:
            n *= 2
    else:
        n = int(N)
        if n < 0:
            raise DomainError("N must be non-negative")
    head = accel.lerch_partial(z, s, a, 0, n + 1)
    return Eval(head, bound(n) + 4e-16 * abs(head), n + 1)


def polylog(s: float, z: float, spec: QuadSpec = DEFAULT) -> Eval:
    """Polylogarithm Li_s(z) for real |z| <= 1 (s > 1 on |z| = 1).

    For 0 < z <= 1 the dedicated P1 representation with kernel x^-s is
    used; negative z goes through z * Phi(z, s, 1).
    """
    _check(z, s, 1.0)
    if z == 0:
        return Eval(0.0)
    if z < 0:
        return lerch_phi(z, s, 1.0, spec).shifted(scale=z)
    lz = math.log(z)
    if z == 1.0:
        plain = Eval(1.0 / (s - 1.0))
    else:
        plain = integrate_semi_inf(lambda x: np.exp(x * lz) * x ** (-s), 1.0, spec)
    p1 = integrate_p1(lambda x: np.exp(x * lz) * (lz - s / x) * x ** (-s), 1.0, spec)
    return combine([plain, p1], const=0.5 * z)


def _dphi_positive(z, s, a, spec):
    lz = math.log(z)
    head = -math.log(a) * a ** (-s) - 0.5 * z * math.log(a + 1.0) * (a + 1.0) ** (-s)
    plain = integrate_semi_inf(lambda x: np.exp(x * lz) * np.log(x + a) * (x + a) ** (-s), 1.0, spec)

    def weight(x):
        y = x + a
        ly = np.log(y)
        return np.exp(x * lz) * y ** (-s) * (lz * ly + (1.0 - s * ly) / y)

    p1 = integrate_p1(weight, 1.0, spec)
    return combine([plain, p1], [-1.0, -1.0], const=head)


def lerch_phi_sderiv(z: float, s: float, a: float, spec: QuadSpec = DEFAULT) -> Eval:
    """d/ds Phi(z, s, a) for |z| < 1, a > 0."""
    _check(z, s, a)
    if abs(z) >= 1:
        raise DomainError("s-derivative representation requires |z| < 1")
    if z == 0:
        return Eval(-math.log(a) * a ** (-s))
    if z > 0:
        return _dphi_positive(z, s, a, spec)
    z2 = z * z
    c = 2.0 ** (-s)
    even = _phi_positive(z2, s, 0.5 * a, spec)
    odd = _phi_positive(z2, s, 0.5 * (a + 1.0), spec)
    deven = _dphi_positive(z2, s, 0.5 * a, spec)
    dodd = _dphi_positive(z2, s, 0.5 * (a + 1.0), spec)
    ln2 = math.log(2.0)
    return combine([deven, dodd, even, odd], [c, z * c, -ln2 * c, -ln2 * z * c])


# ------------------------------------------------------------ moments

def _moment_series(alpha, n):
    """sum_m 1/(m^n (m+alpha)) = sum_r (-alpha)^r zeta(n+1+r), |alpha| < 1."""
    terms = []
    r = 0
    while True:
        t = (-alpha) ** r * zeta_int(n + 1 + r)
        terms.append(t)
        if abs(alpha) ** (r + 1) * 2.0 < 1e-17 * abs(terms[0]):
            break
        r += 1
        if r > 400:
            raise TruncationError("moment series not converged", Eval(math.fsum(terms)))
    err = abs(alpha) ** (r + 1) * 2.0 + 1e-15 * abs(math.fsum(terms))
    return Eval(math.fsum(terms), err, r + 1)


def hyp2f1_reduced(n: int, alpha: float) -> float:
    """(1/n) 2F1(1, n; n+1; -alpha) in closed form for integer n >= 1."""
    s = math.fsum((-1) ** j / ((n - j) * alpha ** j) for j in range(1, n))
    return (-1) ** (n + 1) * math.log1p(alpha) / alpha ** n - s


SMALL_ALPHA = 0.25


def polylog_moment(alpha: float, n: int, spec: QuadSpec = DEFAULT,
                   closed_form: bool | None = None) -> Eval:
    """int_0^1 t^(alpha-1) Li_n(t) dt for alpha > -1, integer n >= 1.

    Closed forms in psi(alpha+1), zeta and h(j) are used for
    |alpha| >= 0.25; closer to zero they cancel badly and the expansion
    sum_r (-alpha)^r zeta(n+1+r) is used instead.  ``closed_form`` forces
    either branch.
    """
    if int(n) != n or n < 1:
        raise DomainError("n must be a positive integer")
    if not alpha > -1:
        raise DomainError("alpha must exceed -1")
    n = int(n)
    use_closed = abs(alpha) >= SMALL_ALPHA if closed_form is None else closed_form
    if not use_closed or alpha == 0:
        if alpha == 0 or abs(alpha) < 1:
            return _moment_series(alpha, n)
        raise DomainError("series branch needs |alpha| < 1")
    psi = digamma(alpha + 1.0, spec)
    if n == 1:
        return psi.shifted(offset=EULER_GAMMA / alpha, scale=1.0 / alpha)
    if n == 2:
        value = zeta_int(2) / alpha - (psi.value + EULER_GAMMA) / alpha ** 2
        return Eval(value, psi.err_est / alpha ** 2, psi.work)
    return _moment_general(alpha, n, psi, spec)


def _moment_general(alpha, n, psi, spec):
    sign = (-1) ** (n + 1)
    total = [1.0 / (2.0 * (alpha + 1.0)), hyp2f1_reduced(n, alpha)]
    err = psi.err_est / abs(alpha) ** n
    work = psi.work
    for j in range(1, n + 1):
        h = h_func(float(j), spec)
        coef = sign * (-1) ** j * j / alpha ** (n - j + 1)
        total.append(coef * h.value)
        err += abs(coef) * h.err_est
        work += h.work
    total.append(sign / alpha ** n * (psi.value - math.log1p(alpha) + 0.5 / (alpha + 1.0)))
    value = math.fsum(total)
    err += 1e-16 * max(abs(t) for t in total) * len(total)
    return Eval(value, err, work)


def hyp_check_phi(k: int, a: float, z: float, spec: QuadSpec = DEFAULT):
    """(a^-k * k+1Fk(1, a..a; a+1..a+1; z), Phi(z, k, a)) for |z| < 1."""
    if int(k) != k or k < 0:
        raise DomainError("k must be a non-negative integer")
    if not abs(z) < 1:
        raise DomainError("hypergeometric check needs |z| < 1")
    k = int(k)
    series = pfq([1.0] + [a] * k, [a + 1.0] * k, z)
    return series.shifted(scale=a ** (-k)), lerch_phi(z, float(k), a, spec)
