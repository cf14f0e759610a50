"""Kinkelin's constant zeta'(-1), the Taylor coefficients of Gamma(z+1) and
integrals of Gamma against x and sin(alpha x) over [0, 1]."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._hyper import pfq
from .constants import _zeta_minus_one
from .kernel import p1
from .quad import DEFAULT, QuadSpec, integrate_finite, integrate_p1, integrate_semi_inf, integrate_trig
from .result import DomainError, Eval, TruncationError, combine
from .zetafun import EULER_GAMMA, LOG_2PI, zeta_int

KINKELIN_METHODS = ("laplace_a1", "gamma_moment_a2", "series_a5", "p1_a8")
MOMENT_X_METHODS = ("taylor_a3", "laplace_a10", "direct")
MOMENT_SIN_METHODS = ("laplace_a9", "onef2_a12", "antiderivative_a13")

MAX_TAYLOR = 40
# poles of Gamma(z+1) at z = -1, -2, -3 are removed from the Taylor tail
_POLES = 3


# ------------------------------------------------------ Taylor coefficients

@dataclass(frozen=True)
class GammaTaylor:
    """c_0..c_N with Gamma(z+1) = sum c_k z^k; residuals[n] is the recurrence
    defect at step n recomputed with compensated summation."""

    coeffs: tuple
    residuals: tuple

    def __post_init__(self):
        if self.coeffs[0] != 1.0:
            raise DomainError("c_0 must be 1")

    def __call__(self, z: float) -> float:
        return math.fsum(c * z ** k for k, c in enumerate(self.coeffs))


def _s(n):
    return EULER_GAMMA if n == 1 else zeta_int(n)


@lru_cache(maxsize=None)
def gamma_taylor(N: int = MAX_TAYLOR) -> GammaTaylor:
    """c_{n+1} = (1/(n+1)) sum_{k=0}^n (-1)^(k+1) s_{k+1} c_{n-k}, s_1 = gamma, s_n = zeta(n)."""
    if not (0 <= N <= MAX_TAYLOR):
        raise DomainError(f"N must lie in [0, {MAX_TAYLOR}]")
    c = [1.0]
    res = []
    for n in range(N):
        terms = [(-1) ** (k + 1) * _s(k + 1) * c[n - k] for k in range(n + 1)]
        c.append(sum(terms) / (n + 1))
        res.append(abs((n + 1) * c[-1] - math.fsum(terms)))
    return GammaTaylor(tuple(c), tuple(res))


def _pole_c(m, k):
    """Taylor coefficient of z^k in (-1)^m/m! / (z + m + 1), times (-1)^k."""
    return (-1) ** m / math.factorial(m) / (m + 1) ** (k + 1)


def _pole_sum(weights, pole_terms, N):
    """sum_k (-1)^k c_k w_k with the first poles' contribution summed in closed form.

    ``weights[k]`` is w_k; ``pole_terms[m]`` the exact value of
    sum_k (pole part m of (-1)^k c_k) w_k.
    """
    c = gamma_taylor(N).coeffs
    body = [((-1) ** k * c[k] - sum(_pole_c(m, k) for m in range(_POLES))) * weights[k]
            for k in range(N + 1)]
    last = abs(body[-1])
    return Eval(math.fsum(body) + math.fsum(pole_terms), 2 * last + 1e-15, N + 1)


# ---------------------------------------------------------- int_0^1 x Gamma

def _moment_x_taylor(form: int, N: int) -> Eval:
    if form == 1:
        # int_0^1 x (1-x)^k dx = 1/((k+1)(k+2)); pole part m: r_m int_0^1 x/(x+m)
        w = [1.0 / ((k + 1) * (k + 2)) for k in range(N + 1)]
        poles = [1.0] + [(-1) ** m / math.factorial(m) * (1.0 - m * math.log((m + 1) / m))
                         for m in range(1, _POLES)]
        return _pole_sum(w, poles, N)
    if form == 2:
        # int_0^1 Gamma(x+1) = sum c_k/(k+1); written over (-1)^k c_k with weights (-1)^k/(k+1)
        w = [(-1) ** k / (k + 1) for k in range(N + 1)]
        poles = [(-1) ** m / math.factorial(m) * math.log((m + 2) / (m + 1)) for m in range(_POLES)]
        return _pole_sum(w, poles, N)
    raise DomainError("form must be 1 or 2")


def _ratio_log(u):
    """(u - 1)/ln u, continuous through u = 1."""
    w = np.log(np.asarray(u, dtype=float))
    safe = np.where(w == 0, 1.0, w)
    return np.where(w == 0, 1.0, np.expm1(safe) / safe)


def _near_zero(f, b, spec, what):
    """int_0^b f for integrands with a logarithmic endpoint feature at 0,
    on dyadic panels [b 2^-(j+1), b 2^-j]."""
    parts = []
    for j in range(200):
        hi = b * 2.0 ** -j
        r = integrate_finite(f, hi / 2, hi, spec.with_tol(spec.tol / 64))
        parts.append(r)
        if abs(r.value) < 1e-3 * spec.tol and hi < 1e-3 * b:
            # remaining [0, hi/2] is bounded by the last panel's size
            total = combine(parts)
            return Eval(total.value, total.err_est + abs(r.value), total.work)
    raise TruncationError(f"{what}: endpoint panels did not decay", combine(parts))


_T_SPLIT = (0.5, 4.0)


def _moment_x_laplace(lam: float, spec: QuadSpec) -> Eval:
    if not lam > 0:
        raise DomainError("lambda must be positive")

    def f(t):
        t = np.asarray(t, dtype=float)
        return lam * np.exp(-lam * t) * _ratio_log(lam * t)

    # breakpoints fixed in t, so different lambda give genuinely different quadratures
    lo, hi = _T_SPLIT
    return combine([_near_zero(f, lo, spec, "laplace_a10"),
                    integrate_finite(f, lo, hi, spec),
                    integrate_semi_inf(f, hi, spec)])


def _moment_x_direct(spec: QuadSpec) -> Eval:
    """int_0^inf e^-u (u-1)/ln u du with u = e^-v on [0,1] and u = e^v on [1, inf)."""

    def lower(v):
        v = np.asarray(v, dtype=float)
        return np.exp(-np.exp(-v) - v) * _ratio_log(np.exp(-v))

    def upper(v):
        v = np.asarray(v, dtype=float)
        return np.exp(-np.exp(v) + v) * _ratio_log(np.exp(v))

    return combine([integrate_semi_inf(lower, 0.0, spec), integrate_semi_inf(upper, 0.0, spec)])


def gamma_moment_x(method: str = "taylor_a3", *, form: int = 1, lam: float = 1.0,
                   terms: int = MAX_TAYLOR, spec: QuadSpec = DEFAULT) -> Eval:
    """int_0^1 x Gamma(x) dx.

    ``taylor_a3`` sums the Gamma Taylor coefficients against Beta weights
    (``form`` 1) or against 1/(k+1) (``form`` 2); ``laplace_a10`` is the
    lambda-scaled Laplace-type integral; ``direct`` the u-integral after
    two integrations by parts.
    """
    if method == "taylor_a3":
        return _moment_x_taylor(form, terms)
    if method == "laplace_a10":
        return _moment_x_laplace(lam, spec)
    if method == "direct":
        return _moment_x_direct(spec)
    if method == "quadrature":
        g = np.vectorize(math.gamma)
        return integrate_finite(lambda x: g(np.asarray(x) + 1.0), 0.0, 1.0, spec)
    raise DomainError(f"unknown method {method!r}; choose from {MOMENT_X_METHODS}")


# ---------------------------------------------------- int_0^1 sin(ax) Gamma

def hyp1F2(a1: float, b1: float, b2: float, x: float) -> Eval:
    return pfq([a1], [b1, b2], x)


def _sin_weight_onef2(alpha, k):
    """int_0^1 sin(alpha x)(1-x)^k dx as a 1F2 series."""
    f = hyp1F2(1.0, (k + 3) / 2.0, 2.0 + k / 2.0, -alpha * alpha / 4.0)
    return alpha * f.value / ((k + 1) * (k + 2))


def _sin_weight_trig(alpha, k, form):
    """The same weight from the closed antiderivative.

    The terms l!/alpha^(l+1) cancel almost completely, so the sum is carried
    out in multiprecision arithmetic.
    """
    import mpmath as mp

    digits = 30 + int(math.lgamma(k + 1) / math.log(10) + (k + 1) * max(0.0, -math.log10(abs(alpha))))
    with mp.workdps(digits):
        a = mp.mpf(alpha)
        hp = mp.pi / 2
        top = k + 1 if form == 1 else k
        s = mp.fsum(mp.factorial(l) / a ** (l + 1) * mp.binomial(k, l) * mp.cos(l * hp)
                    for l in range(top))
        kk = mp.factorial(k) / a ** (k + 1)
        if form == 1:
            s -= kk * mp.cos(a - k * hp)
        else:
            s += 2 * kk * mp.sin(a / 2) * mp.sin((a - k * mp.pi) / 2)
        return float(s)


def _sin_pole_terms(alpha, spec):
    # r_m int_0^1 sin(alpha x)/(x + m) dx; m = 0 is Si(alpha)
    out = []
    for m in range(_POLES):
        if m == 0:
            r = integrate_finite(lambda x: alpha * np.sinc(alpha * np.asarray(x) / np.pi), 0.0, 1.0, spec)
        else:
            r = integrate_finite(lambda x, m=m: np.sin(alpha * x) / (x + m), 0.0, 1.0, spec)
        out.append((-1) ** m / math.factorial(m) * r.value)
    return out


def _check_alpha(alpha):
    if not (math.isfinite(alpha) and abs(alpha) <= math.pi / 2 + 1e-15):
        raise DomainError("need |alpha| <= pi/2")


def gamma_moment_sin(alpha: float, method: str = "onef2_a12", *, lam: float = 1.0,
                     terms: int = MAX_TAYLOR, pole_correction: bool = True,
                     form: int = 1, spec: QuadSpec = DEFAULT) -> Eval:
    """int_0^1 sin(alpha x) Gamma(x) dx for |alpha| <= pi/2.

    The series routes weight (-1)^k c_k by int_0^1 sin(alpha x)(1-x)^k dx,
    from a 1F2 (``onef2_a12``) or the closed trig antiderivative
    (``antiderivative_a13``, ``form`` 1 or 2).  With ``pole_correction`` the
    three nearest poles of Gamma are summed in closed form; without it the
    plain truncated series of ``terms`` + 1 terms is returned.
    """
    _check_alpha(alpha)
    if alpha == 0:
        return Eval(0.0)
    if alpha < 0:
        return gamma_moment_sin(-alpha, method, lam=lam, terms=terms,
                                pole_correction=pole_correction, form=form, spec=spec).shifted(scale=-1.0)
    if method == "laplace_a9":
        return _sin_laplace(alpha, lam, spec)
    if method == "onef2_a12":
        w = [_sin_weight_onef2(alpha, k) for k in range(terms + 1)]
    elif method == "antiderivative_a13":
        w = [_sin_weight_trig(alpha, k, form) for k in range(terms + 1)]
    else:
        raise DomainError(f"unknown method {method!r}; choose from {MOMENT_SIN_METHODS}")
    if pole_correction:
        return _pole_sum(w, _sin_pole_terms(alpha, spec), terms)
    c = gamma_taylor(terms).coeffs
    body = [(-1) ** k * c[k] * w[k] for k in range(terms + 1)]
    # the pole at -1 keeps the terms one-signed with decay ~ 1/k^2, so the tail
    # is about (terms + 1) last terms; the factor 2 covers the further poles
    return Eval(math.fsum(body), 2.0 * abs(body[-1]) * (terms + 1), terms + 1)


def _sin_laplace(alpha, lam, spec):
    if not lam > 0:
        raise DomainError("lambda must be positive")
    ca, sa = math.cos(alpha), math.sin(alpha)

    def envelope(t):
        t = np.asarray(t, dtype=float)
        return np.exp(-lam * t * ca) * lam * _ratio_log(lam * t) / (lam * t)

    def f(t):
        t = np.asarray(t, dtype=float)
        # sin(lam t sin a)/t stays finite at t = 0
        return np.exp(-lam * t * ca) * lam * sa * np.sinc(lam * t * sa / np.pi) * _ratio_log(lam * t)

    # breakpoints fixed in t, so different lambda give genuinely different quadratures
    lo, hi = _T_SPLIT
    parts = [_near_zero(f, lo, spec, "laplace_a9"), integrate_finite(f, lo, hi, spec)]
    if ca > 0.25:
        parts.append(integrate_semi_inf(f, hi, spec))
    else:
        parts.append(integrate_trig(envelope, lam * sa, hi, "im", spec))
    return combine(parts)


# ------------------------------------------------------------ Kinkelin k

def _kinkelin_laplace(spec):
    """2 int_0^inf x ln x/(e^{2 pi x} - 1) dx; x = e^-u on [0, 1]."""

    def lower(u):
        u = np.asarray(u, dtype=float)
        x = np.exp(-u)
        return -u * x * x / np.expm1(2 * np.pi * x)

    def upper(x):
        x = np.asarray(x, dtype=float)
        return x * np.log(x) / np.expm1(2 * np.pi * x)

    return combine([integrate_semi_inf(lower, 0.0, spec), integrate_semi_inf(upper, 1.0, spec)],
                   [2.0, 2.0])


def _kinkelin_series(tol=1e-17):
    terms = []
    n = 1
    while True:
        n += 1
        d = _zeta_minus_one(n) / ((n + 1) * (n + 2))
        terms.append((-1) ** n * d)
        if d < tol:
            break
    return Eval(-EULER_GAMMA / 12 + math.log(2.0) - 5.0 / 6 + 0.5 * math.fsum(terms),
                1e-16 * n, n)


def _p1_bracket(x):
    x = np.asarray(x, dtype=float)
    return 2.0 - (2.0 * x + 1.0) * np.log1p(1.0 / x)


def kinkelin(method: str = "series_a5", spec: QuadSpec = DEFAULT, *,
             variant: str = "corrected") -> Eval:
    """Kinkelin's constant k = zeta'(-1) by one of four routes.

    ``gamma_moment_a2`` is 1/12 - ln(2 pi)/4 + int_0^1 x ln Gamma(x) dx;
    ``variant="printed"`` puts int_0^1 x Gamma(x) dx in place of the
    log-Gamma moment, which does not reproduce k.
    """
    if method == "laplace_a1":
        return _kinkelin_laplace(spec)
    if method == "gamma_moment_a2":
        if variant == "corrected":
            from .constants import loggamma_moment_quadrature
            m = loggamma_moment_quadrature(1, 1.0, spec)
        elif variant == "printed":
            m = gamma_moment_x("taylor_a3", spec=spec)
        else:
            raise DomainError(f"unknown variant {variant!r}")
        return m.shifted(1.0 / 12 - 0.25 * LOG_2PI)
    if method == "series_a5":
        return _kinkelin_series()
    if method == "p1_a8":
        lead = math.log(2.0) / 6 - 5.0 / 18
        r = integrate_p1(_p1_bracket, 1.0, spec)
        out = r.shifted(lead, scale=-0.5)
        out.info["p1_share"] = abs(0.5 * r.value / out.value)
        return out
    raise DomainError(f"unknown method {method!r}; choose from {KINKELIN_METHODS}")


def p1_a8_integrand(x):
    """The full P1-weighted integrand of the p1_a8 route, for plotting/tests."""
    return -0.5 * _p1_bracket(x) * p1(x)


# ------------------------------------------- reordering identity and limit

def reorder_bracket(j: int) -> float:
    """j(j+1) ln((j+1)/j) - (6j^2+3j-1)/(6j), summed over j >= 2 to the alternating zeta series.

    Equal to sum_{p>=3} (-1)^(p+1) j^(1-p)/(p(p+1)) ~ 1/(12 j^2); the
    expansion is used for large j where the direct form cancels.
    """
    if j < 2:
        raise DomainError("j must be at least 2")
    if j < 64:
        return j * (j + 1) * math.log1p(1.0 / j) - (6.0 * j * j + 3.0 * j - 1.0) / (6.0 * j)
    return math.fsum((-1) ** (p + 1) / (p * (p + 1)) * float(j) ** (1 - p) for p in range(3, 12))


def reorder_bracket_printed(j: int) -> float:
    """The bracket with both terms added."""
    return (6.0 * j * j + 3.0 * j - 1.0) / (6.0 * j) + j * (j + 1) * math.log1p(1.0 / j)


def reorder_closed(lnA: float | None = None) -> float:
    if lnA is None:
        lnA = glaisher_limit_exact()
    return 11.0 / 6 + EULER_GAMMA / 6 - 2 * lnA - 2 * math.log(2.0)


def reorder_sum(N: int = 10_000, printed: bool = False) -> Eval:
    """sum_{j>=2} of the reordering bracket: direct to N plus an asymptotic tail.

    The printed bracket grows like 2j and has no tail model; its partial sum
    to N is returned with an infinite error estimate.
    """
    if printed:
        return Eval(math.fsum(reorder_bracket_printed(j) for j in range(2, N + 1)), math.inf, N - 1)
    from .zetafun import hurwitz
    head = math.fsum(reorder_bracket(j) for j in range(2, N + 1))
    tail = math.fsum((-1) ** (p + 1) / (p * (p + 1)) * hurwitz(float(p - 1), N + 1.0).value
                     for p in range(3, 10))
    return Eval(head + tail, 1e-16 * N + (N + 1.0) ** -8, N - 1)


def glaisher_limit(N: int) -> Eval:
    """sum_{k<=N} k ln k - (N^2/2 + N/2 + 1/12) ln N + N^2/4, which tends to ln A."""
    if N < 2:
        raise DomainError("N must be at least 2")
    s = math.fsum(k * math.log(k) for k in range(2, N + 1))
    v = s - (N * N / 2 + N / 2 + 1.0 / 12) * math.log(N) + N * N / 4
    # next asymptotic term is 1/(720 N^2); rounding is set by the (N^2/2) ln N cancellation
    return Eval(v, 1.0 / (720.0 * N * N) + 1e-15 * N * N * math.log(N), N)


def glaisher_limit_exact() -> float:
    """ln A from zeta'(-1) = 1/12 - ln A, using the fast series route."""
    return 1.0 / 12 - _kinkelin_series().value
