"""The functions A_k(q) = k d/dz zeta(z, q) at z = 1 - k, expressed through
Stieltjes constants and P1 integrals, with the identities linking them to
Bernoulli polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import accel
from .quad import DEFAULT, QuadSpec, integrate_finite, integrate_p1, integrate_semi_inf
from .result import DomainError, Eval, PoleError, combine
from .zetafun import EULER_GAMMA, LOG_2PI, bernoulli_number, bernoulli_poly, stieltjes_batch, zeta_prime_neg

AK_METHODS = ("stieltjes_b2", "integral_b19", "shift_b8", "boundary_b3")
SERIES_DEPTH = 18
MAX_DEPTH = 20


@dataclass(frozen=True)
class AkArgs:
    k: int
    q: float
    series_depth: int = SERIES_DEPTH

    def __post_init__(self):
        if int(self.k) != self.k:
            raise DomainError("k must be an integer")
        if not (0.0 <= self.q <= 1.0):
            raise DomainError(f"q must lie in [0, 1], got {self.q!r}")
        if not (0 <= self.series_depth <= MAX_DEPTH - 1):
            raise DomainError(f"series_depth must lie in [0, {MAX_DEPTH - 1}]")


@lru_cache(maxsize=512)
def _gammas(a: float, nmax: int) -> tuple:
    """gamma_0..gamma_nmax at shift a, computed once per (a, nmax)."""
    return tuple(stieltjes_batch(nmax, a))


_RESUM_LIMIT = 1e-10


def _stieltjes_series(k, a, depth):
    """-1/k - k sum_{n<=depth} gamma_{n+1}(a) k^n/n!.

    For a < 1, gamma_n(a) = ln^n(a)/a + gamma_n(a+1); when the literal
    series is still far from converged at ``depth`` the ln^n(a)/a parts are
    summed in closed form (to k a^(k-1) ln a) and only the gamma_n(a+1)
    parts are truncated.  Subtracting the logarithms from gamma_n(a) instead
    would cancel catastrophically for small a.
    """
    g = _gammas(float(a), depth + 1)
    fact = [float(k) ** n / math.factorial(n) for n in range(depth + 1)]
    terms = [g[n + 1].value * fact[n] for n in range(depth + 1)]
    resum = a < 1 and abs(k * terms[-1]) > _RESUM_LIMIT
    lead = 0.0
    if resum:
        g = _gammas(float(a) + 1.0, depth + 1)
        terms = [g[n + 1].value * fact[n] for n in range(depth + 1)]
        lead = k * a ** (k - 1) * math.log(a)
    err = abs(k) * (abs(terms[-1]) + sum(g[n + 1].err_est * fact[n] for n in range(depth + 1)))
    return Eval(-1.0 / k - k * math.fsum(terms) - lead, err, depth + 1, {"resummed": resum})


def _shift_term(k, q):
    """k q^(k-1) ln q, the step from A_k(q) to A_k(q+1); 0 at q = 0 for k >= 2."""
    if q == 0:
        if k >= 2:
            return 0.0
        raise PoleError(f"A_{k}(q) is singular at q = 0")
    return k * q ** (k - 1) * math.log(q)


def _integral_route(k, q, spec):
    lq = math.log(q)
    i1 = integrate_p1(lambda x: (x + q) ** (k - 2.0), 0.0, spec)
    terms = [i1]
    coeffs = [-1.0]
    if k != 1:
        i2 = integrate_p1(lambda x: (x + q) ** (k - 2.0) * np.log(x + q), 0.0, spec)
        terms.append(i2)
        coeffs.append(1.0 - k)
    const = -lq / (2 * q ** (1 - k)) - q ** k / k ** 2 + q ** k * lq / k
    return combine(terms, [k * c for c in coeffs], const=k * const)


def a_k(k: int, q: float, method: str = "stieltjes_b2", *, series_depth: int = SERIES_DEPTH,
        spec: QuadSpec = DEFAULT) -> Eval:
    """A_k(q) for 0 <= q <= 1.

    ``stieltjes_b2``: the gamma_n(q) series (k = 1..4), truncated at
    ``series_depth`` with the last term as error; q = 0 goes through the
    shift to q = 1.  ``integral_b19``: P1 integrals from 0, integer k < 2,
    k != 0.  ``shift_b8``: the series at q + 1 stepped back by
    k q^(k-1) ln q.  ``boundary_b3``: k zeta'(1 - k) at q in {0, 1}, k >= 2.
    """
    args = AkArgs(k, q, series_depth)
    k, q = int(args.k), float(args.q)
    if method == "stieltjes_b2":
        if not 1 <= k <= 4:
            raise DomainError("stieltjes_b2 needs k in 1..4")
        if q == 0:
            return a_k(k, q, "shift_b8", series_depth=series_depth, spec=spec)
        return _stieltjes_series(k, q, series_depth)
    if method == "shift_b8":
        if not 1 <= k <= 4:
            raise DomainError("shift_b8 needs k in 1..4")
        step = _shift_term(k, q)
        return _stieltjes_series(k, q + 1.0, series_depth).shifted(-step)
    if method == "integral_b19":
        if k >= 2 or k == 0:
            raise DomainError("integral_b19 needs an integer k < 2, k != 0")
        if q == 0:
            raise PoleError(f"A_{k}(q) is singular at q = 0")
        return _integral_route(k, q, spec)
    if method == "boundary_b3":
        if k < 2 or q not in (0.0, 1.0):
            raise DomainError("boundary_b3 needs k >= 2 and q in {0, 1}")
        return zeta_prime_neg(k, spec).shifted(scale=float(k))
    raise DomainError(f"unknown method {method!r}; choose from {AK_METHODS}")


def a_k_any(k: int, x: float, **kw) -> Eval:
    """A_k at x > 0, reduced into (0, 1] with A_k(x+1) = A_k(x) + k x^(k-1) ln x."""
    if not x > 0:
        raise DomainError("argument must be positive")
    steps = 0.0
    while x > 1.0:
        x -= 1.0
        steps += _shift_term(k, x)
    return a_k(k, x, **kw).shifted(steps)


def a_k_half(k: int, spec: QuadSpec = DEFAULT) -> Eval:
    """Closed value (-1)^(k-1) B_k 2^(1-k) ln 2 - (1 - 2^(1-k)) k zeta'(1-k), k >= 2."""
    zp = zeta_prime_neg(k, spec)
    lead = (-1) ** (k - 1) * float(bernoulli_number(k)) * 2.0 ** (1 - k) * math.log(2.0)
    return zp.shifted(lead, scale=-(1 - 2.0 ** (1 - k)) * k)


def stieltjes_shift_identity(n: int, q: float) -> tuple[Eval, Eval]:
    """(gamma_n(q+1), gamma_n(q) - ln^n(q)/q) for q in (0, 1]."""
    lo = _gammas(float(q), max(n, 1))[n]
    hi = _gammas(float(q) + 1.0, max(n, 1))[n]
    return hi, lo.shifted(-math.log(q) ** n / q)


def a_k_shift_check(k: int, q: float, series_depth: int = SERIES_DEPTH) -> tuple[Eval, Eval]:
    """(A_k(q+1), A_k(q) + k q^(k-1) ln q), each side from its own Stieltjes series."""
    AkArgs(k, q, series_depth)
    if not 1 <= k <= 4 or q == 0:
        raise DomainError("need k in 1..4 and q in (0, 1]")
    hi = _stieltjes_series(k, float(q) + 1.0, series_depth)
    lo = _stieltjes_series(k, float(q), series_depth)
    return hi, lo.shifted(_shift_term(k, q))


# ----------------------------------------------------- Bernoulli bridge

def bernoulli_stieltjes_check(k: int, q: float, series_depth: int = SERIES_DEPTH) -> tuple[Eval, Eval]:
    """(B_k(q) exactly, 1 - k sum gamma_n(q) k^n/n!) for k <= 4.

    At q = 0 the sum is taken at q = 1 and stepped back with
    B_k(x+1) - B_k(x) = k x^(k-1).
    """
    if not 1 <= k <= 4:
        raise DomainError("k must lie in 1..4")
    AkArgs(k, q, series_depth)
    exact = Eval(bernoulli_poly(k, q))
    a = 1.0 if q == 0 else float(q)
    g = _gammas(a, series_depth)
    terms = [g[n].value * float(k) ** n / math.factorial(n) for n in range(series_depth + 1)]
    err = k * (abs(terms[-1]) + sum(g[n].err_est * k ** n / math.factorial(n) for n in range(series_depth + 1)))
    value = 1.0 - k * math.fsum(terms)
    if q == 0:
        value -= 1.0 if k == 1 else 0.0
    return exact, Eval(value, err, series_depth + 1)


def stieltjes_factorial_sum(depth: int = MAX_DEPTH) -> Eval:
    """sum_{n>=1} gamma_n/n!, which equals 1/2 - gamma."""
    g = _gammas(1.0, depth)
    terms = [g[n].value / math.factorial(n) for n in range(1, depth + 1)]
    return Eval(math.fsum(terms), abs(terms[-1]) + sum(g[n].err_est / math.factorial(n)
                                                        for n in range(1, depth + 1)), depth)


# -------------------------------------------------- summation relations

def _prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def ak_sum_relation_pq(k: int, p: int, q: int, b: float = 0.0) -> tuple[Eval, Eval]:
    """Both sides of
    sum_r A_k(pr/q - b) = -ln(q/p) sum_r B_k(pr/q - b) + (q/p)^(1-k) sum_l A_k(1 + (l-b)q/p),
    r = 1..q, l = 0..p-1."""
    if p < 1 or q < 1 or int(p) != p or int(q) != q:
        raise DomainError("p and q must be positive integers")
    if not (b >= 0 and min(p / q, q / p) > b):
        raise DomainError("need b >= 0 and min(p/q, q/p) > b")
    if not 1 <= k <= 4:
        raise DomainError("k must lie in 1..4")
    method = "stieltjes_b2"
    xs = [p * r / q - b for r in range(1, q + 1)]
    ys = [1.0 + (l - b) * q / p for l in range(p)]
    lhs = combine([a_k_any(k, x, method=method) for x in xs])
    bern = math.fsum(bernoulli_poly(k, x) for x in xs)
    right = combine([a_k_any(k, y, method=method) for y in ys])
    rhs = right.shifted(-math.log(q / p) * bern, scale=(q / p) ** (1 - k))
    return lhs, rhs


def ak_prime_relation(k: int, p: int, N: int = 0) -> tuple[Eval, Eval]:
    """Both sides of
    (1 - p^(k-1)) A_k(1) - (-1)^k p^(k-1) ln p B_k
      = (-1)^k (N+1) ln p (1 - p^(k-1)) B_k + p^((N+1)(k-1)) sum_{j<p^(N+1), p|j no} A_k(j/p^(N+1))."""
    if not (_prime(p) and p <= 5):
        raise DomainError("p must be a prime <= 5")
    if not (0 <= N <= 2 and k in (2, 3)):
        raise DomainError("need 0 <= N <= 2 and k in {2, 3}")
    Bk = float(bernoulli_number(k))
    lp = math.log(p)
    pk = p ** (k - 1)
    a1 = a_k(k, 1.0, "boundary_b3")
    lhs = a1.shifted(-(-1) ** k * pk * lp * Bk, scale=1 - pk)
    M = p ** (N + 1)
    parts = [a_k(k, j / M) for j in range(1, M) if j % p]
    rhs = combine(parts).shifted((-1) ** k * (N + 1) * lp * (1 - pk) * Bk, scale=float(p ** ((N + 1) * (k - 1))))
    return lhs, rhs


# ---------------------------------------------------- further identities

def a2_fourier(q: float, terms: int = 1_000_000) -> Eval:
    """A_2(q) from its Fourier form
    (1 - gamma - ln 2 pi)(q^2 - q + 1/6) - pi^-2 sum ln n cos(2 pi n q)/n^2
      + (2 pi)^-1 sum sin(2 pi n q)/n^2,
    each trig series summed to ``terms`` with a tail bound."""
    if not 0 < q < 1:
        raise DomainError("q must lie in (0, 1)")
    th = 2 * math.pi * q
    c = accel.trig_log_sum(th, 2.0, 1, False, 1, terms + 1)
    s = accel.trig_log_sum(th, 2.0, 0, True, 1, terms + 1)
    # summation by parts: the tail of sum f(n) e^{i n th} is below 2 f(N)/|2 sin(th/2)|
    gap = abs(math.sin(th / 2))
    err = (math.log(terms) / math.pi ** 2 + 1 / (2 * math.pi)) / (terms ** 2 * gap)
    value = (1 - EULER_GAMMA - LOG_2PI) * (q * q - q + 1 / 6) - c / math.pi ** 2 + s / (2 * math.pi)
    return Eval(value, err + 1e-15, 2 * terms)


def _binet_small(t):
    # 1/2 - 1/t + 1/(e^t - 1), divided by t, for small t
    t2 = t * t
    return 1 / 12 - t2 / 720 + t2 * t2 / 30240 - t2 * t2 * t2 / 1209600


def binet_forms(s: float, spec: QuadSpec = DEFAULT) -> dict:
    """Three representations of the Binet remainder ln Gamma(s) - (s - 1/2) ln s + s - ln sqrt(2 pi).

    ``p1``: -int_0^inf P1(x)/(x+s); ``laplace``: the (1/2 - 1/t + 1/(e^t-1)) e^{-ts}/t
    integral; ``arctan``: 2 int_0^inf arctan(t/s)/(e^{2 pi t} - 1).
    """
    if not s > 0:
        raise DomainError("s must be positive")

    def laplace(t):
        t = np.asarray(t, dtype=float)
        small = t < 1e-2
        ts = np.where(small, 1.0, t)
        big = (0.5 - 1 / ts + 1 / np.expm1(ts)) / ts
        return np.where(small, _binet_small(t), big) * np.exp(-t * s)

    def arctan(t):
        t = np.asarray(t, dtype=float)
        tz = np.where(t == 0, 1.0, t)
        return np.where(t == 0, 1 / (2 * np.pi * s), 2 * np.arctan(t / s) / np.expm1(2 * np.pi * tz))

    return {
        "p1": integrate_p1(lambda x: 1.0 / (x + s), 0.0, spec).shifted(scale=-1.0),
        "laplace": integrate_semi_inf(laplace, 0.0, spec),
        "arctan": integrate_semi_inf(arctan, 0.0, spec),
    }


def binet_unit_interval(s: float, spec: QuadSpec = DEFAULT) -> Eval:
    """-int_0^1 P1(x)/(x+s) dx, the P1 form cut at x = 1."""
    return integrate_finite(lambda x: -(x - 0.5) / (x + s), 0.0, 1.0, spec)


def loggamma_p1(s: float, spec: QuadSpec = DEFAULT) -> Eval:
    """ln Gamma(s+1) = (s + 1/2) ln s - s + ln sqrt(2 pi) - int_0^inf P1(x)/(x+s) dx."""
    if not s > 0:
        raise DomainError("s must be positive")
    r = integrate_p1(lambda x: 1.0 / (x + s), 0.0, spec)
    return r.shifted((s + 0.5) * math.log(s) - s + 0.5 * LOG_2PI, scale=-1.0)


def a_k_mean(k: int, panels: int = 24, nodes: int = 10) -> Eval:
    """int_0^1 A_k(q) dq with the stieltjes_b2 route, on dyadic panels toward q = 0.

    The innermost panel [0, 2^-panels] is bounded by its width times the
    size of A_k there (A_1 grows like -ln q).
    """
    x, w = np.polynomial.legendre.leggauss(nodes)
    total = []
    err = 0.0
    for j in range(panels):
        hi, lo = 2.0 ** -j, 2.0 ** -(j + 1)
        mid, half = (hi + lo) / 2, (hi - lo) / 2
        for xi, wi in zip(x, w):
            r = a_k(k, mid + half * xi)
            total.append(half * wi * r.value)
            err += half * wi * r.err_est
    edge = 2.0 ** -panels
    bound = edge * (abs(math.log(edge)) + 2)
    return Eval(math.fsum(total), err + bound, len(total))


def a_k_derivative_check(k: int, q: float, h: float = 1e-3) -> tuple[Eval, Eval]:
    """(central difference of A_{k+1} at q, (k+1)[A_k(q) + B_k(q)/k])."""
    up, dn = a_k(k + 1, q + h), a_k(k + 1, q - h)
    fd = Eval((up.value - dn.value) / (2 * h), (up.err_est + dn.err_est) / (2 * h) + h * h, up.work + dn.work)
    ak = a_k(k, q)
    return fd, ak.shifted((k + 1) * bernoulli_poly(k, q) / k, scale=float(k + 1))
