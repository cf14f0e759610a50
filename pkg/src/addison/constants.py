"""Somos constants, Euler sums, the hyperfactorial, log-Gamma moments and the
registry of named constants with their evaluation routes."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import accel
from .lerch import lerch_phi_sderiv, lerch_series_oracle
from .quad import DEFAULT, QuadSpec, integrate_finite, integrate_p1, integrate_semi_inf
from .result import DomainError, Eval, PrecisionError, combine
from .zetafun import (EULER_GAMMA, LOG_2PI, hurwitz, psi_fast, trigamma_fast,
                      zeta_nderiv, zeta_prime_neg)

SOMOS_METHODS = ("p1_integral", "exp_integral", "polylog_series")


@dataclass(frozen=True)
class SomosArgs:
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.t) and self.t > 1):
            raise DomainError(f"Somos constants need t > 1, got {self.t!r}")


# ------------------------------------------------------- E1 / Gamma(0, x)

def expint_e1(x: float) -> Eval:
    """E1(x) = Gamma(0, x) = -Ei(-x) for x > 0.

    Power series for x <= 4, continued fraction (modified Lentz) beyond.
    """
    if not (x > 0):
        raise DomainError("E1 needs x > 0")
    if x <= 4.0:
        terms = []
        term = 1.0
        k = 0
        while True:
            k += 1
            term *= -x / k
            terms.append(-term / k)
            if abs(term / k) < 1e-18 and k > x:
                break
        lead = -EULER_GAMMA - math.log(x)
        value = lead + math.fsum(terms)
        return Eval(value, 1e-16 * (1.0 + math.exp(x)) + 2.3e-16 * (abs(lead) + abs(value)), k)
    b = x + 1.0
    c = 1e300
    d = 1.0 / b
    h = d
    for i in range(1, 500):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    value = h * math.exp(-x)
    return Eval(value, 2e-15 * value, i)


# ----------------------------------------------------------- Somos

def _phi_tail_k(t, k):
    """Li_k(1/t) - 1/t = t^-2 Phi(1/t, k, 2) by the direct series."""
    return lerch_series_oracle(1.0 / t, float(k), 2.0).value / (t * t)


def _somos_series(t, tol=1e-17):
    # (1/(t-1)) sum (-1)^(k-1)/k Li_k(1/t); the 1/t part of each Li_k sums to ln2/t
    terms = [math.log(t / (t - 1.0)) - 1.0 / t]
    k = 1
    while True:
        k += 1
        d = _phi_tail_k(t, k)
        terms.append((-1) ** (k - 1) * d / k)
        if abs(d) / k < tol:
            break
    s = math.fsum(terms) + math.log(2.0) / t
    return Eval(s / (t - 1.0), 1e-16 * k / (t - 1.0) + abs(d) / (t - 1.0), k)


def somos_series_second(t: float, tol: float = 1e-17) -> Eval:
    """(1/(t-1)) sum_k (1/k)[t Li_k(1/t) - 1]; t Li_k(1/t) - 1 = t^-1 Phi(1/t, k, 2)."""
    SomosArgs(t)
    terms = [t * math.log(t / (t - 1.0)) - 1.0]
    k = 1
    while True:
        k += 1
        d = t * _phi_tail_k(t, k)
        terms.append(d / k)
        if d / k < tol:
            break
    # remainder of a geometrically decaying positive series (ratio <= 1/2)
    return Eval(math.fsum(terms) / (t - 1.0), (d / k + 1e-16 * k) / (t - 1.0), k)


def somos_ln(t: float, method: str = "polylog_series", spec: QuadSpec = DEFAULT) -> Eval:
    """ln sigma_t = sum_n ln(n)/t^n by one of three routes."""
    SomosArgs(t)
    lt = math.log(t)
    if method == "p1_integral":
        # int_1^inf t^-x ln x dx = E1(ln t)/ln t
        lead = expint_e1(lt)

        def f(x):
            return np.exp(-lt * x) * (1.0 / x - lt * np.log(x))

        r = integrate_p1(f, 1.0, spec)
        return combine([lead, r], [1.0 / lt, 1.0])
    if method == "exp_integral":
        c = 1.0 / (t - 1.0)

        def f(x):
            # e^-x/(t-1) + 1/(1 - t e^x) = (1 - e^-x) e^-x / ((t-1)(t - e^-x))
            x = np.asarray(x, dtype=float)
            em = np.exp(-x)
            ratio = np.where(x > 0, -np.expm1(-x) / np.where(x > 0, x, 1.0), 1.0)
            return c * ratio * em / (t - em)

        return integrate_semi_inf(f, 0.0, spec)
    if method == "polylog_series":
        return _somos_series(t)
    raise DomainError(f"unknown Somos method {method!r}")


def somos_recurrence(n: int, t: float = 2.0, spec: QuadSpec = DEFAULT) -> Eval:
    """ln g_n for g_n = n g_{n-1}^t, g_0 = 1:
    t^n ln sigma_t + (1/t) dPhi/ds(1/t, 0, n+1)."""
    SomosArgs(t)
    if int(n) != n or n < 0:
        raise DomainError("n must be a non-negative integer")
    n = int(n)
    if n == 0:
        return Eval(0.0)
    try:
        scale = t ** n
    except OverflowError:
        scale = math.inf
    if not math.isfinite(scale) or scale > 1e300:
        raise PrecisionError(f"t^n overflows for t={t}, n={n}; ln g_n is not representable")
    sigma = somos_ln(t, "polylog_series", spec)
    dphi = lerch_phi_sderiv(1.0 / t, 0.0, float(n + 1), spec)
    return combine([sigma, dphi], [scale, 1.0 / t])


def somos_exact(n: int, t: int = 2) -> float:
    """ln g_n from the recurrence itself, summed as sum_i t^(n-i) ln i."""
    if int(n) != n or n < 0:
        raise DomainError("n must be a non-negative integer")
    return math.fsum(t ** (n - i) * math.log(i) for i in range(1, int(n) + 1))


def somos_gamma_limit(z: float, spec: QuadSpec = DEFAULT) -> Eval:
    """ln z + z ln sigma_(1+z), which tends to -gamma as z -> 0+."""
    if not (0 < z <= 0.1):
        raise DomainError("z must lie in (0, 0.1]")
    r = somos_ln(1.0 + z, "polylog_series", spec)
    return r.shifted(math.log(z), scale=z)


@lru_cache(maxsize=None)
def _zeta_minus_one(k: int) -> float:
    """zeta(k) - 1 = zeta(k, 2), accurate in absolute terms for large k."""
    return hurwitz(float(k), 2.0).value


def gamma_zeta_series(kind: str = "alternating", tol: float = 1e-17) -> Eval:
    """Series for -gamma.

    ``alternating``: sum_{k>=2} (-1)^(k-1) zeta(k)/k, summed as
    (ln 2 - 1) + sum (-1)^(k-1) (zeta(k)-1)/k;
    ``shifted``: -1 + sum_{k>=2} (zeta(k) - 1)/k.
    """
    terms = []
    k = 1
    while True:
        k += 1
        d = _zeta_minus_one(k)
        terms.append(((-1) ** (k - 1) if kind == "alternating" else 1.0) * d / k)
        if d / k < tol:
            break
    if kind == "alternating":
        return Eval(math.log(2.0) - 1.0 + math.fsum(terms), 1e-16 * k, k)
    if kind == "shifted":
        return Eval(-1.0 + math.fsum(terms), 2e-16 * k + d / k, k)
    raise DomainError(f"unknown kind {kind!r}")


# ----------------------------------------------------------- Euler sums

def _check_euler(s, a):
    if not (s > 1):
        raise DomainError("Euler sum needs s > 1")
    if a <= -1 and float(a).is_integer():
        raise DomainError("a must not be a negative integer")
    if not (a > -1):
        raise DomainError("a must exceed -1 for the integral representation")


def euler_sum_H(s: float, a: float, spec: QuadSpec = DEFAULT) -> Eval:
    """H(s, a) = sum_{n>=1} H_n/(n+a)^s from one plain and one P1 integral."""
    _check_euler(s, a)

    def plain(x):
        return (psi_fast(x + 1.0) + EULER_GAMMA) / (x + a) ** s

    def weighted(x):
        y = x + a
        return trigamma_fast(x + 1.0) / y ** s - s * (psi_fast(x + 1.0) + EULER_GAMMA) / y ** (s + 1.0)

    i1 = integrate_semi_inf(plain, 1.0, spec)
    i2 = integrate_p1(weighted, 1.0, spec)
    return combine([i1, i2], const=0.5 / (a + 1.0) ** s)


def euler_sum_direct(s: float, a: float, N: int = 1_000_000, spec: QuadSpec = DEFAULT) -> Eval:
    """Direct partial sum to N with an Euler-Maclaurin remainder."""
    _check_euler(s, a)
    head, _ = accel.harmonic_dirichlet(s, a, 1, N + 1, 0.0)

    def F(x):
        return (psi_fast(x + 1.0) + EULER_GAMMA) / (x + a) ** s

    # sum_{n>N} F(n) = int_N^inf F - F(N)/2 - F'(N)/12 + ...
    integral = integrate_semi_inf(F, float(N), spec)
    h = 1e-2 * N
    dF = float((F(N + h) - F(N - h)) / (2 * h))
    tail = integral.value - 0.5 * float(F(float(N))) - dF / 12.0
    err = integral.err_est + abs(dF) / N ** 2 + 1e-16 * N
    return Eval(head + tail, err, N)


# -------------------------------------------------- hyperfactorial, lnGamma

def _int_loggamma(x: float, spec: QuadSpec) -> Eval:
    """int_0^x ln Gamma(y) dy = int_0^x ln Gamma(y+1) dy - (x ln x - x)."""
    if x == 0:
        return Eval(0.0)
    r = integrate_finite(lambda y: np.vectorize(math.lgamma)(y + 1.0), 0.0, x, spec)
    return r.shifted(-(x * math.log(x) - x))


def hyperfactorial(x: float, spec: QuadSpec = DEFAULT) -> Eval:
    """ln K(x) = (x^2 - x)/2 - (x/2) ln 2 pi + int_0^x ln Gamma."""
    if not (x >= 0):
        raise DomainError("hyperfactorial needs x >= 0")
    r = _int_loggamma(x, spec)
    return r.shifted(0.5 * (x * x - x) - 0.5 * x * LOG_2PI)


def loggamma_moment_quadrature(n: int, upper: float, spec: QuadSpec = DEFAULT) -> Eval:
    """int_0^upper z^n ln Gamma(z) dz, with the -ln z singularity integrated exactly."""
    r = integrate_finite(lambda z: z ** n * np.vectorize(math.lgamma)(z + 1.0), 0.0, upper, spec)
    m = n + 1
    exact_log = upper ** m * (math.log(upper) / m - 1.0 / m ** 2)
    return r.shifted(-exact_log)


MOMENTS = {"a": (0, 0.5), "b": (1, 1.0), "c": (2, 1.0), "d": (1, 0.5), "e": (2, 0.5)}


def loggamma_moment(which: str, spec: QuadSpec = DEFAULT) -> tuple[Eval, Eval]:
    """(closed form, quadrature) for one of five z^n ln Gamma(z) integrals."""
    if which not in MOMENTS:
        raise DomainError(f"unknown moment {which!r}")
    lnA = glaisher_lnA()
    z3 = zeta_nderiv  # placeholder to keep imports explicit
    del z3
    zeta3 = hurwitz(3.0, 1.0, spec)
    L2, Lpi, pi2 = math.log(2.0), math.log(math.pi), math.pi ** 2
    if which == "a":
        closed = lnA.shifted(5.0 / 24.0 * L2 + 0.25 * Lpi, scale=1.5)
    elif which == "b":
        closed = lnA.shifted(0.25 * LOG_2PI, scale=-1.0)
    elif which == "c":
        closed = combine([lnA, zeta3], [-1.0, 1.0 / (4.0 * pi2)], const=LOG_2PI / 6.0)
    elif which == "d":
        closed = combine([lnA, zeta3], [24.0 / 96.0, -7.0 / (32.0 * pi2)],
                         const=(4.0 * L2 + 6.0 * Lpi) / 96.0)
    else:
        zp3 = zeta_prime_neg(4, spec)
        closed = combine([lnA, zeta3, zp3],
                         [720.0 / 5760.0, -540.0 / pi2 / 5760.0, -3600.0 / 5760.0],
                         const=(-55.0 + 62.0 * L2 + 120.0 * Lpi) / 5760.0)
    n, upper = MOMENTS[which]
    return closed, loggamma_moment_quadrature(n, upper, spec)


def glaisher_lnA(method: str = "zeta_nderiv", variant: str = "corrected",
                 spec: QuadSpec = DEFAULT) -> Eval:
    """ln A = -zeta'(2)/(2 pi^2) + [ln(2 pi) + gamma]/12.

    ``method`` picks the zeta'(2) route (``zeta_nderiv`` integral or the
    ``addison`` k = 2 series); ``variant="printed"`` uses pi^2 in place of 2 pi^2.
    """
    if method == "zeta_nderiv":
        zp = zeta_nderiv(1, 2.0, spec)
    elif method == "addison":
        from .refine import zeta_prime_addison
        zp = zeta_prime_addison(2.0, 2)
    else:
        raise DomainError(f"unknown method {method!r}")
    denom = {"corrected": 2.0 * math.pi ** 2, "printed": math.pi ** 2}.get(variant)
    if denom is None:
        raise DomainError(f"unknown variant {variant!r}")
    return zp.shifted((LOG_2PI + EULER_GAMMA) / 12.0, scale=-1.0 / denom)


# ------------------------------------------------------------- registry

@dataclass(frozen=True)
class ConstantRecord:
    name: str
    reference: float
    # "printed": a quoted decimal; "derived": exact or computed independently
    reference_kind: str
    methods: dict
    tolerance: float = 1e-8
    description: str = ""
    # methods return ln(constant) and ``reference`` is the constant itself
    log_valued: bool = False

    def __post_init__(self):
        if self.reference_kind not in ("printed", "derived"):
            raise DomainError("reference_kind must be 'printed' or 'derived'")
        for m, fn in self.methods.items():
            if not callable(fn):
                raise DomainError(f"method {m!r} of {self.name!r} is not callable")

    def evaluate(self, method: str, spec: QuadSpec = DEFAULT) -> Eval:
        try:
            fn = self.methods[method]
        except KeyError:
            raise DomainError(f"{self.name} has no method {method!r}; "
                              f"choose from {', '.join(self.methods)}") from None
        return fn(spec)

    def reference_residual(self, value: float) -> float:
        """|value - reference| on the scale the reference is quoted in."""
        return abs((math.exp(value) if self.log_valued else value) - self.reference)

    def as_json(self) -> dict:
        return {"name": self.name, "reference": self.reference,
                "reference_kind": self.reference_kind, "methods": list(self.methods)}


def _registry():
    from . import clausen, kinkelin, refine
    from .zetafun import stieltjes
    # every method takes the quadrature spec; series routes ignore it
    recs = [
        ConstantRecord("catalan", 0.91596559, "printed", {
            "clausen": lambda spec: clausen.clausen(2, math.pi / 2, spec),
            "ci_integral": clausen.catalan,
            "hurwitz_combo": lambda spec: clausen.dirichlet_L4(2.0, spec=spec),
            "addison": lambda spec: refine.L4_addison(2.0),
        }, 5e-8, "Catalan's constant G = L(2) for the mod-4 character"),
        ConstantRecord("somos2", 1.66169, "printed", {
            m: (lambda spec, m=m: somos_ln(2.0, m, spec)) for m in SOMOS_METHODS
        }, 1e-5, "ln of Somos' quadratic recurrence constant sigma_2", log_valued=True),
        ConstantRecord("kinkelin", -0.165421, "printed", {
            m: (lambda spec, m=m: kinkelin.kinkelin(m, spec)) for m in kinkelin.KINKELIN_METHODS
        }, 5e-7, "Kinkelin's constant zeta'(-1)"),
        ConstantRecord("gamma_moment_x", 0.92746, "printed", {
            m: (lambda spec, m=m: kinkelin.gamma_moment_x(m, spec=spec)) for m in kinkelin.MOMENT_X_METHODS
        }, 1e-5, "int_0^1 x Gamma(x) dx"),
        ConstantRecord("gamma_moment_sin", 0.872427, "printed", {
            m: (lambda spec, m=m: kinkelin.gamma_moment_sin(1.0, m, spec=spec))
            for m in kinkelin.MOMENT_SIN_METHODS
        }, 1e-5, "int_0^1 sin(x) Gamma(x) dx"),
        ConstantRecord("euler_gamma", EULER_GAMMA, "derived", {
            "addison": lambda spec: refine.gamma_addison(),
            "addison_second": lambda spec: refine.gamma_addison(2),
            "vacca": lambda spec: refine.gamma_vacca(),
            "harmonic": lambda spec: refine.gamma_harmonic_oracle(),
        }, 1e-8, "Euler's constant"),
        ConstantRecord("glaisher_lnA", 0.24875447703378426, "derived", {
            "zeta_nderiv": lambda spec: glaisher_lnA(spec=spec),
            "addison": lambda spec: glaisher_lnA("addison", spec=spec),
            "kinkelin": lambda spec: kinkelin.kinkelin("laplace_a1", spec).shifted(1.0 / 12.0, scale=-1.0),
        }, 1e-8, "logarithm of the Glaisher-Kinkelin constant"),
        ConstantRecord("zeta_prime_2", -0.93754825431584375, "derived", {
            "integral": lambda spec: zeta_nderiv(1, 2.0, spec),
            "addison_k2": lambda spec: refine.zeta_prime_addison(2.0, 2),
            "addison_k3": lambda spec: refine.zeta_prime_addison(2.0, 3),
            "addison_k4": lambda spec: refine.zeta_prime_addison(2.0, 4),
        }, 1e-6, "zeta'(2)"),
        ConstantRecord("L4_1", math.pi / 4, "printed", {
            "hurwitz_combo": lambda spec: clausen.dirichlet_L4(1.0, spec=spec),
            "addison": lambda spec: refine.L4_addison(1.0),
        }, 1e-7, "L(1) = pi/4 for the mod-4 character"),
        ConstantRecord("L4_3", math.pi ** 3 / 32, "printed", {
            "hurwitz_combo": lambda spec: clausen.dirichlet_L4(3.0, spec=spec),
            "addison": lambda spec: refine.L4_addison(3.0),
        }, 1e-7, "L(3) = pi^3/32 for the mod-4 character"),
        ConstantRecord("L4_prime_1", 0.19290131679691203, "derived", {
            "stieltjes": lambda spec: clausen.L4_prime1("stieltjes", spec),
            "closed_form": lambda spec: clausen.L4_prime1("closed_form", spec),
        }, 1e-5, "L'(1) for the mod-4 character"),
        ConstantRecord("log_sqrt_2pi", 0.5 * LOG_2PI, "derived", {
            "addison": lambda spec: refine.log_sqrt_2pi_addison(),
            "quadrature": lambda spec: _int_loggamma(1.0, spec),
        }, 1e-6, "ln sqrt(2 pi) = int_0^1 ln Gamma"),
        ConstantRecord("stieltjes_1", -0.0728158454836767249, "derived", {
            "integral": lambda spec: stieltjes(1, 1.0, spec),
            "addison": lambda spec: refine.stieltjes1_addison(1.0),
        }, 1e-6, "first Stieltjes constant gamma_1"),
    ]
    return {r.name: r for r in recs}


@lru_cache(maxsize=1)
def registry() -> dict:
    """Name -> ConstantRecord (built once, immutable afterwards)."""
    return _registry()


def registry_json() -> str:
    return json.dumps([r.as_json() for r in registry().values()], indent=2)
