"""k-refinement (Addison-type) double series.

A level-n term has the shape  w^n * sum_j bracket(b, j)  with b = k^-n, where
the bracket is a fixed stencil  sum_m c_m f(b (j + theta_m) + shift)  of one
analytic family f.  The stencil weights sum to zero, so the inner sum past j = J
is given by the generalised Euler-Maclaurin expansion

    sum_{j>=J} sum_m c_m f(b(j+theta_m)+shift)
        = -sum_{r>=1} b^(r-1)/r! f^(r-1)(X) sum_m c_m B_r(theta_m),   X = bJ + shift,

with the derivatives of f taken analytically.  Levels are accumulated in
ascending order and the outer tail is closed geometrically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import accel
from .result import DomainError, Eval, TruncationError
from .zetafun import EULER_GAMMA, bernoulli_number

_EM_ORDER = 24
ADOPTED = "corrected"


@dataclass(frozen=True)
class RefineParams:
    k: int = 2
    n_max: int = 80
    j_max: int = 256
    tol: float = 1e-10

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 2:
            raise DomainError("k must be an integer >= 2")
        if int(self.n_max) != self.n_max or self.n_max < 1:
            raise DomainError("n_max must be a positive integer")
        if int(self.j_max) != self.j_max or self.j_max < 8:
            raise DomainError("j_max must be an integer >= 8")
        if not (self.tol > 0):
            raise DomainError("tol must be positive")

    def replace(self, **kw) -> "RefineParams":
        return RefineParams(**{**self.__dict__, **kw})


@dataclass(frozen=True)
class AddisonTerm:
    """One bracket value at scale b and inner index j."""

    b: float
    j: int
    value: float

    def __post_init__(self):
        if not self.b > 0 or self.j < 0:
            raise DomainError("AddisonTerm needs b > 0 and j >= 0")


# ---------------------------------------------------------------- levels

def _run_levels(level, ratio, params: RefineParams, what: str) -> Eval:
    """Accumulate ``ratio**n * level(n)`` for n = 0, 1, ... with a geometric tail.

    ``level(n)`` returns (inner sum, inner error, work).  The error estimate is
    the change of the tail-corrected value between the last two levels plus
    the accumulated inner errors.
    """
    total = 0.0
    comp = 0.0
    inner_err = 0.0
    work = 0
    sums = []
    prev_value = None
    err = math.inf
    for n in range(params.n_max + 1):
        s, e, w = level(n)
        weight = float(ratio) ** n
        term = weight * s
        sums.append(term)
        # Neumaier accumulation keeps the level order fixed and the sum exact
        t = total + term
        comp += (total - t) + term if abs(total) >= abs(term) else (term - t) + total
        total = t
        inner_err += weight * e
        work += w
        tail = 0.0
        if n >= 1 and sums[-2] != 0:
            rho = sums[-1] / sums[-2]
            if abs(rho) < 1:
                tail = sums[-1] * rho / (1.0 - rho)
        value = total + comp + tail
        rounding = 4e-16 * (abs(value) + work * 1e-16)
        if prev_value is not None:
            err = abs(value - prev_value) + inner_err + rounding
            if n >= 4 and err <= params.tol:
                return Eval(value, err, work, {"levels": n + 1, "compare": False})
        prev_value = value
    partial = Eval(prev_value, err if math.isfinite(err) else abs(prev_value), work)
    raise TruncationError(f"{what}: not converged within {params.n_max + 1} levels "
                          f"(err {err:.3g})", partial)


def refine_sum(k: int, inner, params: RefineParams | None = None) -> Eval:
    """sum_n k^-n sum_j inner(k^-n, j) for a general bracket callable.

    Each inner sum runs over j < j_max.  Its tail is estimated by comparing
    the terms at j_max/2 and j_max: a power-law decay j^-p gives the integral
    bound |t| j/(p-1), which is added to the error estimate.
    """
    params = params or RefineParams(k=k)
    if params.k != k:
        params = params.replace(k=k)
    J = params.j_max
    js = np.arange(J)

    def evaluate(b, j):
        try:
            vals = np.asarray(inner(b, j), dtype=float)
            if vals.shape == j.shape:
                return vals
        except (TypeError, ValueError):
            pass
        return np.array([float(inner(b, int(i))) for i in j])

    def level(n):
        b = float(k) ** (-n)
        vals = evaluate(b, js)
        s = math.fsum(vals)
        t_end = abs(float(inner(b, J)))
        t_mid = abs(float(inner(b, J // 2)))
        if t_end == 0.0:
            tail = 0.0
        elif t_mid <= t_end:
            tail = math.inf
        else:
            p = math.log(t_mid / t_end) / math.log(J / (J // 2))
            tail = t_end * J / (p - 1.0) if p > 1.0 else math.inf
        if tail > params.tol:
            raise TruncationError(
                f"inner tail at level {n} exceeds tol ({tail:.3g}) at j_max = {J}",
                Eval(s, tail if math.isfinite(tail) else abs(s), J))
        return s, tail, J + 2

    return _run_levels(level, Fraction(1, k), params, "refine_sum")


# ------------------------------------------------------- stencil series

@dataclass(frozen=True)
class Stencil:
    """Offsets theta_m in [0, 1] and weights c_m with sum c_m = 0."""

    offsets: tuple
    weights: tuple

    def __post_init__(self):
        off = tuple(Fraction(o) for o in self.offsets)
        wts = tuple(Fraction(w) for w in self.weights)
        if len(off) != len(wts) or not off:
            raise DomainError("stencil offsets and weights must match")
        if sum(wts) != 0:
            raise DomainError("stencil weights must sum to zero")
        object.__setattr__(self, "offsets", off)
        object.__setattr__(self, "weights", wts)

    def scaled(self, c) -> "Stencil":
        return Stencil(self.offsets, tuple(Fraction(c) * w for w in self.weights))


@lru_cache(maxsize=64)
def _bernoulli_poly_exact(r: int, q: Fraction) -> Fraction:
    return sum(math.comb(r, i) * bernoulli_number(i) * q ** (r - i) for i in range(r + 1))


@lru_cache(maxsize=64)
def _moments(stencil: Stencil) -> tuple:
    """sum_m c_m B_r(theta_m) / r!  for r = 0.._EM_ORDER."""
    return tuple(float(sum(w * _bernoulli_poly_exact(r, o)
                           for o, w in zip(stencil.offsets, stencil.weights))
                       / math.factorial(r))
                 for r in range(_EM_ORDER + 1))


def bracket_stencil(k: int) -> Stencil:
    """Weights (1/2)(1/k - 1) at 0 and 1, 1/k at m/k."""
    half = Fraction(1, 2) * (Fraction(1, k) - 1)
    offs = [Fraction(0)] + [Fraction(m, k) for m in range(1, k)] + [Fraction(1)]
    wts = [half] + [Fraction(1, k)] * (k - 1) + [half]
    return Stencil(tuple(offs), tuple(wts))


SECOND_DIFF = Stencil((0, Fraction(1, 2), 1), (1, -2, 1))


@dataclass(frozen=True)
class Family:
    """One analytic summand family in the form accepted by ``accel.stencil_sum``.

    POWLOG: ln^p1(x) x^-p0; LOGRATIO: ln(x+p0) - ln(x+1); XLOG: x ln(1+1/x).
    """

    kind: int
    p0: float
    p1: float = 0.0

    def derivs(self, x: float, order: int) -> list[float]:
        """f(x), f'(x), ..., f^(order)(x)."""
        if self.kind == accel.POWLOG:
            return _powlog_derivs(self.p0, int(self.p1), x, order)
        if self.kind == accel.LOGRATIO:
            out = [math.log1p((self.p0 - 1.0) / (x + 1.0))]
            for q in range(1, order + 1):
                c = (-1) ** (q - 1) * math.factorial(q - 1)
                out.append(c * ((x + self.p0) ** -q - (x + 1.0) ** -q))
            return out
        if self.kind == accel.XLOG:
            g = [math.log1p(1.0 / x)]
            for q in range(1, order + 1):
                g.append((-1) ** (q - 1) * math.factorial(q - 1) * ((x + 1.0) ** -q - x ** -q))
            return [x * g[0]] + [x * g[r] + r * g[r - 1] for r in range(1, order + 1)]
        raise DomainError(f"unknown family kind {self.kind}")


def _powlog_derivs(s, p, x, order):
    # f = sum_q c_q ln^q x * x^-t ;  d/dx (L^q x^-t) = x^-(t+1) (q L^(q-1) - t L^q)
    L = math.log(x)
    coef = [0.0] * p + [1.0]
    t = s
    out = []
    for r in range(order + 1):
        out.append(x ** -t * sum(c * L ** q for q, c in enumerate(coef)))
        new = [0.0] * (p + 1)
        for q, c in enumerate(coef):
            new[q] -= t * c
            if q:
                new[q - 1] += q * c
        coef = new
        t += 1
    return out


@dataclass(frozen=True)
class Component:
    family: Family
    shift: float
    coeff: float = 1.0


@dataclass(frozen=True)
class StencilSeries:
    """sum_n ratio^n sum_j sum_comp coeff * stencil(f, b = base^n, shift)."""

    components: tuple
    stencil: Stencil
    ratio: Fraction
    base: Fraction
    scale: float = 1.0
    info: dict = field(default_factory=dict, compare=False)


def _em_tail(comp: Component, moments, b, X):
    d = comp.family.derivs(X, _EM_ORDER - 1)
    total = 0.0
    last = math.inf
    err = 0.0
    for r in range(1, _EM_ORDER + 1):
        term = -(b ** (r - 1)) * d[r - 1] * moments[r]
        if moments[r] == 0.0:
            continue
        if abs(term) > abs(last):
            # asymptotic series started to grow: stop before this term
            err = abs(last)
            break
        total += term
        last = term
        err = abs(term)
        if abs(term) < 1e-18 * (abs(total) + 1e-300):
            break
    return comp.coeff * total, abs(comp.coeff) * err


def stencil_level(series: StencilSeries, n: int, J: int):
    """Inner sum at level n: direct for j < J, Euler-Maclaurin beyond."""
    b = float(series.base) ** n
    offs = [float(o) for o in series.stencil.offsets]
    wts = [float(w) for w in series.stencil.weights]
    moments = _moments(series.stencil)
    total = []
    err = 0.0
    for comp in series.components:
        f = comp.family
        head = accel.stencil_sum(f.kind, f.p0, f.p1, b, comp.shift, offs, wts, 0, J)
        tail, terr = _em_tail(comp, moments, b, b * J + comp.shift)
        total += [comp.coeff * head, tail]
        err += terr + 1e-16 * J * len(offs) * abs(comp.coeff) * max(1.0, abs(head))
    s = series.scale * math.fsum(total)
    return s, abs(series.scale) * err, J * len(offs) * len(series.components)


def sum_series(series: StencilSeries, params: RefineParams, what: str = "series") -> Eval:
    return _run_levels(lambda n: stencil_level(series, n, params.j_max),
                       series.ratio, params, what)


# ------------------------------------------------------ concrete series

def _check_params(params, k=None):
    params = params or RefineParams()
    if k is not None and params.k != k:
        params = params.replace(k=k)
    return params


def hurwitz_bracket_sum(s: float, a: float, logpow: int = 1,
                        params: RefineParams | None = None) -> Eval:
    """sum_n k^-n sum_j {(1/2)(1/k-1)[f(bj+a) + f(b(j+1)+a)] + (1/k) sum_m f(b(j+m/k)+a)}
    with f(x) = ln^logpow(x) x^-s."""
    params = _check_params(params)
    k = params.k
    series = StencilSeries((Component(Family(accel.POWLOG, float(s), float(logpow)), float(a)),),
                           bracket_stencil(k), Fraction(1, k), Fraction(1, k))
    return sum_series(series, params, "Hurwitz bracket series")


def _check_sa(s, a):
    if not (s > 0) or s == 1:
        raise DomainError("need s > 0 and s != 1")
    if not (a > 0):
        raise DomainError("need a > 0")


def hurwitz_prime_addison(s: float, a: float, params: RefineParams | None = None) -> Eval:
    """d/ds zeta(s, a) from the bracket series minus its three explicit terms."""
    _check_sa(s, a)
    rhs = hurwitz_bracket_sum(s, a, 1, params)
    la = math.log(a)
    p = a ** (1.0 - s)
    explicit = p / (s - 1.0) ** 2 + la / (2.0 * a ** s) + p * la / (s - 1.0)
    return rhs.shifted(-explicit)


def stieltjes1_addison(a: float, variant: str = ADOPTED,
                       params: RefineParams | None = None) -> Eval:
    """gamma_1(a) = ln(a)/(2a) - ln^2(a)/2 - (bracket series at s = 1).

    The s -> 1 limit of the explicit terms leaves -ln^2(a)/2;
    ``variant="printed"`` omits it (exact only at a = 1).
    """
    if not (a > 0):
        raise DomainError("need a > 0")
    if variant not in ("printed", ADOPTED):
        raise DomainError(f"unknown variant {variant!r}")
    rhs = hurwitz_bracket_sum(1.0, a, 1, params)
    la = math.log(a)
    lead = la / (2.0 * a) - (0.5 * la * la if variant == ADOPTED else 0.0)
    return rhs.shifted(lead, scale=-1.0)


def hurwitz_dprime_addison(s: float, a: float, params: RefineParams | None = None) -> Eval:
    """Second s-derivative of zeta(s, a) from the squared-log bracket series."""
    _check_sa(s, a)
    rhs = hurwitz_bracket_sum(s, a, 2, params)
    la = math.log(a)
    p = a ** (1.0 - s)
    explicit = (2.0 * p * la / (s - 1.0) ** 2 + 2.0 * p / (s - 1.0) ** 3
                + la * la / (2.0 * a ** s) + p * la * la / (s - 1.0))
    return rhs.shifted(explicit, scale=-1.0)


# zeta'(s) + 1/(s-1)^2 = prefactor * sum_n ratio^n sum_j [stencil]_{b = base^n}
ZETA_PRIME_FORMS = {
    # k = 2: 2 f(b(j+1/2)+1) - f(bj+1) - f(b(j+1)+1)
    (2, "printed"): (Fraction(-1, 4), Stencil((0, Fraction(1, 2), 1), (-1, 2, -1)),
                     Fraction(1, 2), Fraction(1, 2)),
    (2, "corrected"): (Fraction(1, 4), Stencil((0, Fraction(1, 2), 1), (-1, 2, -1)),
                       Fraction(1, 2), Fraction(1, 2)),
    (3, "printed"): (Fraction(1, 3), Stencil((0, Fraction(1, 3), Fraction(2, 3), 1), (-1, 1, 1, -1)),
                     Fraction(1, 3), Fraction(1, 3)),
    (4, "printed"): (Fraction(1, 8),
                     Stencil((0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1), (-3, 2, 2, 2, -3)),
                     Fraction(1, 4), Fraction(1, 3)),
    (4, "corrected"): (Fraction(1, 8),
                       Stencil((0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1), (-3, 2, 2, 2, -3)),
                       Fraction(1, 4), Fraction(1, 4)),
}
ZETA_PRIME_FORMS[(3, "corrected")] = ZETA_PRIME_FORMS[(3, "printed")]


def zeta_prime_addison(s: float, k: int = 2, variant: str = ADOPTED,
                       params: RefineParams | None = None) -> Eval:
    """zeta'(s) = -1/(s-1)^2 + a k-refined double series, k in {2, 3, 4}.

    ``variant="printed"`` keeps the sign (k = 2) and b-scale (k = 4) exactly as
    originally typeset; ``"corrected"`` is the validated form.
    """
    if not (s > 0) or s == 1:
        raise DomainError("need s > 0 and s != 1")
    try:
        pref, stencil, ratio, base = ZETA_PRIME_FORMS[(int(k), variant)]
    except KeyError:
        raise DomainError(f"no series for k={k!r}, variant={variant!r}") from None
    params = _check_params(params, int(k))
    series = StencilSeries((Component(Family(accel.POWLOG, float(s), 1.0), 1.0),),
                           stencil, ratio, base, float(pref))
    rhs = sum_series(series, params, f"zeta' series k={k}")
    return rhs.shifted(_zeta_prime_const(s))


def _zeta_prime_const(s):
    return -1.0 / (s - 1.0) ** 2


def loggamma_addison(z: float, variant: str = ADOPTED,
                     params: RefineParams | None = None) -> Eval:
    """ln Gamma(z) = (z - 1/2) ln z - z + 1 - (1/4) sum_n 2^-n sum_j [...].

    The bracket is the second difference over (0, 1/2, 1) of
    f(x) = ln(x + z) - ln(x + 1) at x = bj, b = 2^-n.  ``variant="printed"``
    drops the ln z factor of the leading term.
    """
    if not (z > 0):
        raise DomainError("need z > 0")
    params = _check_params(params, 2)
    series = StencilSeries((Component(Family(accel.LOGRATIO, float(z)), 0.0),),
                           SECOND_DIFF, Fraction(1, 2), Fraction(1, 2), -0.25)
    rhs = sum_series(series, params, "ln Gamma series")
    lead = (z - 0.5) * (math.log(z) if variant == ADOPTED else 1.0) - z + 1.0
    if variant not in ("printed", ADOPTED):
        raise DomainError(f"unknown variant {variant!r}")
    return rhs.shifted(lead)


def log_sqrt_2pi_addison(variant: str = "quarter", params: RefineParams | None = None) -> Eval:
    """ln sqrt(2 pi) = 3/4 - (1/4) sum_n w^n sum_j {...}_{b = 2^-n}.

    The bracket j[ln(bj+1) - ln(bj)] + (j+1)[...] - (2j+1)[...] equals
    (1/b) times the second difference of x ln(1 + 1/x) over (0, 1/2, 1) at
    x = bj, with the j = 0 value j ln(bj) -> 0.  ``variant`` selects the outer
    weight w: ``"quarter"`` (1/4, the validated form) or ``"half"`` (1/2).
    """
    w = {"quarter": Fraction(1, 4), "half": Fraction(1, 2)}.get(variant)
    if w is None:
        raise DomainError(f"unknown variant {variant!r}")
    params = _check_params(params, 2)
    return sum_series(_log_sqrt_2pi_series(w), params, "ln sqrt(2 pi) series").shifted(0.75)


def _log_sqrt_2pi_series(w):
    # the 1/b = 2^n factor is folded into the level ratio
    return StencilSeries((Component(Family(accel.XLOG, 0.0), 0.0),),
                         SECOND_DIFF, w * 2, Fraction(1, 2), -0.25)


def _one_minus_pow_over(s: float, base: float) -> float:
    """(1 - base^(1-s))/(s - 1), continuous at s = 1 (value ln base)."""
    lb = math.log(base)
    v = (1.0 - s) * lb
    return lb * (math.expm1(v) / v if v != 0 else 1.0)


def L4_addison(s: float, params: RefineParams | None = None) -> Eval:
    """Mod-4 character L-function as a 2-refined double series, s >= 0."""
    if not (s >= 0):
        raise DomainError("need s >= 0")
    params = _check_params(params, 2)
    series, const = _L4_series(s)
    return sum_series(series, params, "L4 series").shifted(const)


def _L4_series(s):
    fam = Family(accel.POWLOG, float(s), 0.0)
    series = StencilSeries((Component(fam, 0.25, 1.0), Component(fam, 0.75, -1.0)),
                           SECOND_DIFF, Fraction(1, 2), Fraction(1, 2), 4.0 ** (-s - 1.0))
    const = 0.5 * (1.0 - 3.0 ** (-s)) + 0.25 * _one_minus_pow_over(s, 3.0)
    return series, const


# ------------------------------------------------------------ gamma

_DIRECT_BLOCKS = 16


def _block_em(g, dg, G, lo, hi):
    """sum_{m=lo}^{hi-1} g(m) by Euler-Maclaurin with antiderivative G."""
    return (G(hi) - G(lo)) + 0.5 * (g(lo) - g(hi)) + (dg(hi) - dg(lo)) / 12.0


def _gamma_blocks(block, depth, tol):
    """sum_n n * block(n) for n = 1..depth (depth None: until n*block < tol)."""
    terms = []
    n = 1
    while True:
        t = n * block(n)
        terms.append(t)
        if depth is not None:
            if n >= depth:
                break
        elif n > 4 and abs(t) < tol:
            break
        n += 1
    return math.fsum(terms), abs(terms[-1]), n


def gamma_addison(form: int = 1, depth: int | None = None, tol: float = 1e-17) -> Eval:
    """Euler's constant from dyadic block sums.

    form 1: 1/2 + (1/2) sum_n n sum_{m=2^(n-1)}^{2^n - 1} 1/(2m(m+1)(2m+1));
    form 2: 1 - (1/2) sum_n n sum_{m=2^(n-1)+1}^{2^n} 1/(m(2m-1)).
    Blocks up to 2^16 terms are summed directly, larger ones by
    Euler-Maclaurin with exact antiderivatives.
    """
    if form == 1:
        def g(m):
            return 1.0 / (2.0 * m * (m + 1.0) * (2.0 * m + 1.0))

        def dg(m):
            return -(12.0 * m * m + 12.0 * m + 2.0) * g(m) ** 2

        def G(m):
            return 0.5 * math.log1p(-1.0 / (2.0 * m + 1.0) ** 2)

        def block(n):
            lo, hi = 2 ** (n - 1), 2 ** n
            if n <= _DIRECT_BLOCKS:
                return accel.rational_sum([2.0, 1.0, 2.0], [0.0, 1.0, 1.0], 1.0, lo, hi)
            return _block_em(g, dg, G, lo, hi)

        s, last, n = _gamma_blocks(block, depth, tol)
        # block terms shrink about fourfold, so the remainder is below the last
        return Eval(0.5 + 0.5 * s, 0.5 * last + 1e-16, n, {"blocks": n, "compare": False})
    if form == 2:
        def g(m):
            return 1.0 / (m * (2.0 * m - 1.0))

        def dg(m):
            return -(4.0 * m - 1.0) * g(m) ** 2

        def G(m):
            return math.log1p(-0.5 / m)

        def block(n):
            lo, hi = 2 ** (n - 1) + 1, 2 ** n + 1
            if n <= _DIRECT_BLOCKS:
                return accel.rational_sum([1.0, 2.0], [0.0, -1.0], 1.0, lo, hi)
            return _block_em(g, dg, G, lo, hi)

        s, last, n = _gamma_blocks(block, depth, tol)
        # block terms roughly halve, so the remainder is about the last one
        return Eval(1.0 - 0.5 * s, last + 1e-16, n, {"blocks": n, "compare": False})
    raise DomainError("form must be 1 or 2")


def gamma_vacca(form: str = "B", terms: int | None = None, tol: float = 1e-17) -> Eval:
    """Euler's constant from alternating floor(log2)-weighted series.

    A: 1 + sum_{j>=3} (-1)^j floor(log2(j-1))/j;
    B: sum_{j>=1} (-1)^j floor(log2 j)/j;
    C: 1 + sum_{j>=1} (-1)^j frac(log2 j)/j (the fractional-part arrangement;
       its limit is 1 - ln(2)/2, not Euler's constant).
    A and B are summed in paired terms grouped by dyadic block; with ``terms``
    given the sum stops after that many terms j, otherwise blocks run until
    negligible (large blocks by Euler-Maclaurin).  C is a literal partial sum
    over ``terms`` (default 10^6) terms.
    """
    if form == "C":
        N = 1_000_000 if terms is None else int(terms)
        s = accel.alt_fraclog_sum(1, N + 1)
        # terms are not monotone; paired terms are O(1/j^2) apart from jumps
        # at powers of two, giving a remainder of order 1/N
        return Eval(1.0 + s, 2.0 / N, N, {"terms": N, "compare": False})
    if form not in ("A", "B"):
        raise DomainError("form must be 'A', 'B' or 'C'")
    # block n pairs i in [2^(n-1), 2^n): B pairs (2i, 2i+1), A pairs (2i+1, 2i+2)
    if form == "B":
        alphas, betas, sign, lead = [2.0, 2.0], [0.0, 1.0], 1.0, 0.0

        def G(i):
            return -0.5 * math.log1p(0.5 / i)

        def g(i):
            return 1.0 / (2.0 * i * (2.0 * i + 1.0))

        def dg(i):
            return -(8.0 * i + 2.0) * g(i) ** 2
    else:
        alphas, betas, sign, lead = [2.0, 2.0], [1.0, 2.0], -1.0, 1.0

        def G(i):
            return -0.5 * math.log1p(0.5 / (i + 0.5))

        def g(i):
            return 1.0 / ((2.0 * i + 1.0) * (2.0 * i + 2.0))

        def dg(i):
            return -(8.0 * i + 6.0) * g(i) ** 2

    if terms is not None:
        # literal partial sum of the first `terms` terms (j <= terms)
        return _vacca_partial(form, int(terms))

    def block(n):
        lo, hi = 2 ** (n - 1), 2 ** n
        if n <= _DIRECT_BLOCKS:
            return sign * accel.rational_sum(alphas, betas, 1.0, lo, hi)
        return sign * _block_em(g, dg, G, lo, hi)

    s, last, n = _gamma_blocks(block, None, tol)
    return Eval(lead + s, 2.0 * last + 1e-16, n, {"blocks": n, "compare": False})


def _vacca_partial(form, N):
    j = np.arange(1, N + 1, dtype=np.float64)
    if form == "B":
        w = np.floor(np.log2(j))
    else:
        w = np.where(j >= 3, np.floor(np.log2(np.maximum(j - 1, 1))), 0.0)
    sign = np.where(j % 2 == 0, 1.0, -1.0)
    s = math.fsum(sign * w / j)
    lead = 1.0 if form == "A" else 0.0
    return Eval(lead + s, math.log2(N + 1) / (N + 1), N, {"terms": N, "compare": False})


def gamma_harmonic_oracle(n: int = 10_000) -> Eval:
    """H_n - ln n with Euler-Maclaurin corrections 1/(2n) - 1/(12n^2) + ..."""
    H = math.fsum(1.0 / np.arange(1, n + 1))
    corr = -1.0 / (2 * n) + 1.0 / (12 * n ** 2) - 1.0 / (120 * n ** 4) + 1.0 / (252 * n ** 6)
    return Eval(H - math.log(n) + corr, 1.0 / (240 * n ** 8) + 1e-16 * math.log(n), n)


__all__ = ["RefineParams", "AddisonTerm", "Stencil", "Family", "Component",
           "StencilSeries", "refine_sum", "sum_series", "bracket_stencil",
           "hurwitz_bracket_sum", "hurwitz_prime_addison", "stieltjes1_addison",
           "hurwitz_dprime_addison", "zeta_prime_addison", "loggamma_addison",
           "log_sqrt_2pi_addison", "L4_addison", "gamma_addison", "gamma_vacca",
           "gamma_harmonic_oracle", "series_partials", "addison_partials",
           "TABLE_FAMILIES", "EULER_GAMMA"]


# ------------------------------------------------------ partial sums

def series_partials(series: StencilSeries, nmax: int, J: int = 256) -> list[float]:
    """Raw cumulative sums over levels 0..n for n = 0..nmax, no tail estimate."""
    out = []
    total = []
    for n in range(nmax + 1):
        s, _, _ = stencil_level(series, n, J)
        total.append(float(series.ratio) ** n * s)
        out.append(math.fsum(total))
    return out


TABLE_FAMILIES = ("gamma_addison", "zeta_prime", "L4", "log_sqrt_2pi")


def addison_partials(family: str, nmax: int, k: int = 2, s: float | None = None) -> list[float]:
    """Values of a truncated Addison-type series at depths 1..nmax.

    ``gamma_addison`` counts dyadic blocks; the other families count levels,
    so depth d keeps levels 0..d-1.  Default arguments: s = 2 for zeta_prime
    and s = 1 for L4.
    """
    if int(nmax) != nmax or nmax < 1:
        raise DomainError("nmax must be a positive integer")
    nmax = int(nmax)
    if family == "gamma_addison":
        return [gamma_addison(1, depth=d).value for d in range(1, nmax + 1)]
    if family == "zeta_prime":
        s = 2.0 if s is None else float(s)
        if not (s > 0) or s == 1:
            raise DomainError("need s > 0 and s != 1")
        try:
            pref, stencil, ratio, base = ZETA_PRIME_FORMS[(int(k), ADOPTED)]
        except KeyError:
            raise DomainError(f"no zeta' series for k={k!r}") from None
        series = StencilSeries((Component(Family(accel.POWLOG, s, 1.0), 1.0),),
                               stencil, ratio, base, float(pref))
        const = _zeta_prime_const(s)
    elif family == "L4":
        if k != 2:
            raise DomainError("the L4 series is 2-refined; k must be 2")
        s = 1.0 if s is None else float(s)
        if not (s >= 0):
            raise DomainError("need s >= 0")
        series, const = _L4_series(s)
    elif family == "log_sqrt_2pi":
        if k != 2:
            raise DomainError("the ln sqrt(2 pi) series is 2-refined; k must be 2")
        series, const = _log_sqrt_2pi_series(Fraction(1, 4)), 0.75
    else:
        raise DomainError(f"unknown series family {family!r}")
    return [const + v for v in series_partials(series, nmax - 1)]
