"""Invariant suites behind ``addison verify``.

Each check computes a residual and compares it with its own tolerance.  A
check without a fixed tolerance uses the suite tolerance (1e-8 for ``core``,
1e-5 for the appendix suites) or the one passed to :func:`run_suite`.  Checks
that compare routes with reported error estimates return the combined
estimate as their tolerance.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

SUITES = ("core", "appendix_a", "appendix_b")
DEFAULT_TOL = {"core": 1e-8, "appendix_a": 1e-5, "appendix_b": 1e-5}
# rounding allowance for checks whose bound is exact in real arithmetic
ROUNDING = 1e-15


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    run: Callable[[], float | tuple[float, float]]
    tol: float | None = None


@dataclass(frozen=True)
class CheckResult:
    name: str
    suite: str
    residual: float
    tol: float
    passed: bool
    seconds: float
    error: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        text = f"{mark}  {self.name:<44} residual {self.residual:.3e}  tol {self.tol:.1e}"
        return text + (f"  ({self.error})" if self.error else "")


def _max(values):
    return max(float(v) for v in values)


def _worst(pairs):
    """The (gap, allowance) pair with the largest gap/allowance ratio."""
    return max(pairs, key=lambda p: p[0] / p[1] if p[1] > 0 else math.inf * (p[0] > 0))


def _pairs(evals):
    """Worst |vi - vj| against ei + ej (plus rounding) over all pairs."""
    return _worst([(abs(a.value - b.value),
                    a.err_est + b.err_est + ROUNDING * max(1.0, abs(a.value)))
                   for a, b in itertools.combinations(evals, 2)])


def _spread(values):
    return max(values) - min(values)


# ------------------------------------------------------------------ kernel

def _telescoping():
    from fractions import Fraction
    from .kernel import g_k, p1
    worst = 0.0
    for k in (2, 3, 4):
        for p in (1, 5, 11, 23, 36, 50, 62, 80, 96):
            x = Fraction(p, 97)
            for N in (5, 10, 20, 40):
                terms = []
                for n in range(N + 1):
                    y = k ** n * x
                    # reduce exactly before rounding so k^n x loses nothing
                    terms.append(g_k(k, float(y - math.floor(y))) / k ** n)
                excess = abs(math.fsum(terms) + p1(float(x))) - 0.5 * float(k) ** (-N)
                worst = max(worst, excess)
    return max(worst, 0.0), ROUNDING


def _step_drops():
    from .kernel import g_k
    worst = 0.0
    for k in range(2, 7):
        for j in range(1, k):
            edge = j / k
            drop = g_k(k, edge - 1e-9) - g_k(k, edge)
            worst = max(worst, abs(drop - 1.0 / k))
    return worst, ROUNDING


def _fourier_rate():
    """|p1_fourier(x, J) - p1(x)| <= C/(J delta), delta the distance to the integers.

    Summation by parts gives C = 1/(2 pi); the residual is the largest
    observed error * J * delta.
    """
    from .kernel import p1, p1_fourier
    points = [(x, d) for d in (0.3, 0.1, 0.03, 0.01) for x in (d, 1.0 - d, 3.0 + d)]
    worst = _max(abs(p1_fourier(x, J) - p1(x)) * J * d
                 for x, d in points + [(0.25, 0.25)] for J in (10, 100, 1000, 10000))
    return worst, 1.0 / (2 * math.pi)


# -------------------------------------------------------------------- quad

_QUAD_FS = {
    "x^-2": lambda x: x ** -2.0,
    "ln(x)/x^2": lambda x: np.log(x) / x ** 2,
    "x^-3/2": lambda x: x ** -1.5,
}


def _cell_exact():
    from .quad import integrate_finite, p1_cell
    worst = 0.0
    for f in _QUAD_FS.values():
        for n in (1, 2, 5, 40):
            a = p1_cell(f, n).value
            b = integrate_finite(lambda x, f=f, n=n: f(x) * (x - n - 0.5), n, n + 1).value
            worst = max(worst, abs(a - b))
    return worst, ROUNDING


def _cell_envelope():
    """Partial sums of cell integrals of x^-2 P1 approach the total monotonically."""
    from .quad import integrate_p1, p1_cell
    total = integrate_p1(_QUAD_FS["x^-2"], 1.0).value
    cells = [p1_cell(_QUAD_FS["x^-2"], n).value for n in range(1, 257)]
    gaps = [abs(s - total) for s in itertools.accumulate(cells)]
    rises = [b - a for a, b in zip(gaps, gaps[1:])]
    return max(0.0, _max(rises)), ROUNDING


def _node_independence():
    from .quad import QuadSpec, integrate_p1
    worst = 0.0
    for f in _QUAD_FS.values():
        vals = [integrate_p1(f, 1.0, QuadSpec(nodes_per_interval=m)).value for m in (8, 12, 16, 24)]
        worst = max(worst, _spread(vals))
    return worst, QuadSpec().tol


def _zeta_closure():
    from .lerch import lerch_series_oracle
    from .quad import integrate_p1
    worst = 0.0
    for s in (2, 3, 4):
        I = integrate_p1(lambda x, s=s: x ** (-s - 1.0), 1.0).value
        direct = lerch_series_oracle(1.0, float(s), 1.0).value
        worst = max(worst, abs(1.0 / (s - 1) + 0.5 - s * I - direct))
    return worst


def _quad_anchor():
    from .quad import integrate_p1
    from .zetafun import EULER_GAMMA
    return abs(integrate_p1(_QUAD_FS["x^-2"], 1.0).value - (0.5 - EULER_GAMMA))


# ----------------------------------------------------------------- zetafun

def _laurent():
    from .zetafun import hurwitz, stieltjes
    g = [stieltjes(n, 1.0).value for n in range(4)]
    worst = 0.0
    for h in (0.1, -0.1, 0.05, -0.05):
        lhs = hurwitz(1.0 + h, 1.0).value - 1.0 / h
        rhs = sum((-1) ** k * g[k] * h ** k / math.factorial(k) for k in range(4))
        worst = max(worst, abs(lhs - rhs))
    return worst


def _stieltjes_difference():
    from .zetafun import stieltjes, stieltjes_difference_series
    worst = 0.0
    for a, b in ((1.0, 0.5), (0.75, 0.25)):
        direct = stieltjes_difference_series(1, a, b).value
        worst = max(worst, abs(stieltjes(1, a).value - stieltjes(1, b).value - direct))
    return worst


def _trigamma():
    from .zetafun import hurwitz
    N = 100_000
    worst = 0.0
    for x in (1.0, 1.5, 2.0):
        n = np.arange(N, dtype=float)
        y = N + x
        direct = math.fsum((1.0 / (n + x) ** 2)[::-1]) + 1 / y + 0.5 / y ** 2 + 1 / (6 * y ** 3)
        worst = max(worst, abs(hurwitz(2.0, x).value - direct))
    return worst


def _harmonic():
    from .zetafun import harmonic
    return _max(abs(harmonic(n) - math.fsum(1.0 / j for j in range(1, n + 1))) for n in range(1, 51))


def _bernoulli_zero():
    from .zetafun import bernoulli_poly
    return _max(abs(bernoulli_poly(k, 0.0)) for k in range(3, 32, 2)), 0.0


# ------------------------------------------------------------------- lerch

LERCH_Z = (-0.9, -0.5, 0.5, 0.9)
LERCH_S = (0.0, 0.5, 1.0, 2.0, 3.0)
LERCH_A = (0.5, 1.0, 2.5)


def lerch_grid():
    """The 60 points with z != 0, followed by the z = 0 and z = 1 slices."""
    pts = list(itertools.product(LERCH_Z, LERCH_S, LERCH_A))
    pts += [(0.0, s, a) for s in LERCH_S for a in LERCH_A]
    pts += [(1.0, s, a) for s in (2.0, 3.0) for a in LERCH_A]
    return pts


def _lerch_grid():
    from .lerch import lerch_phi, lerch_series_oracle
    return _max(abs(lerch_phi(z, s, a).value - lerch_series_oracle(z, s, a).value)
                for z, s, a in lerch_grid())


def _polylog_moment_zero():
    from .lerch import polylog
    from .quad import QuadSpec, integrate_finite
    from .zetafun import zeta_int
    inner = QuadSpec(tol=1e-13)
    worst = 0.0
    for s in (1, 2, 3):
        def f(t, s=s):
            return np.array([polylog(float(s), float(u), inner).value / u for u in np.atleast_1d(t)])
        val = integrate_finite(f, 0.0, 1.0, QuadSpec(tol=1e-10)).value
        worst = max(worst, abs(val - zeta_int(s + 1)))
    return worst


def _hyp_transform():
    from ._hyper import pfq
    from .lerch import hyp2f1_reduced
    worst = 0.0
    for s in (2, 3):
        for alpha in (0.5, 1.0, 2.0):
            lhs = hyp2f1_reduced(s, alpha)
            rhs = pfq([1.0, 1.0], [s + 1.0], alpha / (1.0 + alpha)).value / (s * (1.0 + alpha))
            worst = max(worst, abs(lhs - rhs))
    return worst, 1e-10


def _loggamma_taylor():
    from .zetafun import loggamma_taylor
    ratios = []
    for K in (5, 10, 20, 40):
        e = loggamma_taylor(0.5, K)
        ratios.append(abs(e.value - math.lgamma(0.5)) / e.err_est)
    return _max(ratios), 1.0


# ----------------------------------------------------------------- clausen

def _duplication():
    from .clausen import clausen
    worst = 0.0
    for th in (math.pi / 6, math.pi / 4, math.pi / 3, 2 * math.pi / 5):
        lhs = 0.5 * clausen(2, 2 * th).value
        rhs = clausen(2, th).value - clausen(2, math.pi - th).value
        worst = max(worst, abs(lhs - rhs))
    return worst


def _parity():
    from .clausen import clausen
    return _max(abs(clausen(2, 2 * math.pi - th).value + clausen(2, th).value)
                for th in (0.5, 1.0, 2.0, 3.0)), 1e-9


def _odd_L():
    from .clausen import L4_odd_closed, dirichlet_L4
    return _max(abs(dirichlet_L4(2.0 * m + 1).value - L4_odd_closed(m)) for m in (0, 1, 2)), 1e-9


def _L4_routes():
    from .clausen import dirichlet_L4
    return _max(abs(dirichlet_L4(s, "addison").value - dirichlet_L4(s).value)
                for s in (0.5, 1.0, 2.0, 3.0)), 1e-7


# ----------------------------------------------------------------- addison

def _k_invariance():
    from .refine import RefineParams, hurwitz_prime_addison, zeta_prime_addison
    pairs = []
    for s in (2.0, 3.0):
        pairs.append(_pairs([zeta_prime_addison(s, k) for k in (2, 3)]))
        pairs.append(_pairs([hurwitz_prime_addison(s, 0.5, RefineParams(k=k)) for k in (2, 3)]))
    return _worst(pairs)


def _engine_vs_integral():
    from .refine import hurwitz_prime_addison
    from .zetafun import hurwitz_sderiv
    return _max(abs(hurwitz_prime_addison(s, a).value - hurwitz_sderiv(s, a).value)
                for s in (2.0, 3.0) for a in (1.0, 2.0)), 1e-5


def _monotone():
    from .refine import addison_partials
    from .zetafun import EULER_GAMMA, LOG_2PI, zeta_nderiv
    targets = {"gamma_addison": EULER_GAMMA, "zeta_prime": zeta_nderiv(1, 2.0).value,
               "log_sqrt_2pi": 0.5 * LOG_2PI}
    worst = 0.0
    for fam, oracle in targets.items():
        gaps = [abs(v - oracle) for v in addison_partials(fam, 32)]
        for d in (1, 2, 4, 8, 16):
            worst = max(worst, gaps[2 * d - 1] - gaps[d - 1])
    return max(worst, 0.0), ROUNDING


def _gamma_series():
    from .refine import gamma_addison, gamma_harmonic_oracle, gamma_vacca
    oracle = gamma_harmonic_oracle()
    vals = [gamma_addison(1), gamma_addison(2), gamma_vacca("A"), gamma_vacca("B")]
    return _max(abs(v.value - oracle.value) for v in vals), 1e-6


# --------------------------------------------------------------- constants

def _somos_routes():
    from .constants import SOMOS_METHODS, somos_ln
    return _worst([_pairs([somos_ln(t, m) for m in SOMOS_METHODS]) for t in (1.5, 2.0, 3.0, 10.0)])


def _somos_second():
    from .constants import somos_ln, somos_series_second
    return _max(abs(somos_series_second(t).value - somos_ln(t).value) for t in (2.0, 3.0)), 1e-9


def _somos_recurrence():
    from .constants import somos_exact, somos_recurrence
    return _max(abs(somos_recurrence(n).value - somos_exact(n, 2)) for n in range(1, 7)), 1e-7


def _gamma_zeta_sums():
    from .constants import gamma_zeta_series
    from .zetafun import EULER_GAMMA
    return _max(abs(gamma_zeta_series(kind).value + EULER_GAMMA)
                for kind in ("alternating", "shifted")), 1e-9


def _loggamma_moments():
    from .constants import MOMENTS, loggamma_moment
    worst = 0.0
    for which in MOMENTS:
        closed, quad = loggamma_moment(which)
        worst = max(worst, abs(closed.value - quad.value))
    return worst, 1e-7


def _euler_direct():
    from .constants import euler_sum_direct, euler_sum_H
    return _max(abs(euler_sum_H(s, a).value - euler_sum_direct(s, a).value)
                for s in (2.0, 3.0) for a in (1.0, 2.0)), 1e-6


def _euler_closed():
    from .constants import euler_sum_H
    from .zetafun import zeta_int
    return max(abs(euler_sum_H(2.0, 1.0).value - zeta_int(3)),
               abs(euler_sum_H(3.0, 1.0).value - zeta_int(4) / 4)), 1e-7


def _registry_routes(names):
    """Spread of all routes of each registry record, reported for the worst record."""
    def run():
        from .constants import registry
        reg = registry()
        rows = []
        for name in names:
            rec = reg[name]
            spread = _spread([rec.evaluate(m).value for m in rec.methods])
            rows.append((spread / rec.tolerance, spread, rec.tolerance))
        _, spread, tol = max(rows)
        return spread, tol
    return run


APPENDIX_A_RECORDS = ("kinkelin", "gamma_moment_x", "gamma_moment_sin")


def _core_records():
    from .constants import registry
    return tuple(n for n in registry() if n not in APPENDIX_A_RECORDS)


# -------------------------------------------------------------- appendix A

def _kinkelin_routes():
    from .kinkelin import KINKELIN_METHODS, kinkelin
    return _spread([kinkelin(m).value for m in KINKELIN_METHODS]), 1e-6


def _p1_share():
    from .kinkelin import kinkelin
    share = kinkelin("p1_a8").info["p1_share"]
    # distance outside the band [1.5%, 2.5%]
    return max(0.0, 0.015 - share, share - 0.025), 0.0


def _reorder():
    from .kinkelin import reorder_closed, reorder_sum
    return abs(reorder_sum().value - reorder_closed()), 1e-6


def _glaisher_limit():
    from .constants import registry
    from .kinkelin import glaisher_limit
    lnA = registry()["glaisher_lnA"].evaluate("zeta_nderiv").value
    return abs(glaisher_limit(10_000).value - lnA), 1e-4


def _lambda_independence():
    from .kinkelin import gamma_moment_sin, gamma_moment_x
    lams = (0.5, 0.7, 1.0, 2.0, 3.0)
    x = _spread([gamma_moment_x("laplace_a10", lam=lam).value for lam in lams])
    s = max(_spread([gamma_moment_sin(a, "laplace_a9", lam=lam).value for lam in lams])
            for a in (0.3, 1.0, math.pi / 2))
    return max(x, s), 1e-6


def _antiderivative_vs_onef2():
    from .kinkelin import gamma_moment_sin
    return _max(abs(gamma_moment_sin(a, "antiderivative_a13", terms=25).value
                    - gamma_moment_sin(a, "onef2_a12", terms=25).value)
                for a in (0.3, 1.0, math.pi / 2)), 1e-7


def _moment_routes():
    from .kinkelin import MOMENT_SIN_METHODS, MOMENT_X_METHODS, gamma_moment_sin, gamma_moment_x
    x = _spread([gamma_moment_x(m).value for m in MOMENT_X_METHODS])
    s = max(_spread([gamma_moment_sin(a, m).value for m in MOMENT_SIN_METHODS]) for a in (0.3, 1.0))
    return max(x, s)


def _taylor_pole_free():
    """Moments from the Taylor series at two truncations agree (tail is pole-corrected)."""
    from .kinkelin import gamma_moment_x
    return abs(gamma_moment_x("taylor_a3", terms=30).value - gamma_moment_x("taylor_a3", terms=40).value)


# -------------------------------------------------------------- appendix B

_AK_GRID = tuple(itertools.product((1, 2), (0.3, 0.5, 0.7)))


def _ak_routes():
    from .negazeta import a_k, a_k_half
    worst = 0.0
    for q in (0.25, 0.5, 0.75):
        worst = max(worst, abs(a_k(1, q).value - a_k(1, q, "integral_b19").value))
        worst = max(worst, abs(a_k(1, q).value - (math.lgamma(q) - 0.5 * math.log(2 * math.pi))))
    for k in (2, 3):
        worst = max(worst, abs(a_k(k, 1.0).value - a_k(k, 1.0, "boundary_b3").value))
        worst = max(worst, abs(a_k(k, 0.5).value - a_k_half(k).value))
    return worst


def _factorial_sum():
    from .negazeta import stieltjes_factorial_sum
    from .zetafun import EULER_GAMMA
    return abs(stieltjes_factorial_sum().value - (0.5 - EULER_GAMMA)), 1e-6


def _bernoulli_bridge_ends():
    from .negazeta import bernoulli_stieltjes_check
    worst = 0.0
    for k in (1, 2, 3):
        for q in (0.0, 1.0):
            exact, series = bernoulli_stieltjes_check(k, q)
            worst = max(worst, abs(exact.value - series.value))
    return worst, 1e-5


def _bernoulli_bridge_inside():
    """Interior points, where the truncated series is held to its own error estimate."""
    from .negazeta import bernoulli_stieltjes_check
    pairs = []
    for k in (1, 2, 3):
        for q in (0.25, 0.5, 0.75):
            exact, series = bernoulli_stieltjes_check(k, q)
            pairs.append((abs(exact.value - series.value), series.err_est))
    return _worst(pairs)


def _ak_shift():
    from .negazeta import a_k_shift_check
    return _max(abs(a.value - b.value) for a, b in (a_k_shift_check(k, q) for k, q in _AK_GRID)), 1e-5


def _ak_derivative():
    from .negazeta import a_k_derivative_check
    return _max(abs(a.value - b.value) for a, b in (a_k_derivative_check(k, q) for k, q in _AK_GRID)), 1e-4


def _ak_mean():
    from .negazeta import a_k_mean
    return _max(abs(a_k_mean(k).value) for k in (1, 2)), 1e-4


def _a2_fourier():
    from .negazeta import a2_fourier, a_k
    return _max(abs(a2_fourier(q).value - a_k(2, q).value) for q in (0.25, 1 / 3, 0.5)), 1e-4


def _binet():
    from .negazeta import binet_forms
    return _max(_spread([e.value for e in binet_forms(s).values()]) for s in (0.5, 1.0, 2.0)), 1e-7


def _loggamma_closure():
    from .negazeta import a_k_any, loggamma_p1
    from .zetafun import LOG_2PI
    return _max(abs(a_k_any(1, s + 1.0).value + 0.5 * LOG_2PI - loggamma_p1(s).value)
                for s in (1.0, 2.5)), 1e-8


PQ_POINTS = tuple([(k, 1, 1, b) for k in (1, 2, 3, 4) for b in (0.0, 0.5)]
                  + [(k, p, q, b) for k in (1, 2, 3) for p, q in ((2, 1), (1, 2), (2, 3), (3, 2))
                     for b in (0.0, 0.25)])
PRIME_POINTS = tuple(itertools.product((2, 3), (2, 3, 5), (0, 1, 2)))


def _pq_relation():
    from .negazeta import ak_sum_relation_pq
    return _max(abs(a.value - b.value) for a, b in (ak_sum_relation_pq(*pt) for pt in PQ_POINTS)), 1e-4


def _prime_relation():
    from .negazeta import ak_prime_relation
    return _max(abs(a.value - b.value) for a, b in (ak_prime_relation(*pt) for pt in PRIME_POINTS)), 1e-4


# ------------------------------------------------------------------ suites

def _variants_check():
    from .variants import evaluate, variants
    return _max(evaluate(v).adopted_residual for v in variants()), 1e-5


def checks() -> list[Check]:
    c = "core"
    a = "appendix_a"
    b = "appendix_b"
    return [
        Check("kernel.telescoping", c, _telescoping),
        Check("kernel.step_drops", c, _step_drops),
        Check("kernel.fourier_rate", c, _fourier_rate),
        Check("quad.cell_exactness", c, _cell_exact),
        Check("quad.cell_envelope", c, _cell_envelope),
        Check("quad.node_independence", c, _node_independence),
        Check("quad.zeta_closure", c, _zeta_closure, 1e-9),
        Check("quad.euler_gamma_anchor", c, _quad_anchor, 1e-10),
        Check("zetafun.laurent", c, _laurent, 1e-5),
        Check("zetafun.stieltjes_difference", c, _stieltjes_difference, 1e-7),
        Check("zetafun.trigamma", c, _trigamma, 1e-9),
        Check("zetafun.harmonic", c, _harmonic, 1e-12),
        Check("zetafun.bernoulli_odd_zero", c, _bernoulli_zero),
        Check("lerch.representation_vs_series", c, _lerch_grid, 1e-9),
        Check("lerch.polylog_over_t", c, _polylog_moment_zero, 1e-8),
        Check("lerch.hyp2f1_transform", c, _hyp_transform),
        Check("lerch.loggamma_taylor", c, _loggamma_taylor),
        Check("clausen.duplication", c, _duplication, 1e-8),
        Check("clausen.parity", c, _parity),
        Check("clausen.odd_L_bernoulli", c, _odd_L),
        Check("clausen.L4_series_vs_hurwitz", c, _L4_routes),
        Check("addison.k_invariance", c, _k_invariance),
        Check("addison.engine_vs_integral", c, _engine_vs_integral),
        Check("addison.monotone_refinement", c, _monotone),
        Check("addison.gamma_series", c, _gamma_series),
        Check("constants.somos_routes", c, _somos_routes),
        Check("constants.somos_second_form", c, _somos_second),
        Check("constants.somos_recurrence", c, _somos_recurrence),
        Check("constants.gamma_zeta_sums", c, _gamma_zeta_sums),
        Check("constants.loggamma_moments", c, _loggamma_moments),
        Check("constants.euler_sum_direct", c, _euler_direct),
        Check("constants.euler_sum_closed", c, _euler_closed),
        Check("constants.registry_routes", c, _registry_routes(_core_records())),
        Check("variants.adopted_forms", c, _variants_check),
        Check("kinkelin.routes", a, _kinkelin_routes),
        Check("kinkelin.p1_share", a, _p1_share),
        Check("kinkelin.reordered_series", a, _reorder),
        Check("kinkelin.glaisher_limit", a, _glaisher_limit),
        Check("kinkelin.lambda_independence", a, _lambda_independence),
        Check("kinkelin.antiderivative_vs_onef2", a, _antiderivative_vs_onef2),
        Check("kinkelin.moment_routes", a, _moment_routes),
        Check("kinkelin.taylor_truncation", a, _taylor_pole_free),
        Check("kinkelin.registry_routes", a, _registry_routes(APPENDIX_A_RECORDS)),
        Check("negazeta.routes", b, _ak_routes),
        Check("negazeta.factorial_sum", b, _factorial_sum),
        Check("negazeta.bernoulli_bridge_ends", b, _bernoulli_bridge_ends),
        Check("negazeta.bernoulli_bridge_inside", b, _bernoulli_bridge_inside),
        Check("negazeta.shift_relation", b, _ak_shift),
        Check("negazeta.derivative_relation", b, _ak_derivative),
        Check("negazeta.mean_zero", b, _ak_mean),
        Check("negazeta.fourier_form", b, _a2_fourier),
        Check("negazeta.binet_forms", b, _binet),
        Check("negazeta.loggamma_closure", b, _loggamma_closure),
        Check("negazeta.pq_relation", b, _pq_relation),
        Check("negazeta.prime_relation", b, _prime_relation),
    ]


def suite_checks(suite: str) -> list[Check]:
    if suite == "all":
        return checks()
    if suite not in SUITES:
        from .result import DomainError
        raise DomainError(f"unknown suite {suite!r}; expected one of {SUITES + ('all',)}")
    return [ch for ch in checks() if ch.suite == suite]


def run_check(ch: Check, tol: float | None = None) -> CheckResult:
    """Run one check; ``tol`` replaces the suite default for checks without their own."""
    start = time.perf_counter()
    error = ""
    try:
        out = ch.run()
    except Exception as exc:  # a crashing check is a failed check
        out = (math.inf, 0.0)
        error = f"{type(exc).__name__}: {exc}"
    if isinstance(out, tuple):
        residual, limit = out
    else:
        residual, limit = out, None
    if limit is None:
        limit = ch.tol
    if limit is None:
        limit = DEFAULT_TOL[ch.suite] if tol is None else tol
    residual = float(residual)
    passed = math.isfinite(residual) and residual <= limit
    return CheckResult(ch.name, ch.suite, residual, float(limit), passed,
                       time.perf_counter() - start, error)


def run_suite(suite: str = "all", tol: float | None = None, on_result=None) -> list[CheckResult]:
    results = []
    for ch in suite_checks(suite):
        r = run_check(ch, tol)
        results.append(r)
        if on_result is not None:
            on_result(r)
    return results
