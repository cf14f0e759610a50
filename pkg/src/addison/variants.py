"""Formula variants: where a printed formula and a validated one differ, both
are evaluated against an independent oracle and the residuals recorded.

``deviations_markdown`` renders the registry (plus the comparison of every
printed reference value in the constant registry) as a Markdown report.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from .result import Eval

# the printed value of an unattainable claim may be an unbounded partial sum
_PARTIAL_N = 10_000


@dataclass(frozen=True)
class Variant:
    key: str
    title: str
    adopted_label: str
    rejected_label: str
    adopted: Callable[[], Eval]
    rejected: Callable[[], Eval]
    oracle: Callable[[], float]
    oracle_label: str
    note: str = ""
    # when the two forms predict different quantities
    rejected_oracle: Callable[[], float] | None = None


@dataclass(frozen=True)
class VariantOutcome:
    variant: Variant
    adopted_value: float
    rejected_value: float
    oracle_value: float
    rejected_oracle_value: float

    @property
    def adopted_residual(self) -> float:
        return abs(self.adopted_value - self.oracle_value)

    @property
    def rejected_residual(self) -> float:
        return abs(self.rejected_value - self.rejected_oracle_value)


def _clausen_odd_printed(n=3, theta=1.0):
    from .quad import integrate_p1_trig, integrate_trig
    from .result import combine
    head = 0.5 * cmath.exp(1j * theta).real
    plain = integrate_trig(lambda x: x ** (-float(n)), theta, 1.0, "re")
    weighted = integrate_p1_trig(lambda x: (1j * theta + n / x) * x ** (-float(n)), theta, 1.0, "re")
    return combine([plain, weighted], const=head)


def _zeta_prime_2():
    from .zetafun import zeta_nderiv
    return zeta_nderiv(1, 2.0).value


def _kinkelin_oracle():
    from .kinkelin import kinkelin
    return kinkelin("series_a5").value


def _lnA_oracle():
    return 1.0 / 12 - _kinkelin_oracle()


def _step_from_a1():
    """A_1(1/2) + ln(1/2), the right side shared by both step relations at k = 1."""
    from .negazeta import a_k
    return a_k(1, 0.5, "integral_b19").shifted(math.log(0.5))


def _binet_oracle(s):
    return math.lgamma(s) - (s - 0.5) * math.log(s) + s - 0.5 * math.log(2 * math.pi)


def _stieltjes_shift(printed: bool):
    from .negazeta import _gammas
    q, n = 0.5, 2
    lo = _gammas(q, n)[n]
    step = math.log(q) / q if printed else math.log(q) ** n / q
    return lo.shifted(-step)


def _registry():
    from . import kinkelin as kk
    from . import negazeta as nz
    from . import refine
    from .clausen import L4_odd_closed, clausen, clausen_fourier, dirichlet_L4
    from .constants import glaisher_lnA
    from .zetafun import LOG_2PI, stieltjes

    return [
        Variant("zeta_prime_k2_sign", "Sign of the base-2 Addison series for zeta'(s)",
                "prefactor +1/4", "prefactor -1/4 as printed",
                lambda: refine.zeta_prime_addison(2.0, 2, "corrected"),
                lambda: refine.zeta_prime_addison(2.0, 2, "printed"),
                _zeta_prime_2, "zeta'(2) from the P1 integral"),
        Variant("zeta_prime_k4_scale", "Level scale of the five-point Addison series for zeta'(s)",
                "b = 4^-n", "b = 3^-n",
                lambda: refine.zeta_prime_addison(2.0, 4, "corrected"),
                lambda: refine.zeta_prime_addison(2.0, 4, "printed"),
                _zeta_prime_2, "zeta'(2) from the P1 integral",
                "The subscript on the level scale is ambiguous; the stencil has five points "
                "with weights summing to zero on quarter steps."),
        Variant("log_sqrt_2pi_weight", "Outer weight of the Addison series for ln sqrt(2 pi)",
                "1/4^n as printed", "1/2^n",
                lambda: refine.log_sqrt_2pi_addison("quarter"),
                lambda: refine.log_sqrt_2pi_addison("half"),
                lambda: 0.5 * LOG_2PI, "ln sqrt(2 pi)",
                "The bracket carries an implicit 1/b, so the effective level weight is 2^-n."),
        Variant("loggamma_lead", "Leading term of the Addison series for ln Gamma(z), z = 2",
                "(z - 1/2) ln z - z + 1", "(z - 1/2) - z + 1",
                lambda: refine.loggamma_addison(2.0, "corrected"),
                lambda: refine.loggamma_addison(2.0, "printed"),
                lambda: math.lgamma(2.0), "math.lgamma"),
        Variant("stieltjes1_shift", "Explicit terms of the Addison series for gamma_1(a), a = 1/2",
                "ln a/(2a) - ln^2(a)/2", "ln a/(2a)",
                lambda: refine.stieltjes1_addison(0.5, "corrected"),
                lambda: refine.stieltjes1_addison(0.5, "printed"),
                lambda: stieltjes(1, 0.5).value, "gamma_1(1/2) from the P1 integral"),
        Variant("clausen_odd_sign", "Sign inside the P1 integrand of Cl_n for odd n (n = 3, theta = 1)",
                "+(n/x) cos(x theta)", "-(n/x) cos(x theta)",
                lambda: clausen(3, 1.0),
                _clausen_odd_printed,
                lambda: clausen_fourier(3, 1.0).value, "Fourier partial sum with tail bound"),
        Variant("odd_L_sign", "Sign of the Bernoulli form of L(2m+1) for the mod-4 character, m = 1",
                "(-1)^(m+1) (2 pi)^(2m+1) B_(2m+1)(1/4) / (2 (2m+1)!)",
                "-(2 pi)^(2m+1) B_(2m+1)(1/4) / (2 (2m+1)!)",
                lambda: Eval(L4_odd_closed(1, "corrected")),
                lambda: Eval(L4_odd_closed(1, "printed")),
                lambda: dirichlet_L4(3.0).value, "L(3) from the Hurwitz combination",
                "The two forms agree for even m; for odd m they differ in sign."),
        Variant("glaisher_relation", "Denominator in ln A = -zeta'(2)/D + (ln 2 pi + gamma)/12",
                "D = 2 pi^2", "D = pi^2",
                lambda: glaisher_lnA(variant="corrected"),
                lambda: glaisher_lnA(variant="printed"),
                _lnA_oracle, "1/12 - zeta'(-1), zeta'(-1) from the alternating zeta series"),
        Variant("kinkelin_moment", "Integral in k = 1/12 - ln(2 pi)/4 + int_0^1 x f(x) dx",
                "f = ln Gamma", "f = Gamma",
                lambda: kk.kinkelin("gamma_moment_a2", variant="corrected"),
                lambda: kk.kinkelin("gamma_moment_a2", variant="printed"),
                _kinkelin_oracle, "zeta'(-1) from the alternating zeta series"),
        Variant("kinkelin_reorder_sign", "Bracket of the reordered double series for Kinkelin's constant",
                "j(j+1) ln((j+1)/j) - (6j^2+3j-1)/(6j)", "j(j+1) ln((j+1)/j) + (6j^2+3j-1)/(6j)",
                lambda: kk.reorder_sum(_PARTIAL_N),
                lambda: kk.reorder_sum(_PARTIAL_N, printed=True),
                kk.reorder_closed, "11/6 + gamma/6 - 2 ln A - 2 ln 2",
                f"The printed bracket grows like 2j; its residual is the partial sum to j = {_PARTIAL_N}."),
        Variant("binet_range", "Range of the P1 form of the Binet remainder (s = 1)",
                "-int_0^inf P1(x)/(x+s) dx", "-int_0^1 P1(x)/(x+s) dx",
                lambda: nz.binet_forms(1.0)["p1"],
                lambda: nz.binet_unit_interval(1.0),
                lambda: _binet_oracle(1.0), "ln Gamma(s) - (s - 1/2) ln s + s - ln sqrt(2 pi)"),
        Variant("stieltjes_shift", "Shift identity gamma_n(q+1) = gamma_n(q) - L, n = 2, q = 1/2",
                "L = ln^n(q)/q", "L = ln(q)/q",
                lambda: _stieltjes_shift(False), lambda: _stieltjes_shift(True),
                lambda: nz._gammas(1.5, 2)[2].value, "gamma_2(3/2) from the P1 integral"),
        Variant("ak_shift", "Step relation for A_k (k = 1, q = 1/2)",
                "A_k(q+1) = A_k(q) + k q^(k-1) ln q", "A_(k+1)(q) = A_k(q) + k q^(k-1) ln q",
                _step_from_a1, _step_from_a1,
                lambda: math.lgamma(1.5) - 0.5 * LOG_2PI,
                "A_1(3/2) = ln Gamma(3/2) - ln sqrt(2 pi) for the adopted form; "
                "A_2(1/2) in closed form for the rejected one",
                "Both forms have the same right side at k = 1; they differ in what it equals.",
                rejected_oracle=lambda: nz.a_k_half(2).value),
    ]


def variants() -> list[Variant]:
    return _registry()


def evaluate(v: Variant) -> VariantOutcome:
    oracle = v.oracle()
    other = oracle if v.rejected_oracle is None else v.rejected_oracle()
    return VariantOutcome(v, v.adopted().value, v.rejected().value, oracle, other)


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def reference_rows():
    """(name, method, value, reference, residual, tolerance) for printed reference values."""
    from .constants import registry
    rows = []
    for rec in registry().values():
        if rec.reference_kind != "printed":
            continue
        for m in rec.methods:
            e = rec.evaluate(m)
            rows.append((rec.name, m, e.value, rec.reference, rec.reference_residual(e.value), rec.tolerance))
    return rows


def deviations_markdown(outcomes: list[VariantOutcome] | None = None, references: bool = True) -> str:
    if outcomes is None:
        outcomes = [evaluate(v) for v in variants()]
    out = ["# Formula deviations", "",
           "Each section compares the adopted form with the rejected one against an "
           "independent oracle. Residuals are absolute.", ""]
    for o in outcomes:
        v = o.variant
        out += [f"## {v.title}", "",
                f"- key: `{v.key}`",
                f"- oracle: {v.oracle_label}: {_fmt(o.oracle_value)}"
                + ("" if v.rejected_oracle is None else f" (rejected side: {_fmt(o.rejected_oracle_value)})"),
                f"- adopted: {v.adopted_label}: value {_fmt(o.adopted_value)}, residual {o.adopted_residual:.3e}",
                f"- rejected: {v.rejected_label}: value {_fmt(o.rejected_value)}, residual {o.rejected_residual:.3e}"]
        if v.note:
            out.append(f"- note: {v.note}")
        out.append("")
    if references:
        out += ["## Printed reference values", "",
                "| constant | method | value | reference | residual | tolerance | within |",
                "|---|---|---|---|---|---|---|"]
        for name, m, val, ref, res, tol in reference_rows():
            out.append(f"| {name} | {m} | {_fmt(val)} | {ref} | {res:.3e} | {tol:.0e} | "
                       f"{'yes' if res <= tol else 'no'} |")
        out.append("")
    return "\n".join(out)


def write_deviations(path, outcomes=None) -> str:
    text = deviations_markdown(outcomes)
    with open(path, "w") as fh:
        fh.write(text)
    return text
