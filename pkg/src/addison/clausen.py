"""Clausen functions, the cosine integral, Catalan's constant and Dirichlet
L-functions built from Hurwitz zeta values.

Both Clausen parities come from one complex integrand: with z = e^{i theta},

    Li_n(z) = z/2 + int_1^inf z^x x^-n dx + int_1^inf (i theta - n/x) z^x x^-n P1(x) dx,

and Cl_n takes the imaginary part for even n, the real part for odd n.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import gcd
from pathlib import Path

import numpy as np

from . import accel
from .quad import DEFAULT, QuadSpec, integrate_p1_trig, integrate_trig
from .result import DomainError, Eval, PoleError, combine
from .zetafun import EULER_GAMMA, bernoulli_poly, hurwitz, hurwitz_parts, stieltjes

TWO_PI = 2.0 * math.pi
# closer than this to 2 pi the P1 tail expansion converges too slowly, so
# the reflection Cl_n(theta) = -+Cl_n(2 pi - theta) is used instead
_REFLECT_GAP = 0.1


# ------------------------------------------------------------- Ci(z)

def cosint(z: float) -> Eval:
    """Cosine integral Ci(z) = -int_z^inf cos(t)/t dt for z > 0.

    Power series for z <= 4; beyond, Ci(z) = -Re E1(iz) with E1 from its
    continued fraction (modified Lentz).
    """
    if not (math.isfinite(z) and z > 0):
        raise DomainError(f"cosint needs z > 0, got {z!r}")
    if z <= 4.0:
        x2 = -z * z
        term = 1.0
        terms = []
        k = 0
        while True:
            k += 1
            term *= x2 / ((2 * k - 1) * (2 * k))
            t = term / (2 * k)
            terms.append(t)
            if abs(t) < 1e-18 and k > 3:
                break
        series = math.fsum(terms)
        lead = EULER_GAMMA + math.log(z)
        err = 4e-16 * (1.0 + max(map(abs, terms))) + 2.3e-16 * (abs(lead) + abs(lead + series))
        return Eval(lead + series, err, k)
    w = complex(0.0, z)
    b = w + 1.0
    c = 1e300
    d = 1.0 / b
    h = d
    for i in range(1, 1000):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    e1 = h * cmath.exp(-w)
    return Eval(-e1.real, 4e-15 * abs(e1), i)


# ----------------------------------------------------------- Clausen

def clausen(n: int, theta: float, spec: QuadSpec = DEFAULT) -> Eval:
    """Generalised Clausen function Cl_n(theta), n >= 2, theta in [0, 2 pi]."""
    if int(n) != n or n < 2:
        raise DomainError("clausen needs integer n >= 2")
    if not (0 <= theta <= TWO_PI):
        raise DomainError("theta must lie in [0, 2 pi]")
    n = int(n)
    even = n % 2 == 0
    if theta == 0 or theta == TWO_PI:
        if even:
            return Eval(0.0)
        from .zetafun import zeta
        return zeta(float(n), spec)
    if TWO_PI - theta < _REFLECT_GAP:
        r = clausen(n, TWO_PI - theta, spec)
        return r.shifted(scale=-1.0) if even else r
    part = "im" if even else "re"
    take = (lambda c: c.imag) if even else (lambda c: c.real)
    head = 0.5 * take(cmath.exp(1j * theta))
    plain = integrate_trig(lambda x: x ** (-float(n)), theta, 1.0, part, spec)
    weighted = integrate_p1_trig(lambda x: (1j * theta - n / x) * x ** (-float(n)),
                                 theta, 1.0, part, spec)
    return combine([plain, weighted], const=head)


def _cl2_p1_term(theta, spec):
    """int_1^inf x^-2 [theta cos(x theta) - (2/x) sin(x theta)] P1(x) dx."""
    return integrate_p1_trig(lambda x: (1j * theta - 2.0 / x) / (x * x), theta, 1.0, "im", spec)


def clausen2_ci(theta: float, spec: QuadSpec = DEFAULT) -> Eval:
    """Cl_2 from (3/2) sin(theta) - theta Ci(theta) plus a P1 integral."""
    if not (0 <= theta < TWO_PI):
        raise DomainError("theta must lie in [0, 2 pi)")
    if theta == 0:
        return Eval(0.0)
    ci = cosint(theta)
    return combine([ci, _cl2_p1_term(theta, spec)], [-theta, 1.0], const=1.5 * math.sin(theta))


def catalan(spec: QuadSpec = DEFAULT) -> Eval:
    """Catalan's constant from 3/2 - (pi/2) Ci(pi/2) plus a P1 integral."""
    h = 0.5 * math.pi
    ci = cosint(h)

    def g(x):
        # real part of this times e^{i pi x/2} is (pi/2) cos - (2/x) sin
        return (h + 2j / x) / (x * x)

    weighted = integrate_p1_trig(g, h, 1.0, "re", spec)
    return combine([ci, weighted], [-h, 1.0], const=1.5)


def clausen_fourier(n: int, theta: float, N: int = 1_000_000) -> Eval:
    """Fourier partial sum of Cl_n with an Abel-summation tail bound."""
    if int(n) != n or n < 2:
        raise DomainError("clausen needs integer n >= 2")
    even = n % 2 == 0
    head = accel.trig_log_sum(theta, float(n), 0, even, 1, N + 1)
    s = abs(math.sin(0.5 * theta))
    bound = 1.0 / ((N + 1.0) ** n * s) if s > 0 else float(sum(k ** -n for k in range(N + 1, N + 10)))
    return Eval(head, bound + 1e-16 * N, N)


# ------------------------------------------------------- Dirichlet L

def _expm1_ratio(v: float) -> float:
    """expm1(v)/v with the removable point v = 0."""
    return math.expm1(v) / v if v != 0 else 1.0


@dataclass(frozen=True)
class CharacterTable:
    """Real Dirichlet character modulo ``modulus``; values[k-1] = chi(k)."""

    modulus: int
    values: tuple[float, ...]
    principal: bool

    def __post_init__(self):
        m = self.modulus
        if int(m) != m or m < 1:
            raise DomainError("modulus must be a positive integer")
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != m:
            raise DomainError(f"expected {m} character values, got {len(vals)}")
        for k in range(1, m + 1):
            coprime = gcd(k, m) == 1
            v = vals[k - 1]
            if not coprime and v != 0:
                raise DomainError(f"chi({k}) must vanish since gcd({k},{m}) > 1")
            if coprime and v not in (1.0, -1.0):
                raise DomainError(f"chi({k}) must be +1 or -1 for a real character")
        if vals[0 if m > 1 else 0] != 1.0:
            raise DomainError("chi(1) must equal 1")
        if m <= 20:
            for a in range(1, m + 1):
                for b in range(1, m + 1):
                    if self(a * b) != self(a) * self(b):
                        raise DomainError(f"character is not multiplicative at ({a}, {b})")
        is_principal = all(v == 1.0 for k, v in enumerate(vals, 1) if gcd(k, m) == 1)
        if bool(self.principal) != is_principal:
            raise DomainError("principal flag disagrees with the character values")

    def __call__(self, k: int) -> float:
        return self.values[(k - 1) % self.modulus]

    @classmethod
    def principal_mod(cls, m: int) -> "CharacterTable":
        return cls(m, tuple(1.0 if gcd(k, m) == 1 else 0.0 for k in range(1, m + 1)), True)


CHI4 = CharacterTable(4, (1.0, 0.0, -1.0, 0.0), False)


def load_character_table(path) -> CharacterTable:
    """Read a character table: line 1 the modulus, line 2 the m values."""
    lines = [ln.strip() for ln in Path(path).read_text().splitlines() if ln.strip()]
    if len(lines) < 2:
        raise DomainError("character table needs a modulus line and a values line")
    try:
        m = int(lines[0])
        vals = tuple(float(v) for v in lines[1].split())
    except ValueError as exc:
        raise DomainError(f"malformed character table: {exc}") from None
    probe = [v for k, v in enumerate(vals, 1) if gcd(k, m) == 1]
    return CharacterTable(m, vals, all(v == 1.0 for v in probe))


def dirichlet_L(s: float, chi: CharacterTable, spec: QuadSpec = DEFAULT) -> Eval:
    """L(s, chi) = m^-s sum_k chi(k) zeta(s, k/m).

    For non-principal chi the weights sum to zero, so the pole terms
    (k/m)^(1-s)/(s-1) are combined analytically into
    -sum chi(k) ln(k/m) expm1(v_k)/v_k with v_k = (1-s) ln(k/m).
    """
    m = chi.modulus
    if chi.principal:
        if s == 1:
            raise PoleError("principal L-function has a pole at s = 1")
        if not s > 1:
            raise DomainError("principal character needs s > 1")
    elif not s >= 0:
        raise DomainError("non-principal character needs s >= 0")
    terms, coeffs = [], []
    pole = 0.0
    for k in range(1, m + 1):
        c = chi(k)
        if c == 0:
            continue
        a = k / m
        if chi.principal:
            terms.append(hurwitz(s, a, spec))
        else:
            regular, _ = hurwitz_parts(s, a, spec)
            terms.append(regular)
            la = math.log(a)
            pole -= c * la * _expm1_ratio((1.0 - s) * la)
        coeffs.append(c)
    scale = m ** (-s)
    r = combine(terms, [scale * c for c in coeffs], const=scale * pole)
    return r


def dirichlet_L4(s: float, method: str = "hurwitz_combo", spec: QuadSpec = DEFAULT) -> Eval:
    """L-function of the non-principal character mod 4."""
    if not s >= 0:
        raise DomainError("s must be non-negative")
    if method == "hurwitz_combo":
        return dirichlet_L(s, CHI4, spec)
    if method == "addison":
        from .refine import L4_addison
        return L4_addison(s)
    raise DomainError(f"unknown method {method!r}")


def L4_prime1(method: str = "stieltjes", spec: QuadSpec = DEFAULT) -> Eval:
    """L'(1) for the mod-4 character.

    ``stieltjes``: (1/4)[-2 pi ln 2 + gamma_1(3/4) - gamma_1(1/4)];
    ``closed_form``: the same with gamma_1(3/4) - gamma_1(1/4) replaced by
    pi[ln 8 pi + gamma - 2 ln(Gamma(1/4)/Gamma(3/4))];
    ``finite_difference``: central difference of L(s) at s = 1, h = 1e-3.
    """
    ln2 = math.log(2.0)
    if method == "stieltjes":
        g3 = stieltjes(1, 0.75, spec)
        g1 = stieltjes(1, 0.25, spec)
        return combine([g3, g1], [0.25, -0.25], const=-0.5 * math.pi * ln2)
    if method == "closed_form":
        diff = math.pi * (math.log(8.0 * math.pi) + EULER_GAMMA
                          - 2.0 * (math.lgamma(0.25) - math.lgamma(0.75)))
        return Eval(0.25 * (-2.0 * math.pi * ln2 + diff), 1e-15, 0)
    if method == "finite_difference":
        h = 1e-3
        up = dirichlet_L4(1.0 + h, spec=spec)
        dn = dirichlet_L4(1.0 - h, spec=spec)
        value = (up.value - dn.value) / (2.0 * h)
        # truncation ~ h^2 L'''/6; L''' at 1 is of order 1
        err = (up.err_est + dn.err_est) / (2.0 * h) + h * h
        return Eval(value, err, up.work + dn.work)
    raise DomainError(f"unknown method {method!r}")


def L4_odd_closed(m: int, variant: str = "corrected") -> float:
    """Odd values of the mod-4 L-function from Bernoulli polynomials.

    ``corrected``: (-1)^(m+1) (2 pi)^(2m+1) B_(2m+1)(1/4) / (2 (2m+1)!);
    ``printed``: the same without the (-1)^m factor, right only for even m.
    """
    if int(m) != m or m < 0:
        raise DomainError("m must be a non-negative integer")
    n = 2 * int(m) + 1
    value = -(2 * math.pi) ** n * bernoulli_poly(n, 0.25) / (2 * math.factorial(n))
    if variant == "corrected":
        return (-1) ** int(m) * value
    if variant == "printed":
        return value
    raise DomainError(f"unknown variant {variant!r}")
