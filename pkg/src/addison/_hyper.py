"""Truncated generalized hypergeometric series with ratio-test tail bounds."""

import math

from .result import DomainError, Eval, TruncationError


def pfq(a_list, b_list, x, tol=1e-17, max_terms=200_000):
    """Sum of prod (a_i)_n / prod (b_j)_n * x^n / n! until the tail bound < tol.

    The tail after term n is bounded by |t_{n+1}| / (1 - rho), with rho an
    upper estimate of all later term ratios (|x| when p = q + 1, else the
    current ratio once it is decreasing).
    """
    for b in b_list:
        if b <= 0 and float(b).is_integer():
            raise DomainError("lower parameters must not be non-positive integers")
    p, q = len(a_list), len(b_list)
    if p > q + 1 or (p == q + 1 and abs(x) >= 1):
        raise DomainError("series diverges for these parameters")
    term = 1.0
    terms = [term]
    for n in range(max_terms):
        num = x
        for a in a_list:
            num *= a + n
        den = n + 1.0
        for b in b_list:
            den *= b + n
        ratio = num / den
        term *= ratio
        terms.append(term)
        if term == 0.0:
            return Eval(math.fsum(terms), 0.0, n + 1)
        rho = abs(ratio)
        if p == q + 1:
            rho = max(rho, abs(x))
        if rho < 1 and n > 2:
            bound = abs(term) * rho / (1.0 - rho)
            if bound <= tol * max(1.0, abs(math.fsum(terms))):
                return Eval(math.fsum(terms), bound, n + 1)
    raise TruncationError("hypergeometric series not converged",
                          Eval(math.fsum(terms), abs(term), max_terms))


def hyp2f1(a, b, c, x, tol=1e-17):
    return pfq([a, b], [c], x, tol)
