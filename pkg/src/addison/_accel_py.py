"""Vectorised numpy implementations of the long-series kernels.

These mirror ``_accel_c`` exactly in meaning; they are used when the compiled
extension is unavailable or when ``ADDISON_PURE_PYTHON`` is set.
"""

import numpy as np

CHUNK = 1 << 18

POWLOG = 0
LOGRATIO = 1
XLOG = 2


def _chunks(n0, n1):
    start = n0
    while start < n1:
        stop = min(n1, start + CHUNK)
        yield np.arange(start, stop, dtype=np.float64)
        start = stop


def _family(kind, p0, p1, x):
    if kind == POWLOG:
        out = x ** (-p0)
        p = int(p1)
        if p:
            out = out * np.log(x) ** p
        return out
    if kind == LOGRATIO:
        return np.log1p((p0 - 1.0) / (x + 1.0))
    if kind == XLOG:
        out = np.zeros_like(x)
        nz = x > 0
        out[nz] = x[nz] * np.log1p(1.0 / x[nz])
        return out
    raise ValueError(f"unknown stencil family {kind}")


def stencil_sum(kind, p0, p1, b, a, offsets, weights, j0, j1):
    """Sum over j in [j0, j1) of sum_m w_m f(b*(j+theta_m) + a)."""
    offsets = np.asarray(offsets, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)
    total = 0.0
    for j in _chunks(j0, j1):
        acc = np.zeros_like(j)
        for th, w in zip(offsets, weights):
            acc += w * _family(kind, p0, p1, b * (j + th) + a)
        total += float(np.sum(acc))
    return total


def lerch_partial(z, s, a, n0, n1):
    """Sum over n in [n0, n1) of z**n * (n+a)**(-s)."""
    total = 0.0
    start = n0
    while start < n1:
        stop = min(n1, start + CHUNK)
        n = np.arange(start, stop, dtype=np.int64)
        terms = np.power(z, n.astype(np.float64)) if z >= 0 else np.power(z, n)
        total += float(np.sum(terms * (n + a) ** (-s)))
        start = stop
    return total


def trig_log_sum(theta, power, logpow, use_sin, n0, n1):
    """Sum over n in [n0, n1) of ln(n)**logpow * trig(n*theta) / n**power."""
    total = 0.0
    for n in _chunks(n0, n1):
        trig = np.sin(n * theta) if use_sin else np.cos(n * theta)
        terms = trig * n ** (-power)
        if logpow:
            terms = terms * np.log(n) ** logpow
        total += float(np.sum(terms))
    return total


def rational_sum(alphas, betas, scale, i0, i1):
    """Sum over i in [i0, i1) of scale / prod_r (alpha_r*i + beta_r)."""
    total = 0.0
    for i in _chunks(i0, i1):
        den = np.ones_like(i)
        for al, be in zip(alphas, betas):
            den *= al * i + be
        total += float(np.sum(scale / den))
    return total


def alt_fraclog_sum(j0, j1):
    """Sum over j in [j0, j1) of (-1)**j * frac(log2 j) / j."""
    total = 0.0
    for j in _chunks(j0, j1):
        lg = np.log2(j)
        frac = lg - np.floor(lg)
        sign = np.where(j % 2 == 0, 1.0, -1.0)
        total += float(np.sum(sign * frac / j))
    return total


def harmonic_dirichlet(s, a, n0, n1, h0):
    """Sum over n in [n0, n1) of H_n/(n+a)**s given H_{n0-1} = h0.

    Returns ``(sum, H_{n1-1})``.
    """
    total = 0.0
    h = h0
    for n in _chunks(n0, n1):
        hn = h + np.cumsum(1.0 / n)
        total += float(np.sum(hn * (n + a) ** (-s)))
        h = float(hn[-1])
    return total, h
