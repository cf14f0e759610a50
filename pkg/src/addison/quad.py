"""Deterministic quadrature for finite, semi-infinite and P1-weighted integrals.

Integrands are vectorised callables: ``f(x)`` receives a 1-D float array and
returns an array of the same length (a scalar is broadcast).  Cells are
summed in ascending order with ``math.fsum`` so results are reproducible.

P1-weighted integrals are split at the integers, where P1 is linear, and the
remainder beyond the last cell is obtained from the asymptotic expansion

    int_X^inf f P1 dx = -sum_{m>=1} B_{2m}/(2m)! f^{(2m-2)}(X),

valid for integer X.  For ``f = g(x) e^{i theta x}`` with smooth ``g`` the same
expansion is regrouped by derivatives of ``g``, which keeps it convergent for
|theta| < 2 pi.  Derivatives of ``g`` at X come from a wide finite-difference
stencil, which is accurate because ``g`` varies on the scale of X.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .result import DomainError, Eval, EvaluationError, TruncationError

TAIL_MODES = ("euler_maclaurin", "bound_by_abs", "aitken")


@dataclass(frozen=True)
class QuadSpec:
    tol: float = 1e-10
    nodes_per_interval: int = 16
    max_intervals: int = 100_000
    tail_mode: str = "euler_maclaurin"

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError("tol must be positive")
        if self.nodes_per_interval < 4:
            raise DomainError("nodes_per_interval must be at least 4")
        if self.max_intervals < 8:
            raise DomainError("max_intervals must be at least 8")
        if self.tail_mode not in TAIL_MODES:
            raise DomainError(f"tail_mode must be one of {TAIL_MODES}")

    def with_tol(self, tol: float) -> "QuadSpec":
        return QuadSpec(tol, self.nodes_per_interval, self.max_intervals, self.tail_mode)


DEFAULT = QuadSpec()


@lru_cache(maxsize=None)
def _rule(n: int):
    t, w = np.polynomial.legendre.leggauss(n)
    return (t + 1.0) / 2.0, w / 2.0


def _sample(f, x):
    """Evaluate ``f`` on the flat array ``x`` and return shape (C, len(x))."""
    y = np.asarray(f(x))
    if y.ndim == 0 or y.shape[-1] != x.shape[0]:
        y = np.broadcast_to(y[..., None] if y.ndim else y, y.shape + x.shape if y.ndim == 0 else y.shape[:-1] + x.shape)
    y = y.reshape(-1, x.shape[0])
    if not np.all(np.isfinite(y)):
        bad = np.nonzero(~np.all(np.isfinite(y), axis=0))[0][0]
        raise EvaluationError("non-finite integrand value", float(x[bad]))
    return y


def _gauss(f, lo, hi, n):
    u, w = _rule(n)
    width = hi - lo
    x = (lo[:, None] + width[:, None] * u[None, :]).ravel()
    y = _sample(f, x).reshape(-1, lo.shape[0], n)
    return (y * w).sum(axis=-1) * width


def _cells(f, lo, hi, n):
    """Gauss rule on each cell checked against the two-halves rule.

    Returns (values (C, ncell), error estimates (ncell,)).
    """
    whole = _gauss(f, lo, hi, n)
    mid = 0.5 * (lo + hi)
    halves = _gauss(f, np.concatenate([lo, mid]), np.concatenate([mid, hi]), n)
    k = lo.shape[0]
    halves = halves[:, :k] + halves[:, k:]
    err = np.max(np.abs(whole - halves), axis=0)
    return halves, err


def _adaptive(f, lo, hi, tol, n, budget):
    """Globally adaptive bisection on [lo, hi]; returns (values, err, pieces)."""
    val, err = _cells(f, np.array([lo]), np.array([hi]), n)
    heap = [(-err[0], lo, hi, val[:, 0])]
    pieces = 1
    total_err = err[0]
    while total_err > tol and pieces < budget:
        e, a, b, _ = heapq.heappop(heap)
        m = 0.5 * (a + b)
        if not (a < m < b):
            heapq.heappush(heap, (e, a, b, _))
            break
        v2, e2 = _cells(f, np.array([a, m]), np.array([m, b]), n)
        for i, (x0, x1) in enumerate(((a, m), (m, b))):
            heapq.heappush(heap, (-e2[i], x0, x1, v2[:, i]))
        pieces += 1
        total_err = sum(-item[0] for item in heap)
    items = sorted(heap, key=lambda item: item[1])
    vals = np.array([[math.fsum(col) for col in zip(*(it[3] for it in items))]]).reshape(-1)
    return vals, total_err, pieces


def _refined_cells(f, lo, hi, n, tol_cell, budget):
    vals, errs = _cells(f, lo, hi, n)
    work = lo.shape[0]
    for i in np.nonzero(errs > tol_cell)[0]:
        v, e, p = _adaptive(f, lo[i], hi[i], tol_cell, n, budget)
        vals[:, i] = v
        errs[i] = e
        work += p
    return vals, errs, work


def _fsum_rows(vals):
    return np.array([math.fsum(row) for row in vals])


def _as_result(vals, err, work, info=None):
    if vals.shape[0] == 1:
        return Eval(float(vals[0]), float(err), int(work), info or {})
    return Eval(vals.copy(), float(err), int(work), info or {})


def _check_interval(a, b=None):
    if not math.isfinite(a) or (b is not None and not math.isfinite(b)):
        raise DomainError("integration limits must be finite")
    if b is not None and not a < b:
        raise DomainError(f"need a < b, got a={a!r}, b={b!r}")


# ---------------------------------------------------------------- finite

def integrate_finite(f, a: float, b: float, spec: QuadSpec = DEFAULT) -> Eval:
    """Integral of ``f`` over [a, b] by globally adaptive Gauss-Legendre.

    Integrable endpoint singularities (logarithmic, inverse square root) are
    resolved by repeated bisection; the integrand is never sampled at a or b.
    """
    _check_interval(a, b)
    vals, err, pieces = _adaptive(f, float(a), float(b), spec.tol,
                                  spec.nodes_per_interval, spec.max_intervals)
    if err > spec.tol:
        raise TruncationError(f"finite integral not converged (err {err:.3g})",
                              _as_result(vals, err, pieces))
    return _as_result(vals, err, pieces)


# ---------------------------------------------------------- semi-infinite

def integrate_semi_inf(f, a: float, spec: QuadSpec = DEFAULT) -> Eval:
    """Integral of a decaying ``f`` over [a, inf).

    Cells start at unit width and double, so power-law tails need only
    O(log) cells.  Once consecutive cell integrals shrink geometrically the
    remaining tail is estimated from their ratio; the error estimate is the
    change of the tail-corrected value between successive cells.
    """
    _check_interval(a)
    n = spec.nodes_per_interval
    lo, width = float(a), 1.0
    partial = []
    errs = []
    work = 0
    prev_value = None
    tail = np.zeros(1)
    for cell in range(spec.max_intervals):
        hi = lo + width
        v, e, w = _refined_cells(f, np.array([lo]), np.array([hi]), n,
                                 spec.tol / 64, spec.max_intervals)
        partial.append(v[:, 0])
        errs.append(e[0])
        work += w
        lo, width = hi, 2.0 * width
        s = _fsum_rows(np.array(partial).T)
        tail = np.zeros_like(s)
        if len(partial) >= 2:
            c1, c0 = partial[-1], partial[-2]
            with np.errstate(divide="ignore", invalid="ignore"):
                r = np.where(c0 != 0, c1 / c0, 0.0)
            geometric = (r > 0) & (r < 0.9)
            tail = np.where(geometric, c1 * r / (1.0 - np.where(geometric, r, 0.0)), 0.0)
            unresolved = ~geometric & (np.abs(c1) > spec.tol / 16)
        else:
            unresolved = np.ones_like(s, dtype=bool)
        value = s + tail
        if prev_value is not None and cell >= 3 and not np.any(unresolved):
            delta = float(np.max(np.abs(value - prev_value)))
            err = delta + math.fsum(errs)
            if err <= spec.tol:
                return _as_result(value, err, work, {"upper": lo})
        prev_value = value
    raise TruncationError("semi-infinite integral not converged",
                          _as_result(prev_value, float("inf"), work))


# --------------------------------------------------- asymptotic tail series

@lru_cache(maxsize=None)
def _fd_weights(order: int, half: int):
    """Fornberg weights for derivatives 0..order on the offsets -half..half."""
    z = np.arange(-half, half + 1, dtype=float)
    npts = z.shape[0]
    c = np.zeros((npts, order + 1))
    c1, c4 = 1.0, z[0]
    c[0, 0] = 1.0
    for i in range(1, npts):
        mn = min(i, order)
        c2 = 1.0
        c5, c4 = c4, z[i]
        for j in range(i):
            c3 = z[i] - z[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i, k] = c1 * (k * c[i - 1, k - 1] - c5 * c[i - 1, k]) / c2
                c[i, 0] = -c1 * c5 * c[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                c[j, k] = (c4 * c[j, k] - k * c[j, k - 1]) / c3
            c[j, 0] = c4 * c[j, 0] / c3
        c1 = c2
    return c.T.copy()


_TAIL_ORDER = 8
_HALF = 6


def _derivatives(g, X, h):
    """Derivatives 0.._TAIL_ORDER of g at X, shape (order+1, C), plus noise level."""
    offs = X + h * np.arange(-_HALF, _HALF + 1, dtype=float)
    y = np.asarray(g(offs))
    y = np.broadcast_to(y, offs.shape) if y.ndim == 0 else y.reshape(-1, offs.shape[0])
    if y.ndim == 1:
        y = y[None, :]
    if not np.all(np.isfinite(y)):
        raise EvaluationError("non-finite integrand value in tail stencil", float(X))
    w = _fd_weights(_TAIL_ORDER, _HALF)
    scale = h ** -np.arange(_TAIL_ORDER + 1, dtype=float)
    d = (w @ y.T) * scale[:, None]
    noise = 1e-16 * np.max(np.abs(y)) * np.abs(w).sum(axis=1) * scale
    return d, noise


def _even_zeta(m: int) -> float:
    exact = {1: math.pi ** 2 / 6, 2: math.pi ** 4 / 90, 3: math.pi ** 6 / 945,
             4: math.pi ** 8 / 9450}
    if m in exact:
        return exact[m]
    p = 2 * m
    return math.fsum(n ** -p for n in range(1, 21)) + 20.5 ** (1 - p) / (p - 1)


@lru_cache(maxsize=256)
def _p1_tail_coeffs(theta: float):
    """c_q(theta) = sum_m B_2m/(2m)! C(2m-2, q) (i theta)^(2m-2-q), q=0..order."""
    if abs(theta) >= 2 * math.pi:
        raise DomainError("P1 tail expansion needs |theta| < 2 pi")
    out = np.zeros(_TAIL_ORDER + 1, dtype=complex)
    if theta == 0:
        for q in range(0, _TAIL_ORDER + 1, 2):
            m = q // 2 + 1
            out[q] = 2.0 * (-1) ** (m + 1) * _even_zeta(m) / (2 * math.pi) ** (2 * m)
        return out
    r = theta / (2 * math.pi)
    for q in range(_TAIL_ORDER + 1):
        acc = 0j
        # (i theta)^(2m-2-q) / (2 pi)^2m written via r^2m to avoid overflow
        scale = theta ** (-2 - q)
        for m in range(max(1, (q + 3) // 2), 4000):
            phase = 1j ** ((2 * m - 2 - q) % 4)
            term = (2.0 * (-1) ** (m + 1) * _even_zeta(m) * math.comb(2 * m - 2, q)
                    * r ** (2 * m) * scale * phase)
            acc += term
            if abs(term) < 1e-18 * max(abs(acc), 1e-300) and m > q + 4:
                break
        out[q] = acc
    return out


def _osc_tail_coeffs(theta: float):
    t = 1j * theta
    return np.array([-((-1) ** q) / t ** (q + 1) for q in range(_TAIL_ORDER + 1)])


def _tail(g, X, lower, coeffs, theta, part):
    """part(e^{i theta X} sum_q coeffs[q] g^{(q)}(X)) and an error estimate."""
    h = max(X - lower, 1.0) / (4 * _HALF)
    d, noise = _derivatives(g, X, h)
    # a second, finer stencil exposes finite-difference truncation error
    d_fine, noise_fine = _derivatives(g, X, 0.5 * h)
    fd_gap = float(np.sum(np.abs(coeffs[:, None] * (d - d_fine))))
    d, noise = d_fine, np.maximum(noise, noise_fine)
    terms = coeffs[:, None] * d
    phase = np.exp(1j * theta * X) if theta else 1.0
    total = part(phase * terms.sum(axis=0))
    mags = np.abs(terms)
    nz = [q for q in range(terms.shape[0]) if np.any(coeffs[q] != 0)]
    trunc = np.max(mags[nz[-2:]], axis=0).max() if len(nz) >= 2 else 0.0
    fd_noise = float(np.sum(np.abs(coeffs) * noise))
    return np.atleast_1d(np.real(total)), float(trunc + fd_noise + fd_gap)


def _real(z):
    return np.real(z)


def _imag(z):
    return np.imag(z)


_PARTS = {"re": _real, "im": _imag}


# ------------------------------------------------------------ P1 weighted

def _p1_engine(g, theta, part, a, spec, lower_hint=None):
    _check_interval(a)
    take = _PARTS[part]
    n = spec.nodes_per_interval
    if theta:
        def f(x):
            return take(np.asarray(g(x)) * np.exp(1j * theta * x)) * (x - np.floor(x) - 0.5)
    else:
        def f(x):
            return np.real(np.asarray(g(x))) * (x - np.floor(x) - 0.5)
    coeffs = -_p1_tail_coeffs(float(theta)) if spec.tail_mode == "euler_maclaurin" else None

    a = float(a)
    n0 = math.ceil(a)
    vals, errs, work = [], [], 0
    if n0 > a:
        v, e, w = _refined_cells(f, np.array([a]), np.array([float(n0)]), n,
                                 spec.tol / 64, spec.max_intervals)
        vals.append(v)
        errs.append(e)
        work += w
    lower = a if lower_hint is None else lower_hint
    ncell = max(32, math.ceil(12.0 / (2 * math.pi - abs(theta))))
    done = 0
    history = []
    errors = []
    while True:
        lo = np.arange(n0 + done, n0 + ncell, dtype=float)
        v, e, w = _refined_cells(f, lo, lo + 1.0, n, spec.tol / 64, spec.max_intervals)
        vals.append(v)
        errs.append(e)
        work += w
        done = ncell
        X = float(n0 + ncell)
        s = _fsum_rows(np.concatenate(vals, axis=1))
        quad_err = float(np.sum(np.concatenate(errs)))
        if spec.tail_mode == "euler_maclaurin":
            tail, tail_err = _tail(g, X, lower, coeffs, theta, take)
            value = s + tail
        elif spec.tail_mode == "bound_by_abs":
            majorant = integrate_semi_inf(lambda x: np.abs(np.asarray(g(x))), X,
                                          spec.with_tol(spec.tol / 4))
            value = s
            tail_err = 0.5 * float(np.max(np.atleast_1d(majorant.value))) + majorant.err_est
        else:
            history.append(s)
            value, tail_err = _aitken(history)
        err = quad_err + tail_err
        if err <= spec.tol:
            return value, err, work
        errors.append(err)
        stalled = (spec.tail_mode == "euler_maclaurin" and len(errors) >= 4
                   and errors[-1] > 0.5 * errors[-3])
        if stalled or 2 * ncell > spec.max_intervals:
            why = "error estimate stalled" if stalled else f"not converged within {spec.max_intervals} cells"
            raise TruncationError(f"P1 integral {why} (err {err:.3g})",
                                  _as_result(value, err, work))
        ncell *= 2


def _aitken(history):
    if len(history) < 3:
        return history[-1], float("inf")
    s0, s1, s2 = history[-3:]
    d1, d2 = s1 - s0, s2 - s1
    den = d2 - d1
    with np.errstate(divide="ignore", invalid="ignore"):
        acc = np.where(den != 0, s2 - d2 * d2 / np.where(den != 0, den, 1.0), s2)
    if len(history) >= 4:
        t0, t1, t2 = history[-4:-1]
        e1, e2 = t1 - t0, t2 - t1
        dd = e2 - e1
        prev = np.where(dd != 0, t2 - e2 * e2 / np.where(dd != 0, dd, 1.0), t2)
    else:
        prev = s2
    return acc, float(np.max(np.abs(acc - prev)))


def integrate_p1(f, a: float, spec: QuadSpec = DEFAULT) -> Eval:
    """Integral of ``f(x) P1(x)`` over [a, inf) for smooth decaying ``f``.

    ``f`` may return a stack of components (shape (C, len(x))); the result
    value is then an array and ``err_est`` is the worst component error.
    """
    value, err, work = _p1_engine(f, 0.0, "re", a, spec)
    return _as_result(value, err, work)


def p1_cell(f, n: int, spec: QuadSpec = DEFAULT) -> Eval:
    """Integral of ``f(x) P1(x)`` over the single cell [n, n+1], by the cell rule
    used inside ``integrate_p1``."""
    if int(n) != n:
        raise DomainError("cells start at integers")

    def g(x):
        return np.real(np.asarray(f(x))) * (x - np.floor(x) - 0.5)

    lo = np.array([float(n)])
    vals, errs, work = _refined_cells(g, lo, lo + 1.0, spec.nodes_per_interval,
                                      spec.tol / 64, spec.max_intervals)
    return _as_result(vals[:, 0], errs[0], work)


def integrate_p1_trig(g, theta: float, a: float, part: str = "re",
                      spec: QuadSpec = DEFAULT) -> Eval:
    """Integral of ``part(g(x) e^{i theta x}) P1(x)`` over [a, inf).

    ``g`` is smooth, slowly varying and may be complex; |theta| < 2 pi.
    """
    if part not in _PARTS:
        raise DomainError("part must be 're' or 'im'")
    value, err, work = _p1_engine(g, float(theta), part, a, spec)
    return _as_result(value, err, work)


def integrate_trig(g, theta: float, a: float, part: str = "re",
                   spec: QuadSpec = DEFAULT) -> Eval:
    """Integral of ``part(g(x) e^{i theta x})`` over [a, inf) for theta != 0.

    Unit cells up to X, then the integration-by-parts expansion
    -e^{i theta X} sum_q (-1)^q g^{(q)}(X) / (i theta)^{q+1}.
    """
    _check_interval(a)
    if theta == 0:
        raise DomainError("integrate_trig needs theta != 0")
    if part not in _PARTS:
        raise DomainError("part must be 're' or 'im'")
    take = _PARTS[part]
    theta = float(theta)

    def f(x):
        return take(np.asarray(g(x)) * np.exp(1j * theta * x))

    coeffs = _osc_tail_coeffs(theta)
    n = spec.nodes_per_interval
    a = float(a)
    width = min(1.0, math.pi / abs(theta))
    ncell = max(32, math.ceil(4.0 * _TAIL_ORDER / (abs(theta) * width)))
    done, vals, errs, work = 0, [], [], 0
    while True:
        lo = a + width * np.arange(done, ncell, dtype=float)
        v, e, w = _refined_cells(f, lo, lo + width, n, spec.tol / 64, spec.max_intervals)
        vals.append(v)
        errs.append(e)
        work += w
        done = ncell
        X = a + width * ncell
        s = _fsum_rows(np.concatenate(vals, axis=1))
        tail, tail_err = _tail(g, X, a, coeffs, theta, take)
        value = s + tail
        err = float(np.sum(np.concatenate(errs))) + tail_err
        if err <= spec.tol:
            return _as_result(value, err, work)
        if 2 * ncell > spec.max_intervals:
            raise TruncationError("oscillatory integral not converged",
                                  _as_result(value, err, work))
        ncell *= 2
