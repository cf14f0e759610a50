# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the long-series kernels in ``_accel_py``.

All loops accumulate with Neumaier compensation in ascending index order.
"""

from libc.math cimport pow, log, log1p, sin, cos, floor, fabs, log2

cdef int POWLOG = 0
cdef int LOGRATIO = 1
cdef int XLOG = 2


cdef inline void _add(double *acc, double *comp, double v) noexcept nogil:
    cdef double t = acc[0] + v
    if fabs(acc[0]) >= fabs(v):
        comp[0] += (acc[0] - t) + v
    else:
        comp[0] += (v - t) + acc[0]
    acc[0] = t


cdef inline double _ipow(double x, int n) noexcept nogil:
    cdef double r = 1.0
    while n > 0:
        if n & 1:
            r *= x
        x *= x
        n >>= 1
    return r


cdef inline double _negpow(double x, double s, int si) noexcept nogil:
    # x**(-s), with a multiply-only path for small integer s
    if si >= 0:
        return 1.0 / _ipow(x, si)
    return pow(x, -s)


cdef inline int _small_int(double s) noexcept nogil:
    if s >= 0.0 and s <= 16.0 and s == floor(s):
        return <int>s
    return -1


cdef inline double _family(int kind, double p0, int si, int p, double x) noexcept nogil:
    cdef double out
    if kind == POWLOG:
        out = _negpow(x, p0, si)
        if p:
            out *= _ipow(log(x), p)
        return out
    if kind == LOGRATIO:
        return log1p((p0 - 1.0) / (x + 1.0))
    if x > 0.0:
        return x * log1p(1.0 / x)
    return 0.0


def stencil_sum(int kind, double p0, double p1, double b, double a,
                offsets, weights, long j0, long j1):
    if kind < 0 or kind > 2:
        raise ValueError(f"unknown stencil family {kind}")
    cdef double[::1] th = _as_array(offsets)
    cdef double[::1] w = _as_array(weights)
    cdef Py_ssize_t m, nm = th.shape[0]
    cdef long j
    cdef double acc = 0.0, comp = 0.0, inner
    cdef int p = <int>p1
    cdef int si = _small_int(p0)
    with nogil:
        for j in range(j0, j1):
            inner = 0.0
            for m in range(nm):
                inner += w[m] * _family(kind, p0, si, p, b * (j + th[m]) + a)
            _add(&acc, &comp, inner)
    return acc + comp


def lerch_partial(double z, double s, double a, long n0, long n1):
    cdef long n
    cdef double acc = 0.0, comp = 0.0
    cdef int si = _small_int(s)
    with nogil:
        for n in range(n0, n1):
            _add(&acc, &comp, pow(z, <double>n) * _negpow(n + a, s, si))
    return acc + comp


def trig_log_sum(double theta, double power, int logpow, bint use_sin, long n0, long n1):
    cdef long n
    cdef double acc = 0.0, comp = 0.0, t, x
    cdef int si = _small_int(power)
    with nogil:
        for n in range(n0, n1):
            x = <double>n
            t = sin(x * theta) if use_sin else cos(x * theta)
            t *= _negpow(x, power, si)
            if logpow:
                t *= _ipow(log(x), logpow)
            _add(&acc, &comp, t)
    return acc + comp


def rational_sum(alphas, betas, double scale, long i0, long i1):
    cdef double[::1] al = _as_array(alphas)
    cdef double[::1] be = _as_array(betas)
    cdef Py_ssize_t r, nr = al.shape[0]
    cdef long i
    cdef double acc = 0.0, comp = 0.0, den
    with nogil:
        for i in range(i0, i1):
            den = 1.0
            for r in range(nr):
                den *= al[r] * i + be[r]
            _add(&acc, &comp, scale / den)
    return acc + comp


def alt_fraclog_sum(long j0, long j1):
    cdef long j
    cdef double acc = 0.0, comp = 0.0, lg, x
    with nogil:
        for j in range(j0, j1):
            x = <double>j
            lg = log2(x)
            lg -= floor(lg)
            _add(&acc, &comp, (lg if j % 2 == 0 else -lg) / x)
    return acc + comp


def harmonic_dirichlet(double s, double a, long n0, long n1, double h0):
    cdef long n
    cdef double acc = 0.0, comp = 0.0
    cdef double h = h0, hc = 0.0, y, t
    cdef int si = _small_int(s)
    with nogil:
        for n in range(n0, n1):
            # compensated running harmonic number
            y = 1.0 / n - hc
            t = h + y
            hc = (t - h) - y
            h = t
            _add(&acc, &comp, h * _negpow(n + a, s, si))
    return acc + comp, h


cdef double[::1] _as_array(values):
    import array
    return array.array("d", [float(v) for v in values])
