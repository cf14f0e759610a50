"""Backend selection for the long-series kernels.

The compiled extension is preferred.  Setting the environment variable
``ADDISON_PURE_PYTHON=1`` (or failing to build the extension) selects the
numpy implementation instead.  Both expose the same functions.
"""

import os

from . import _accel_py

POWLOG = _accel_py.POWLOG
LOGRATIO = _accel_py.LOGRATIO
XLOG = _accel_py.XLOG

_NAMES = ("stencil_sum", "lerch_partial", "trig_log_sum", "rational_sum",
          "alt_fraclog_sum", "harmonic_dirichlet")


def _load_compiled():
    if os.environ.get("ADDISON_PURE_PYTHON", "").strip() not in ("", "0"):
        return None
    try:
        from . import _accel_c
    except ImportError:
        return None
    return _accel_c


_compiled = _load_compiled()
BACKEND = "cython" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _accel_py


def backends():
    """Return the available backend modules keyed by name."""
    out = {"python": _accel_py}
    if _compiled is not None:
        out["cython"] = _compiled
    else:
        try:
            from . import _accel_c
            out["cython"] = _accel_c
        except ImportError:
            pass
    return out


stencil_sum = _impl.stencil_sum
lerch_partial = _impl.lerch_partial
trig_log_sum = _impl.trig_log_sum
rational_sum = _impl.rational_sum
alt_fraclog_sum = _impl.alt_fraclog_sum
harmonic_dirichlet = _impl.harmonic_dirichlet
