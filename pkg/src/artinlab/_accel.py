"""Backend selection for the numeric kernels.

Set ``ARTINLAB_PURE_NUMPY=1`` to skip numba and run every kernel through its
vectorised numpy implementation. The choice is made once, at import time.
"""

from __future__ import annotations

import os

_FLAG = os.environ.get("ARTINLAB_PURE_NUMPY", "").strip().lower()
PURE_NUMPY = _FLAG not in ("", "0", "false", "no")

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

HAVE_NUMBA = _numba is not None
USE_NUMBA = HAVE_NUMBA and not PURE_NUMPY


def njit(func):
    """``numba.njit(cache=True)`` when numba is available, else the plain function."""
    if not HAVE_NUMBA:
        return func
    return _numba.njit(cache=True)(func)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
