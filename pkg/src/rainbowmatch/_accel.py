"""Optional numba acceleration.

Kernels are written in the numba-compatible subset of Python. When numba is
importable and ``RAINBOWMATCH_NO_NUMBA`` is unset (or ``0``), the compiled
versions are used; otherwise the plain functions run over numpy arrays.
"""

import os

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    njit = None
    HAS_NUMBA = False

ENV_FLAG = "RAINBOWMATCH_NO_NUMBA"


def numba_requested() -> bool:
    return os.environ.get(ENV_FLAG, "0").strip().lower() in ("", "0", "false", "no")


USE_NUMBA = HAS_NUMBA and numba_requested()


def jit_or_none(func, **kwargs):
    """Return a numba-compiled ``func``, or None when numba is unavailable."""
    if not HAS_NUMBA:
        return None
    kwargs.setdefault("cache", True)
    return njit(**kwargs)(func)
