"""Numba dispatch.

Kernels are written once in plain Python over numpy arrays.  When numba is
importable and ``COREX_DISABLE_NUMBA`` is unset, the hot kernels are compiled
with ``njit``; otherwise callers take the vectorised numpy path instead.
"""
import os

_FALSY = {"", "0", "false", "no", "off"}

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get("COREX_DISABLE_NUMBA", "").strip().lower() in _FALSY

numba_options = {
    "nogil": True,
    "cache": True,
    "boundscheck": False,
}


def njit(func):
    """Compile ``func`` with numba if available, else return it untouched."""
    if not HAVE_NUMBA:
        return func
    return numba.njit(**numba_options)(func)
