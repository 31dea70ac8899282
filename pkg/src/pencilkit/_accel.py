"""Numba switch.

Set ``PENCILKIT_NO_NUMBA=1`` to route every GF(p) kernel through its
pure-numpy implementation. The flag is read once, at import.
"""

from __future__ import annotations

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_DISABLED = os.environ.get("PENCILKIT_NO_NUMBA", "").strip() not in ("", "0")
NUMBA_AVAILABLE = numba is not None
USE_NUMBA = NUMBA_AVAILABLE and not NUMBA_DISABLED

NUMBA_OPTS = {"cache": True, "nogil": True}


def njit(func):
    if numba is None:
        return func
    return numba.njit(**NUMBA_OPTS)(func)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
