"""Kernel backend selection.

The two numeric hot spots (the coordinate-descent loop and the simplex
pivoting core) ship in two variants: a numba ``@njit`` build and a pure
numpy fallback.  Set ``COMPSUM_NUMBA=0`` to force the numpy path; the
fallback is also selected automatically when numba is not importable.
"""

import os


def _env_wants_numba() -> bool:
    value = os.environ.get("COMPSUM_NUMBA", "1").strip().lower()
    return value not in ("0", "false", "off", "no")


try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only on numba-less installs
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        """No-op decorator standing in for numba.njit."""
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


USE_NUMBA = HAS_NUMBA and _env_wants_numba()
