"""Numba acceleration shim.

Hot kernels are decorated with ``@njit``. Setting the environment variable
``EFGSEG_NO_NUMBA=1`` (before import) disables JIT compilation and runs the
same kernels as plain Python over numpy arrays, which is useful for
debugging and for benchmarking the compiled speedup
(see benchmarks/compare_numba.py).
"""

import os

_DISABLED = os.environ.get("EFGSEG_NO_NUMBA", "").strip().lower() in ("1", "true", "yes")

if not _DISABLED:
    try:
        from numba import njit

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a hard dep, but keep the fallback honest
        NUMBA_ENABLED = False
else:
    NUMBA_ENABLED = False

if not NUMBA_ENABLED:

    def njit(*args, **kwargs):  # noqa: D103 - mirror numba's decorator shape
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap
