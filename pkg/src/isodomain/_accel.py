"""Backend selection for the hot kernels.

Set ``PERIM_NUMBA=0`` to force the pure-numpy path (numba is then never
imported). ``PERIM_THREADS`` caps numba's thread pool.
"""
import os

_flag = os.environ.get("PERIM_NUMBA", "1").strip().lower()
USE_NUMBA = _flag not in ("0", "false", "no", "off")

if USE_NUMBA:
    try:
        import numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False

if USE_NUMBA:
    njit = numba.njit(cache=True, nogil=True)
    _threads = os.environ.get("PERIM_THREADS")
    if _threads:
        numba.set_num_threads(max(1, min(int(_threads), numba.config.NUMBA_NUM_THREADS)))
else:

    def njit(fn):
        return fn


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
