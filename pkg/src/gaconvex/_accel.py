"""Backend selection for the compiled kernels.

Set ``GACONVEX_DISABLE_NUMBA=1`` to force the pure-numpy path even when numba
is importable. The choice is made once, at import time.
"""

import os
import types

try:
    import numba
except ImportError:  # pragma: no cover - numba is an optional extra
    numba = None

HAVE_NUMBA = numba is not None
DISABLED = os.environ.get("GACONVEX_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")
USE_NUMBA = HAVE_NUMBA and not DISABLED


def maybe_njit(fn, **jitted):
    """Compile ``fn`` with numba if it is installed, else return None.

    ``jitted`` rebinds global names used by ``fn`` to already-compiled
    helpers, so the plain-Python original keeps calling the plain helpers.
    Compilation happens regardless of the env flag so the benchmark can time
    both paths in one process; the flag only controls dispatch.
    """
    if not HAVE_NUMBA:
        return None
    if jitted:
        env = dict(fn.__globals__)
        env.update(jitted)
        fn = types.FunctionType(fn.__code__, env, fn.__name__, fn.__defaults__, fn.__closure__)
    return numba.njit(cache=True, nogil=True)(fn)


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
