"""Selects the enumeration kernel at import time.

The compiled extension is preferred; the pure-Python kernel is a drop-in
fallback.  PICOUNT_BACKEND=python forces the fallback, PICOUNT_BACKEND=c
makes a missing extension a hard error.
"""

import os

from . import _pykernel

_kernel = _pykernel
_requested = os.environ.get("PICOUNT_BACKEND", "auto")
if _requested not in ("auto", "c", "python"):
    raise RuntimeError(f"PICOUNT_BACKEND must be auto, c or python, not {_requested!r}")
if _requested != "python":
    try:
        from . import _kernel  # type: ignore[no-redef]
    except ImportError:
        if _requested == "c":
            raise RuntimeError(
                "PICOUNT_BACKEND=c but the compiled extension is not available"
            )


def kernel():
    """The active kernel module."""
    return _kernel


def kernel_by_name(name):
    """Fetch a specific kernel implementation ("c" or "python")."""
    if name == "python":
        return _pykernel
    if name == "c":
        from . import _kernel as compiled
        return compiled
    raise ValueError(f"unknown backend {name!r}")


def backend_name():
    return _kernel.BACKEND_NAME
