"""Kernel backend selection.

The compiled GF(p) kernels are used when the extension was built; set
``CYCLEIB_PURE_PYTHON=1`` to force the pure-Python fallback.  ``BACKEND``
names the active implementation.
"""

import os

from . import _kernels_py

if os.environ.get("CYCLEIB_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels_c as _impl
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"
    else:
        BACKEND = "cython"

matmul = _impl.matmul
convolve = _impl.convolve
rref = _impl.rref


def available_backends():
    """Map backend name to kernel module, for tests and benchmarks."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels_c
    except ImportError:
        pass
    else:
        out["cython"] = _kernels_c
    return out
