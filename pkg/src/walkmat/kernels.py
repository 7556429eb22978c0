"""Kernel selection: compiled extension if present, else pure Python.

Set WALKMAT_PURE=1 to force the pure-Python kernels (useful for
benchmarking and debugging).
"""

import os

if os.environ.get("WALKMAT_PURE"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

det_bareiss = _impl.det_bareiss
charpoly = _impl.charpoly
