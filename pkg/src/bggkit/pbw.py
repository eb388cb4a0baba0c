"""Kernel selection: compiled straightening core with pure-Python fallback.

Importing this module picks the Cython extension when it was built and
falls back to the interpreted twin otherwise.  Set BGGKIT_PURE_PYTHON=1
to force the fallback (useful for benchmarking and debugging).  The two
implementations are exact twins; results are identical bit for bit.
"""

from __future__ import annotations

import os

from . import _straighten_py

if os.environ.get("BGGKIT_PURE_PYTHON") == "1":
    _impl = _straighten_py
else:
    try:
        from . import _straighten_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _straighten_py

StraightenKernel = _impl.StraightenKernel
CACHE_BOUND = _impl.CACHE_BOUND

#: "cython" when the compiled kernel is active, "python" otherwise
KERNEL_IMPL = "cython" if _impl is not _straighten_py else "python"
