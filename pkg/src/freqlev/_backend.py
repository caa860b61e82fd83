"""Select the compiled kernels when available, else the pure-Python fallback.

Set ``FREQLEV_PURE=1`` in the environment to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("FREQLEV_PURE"):
    from freqlev import _purekernels as kernels

    BACKEND = "python"
else:
    try:
        from freqlev import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from freqlev import _purekernels as kernels  # type: ignore[no-redef]

        BACKEND = "python"
