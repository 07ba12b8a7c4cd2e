"""Kernel selection at import time.

The compiled extension is preferred when present; otherwise the numpy
fallback is used. Set QAUDIO_PURE_PYTHON=1 to force the fallback.
"""

import os

if os.environ.get("QAUDIO_PURE_PYTHON"):
    from ._fallback import apply_gate_kernel

    KERNEL_BACKEND = "numpy"
else:
    try:
        from ._core import apply_gate_kernel

        KERNEL_BACKEND = "cython"
    except ImportError:
        from ._fallback import apply_gate_kernel

        KERNEL_BACKEND = "numpy"

__all__ = ["apply_gate_kernel", "KERNEL_BACKEND"]
