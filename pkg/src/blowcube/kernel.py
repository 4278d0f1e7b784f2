"""Kernel selection: compiled extension if present, pure Python otherwise.

Set BLOWCUBE_PURE=1 to force the pure-Python kernel (useful for timing
comparisons and for debugging the representation).
"""

from __future__ import annotations

import os

if os.environ.get("BLOWCUBE_PURE"):
    from blowcube._kernel_py import BACKEND, add_scaled_packed, mul_packed
else:
    try:
        from blowcube._speedups import BACKEND, add_scaled_packed, mul_packed
    except ImportError:
        from blowcube._kernel_py import BACKEND, add_scaled_packed, mul_packed

__all__ = ["BACKEND", "mul_packed", "add_scaled_packed"]
