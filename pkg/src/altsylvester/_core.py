"""Kernel selection.

The compiled kernel is used when it was built and imports cleanly; setting
``ALTSYLVESTER_PURE=1`` forces the pure-Python one.
"""
import os

if os.environ.get("ALTSYLVESTER_PURE"):
    from ._kernel_py import expand_fraction, expand_trace, partial_sum
    BACKEND = "python"
else:
    try:
        from ._kernel import expand_fraction, expand_trace, partial_sum
        BACKEND = "cython"
    except ImportError:
        from ._kernel_py import expand_fraction, expand_trace, partial_sum
        BACKEND = "python"

__all__ = ["BACKEND", "expand_fraction", "expand_trace", "partial_sum"]
