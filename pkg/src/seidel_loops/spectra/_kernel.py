"""Select the Jacobi kernel at import time.

The compiled extension is used when it was built; otherwise the pure-Python
kernel.  Setting ``SEIDEL_LOOPS_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _jacobi_py

if os.environ.get("SEIDEL_LOOPS_PURE_PYTHON", "") not in ("", "0"):
    jacobi_kernel = _jacobi_py.jacobi_kernel
    KERNEL = "python"
else:
    try:
        from ._jacobi_ext import jacobi_kernel
        KERNEL = "cython"
    except ImportError:
        jacobi_kernel = _jacobi_py.jacobi_kernel
        KERNEL = "python"

python_kernel = _jacobi_py.jacobi_kernel

__all__ = ["jacobi_kernel", "python_kernel", "KERNEL"]
