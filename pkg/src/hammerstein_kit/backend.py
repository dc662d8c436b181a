"""Select the kernel-evaluation backend at import time.

The compiled Cython core is preferred; the numpy fallback is
functionally identical (see ``benchmarks/bench_kernel_core.py`` for the
speed comparison).
"""

try:
    from . import _kernelcore as _impl
    HAVE_COMPILED = True
except ImportError:
    from . import _kernelpure as _impl
    HAVE_COMPILED = False

kernel_values = _impl.kernel_values
kernel_matrix = _impl.kernel_matrix

__all__ = ["kernel_values", "kernel_matrix", "HAVE_COMPILED"]
