"""Pure-numpy evaluation of the shifted Neumann Green's kernels.

Same call signatures as the compiled module ``_kernelcore``; the active
implementation is picked in :mod:`hammerstein_kit.backend`.
"""

import numpy as np


def kernel_values(epsilon, omega, t, s):
    """Elementwise kernel values for broadcastable arrays ``t``, ``s``."""
    t = np.asarray(t, dtype=np.float64)
    s = np.asarray(s, dtype=np.float64)
    lo = np.minimum(t, s)
    hi = np.maximum(t, s)
    if epsilon == -1:
        scale = 1.0 / (omega * np.sinh(omega))
        return np.cosh(omega * (1.0 - hi)) * np.cosh(omega * lo) * scale
    scale = 1.0 / (omega * np.sin(omega))
    return np.cos(omega * (1.0 - hi)) * np.cos(omega * lo) * scale


def kernel_matrix(epsilon, omega, t, s):
    """Outer-product kernel table, shape ``(len(t), len(s))``."""
    t = np.asarray(t, dtype=np.float64).reshape(-1, 1)
    s = np.asarray(s, dtype=np.float64).reshape(1, -1)
    return kernel_values(epsilon, omega, t, s)
