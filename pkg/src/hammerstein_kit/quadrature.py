"""Composite Gauss-Legendre quadrature with kink-aware segmentation.

The kernels handled by this package are analytic off the diagonal t = s
(and off a few known vertical lines), so quadratures are split at those
locations and each smooth segment is integrated with Gauss-Legendre
panels; adaptive halving is used where a tolerance is requested.
"""

from functools import lru_cache

import numpy as np

from .errors import QuadratureFailure


@lru_cache(maxsize=64)
def leggauss(n):
    """Cached Gauss-Legendre rule on [-1, 1]."""
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def fixed_quad(f, a, b, n=64):
    """Single Gauss-Legendre panel of ``f`` on [a, b]."""
    x, w = leggauss(n)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return half * float(np.sum(w * np.asarray(f(mid + half * x), dtype=float)))


def _refine(f, a, b, coarse, rtol, floor, nodes, depth):
    if depth > 48:
        raise QuadratureFailure(
            f"adaptive integration stalled on [{a:.6g}, {b:.6g}]"
        )
    mid = 0.5 * (a + b)
    left = fixed_quad(f, a, mid, nodes)
    right = fixed_quad(f, mid, b, nodes)
    fine = left + right
    if abs(fine - coarse) <= rtol * max(abs(fine), floor):
        return fine
    return (_refine(f, a, mid, left, rtol, floor, nodes, depth + 1)
            + _refine(f, mid, b, right, rtol, floor, nodes, depth + 1))


def integrate(f, a, b, breakpoints=(), rtol=1e-10, nodes=64, floor=1e-300):
    """Adaptive integral of ``f`` over [a, b], split at ``breakpoints``.

    ``f`` must accept numpy arrays.  Each segment between consecutive
    breakpoints is halved until the Gauss-Legendre estimate stabilises to
    ``rtol`` relative accuracy (``floor`` guards integrals near zero).
    """
    if b < a:
        raise QuadratureFailure(f"empty interval [{a}, {b}]")
    if b == a:
        return 0.0
    cuts = sorted({float(a), float(b), *(float(x) for x in breakpoints
                                         if a < float(x) < b)})
    total = 0.0
    for lo, hi in zip(cuts, cuts[1:]):
        coarse = fixed_quad(f, lo, hi, nodes)
        total += _refine(f, lo, hi, coarse, rtol, floor, nodes, 0)
    return total


def panel_boundaries(a, b, n_panels, include=()):
    """Uniform panel boundaries on [a, b], snapped to ``include`` points.

    Interior points from ``include`` replace the nearest interior uniform
    boundary so the panel count is preserved, which keeps composite node
    counts exact for the Nystrom discretisations.
    """
    bnd = np.linspace(a, b, n_panels + 1)
    for p in include:
        p = float(p)
        if not a < p < b:
            continue
        j = int(np.argmin(np.abs(bnd[1:-1] - p))) + 1
        bnd[j] = p
    return np.unique(bnd)


class PanelGrid:
    """Composite Gauss-Legendre grid with in-panel barycentric interpolation.

    Smooth per-panel data sampled on the grid nodes (such as the measure
    integrals entering an assembled kernel) can be re-evaluated anywhere
    inside a panel at interpolation accuracy far below the quadrature
    tolerance, avoiding fresh inner integrals at refinement points.
    """

    def __init__(self, a, b, n_panels, q=8, include=()):
        self.a = float(a)
        self.b = float(b)
        self.q = int(q)
        self.boundaries = panel_boundaries(a, b, n_panels, include)
        self.n_panels = len(self.boundaries) - 1
        x, w = leggauss(self.q)
        mids = 0.5 * (self.boundaries[:-1] + self.boundaries[1:])
        halfs = 0.5 * np.diff(self.boundaries)
        self.nodes = (mids[:, None] + halfs[:, None] * x[None, :]).ravel()
        self.weights = (halfs[:, None] * w[None, :]).ravel()
        self._ref_nodes = x
        # barycentric weights of the q-point Gauss rule
        diff = x[:, None] - x[None, :]
        np.fill_diagonal(diff, 1.0)
        self._bary = 1.0 / np.prod(diff, axis=1)

    def panel_of(self, x):
        """Index of the panel containing ``x`` (arrays allowed)."""
        idx = np.searchsorted(self.boundaries, x, side="right") - 1
        return np.clip(idx, 0, self.n_panels - 1)

    def panel_slice(self, j):
        return slice(j * self.q, (j + 1) * self.q)

    def to_reference(self, x, j):
        lo = self.boundaries[j]
        hi = self.boundaries[j + 1]
        return (2.0 * x - (lo + hi)) / (hi - lo)

    def interp_weights(self, x, j):
        """Barycentric weights mapping panel-``j`` node values to points ``x``.

        Returns an array of shape ``x.shape + (q,)``; exact node hits are
        handled by the standard barycentric limit.
        """
        xi = np.asarray(self.to_reference(x, j), dtype=float)
        d = xi[..., None] - self._ref_nodes
        exact = np.abs(d) < 1e-14
        d = np.where(exact, 1.0, d)
        w = self._bary / d
        w = np.where(np.any(exact, axis=-1, keepdims=True),
                     exact.astype(float), w)
        return w / np.sum(w, axis=-1, keepdims=True)
