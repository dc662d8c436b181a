"""Green's kernels of the shifted Neumann problems and their cone constants.

The two-point problem ``eps*u'' + omega^2*u = y`` with zero-flux endpoint
conditions has the piecewise-product Green's function

    eps = -1:  k(t,s) = cosh(omega*(1-max(t,s))) * cosh(omega*min(t,s))
                        / (omega * sinh(omega))
    eps = +1:  k(t,s) = cos(omega*(1-max(t,s))) * cos(omega*min(t,s))
                        / (omega * sin(omega))

This module evaluates these kernels, classifies the sign structure of the
oscillatory case, and computes the envelope Phi, the cone ratio c(a,b)
and the reciprocal integral bounds m and M(a,b), in closed form where one
exists (weight g == 1) and by segmented quadrature otherwise.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from . import backend
from .errors import DomainError, RootFindFailure, StripViolation
from .quadrature import integrate

# eps=+1 rejects omega this close to a multiple of pi (1/sin blowup)
_OMEGA_GUARD = 1e-8

POSITIVE_EVERYWHERE = "PositiveEverywhere"
POSITIVE_EXCEPT_CORNERS = "PositiveExceptCorners"
POSITIVE_ON_STRIP = "PositiveOnStrip"
NO_STRIP = "NoStrip"


def _validate(epsilon, omega):
    if epsilon not in (-1, 1):
        raise DomainError(f"epsilon must be -1 or +1, got {epsilon}")
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega}")
    if epsilon == 1:
        k = round(omega / math.pi)
        if k >= 1 and abs(omega - k * math.pi) < _OMEGA_GUARD:
            raise DomainError(
                f"omega={omega} is within {_OMEGA_GUARD} of {k}*pi; "
                "the oscillatory kernel is singular there"
            )


@dataclass(frozen=True)
class SignClass:
    """Sign structure of the oscillatory kernel on [0,1]^2."""

    tag: str
    strip: tuple | None = None


@dataclass
class ShiftedKernel:
    """Evaluable shifted Neumann kernel with its symmetry metadata."""

    epsilon: int
    omega: float

    def __post_init__(self):
        _validate(self.epsilon, self.omega)

    def eval(self, t, s):
        return backend.kernel_values(self.epsilon, self.omega, t, s)

    def matrix(self, t, s):
        return backend.kernel_matrix(self.epsilon, self.omega, t, s)

    def phi(self, s):
        return phi_envelope(self.epsilon, self.omega)(s)

    def sign_class(self):
        if self.epsilon == -1:
            return SignClass(POSITIVE_EVERYWHERE)
        return classify_sign(self.omega)

    def sign_breakpoints(self):
        """Vertical lines s in (0,1) where a cosine factor vanishes.

        Every sign change of k(t, .) happens on one of these lines, for
        any t, so they are complete quadrature breakpoints.  Empty for
        the hyperbolic (everywhere positive) kernel.
        """
        if self.epsilon == -1:
            return ()
        om = self.omega
        pts = set()
        j = 0
        while True:
            z = (math.pi / 2 + j * math.pi) / om
            if z >= 1.0:
                break
            pts.add(z)
            pts.add(1.0 - z)
            j += 1
        return tuple(sorted(p for p in pts if 0.0 < p < 1.0))


def kernel_eval(epsilon, omega, t, s):
    """Pointwise kernel value; branch picked by ``min``/``max`` of (t, s)."""
    _validate(epsilon, omega)
    return float(backend.kernel_values(epsilon, omega, float(t), float(s)))


def classify_sign(omega):
    """Sign class of the oscillatory kernel as a function of omega."""
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega}")
    k = round(omega / math.pi)
    if k >= 1 and abs(omega - k * math.pi) < _OMEGA_GUARD:
        raise DomainError(f"omega={omega} is a multiple of pi")
    half_pi = math.pi / 2
    if omega < half_pi - 1e-12:
        return SignClass(POSITIVE_EVERYWHERE)
    if abs(omega - half_pi) <= 1e-12:
        return SignClass(POSITIVE_EXCEPT_CORNERS)
    if omega < math.pi:
        return SignClass(POSITIVE_ON_STRIP,
                         (1.0 - math.pi / (2 * omega), math.pi / (2 * omega)))
    return SignClass(NO_STRIP)


def phi_envelope(epsilon, omega):
    """Closed-form envelope Phi with Phi(s) = sup_t |k(t, s)|."""
    _validate(epsilon, omega)
    if epsilon == -1:
        def phi(s):
            s = np.asarray(s, dtype=float)
            return (np.cosh(omega * (1.0 - s)) * np.cosh(omega * s)
                    / (omega * math.sinh(omega)))
        return phi
    if omega >= math.pi:
        raise DomainError(
            "the envelope of the oscillatory kernel is only defined for "
            f"omega in (0, pi); got {omega}"
        )

    def phi(s):
        s = np.asarray(s, dtype=float)
        return (np.maximum(np.cos(omega * (1.0 - s)), np.cos(omega * s))
                / (omega * math.sin(omega)))
    return phi


def _check_interval(a, b):
    if not (0.0 <= a < b <= 1.0):
        raise DomainError(f"need 0 <= a < b <= 1, got [{a}, {b}]")


def c_of_interval(epsilon, omega, a, b):
    """Cone ratio c(a,b) = inf over [a,b] x [0,1] of k / Phi."""
    _validate(epsilon, omega)
    _check_interval(a, b)
    if epsilon == -1:
        return min(math.cosh(omega * a),
                   math.cosh(omega * (1.0 - b))) / math.cosh(omega)
    if omega >= math.pi:
        raise DomainError(
            f"no positivity strip exists for omega={omega} >= pi"
        )
    c = min(math.cos(omega * a), math.cos(omega * (1.0 - a)),
            math.cos(omega * b), math.cos(omega * (1.0 - b)))
    if c <= 0.0:
        strip = (max(0.0, 1.0 - math.pi / (2 * omega)),
                 min(1.0, math.pi / (2 * omega)))
        raise StripViolation(
            f"[{a}, {b}] is not inside the positivity strip "
            f"({strip[0]:.6g}, {strip[1]:.6g}) for omega={omega}"
        )
    return c


def row_integral(epsilon, omega, t, g, lo, hi, part=None, rtol=1e-10):
    """Integral over s in [lo, hi] of a signed part of k(t, s) g(s).

    ``part`` is one of None (signed integral), '+', '-' or 'abs'.  The
    domain is split at the diagonal and at the kernel's vertical sign
    lines, so every segment is smooth and sign-pure.
    """
    _validate(epsilon, omega)
    ker = ShiftedKernel(epsilon, omega)
    cuts = sorted({float(lo), float(hi),
                   *(z for z in ker.sign_breakpoints() if lo < z < hi),
                   *( [float(t)] if lo < t < hi else [] )})
    gfun = (lambda s: np.ones_like(s)) if g is None else g
    total = 0.0
    for x0, x1 in zip(cuts, cuts[1:]):
        mid_sign = math.copysign(
            1.0, float(ker.eval(t, 0.5 * (x0 + x1))) or 1.0)
        val = integrate(lambda s: ker.eval(t, s) * gfun(s), x0, x1, rtol=rtol)
        if part is None:
            total += val
        elif part == "abs":
            total += abs(val)
        elif part == "+":
            total += val if mid_sign > 0 else 0.0
        elif part == "-":
            total += -val if mid_sign < 0 else 0.0
        else:
            raise ValueError(f"unknown part {part!r}")
    return total


def _grid_extremum(values, tgrid, objective, maximize):
    """Polish a grid arg-extremum with a bounded scalar optimisation."""
    idx = int(np.argmax(values) if maximize else np.argmin(values))
    best = float(values[idx])
    lo = tgrid[max(idx - 1, 0)]
    hi = tgrid[min(idx + 1, len(tgrid) - 1)]
    if hi > lo:
        sgn = -1.0 if maximize else 1.0
        res = minimize_scalar(lambda t: sgn * objective(t),
                              bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-12})
        cand = sgn * float(res.fun)
        best = max(best, cand) if maximize else min(best, cand)
    return best


def m_constant(epsilon, omega, g=None, t_points=2000, rtol=1e-10):
    """Reciprocal of sup_t max(int k^+ g, int k^- g) over [0, 1].

    Closed form for g == 1 (pass ``g=None``); otherwise a 2000-point
    t-grid scan of segmented quadratures, polished locally.
    """
    _validate(epsilon, omega)
    if g is None:
        if epsilon == -1:
            return omega ** 2
        if omega >= math.pi:
            raise DomainError(
                f"m is only defined for omega in (0, pi) when eps=+1"
            )
        if omega <= math.pi / 2:
            return omega ** 2
        return omega ** 2 * math.sin(omega)

    def objective(t):
        return max(row_integral(epsilon, omega, t, g, 0.0, 1.0, "+", rtol),
                   row_integral(epsilon, omega, t, g, 0.0, 1.0, "-", rtol))

    tgrid = np.linspace(0.0, 1.0, t_points)
    vals = np.array([objective(t) for t in tgrid])
    sup = _grid_extremum(vals, tgrid, objective, maximize=True)
    if sup <= 0.0:
        raise DomainError("kernel row integrals vanish identically")
    return 1.0 / sup


def _xi_endpoint(omega, a, b, t):
    # convex profile whose endpoint max gives M(a,b) for the hyperbolic case
    return (math.sinh(omega * a) * math.cosh(omega * (1.0 - t))
            + math.sinh(omega * (1.0 - b)) * math.cosh(omega * t))


def _xi_interior(omega, a, b, t):
    # concave profile for the oscillatory case; interior max at t0
    return (math.cos(omega * (1.0 - t)) * math.sin(omega * a)
            + math.cos(omega * t) * math.sin(omega * (1.0 - b)))


def _xi_interior_slope(omega, a, b, t):
    return omega * (math.sin(omega * (1.0 - t)) * math.sin(omega * a)
                    - math.sin(omega * t) * math.sin(omega * (1.0 - b)))


def _bisect_slope(omega, a, b, tol=1e-12):
    fa = _xi_interior_slope(omega, a, b, a)
    fb = _xi_interior_slope(omega, a, b, b)
    if fa * fb >= 0.0:
        return None
    lo, hi = a, b
    flo = fa
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = _xi_interior_slope(omega, a, b, mid)
        if fm == 0.0 or hi - lo < tol:
            return mid
        if flo * fm < 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    raise RootFindFailure("bisection on the interior-profile slope stalled")


def M_constant(epsilon, omega, a, b, g=None, t_points=2000, rtol=1e-10):
    """Reciprocal of inf over t in [a,b] of int_a^b k(t,s) g(s) ds.

    Closed form for g == 1: the hyperbolic case maximises a convex
    profile at an endpoint (larger endpoint decided by a+b vs 1); the
    oscillatory case locates the interior maximiser by bisection on the
    profile slope, with the symmetric a+b = 1 shortcut, falling back to
    endpoint comparison when the slope does not bracket.
    """
    _validate(epsilon, omega)
    _check_interval(a, b)
    if epsilon == 1:
        c_of_interval(epsilon, omega, a, b)  # raises StripViolation if outside
    if g is None:
        if epsilon == -1:
            xi = max(_xi_endpoint(omega, a, b, a), _xi_endpoint(omega, a, b, b))
            inv = 1.0 / omega ** 2 - xi / (omega ** 2 * math.sinh(omega))
            return 1.0 / inv
        cands = [_xi_interior(omega, a, b, a), _xi_interior(omega, a, b, b)]
        if abs((a + b) - 1.0) < 1e-14:
            t0 = 0.5
        else:
            t0 = _bisect_slope(omega, a, b)
        if t0 is not None:
            cands.append(_xi_interior(omega, a, b, t0))
        inv = (math.sin(omega) - max(cands)) / (omega ** 2 * math.sin(omega))
        if inv <= 0.0:
            raise StripViolation(
                f"int_a^b k(t,s) ds is not positive on [{a}, {b}]"
            )
        return 1.0 / inv

    def objective(t):
        return row_integral(epsilon, omega, t, g, a, b, None, rtol)

    tgrid = np.linspace(a, b, t_points)
    vals = np.array([objective(t) for t in tgrid])
    inf = _grid_extremum(vals, tgrid, objective, maximize=False)
    if inf <= 0.0:
        raise StripViolation(
            f"int_a^b k(t,s) g(s) ds is not positive on [{a}, {b}]"
        )
    return 1.0 / inf


@dataclass
class ConstantsBundle:
    """Envelope and cone constants of a kernel on a localisation interval."""

    phi: object
    c_ab: float
    m: float
    M_ab: float
    interval: tuple
    extras: dict = field(default_factory=dict)


def constants_bundle(epsilon, omega, a, b, g=None):
    """Phi, c(a,b), m and M(a,b) for one kernel/interval/weight setting."""
    return ConstantsBundle(
        phi=phi_envelope(epsilon, omega),
        c_ab=c_of_interval(epsilon, omega, a, b),
        m=m_constant(epsilon, omega, g),
        M_ab=M_constant(epsilon, omega, a, b, g),
        interval=(float(a), float(b)),
    )
