"""Mean-value integrals of f over [a, b] and residuals of the three integral identities.

Both averages are reduced to integrals over t in [0, 1]:

    gm_integral: (1/ln(b/a)) int_a^b f(x)/x dx = int_0^1 f(a^(1-t) b^t) dt
    am_integral: (1/(b-a))   int_a^b f(x) dx   = int_0^1 f(a + (b-a) t) dt
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import expr as ex
from .funcat import FunctionSpec, resolve
from .means import _check_pair
from .quadrature import QuadResult, integrate

QUAD_TOL = 1e-11
IDENTITIES = ("zhang", "iscan_midpoint", "iscan_trapezoid")


def _ordered(a, b):
    _check_pair(a, b)
    if not a < b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    return float(a), float(b)


def _geo_points(la, lb, t):
    # exp((1-t) ln a + t ln b) stays inside [a, b] up to rounding
    return np.exp((1.0 - t) * la + t * lb)


def gm_integral(f, a, b, tol=QUAD_TOL):
    """Geometric-mean average of ``f`` over [a, b]."""
    f = resolve(f)
    a, b = _ordered(a, b)
    la, lb = math.log(a), math.log(b)
    lo, hi = min(a, b), max(a, b)
    return integrate(lambda t: f(np.clip(_geo_points(la, lb, t), lo, hi)), 0.0, 1.0, tol=tol)


def am_integral(f, a, b, tol=QUAD_TOL):
    """Arithmetic average (1/(b-a)) int_a^b f(x) dx."""
    f = resolve(f)
    a, b = _ordered(a, b)
    w = b - a
    return integrate(lambda t: f(np.minimum(a + w * t, b)), 0.0, 1.0, tol=tol)


@dataclass(frozen=True)
class IdentityCheck:
    which: str
    lhs: float
    rhs: float
    residual: float
    quad_error: float

    def as_dict(self):
        return {"which": self.which, "lhs": self.lhs, "rhs": self.rhs,
                "residual": self.residual, "quad_error": self.quad_error}


def _normalise_which(which):
    key = which.replace("-", "_")
    if key not in IDENTITIES:
        raise ValueError(f"unknown identity {which!r}; choose from {IDENTITIES}")
    return key


def identity_sides(which, f, a, b, tol=QUAD_TOL):
    """Evaluate both sides of an identity independently.

    zhang:            b f(b) - a f(a) - int_a^b f  =  ln(b/a) int_0^1 x^2 f'(x) dt,  x = b^t a^(1-t)
    iscan_midpoint:   f(sqrt(ab)) - gm  =  ln(b/a)/4 [a int t (b/a)^(t/2) f'(.) - b int t (a/b)^(t/2) f'(.)]
    iscan_trapezoid:  (f(a)+f(b))/2 - gm  =  ln(b/a)/2 [a int t (b/a)^t f'(.) - b int t (a/b)^t f'(.)]
    """
    which = _normalise_which(which)
    f = resolve(f)
    a, b = _ordered(a, b)
    la, lb = math.log(a), math.log(b)
    u = lb - la
    fa, fb = f(a), f(b)

    def df(x):
        return ex.evaluate(f.derivative, x)

    if which == "zhang":
        am = am_integral(f, a, b, tol / (b - a))
        lhs = b * fb - a * fa - (b - a) * am.value
        r = integrate(lambda t: _geo_points(la, lb, t) ** 2 * df(_geo_points(la, lb, t)), tol=tol / max(u, 1.0))
        rhs = u * r.value
        err = (b - a) * am.error_estimate + u * r.error_estimate
        return IdentityCheck(which, lhs, rhs, abs(lhs - rhs), err)

    gm = gm_integral(f, a, b, tol)
    lm = 0.5 * (la + lb)
    if which == "iscan_midpoint":
        lhs = f(math.exp(lm)) - gm.value
        # a (b/a)^(t/2) = a^(1-t)(ab)^(t/2), which is exactly the evaluation point
        p1 = integrate(lambda t: t * np.exp(0.5 * t * u) * df(np.exp((1.0 - t) * la + t * lm)), tol=tol)
        p2 = integrate(lambda t: t * np.exp(-0.5 * t * u) * df(np.exp((1.0 - t) * lb + t * lm)), tol=tol)
        scale = u / 4.0
    else:
        lhs = 0.5 * (fa + fb) - gm.value
        p1 = integrate(lambda t: t * np.exp(t * u) * df(np.exp((1.0 - t) * la + t * lb)), tol=tol)
        p2 = integrate(lambda t: t * np.exp(-t * u) * df(np.exp((1.0 - t) * lb + t * la)), tol=tol)
        scale = u / 2.0
    rhs = scale * (a * p1.value - b * p2.value)
    err = gm.error_estimate + scale * (a * p1.error_estimate + b * p2.error_estimate)
    return IdentityCheck(which, lhs, rhs, abs(lhs - rhs), err)


def identity_residual(which, f, a, b, tol=QUAD_TOL):
    """|LHS - RHS| of the named identity; should vanish up to quadrature error."""
    return identity_sides(which, f, a, b, tol).residual


__all__ = ["QuadResult", "FunctionSpec", "gm_integral", "am_integral", "IdentityCheck",
           "identity_sides", "identity_residual", "IDENTITIES"]
