"""Hot numeric kernels, each in a plain-Python/numpy form and a numba form.

The numba versions are compiled from the very same loop code where the loop
is the natural formulation (kernel series, scaled quadrature, mean chain);
the Simpson oracle and the batch mean chain also have a vectorised numpy
counterpart. ``_accel.USE_NUMBA`` picks which one the public names bind to.
"""

import math

import numpy as np

from . import _accel
from .quadrature import GAUSS_WEIGHTS, KRONROD_WEIGHTS, NODES, integrate

SERIES_CUTOFF = 1e-18
SERIES_TERM_LIMIT = 100_000
LOG_SERIES_THRESHOLD = 1e-4


# --------------------------------------------------------------------------
# exponential-weight beta kernel


def _kernel_series_py(alpha, beta, lam):
    """Sum lam^n/n! * B(alpha+n+1, beta+1) for lam >= 0 (all terms positive)."""
    term = math.exp(math.lgamma(alpha + 1.0) + math.lgamma(beta + 1.0) - math.lgamma(alpha + beta + 2.0))
    total = term
    comp = 0.0
    n = 0
    while n < SERIES_TERM_LIMIT:
        term = term * (lam / (n + 1.0)) * ((alpha + n + 1.0) / (alpha + beta + n + 2.0))
        n += 1
        # Kahan step
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if n > lam and term <= SERIES_CUTOFF * total:
            break
    return total, n


def _scaled_quad_py(p, r, mu, rtol, max_panels):
    """J = int_0^1 u^p (1-u)^r exp(-mu u) du for mu > 0 (integrand peaks at u=0)."""

    def integrand(u):
        return u ** p * (1.0 - u) ** r * np.exp(-mu * u)

    res = integrate(integrand, 0.0, 1.0, tol=0.0, rtol=rtol, max_panels=max_panels,
                    breakpoints=_scaled_breaks(mu))
    return res.value, res.error_estimate, res.panels


def _scaled_breaks(mu):
    return [b for b in (1.0 / mu, 8.0 / mu, 40.0 / mu) if b < 1.0]


def _gk_panel(p, r, mu, lo, hi):
    centre = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    kron = 0.0
    gauss = 0.0
    for j in range(15):
        u = centre + half * NODES[j]
        v = u ** p * (1.0 - u) ** r * math.exp(-mu * u)
        kron += KRONROD_WEIGHTS[j] * v
        gauss += GAUSS_WEIGHTS[j] * v
    kron *= half
    gauss *= half
    return kron, abs(kron - gauss)


def _scaled_quad_loop(p, r, mu, rtol, max_panels):
    lo = np.empty(max_panels)
    hi = np.empty(max_panels)
    val = np.empty(max_panels)
    err = np.empty(max_panels)
    edges = [0.0]
    for b in (1.0 / mu, 8.0 / mu, 40.0 / mu):
        if b < 1.0:
            edges.append(b)
    edges.append(1.0)
    n = 0
    for i in range(len(edges) - 1):
        lo[n] = edges[i]
        hi[n] = edges[i + 1]
        v, e = _gk_panel(p, r, mu, lo[n], hi[n])
        val[n] = v
        err[n] = e
        n += 1
    while True:
        total = 0.0
        total_err = 0.0
        worst = 0
        for i in range(n):
            total += val[i]
            total_err += err[i]
            if err[i] > err[worst]:
                worst = i
        if total_err <= rtol * abs(total) or n >= max_panels:
            return total, total_err, n
        mid = 0.5 * (lo[worst] + hi[worst])
        lo[n] = mid
        hi[n] = hi[worst]
        hi[worst] = mid
        v, e = _gk_panel(p, r, mu, lo[worst], hi[worst])
        val[worst] = v
        err[worst] = e
        v, e = _gk_panel(p, r, mu, lo[n], hi[n])
        val[n] = v
        err[n] = e
        n += 1


# --------------------------------------------------------------------------
# Simpson oracle (smootherstep substitution removes endpoint power singularities)


def _smoother(u):
    return u * u * u * (u * (6.0 * u - 15.0) + 10.0)


def _simpson_kernel_loop(alpha, beta, lam, panels):
    m = 2 * panels
    h = 1.0 / m
    total = 0.0
    comp = 0.0
    for i in range(1, m):
        u = i * h
        t = _smoother(u)
        s = _smoother(1.0 - u)
        dphi = 30.0 * u * u * (1.0 - u) * (1.0 - u)
        g = t ** alpha * s ** beta * math.exp(lam * t) * dphi
        w = 4.0 if i % 2 == 1 else 2.0
        y = w * g - comp
        tt = total + y
        comp = (tt - total) - y
        total = tt
    return total * h / 3.0


def _simpson_kernel_numpy(alpha, beta, lam, panels):
    m = 2 * panels
    u = np.arange(1, m, dtype=float) / m
    t = _smoother(u)
    s = _smoother(1.0 - u)
    dphi = 30.0 * u * u * (1.0 - u) * (1.0 - u)
    g = t ** alpha * s ** beta * np.exp(lam * t) * dphi
    w = np.where(np.arange(1, m) % 2 == 1, 4.0, 2.0)
    return float(np.sum(w * g)) / (3.0 * m)


# --------------------------------------------------------------------------
# mean chain


def _log_ratio(a, b):
    if 0.5 * a <= b <= 2.0 * a:
        return math.log1p((b - a) / a)
    return math.log(b) - math.log(a)


def _geometric(a, b):
    if a == b:
        return a
    prod = a * b
    if prod > 1e-300 and prod < 1e300:
        return math.sqrt(prod)
    return math.sqrt(a) * math.sqrt(b)


def _logarithmic(a, b):
    if a == b:
        return a
    u = _log_ratio(a, b)
    if abs(u) < LOG_SERIES_THRESHOLD:
        u2 = u * u
        return _geometric(a, b) * (1.0 + u2 / 24.0 + u2 * u2 / 1920.0)
    return (b - a) / u


def _identric(a, b):
    if a == b:
        return a
    u = _log_ratio(a, b)
    if abs(u) < LOG_SERIES_THRESHOLD:
        u2 = u * u
        return _geometric(a, b) * math.exp(u2 / 12.0 - u2 * u2 / 720.0)
    return math.exp(math.log(a) + b * u / (b - a) - 1.0)


def _chain_loop(a, b, out):
    for i in range(a.size):
        x = a[i]
        y = b[i]
        out[0, i] = min(x, y)
        out[1, i] = _geometric(x, y)
        out[2, i] = _logarithmic(x, y)
        out[3, i] = _identric(x, y)
        out[4, i] = (x + y) / 2.0
        out[5, i] = max(x, y)


def _chain_numpy(a, b):
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    with np.errstate(all="ignore"):
        near = (hi <= 2.0 * lo)
        u = np.where(near, np.log1p((hi - lo) / lo), np.log(hi) - np.log(lo))
        prod = lo * hi
        g = np.where((prod > 1e-300) & (prod < 1e300), np.sqrt(prod), np.sqrt(lo) * np.sqrt(hi))
        small = np.abs(u) < LOG_SERIES_THRESHOLD
        u2 = u * u
        l_series = g * (1.0 + u2 / 24.0 + u2 * u2 / 1920.0)
        i_series = g * np.exp(u2 / 12.0 - u2 * u2 / 720.0)
        l_direct = (hi - lo) / u
        i_direct = np.exp(np.log(lo) + hi * u / (hi - lo) - 1.0)
        same = lo == hi
        g = np.where(same, lo, g)
        lm = np.where(same, lo, np.where(small, l_series, l_direct))
        im = np.where(same, lo, np.where(small, i_series, i_direct))
    return np.vstack([lo, g, lm, im, (a + b) / 2.0, hi])


def _chain_python(a, b):
    out = np.empty((6, a.size))
    _chain_loop(a, b, out)
    return out


# --------------------------------------------------------------------------
# compiled variants and dispatch

_kernel_series_nb = _accel.maybe_njit(_kernel_series_py)
_gk_panel_nb = _accel.maybe_njit(_gk_panel)
_scaled_quad_nb = _accel.maybe_njit(_scaled_quad_loop, _gk_panel=_gk_panel_nb)
_smoother_nb = _accel.maybe_njit(_smoother)
_simpson_kernel_nb = _accel.maybe_njit(_simpson_kernel_loop, _smoother=_smoother_nb)
_log_ratio_nb = _accel.maybe_njit(_log_ratio)
_geometric_nb = _accel.maybe_njit(_geometric)
_logarithmic_nb = _accel.maybe_njit(_logarithmic, _log_ratio=_log_ratio_nb, _geometric=_geometric_nb)
_identric_nb = _accel.maybe_njit(_identric, _log_ratio=_log_ratio_nb, _geometric=_geometric_nb)
_chain_loop_nb = _accel.maybe_njit(_chain_loop, _geometric=_geometric_nb,
                                   _logarithmic=_logarithmic_nb, _identric=_identric_nb)


def _chain_nb(a, b):
    out = np.empty((6, a.size))
    _chain_loop_nb(a, b, out)
    return out


# The vectorised numpy Simpson sum and mean chain are as fast as their jitted
# loops (see benchmarks/), so only the scalar recurrences switch backend.
simpson_kernel = _simpson_kernel_numpy
chain_batch = _chain_numpy
if _accel.USE_NUMBA:
    kernel_series = _kernel_series_nb
    scaled_quad = _scaled_quad_nb
else:
    kernel_series = _kernel_series_py
    scaled_quad = _scaled_quad_py
