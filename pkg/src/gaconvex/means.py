"""Classical two-variable means and the ordering chain min < G < L < I < A < max.

Near the diagonal the logarithmic and identric means switch to series in
u = ln(b/a) to avoid 0/0 cancellation; away from it they are evaluated in
log-space so that b**b never has to be formed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels


def _check_pair(a, b):
    if not (a > 0 and b > 0) or not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError(f"means need finite positive arguments, got a={a!r}, b={b!r}")


def geometric_mean(a, b):
    _check_pair(a, b)
    return _kernels._geometric(float(a), float(b))


def arithmetic_mean(a, b):
    _check_pair(a, b)
    return (a + b) / 2.0


def logarithmic_mean(a, b):
    """(b - a) / (ln b - ln a), extended continuously by L(a, a) = a."""
    _check_pair(a, b)
    return _kernels._logarithmic(float(a), float(b))


def identric_mean(a, b):
    """(1/e) (b^b / a^a)^(1/(b-a)), extended continuously by I(a, a) = a."""
    _check_pair(a, b)
    return _kernels._identric(float(a), float(b))


def _log_expm1_ratio(z):
    # log(expm1(z)/z), positive argument of the log for every real z
    if z == 0.0:
        return 0.0
    if z > 700.0:
        return z - math.log(z) + math.log1p(-math.exp(-z))
    return math.log(math.expm1(z) / z)


def p_log_mean(a, b, p):
    """p-logarithmic mean ((b^(p+1) - a^(p+1)) / ((p+1)(b-a)))^(1/p).

    The limits p -> -1 and p -> 0 are the logarithmic and identric means; they
    are not taken silently here, call :func:`logarithmic_mean` or
    :func:`identric_mean` instead.
    """
    _check_pair(a, b)
    if p == -1:
        raise ValueError("p = -1 is the logarithmic mean limit; use logarithmic_mean")
    if p == 0:
        raise ValueError("p = 0 is the identric mean limit; use identric_mean")
    if a == b:
        return float(a)
    a = float(a)
    b = float(b)
    r = p + 1.0
    u = _kernels._log_ratio(a, b)
    # L_p^p = a^r * E(r u) / L(a, b), with E(z) = expm1(z)/z
    log_lp = (r * math.log(a) + _log_expm1_ratio(r * u) - math.log(_kernels._logarithmic(a, b))) / p
    return math.exp(log_lp)


@dataclass(frozen=True)
class MeanChain:
    a: float
    b: float
    minimum: float
    geometric: float
    logarithmic: float
    identric: float
    arithmetic: float
    maximum: float

    def values(self):
        return (self.minimum, self.geometric, self.logarithmic,
                self.identric, self.arithmetic, self.maximum)

    @property
    def strict(self):
        v = self.values()
        return all(lo < hi for lo, hi in zip(v, v[1:]))

    def as_dict(self):
        return {
            "a": self.a, "b": self.b, "min": self.minimum, "G": self.geometric,
            "L": self.logarithmic, "I": self.identric, "A": self.arithmetic,
            "max": self.maximum, "strict": self.strict,
        }


def mean_chain(a, b):
    """Evaluate min, G, L, I, A, max for a != b."""
    _check_pair(a, b)
    if a == b:
        raise ValueError("mean_chain requires a != b")
    a = float(a)
    b = float(b)
    return MeanChain(a, b, min(a, b), geometric_mean(a, b), logarithmic_mean(a, b),
                     identric_mean(a, b), arithmetic_mean(a, b), max(a, b))


def mean_chain_batch(a, b):
    """Vectorised chain: returns a (6, n) array of min, G, L, I, A, max."""
    a = np.ascontiguousarray(a, dtype=float)
    b = np.ascontiguousarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("a and b must be 1-D arrays of equal length")
    if np.any(~(a > 0)) or np.any(~(b > 0)):
        raise ValueError("means need positive arguments")
    return _kernels.chain_batch(a, b)
