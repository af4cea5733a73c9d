"""The beta kernel with exponential weight and the twelve coefficients built from it.

    K(alpha, beta, lam) = int_0^1 t^alpha (1-t)^beta exp(lam t) dt

For 0 <= lam <= 30 the series sum_n lam^n/n! B(alpha+n+1, beta+1) has only
positive terms. Negative lam is reflected through t -> 1-t, and large lam is
handled by quadrature of the exponentially scaled integrand so nothing
overflows before the final multiplication.
"""

from __future__ import annotations

import functools
import math
import struct
from dataclasses import dataclass

from . import _kernels
from .means import _check_pair

SERIES_LIMIT = 30.0
LAMBDA_LIMIT = 700.0
QUAD_RTOL = 1e-13
QUAD_PANELS = 2 ** 14
ORACLE_PANELS = 10 ** 6

IDS = tuple(f"c{i}" for i in range(1, 13))


class KernelDomainError(ValueError):
    """Raised when exp(lam) would overflow."""


class CoefficientInvariantError(RuntimeError):
    """A coefficient came out nonpositive; this is a bug, never a result."""


@dataclass(frozen=True)
class KernelParams:
    alpha: float
    beta: float
    lam: float

    def __post_init__(self):
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0.0):
                raise ValueError(f"{name} must be finite and >= 0, got {v}")
        if not math.isfinite(self.lam) or abs(self.lam) > LAMBDA_LIMIT:
            raise KernelDomainError(f"|lambda| must be <= {LAMBDA_LIMIT:g}, got {self.lam}")


def _bits(v):
    return struct.unpack("<q", struct.pack("<d", float(v)))[0]


def _series(alpha, beta, lam):
    return _kernels.kernel_series(float(alpha), float(beta), float(lam))[0]


def _scaled(p, r, mu):
    """int_0^1 u^p (1-u)^r exp(-mu u) du for mu > 30."""
    return _kernels.scaled_quad(float(p), float(r), float(mu), QUAD_RTOL, QUAD_PANELS)[0]


@functools.lru_cache(maxsize=1 << 16)
def _kernel_bits(ka, kb, kl):
    # keys are raw IEEE bit patterns so -0.0 and 0.0 (or near-equal floats) never alias
    alpha, beta, lam = (struct.unpack("<d", struct.pack("<q", k))[0] for k in (ka, kb, kl))
    if lam >= 0.0:
        if lam <= SERIES_LIMIT:
            return _series(alpha, beta, lam), "series"
        return math.exp(lam) * _scaled(beta, alpha, lam), "quadrature"
    mu = -lam
    if mu <= SERIES_LIMIT:
        return math.exp(lam) * _series(beta, alpha, mu), "series"
    # e^lam * e^mu cancels exactly
    return _scaled(alpha, beta, mu), "quadrature"


def kernel_with_method(alpha, beta, lam):
    p = KernelParams(float(alpha), float(beta), float(lam))
    value, method = _kernel_bits(_bits(p.alpha), _bits(p.beta), _bits(p.lam))
    if not value > 0.0:
        raise CoefficientInvariantError(f"K({alpha}, {beta}, {lam}) = {value!r} is not positive")
    return value, method


def kernel(alpha, beta, lam):
    """K(alpha, beta, lam); |lam| > 700 raises :class:`KernelDomainError`."""
    return kernel_with_method(alpha, beta, lam)[0]


def kernel_method(lam):
    return "series" if abs(lam) <= SERIES_LIMIT else "quadrature"


def simpson_oracle(alpha, beta, lam, panels=ORACLE_PANELS):
    """Composite Simpson after the substitution t = 6u^5 - 15u^4 + 10u^3.

    The substitution flattens t^alpha (1-t)^beta at both ends, so the rule
    keeps its fourth-order rate even for fractional exponents.
    """
    KernelParams(float(alpha), float(beta), float(lam))
    return float(_kernels.simpson_kernel(float(alpha), float(beta), float(lam), int(panels)))


# id -> list of (sign, alpha(s), beta(s), reflected)
_TABLE = {
    "c1": [(1, lambda s: 1.0, lambda s: s, False)],
    "c2": [(1, lambda s: s + 1.0, lambda s: 0.0, False)],
    "c3": [(1, lambda s: 1.0, lambda s: s, True)],
    "c4": [(1, lambda s: s + 1.0, lambda s: 0.0, True)],
    "c5": [(1, lambda s: 1.0, lambda s: 0.0, False), (-1, lambda s: s + 1.0, lambda s: 0.0, False)],
    "c6": [(1, lambda s: 1.0, lambda s: 0.0, True), (-1, lambda s: s + 1.0, lambda s: 0.0, True)],
    "c7": [(1, lambda s: 0.0, lambda s: s, False)],
    "c8": [(1, lambda s: s, lambda s: 0.0, False)],
    "c9": [(1, lambda s: 0.0, lambda s: s, True)],
    "c10": [(1, lambda s: s, lambda s: 0.0, True)],
    "c11": [(1, lambda s: 0.0, lambda s: 0.0, False), (-1, lambda s: s, lambda s: 0.0, False)],
    "c12": [(1, lambda s: 0.0, lambda s: 0.0, True), (-1, lambda s: s, lambda s: 0.0, True)],
}


def kernel_terms(cid, s):
    """[(sign, alpha, beta, reflected)] making up coefficient ``cid`` at ``s``."""
    try:
        rows = _TABLE[cid]
    except KeyError:
        raise ValueError(f"unknown coefficient id {cid!r}; expected one of c1..c12") from None
    return [(sign, fa(s), fb(s), refl) for sign, fa, fb, refl in rows]


@dataclass(frozen=True)
class CoefficientId:
    """c_i(s, q) on the pair (a, b); lambda = q ln(b/a).

    The half-exponent form c_i(s, q/2) is simply ``CoefficientId(i, s, q/2, a, b)``.
    """

    id: str
    s: float
    q: float
    a: float
    b: float

    def __post_init__(self):
        if self.id not in _TABLE:
            raise ValueError(f"unknown coefficient id {self.id!r}; expected one of c1..c12")
        if not (0.0 < self.s <= 1.0):
            raise ValueError(f"s must lie in (0, 1], got {self.s}")
        if not self.q > 0.0:
            raise ValueError(f"q must be > 0, got {self.q}")
        _check_pair(self.a, self.b)
        if not self.a < self.b:
            raise ValueError(f"coefficients need a < b, got a={self.a}, b={self.b}")

    @property
    def lam(self):
        return self.q * (math.log(self.b) - math.log(self.a))


def coefficient_with_method(cid):
    lam = cid.lam
    total = 0.0
    method = "series"
    for sign, alpha, beta, refl in kernel_terms(cid.id, cid.s):
        v, m = kernel_with_method(alpha, beta, -lam if refl else lam)
        total += sign * v
        if m == "quadrature":
            method = m
    if not total > 0.0:
        raise CoefficientInvariantError(f"{cid} evaluated to {total!r}")
    return total, method


def coefficient(cid):
    return coefficient_with_method(cid)[0]


def coefficient_value(name, s, q, a, b):
    return coefficient(CoefficientId(name, float(s), float(q), float(a), float(b)))
