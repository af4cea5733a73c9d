"""Test functions, the convexity classes they may belong to, and empirical certification.

A :class:`FunctionSpec` wraps a parsed expression on an interval of the
positive reals together with its machine-derived derivative. :func:`certify`
samples (x, y, t) triples and checks the defining inequality of a
:class:`ConvexityClass`; it never proves membership, it only fails to find a
counterexample on the sample set.
"""

from __future__ import annotations

import functools
import math
import sys
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import qmc

from . import expr as ex

KINDS = ("convex", "s-first", "s-second", "ga", "ga-s-first", "ga-s-second")
CERTIFY_TOL = 1e-10
# the whole positive half-line, with the smallest normal double as lower bound
POSITIVE_REALS = (sys.float_info.min, math.inf)


@dataclass(frozen=True)
class ConvexityClass:
    """One of the six classes; GA-s-* with s = 1 collapse to plain GA.

    ``s-first``/``s-second`` with s = 1 likewise collapse to ordinary convexity.
    """

    kind: str
    s: float = 1.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown convexity class {self.kind!r}; choose from {KINDS}")
        if not (0.0 < self.s <= 1.0):
            raise ValueError(f"s must lie in (0, 1], got {self.s}")
        if self.s == 1.0:
            if self.kind.startswith("ga-s"):
                object.__setattr__(self, "kind", "ga")
            elif self.kind.startswith("s-"):
                object.__setattr__(self, "kind", "convex")

    @property
    def geometric(self):
        return self.kind.startswith("ga")

    def label(self):
        if self.kind in ("convex", "ga"):
            return self.kind
        return f"{self.kind}(s={self.s:g})"


@dataclass(frozen=True)
class FunctionSpec:
    """A named closed-form function on ``domain`` = (lo, hi) with 0 < lo.

    ``derivative`` is filled in symbolically at construction.
    """

    name: str
    expr: ex.Expr
    domain: tuple = POSITIVE_REALS
    claims: tuple = ()
    derivative: ex.Expr = field(default=None, compare=False)

    def __post_init__(self):
        lo, hi = self.domain
        if not lo > 0:
            raise ValueError(f"domain lower bound must be > 0, got {lo}")
        if not hi > lo:
            raise ValueError(f"empty domain {self.domain}")
        object.__setattr__(self, "domain", (float(lo), float(hi)))
        if self.derivative is None:
            object.__setattr__(self, "derivative", ex.diff(self.expr))

    @classmethod
    def parse(cls, text, name=None, domain=POSITIVE_REALS, claims=()):
        return cls(name or text, ex.parse_expr(text), domain, tuple(claims))

    @property
    def text(self):
        return ex.to_text(self.expr)

    def __call__(self, x):
        return ex.evaluate(self.expr, x)

    def deriv(self, x):
        """f'(x) by dual-number propagation."""
        return ex.eval_dual(self.expr, x)[1]

    def dual(self, x):
        return ex.eval_dual(self.expr, x)

    def derivative_power(self, q):
        """|f'|^q as a new FunctionSpec (used as a theorem hypothesis)."""
        e = ex.BinOp("^", ex.Call("abs", self.derivative), ex.const(q))
        return FunctionSpec(f"|({self.name})'|^{q:g}", e, self.domain)

    def negated(self):
        return FunctionSpec(f"-({self.name})", ex.Neg(self.expr), self.domain)


@dataclass(frozen=True)
class SamplingPlan:
    """Low-discrepancy (x, y) pairs times an equispaced t grid, plus random triples."""

    sobol_log2: int = 12          # 2**12 = 64 x 64 pairs
    t_points: int = 33
    random_triples: int = 10_000
    seed: int = 0
    tolerance: float = CERTIFY_TOL


@dataclass(frozen=True)
class Certificate:
    cls: ConvexityClass
    domain: tuple
    samples: int
    worst_margin: float
    witness: tuple | None
    status: str
    seed: int

    @property
    def certified(self):
        return self.status == "certified-empirically"

    def as_dict(self):
        return {
            "class": self.cls.label(), "domain": list(self.domain), "samples": self.samples,
            "worst_margin": self.worst_margin,
            "witness": list(self.witness) if self.witness is not None else None,
            "status": self.status, "seed": self.seed,
        }


@functools.lru_cache(maxsize=64)
def _unit_triples(plan):
    pairs = qmc.Sobol(d=2, scramble=False).random_base2(plan.sobol_log2)
    corners = np.array([[0.0, 0.0], [0.0, 1.0], [1.0, 0.0], [1.0, 1.0]])
    pairs = np.unique(np.vstack([pairs, corners]), axis=0)
    t = np.linspace(0.0, 1.0, plan.t_points)
    px = np.repeat(pairs[:, 0], t.size)
    py = np.repeat(pairs[:, 1], t.size)
    pt = np.tile(t, len(pairs))
    rng = np.random.default_rng(plan.seed)
    r = rng.random((plan.random_triples, 3))
    return (np.concatenate([px, r[:, 0]]), np.concatenate([py, r[:, 1]]),
            np.concatenate([pt, r[:, 2]]))


def _combination(cls, x, y, t):
    """Return (point, weight_x, weight_y) for the class's defining inequality."""
    s = cls.s
    if cls.kind == "convex":
        return t * x + (1.0 - t) * y, t, 1.0 - t
    if cls.kind == "s-second":
        return t * x + (1.0 - t) * y, t ** s, (1.0 - t) ** s
    if cls.kind == "s-first":
        # alpha^s + beta^s = 1 with alpha = t^(1/s), beta = (1-t)^(1/s)
        return t ** (1.0 / s) * x + (1.0 - t) ** (1.0 / s) * y, t, 1.0 - t
    lx, ly = np.log(x), np.log(y)
    point = np.clip(np.exp(t * lx + (1.0 - t) * ly), np.minimum(x, y), np.maximum(x, y))
    if cls.kind == "ga":
        return point, t, 1.0 - t
    if cls.kind == "ga-s-first":
        ts = t ** s
        return point, ts, 1.0 - ts
    return point, t ** s, (1.0 - t) ** s


def certify(f, cls, domain=None, plan=SamplingPlan()):
    """Search for a violation of ``cls``'s defining inequality for ``f`` on ``domain``.

    ``f`` is any callable evaluating arrays (typically a :class:`FunctionSpec`).
    Triples whose combination point falls outside the domain (possible only
    for the non-GA s-first class, where alpha + beta <= 1) are skipped.
    Domain errors are re-raised with the witness triple attached.
    """
    if domain is None:
        domain = f.domain
    lo, hi = float(domain[0]), float(domain[1])
    if not (0 < lo < hi < math.inf):
        raise ValueError(f"certification needs a bounded domain inside (0, inf), got {domain}")
    ux, uy, t = _unit_triples(plan)
    x = lo + (hi - lo) * ux
    y = lo + (hi - lo) * uy
    point, wx, wy = _combination(cls, x, y, t)
    inside = (point >= lo) & (point <= hi)
    x, y, t, point, wx, wy = (v[inside] for v in (x, y, t, point, wx, wy))
    try:
        fx = f(x)
        fy = f(y)
        fp = f(point)
    except ex.DomainError as err:
        i = err.index
        err.witness = (float(x[i]), float(y[i]), float(t[i]))
        raise
    margin = wx * fx + wy * fy - fp
    worst = float(margin.min())
    status = "violated" if worst < -plan.tolerance else "certified-empirically"
    witness = None
    if status == "violated":
        ties = np.flatnonzero(margin == worst)
        i = min(ties, key=lambda k: (x[k], y[k], t[k]))
        witness = (float(x[i]), float(y[i]), float(t[i]))
    return Certificate(cls, (lo, hi), int(margin.size), worst, witness, status, plan.seed)


@functools.lru_cache(maxsize=4096)
def certify_cached(f, cls, domain, plan=SamplingPlan()):
    return certify(f, cls, domain, plan)


def lift_second_sense(g, s, upper, lower=1.0):
    """f(x) = g(ln x) on [lower, upper], claimed GA-s-convex in the second sense.

    ``g`` must be s-convex in the second sense on [0, ln(upper)]; since
    ln(x^t y^(1-t)) = t ln x + (1-t) ln y the claim transfers. Callers are
    expected to confirm it with :func:`certify` before relying on it.
    """
    if lower < 1.0:
        raise ValueError(f"lifted functions need x >= 1 so that ln x >= 0, got lower bound {lower}")
    if upper <= lower:
        raise ValueError(f"empty lift domain [{lower}, {upper}]")
    if isinstance(g, str):
        g = ex.parse_expr(g)
    elif isinstance(g, FunctionSpec):
        g = g.expr
    lifted = ex.substitute(g, ex.Call("ln", ex.X))
    return FunctionSpec(f"lift[{ex.to_text(g)}]", lifted, (float(lower), float(upper)),
                        (ConvexityClass("ga-s-second", s),))


# name -> (expression, claimed classes); claims are metadata, never trusted
_CATALOG = {
    "const": ("1", ("ga", "convex")),
    "x": ("x", ("ga", "convex")),
    "x2": ("x^2", ("ga", "convex")),
    "x1_5": ("x^1.5", ("ga", "convex")),
    "inv": ("1/x", ("ga", "convex")),
    "ln": ("ln(x)", ("ga",)),
    "exp_half": ("exp(x/2)", ("ga", "convex")),
    "neg_x": ("-x", ()),
    "xlnx": ("x*ln(x)", ("ga", "convex")),
    "sqrt": ("sqrt(x)", ("ga",)),
    "x2_5lnx": ("x^2.5*ln(x)", ()),
}


def catalog():
    return {name: get(name) for name in _CATALOG}


@functools.lru_cache(maxsize=None)
def get(name):
    try:
        text, claims = _CATALOG[name]
    except KeyError:
        raise KeyError(f"no catalog function {name!r}; known: {sorted(_CATALOG)}") from None
    return FunctionSpec(name, ex.parse_expr(text), claims=tuple(ConvexityClass(c) for c in claims))


def resolve(ref):
    """``@name`` looks up the catalog, anything else is parsed as an expression."""
    if isinstance(ref, FunctionSpec):
        return ref
    ref = ref.strip()
    if ref.startswith("@"):
        return get(ref[1:])
    return FunctionSpec.parse(ref)
