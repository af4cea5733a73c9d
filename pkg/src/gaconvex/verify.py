"""Both sides of every Hermite-Hadamard type inequality, with signed margins.

Each verifier returns a :class:`VerificationRecord`. Margins are oriented so
that a nonnegative value means the inequality holds. When the theorem's
hypothesis (a convexity class for f or for |f'|^q) cannot be certified
empirically the record is still evaluated and stamped
``"unverified hypothesis"``; such records are informative, not failures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import expr as ex
from .coeffs import LAMBDA_LIMIT, CoefficientId, coefficient
from .funcat import ConvexityClass, FunctionSpec, SamplingPlan, certify_cached, resolve
from .means import arithmetic_mean, geometric_mean, identric_mean, logarithmic_mean
from .quad import QUAD_TOL, am_integral, gm_integral

MARGIN_TOL = 1e-9

HOLDS = "holds"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"

CERTIFIED = "certified"
UNVERIFIED = "unverified hypothesis"
NOT_REQUIRED = "none required"

SENSES = ("first", "second")
TARGETS = ("trapezoid", "midpoint")
ZHANG_VARIANTS = ("power-mean", "hoelder", "two-param")


@dataclass(frozen=True)
class VerificationRecord:
    theorem_id: str
    inputs: dict
    sides: dict
    margins: dict
    status: str
    quad_error: float
    hypothesis: str = NOT_REQUIRED
    notes: tuple = field(default=())

    @property
    def worst_margin(self):
        return min(self.margins.values()) if self.margins else math.inf

    def sort_key(self):
        return (self.theorem_id, tuple(sorted((k, str(v)) for k, v in self.inputs.items())))

    def as_dict(self):
        return {
            "theorem_id": self.theorem_id, "inputs": dict(self.inputs),
            "sides": dict(self.sides), "margins": dict(self.margins),
            "status": self.status, "quad_error": self.quad_error,
            "hypothesis": self.hypothesis, "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d["theorem_id"], d["inputs"], d["sides"], d["margins"], d["status"],
                   d["quad_error"], d.get("hypothesis", NOT_REQUIRED), tuple(d.get("notes", ())))


def classify(margins, quad_error, tol=MARGIN_TOL, converged=True):
    # an unreliable integral makes the sign meaningless, so it takes precedence
    if not converged or quad_error > tol / 10.0:
        return INCONCLUSIVE
    if all(m >= -tol for m in margins.values()):
        return HOLDS
    return VIOLATED


def _record(theorem_id, inputs, sides, margins, quad, tol, hypothesis, notes=()):
    err = max((q.error_estimate for q in quad), default=0.0)
    converged = all(q.converged for q in quad)
    status = classify(margins, err, tol, converged)
    if not converged:
        notes = tuple(notes) + ("quadrature hit the panel budget",)
    return VerificationRecord(theorem_id, inputs, sides, margins, status, err, hypothesis, tuple(notes))


def _pair(a, b):
    a = float(a)
    b = float(b)
    if not (0.0 < a < b < math.inf):
        raise ValueError(f"need 0 < a < b, got a={a}, b={b}")
    return a, b


def _check_s(s):
    s = float(s)
    if not (0.0 < s <= 1.0):
        raise ValueError(f"s must lie in (0, 1], got {s}")
    return s


def _check_sense(sense):
    if sense not in SENSES:
        raise ValueError(f"sense must be one of {SENSES}, got {sense!r}")


def _check_target(target):
    if target not in TARGETS:
        raise ValueError(f"target must be one of {TARGETS}, got {target!r}")


def _hypothesis(g, cls, a, b, plan, check):
    """Certify ``g`` in ``cls`` on [a, b]; returns (stamp, notes)."""
    if not check:
        return UNVERIFIED, ("hypothesis not checked",)
    try:
        cert = certify_cached(g, cls, (a, b), plan)
    except ex.DomainError as err:
        return UNVERIFIED, (f"certification of {g.name} failed to evaluate: {err}",)
    if cert.certified:
        return CERTIFIED, ()
    return UNVERIFIED, (f"{g.name} not {cls.label()} on [{a:g}, {b:g}]: "
                        f"margin {cert.worst_margin:.3e} at {cert.witness}",)


def _fn_inputs(f):
    return {"f": f.name, "expr": f.text}


def _deriv_q(f, x, q):
    return abs(float(ex.evaluate(f.derivative, x))) ** q


# ---------------------------------------------------------------------------
# Hermite-Hadamard for s-convex (second sense) and GA-s-convex functions


def hh_s_convex(f, a, b, s, tol=MARGIN_TOL, quad_tol=QUAD_TOL, plan=SamplingPlan(), check=True):
    """2^(s-1) f((a+b)/2) <= (1/(b-a)) int_a^b f <= (f(a)+f(b))/(s+1)."""
    f = resolve(f)
    a, b = _pair(a, b)
    s = _check_s(s)
    hyp, notes = _hypothesis(f, ConvexityClass("s-second", s), a, b, plan, check)
    am = am_integral(f, a, b, quad_tol)
    lhs = 2.0 ** (s - 1.0) * f(0.5 * (a + b))
    rhs = (f(a) + f(b)) / (s + 1.0)
    sides = {"lhs": lhs, "middle": am.value, "rhs": rhs}
    margins = {"left": am.value - lhs, "right": rhs - am.value}
    inputs = {**_fn_inputs(f), "a": a, "b": b, "s": s}
    return _record("hh-s", inputs, sides, margins, [am], tol, hyp, notes)


def ga_s_hh(f, a, b, s, sense, tol=MARGIN_TOL, quad_tol=QUAD_TOL, plan=SamplingPlan(), check=True):
    """Geometric-mean HH bounds for GA-s-convex f.

    first:  f(sqrt(ab))          <= gm <= (f(a) + s f(b))/(s+1)
    second: 2^(s-1) f(sqrt(ab))  <= gm <= (f(a) + f(b))/(s+1)
    """
    f = resolve(f)
    a, b = _pair(a, b)
    s = _check_s(s)
    _check_sense(sense)
    hyp, notes = _hypothesis(f, ConvexityClass(f"ga-s-{sense}", s), a, b, plan, check)
    gm = gm_integral(f, a, b, quad_tol)
    fg = f(geometric_mean(a, b))
    fa, fb = f(a), f(b)
    if sense == "first":
        lhs = fg
        rhs = (fa + s * fb) / (s + 1.0)
    else:
        lhs = 2.0 ** (s - 1.0) * fg
        rhs = (fa + fb) / (s + 1.0)
    sides = {"lhs": lhs, "middle": gm.value, "rhs": rhs}
    margins = {"left": gm.value - lhs, "right": rhs - gm.value}
    inputs = {**_fn_inputs(f), "a": a, "b": b, "s": s, "sense": sense}
    return _record("ga-s-hh", inputs, sides, margins, [gm], tol, hyp, notes)


def sharpness_gap(f, a, b, s, quad_tol=QUAD_TOL):
    """|gm_integral(f) - (f(a)+f(b))/(s+1)|; zero when the upper constant is attained."""
    f = resolve(f)
    a, b = _pair(a, b)
    s = _check_s(s)
    gm = gm_integral(f, a, b, quad_tol)
    return abs(gm.value - (f(a) + f(b)) / (s + 1.0))


# ---------------------------------------------------------------------------
# bounds on b f(b) - a f(a) - int_a^b f for |f'|^q GA-convex


def zhang_bounds(f, a, b, q, variant, p=None, tol=MARGIN_TOL, quad_tol=QUAD_TOL,
                 plan=SamplingPlan(), check=True):
    f = resolve(f)
    a, b = _pair(a, b)
    q = float(q)
    if variant not in ZHANG_VARIANTS:
        raise ValueError(f"variant must be one of {ZHANG_VARIANTS}, got {variant!r}")
    if variant == "power-mean" and not q >= 1.0:
        raise ValueError(f"power-mean variant needs q >= 1, got {q}")
    if variant != "power-mean" and not q > 1.0:
        raise ValueError(f"{variant} variant needs q > 1, got {q}")
    if variant == "two-param":
        if p is None or not (0.0 < float(p) < 2.0 * q):
            raise ValueError(f"two-param variant needs 0 < p < 2q, got p={p}, q={q}")
        p = float(p)
    hyp, notes = _hypothesis(f.derivative_power(q), ConvexityClass("ga"), a, b, plan, check)

    am = am_integral(f, a, b, quad_tol / (b - a))
    lhs = abs(b * f(b) - a * f(a) - (b - a) * am.value)
    err_am = (b - a) * am.error_estimate
    da, db = _deriv_q(f, a, q), _deriv_q(f, b, q)
    u = math.log(b) - math.log(a)
    if variant == "power-mean":
        l2 = logarithmic_mean(a * a, b * b)
        body = (l2 - a * a) * da + (b * b - l2) * db
        rhs = ((b - a) * arithmetic_mean(a, b)) ** (1.0 - 1.0 / q) / 2.0 ** (1.0 / q) * body ** (1.0 / q)
    elif variant == "hoelder":
        r = 2.0 * q / (q - 1.0)
        lr = logarithmic_mean(a ** r, b ** r)
        rhs = u * (lr - a ** r) ** (1.0 - 1.0 / q) * ((da + db) / 2.0) ** (1.0 / q)
    else:
        m = (2.0 * q - p) / (q - 1.0)
        lp = logarithmic_mean(a ** p, b ** p)
        body = (lp - a ** p) * da + (b ** p - lp) * db
        rhs = (u ** (1.0 - 1.0 / q) / p ** (1.0 / q)
               * logarithmic_mean(a ** m, b ** m) ** (1.0 - 1.0 / q) * body ** (1.0 / q))
    sides = {"lhs": lhs, "rhs": rhs}
    margins = {"bound": rhs - lhs}
    inputs = {**_fn_inputs(f), "a": a, "b": b, "q": q, "variant": variant}
    if p is not None:
        inputs["p"] = p
    rec = _record(f"zhang-{variant}", inputs, sides, margins, [am], tol, hyp, notes)
    # the lhs error is scaled by b - a, report that instead of the raw average's
    return VerificationRecord(rec.theorem_id, rec.inputs, rec.sides, rec.margins,
                              classify(margins, err_am, tol, am.converged), err_am,
                              rec.hypothesis, rec.notes)


def zcz_bound(f, a, b, direction="convex", tol=MARGIN_TOL, quad_tol=QUAD_TOL,
              plan=SamplingPlan(), check=True):
    """f(I) <= am <= ((b-L) f(b) + (L-a) f(a))/(b-a); reversed for GA-concave f."""
    f = resolve(f)
    a, b = _pair(a, b)
    if direction not in ("convex", "concave"):
        raise ValueError(f"direction must be 'convex' or 'concave', got {direction!r}")
    target = f if direction == "convex" else f.negated()
    hyp, notes = _hypothesis(target, ConvexityClass("ga"), a, b, plan, check)
    am = am_integral(f, a, b, quad_tol)
    lm = logarithmic_mean(a, b)
    lhs = f(identric_mean(a, b))
    rhs = ((b - lm) * f(b) + (lm - a) * f(a)) / (b - a)
    sign = 1.0 if direction == "convex" else -1.0
    sides = {"lhs": lhs, "middle": am.value, "rhs": rhs}
    margins = {"left": sign * (am.value - lhs), "right": sign * (rhs - am.value)}
    inputs = {**_fn_inputs(f), "a": a, "b": b, "direction": direction}
    return _record("zcz", inputs, sides, margins, [am], tol, hyp, notes)


# ---------------------------------------------------------------------------
# bounds built from the two geometric-mean identities


_THM21_IDS = {"second": ("c1", "c2", "c3", "c4"), "first": ("c5", "c2", "c6", "c4")}
_THM22_IDS = {"second": ("c7", "c8", "c9", "c10"), "first": ("c11", "c8", "c12", "c10")}


def _coeffs(ids, s, q, a, b):
    return [coefficient(CoefficientId(i, s, q, a, b)) for i in ids]


def _identity_lhs(f, a, b, target, quad_tol):
    gm = gm_integral(f, a, b, quad_tol)
    if target == "trapezoid":
        return abs(0.5 * (f(a) + f(b)) - gm.value), gm
    return abs(f(geometric_mean(a, b)) - gm.value), gm


def _bracket(a, b, cs, d1, d2, d3, d4, q):
    """a {c1 d1 + c2 d2}^(1/q) + b {c3 d3 + c4 d4}^(1/q)."""
    return (a * (cs[0] * d1 + cs[1] * d2) ** (1.0 / q)
            + b * (cs[2] * d3 + cs[3] * d4) ** (1.0 / q))


def _identity_rhs(f, a, b, s, q, sense, target, ids, prefactor):
    u = math.log(b) - math.log(a)
    da, db = _deriv_q(f, a, q), _deriv_q(f, b, q)
    if target == "trapezoid":
        cs = _coeffs(ids[sense], s, q, a, b)
        return prefactor(u, q, target) * _bracket(a, b, cs, da, db, db, da, q)
    dg = _deriv_q(f, geometric_mean(a, b), q)
    cs = _coeffs(ids[sense], s, q / 2.0, a, b)
    return prefactor(u, q, target) * _bracket(a, b, cs, da, dg, db, dg, q)


def _power_prefactor(u, q, target):
    return u * 0.5 ** ((2.0 if target == "trapezoid" else 3.0) - 1.0 / q)


def _hoelder_prefactor(u, q, target):
    k = ((q - 1.0) / (2.0 * q - 1.0)) ** (1.0 - 1.0 / q)
    return (u / 2.0 if target == "trapezoid" else u / 4.0) * k


def _guard_ratio(a, b, q):
    if q * (math.log(b) - math.log(a)) > LAMBDA_LIMIT:
        raise ValueError(f"b/a = {b / a:g} exceeds exp({LAMBDA_LIMIT:g}/q); coefficients would overflow")


def _identity_bound(theorem_id, ids, prefactor, f, a, b, s, q, sense, target, tol, quad_tol, plan, check):
    f = resolve(f)
    a, b = _pair(a, b)
    s = _check_s(s)
    _check_sense(sense)
    _check_target(target)
    _guard_ratio(a, b, q)
    hyp, notes = _hypothesis(f.derivative_power(q), ConvexityClass(f"ga-s-{sense}", s), a, b, plan, check)
    lhs, gm = _identity_lhs(f, a, b, target, quad_tol)
    rhs = _identity_rhs(f, a, b, s, q, sense, target, ids, prefactor)
    inputs = {**_fn_inputs(f), "a": a, "b": b, "s": s, "q": q, "sense": sense, "target": target}
    return _record(theorem_id, inputs, {"lhs": lhs, "rhs": rhs}, {"bound": rhs - lhs}, [gm],
                   tol, hyp, notes)


def thm21(f, a, b, s, q, sense="second", target="trapezoid", tol=MARGIN_TOL, quad_tol=QUAD_TOL,
          plan=SamplingPlan(), check=True):
    """Power-mean bound on the trapezoid or midpoint deviation from gm_integral (q >= 1)."""
    q = float(q)
    if not q >= 1.0:
        raise ValueError(f"thm21 needs q >= 1, got {q}")
    return _identity_bound("thm21", _THM21_IDS, _power_prefactor, f, a, b, s, q, sense, target,
                           tol, quad_tol, plan, check)


def thm22(f, a, b, s, q, sense="second", target="trapezoid", tol=MARGIN_TOL, quad_tol=QUAD_TOL,
          plan=SamplingPlan(), check=True):
    """Hoelder bound on the trapezoid or midpoint deviation from gm_integral (q > 1)."""
    q = float(q)
    if not q > 1.0:
        raise ValueError(f"thm22 needs q > 1, got {q}")
    return _identity_bound("thm22", _THM22_IDS, _hoelder_prefactor, f, a, b, s, q, sense, target,
                           tol, quad_tol, plan, check)


# ---------------------------------------------------------------------------
# specialisations printed as separate corollaries


def _e_moments(lam):
    """(int e^(lam t), int t e^(lam t), int t^2 e^(lam t)) over [0, 1] in closed form."""
    if lam == 0.0:
        return 1.0, 0.5, 1.0 / 3.0
    em = math.expm1(lam)
    e = em + 1.0
    m0 = em / lam
    m1 = (lam * e - em) / lam ** 2
    m2 = (lam * lam * e - 2.0 * lam * e + 2.0 * em) / lam ** 3
    return m0, m1, m2


def _s1_coeffs(kind, q, a, b):
    """c1..c4 (kind 21) or c7..c10 (kind 22) at s = 1, by integration by parts."""
    lam = q * (math.log(b) - math.log(a))
    p0, p1, p2 = _e_moments(lam)
    n0, n1, n2 = _e_moments(-lam)
    if kind == 21:
        return [p1 - p2, p2, n1 - n2, n2]
    return [p0 - p1, p1, n0 - n1, n1]


def corollary_rhs(which, f, a, b, q, s=1.0):
    """Right-hand sides exactly as the corollaries print them.

    ``which`` is one of ``s1-power-trapezoid``, ``s1-power-midpoint``,
    ``s1-hoelder-trapezoid``, ``s1-hoelder-midpoint`` (GA-convex case) or
    ``q1-{second,first}-{trapezoid,midpoint}`` (first-power case at ``s``).
    """
    f = resolve(f)
    a, b = _pair(a, b)
    u = math.log(b) - math.log(a)
    fa, fb = abs(float(ex.evaluate(f.derivative, a))), abs(float(ex.evaluate(f.derivative, b)))
    fg = abs(float(ex.evaluate(f.derivative, geometric_mean(a, b))))
    if which.startswith("s1-"):
        _, family, target = which.split("-")
        kind = 21 if family == "power" else 22
        qq = q if target == "trapezoid" else q / 2.0
        c = _s1_coeffs(kind, qq, a, b)
        if kind == 21:
            pre = u * 0.5 ** ((2.0 if target == "trapezoid" else 3.0) - 1.0 / q)
        else:
            pre = (u / 2.0 if target == "trapezoid" else u / 4.0) * ((q - 1.0) / (2.0 * q - 1.0)) ** (1.0 - 1.0 / q)
        if target == "trapezoid":
            return pre * (a * (c[0] * fa ** q + c[1] * fb ** q) ** (1.0 / q)
                          + b * (c[2] * fb ** q + c[3] * fa ** q) ** (1.0 / q))
        return pre * (a * (c[0] * fa ** q + c[1] * fg ** q) ** (1.0 / q)
                      + b * (c[2] * fb ** q + c[3] * fg ** q) ** (1.0 / q))
    _, sense, target = which.split("-")
    first, second, third, fourth = _THM21_IDS[sense]
    if target == "trapezoid":
        c1, c2, c3, c4 = (coefficient(CoefficientId(i, s, 1.0, a, b)) for i in (first, second, third, fourth))
        return u / 2.0 * ((a * c1 + b * c4) * fa + (b * c3 + a * c2) * fb)
    c1, c2, c3, c4 = (coefficient(CoefficientId(i, s, 0.5, a, b)) for i in (first, second, third, fourth))
    return u / 4.0 * (a * c1 * fa + b * c3 * fb + (a * c2 + b * c4) * fg)


@dataclass(frozen=True)
class CorollaryCheck:
    name: str
    theorem_rhs: float
    corollary_rhs: float
    rel_diff: float
    ok: bool

    def as_dict(self):
        return {"name": self.name, "theorem_rhs": self.theorem_rhs,
                "corollary_rhs": self.corollary_rhs, "rel_diff": self.rel_diff, "ok": self.ok}


COROLLARY_RTOL = 1e-12


def _compare(name, thm_value, cor_value, rtol):
    scale = max(abs(thm_value), abs(cor_value))
    rel = abs(thm_value - cor_value) / scale if scale > 0 else 0.0
    return CorollaryCheck(name, thm_value, cor_value, rel, rel <= rtol)


def corollary_consistency(a, b, q, f, s=0.5, rtol=COROLLARY_RTOL):
    """Compare theorem right-hand sides at s = 1 and q = 1 with the printed corollaries."""
    f = resolve(f)
    a, b = _pair(a, b)
    q = float(q)
    checks = []
    for target in TARGETS:
        if q >= 1.0:
            rec = thm21(f, a, b, 1.0, q, "second", target, check=False)
            checks.append(_compare(f"s1-power-{target}", rec.sides["rhs"],
                                   corollary_rhs(f"s1-power-{target}", f, a, b, q), rtol))
        if q > 1.0:
            rec = thm22(f, a, b, 1.0, q, "second", target, check=False)
            checks.append(_compare(f"s1-hoelder-{target}", rec.sides["rhs"],
                                   corollary_rhs(f"s1-hoelder-{target}", f, a, b, q), rtol))
        for sense in SENSES:
            rec = thm21(f, a, b, s, 1.0, sense, target, check=False)
            name = f"q1-{sense}-{target}"
            checks.append(_compare(name, rec.sides["rhs"], corollary_rhs(name, f, a, b, 1.0, s), rtol))
    return checks


# ---------------------------------------------------------------------------
# special-means propositions


def prop_means(a, b, q, which, tol=MARGIN_TOL):
    """Bounds on |A - L| and |G - L| obtained from the GA-convex corollaries with f(x) = x."""
    a, b = _pair(a, b)
    q = float(q)
    u = math.log(b) - math.log(a)
    A, G, L = arithmetic_mean(a, b), geometric_mean(a, b), logarithmic_mean(a, b)
    if which == "prop1":
        if not q >= 1.0:
            raise ValueError(f"prop1 needs q >= 1, got {q}")
        lq = logarithmic_mean(a ** q, b ** q)
        lh = logarithmic_mean(a ** (q / 2.0), b ** (q / 2.0))
        rhs_al = (u ** (1.0 - 1.0 / q) * 0.5 ** (2.0 - 1.0 / q) * (1.0 / q) ** (1.0 / q)
                  * ((b ** q - lq) ** (1.0 / q) + (lq - a ** q) ** (1.0 / q)))
        rhs_gl = (u ** (1.0 - 1.0 / q) * 0.5 ** (3.0 - 1.0 / q) * (2.0 / q) ** (1.0 / q)
                  * (math.sqrt(a) * (b ** (q / 2.0) - lh) ** (1.0 / q)
                     + math.sqrt(b) * (lh - a ** (q / 2.0)) ** (1.0 / q)))
    elif which == "prop2":
        if not q > 1.0:
            raise ValueError(f"prop2 needs q > 1, got {q}")
        if b > 1.0:
            raise ValueError(f"prop2 requires b <= 1, got b={b}")
        k = ((q - 1.0) / (2.0 * q - 1.0)) ** (1.0 - 1.0 / q)
        lq = logarithmic_mean(a ** q, b ** q) ** (1.0 / q)
        rhs_al = u * k * lq
        rhs_gl = 0.5 * u * k * lq * arithmetic_mean(math.sqrt(a), math.sqrt(b))
    else:
        raise ValueError(f"which must be 'prop1' or 'prop2', got {which!r}")
    lhs_al, lhs_gl = abs(A - L), abs(G - L)
    sides = {"lhs_al": lhs_al, "rhs_al": rhs_al, "lhs_gl": lhs_gl, "rhs_gl": rhs_gl}
    margins = {"al": rhs_al - lhs_al, "gl": rhs_gl - lhs_gl}
    inputs = {"a": a, "b": b, "q": q}
    return VerificationRecord(which, inputs, sides, margins, classify(margins, 0.0, tol), 0.0,
                              NOT_REQUIRED, ())


THEOREMS = ("hh-s", "zhang-pm", "zhang-hoelder", "zhang-2p", "zcz", "ga-s-hh",
            "thm21", "thm22", "prop1", "prop2")


def run(theorem, f=None, a=None, b=None, s=1.0, q=2.0, p=None, sense="second",
        target="trapezoid", direction="convex", tol=MARGIN_TOL, plan=SamplingPlan()):
    """Dispatch on the short theorem names used by the command line."""
    if theorem == "hh-s":
        return hh_s_convex(f, a, b, s, tol, plan=plan)
    if theorem == "ga-s-hh":
        return ga_s_hh(f, a, b, s, sense, tol, plan=plan)
    if theorem == "zhang-pm":
        return zhang_bounds(f, a, b, q, "power-mean", tol=tol, plan=plan)
    if theorem == "zhang-hoelder":
        return zhang_bounds(f, a, b, q, "hoelder", tol=tol, plan=plan)
    if theorem == "zhang-2p":
        return zhang_bounds(f, a, b, q, "two-param", p=p, tol=tol, plan=plan)
    if theorem == "zcz":
        return zcz_bound(f, a, b, direction, tol, plan=plan)
    if theorem == "thm21":
        return thm21(f, a, b, s, q, sense, target, tol, plan=plan)
    if theorem == "thm22":
        return thm22(f, a, b, s, q, sense, target, tol, plan=plan)
    if theorem in ("prop1", "prop2"):
        return prop_means(a, b, q, theorem, tol)
    raise ValueError(f"unknown theorem {theorem!r}; choose from {THEOREMS}")


__all__ = ["VerificationRecord", "FunctionSpec", "hh_s_convex", "ga_s_hh", "sharpness_gap",
           "zhang_bounds", "zcz_bound", "thm21", "thm22", "corollary_rhs", "corollary_consistency",
           "prop_means", "run", "classify", "THEOREMS"]
