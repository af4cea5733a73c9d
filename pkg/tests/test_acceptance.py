"""Exit criteria. Each test prints exactly one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -m acceptance``; the lines are
repeated in an "acceptance criteria" section at the end of the session.
"""

import itertools
import json
import math
import time

import numpy as np
import pytest

from gaconvex import coeffs as cf
from gaconvex import expr as ex
from gaconvex import quad as qd
from gaconvex import verify as vf
from gaconvex.funcat import catalog, lift_second_sense
from gaconvex.means import mean_chain_batch
from gaconvex.scan import GridSpec, run_scan

pytestmark = pytest.mark.acceptance

S_GRID = (0.25, 0.5, 1.0)
AB_GRID = ((1.0, 2.0), (1.0, 5.0), (2.0, 3.0))
MARGIN = -1e-9


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_c1_means_chain(criterion):
    rng = np.random.default_rng(20240601)
    a = rng.uniform(0.0, 1e3, 1000)
    b = rng.uniform(0.0, 1e3, 1000)
    a, b = np.minimum(a, b), np.maximum(a, b)
    keep = (a > 0) & (a < b)
    a, b = a[keep], b[keep]
    mean_chain_batch(a[:2], b[:2])  # one-off JIT compilation is not part of the timing
    chain, dt = _timed(lambda: mean_chain_batch(a, b))
    strict = bool(np.all(np.diff(chain, axis=0) > 0))
    criterion(1, "means chain min<G<L<I<A<max", strict and a.size == 1000 and dt < 1.0,
              f"{a.size} pairs strict={strict} in {dt:.3f}s")


def test_c2_kernel_vs_simpson(criterion):
    patterns = sorted({(al, be) for cid in cf.IDS for s in S_GRID
                       for _, al, be, _ in cf.kernel_terms(cid, s)})
    worst = {}

    def run():
        for lam in (-20.0, -5.0, 0.0, 5.0, 20.0):
            for al, be in patterns:
                d = abs(cf.kernel(al, be, lam) - cf.simpson_oracle(al, be, lam, 10 ** 6))
                worst[lam] = max(worst.get(lam, 0.0), d)

    _, dt = _timed(run)
    bad = [lam for lam, d in worst.items() if d > 1e-9]
    detail = ", ".join(f"lam={lam:g}: {d:.2e}" for lam, d in sorted(worst.items()))
    criterion(2, f"|K - Simpson(1e6)| <= 1e-9 over {len(patterns)} (alpha,beta) patterns",
              not bad and dt < 30.0, f"{detail}; {dt:.1f}s")


def test_c3_identity_residuals(criterion):
    fs = ["x", "x^2", "1/x", "ln(x)", "exp(x/2)", "x^1.5"]
    pairs = [(1.0, 2.0), (0.5, 3.0), (1.0, math.e)]

    def run():
        return [qd.identity_residual(w, f, a, b) for w in qd.IDENTITIES for f in fs for a, b in pairs]

    res, dt = _timed(run)
    worst = max(res)
    criterion(3, "identity residuals <= 1e-8", len(res) == 54 and worst <= 1e-8 and dt < 10.0,
              f"{len(res)} checks, worst {worst:.1e}, {dt:.2f}s")


def test_c4_sharpness_constant(criterion):
    gaps = {s: vf.sharpness_gap(f"{s}+1", 1.0, 2.0, s) for s in (0.1, 0.25, 0.5, 0.75, 1.0)}
    bad = {s: g for s, g in gaps.items() if g > 1e-12}
    criterion(4, "f=s+1 attains (f(a)+f(b))/(s+1) within 1e-12", not bad,
              ", ".join(f"s={s:g}: {g:.2e}" for s, g in gaps.items()))


FUNCTIONS = ["1", "x", "x^2", "x^1.5", "exp(x/2)", "x*ln(x)", "ln(x)", "1/x", "sqrt(x)"]


def _c5_records():
    for (a, b), s in itertools.product(AB_GRID, S_GRID):
        for f in FUNCTIONS:
            yield vf.hh_s_convex(f, a, b, s)
            for sense in vf.SENSES:
                yield vf.ga_s_hh(f, a, b, s, sense)
        yield vf.ga_s_hh(lift_second_sense(f"x^{s}", s, b), a, b, s, "second")
        for f in FUNCTIONS:
            for sense, target in itertools.product(vf.SENSES, vf.TARGETS):
                for q in (1.0, 1.5, 2.0, 4.0):
                    yield vf.thm21(f, a, b, s, q, sense, target)
                for q in (1.5, 2.0, 4.0):
                    yield vf.thm22(f, a, b, s, q, sense, target)
            if s == S_GRID[0]:
                for q in (1.5, 2.0, 4.0):
                    yield vf.zhang_bounds(f, a, b, q, "power-mean")
                    yield vf.zhang_bounds(f, a, b, q, "hoelder")
                    for p in (1.0, q):
                        yield vf.zhang_bounds(f, a, b, q, "two-param", p=p)
                for direction in ("convex", "concave"):
                    yield vf.zcz_bound(f, a, b, direction)


def test_c5_theorem_margins(criterion):
    recs, dt = _timed(lambda: [r for r in _c5_records() if r.hypothesis != vf.UNVERIFIED])
    counts, failing = {}, {}
    for r in recs:
        counts[r.theorem_id] = counts.get(r.theorem_id, 0) + 1
        if r.worst_margin < MARGIN or r.status != vf.HOLDS:
            failing[r.theorem_id] = failing.get(r.theorem_id, 0) + 1
    fams = ", ".join(f"{k} {counts[k] - failing.get(k, 0)}/{counts[k]}" for k in sorted(counts))
    criterion(5, "margins >= -1e-9 for certified hypotheses", not failing and dt < 120.0,
              f"{fams}; {dt:.1f}s")


def test_c6_corollaries(criterion):
    pairs = [(1.0, 2.0), (1.0, 5.0), (2.0, 3.0), (0.5, 4.0), (1.0, math.e)]
    checks = [c for (a, b), q in itertools.product(pairs, (1.0, 1.5, 2.0, 4.0))
              for c in vf.corollary_consistency(a, b, q, "exp(x/2)")]
    worst = max(c.rel_diff for c in checks)
    criterion(6, "theorems at s=1 and q=1 reduce to the corollaries",
              all(c.ok for c in checks) and worst <= 1e-12,
              f"20 grid points, {len(checks)} comparisons, worst rel {worst:.1e}")


def test_c7_propositions(criterion):
    recs = [vf.prop_means(a, b, q, "prop1") for q in (1.0, 2.0, 3.0) for a, b in [(1, 2), (0.5, 4)]]
    recs += [vf.prop_means(a, b, q, "prop2") for q in (1.5, 2.0, 4.0) for a, b in [(0.25, 0.75), (0.5, 1)]]
    worst = min(r.worst_margin for r in recs)
    criterion(7, "special-means propositions", worst >= MARGIN and all(r.status == vf.HOLDS for r in recs),
              f"{len(recs)} records, worst margin {worst:.3e}")


def test_c8_parser_and_derivatives(criterion):
    from test_expr import CORPUS

    trips = sum(ex.parse_expr(ex.to_text(ex.parse_expr(t))) == ex.parse_expr(t)
                and ex.to_text(ex.parse_expr(t)) == "".join(t.split()) for t in CORPUS)
    rng = np.random.default_rng(8)
    worst = 0.0
    for f in catalog().values():
        x = rng.uniform(0.2, 5.0, 100)
        h = 1e-6 * x
        fd = (f(x + h) - f(x - h)) / (2 * h)
        d = f.dual(x)[1]
        worst = max(worst, float(np.max(np.abs(d - fd) / np.maximum(np.abs(fd), 1e-8))))
    criterion(8, "corpus round-trip and dual vs central differences",
              trips == len(CORPUS) == 50 and worst <= 1e-6,
              f"{trips}/{len(CORPUS)} round-trips, worst rel derivative diff {worst:.1e}")


def test_c9_scan_determinism(criterion):
    spec = GridSpec("thm21", f="exp(x/2)", a=[1.0, 2.0], b=[3.0, 5.0], s=list(S_GRID),
                    q=[1.0, 2.0], sense=["first", "second"], target=["trapezoid", "midpoint"], seed=11)
    bodies = {}
    for w in (1, 4, 16):
        rep = run_scan(spec, workers=w)
        bodies[w] = (rep.content_hash(), json.dumps(rep.body(), sort_keys=True))
    same = len(set(bodies.values())) == 1
    criterion(9, "scan identical for workers 1/4/16", same,
              f"{len(rep.records)} records, hash {bodies[1][0][:12]}")
