"""Parameter-grid scans over one theorem and the JSON/CSV report they produce."""

from __future__ import annotations

import csv
import hashlib
import io
import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone

from . import __version__
from . import verify as vf
from .funcat import SamplingPlan

SCHEMA_VERSION = 1

_Q_STRICT = {"thm22", "zhang-hoelder", "zhang-2p", "prop2"}
_Q_WEAK = {"thm21", "zhang-pm", "prop1"}
_USES_S = {"hh-s", "ga-s-hh", "thm21", "thm22"}
_USES_Q = _Q_STRICT | _Q_WEAK
_USES_SENSE = {"ga-s-hh", "thm21", "thm22"}
_USES_TARGET = {"thm21", "thm22"}
_USES_F = set(vf.THEOREMS) - {"prop1", "prop2"}


def parse_values(text):
    """'1,2,3' or 'start:stop:step' (inclusive) or a mix joined by commas."""
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            start, stop, step = (float(v) for v in part.split(":"))
            if step <= 0:
                raise ValueError(f"range step must be > 0 in {part!r}")
            n = int(math.floor((stop - start) / step + 1e-9)) + 1
            out.extend(round(start + i * step, 12) for i in range(max(n, 0)))
        else:
            out.append(float(part))
    return out


@dataclass(frozen=True)
class GridSpec:
    theorem: str
    f: str = "x"
    a: tuple = (1.0,)
    b: tuple = (2.0,)
    s: tuple = (1.0,)
    q: tuple = (2.0,)
    p: tuple = ()
    sense: tuple = ("second",)
    target: tuple = ("trapezoid",)
    direction: str = "convex"
    tol: float = vf.MARGIN_TOL
    seed: int = 0

    def __post_init__(self):
        if self.theorem not in vf.THEOREMS:
            raise ValueError(f"unknown theorem {self.theorem!r}; choose from {vf.THEOREMS}")
        for name in ("a", "b", "s", "q", "p"):
            object.__setattr__(self, name, tuple(float(v) for v in getattr(self, name)))
        for name in ("sense", "target"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    def as_dict(self):
        d = asdict(self)
        return {k: list(v) if isinstance(v, tuple) else v for k, v in d.items()}

    def points(self):
        """Every grid point as a dict, in a fixed order; unused axes collapse to one value."""
        th = self.theorem
        s_axis = self.s if th in _USES_S else (None,)
        q_axis = self.q if th in _USES_Q else (None,)
        p_axis = (self.p or (None,)) if th == "zhang-2p" else (None,)
        sense_axis = self.sense if th in _USES_SENSE else (None,)
        target_axis = self.target if th in _USES_TARGET else (None,)
        for a, b, s, q, p, sense, target in itertools.product(
                self.a, self.b, s_axis, q_axis, p_axis, sense_axis, target_axis):
            yield {"a": a, "b": b, "s": s, "q": q, "p": p, "sense": sense, "target": target}


def skip_reason(theorem, pt):
    a, b, s, q, p = pt["a"], pt["b"], pt["s"], pt["q"], pt["p"]
    if not (0 < a < b):
        return "a ≥ b" if a >= b else "a ≤ 0"
    if s is not None and not (0 < s <= 1):
        return "s outside (0, 1]"
    if theorem in _Q_STRICT and not q > 1:
        return "q ≤ 1"
    if theorem in _Q_WEAK and not q >= 1:
        return "q < 1"
    if theorem == "zhang-2p" and (p is None or not 0 < p < 2 * q):
        return "p outside (0, 2q)"
    if theorem == "prop2" and b > 1:
        return "b > 1"
    if theorem in ("thm21", "thm22") and q * (math.log(b) - math.log(a)) > 700:
        return "b/a > exp(700/q)"
    return None


def _point_key(pt):
    return tuple((v is None, v if v is not None else 0) for v in
                 (pt["a"], pt["b"], pt["s"], pt["q"], pt["p"], pt["sense"], pt["target"]))


def _evaluate(args):
    spec, pt = args
    plan = SamplingPlan(seed=spec.seed)
    try:
        rec = vf.run(spec.theorem, f=spec.f if spec.theorem in _USES_F else None,
                     a=pt["a"], b=pt["b"], s=pt["s"] if pt["s"] is not None else 1.0,
                     q=pt["q"] if pt["q"] is not None else 2.0, p=pt["p"],
                     sense=pt["sense"] or "second", target=pt["target"] or "trapezoid",
                     direction=spec.direction, tol=spec.tol, plan=plan)
    except (ValueError, ArithmeticError) as err:
        return None, str(err)
    return rec.as_dict(), None


@dataclass
class Report:
    spec: dict
    records: list
    skipped: list
    summary: dict
    command: str = "scan"
    tool_version: str = __version__
    schema_version: int = SCHEMA_VERSION
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    def body(self):
        """Everything except the timestamp, in a fixed key order."""
        return {
            "schema_version": self.schema_version, "tool_version": self.tool_version,
            "command": self.command, "spec": self.spec, "records": self.records,
            "skipped": self.skipped, "summary": self.summary,
        }

    def content_hash(self):
        text = json.dumps(self.body(), sort_keys=True, allow_nan=True)
        return hashlib.sha256(text.encode()).hexdigest()

    def as_dict(self):
        d = self.body()
        d["timestamp"] = self.timestamp
        d["content_hash"] = self.content_hash()
        return d


def summarize(records, skipped):
    counts = {vf.HOLDS: 0, vf.VIOLATED: 0, vf.INCONCLUSIVE: 0}
    worst, worst_inputs, worst_id = math.inf, None, None
    for r in records:
        counts[r["status"]] += 1
        m = min(r["margins"].values()) if r["margins"] else math.inf
        if m < worst:
            worst, worst_inputs, worst_id = m, r["inputs"], r["theorem_id"]
    return {
        "records": len(records), "holds": counts[vf.HOLDS], "violated": counts[vf.VIOLATED],
        "inconclusive": counts[vf.INCONCLUSIVE], "skipped": len(skipped),
        "worst_margin": worst if records else None, "worst_theorem": worst_id,
        "worst_inputs": worst_inputs,
    }


def run_scan(spec, workers=1):
    """Evaluate every grid point; the report does not depend on ``workers``."""
    todo, skipped = [], []
    for pt in spec.points():
        reason = skip_reason(spec.theorem, pt)
        if reason is None:
            todo.append(pt)
        else:
            skipped.append({"point": pt, "reason": reason})
    jobs = [(spec, pt) for pt in todo]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_evaluate(j) for j in jobs]
    records = []
    for pt, (rec, err) in zip(todo, results):
        if rec is None:
            skipped.append({"point": pt, "reason": err})
        else:
            records.append((pt, rec))
    records.sort(key=lambda item: _point_key(item[0]))
    skipped.sort(key=lambda item: _point_key(item["point"]))
    recs = [r for _, r in records]
    return Report(spec.as_dict(), recs, skipped, summarize(recs, skipped))


# ---------------------------------------------------------------------------
# emission

_FIXED = ["theorem_id", "status", "hypothesis", "quad_error"]


def _flatten(d, prefix=""):
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, (list, tuple)):
            out[key] = "; ".join(str(x) for x in v)
        else:
            out[key] = v
    return out


def _cell(v):
    if isinstance(v, float):
        return format(v, ".17g")
    if v is None:
        return ""
    return str(v)


def to_csv(records):
    """One row per record; known leading columns first, then the rest sorted."""
    rows = [_flatten(r) for r in records]
    present = {k for row in rows for k in row}
    lead = [c for c in _FIXED if c in present] if rows else list(_FIXED)
    columns = lead + sorted(present - set(lead))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def to_json(report):
    d = report.as_dict() if isinstance(report, Report) else report
    return json.dumps(d, indent=2, allow_nan=True) + "\n"


def emit_report(report, fmt="json", path=None):
    """Write ``report`` as JSON or CSV to ``path`` (stdout text is returned when path is None)."""
    if fmt == "json":
        text = to_json(report)
    elif fmt == "csv":
        recs = report.records if isinstance(report, Report) else report["records"]
        text = to_csv(recs)
    else:
        raise ValueError(f"format must be 'json' or 'csv', got {fmt!r}")
    if path is not None and str(path) != "-":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text


def load_report(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
