"""Command-line front end.

Exit codes: 0 holds / certified / within tolerance, 1 violated, 2 inconclusive,
64 usage error (bad flags or parameter values outside a theorem's hypotheses).
"""

from __future__ import annotations

import argparse
import math
import sys

from . import __version__
from . import coeffs, funcat, means, quad
from . import expr as ex
from . import verify as vf
from .scan import GridSpec, Report, emit_report, parse_values, run_scan, summarize

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--tol", type=float, default=None, help="pass/fail tolerance")
    p.add_argument("--seed", type=int, default=0, help="seed for randomised certification samples")
    p.add_argument("--workers", type=int, default=1, help="worker processes (scan only)")
    return p


def build_parser():
    common = _common()
    parser = _Parser(prog="gaconvex", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("means", parents=[common], help="special means and the ordering chain")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--p", type=float, default=None, help="also report the p-logarithmic mean")

    p = sub.add_parser("coeff", parents=[common], help="coefficient c1..c12 through the beta kernel")
    p.add_argument("--id", required=True, choices=coeffs.IDS)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)

    p = sub.add_parser("certify", parents=[common], help="sample a convexity-class inequality")
    p.add_argument("--f", required=True, help="expression in x or @catalog-name")
    p.add_argument("--class", dest="kind", required=True, choices=funcat.KINDS)
    p.add_argument("--s", type=float, default=1.0)
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)

    p = sub.add_parser("identity", parents=[common], help="residual of an integral identity")
    p.add_argument("--which", required=True, choices=("zhang", "iscan-midpoint", "iscan-trapezoid"))
    p.add_argument("--f", required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)

    p = sub.add_parser("verify", parents=[common], help="evaluate one inequality")
    p.add_argument("--theorem", required=True, choices=vf.THEOREMS)
    p.add_argument("--f", default="x")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--s", type=float, default=1.0)
    p.add_argument("--q", type=float, default=2.0)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--sense", choices=vf.SENSES, default="second")
    p.add_argument("--target", choices=vf.TARGETS, default="trapezoid")
    p.add_argument("--direction", choices=("convex", "concave"), default="convex")

    p = sub.add_parser("scan", parents=[common], help="grid scan of one theorem")
    p.add_argument("--theorem", required=True, choices=vf.THEOREMS)
    p.add_argument("--f", default="x")
    for axis, default in (("a", "1"), ("b", "2"), ("s", "1"), ("q", "2"), ("p", "")):
        p.add_argument(f"--{axis}", default=default, help="comma list and/or start:stop:step ranges")
    p.add_argument("--sense", default="second", help="comma list of first,second")
    p.add_argument("--target", default="trapezoid", help="comma list of trapezoid,midpoint")
    p.add_argument("--direction", choices=("convex", "concave"), default="convex")
    return parser


def _report(command, args, records, spec=None):
    spec = spec if spec is not None else {k: v for k, v in vars(args).items()
                                          if k not in ("out", "format", "workers", "command")}
    return Report(spec, records, [], summarize_generic(records), command=command)


def summarize_generic(records):
    if all("status" in r and "margins" in r for r in records):
        return summarize(records, [])
    return {"records": len(records)}


def _emit(report, args):
    text = emit_report(report, args.format, args.out)
    if args.out is None or args.out == "-":
        sys.stdout.write(text)


def cmd_means(args):
    chain = means.mean_chain(args.a, args.b)
    rec = chain.as_dict()
    if args.p is not None:
        rec["p"] = args.p
        rec["L_p"] = means.p_log_mean(args.a, args.b, args.p)
    _emit(_report("means", args, [rec]), args)
    return EXIT_OK if chain.strict else EXIT_VIOLATED


def cmd_coeff(args):
    cid = coeffs.CoefficientId(args.id, args.s, args.q, args.a, args.b)
    value, method = coeffs.coefficient_with_method(cid)
    rec = {"id": args.id, "s": args.s, "q": args.q, "a": args.a, "b": args.b,
           "lambda": cid.lam, "value": value, "method": method}
    _emit(_report("coeff", args, [rec]), args)
    return EXIT_OK


def cmd_certify(args):
    f = funcat.resolve(args.f)
    tol = funcat.CERTIFY_TOL if args.tol is None else args.tol
    plan = funcat.SamplingPlan(seed=args.seed, tolerance=tol)
    cert = funcat.certify(f, funcat.ConvexityClass(args.kind, args.s), (args.lo, args.hi), plan)
    rec = {"f": f.name, "expr": f.text, **cert.as_dict()}
    _emit(_report("certify", args, [rec]), args)
    return EXIT_OK if cert.certified else EXIT_VIOLATED


def cmd_identity(args):
    tol = 1e-8 if args.tol is None else args.tol
    chk = quad.identity_sides(args.which, args.f, args.a, args.b)
    rec = {"f": args.f, "a": args.a, "b": args.b, **chk.as_dict(), "tol": tol}
    _emit(_report("identity", args, [rec]), args)
    if chk.quad_error > tol / 10:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if chk.residual <= tol else EXIT_VIOLATED


def _status_code(statuses):
    if vf.VIOLATED in statuses:
        return EXIT_VIOLATED
    if vf.INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_verify(args):
    tol = vf.MARGIN_TOL if args.tol is None else args.tol
    rec = vf.run(args.theorem, f=args.f, a=args.a, b=args.b, s=args.s, q=args.q, p=args.p,
                 sense=args.sense, target=args.target, direction=args.direction, tol=tol,
                 plan=funcat.SamplingPlan(seed=args.seed))
    _emit(_report("verify", args, [rec.as_dict()]), args)
    return _status_code({rec.status})


def cmd_scan(args):
    spec = GridSpec(
        theorem=args.theorem, f=args.f, a=parse_values(args.a), b=parse_values(args.b),
        s=parse_values(args.s), q=parse_values(args.q), p=parse_values(args.p),
        sense=[v.strip() for v in args.sense.split(",") if v.strip()],
        target=[v.strip() for v in args.target.split(",") if v.strip()],
        direction=args.direction, tol=vf.MARGIN_TOL if args.tol is None else args.tol, seed=args.seed,
    )
    for v in spec.sense:
        if v not in vf.SENSES:
            raise UsageError(f"unknown sense {v!r}")
    for v in spec.target:
        if v not in vf.TARGETS:
            raise UsageError(f"unknown target {v!r}")
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    report = run_scan(spec, args.workers)
    _emit(report, args)
    return _status_code({r["status"] for r in report.records})


COMMANDS = {"means": cmd_means, "coeff": cmd_coeff, "certify": cmd_certify,
            "identity": cmd_identity, "verify": cmd_verify, "scan": cmd_scan}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError, ex.ExprSyntaxError) as err:
        print(f"gaconvex {args.command}: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ex.DomainError as err:
        print(f"gaconvex {args.command}: {err}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except OSError as err:
        print(f"gaconvex {args.command}: cannot write report: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
