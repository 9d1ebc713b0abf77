"""Command-line front end: point evaluation, grid tables, comparisons, self-test.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
non-convergence.  Numeric output is printed with 17 significant digits so
tables are reproducible byte for byte.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import kernels, verify
from .errors import DomainError, ProjheatError, QuadratureConvergenceError, TruncationCapError
from .geometry import SpaceDescriptor

_HALF_PI = 0.5 * math.pi

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3


class UsageError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _parse_grid(text: str, name: str) -> list:
    """Parse 'a:b:steps' into an inclusive linspace."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"--{name} expects a:b:steps, got {text!r}")
    try:
        a, b = float(parts[0]), float(parts[1])
        steps = int(parts[2])
    except ValueError as exc:
        raise UsageError(f"--{name}: {exc}") from None
    if steps < 1:
        raise UsageError(f"--{name}: steps must be >= 1")
    if steps > 1 and not b > a:
        raise UsageError(f"--{name}: need a < b for more than one step")
    return [float(v) for v in np.linspace(a, b, steps)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projheat",
        description="Heat kernels on complex and quaternionic projective space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_method=True):
        p.add_argument("--space", choices=("cpn", "hpn"), default="hpn",
                       help="projective space family (default hpn)")
        p.add_argument("--n", type=int, default=1, help="projective index n >= 1")
        p.add_argument("--t", type=float, default=None, help="diffusion time")
        p.add_argument("--t-grid", default=None, metavar="A:B:STEPS",
                       help="inclusive time grid")
        p.add_argument("--d", type=float, default=None, help="geodesic distance")
        p.add_argument("--d-grid", default=None, metavar="A:B:STEPS",
                       help="inclusive distance grid")
        if with_method:
            p.add_argument("--method", choices=("series", "integral", "both"),
                           default="series")
        p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--format", choices=("csv", "json", "pretty"), default="pretty",
                       dest="fmt")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p_eval = sub.add_parser("eval", help="evaluate the kernel at one point")
    add_common(p_eval)

    p_table = sub.add_parser("table", help="emit a value table over grids")
    add_common(p_table)

    p_cmp = sub.add_parser("compare", help="series vs integral over grids")
    add_common(p_cmp, with_method=False)

    p_self = sub.add_parser("selftest", help="run the identity verification suite")
    p_self.add_argument("--only", default=None,
                        help="restrict to groups whose name starts with this")
    p_self.add_argument("--json", action="store_true", help="line-JSON reports")
    p_self.add_argument("--tol", type=float, default=None,
                        help="override every check tolerance")
    p_self.add_argument("--k", type=int, choices=(1, 2), default=None,
                        help="restrict to one coordinate field")
    p_self.add_argument("--out", default=None)

    return parser


def _space_from_args(args) -> SpaceDescriptor:
    k = 1 if args.space == "cpn" else 2
    try:
        return SpaceDescriptor(n=args.n, k=k)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _values_from_args(args, name: str, grid_default: str) -> list:
    single = getattr(args, name)
    grid = getattr(args, f"{name}_grid")
    if single is not None and grid is not None:
        raise UsageError(f"give either --{name} or --{name}-grid, not both")
    if single is not None:
        return [float(single)]
    if grid is not None:
        return _parse_grid(grid, f"{name}-grid")
    return _parse_grid(grid_default, f"{name}-grid")


def _validate_times(ts) -> None:
    for t in ts:
        if not t >= kernels.MIN_TIME:
            raise UsageError(
                f"t={t} out of range: diffusion time must be >= {kernels.MIN_TIME}"
            )


def _validate_distances(ds) -> None:
    for d in ds:
        if not (0.0 <= d < _HALF_PI):
            raise UsageError(f"d={d} out of range: distance must lie in [0, pi/2)")


def _open_out(args):
    if args.out is None:
        return sys.stdout, False
    return open(args.out, "w", encoding="utf-8", newline=""), True


def _eval_point(space, t, d, method, tol):
    return kernels.unified(space.n, space.k, t, d, tol=tol, method=method)


def cmd_eval(args) -> int:
    space = _space_from_args(args)
    ts = _values_from_args(args, "t", None) if args.t is not None or args.t_grid else None
    if ts is None or len(ts) != 1:
        raise UsageError("eval needs a single --t")
    ds = _values_from_args(args, "d", None) if args.d is not None or args.d_grid else None
    if ds is None or len(ds) != 1:
        raise UsageError("eval needs a single --d")
    _validate_times(ts)
    _validate_distances(ds)
    t, d = ts[0], ds[0]

    out, close = _open_out(args)
    try:
        if args.method == "both":
            rs = _eval_point(space, t, d, "series", args.tol)
            ri = _eval_point(space, t, d, "integral", args.tol)
            if args.fmt == "json":
                out.write(json.dumps({
                    "k": space.k, "n": space.n, "t": t, "d": d,
                    "value_series": rs.value, "value_integral": ri.value,
                    "abs_diff": abs(rs.value - ri.value),
                }) + "\n")
            elif args.fmt == "csv":
                out.write("k,n,t,d,method,value_series,value_integral,abs_diff\n")
                out.write(",".join([
                    str(space.k), str(space.n), _fmt(t), _fmt(d), "both",
                    _fmt(rs.value), _fmt(ri.value), _fmt(abs(rs.value - ri.value)),
                ]) + "\n")
            else:
                out.write(f"value_series   {_fmt(rs.value)}\n")
                out.write(f"value_integral {_fmt(ri.value)}\n")
                out.write(f"abs_diff       {_fmt(abs(rs.value - ri.value))}\n")
        else:
            res = _eval_point(space, t, d, args.method, args.tol)
            if args.fmt == "json":
                out.write(json.dumps({
                    "k": space.k, "n": space.n, "t": t, "d": d, "method": args.method,
                    "value": res.value, "est_error": res.est_error,
                    "terms_or_nodes": res.terms_or_nodes,
                }) + "\n")
            elif args.fmt == "csv":
                out.write("k,n,t,d,method,value,est_error,terms_or_nodes\n")
                out.write(",".join([
                    str(space.k), str(space.n), _fmt(t), _fmt(d), args.method,
                    _fmt(res.value), _fmt(res.est_error), str(res.terms_or_nodes),
                ]) + "\n")
            else:
                out.write(f"value          {_fmt(res.value)}\n")
                out.write(f"method         {args.method}\n")
                out.write(f"terms_or_nodes {res.terms_or_nodes}\n")
                out.write(f"est_error      {_fmt(res.est_error)}\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_table(args) -> int:
    space = _space_from_args(args)
    ts = _values_from_args(args, "t", "0.2:1:3")
    ds = _values_from_args(args, "d", "0:1.2:5")
    _validate_times(ts)
    _validate_distances(ds)

    rows = []
    both = args.method == "both"
    for t in ts:  # deterministic t-major, d-minor order
        for d in ds:
            if both:
                rs = _eval_point(space, t, d, "series", args.tol)
                ri = _eval_point(space, t, d, "integral", args.tol)
                rows.append((t, d, rs, ri))
            else:
                rows.append((t, d, _eval_point(space, t, d, args.method, args.tol), None))

    out, close = _open_out(args)
    try:
        if args.fmt == "json":
            for t, d, a, b in rows:
                rec = {"k": space.k, "n": space.n, "t": t, "d": d}
                if both:
                    rec.update(value_series=a.value, value_integral=b.value,
                               abs_diff=abs(a.value - b.value))
                else:
                    rec.update(method=args.method, value=a.value,
                               est_error=a.est_error, terms_or_nodes=a.terms_or_nodes)
                out.write(json.dumps(rec) + "\n")
        else:
            if both:
                out.write("k,n,t,d,method,value_series,value_integral,abs_diff\n")
                for t, d, a, b in rows:
                    out.write(",".join([
                        str(space.k), str(space.n), _fmt(t), _fmt(d), "both",
                        _fmt(a.value), _fmt(b.value), _fmt(abs(a.value - b.value)),
                    ]) + "\n")
            else:
                out.write("k,n,t,d,method,value,est_error,terms_or_nodes\n")
                for t, d, a, _ in rows:
                    out.write(",".join([
                        str(space.k), str(space.n), _fmt(t), _fmt(d), args.method,
                        _fmt(a.value), _fmt(a.est_error), str(a.terms_or_nodes),
                    ]) + "\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_compare(args) -> int:
    space = _space_from_args(args)
    ts = _values_from_args(args, "t", "0.1:1:4")
    ds = _values_from_args(args, "d", "0:1.4:6")
    _validate_times(ts)
    _validate_distances(ds)
    tol = args.tol

    out, close = _open_out(args)
    all_ok = True
    try:
        if args.fmt == "csv":
            out.write("k,n,t,d,value_series,value_integral,abs_err,rel_err,status\n")
        for t in ts:
            for d in ds:
                rs = _eval_point(space, t, d, "series", min(tol, 1e-10))
                ri = _eval_point(space, t, d, "integral", min(tol, 1e-10))
                rep = verify.make_report(
                    "representation_equivalence",
                    {"k": space.k, "n": space.n, "t": t, "d": d},
                    rs.value, ri.value, tol,
                )
                all_ok = all_ok and rep.passed
                if args.fmt == "json":
                    out.write(rep.to_json() + "\n")
                elif args.fmt == "csv":
                    out.write(",".join([
                        str(space.k), str(space.n), _fmt(t), _fmt(d),
                        _fmt(rep.lhs), _fmt(rep.rhs), _fmt(rep.abs_err),
                        _fmt(rep.rel_err), "pass" if rep.passed else "fail",
                    ]) + "\n")
                else:
                    status = "PASS" if rep.passed else "FAIL"
                    out.write(
                        f"{status} k={space.k} n={space.n} t={_fmt(t)} d={_fmt(d)} "
                        f"series={_fmt(rep.lhs)} integral={_fmt(rep.rhs)} "
                        f"rel_err={rep.rel_err:.3e}\n"
                    )
    finally:
        if close:
            out.close()
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


def cmd_selftest(args) -> int:
    groups = (args.only,) if args.only else None
    ks = (args.k,) if args.k else (1, 2)
    profile = verify.SuiteProfile(tol_override=args.tol, ks=ks, groups=groups)
    reports = verify.full_suite(profile)

    out, close = _open_out(args)
    try:
        if args.json:
            for rep in reports:
                out.write(rep.to_json() + "\n")
        else:
            for rep in reports:
                status = "PASS" if rep.passed else "FAIL"
                params = ",".join(f"{k}={v}" for k, v in rep.parameters.items())
                out.write(
                    f"{status} {rep.identity_name} [{params}] "
                    f"abs_err={rep.abs_err:.3e} rel_err={rep.rel_err:.3e} tol={rep.tol:g}\n"
                )
            n_fail = sum(1 for r in reports if not r.passed)
            out.write(f"# {len(reports) - n_fail}/{len(reports)} checks passed\n")
    finally:
        if close:
            out.close()
    if not reports:
        raise UsageError(f"no checks match --only {args.only!r}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "eval": cmd_eval,
        "table": cmd_table,
        "compare": cmd_compare,
        "selftest": cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"projheat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"projheat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TruncationCapError, QuadratureConvergenceError) as exc:
        print(f"projheat: no convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except ProjheatError as exc:
        print(f"projheat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
