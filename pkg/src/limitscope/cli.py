"""``limitscope`` command-line front end.

Every command prints one JSON document (the default; ``--json`` is accepted
for explicitness).  ``range --plot-data`` prints CSV instead and ``--text``
prints a short human-readable summary of the same response.

Exit codes: 0 success, 1 undecided at a cap, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .asympt import CurveSyntaxError, format_curve, limit_along_curve, parse_curve
from .exactalg import FieldDegreeExceeded, UnsupportedConfiguration
from .genseries import TermSyntaxError, UnsupportedOperation
from .limits import (
    Undecided,
    UnboundedPoint,
    certify_denominator_sign,
    classify_point,
    limit_exists,
    limiting_value_interval,
)
from .oracle import SampleConfig, sample_along_curve, sample_limit_set
from .polyfun import ParseError, Point, bounded_discontinuity_points, parse_rational_function
from .serialize import curve_json, interval_json, limit_json, point_json, scalar_json, verdict_json

__all__ = ["main", "build_parser"]

_VALUE_OPTS = ("--at", "--box", "--radii", "--params")


class InputError(ValueError):
    def __init__(self, message, column=None, kind="input"):
        super().__init__(message)
        self.column = column
        self.kind = kind


def _fractions(text: str, n: int | None, what: str):
    try:
        vals = [Fraction(t.strip()) for t in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot read {what} {text!r}") from None
    if n is not None and len(vals) != n:
        raise InputError(f"{what} needs {n} comma-separated rationals")
    return vals


def _point(text):
    x, y = _fractions(text, 2, "point")
    return Point(x, y)


def _box(text):
    xlo, xhi, ylo, yhi = _fractions(text, 4, "box")
    if xlo > xhi or ylo > yhi:
        raise InputError("box bounds must satisfy a <= b and c <= d")
    return xlo, xhi, ylo, yhi


def _side(text: str) -> int:
    if text in ("+", "plus", "+1", "1"):
        return 1
    if text in ("-", "minus", "-1"):
        return -1
    raise InputError(f"side must be + or -, got {text!r}")


def _function(text):
    try:
        return parse_rational_function(text)
    except ParseError as exc:
        raise InputError(str(exc), exc.column, "syntax") from None


def _curve(text, side, anchor):
    try:
        return parse_curve(text, side, anchor)
    except (CurveSyntaxError, TermSyntaxError) as exc:
        raise InputError(str(exc), getattr(exc, "column", None), "syntax") from None


def _point_input(pt):
    return point_json(pt.x0, pt.y0)


# --------------------------------------------------------------------------
# commands; each returns (status, input, result)


def cmd_discont(args):
    f = _function(args.expr)
    box = _box(args.box) if args.box else None
    reports = bounded_discontinuity_points(f, box)
    items = []
    for r in reports:
        item = {"kind": r.kind}
        if r.point is not None:
            item["point"] = _point_input(r.point)
        if r.box is not None:
            item["box"] = [[str(v) for v in r.box[0]], [str(v) for v in r.box[1]]]
        items.append(item)
    status = "undecided" if any(r.kind == "candidate_unresolved" for r in reports) else "ok"
    return status, {"expr": str(f), "box": [str(v) for v in box] if box else None}, {"points": items}


def cmd_range(args):
    f = _function(args.expr)
    pt = _point(args.at)
    inp = {"expr": str(f), "point": _point_input(pt)}
    try:
        iv = limiting_value_interval(f, pt)
    except UnboundedPoint:
        raise InputError(
            "f is unbounded near the point, so no interval exists; see the exists command",
            kind="unbounded",
        ) from None
    result = {"classification": classify_point(f, pt), **interval_json(iv)}
    if args.plot_data:
        return "ok", inp, {"_csv": _plot_rows(f, pt, iv, args)}
    return "ok", inp, result


def _plot_rows(f, pt, iv, args):
    params = [10.0 ** (-k / 2) for k in range(2, 11)]
    rows = []
    seen = set()
    for c in iv.candidates:
        curve = c.witness or c.curve
        if curve is None:
            continue
        key = (format_curve(curve), curve.side)
        if key in seen:
            continue
        seen.add(key)
        samples = sample_along_curve(f, curve, params)
        for s, v in zip(samples.params, samples.values):
            x, y = curve.point_at(s)
            rows.append(["curve", key[0], "+" if curve.side > 0 else "-", repr(s), repr(x), repr(y),
                         "" if v is None else repr(v)])
    est = sample_limit_set(f, pt, SampleConfig(samples_per_radius=args.samples, jitter_seed=args.seed))
    for radius, lo, hi in est.trend:
        rows.append(["oracle_min", "", "", str(radius), "", "", repr(lo)])
        rows.append(["oracle_max", "", "", str(radius), "", "", repr(hi)])
    return rows


def cmd_limit(args):
    f = _function(args.expr)
    pt = _point(args.at)
    c = _curve(args.curve, _side(args.side), pt)
    res = limit_along_curve(f, c)
    inp = {"expr": str(f), "point": _point_input(pt), "curve": {**curve_json(c), "text": args.curve}}
    return "ok", inp, limit_json(res)


def cmd_exists(args):
    f = _function(args.expr)
    pt = _point(args.at)
    v = limit_exists(f, pt)
    return "ok", {"expr": str(f), "point": _point_input(pt)}, {
        "classification": classify_point(f, pt), **verdict_json(v)}


def cmd_signcert(args):
    f = _function(args.expr)
    box = _box(args.box)
    # a polynomial is certified itself; otherwise its denominator
    if f.den.total_degree() == 0:
        q, target = f.num.scale(f.den.constant_term()), "expression"
    else:
        q, target = f.den, "denominator"
    cert = certify_denominator_sign(q, box, args.max_depth)
    result = {
        "target": target,
        "polynomial": str(q),
        "sign": cert.kind,
        "witnesses": [{"x": str(a), "y": str(b)} for a, b in cert.witnesses],
        "depth": cert.depth,
    }
    status = "undecided" if cert.kind == "undecided" else "ok"
    return status, {"expr": str(f), "box": [str(v) for v in box]}, result


def cmd_oracle_circle(args):
    f = _function(args.expr)
    pt = _point(args.at)
    radii = tuple(_fractions(args.radii, None, "radii"))
    try:
        cfg = SampleConfig(radii, args.samples, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    est = sample_limit_set(f, pt, cfg)
    return "ok", {"expr": str(f), "point": _point_input(pt)}, {
        "min_estimate": est.min_estimate,
        "max_estimate": est.max_estimate,
        "trend": [{"radius": str(r), "min": lo, "max": hi} for r, lo, hi in est.trend],
    }


def cmd_oracle_curve(args):
    f = _function(args.expr)
    pt = _point(args.at)
    c = _curve(args.curve, _side(args.side), pt)
    params = [float(v) for v in _fractions(args.params, None, "params")]
    try:
        cs = sample_along_curve(f, c, params)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return "ok", {"expr": str(f), "point": _point_input(pt), "curve": curve_json(c)}, {
        "params": list(cs.params),
        "values": list(cs.values),
        "skipped": list(cs.skipped),
        "limit": cs.limit,
        "order": cs.order,
    }


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output (the default)")
    common.add_argument("--text", action="store_true", help="human-readable summary instead of JSON")
    common.add_argument("--timing", action="store_true", help="include wall-clock seconds in the response")

    ap = argparse.ArgumentParser(prog="limitscope", description="Limits of bivariate rational functions.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("discont", parents=[common], help="list discontinuity points in a box")
    p.add_argument("expr")
    p.add_argument("--box", help="xlo,xhi,ylo,yhi (default: whole plane)")
    p.set_defaults(func=cmd_discont)

    p = sub.add_parser("range", parents=[common], help="interval of limiting values at a point")
    p.add_argument("expr")
    p.add_argument("--at", required=True, help="x0,y0")
    p.add_argument("--plot-data", action="store_true", help="CSV of candidate curves and oracle extremes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1024)
    p.set_defaults(func=cmd_range)

    p = sub.add_parser("limit", parents=[common], help="limit along a curve")
    p.add_argument("expr")
    p.add_argument("--at", required=True)
    p.add_argument("--curve", required=True)
    p.add_argument("--side", default="+")
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("exists", parents=[common], help="decide whether the two-variable limit exists")
    p.add_argument("expr")
    p.add_argument("--at", required=True)
    p.set_defaults(func=cmd_exists)

    p = sub.add_parser("signcert", parents=[common], help="certify the sign of a denominator on a box")
    p.add_argument("expr")
    p.add_argument("--box", required=True)
    p.add_argument("--max-depth", type=int, default=None)
    p.set_defaults(func=cmd_signcert)

    p = sub.add_parser("oracle", help="numeric cross-checks")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("circle", parents=[common], help="extremes on circles about a point")
    q.add_argument("expr")
    q.add_argument("--at", required=True)
    q.add_argument("--radii", default="1/100,1/1000,1/10000")
    q.add_argument("--samples", type=int, default=4096)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=cmd_oracle_circle)
    q = osub.add_parser("curve", parents=[common], help="values along a curve")
    q.add_argument("expr")
    q.add_argument("--at", required=True)
    q.add_argument("--curve", required=True)
    q.add_argument("--side", default="+")
    q.add_argument("--params", default="1/100,1/1000,1/10000,1/100000")
    q.set_defaults(func=cmd_oracle_curve)
    return ap


def _glue_negative_values(argv):
    """Let ``--at -1,0`` through argparse by rewriting it as ``--at=-1,0``."""
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_OPTS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def _text(resp: dict) -> str:
    lines = [f"{resp['command']}: {resp['status']}"]

    def walk(obj, prefix=""):
        if isinstance(obj, dict):
            if "decimal" in obj and "type" in obj:
                lines.append(f"  {prefix}: {obj.get('value') or obj.get('minpoly_text') + ' = 0'}  (~{obj['decimal']})")
                return
            for k, v in obj.items():
                walk(v, f"{prefix}.{k}" if prefix else k)
        elif isinstance(obj, list):
            for i, v in enumerate(obj):
                walk(v, f"{prefix}[{i}]")
        else:
            lines.append(f"  {prefix}: {obj}")

    walk(resp.get("result") or resp.get("error") or {})
    return "\n".join(lines)


def main(argv=None) -> int:
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    ap = build_parser()
    args = ap.parse_args(argv)
    command = args.command if args.command != "oracle" else f"oracle {args.oracle_command}"
    t0 = time.perf_counter()
    try:
        status, inp, result = args.func(args)
        code = 1 if status == "undecided" else 0
        resp = {"command": command, "status": status, "input": inp, "result": result}
    except InputError as exc:
        code = 2
        err = {"type": exc.kind, "message": str(exc)}
        if exc.column is not None:
            err["column"] = exc.column
        resp = {"command": command, "status": "error", "error": err}
    except (Undecided, FieldDegreeExceeded) as exc:
        code = 1
        resp = {"command": command, "status": "undecided", "error": {"type": "cap", "message": str(exc)}}
    except (UnsupportedConfiguration, UnsupportedOperation, ValueError, ZeroDivisionError) as exc:
        code = 2
        resp = {"command": command, "status": "error", "error": {"type": "input", "message": str(exc)}}
    if getattr(args, "timing", False):
        resp["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    result = resp.get("result")
    if isinstance(result, dict) and "_csv" in result:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["record", "label", "side", "param", "x", "y", "value"])
        w.writerows(result["_csv"])
        sys.stdout.write(buf.getvalue())
        return code
    if getattr(args, "text", False):
        print(_text(resp))
    else:
        print(json.dumps(resp, indent=2))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
