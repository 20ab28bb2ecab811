"""Command-line front end.

Subcommands: paps, triangle, passport, construct, classify5, curves5,
section6, bifurcations.  Rational arguments accept "p/q" or decimal
strings and are parsed exactly; every command is deterministic given its
flags.  Diagnostics go to stderr and failures exit nonzero.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import morse, paps, quintic, sextic
from .polynomial import Poly, to_fraction


def _rat(s: str) -> Fraction:
    try:
        return to_fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError("not a rational: %r" % s) from e


def _rat_list(s: str) -> list[Fraction]:
    return [_rat(tok) for tok in s.replace(";", ",").split(",") if tok.strip()]


def _int_list(s: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in s.replace(" ", ",").split(",") if tok)
    except ValueError as e:
        raise argparse.ArgumentTypeError("not a permutation: %r" % s) from e


def _fmt_frac(x: Fraction) -> str:
    return "%d/%d" % (x.numerator, x.denominator) if x.denominator != 1 else str(x.numerator)


def _emit(args, text_lines, json_obj, csv_rows, csv_header):
    if args.format == "json":
        print(json.dumps(json_obj, indent=2, sort_keys=True))
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(csv_header)
        w.writerows(csv_rows)
    else:
        for line in text_lines:
            print(line)


# --- commands ---------------------------------------------------------------

def cmd_paps(args) -> int:
    if args.order < 1:
        print("order must be >= 1", file=sys.stderr)
        return 2
    if args.count:
        if args.level is not None:
            n = paps.count(args.order, args.level)
            _emit(args, [str(n)], {"order": args.order, "level": args.level,
                                   "count": n}, [[args.order, args.level, n]],
                  ["order", "level", "count"])
        else:
            row = paps.triangle_rows(args.order)[-1]
            _emit(args, [str(sum(row))],
                  {"order": args.order, "count": sum(row), "by_level": row},
                  [[args.order, sum(row)]], ["order", "count"])
        return 0
    items = paps.enumerate_paps(args.order)
    if args.level is not None:
        items = [p for p in items if p[0] == args.level]
    _emit(args, [",".join(map(str, p)) for p in items],
          {"order": args.order, "passports": [list(p) for p in items]},
          [[i + 1, ",".join(map(str, p))] for i, p in enumerate(items)],
          ["index", "passport"])
    return 0


def cmd_triangle(args) -> int:
    rows = paps.triangle_rows(args.rows)
    _emit(args, [" ".join(map(str, r)) for r in rows],
          {"rows": rows},
          [[i + 1] + r for i, r in enumerate(rows)],
          ["order", "counts..."])
    return 0


def _poly_from_args(args) -> Poly:
    if args.critical_points:
        spec = morse.CriticalPointSpec.of(args.critical_points)
        return morse.from_critical_points(spec)
    coeffs = args.coeffs
    return Poly(list(reversed(coeffs)))   # CLI takes highest degree first


def cmd_passport(args) -> int:
    if not args.critical_points and not args.coeffs:
        print("need --critical-points or --coeffs", file=sys.stderr)
        return 2
    try:
        p = _poly_from_args(args)
        out = morse.passport(p, tol=args.prec)
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return 2
    if isinstance(out, morse.Snake):
        jt = {"verdict": "snake", "passport": list(out.passport)}
        text = [",".join(map(str, out.passport))]
        row = ["snake", ",".join(map(str, out.passport))]
    elif isinstance(out, morse.Degenerate):
        jt = {"verdict": "degenerate", "pattern": list(out.pattern)}
        text = ["degenerate " + ",".join(map(str, out.pattern))]
        row = ["degenerate", ",".join(map(str, out.pattern))]
    else:
        jt = {"verdict": "nonmorse", "reason": out.reason}
        text = ["nonmorse: " + out.reason]
        row = ["nonmorse", out.reason]
    _emit(args, text, jt, [row], ["verdict", "detail"])
    return 0


def cmd_construct(args) -> int:
    target = args.passport
    if not paps.is_pap(target):
        n = len(target)
        reason = "not a permutation of 1..%d" % n \
            if sorted(target) != list(range(1, n + 1)) else \
            ("not alternating" if not paps.is_alternating(target)
             else "improper level for order %d" % n)
        print("invalid passport %s: %s" % (",".join(map(str, target)), reason),
              file=sys.stderr)
        return 2
    try:
        spec = morse.construct(target, seed=args.seed)
    except RuntimeError as e:
        print(str(e), file=sys.stderr)
        return 1
    p = morse.from_critical_points(spec)
    out = morse.passport(p, tol=args.prec)
    assert isinstance(out, morse.Snake) and out.passport == target
    pts = [_fmt_frac(x) for x in spec.xs]
    coeffs = [_fmt_frac(c) for c in reversed(p.coeffs)]
    _emit(args,
          ["critical points: " + ", ".join(pts),
           "coefficients (highest first): " + ", ".join(coeffs),
           "passport verified: " + ",".join(map(str, out.passport))],
          {"passport": list(target), "critical_points": pts,
           "coefficients_high_to_low": coeffs},
          [[",".join(map(str, target)), " ".join(pts), " ".join(coeffs)]],
          ["passport", "critical_points", "coefficients_high_to_low"])
    return 0


def cmd_classify5(args) -> int:
    st = quintic.classify(args.b, args.c)
    detail = {
        "region": lambda: {"passport": list(st.passport)},
        "arc": lambda: {"degenerate_index": st.degenerate_index,
                        "pattern": list(st.pattern)},
        "junction": lambda: {},
        "outside": lambda: {},
    }[st.kind]()
    sd, ssep, sz = quintic.invariants(args.b, args.c)
    jt = {"kind": st.kind, "name": st.name,
          "signs": {"disc": sd, "ties": ssep, "zeros": sz}, **detail}
    if st.kind == "region":
        text = ["region %s, passport %s" % (st.name, ",".join(map(str, st.passport)))]
    elif st.kind == "arc":
        text = ["arc %s, degenerate snake %d, pattern %s"
                % (st.name, st.degenerate_index, ",".join(map(str, st.pattern)))]
    else:
        text = [st.kind]
    _emit(args, text, jt,
          [[st.kind, st.name,
            ",".join(map(str, st.passport or st.pattern or ()))]],
          ["kind", "name", "detail"])
    return 0


def cmd_curves5(args) -> int:
    curves = quintic.trace_curves(args.resolution)
    marks = quintic.landmarks()
    if args.svg or args.format == "svg":
        from .svgout import quintic_curves_svg
        doc = quintic_curves_svg(curves, marks)
        if args.svg:
            with open(args.svg, "w") as fh:
                fh.write(doc)
            print("wrote %s" % args.svg, file=sys.stderr)
        else:
            print(doc)
    if args.figure:
        from .figures import quintic_figure
        quintic_figure(args.figure, args.resolution)
        print("wrote %s" % args.figure, file=sys.stderr)
    if args.format in ("text", "json", "csv") and not (args.svg and args.format == "text"):
        jt = {"landmarks": {k: [_fmt_frac(v[0]), _fmt_frac(v[1])]
                            for k, v in marks.items()},
              "curves": {k: [[[x, y] for x, y in line] for line in v]
                         for k, v in curves.items()}}
        rows = [[name, i, "%.6f" % x, "%.6f" % y]
                for name, lines in curves.items()
                for i, line in enumerate(lines) for x, y in line]
        text = ["%s: %d polylines" % (k, len(v)) for k, v in curves.items()]
        text += ["%s = (%s, %s)" % (k, _fmt_frac(v[0]), _fmt_frac(v[1]))
                 for k, v in marks.items()]
        _emit(args, text, jt, rows, ["curve", "polyline", "b", "c"])
    return 0


def cmd_section6(args) -> int:
    scan = sextic.scan_section(args.c, resolution=args.resolution,
                               depth=args.depth,
                               keep_grid=bool(args.svg or args.figure))
    comps = scan.components
    jt = {"gamma": _fmt_frac(scan.gamma), "resolution": scan.resolution,
          "components": [
              {"id": c.id,
               "rep": {"a": _fmt_frac(c.rep[0]), "b": _fmt_frac(c.rep[1]),
                       "c": _fmt_frac(c.rep[2])},
               "passport": list(c.passport),
               "cells": c.cells}
              for c in comps]}
    rows = [[c.id, _fmt_frac(c.rep[0]), _fmt_frac(c.rep[1]), _fmt_frac(c.rep[2]),
             ",".join(map(str, c.passport)), c.cells] for c in comps]
    text = ["%d components at c = %s" % (len(comps), _fmt_frac(scan.gamma))]
    for c in comps:
        text.append("  #%d passport %s rep=(%.6f, %.6f) cells=%d"
                    % (c.id, ",".join(map(str, c.passport)),
                       float(c.rep[0]), float(c.rep[1]), c.cells))
    if args.svg or args.format == "svg":
        from .svgout import section_svg
        bounds = sextic.section_boundaries(scan.grid)
        xs = [p[0] for segs in bounds.values() for s in segs for p in s]
        ys = [p[1] for segs in bounds.values() for s in segs for p in s]
        pad_x = (max(xs) - min(xs)) * 0.05 + 1e-9 if xs else 1.0
        pad_y = (max(ys) - min(ys)) * 0.05 + 1e-9 if ys else 1.0
        box = (min(xs, default=0) - pad_x, max(xs, default=1) + pad_x,
               min(ys, default=0) - pad_y, max(ys, default=1) + pad_y)
        curves = {k: [list(seg) for seg in v] for k, v in bounds.items()}
        doc = section_svg(scan, curves, box)
        if args.svg:
            with open(args.svg, "w") as fh:
                fh.write(doc)
            print("wrote %s" % args.svg, file=sys.stderr)
        else:
            print(doc)
    if args.figure:
        from .figures import section_figure
        section_figure(scan, args.figure)
        print("wrote %s" % args.figure, file=sys.stderr)
    if args.format in ("text", "json", "csv"):
        _emit(args, text, jt, rows,
              ["id", "a", "b", "c", "passport", "cells"])
    return 0


def cmd_bifurcations(args) -> int:
    report = sextic.detect_bifurcations(args.lo, args.hi, tol=args.tol,
                                        resolution=args.resolution,
                                        depth=args.depth)
    jt = {"lo": _fmt_frac(report.lo), "hi": _fmt_frac(report.hi),
          "tol": _fmt_frac(report.tol),
          "thresholds": [
              {"lo": _fmt_frac(t.lo), "hi": _fmt_frac(t.hi),
               "midpoint": float((t.lo + t.hi) / 2),
               "components_below": t.below[0], "components_above": t.above[0],
               "description": t.description}
              for t in report.thresholds],
          "warnings": list(report.warnings)}
    rows = [[float((t.lo + t.hi) / 2), _fmt_frac(t.lo), _fmt_frac(t.hi),
             t.below[0], t.above[0], t.description] for t in report.thresholds]
    text = ["%d thresholds in (%s, %s)" % (len(report.thresholds),
                                           _fmt_frac(report.lo), _fmt_frac(report.hi))]
    for t in report.thresholds:
        text.append("  c in [%.6f, %.6f]: %s"
                    % (float(t.lo), float(t.hi), t.description))
    for wmsg in report.warnings:
        print("warning: " + wmsg, file=sys.stderr)
    if args.figure:
        from .figures import bifurcation_figure
        bifurcation_figure(report, args.figure)
        print("wrote %s" % args.figure, file=sys.stderr)
    _emit(args, text, jt, rows,
          ["midpoint", "lo", "hi", "components_below", "components_above",
           "description"])
    return 0


# --- wiring -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="morsesnakes",
        description="passports of real Morse polynomials and the "
                    "stratification of the degree-5/6 coefficient spaces")
    ap.add_argument("--format", choices=("text", "json", "csv", "svg"),
                    default="text")
    ap.add_argument("--prec", type=_rat, default=Fraction(1, 10**12),
                    help="refinement width for passport ties (default 1e-12)")
    ap.add_argument("--seed", type=int, default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("paps", help="enumerate proper alternating permutations")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--level", type=int)
    p.add_argument("--count", action="store_true")
    p.set_defaults(fn=cmd_paps)

    p = sub.add_parser("triangle", help="rows of the count triangle")
    p.add_argument("--rows", type=int, required=True)
    p.set_defaults(fn=cmd_triangle)

    p = sub.add_parser("passport", help="passport of a polynomial")
    p.add_argument("--critical-points", type=_rat_list)
    p.add_argument("--coeffs", type=_rat_list,
                   help="coefficients, highest degree first")
    p.set_defaults(fn=cmd_passport)

    p = sub.add_parser("construct", help="realize a passport")
    p.add_argument("passport", type=_int_list)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("classify5", help="stratum of a degree-5 parameter point")
    p.add_argument("--b", type=_rat, required=True)
    p.add_argument("--c", type=_rat, required=True)
    p.set_defaults(fn=cmd_classify5)

    p = sub.add_parser("curves5", help="trace the degree-5 stratifying curves")
    p.add_argument("--resolution", type=int, default=256)
    p.add_argument("--svg", help="write an SVG document here")
    p.add_argument("--figure", help="render a figure (png/pdf) here")
    p.set_defaults(fn=cmd_curves5)

    p = sub.add_parser("section6", help="scan a fixed-c section of the degree-6 box")
    p.add_argument("--c", type=_rat, required=True)
    p.add_argument("--resolution", type=int, default=256)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--svg", help="write an SVG document here")
    p.add_argument("--figure", help="render a figure (png/pdf) here")
    p.set_defaults(fn=cmd_section6)

    p = sub.add_parser("bifurcations", help="sweep c for partition changes")
    p.add_argument("--lo", type=_rat, required=True)
    p.add_argument("--hi", type=_rat, required=True)
    p.add_argument("--tol", type=_rat, default=Fraction(1, 10**4))
    p.add_argument("--resolution", type=int, default=128)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--figure", help="render a figure (png/pdf) here")
    p.set_defaults(fn=cmd_bifurcations)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
