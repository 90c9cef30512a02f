"""Command-line interface: ``interbody <subcommand> polytope.json ...``.

Exit codes for ``report``: 0 convex, 1 non-convex, 3 undetermined (sampled
probe found no violator). Any error exits with 2.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from fractions import Fraction

from . import linalg as la
from .arrangement import central_arrangement, enumerate_chambers
from .boundary import boundary_mesh_3d, boundary_points_2d
from .convexity import (ConvexityReport, NotABox, box_bounds, convexity_report_2d, midpoint_convexity_probe,
                        parallelepiped_report)
from .exceptions import EmptySection, InterbodyError, OnHyperplane
from .io import (affine_to_dict, central_to_dict, chamber_to_dict, dumps, fmt_number, load_polytope,
                 piece_to_dict, region_to_dict, report_to_dict, vec_json, write_off)
from .polytope import Polytope, is_origin_symmetric, origin_position, translate
from .radial import chamber_radial_piece, radial_oracle, radial_value
from .translation import affine_arrangement, region_of

EXIT_CONVEX, EXIT_NONCONVEX, EXIT_ERROR, EXIT_UNDETERMINED = 0, 1, 2, 3
DEFAULT_PAIRS = 1000


class UsageError(InterbodyError):
    pass


def parse_vector(text: str, dim: int | None = None) -> tuple:
    try:
        v = tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse vector {text!r}") from exc
    if dim is not None and len(v) != dim:
        raise UsageError(f"expected {dim} coordinates, got {len(v)}")
    return v


def parse_grid(text: str) -> list[list[Fraction]]:
    axes = []
    for axis in text.split(","):
        parts = axis.split(":")
        if len(parts) != 3:
            raise UsageError("grid axis must look like min:max:steps")
        lo, hi = Fraction(parts[0]), Fraction(parts[1])
        steps = int(parts[2])
        if steps < 1:
            raise UsageError("grid needs at least one step per axis")
        if steps == 1:
            axes.append([lo])
        else:
            axes.append([lo + (hi - lo) * k / (steps - 1) for k in range(steps)])
    return axes


def _load(args) -> Polytope:
    P = load_polytope(args.polytope)
    if getattr(args, "t", None):
        P = translate(P, parse_vector(args.t, P.dim))
    return P


def decide(P: Polytope, pairs: int, seed: int) -> ConvexityReport:
    """Dispatch by dimension and shape to the strongest available decision."""
    if P.dim == 2:
        return convexity_report_2d(P)
    try:
        box_bounds(P)
        return parallelepiped_report(P)
    except NotABox:
        pass
    sym = is_origin_symmetric(P)
    pos = origin_position(P)
    if pos.tag == "FacetInterior":
        return ConvexityReport("NonConvex", "DiscontinuityAtFacet", sym, pos, facet=pos.facet)
    if not pos.is_interior:
        return ConvexityReport("NonConvex", "OriginOutsideOrLowFace", sym, pos)
    if sym:
        return ConvexityReport("Convex", "Busemann", sym, pos)
    probe = midpoint_convexity_probe(P, pairs, seed)
    if probe.violator is not None:
        return ConvexityReport("NonConvex", "ProbeViolator", sym, pos, probe=probe)
    return ConvexityReport("Undetermined", "ProbeFoundNoViolator", sym, pos, probe=probe)


def cmd_report(args, out) -> int:
    P = _load(args)
    seed = args.seed if args.seed is not None else int(os.environ.get("INTERBODY_SEED", "0"))
    report = decide(P, args.pairs, seed)
    out.write(dumps(report_to_dict(report)) + "\n")
    return {"Convex": EXIT_CONVEX, "NonConvex": EXIT_NONCONVEX}.get(report.verdict, EXIT_UNDETERMINED)


def cmd_radial(args, out) -> int:
    P = _load(args)
    x = parse_vector(args.x, P.dim)
    value = radial_value(P, x)
    try:
        oracle = radial_oracle(P, x)
    except EmptySection:
        oracle = 0.0
    out.write(dumps({"x": vec_json(x), "value": str(value), "float": float(value), "oracle": oracle}) + "\n")
    return 0


def cmd_chambers(args, out) -> int:
    P = _load(args)
    rows = []
    for C in enumerate_chambers(P):
        row = chamber_to_dict(C)
        try:
            row["piece"] = piece_to_dict(chamber_radial_piece(P, C))
        except (EmptySection, NotImplementedError):
            row["piece"] = None
        rows.append(row)
    out.write(dumps(rows) + "\n")
    return 0


def cmd_arrangement(args, out) -> int:
    P = _load(args)
    if args.affine:
        data = [affine_to_dict(h) for h in affine_arrangement(P)]
    else:
        data = [central_to_dict(h) for h in central_arrangement(P)]
    out.write(dumps(data) + "\n")
    return 0


def _nudge(L, t):
    step = (Fraction(1, 1009), Fraction(1, 1013), Fraction(1, 1019))[: len(t)]
    k = 0
    while True:
        cand = la.add(t, la.scale(k, step))
        try:
            return region_of(L, cand)
        except OnHyperplane:
            k += 1


def cmd_sweep(args, out) -> int:
    P = load_polytope(args.polytope)
    if P.dim != 2:
        raise UsageError("sweep needs a polygon")
    if not args.grid or not args.grid.strip():
        raise UsageError("empty --grid value")
    axes = parse_grid(args.grid)
    if len(axes) != 2:
        raise UsageError("grid needs two axes")
    L = affine_arrangement(P)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["i", "j", "t1", "t2", "region", "region_t1", "region_t2", "verdict", "chambers"])
    for i, t1 in enumerate(axes[0]):
        for j, t2 in enumerate(axes[1]):
            t = (t1, t2)
            region = _nudge(L, t)
            Pt = translate(P, t)
            verdict = convexity_report_2d(Pt).verdict
            writer.writerow([i, j, fmt_number(t1, args.exact), fmt_number(t2, args.exact), str(region),
                             fmt_number(region.witness_t[0], args.exact),
                             fmt_number(region.witness_t[1], args.exact),
                             verdict, len(enumerate_chambers(Pt))])
    return 0


def cmd_boundary(args, out) -> int:
    P = _load(args)
    if args.samples < 8:
        raise UsageError("--samples must be at least 8")
    if P.dim == 2:
        samples = boundary_points_2d(P, args.samples)
        if args.format == "off":
            pts = [p + (Fraction(0),) for _, p in samples]
            write_off(out, pts, [tuple(range(len(pts)))])
            return 0
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["k", "u1", "u2", "x1", "x2"])
        for k, (u, p) in enumerate(samples):
            writer.writerow([k] + [fmt_number(c, args.exact) for c in u + p])
        return 0
    if P.dim != 3:
        raise UsageError("boundary export supports d = 2, 3")
    dirs, pts, faces = boundary_mesh_3d(P, args.samples)
    if args.format == "off":
        write_off(out, pts, faces)
        return 0
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["k", "u1", "u2", "u3", "x1", "x2", "x3"])
    for k, (u, p) in enumerate(zip(dirs, pts)):
        writer.writerow([k] + [fmt_number(c, args.exact) for c in u + p])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="interbody", description="Intersection bodies of polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("polytope", help="polytope JSON file")
        p.set_defaults(func=func)
        return p

    p = add("report", cmd_report, "convexity verdict as JSON")
    p.add_argument("--t", help="translation vector, e.g. 1,1/2")
    p.add_argument("--pairs", type=int, default=DEFAULT_PAIRS, help="probe pairs (generic d >= 3)")
    p.add_argument("--seed", type=int, default=None, help="probe seed (default: $INTERBODY_SEED or 0)")

    p = add("radial", cmd_radial, "exact radial function value")
    p.add_argument("--x", required=True, help="direction, e.g. 2,1")
    p.add_argument("--t", help="translation vector")

    p = add("chambers", cmd_chambers, "chambers with sign vectors and boundary polynomials")
    p.add_argument("--t", help="translation vector")

    p = add("arrangement", cmd_arrangement, "central (default) or affine arrangement")
    p.add_argument("--affine", action="store_true")
    p.add_argument("--t", help="translation vector")

    p = add("sweep", cmd_sweep, "region and verdict over a grid of translations (CSV)")
    p.add_argument("--grid", required=True, help="xmin:xmax:steps,ymin:ymax:steps")
    p.add_argument("--exact", action="store_true")

    p = add("boundary", cmd_boundary, "sampled boundary of IP as CSV or OFF")
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--format", choices=("csv", "off"), default="csv")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--t", help="translation vector")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # values such as "-1.5:1.5:5" look like options to argparse; glue them on
    for k in range(len(argv) - 1):
        if argv[k] in ("--grid", "--t", "--x"):
            argv[k:k + 2] = [f"{argv[k]}={argv[k + 1]}", ""]
    argv = [a for a in argv if a != ""]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    try:
        return args.func(args, out)
    except (InterbodyError, OSError, NotImplementedError) as exc:
        print(f"interbody: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
