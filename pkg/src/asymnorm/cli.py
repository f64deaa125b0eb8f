"""Command-line interface.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 bad input.

Negative coordinates must be attached with '=', e.g. ``--point=-3,2``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .cone import (ConeFormatError, HalfspaceCone, NotFullDimensional, active_facets,
                   dump_cone, eliminate_redundancy, interior_point, is_pointed,
                   is_proper_cone, load_cone)
from .gauge import (ApexNotInterior, GaugeNorm, SamplingStarved, check_axioms,
                    euclidean_norm, kernel_contains, sphere_sample, symmetrize)
from .numeric import FEAS_TOL, DimensionError, as_vector
from .oracle import fixture_suite, gauge_by_bisection
from .properness import ApexError, verify_equivalence
from .retraction import (BOUNDARY_TOL, EXTERIOR_THRESHOLD, RetractionPair,
                         audit_retraction)

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(v) -> str:
    return repr(float(v))


def _floats(v):
    return [float(t) for t in np.asarray(v).reshape(-1)]


def _parse_vector(text: str):
    try:
        return as_vector([float(t) for t in text.replace(";", ",").split(",") if t.strip()])
    except ValueError as exc:
        raise UsageError("cannot parse vector %r: %s" % (text, exc))


def _read_points(args, dim):
    pts = [_parse_vector(p) for p in (args.point or [])]
    if args.points:
        with open(args.points) as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    pts.append(_parse_vector(line))
    if not pts:
        raise UsageError("no input points; use --point or --points")
    for p in pts:
        if p.size != dim:
            raise UsageError("point %s has dimension %d, cone has %d" % (_floats(p), p.size, dim))
    return pts


def _cone(args):
    if not args.cone:
        raise UsageError("--cone FILE is required")
    return load_cone(args.cone)


def _gauge(args, cone):
    """Build the gauge; a non-proper cone or non-interior apex is a check failure."""
    if args.apex is None:
        raise UsageError("--apex is required")
    u = _parse_vector(args.apex)
    if u.size != cone.dim:
        raise UsageError("apex has dimension %d, cone has %d" % (u.size, cone.dim))
    if not is_proper_cone(cone):
        raise _CheckFailure({"error": "cone not proper"})
    try:
        return GaugeNorm(cone, u)
    except ApexNotInterior as exc:
        raise _CheckFailure({"error": "apex not interior", "detail": str(exc)})


class _CheckFailure(Exception):
    def __init__(self, payload):
        super().__init__(payload.get("error", ""))
        self.payload = payload


def _header(args, **extra):
    out = {"schema": SCHEMA, "command": args.command}
    out.update(extra)
    return out


def cmd_cone_check(args):
    cone = _cone(args)
    pointed = is_pointed(cone, args.tol)
    try:
        ip = _floats(interior_point(cone, args.tol))
        full = True
    except NotFullDimensional:
        ip, full = None, False
    irr = None
    if isinstance(cone, HalfspaceCone):
        reduced = eliminate_redundancy(cone, args.tol)
        irr = [i for i, a in enumerate(cone.normals)
               if any(np.array_equal(a, b) for b in reduced.normals)]
    proper = pointed and full
    report = _header(args, dim=cone.dim, rep=cone.rep, pointed=pointed, full_dimensional=full,
                     proper=proper, interior_point=ip, irredundant_facets=irr)
    return (EXIT_OK if proper else EXIT_FAIL), report


def cmd_gauge(args):
    cone = _cone(args)
    g = _gauge(args, cone)
    sym = symmetrize(g)
    rows = []
    for x in _read_points(args, cone.dim):
        row = {"x": _floats(x), "q": g(x), "p_s": sym(x), "kernel": kernel_contains(g, x, args.tol)}
        if args.oracle:
            b = gauge_by_bisection(cone, g.apex, x)
            row["bisection"] = b
            row["delta"] = abs(b - row["q"])
        rows.append(row)
    return EXIT_OK, _header(args, apex=_floats(g.apex), points=rows)


def cmd_retract(args):
    cone = _cone(args)
    pair = RetractionPair(_gauge(args, cone))
    rows = []
    for x in _read_points(args, cone.dim):
        q = pair.gauge(x)
        row = {"x": _floats(x), "Q": _floats(pair.apply_Q(x)), "R": _floats(pair.apply_R(x)),
               "q": q, "active_facet": None}
        if isinstance(cone, HalfspaceCone) and q > args.tol:
            active = active_facets(cone, pair.apply_Q(x), BOUNDARY_TOL)
            # facets are numbered from 1 in the order of the cone file
            row["active_facet"] = int(active[0]) + 1 if active.size else None
        rows.append(row)
    return EXIT_OK, _header(args, apex=_floats(pair.ray_direction), points=rows)


def _audit_payload(args, reports):
    ok = all(r.passed for r in reports)
    return (EXIT_OK if ok else EXIT_FAIL), _header(
        args, seed=args.seed, samples=args.samples, tol=args.tol, **{"pass": ok},
        reports=[r.to_dict() for r in reports])


def cmd_audit(args):
    cone = _cone(args)
    g = _gauge(args, cone)
    eq = verify_equivalence(g, g.apex, args.samples, args.seed, args.tol)
    audit = audit_retraction(RetractionPair(g), args.samples, args.seed, args.tol,
                             exterior_threshold=EXTERIOR_THRESHOLD)
    return _audit_payload(args, [eq, audit])


def cmd_proper_check(args):
    if args.functional == "euclidean":
        if args.apex is None:
            raise UsageError("--apex is required")
        u = _parse_vector(args.apex)
        p = euclidean_norm(args.dim or u.size)
        if u.size != p.dim:
            raise UsageError("apex has dimension %d, expected %d" % (u.size, p.dim))
    else:
        p = _gauge(args, _cone(args))
        u = p.apex
    try:
        eq = verify_equivalence(p, u, args.samples, args.seed, args.tol)
    except ApexError as exc:
        raise _CheckFailure({"error": "apex precondition", "detail": str(exc)})
    return _audit_payload(args, [check_axioms(p, args.samples, args.seed, args.tol), eq])


def cmd_sphere_dump(args):
    cone = _cone(args)
    g = _gauge(args, cone)
    pts = sphere_sample(g, args.count, args.seed, args.tol)
    if args.format == "json":
        return EXIT_OK, _header(args, dim=cone.dim, seed=args.seed,
                                points=[_floats(p) for p in pts])
    lines = ["# dim=%d seed=%d" % (cone.dim, args.seed)]
    lines += [",".join(_fmt(v) for v in p) for p in pts]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_fixtures(args):
    listing = []
    for f in fixture_suite():
        entry = {"name": f.name, "dim": f.dim, "apex": _floats(f.apex),
                 "description": f.description}
        if args.export:
            os.makedirs(args.export, exist_ok=True)
            for rep, cone in (("H", f.cone_h), ("V", f.cone_v)):
                fname = "%s.%s.json" % (f.name, rep)
                dump_cone(cone, os.path.join(args.export, fname))
                entry["file_" + rep] = fname
        listing.append(entry)
    payload = _header(args, fixtures=listing)
    if args.export:
        with open(os.path.join(args.export, "fixtures.json"), "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return EXIT_OK, payload


COMMANDS = {
    "cone-check": cmd_cone_check,
    "gauge": cmd_gauge,
    "retract": cmd_retract,
    "audit": cmd_audit,
    "proper-check": cmd_proper_check,
    "sphere-dump": cmd_sphere_dump,
    "fixtures": cmd_fixtures,
}


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="asymnorm", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cone", help="cone JSON file {dim, rep, rows}")
    common.add_argument("--apex", help="apex u as comma-separated coordinates (-u must be interior)")
    common.add_argument("--point", action="append", help="input point; repeatable")
    common.add_argument("--points", help="file with one comma-separated point per line")
    common.add_argument("--samples", type=_positive, default=10_000)
    common.add_argument("--seed", type=_positive, default=42)
    common.add_argument("--tol", type=float, default=FEAS_TOL)
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--format", choices=("json", "csv"),
                        help="output format (default: csv for sphere-dump, json otherwise)")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("cone-check", parents=[common], help="pointedness, interior, properness")
    p = sub.add_parser("gauge", parents=[common], help="evaluate q, its symmetrisation, kernel")
    p.add_argument("--oracle", action="store_true", help="also report the bisection value")
    sub.add_parser("retract", parents=[common], help="apply the retraction pair Q, R")
    sub.add_parser("audit", parents=[common], help="properness + retraction audit")
    p = sub.add_parser("proper-check", parents=[common], help="axioms + properness conditions")
    p.add_argument("--functional", choices=("gauge", "euclidean"), default="gauge")
    p.add_argument("--dim", type=_positive)
    p = sub.add_parser("sphere-dump", parents=[common], help="sample the unit sphere q = 1")
    p.add_argument("--count", type=_positive, default=100)
    p = sub.add_parser("fixtures", parents=[common], help="list or export the reference fixtures")
    p.add_argument("--export", metavar="DIR", help="write the fixture cones as JSON into DIR")
    return parser


def _render(args, payload) -> str:
    if isinstance(payload, str):
        return payload
    if args.format == "csv":
        if "points" not in payload:
            raise UsageError("--format csv is only available for gauge, retract and sphere-dump")
        lines = ["# schema=%d command=%s" % (SCHEMA, args.command)]
        for row in payload["points"]:
            cells = []
            for key, value in row.items():
                if isinstance(value, list):
                    cells += [_fmt(v) for v in value]
                elif value is None:
                    cells.append("")
                elif isinstance(value, bool):
                    cells.append(str(value).lower())
                else:
                    cells.append(_fmt(value))
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"
    return json.dumps(payload, indent=2) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.command == "sphere-dump" else "json"
    try:
        code, payload = COMMANDS[args.command](args)
        text = _render(args, payload)
    except _CheckFailure as exc:
        code, text = EXIT_FAIL, json.dumps(_header(args, **exc.payload), indent=2) + "\n"
    except (UsageError, ConeFormatError, DimensionError, OSError, ValueError,
            SamplingStarved) as exc:
        print("asymnorm %s: error: %s" % (args.command, exc), file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
