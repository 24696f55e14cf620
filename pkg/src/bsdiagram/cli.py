"""Command line interface.

Subcommands follow the workflow for studying a pair of scale-invariant
ratios: draw samples of the diagram (``sample``, ``plot``), compute exact
slices and boundary constants (``slice``, ``bounds``), build witness
triangles (``invert``) and audit the known inequalities (``verify``).

Exit codes: 0 success, 1 an inequality was violated, 2 usage or domain
error, 3 I/O or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import sys

import numpy as np

from . import figures
from .diagram import DiagramPoint, diagram_coordinates, invert, map_point, phi_minus, phi_plus
from .diagram import slice as diagram_slice
from .errors import DomainError
from .geometry import Triangle, ravi_arrays
from .inequalities import NAMES, REL_TOL, empirical_sharp_constants, evaluate_sides
from .sampling import sample_grid, sample_random

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
PROG = "bsdiagram"


class InputError(Exception):
    """Malformed or invalid input file content."""


def _g17(v):
    return format(float(v), ".17g")


def _g15(v):
    return format(float(v), ".15g")


def _count(s):
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if not v.is_integer() or v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s!r}")
    return int(v)


def _nonneg(s):
    v = float(s)
    if not v >= 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative number, got {s!r}")
    return v


def _open_out(path):
    return sys.stdout if path in (None, "-") else open(path, "w", newline="")


def _write(path, text):
    f = _open_out(path)
    try:
        f.write(text)
    finally:
        if f is not sys.stdout:
            f.close()


def _format_for(args, default):
    if args.format:
        return args.format
    if args.output and args.output.endswith(".svg"):
        return "svg"
    if args.output and args.output.endswith(".csv"):
        return "csv"
    return default


def _sides_csv(sides, points):
    buf = io.StringIO()
    np.savetxt(buf, np.column_stack([sides, points]), fmt="%.17g", delimiter=",",
               header="a,b,c,X,Y", comments="")
    return buf.getvalue()


def read_triangles(path):
    """Parse a CSV of side lengths; a header line naming ``a,b,c`` is optional.

    Returns an ``(n, 3)`` array. Extra columns (e.g. X, Y) are ignored.
    Raises `InputError` naming the offending line.
    """
    try:
        sides = _load_fast(path)
        ravi_arrays(*sides.T)
        return sides
    except (ValueError, IndexError):
        # DomainError included; rescan line by line for a precise message
        pass
    return _load_checked(path)


def _load_fast(path):
    with open(path, newline="") as f:
        first = f.readline()
    fields = next(csv.reader([first]), [])
    if _is_header(fields):
        names = [s.strip().lower() for s in fields]
        cols = [names.index(k) for k in "abc"]
        skip = 1
    else:
        cols, skip = [0, 1, 2], 0
    sides = np.loadtxt(path, delimiter=",", skiprows=skip, usecols=cols, ndmin=2)
    if sides.shape[0] == 0 or sides.shape[1] != 3:
        raise ValueError("empty")
    return sides


def _load_checked(path):
    cols = (0, 1, 2)
    rows, linenos = [], []
    header_allowed = True
    with open(path, newline="") as f:
        for lineno, fields in enumerate(csv.reader(f), start=1):
            if not any(s.strip() for s in fields):
                continue
            if header_allowed and _is_header(fields):
                names = [s.strip().lower() for s in fields]
                if not {"a", "b", "c"} <= set(names):
                    raise InputError(f"line {lineno}: header must name columns a, b, c")
                cols = tuple(names.index(k) for k in "abc")
                header_allowed = False
                continue
            header_allowed = False
            try:
                rows.append([float(fields[i]) for i in cols])
            except (ValueError, IndexError):
                raise InputError(f"line {lineno}: expected three numbers a,b,c, "
                                 f"got {','.join(fields)!r}") from None
            linenos.append(lineno)
    if not rows:
        raise InputError(f"{path}: no triangles found")
    sides = np.array(rows)
    try:
        ravi_arrays(*sides.T)
    except DomainError:
        for lineno, (a, b, c) in zip(linenos, rows):
            try:
                Triangle(a, b, c)
            except DomainError as e:
                raise InputError(f"line {lineno}: invalid triangle "
                                 f"({a:g}, {b:g}, {c:g}): {e}") from None
        raise
    return sides


def _is_header(fields):
    try:
        [float(s) for s in fields]
    except ValueError:
        return True
    return False


def cmd_sample(args):
    if args.grid:
        s = sample_grid(args.nx, args.ny)
    else:
        s = sample_random(args.n, args.seed)
    if _format_for(args, "csv") == "svg":
        _write(args.output, figures.diagram_svg(s.points))
    else:
        _write(args.output, _sides_csv(s.sides, s.points))
    return EXIT_OK


def cmd_slice(args):
    sb = diagram_slice(args.x)
    rows = [("X", sb.X), ("y_min", sb.y_min), ("y_max", sb.y_max)]
    for k, (lo, hi) in enumerate(sb.z_intervals, start=1):
        rows += [(f"z_interval_{k}_lo", lo), (f"z_interval_{k}_hi", hi)]
    rows += [("z_lo", sb.z_lo), ("z_hi", sb.z_hi),
             ("z_crit_1", sb.z_crit_1), ("z_crit_2", sb.z_crit_2)]
    if _format_for(args, "text") == "csv":
        text = "quantity,value\n" + "".join(f"{k},{_g15(v)}\n" for k, v in rows)
    else:
        text = "".join(f"{k} = {_g15(v)}\n" for k, v in rows)
    _write(args.output, text)
    return EXIT_OK


def cmd_invert(args):
    p = DiagramPoint(args.x, args.y)
    t = invert(p, tol=args.tol)
    q = map_point(t)
    text = (f"a = {_g17(t.a)}\nb = {_g17(t.b)}\nc = {_g17(t.c)}\n"
            f"X = {_g17(q.X)}  residual {abs(q.X - p.X):.3e}\n"
            f"Y = {_g17(q.Y)}  residual {abs(q.Y - p.Y):.3e}\n")
    _write(args.output, text)
    return EXIT_OK


def cmd_verify(args):
    if args.input:
        sides = read_triangles(args.input)
    else:
        sides = sample_random(args.n, args.seed).sides
    a, b, c = sides.T
    X, Y = diagram_coordinates(a, b, c)
    res = evaluate_sides(a, b, c, rel_tol=args.tol)
    violated = np.stack([res[k]["applicable"] & ~res[k]["holds"] for k in NAMES], axis=1)
    near = np.stack([res[k]["near_equality"] for k in NAMES], axis=1)
    fmt = _format_for(args, "text")
    lines = ["row,a,b,c,X,Y,violations,near_equality"] if fmt == "csv" else []
    for i in range(len(sides)):
        bad = ";".join(n for n, f in zip(NAMES, violated[i]) if f)
        eq = ";".join(n for n, f in zip(NAMES, near[i]) if f)
        nums = [_g17(v) for v in (a[i], b[i], c[i], X[i], Y[i])]
        if fmt == "csv":
            lines.append(",".join([str(i + 1), *nums, bad, eq]))
        else:
            lines.append(f"row {i + 1}: a={nums[0]} b={nums[1]} c={nums[2]} X={nums[3]} "
                         f"Y={nums[4]} violations=[{bad}] near_equality=[{eq}]")
    n_bad = int(violated.sum())
    summary = (f"summary: {len(sides)} triangles, {n_bad} violations, "
               f"{int(violated.any(axis=1).sum())} triangles with violations")
    if args.output:
        _write(args.output, "\n".join(lines) + "\n")
        print(summary)
    else:
        _write(None, "\n".join(lines + ([] if fmt == "csv" else [summary])) + "\n")
        if fmt == "csv":
            print(summary, file=sys.stderr)
    return EXIT_OK if n_bad == 0 else EXIT_VIOLATION


def cmd_bounds(args):
    c_min, c_max = empirical_sharp_constants(args.n)
    if _format_for(args, "text") == "csv":
        X = np.linspace(0.0, 0.5, args.n)
        buf = ["X,phi_minus,phi_plus,fh_direct,fh_reverse"]
        for x in X:
            lower = _g17(phi_minus(x)) if x <= 0.125 else ""
            buf.append(f"{_g17(x)},{lower},{_g17(phi_plus(x))},"
                       f"{_g17(1 - 2 * x)},{_g17(1 - 8 * x)}")
        _write(args.output, "\n".join(buf) + "\n")
    else:
        _write(args.output, f"c_min = {_g15(c_min)}\nc_max = {_g15(c_max)}\n")
    return EXIT_OK


def cmd_plot(args):
    if args.slice is not None:
        text = figures.slice_svg(args.slice)
    else:
        pts = None
        if args.samples:
            sides = read_triangles(args.samples)
            pts = np.column_stack(diagram_coordinates(*sides.T))
        text = figures.diagram_svg(pts)
    _write(args.output, text)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog=PROG, description="Perimeter/area/deficit diagram of triangles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p, formats):
        p.add_argument("-o", "--output", help="output file (default: stdout)")
        p.add_argument("--format", choices=formats)

    p = sub.add_parser("sample", help="sample triangles and their (X, Y) points")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--random", action="store_true", help="random Ravi sampling (default)")
    g.add_argument("--grid", action="store_true", help="inverse-construction grid")
    p.add_argument("-n", type=_count, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nx", type=_count, default=9)
    p.add_argument("--ny", type=_count, default=7)
    add_output(p, ["csv", "svg"])
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("slice", help="exact bounds of the vertical slice at X")
    p.add_argument("--x", type=float, required=True)
    add_output(p, ["text", "csv"])
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("invert", help="witness triangle for a diagram point")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--tol", type=_nonneg, default=1e-9)
    add_output(p, ["text"])
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("verify", help="check every inequality on a population")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--random", action="store_true", help="random triangles (default)")
    src.add_argument("--input", help="CSV of a,b,c rows")
    p.add_argument("-n", type=_count, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=_nonneg, default=REL_TOL, help="relative tolerance")
    add_output(p, ["text", "csv"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="sharp linear constants from the boundary")
    p.add_argument("-n", type=_count, default=10_000, help="points per boundary piece")
    add_output(p, ["text", "csv"])
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("plot", help="SVG of the diagram or of a slice cubic")
    p.add_argument("--samples", help="CSV of a,b,c rows to overlay")
    p.add_argument("--slice", type=float, metavar="X", help="plot h(z) at this X instead")
    add_output(p, ["svg"])
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "bounds" and args.n < 10:
        return _fail("bounds needs -n >= 10", EXIT_USAGE)
    for name in ("x", "y"):
        v = getattr(args, name, None)
        if v is not None and not math.isfinite(v):
            return _fail(f"--{name} must be finite", EXIT_USAGE)
    try:
        return args.func(args)
    except DomainError as e:
        return _fail(str(e), EXIT_USAGE)
    except InputError as e:
        return _fail(str(e), EXIT_IO)
    except OSError as e:
        return _fail(f"{e.filename or ''}: {e.strerror or e}", EXIT_IO)


def _fail(msg, code):
    print(f"{PROG}: error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
