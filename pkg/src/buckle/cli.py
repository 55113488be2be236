"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 check violated or solver
failure, 2 usage, I/O or schema error.
"""

import argparse
import logging
import sys

from . import bounds_euclidean as be
from . import bounds_sphere as bs
from .core import (
    Disc,
    Interval,
    Rectangle,
    SphericalCap,
    dumps,
    read_json,
    read_spectrum,
    write_json,
)
from .errors import BuckleError, IllConditionedBasisError
from .report import build_report, report_csv, verify_moments, verify_spectrum
from .solver.solve import default_m_max, solve_buckling

class UsageError(Exception):
    pass


def _float_list(text):
    try:
        vals = [float(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected numbers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("expected at least one number")
    return vals


def build_parser():
    parser = argparse.ArgumentParser(prog="buckle", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a buckling spectrum")
    p.add_argument("--domain", required=True, choices=["interval", "rectangle", "disc", "cap"])
    p.add_argument("--l", type=int, default=2, help="order of the problem (>= 2)")
    p.add_argument("--basis", type=int, default=16, help="basis size per axis / per mode")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--m-max", type=int, default=None, help="highest azimuthal mode (disc, cap)")
    p.add_argument("--length", type=float, default=1.0, help="interval length")
    p.add_argument("--sides", type=_float_list, default=[1.0, 1.0], help="rectangle sides, e.g. 1,2")
    p.add_argument("--radius", type=float, default=1.0, help="disc radius")
    p.add_argument("--theta0", type=float, default=None, help="cap polar angle in (0, pi)")
    p.add_argument("--method", choices=["lapack", "jacobi"], default="lapack")
    p.add_argument("--out", required=True, help="spectrum file to write")
    p.add_argument("--solution-out", help="also write eigenvectors and moments here")

    p = sub.add_parser("bounds", help="evaluate bounds on a spectrum file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--out", help="report file (JSON); printed to stdout if omitted")
    p.add_argument("--csv", help="also write the report as CSV")

    p = sub.add_parser("verify", help="check a spectrum against the inequalities")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--solution", help="solution dump for moment checks")
    p.add_argument("--tolerance", type=float, default=1e-8)
    p.add_argument("--k-max", type=int, default=None)

    p = sub.add_parser("coeffs", help="print recursion coefficients")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    return parser


def _domain(args):
    if args.domain == "interval":
        return Interval(args.length)
    if args.domain == "rectangle":
        return Rectangle(tuple(args.sides))
    if args.domain == "disc":
        return Disc(args.radius)
    if args.theta0 is None:
        raise UsageError("--theta0 is required for a cap")
    return SphericalCap(args.theta0)


def cmd_solve(args):
    if args.l < 2:
        raise UsageError("--l must be >= 2")
    if args.count < 0:
        raise UsageError("--count must be >= 0")
    try:
        domain = _domain(args)
    except (ValueError, BuckleError) as exc:
        raise UsageError(str(exc))
    m_max = args.m_max
    if isinstance(domain, (Disc, SphericalCap)) and m_max is None:
        m_max = default_m_max(args.count)
    try:
        solution = solve_buckling(domain, args.l, args.basis, args.count, m_max=m_max,
                                  method=args.method)
    except IllConditionedBasisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        raise UsageError(str(exc))
    for w in solution.warnings:
        print(f"warning: {w}", file=sys.stderr)
    write_json(args.out, solution.spectrum_dict())
    if args.solution_out:
        write_json(args.solution_out, solution.to_dict())
    return 0


def cmd_bounds(args):
    spectrum = read_spectrum(args.input)
    report = build_report(spectrum, args.k_max)
    if args.out:
        write_json(args.out, report.to_dict())
    else:
        sys.stdout.write(dumps(report.to_dict()))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(report_csv(report))
    return 0


def cmd_verify(args):
    spectrum = read_spectrum(args.input)
    violations = verify_spectrum(spectrum, args.tolerance, args.k_max)
    if args.solution:
        violations += verify_moments(read_json(args.solution), args.tolerance)
    if violations:
        print(f"FAIL: {len(violations)} violation(s)")
        for v in violations:
            print(f"  {v}")
        return 1
    print(f"PASS: {spectrum.geometry} spectrum, n={spectrum.dimension}, l={spectrum.order}, "
          f"{len(spectrum)} eigenvalues")
    return 0


def cmd_coeffs(args):
    if args.l < 2 or args.n < 2:
        raise UsageError("coeffs needs --l >= 2 and --n >= 2")
    rec = bs.fg_polys(args.l, args.n)
    print(f"l = {args.l}, n = {args.n}")
    print(f"C = {be.coefficient_C(args.l, args.n)}")
    for q, (F, G) in enumerate(zip(rec.F, rec.G)):
        print(f"F_{q} = {list(F.coeffs)}")
        print(f"G_{q} = {list(G.coeffs)}")
    print(f"a = {list(rec.a)}")
    return 0


COMMANDS = {"solve": cmd_solve, "bounds": cmd_bounds, "verify": cmd_verify, "coeffs": cmd_coeffs}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))
    except (OSError, ValueError, KeyError, TypeError, BuckleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
