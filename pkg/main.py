import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from core.commands import (
    COUNT_METHODS,
    POLY_METHODS,
    cmd_bijection,
    cmd_count,
    cmd_interlace,
    cmd_poly,
    cmd_report,
    cmd_roots,
)
from core.config import LabConfig
from core.errors import BudgetExceededError, LabError, UsageError
from modules.ehrhart.closed_forms import Family, parse_family
from modules.report.writers import FORMATS

logger = logging.getLogger("ehrhart_lab")

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def parse_point(raw: str) -> List[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--point expects comma-separated integers, got {raw!r}")


def _family(raw: str) -> Family:
    try:
        return parse_family(raw)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _join_point(argv: List[str]) -> List[str]:
    """Rewrite `--point -1,1` as `--point=-1,1`; argparse reads a leading minus as an option."""
    joined: List[str] = []
    i = 0
    while i < len(argv):
        if argv[i] == "--point" and i + 1 < len(argv):
            joined.append(f"--point={argv[i + 1]}")
            i += 2
        else:
            joined.append(argv[i])
            i += 1
    return joined


def _common_options(default) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--budget", type=int, default=default, help="max membership tests per enumeration (env EHRHART_LAB_BUDGET)"
    )
    common.add_argument("--tol", type=float, default=default, help="canonical-line tolerance (default 1e-8)")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ehrhart-lab",
        parents=[_common_options(None)],
        description="Lattice points, Ehrhart polynomials and root checks for the dual root polytopes A*_d and C*_d.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    # accepted after the subcommand as well; SUPPRESS keeps a value given before it
    common = _common_options(argparse.SUPPRESS)

    count = sub.add_parser("count", parents=[common], help="lattice points of k*P and of its boundary")
    count.add_argument("--polytope", type=_family, required=True)
    count.add_argument("--dim", type=int, required=True)
    count.add_argument("--scale", type=int, required=True)
    count.add_argument("--method", choices=COUNT_METHODS, default="auto")

    poly = sub.add_parser("poly", parents=[common], help="Ehrhart polynomial coefficients, constant term first")
    poly.add_argument("--polytope", type=_family, required=True)
    poly.add_argument("--dim", type=int, required=True)
    poly.add_argument("--method", choices=POLY_METHODS, default="formula")

    roots = sub.add_parser("roots", parents=[common], help="roots of the Ehrhart polynomial and the canonical-line verdict")
    roots.add_argument("--polytope", type=_family, required=True)
    roots.add_argument("--dim", type=int, required=True)
    roots.add_argument("--closed-form", action="store_true", help="closed-form roots (Astar, Cstar)")

    bijection = sub.add_parser("bijection", parents=[common], help="verify the boundary maps or trace one point")
    bijection.add_argument("--dim", type=int, required=True)
    bijection.add_argument("--scale", type=int, required=True)
    bijection.add_argument("--point", type=parse_point, help="e.g. --point -1,1")

    interlace = sub.add_parser("interlace", parents=[common], help="interlacing of consecutive root sets")
    interlace.add_argument("--max-d", type=int, required=True)
    interlace.add_argument("--family", type=_family, default=Family.C_STAR)

    report = sub.add_parser("report", parents=[common], help="full cross-check sweep written as CSV or JSON")
    report.add_argument("--max-d", type=int, required=True)
    report.add_argument("--max-k", type=int, required=True)
    report.add_argument("--out", type=Path, required=True)
    report.add_argument("--format", choices=FORMATS, default="csv")
    return parser


def dispatch(args: argparse.Namespace, config: LabConfig):
    if args.command == "count":
        cmd_count(args.polytope, args.dim, args.scale, args.method, config)
    elif args.command == "poly":
        cmd_poly(args.polytope, args.dim, args.method, config)
    elif args.command == "roots":
        cmd_roots(args.polytope, args.dim, args.closed_form, config)
    elif args.command == "bijection":
        cmd_bijection(args.dim, args.scale, args.point, config)
    elif args.command == "interlace":
        cmd_interlace(args.max_d, args.family, config)
    elif args.command == "report":
        cmd_report(args.max_d, args.max_k, args.out, args.format, config)


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_join_point(argv))
    try:
        config = LabConfig.from_env(budget=args.budget).with_tolerance(args.tol)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=config.log_level,
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
        stream=sys.stderr,
    )
    try:
        dispatch(args, config)
    except UsageError as exc:
        logger.error("[USAGE] %s", exc)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        logger.error("[BUDGET] %s", exc)
        return EXIT_BUDGET
    except LabError as exc:
        logger.error("[FAIL] %s", exc)
        return EXIT_VERIFICATION
    except OSError as exc:
        logger.error("[IO] %s", exc)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
