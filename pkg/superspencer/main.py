"""Command-line entry point for superspencer."""
import argparse
import json
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from superspencer.cli.emit import dump_matrix, emit
from superspencer.cli.registry import canonical_label, shipped_cases
from superspencer.cli.runner import get_tower, run_cases
from superspencer.cli.verify import expectations_by_case, verify_case
from superspencer.config import settings
from superspencer.exceptions import InvalidParameterError, SuperSpencerError
from superspencer.schemas.cases import CaseSpec
from superspencer.schemas.errors import create_error_response
from superspencer.spencer import spencer_differential

# Configure structured logging
logging.basicConfig(
    level=getattr(logging, settings.log_level.upper()),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DIFF = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def parse_k_range(text: str) -> List[int]:
    """'3' -> [3]; '1..4' -> [1, 2, 3, 4]."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an order or a range a..b") from None
    if low < 1 or high < low:
        raise argparse.ArgumentTypeError(f"Order range '{text}' must satisfy 1 ≤ a ≤ b")
    return list(range(low, high + 1))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superspencer",
        description="Spencer cohomology of depth-one Lie superalgebra pairs",
    )
    parser.add_argument(
        "--version", action="version", version=f"{settings.app_name} {settings.app_version}"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_case_options(sub: argparse.ArgumentParser, repeatable: bool) -> None:
        if repeatable:
            sub.add_argument(
                "--case", action="append", help="Case label; repeat for several (default: all shipped)"
            )
        else:
            sub.add_argument("--case", required=True, help="Case label")
        sub.add_argument("--k", type=parse_k_range, help="Order or range a..b")
        sub.add_argument("--kmax", type=int, help="Cap on the prolongation order")
        sub.add_argument("--out", help="Output file (default: stdout)")

    run_p = subparsers.add_parser("run", help="Compute towers, cohomology and module reports")
    add_case_options(run_p, repeatable=True)
    run_p.add_argument("--format", choices=["json", "csv"], default="json")
    run_p.add_argument("--timing", action="store_true", help="Record timing in reports")
    run_p.add_argument("--threads", type=int, help="Cases run in parallel")

    verify_p = subparsers.add_parser("verify", help="Compare runs with the expectation tables")
    add_case_options(verify_p, repeatable=True)
    verify_p.add_argument("--format", choices=["json", "csv"], default="json")

    subparsers.add_parser("list-cases", help="List shipped case labels")

    dump_p = subparsers.add_parser("dump-matrix", help="Write ∂^{k,s} in triplet format")
    add_case_options(dump_p, repeatable=False)
    dump_p.add_argument("--s", type=int, choices=[0, 1, 2, 3], default=1, help="Cochain degree")
    return parser


def _specs(labels: Optional[List[str]], orders: Optional[List[int]]) -> List[CaseSpec]:
    if not labels:
        shipped = shipped_cases()
        if orders:
            return [spec.model_copy(update={"k_range": orders}) for spec in shipped]
        return shipped
    return [CaseSpec(label=label, k_range=orders or [1, 2]) for label in labels]


def cmd_run(args: argparse.Namespace) -> int:
    if args.timing:
        settings.include_timing = True
    reports = run_cases(_specs(args.case, args.k), args.kmax, args.threads)
    text = emit(reports, args.format, args.out)
    if args.out is None:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    grouped = expectations_by_case()
    if args.case:
        specs = _specs(args.case, args.k)
    else:
        specs = [
            spec
            for spec in shipped_cases()
            if canonical_label(spec.label) in grouped
        ]
    reports = [verify_case(spec, args.kmax, grouped) for spec in specs]
    text = emit(reports, args.format, args.out)
    if args.out is None:
        sys.stdout.write(text)
    failed = [report.case for report in reports if report.diffs]
    if failed:
        logger.warning(f"Verification failed for {', '.join(failed)}")
        return EXIT_DIFF
    return EXIT_OK


def cmd_list_cases(args: argparse.Namespace) -> int:
    for spec in shipped_cases():
        orders = f"{spec.k_range[0]}..{spec.k_range[-1]}"
        sys.stdout.write(f"{spec.label}\t{orders}\t{spec.description}\n")
    return EXIT_OK


def cmd_dump_matrix(args: argparse.Namespace) -> int:
    orders = args.k or [1]
    if len(orders) != 1:
        raise InvalidParameterError("dump-matrix takes a single order --k")
    k = orders[0]
    tower = get_tower(args.case, min(k, args.kmax) if args.kmax else k)
    text = dump_matrix(spencer_differential(tower, k, args.s), args.out)
    if args.out is None:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {
    "run": cmd_run,
    "verify": cmd_verify,
    "list-cases": cmd_list_cases,
    "dump-matrix": cmd_dump_matrix,
}


def _fail(error: Exception, exit_code: int, errors=None) -> int:
    sys.stderr.write(json.dumps(create_error_response(error, errors)) + "\n")
    return exit_code


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and dispatch a command.

    Returns:
        0 pass, 1 verification diff, 2 usage error, 3 internal invariant violation
    """
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except SuperSpencerError as e:
        logger.error(f"{args.command} failed: {e.detail}")
        return _fail(e, e.exit_code)
    except ValidationError as e:
        errors = [{"loc": list(err["loc"]), "msg": err["msg"]} for err in e.errors()]
        return _fail(InvalidParameterError("Invalid arguments"), EXIT_USAGE, errors)
    except argparse.ArgumentTypeError as e:
        return _fail(InvalidParameterError(str(e)), EXIT_USAGE)
    except Exception as e:
        logger.error(f"{args.command} failed unexpectedly: {e}", exc_info=True)
        return _fail(e, EXIT_INTERNAL)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
