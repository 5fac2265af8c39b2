"""
Symmetric Orbit Polynomials - Command Line Application

Entry point for computing orbit tables, weak-order graphs, basis expansions
and running the verification suites.

Run with:
    python app.py upsilon --pair o --size 4
    python app.py hasse --pair sp --size 6
    python app.py verify path-independence --pair sp --size 8
    python app.py expand "2*x1*(x1+x2)" --basis double-schubert --n 3
"""

import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from config.settings import AppConfig
from core.error_handler import ErrorHandler, create_input_error, create_parse_error
from core.polynomial import Polynomial, parse_polynomial
from core.reports import ExpansionReport
from core.response_formatter import FormatStyle, get_response_formatter
from core.schubert import BasisKind, expand_grothendieck, expand_schubert, kirillov_double_expand
from orbits.pairs import SymmetricPair, Theory
from orbits.upsilon import compute_all
from orbits.verification import SuiteOptions, VerifyTarget, run_all, run_suite
from orbits.weak_order import weak_order_of

# Configure logging
logging.basicConfig(level=AppConfig.APP_LOG_LEVEL)
logger = logging.getLogger(__name__)

PAIR_CHOICES = ["o", "sp"]
THEORY_CHOICES = [t.value for t in Theory]
TABLE_FORMATS = ["json", "csv", "pretty"]


def _check_size(size: int):
    if size > AppConfig.MAX_AMBIENT_SIZE:
        raise create_input_error(
            f"size {size} exceeds MAX_AMBIENT_SIZE={AppConfig.MAX_AMBIENT_SIZE}",
            suggestions=["Raise MAX_AMBIENT_SIZE in the environment to go beyond desk scale"],
        )


def _pair_from_args(args) -> SymmetricPair:
    _check_size(args.size)
    return SymmetricPair.parse(args.pair, args.size)


def parse_sizes(values: Optional[List[str]]) -> Optional[List[int]]:
    """Sizes from repeated --size flags, each possibly a comma list"""
    if not values:
        return None
    sizes = []
    for value in values:
        for part in value.split(","):
            part = part.strip()
            if not part:
                continue
            if not part.isdigit() or int(part) < 1:
                raise create_input_error(f"invalid size {part!r}")
            sizes.append(int(part))
    for size in sizes:
        _check_size(size)
    return sizes


def parse_specialization(text: str) -> Dict[int, Polynomial]:
    """
    Parse "y3=-y2,y4=-y1" into {3: -y2, 4: -y1}

    Args:
        text: Comma separated yJ=expression assignments

    Returns:
        y-index -> substituted polynomial
    """
    assignments: Dict[int, Polynomial] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, sep, value = part.partition("=")
        name = name.strip()
        if not sep or not name.startswith("y") or not name[1:].isdigit():
            raise create_parse_error("specialization must look like 'y3=-y2,y4=-y1'", text)
        assignments[int(name[1:])] = parse_polynomial(value)
    return assignments


def cmd_upsilon(args) -> str:
    pair = _pair_from_args(args)
    theory = Theory(args.theory)
    table = compute_all(pair, theory)
    logger.info(f"Computed {len(table)} orbit rows for {pair.label}")
    return get_response_formatter().format_table(table.to_report(), FormatStyle(args.format))


def cmd_hasse(args) -> str:
    graph = weak_order_of(_pair_from_args(args))
    return get_response_formatter().format_graph(graph.to_export(), graph.export_dot(), FormatStyle(args.format))


def cmd_verify(args):
    """Returns the rendered report and whether every suite passed"""
    options = SuiteOptions(
        kind=SymmetricPair.parse(args.pair, 2).kind if args.pair else None,
        sizes=parse_sizes(args.size),
        n=args.n,
        trials=args.trials,
        seed=args.seed,
    )
    if args.target == "all":
        reports = run_all(options)
    else:
        reports = [run_suite(VerifyTarget(args.target), options)]
    text = get_response_formatter().format_suites(reports, FormatStyle(args.format))
    failed = [r for r in reports if not r.passed]
    for report in failed:
        print(f"❌ {report.target}: {report.failures[0]}", file=sys.stderr)
        counterexample = report.details.get("counterexample")
        if counterexample:
            print(f"   counterexample: {counterexample}", file=sys.stderr)
    return text, not failed


def cmd_expand(args) -> str:
    if args.n < 1:
        raise create_input_error(f"--n must be positive, got {args.n}")
    _check_size(args.n)
    f = parse_polynomial(args.polynomial)
    basis = BasisKind(args.basis)
    if basis == BasisKind.SCHUBERT:
        expansion = expand_schubert(f, args.n)
    elif basis == BasisKind.GROTHENDIECK:
        expansion = expand_grothendieck(f, args.n)
    else:
        expansion = kirillov_double_expand(f, args.n)

    specialization = None
    if args.specialize:
        if basis != BasisKind.DOUBLE_SCHUBERT:
            raise create_input_error("--specialize only applies to --basis double-schubert")
        assignments = parse_specialization(args.specialize)
        expansion = expansion.specialize_y(assignments)
        specialization = {f"y{j}": str(v) for j, v in sorted(assignments.items())}

    report = ExpansionReport(
        polynomial=str(f),
        basis=basis.value,
        n=args.n,
        terms=expansion.as_dict(),
        lines=expansion.format_lines(),
        specialization=specialization,
    )
    return get_response_formatter().format_expansion(report, FormatStyle(args.format))


def write_output(text: str, out: Optional[str]):
    """Write to stdout, or to --out (relative paths land in REPORTS_DIR)"""
    if not out:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    path = Path(out)
    if not path.is_absolute():
        AppConfig.ensure_directories()
        path = AppConfig.REPORTS_DIR / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    logger.info(f"Wrote output to {path}")


def build_parser():
    import argparse

    parser = argparse.ArgumentParser(
        prog="app.py",
        description="Polynomial representatives of symmetric orbit closures",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    upsilon = subparsers.add_parser("upsilon", help="Orbit table of Upsilon (or Upsilon^K) polynomials")
    upsilon.add_argument("--pair", choices=PAIR_CHOICES, required=True)
    upsilon.add_argument("--size", type=int, required=True)
    upsilon.add_argument("--theory", choices=THEORY_CHOICES, default=Theory.COHOMOLOGY.value)
    upsilon.add_argument("--format", choices=TABLE_FORMATS, default="pretty")
    upsilon.add_argument("--out")

    hasse = subparsers.add_parser("hasse", help="Weak-order graph as DOT or an edge list")
    hasse.add_argument("--pair", choices=PAIR_CHOICES, required=True)
    hasse.add_argument("--size", type=int, required=True)
    hasse.add_argument("--format", choices=[s.value for s in FormatStyle], default="dot")
    hasse.add_argument("--out")

    verify = subparsers.add_parser("verify", help="Run a verification suite")
    verify.add_argument("target", choices=[t.value for t in VerifyTarget] + ["all"])
    verify.add_argument("--pair", choices=PAIR_CHOICES)
    verify.add_argument("--size", action="append", help="Ambient size; repeat or give a comma list")
    verify.add_argument("--n", type=int, help="Flag variety rank for basis suites")
    verify.add_argument("--trials", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--format", choices=TABLE_FORMATS, default="json")
    verify.add_argument("--out")

    expand = subparsers.add_parser("expand", help="Expand a polynomial in a Schubert-type basis")
    expand.add_argument("polynomial")
    expand.add_argument("--basis", choices=[b.value for b in BasisKind], default=BasisKind.SCHUBERT.value)
    expand.add_argument("--n", type=int, required=True)
    expand.add_argument("--specialize", help='y-substitution such as "y3=-y2,y4=-y1"')
    expand.add_argument("--format", choices=TABLE_FORMATS, default="pretty")
    expand.add_argument("--out")

    return parser


def main(argv: Optional[List[str]] = None, handler: Optional[ErrorHandler] = None) -> int:
    """
    Run one command

    Args:
        argv: Arguments without the program name; sys.argv when omitted
        handler: Error handler to report through; shared across calls it accumulates statistics

    Returns:
        0 on success, 1 on verification failure, 2 on invalid input, 3 otherwise
    """
    args = build_parser().parse_args(argv)
    handler = handler or ErrorHandler(include_traceback=AppConfig.is_development())
    try:
        if args.command == "verify":
            text, passed = cmd_verify(args)
            write_output(text, args.out)
            return 0 if passed else 1
        commands = {"upsilon": cmd_upsilon, "hasse": cmd_hasse, "expand": cmd_expand}
        write_output(commands[args.command](args), args.out)
        return 0
    except Exception as e:
        diagnostic = handler.handle_error(e, context=args.command)
        print(f"❌ {diagnostic['message']}", file=sys.stderr)
        for suggestion in diagnostic.get("suggestions") or []:
            print(f"   💡 {suggestion}", file=sys.stderr)
        if diagnostic.get("counterexample"):
            print(f"   counterexample: {diagnostic['counterexample']}", file=sys.stderr)
        logger.debug(f"Error statistics: {handler.get_error_statistics()}")
        return handler.exit_code(e)


if __name__ == "__main__":
    sys.exit(main())
