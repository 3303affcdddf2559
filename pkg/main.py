"""
Command-line entry point for the Spectral Turan Workbench
Parses subcommands and global flags, applies the run configuration and
emits reports on stdout; logs and error text go to stderr

Exit status: 0 success, 1 domain error, 2 usage error, 3 counterexample to
a theorem
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, ValidationError

from config import settings
from errors import WorkbenchError
from models.graph import Graph
from results_store import ResultStore, result_store
from schemas.patterns import ForbiddenSpec
from schemas.records import ErrorReport, ExtremalRecord, PatternCheck
from schemas.run_config import RunConfig
from services.bounds import all_bounds
from services.constructions import FAMILIES, build_family
from services.detection import PatternFilter, contains_pattern
from services.enumeration import enumerate_graphs
from services.extremal_service import extremal_service
from services.graph6 import graph6_decode, graph6_encode, read_graph6_lines, write_graph6_lines
from services.report_service import format_table, report_service
from services.spectral import spectral_radius
from services.trees import free_trees

# Configure logging
logging.basicConfig(
    level=getattr(logging, settings.LOG_LEVEL),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2
EXIT_COUNTEREXAMPLE = 3


# ----------------------------------------------------------------------
# Argument types
# ----------------------------------------------------------------------

def _forbidden_spec(text: str) -> ForbiddenSpec:
    try:
        return ForbiddenSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _orders(text: str) -> List[int]:
    """An order or an inclusive range such as 4..8"""
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            return list(range(int(low), int(high) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid order {text!r}; expected N or LOW..HIGH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bst",
        allow_abbrev=False,
        description=f"{settings.APP_NAME}: {settings.APP_DESCRIPTION}",
    )
    parser.add_argument("--format", dest="output_format", choices=["table", "csv", "json"],
                        help=f"report format (default {settings.OUTPUT_FORMAT})")
    parser.add_argument("--output", help="directory for persisted extremal records")
    parser.add_argument("--resume", action="store_true", help="skip cells already stored in --output (or in the configured results directory)")
    parser.add_argument("--threads", type=int, help="worker processes for enumeration")
    parser.add_argument("--tol", type=float, help="eigensolver residual tolerance")
    parser.add_argument("--compare-tol", type=float, help="slack for threshold and bound comparisons")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=text, allow_abbrev=False)

    p = command("construct", "emit a named construction as graph6")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--t", type=int, default=0)

    for name, text in (
        ("mu", "spectral radius and residual"),
        ("bounds", "every applicable bound report"),
        ("detect", "per-pattern containment"),
    ):
        p = command(name, text)
        p.add_argument("--g6", action="append", default=[], help="graph6 text (repeatable)")
        p.add_argument("--stdin", action="store_true", help="read graph6 lines from stdin")
        if name == "detect":
            p.add_argument("--forbid", type=_forbidden_spec, required=True, help='e.g. "P5,C6,C>=6"')

    p = command("extremal", "maximum mu over graphs avoiding the forbidden patterns")
    p.add_argument("--n", type=_orders, nargs="+", required=True)
    p.add_argument("--forbid", type=_forbidden_spec, action="append", help="forbidden set (repeatable)")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--exhaustive", action="store_true", help="sweep all graphs instead of pruning")

    p = command("gvariants", "g_l with {C_l, C_l+1} against every cycle of order >= l forbidden")
    p.add_argument("--n", type=_orders, nargs="+", required=True)
    p.add_argument("--l", type=int, required=True)

    p = command("verify", "verify a theorem on a range of orders")
    p.add_argument("--claim", required=True, choices=["th1a", "th1b", "th2", "th3"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--connected", action="store_true", help="only connected candidates")

    p = command("scan", "exploratory conjecture scan")
    p.add_argument("--conjecture", required=True, choices=["1", "2"])
    p.add_argument("--part", default="a", choices=["a", "b"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--connected", action="store_true", help="only connected candidates")

    p = command("trees", "free trees of order t as graph6")
    p.add_argument("--t", type=int, required=True)

    p = command("enumerate", "one graph per isomorphism class as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--forbid", type=_forbidden_spec)

    p = command("sandwich", "closed forms against the asymptotic references")
    p.add_argument("--n", type=int, nargs="+", default=[500, 1000, 2000])
    p.add_argument("--k", type=int, nargs="+", default=[1, 2, 3, 4])

    return parser


def build_config(args: argparse.Namespace) -> RunConfig:
    overrides = {
        "tolerance": args.tol,
        "compare_tolerance": args.compare_tol,
        "threads": args.threads,
        "output_format": args.output_format,
        "output": args.output,
        "resume": args.resume,
    }
    return RunConfig(**{key: value for key, value in overrides.items() if value is not None})


# ----------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------

def _input_graphs(args: argparse.Namespace, stdin) -> List[Graph]:
    graphs = [graph6_decode(text) for text in args.g6]
    if args.stdin:
        graphs.extend(read_graph6_lines(stdin))
    return graphs


def _emit(records: Sequence[BaseModel], config: RunConfig, stdout) -> None:
    stdout.write(report_service.render(records, config.output_format))


def cmd_construct(args, config: RunConfig, stdout, stdin) -> int:
    g = build_family(args.family, n=args.n, k=args.k, a=args.a, b=args.b, t=args.t)
    stdout.write(graph6_encode(g) + "\n")
    return EXIT_OK


def cmd_mu(args, config: RunConfig, stdout, stdin) -> int:
    graphs = _input_graphs(args, stdin)
    results = [spectral_radius(g) for g in graphs]
    if config.output_format == "table":
        stdout.write(format_table(
            ["graph6", "mu", "residual", "iterations"],
            [(graph6_encode(g), r.mu, r.residual, r.iterations) for g, r in zip(graphs, results)],
        ))
    else:
        _emit(results, config, stdout)
    return EXIT_OK


def cmd_bounds(args, config: RunConfig, stdout, stdin) -> int:
    reports = []
    for g in _input_graphs(args, stdin):
        reports.extend(all_bounds(g))
    _emit(reports, config, stdout)
    return EXIT_OK


def cmd_detect(args, config: RunConfig, stdout, stdin) -> int:
    checks = []
    for g in _input_graphs(args, stdin):
        text = graph6_encode(g)
        for pattern in args.forbid.patterns:
            checks.append(PatternCheck(graph6=text, pattern=pattern.token(), contains=contains_pattern(g, pattern)))
    _emit(checks, config, stdout)
    return EXIT_OK


def cmd_extremal(args, config: RunConfig, stdout, stdin) -> int:
    orders = sorted({n for group in args.n for n in group})
    specs = args.forbid or [ForbiddenSpec()]
    store: Optional[ResultStore] = None
    stored: Dict[str, ExtremalRecord] = {}
    if config.output or config.resume:
        # --resume alone continues the run in the configured results directory
        store = ResultStore(Path(config.output)) if config.output else result_store
        store.open({
            "orders": orders,
            "forbid": [spec.token() for spec in specs],
            "connected_only": args.connected,
            "exhaustive": args.exhaustive,
        }, resume=config.resume)
        stored = {record.key(): record for record in store.load_records()}

    records = []
    for n in orders:
        for spec in specs:
            key = ExtremalRecord.cell_key(n, spec, args.connected)
            if store is not None and store.is_completed(key) and key in stored:
                logger.info(f"skipping completed cell {key}")
                records.append(stored[key])
                continue
            record = extremal_service.extremal_mu(n, spec, args.connected, args.exhaustive, config.threads)
            if store is not None:
                store.append(record)
            records.append(record)
    _emit(records, config, stdout)
    return EXIT_OK


def cmd_gvariants(args, config: RunConfig, stdout, stdin) -> int:
    orders = sorted({n for group in args.n for n in group})
    comparisons = [extremal_service.compare_g_variants(n, args.l, config.threads) for n in orders]
    if config.output_format == "table":
        stdout.write(format_table(
            ["n", "l", "strict_mu", "relaxed_mu", "agree"],
            [(c.n, c.l, c.strict.max_mu, c.relaxed.max_mu, c.agree) for c in comparisons],
        ))
    else:
        _emit(comparisons, config, stdout)
    return EXIT_OK


def cmd_verify(args, config: RunConfig, stdout, stdin) -> int:
    verdict = extremal_service.verify_claim(
        args.claim, args.k, args.n_from, args.n_to, exhaustive=args.exhaustive, threads=config.threads,
        connected_only=args.connected,
    )
    _emit([verdict], config, stdout)
    if verdict.is_counterexample:
        sys.stderr.write(f"COUNTEREXAMPLE to {verdict.claim} (k={verdict.k})\n")
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_scan(args, config: RunConfig, stdout, stdin) -> int:
    claim = f"conj{args.conjecture}{args.part}"
    verdict = extremal_service.verify_claim(
        claim, args.k, args.n_from, args.n_to, exhaustive=args.exhaustive, threads=config.threads,
        connected_only=args.connected,
    )
    _emit([verdict], config, stdout)
    return EXIT_OK


def cmd_trees(args, config: RunConfig, stdout, stdin) -> int:
    write_graph6_lines(free_trees(args.t), stdout)
    return EXIT_OK


def cmd_enumerate(args, config: RunConfig, stdout, stdin) -> int:
    prune = PatternFilter(args.forbid) if args.forbid and args.forbid.patterns else None
    write_graph6_lines(list(enumerate_graphs(args.n, args.connected, prune, config.threads)), stdout)
    return EXIT_OK


def cmd_sandwich(args, config: RunConfig, stdout, stdin) -> int:
    _emit(report_service.asymptotic_sandwich(args.n, args.k), config, stdout)
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "mu": cmd_mu,
    "bounds": cmd_bounds,
    "detect": cmd_detect,
    "extremal": cmd_extremal,
    "gvariants": cmd_gvariants,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "trees": cmd_trees,
    "enumerate": cmd_enumerate,
    "sandwich": cmd_sandwich,
}


def main(argv: Optional[Sequence[str]] = None, stdout=None, stdin=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()

    # Step 1: parse flags; argparse exits with status 2 on usage errors
    try:
        args = parser.parse_args(argv)
        try:
            config = build_config(args)
        except ValidationError as exc:
            parser.error("; ".join(error["msg"] for error in exc.errors()))
        if args.command in ("mu", "bounds", "detect") and not args.g6 and not args.stdin:
            parser.error(f"{args.command} needs --g6 or --stdin")
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.log_level:
        logging.getLogger().setLevel(getattr(logging, args.log_level))

    # Step 2: apply tolerance overrides for this invocation
    saved = (settings.EIGEN_TOLERANCE, settings.COMPARE_TOLERANCE)
    settings.EIGEN_TOLERANCE = config.tolerance
    settings.COMPARE_TOLERANCE = config.compare_tolerance

    # Step 3: dispatch
    try:
        return COMMANDS[args.command](args, config, stdout, stdin)
    except WorkbenchError as exc:
        logger.debug(f"{args.command} failed", exc_info=True)
        sys.stderr.write(f"error: {exc}\n")
        if config.output_format == "json":
            details = getattr(exc, "details", None) or None
            report = ErrorReport(error=exc.error_type, message=str(exc), details=details)
            stdout.write(report_service.to_json_line(report) + "\n")
        return EXIT_DOMAIN_ERROR
    finally:
        settings.EIGEN_TOLERANCE, settings.COMPARE_TOLERANCE = saved


if __name__ == "__main__":
    sys.exit(main())
