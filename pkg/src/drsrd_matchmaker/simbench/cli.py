"""
Command-line entry point: ``drsrd <subcommand> [flags]``.

Subcommands:
    match       rank the resources of a repository against a request document
    register    add one resource record to a repository file
    deregister  remove one resource record from a repository file
    simulate    precision experiment on a synthetic repository
    bench       matching-time sweep over repository sizes

Tabular output is CSV with a header row, on stdout unless --out is given.
Diagnostics go to stderr.
"""

import argparse
import csv
import logging
import sys
from contextlib import contextmanager, redirect_stderr, redirect_stdout
from pathlib import Path
from typing import IO, Dict, Iterator, List, Optional, Sequence

from pydantic import ValidationError

from ..config import (
    DEFAULT_BENCH_RESOURCES,
    DEFAULT_CERTAINTY,
    DEFAULT_QUERIES,
    DEFAULT_REPEATS,
    DEFAULT_RESOURCES,
    DEFAULT_SEED,
    DEFAULT_TAXONOMY_PATH,
    DEFAULT_THRESHOLD,
    configure_logging,
)
from ..errors import DiscoveryError, RepositoryError
from ..matching.discovery import Algorithm, discover
from ..matching.requests import load_request
from ..models.experiment import GeneratorConfig
from ..models.resource import ResourceRecord
from ..models.values import AttributeValue
from ..ontology.taxonomy import load_taxonomy
from ..registry.repository import deregister, load, open_repository, register, to_information_table
from .experiment import run_precision_experiment, run_sweep, write_csv

logger = logging.getLogger(__name__)

ALL_ALGORITHMS = ",".join(a.value for a in Algorithm)


def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text: str) -> List[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _name_list(text: str) -> List[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="drsrd", description="Dynamic rough set resource discovery")
    parser.add_argument("--log-level", type=str.upper, default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help="Logging level for stderr diagnostics")
    commands = parser.add_subparsers(dest="command", required=True)

    match = commands.add_parser("match", help="Rank repository resources against a request")
    match.add_argument("--taxonomy", type=Path, default=DEFAULT_TAXONOMY_PATH)
    match.add_argument("--repo", type=Path, required=True)
    match.add_argument("--request", type=Path, required=True)
    match.add_argument("--algo", choices=[a.value for a in Algorithm], default=Algorithm.DRSRD.value)
    match.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    match.add_argument("--reduce", action="store_true", help="Drop dependent properties before approximation")
    match.add_argument("--out", type=Path)

    reg = commands.add_parser("register", help="Add a resource record")
    reg.add_argument("--repo", type=Path, required=True)
    reg.add_argument("--taxonomy", type=Path, default=DEFAULT_TAXONOMY_PATH)
    reg.add_argument("--id", dest="resource_id", required=True)
    reg.add_argument("--set", dest="assignments", action="append", default=[], metavar="PROP=VALUE",
                     help="Property value; repeat per property, empty value for Null")

    dereg = commands.add_parser("deregister", help="Remove a resource record")
    dereg.add_argument("--repo", type=Path, required=True)
    dereg.add_argument("--taxonomy", type=Path, default=DEFAULT_TAXONOMY_PATH)
    dereg.add_argument("--id", dest="resource_id", required=True)

    simulate = commands.add_parser("simulate", help="Precision experiment on synthetic resources")
    simulate.add_argument("--taxonomy", type=Path, default=DEFAULT_TAXONOMY_PATH)
    simulate.add_argument("--resources", type=int, default=DEFAULT_RESOURCES)
    simulate.add_argument("--certainty", type=float, default=DEFAULT_CERTAINTY)
    simulate.add_argument("--queries", type=int, default=DEFAULT_QUERIES)
    simulate.add_argument("--seed", type=int, default=DEFAULT_SEED)
    simulate.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    simulate.add_argument("--algos", type=_name_list, default=_name_list(ALL_ALGORITHMS))
    simulate.add_argument("--repeats", type=int, default=DEFAULT_REPEATS,
                          help="Average over seeds seed..seed+N-1 (aggregate rows only when N > 1)")
    simulate.add_argument("--workers", type=int, default=1)
    simulate.add_argument("--reduce", action="store_true")
    simulate.add_argument("--out", type=Path)

    bench = commands.add_parser("bench", help="Matching-time sweep over repository sizes")
    bench.add_argument("--taxonomy", type=Path, default=DEFAULT_TAXONOMY_PATH)
    bench.add_argument("--resources", type=_int_list, default=list(DEFAULT_BENCH_RESOURCES))
    bench.add_argument("--certainty", type=_float_list, default=[DEFAULT_CERTAINTY])
    bench.add_argument("--queries", type=int, default=DEFAULT_QUERIES)
    bench.add_argument("--seed", type=int, default=DEFAULT_SEED)
    bench.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    bench.add_argument("--algos", type=_name_list, default=_name_list(ALL_ALGORITHMS))
    bench.add_argument("--repeats", type=int, default=DEFAULT_REPEATS)
    bench.add_argument("--workers", type=int, default=1)
    bench.add_argument("--reduce", action="store_true")
    bench.add_argument("--out", type=Path)
    return parser


@contextmanager
def _output(path: Optional[Path], stdout: IO[str]) -> Iterator[IO[str]]:
    if path is None:
        yield stdout
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        yield handle


def _assignments(args: argparse.Namespace, tax) -> Dict[str, AttributeValue]:
    values: Dict[str, AttributeValue] = {}
    for item in args.assignments:
        if "=" not in item:
            raise RepositoryError(f"expected PROP=VALUE, got {item!r}")
        name, raw = item.split("=", 1)
        if name in values:
            raise RepositoryError(f"property {name!r} set twice")
        declared = tax.property(name).value_type
        try:
            values[name] = AttributeValue.parse(declared, raw)
        except (ValueError, ValidationError) as exc:
            raise RepositoryError(f"bad {declared.value} value for {name!r}: {raw!r} ({exc})") from None
    return values


def _cmd_match(args: argparse.Namespace, stdout: IO[str]) -> int:
    tax = load_taxonomy(args.taxonomy)
    repo = load(args.repo, tax)
    request = load_request(args.request, tax)
    table = to_information_table(repo, tax.property_names())
    results = discover(tax, table, request, args.algo, args.threshold, reduce=args.reduce)
    with _output(args.out, stdout) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["rank", "resource", "degree"])
        for result in results:
            writer.writerow([result.rank, result.resource, f"{result.degree:.6f}"])
    return 0


def _confirm(stdout: IO[str], action: str, resource_id: str, size: int) -> None:
    writer = csv.writer(stdout, lineterminator="\n")
    writer.writerow(["action", "id", "size"])
    writer.writerow([action, resource_id, size])


def _cmd_register(args: argparse.Namespace, stdout: IO[str]) -> int:
    tax = load_taxonomy(args.taxonomy)
    record = ResourceRecord(id=args.resource_id, values=_assignments(args, tax))
    repo = register(open_repository(args.repo, tax), record, tax)
    _confirm(stdout, "register", record.id, len(repo))
    return 0


def _cmd_deregister(args: argparse.Namespace, stdout: IO[str]) -> int:
    tax = load_taxonomy(args.taxonomy)
    repo = deregister(open_repository(args.repo, tax), args.resource_id, tax)
    _confirm(stdout, "deregister", args.resource_id, len(repo))
    return 0


def _config(args: argparse.Namespace, resources: int, certainty: float) -> GeneratorConfig:
    return GeneratorConfig(
        resource_count=resources,
        certainty=certainty,
        query_count=args.queries,
        seed=args.seed,
        threshold=args.threshold,
        workers=args.workers,
        reduce=args.reduce,
    )


def _seeds(args: argparse.Namespace) -> List[int]:
    if args.repeats < 1:
        raise DiscoveryError(f"--repeats must be at least 1, got {args.repeats}")
    return [args.seed + k for k in range(args.repeats)]


def _cmd_simulate(args: argparse.Namespace, stdout: IO[str]) -> int:
    tax = load_taxonomy(args.taxonomy)
    config = _config(args, args.resources, args.certainty)
    seeds = _seeds(args)
    if len(seeds) == 1:
        rows = run_precision_experiment(tax, config, args.algos)
    else:
        rows = run_sweep(tax, [args.resources], [args.certainty], seeds, config, args.algos)
    with _output(args.out, stdout) as handle:
        write_csv(rows, handle)
    return 0


def _cmd_bench(args: argparse.Namespace, stdout: IO[str]) -> int:
    tax = load_taxonomy(args.taxonomy)
    if not args.resources:
        raise DiscoveryError("--resources needs at least one size")
    config = _config(args, args.resources[0], args.certainty[0] if args.certainty else DEFAULT_CERTAINTY)
    rows = run_sweep(tax, args.resources, args.certainty, _seeds(args), config, args.algos)
    with _output(args.out, stdout) as handle:
        write_csv(rows, handle)
    return 0


COMMANDS = {
    "match": _cmd_match,
    "register": _cmd_register,
    "deregister": _cmd_deregister,
    "simulate": _cmd_simulate,
    "bench": _cmd_bench,
}


def cli(argv: Optional[Sequence[str]] = None, stdout: Optional[IO[str]] = None, stderr: Optional[IO[str]] = None) -> int:
    """Run one subcommand and return its exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging(args.log_level)
    try:
        return COMMANDS[args.command](args, stdout)
    except (DiscoveryError, ValidationError, OSError) as exc:
        logger.debug("Command %s failed", args.command, exc_info=True)
        print(f"drsrd {args.command}: error: {exc}", file=stderr)
        return 1


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
