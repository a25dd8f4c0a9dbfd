import argparse
import sys
from contextlib import contextmanager
from typing import List, Optional

import pandas as pd
from loguru import logger

from .config import Settings
from .fetch import FetchError, fetch_dataset
from .Generation import (
    GenSpec,
    InvalidGenSpec,
    OrderTooLarge,
    ensure_within_ceiling,
    generate,
)
from .Graph import to_graph6
from .Oddness import Mode, OddnessError
from .pipeline import (
    DatasetValidationError,
    InconsistentRecord,
    build_table,
    compare_to_published,
    format_table,
    invariant_records,
    read_graphs,
    records_frame,
    summarize,
    write_csv,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SCOPE = 3
EXIT_DATA = 4
EXIT_NETWORK = 5

LOG_FORMAT = "{time:YYYY-MM-DD at HH:mm:ss} {level} {message}"


def configure_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, format=LOG_FORMAT, level=level.upper())
    logger.enable("snarkforge")


@contextmanager
def _output(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii", newline="\n") as con:
            yield con


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


@logger.catch(reraise=True)
def cmd_generate(args: argparse.Namespace, settings: Settings) -> int:
    try:
        spec = GenSpec(args.order, args.min_girth, args.two_connected, args.snarks_only)
        ensure_within_ceiling(spec.n, settings.max_order)
    except InvalidGenSpec as e:
        return _fail(e.message, EXIT_USAGE)
    except OrderTooLarge as e:
        return _fail(e.message, EXIT_SCOPE)

    count = 0
    with _output(args.out) as out:
        for g in generate(spec, args.workers, settings.max_order, settings.split_depth):
            out.write(to_graph6(g) + "\n")
            count += 1
    print(f"{count} graphs written", file=sys.stderr)
    return EXIT_OK


@logger.catch(reraise=True)
def cmd_invariants(args: argparse.Namespace, settings: Settings) -> int:
    try:
        graphs = read_graphs(sys.stdin if args.input == "-" else args.input)
    except DatasetValidationError as e:
        return _fail(e.message, EXIT_DATA)
    except OSError as e:
        return _fail(str(e), EXIT_DATA)

    records = invariant_records(
        graphs,
        mode=args.oddness_mode,
        workers=args.workers,
        cyclic_cap=args.cyclic_cap,
        verify_every=args.verify_every,
    )
    try:
        frame = records_frame(records)
    except (OddnessError, InconsistentRecord) as e:
        return _fail(e.message, EXIT_DATA)
    with _output(args.out) as out:
        write_csv(frame, out)
    return EXIT_OK


@logger.catch(reraise=True)
def cmd_table(args: argparse.Namespace, settings: Settings) -> int:
    mode = Mode.CROSS_CHECKED if args.paranoid else Mode.FAST
    try:
        table = build_table(
            args.min_girth,
            args.max_order,
            workers=args.workers,
            mode=mode,
            ceiling=settings.max_order,
            split_depth=settings.split_depth,
        )
    except InvalidGenSpec as e:
        return _fail(e.message, EXIT_USAGE)
    except OrderTooLarge as e:
        return _fail(e.message, EXIT_SCOPE)

    with _output(args.out) as out:
        out.write(format_table(table, args.format))

    if args.check:
        problems = compare_to_published(table)
        for problem in problems:
            logger.error(problem)
        if problems:
            return _fail("computed counts differ from the published tables", EXIT_DATA)
        logger.info("All rows match the published counts.")
    return EXIT_OK


@logger.catch(reraise=True)
def cmd_fetch(args: argparse.Namespace, settings: Settings) -> int:
    try:
        count = fetch_dataset(out=args.out, url=args.url, input=args.input, timeout=args.timeout)
    except FetchError as e:
        return _fail(e.message, EXIT_NETWORK)
    except DatasetValidationError as e:
        return _fail(e.message, EXIT_DATA)
    except ValueError as e:
        return _fail(str(e), EXIT_USAGE)
    except OSError as e:
        return _fail(str(e), EXIT_DATA)
    print(f"{count} graphs validated")
    return EXIT_OK


@logger.catch(reraise=True)
def cmd_summary(args: argparse.Namespace, settings: Settings) -> int:
    try:
        frame = pd.read_csv(args.input, dtype=str, keep_default_na=False)
    except (OSError, pd.errors.ParserError) as e:
        return _fail(str(e), EXIT_DATA)
    summary = summarize(frame)
    with _output(args.out) as out:
        if args.format == "csv":
            write_csv(summary, out)
        else:
            out.write(summary.to_string(index=False) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        "snarkforge", description="Snark generation, oddness and invariant tools."
    )
    parser.add_argument("--env-file", default=".env", help="Path to a .env file with settings.")
    parser.add_argument("--log-level", default=None, help="Loguru level for diagnostics.")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("generate", help="Generate cubic graphs as graph6 lines.")
    gen.add_argument("--order", type=int, required=True, help="Number of vertices.")
    gen.add_argument("--min-girth", type=int, choices=[3, 4, 5], default=3)
    gen.add_argument("--snarks-only", action="store_true", help="Keep only snarks.")
    gen.add_argument("--two-connected", action="store_true", help="Keep only 2-connected graphs.")
    gen.add_argument("--out", default=None, help="Output file, stdout if omitted.")
    gen.add_argument("--workers", type=int, default=None)
    gen.set_defaults(func=cmd_generate)

    inv = commands.add_parser("invariants", help="Invariant CSV for a graph6 file.")
    inv.add_argument("input", help="graph6 file, one graph per line, or '-' for stdin.")
    inv.add_argument(
        "--oddness-mode",
        choices=[m.value for m in Mode],
        default=Mode.CROSS_CHECKED.value,
    )
    inv.add_argument("--cyclic-cap", type=int, default=None, help="Largest cyclic cut to search.")
    inv.add_argument("--verify-every", type=int, default=100, help="Re-verify every k-th row, 0 for never.")
    inv.add_argument("--out", default=None)
    inv.add_argument("--workers", type=int, default=None)
    inv.set_defaults(func=cmd_invariants)

    tab = commands.add_parser("table", help="Snark count table by order.")
    tab.add_argument("--min-girth", type=int, choices=[4, 5], required=True)
    tab.add_argument("--max-order", type=int, required=True)
    tab.add_argument("--format", choices=["csv", "text"], default="csv")
    tab.add_argument("--paranoid", action="store_true", help="Cross-check every oddness value.")
    tab.add_argument("--check", action="store_true", help="Compare with the published counts.")
    tab.add_argument("--out", default=None)
    tab.add_argument("--workers", type=int, default=None)
    tab.set_defaults(func=cmd_table)

    fet = commands.add_parser("fetch", help="Download or copy and validate a graph6 dataset.")
    source = fet.add_mutually_exclusive_group(required=True)
    source.add_argument("--url", default=None)
    source.add_argument("--input", default=None)
    fet.add_argument("--out", default=None)
    fet.add_argument("--timeout", type=float, default=60)
    fet.set_defaults(func=cmd_fetch)

    summ = commands.add_parser("summary", help="Summarize an invariants CSV by oddness.")
    summ.add_argument("input")
    summ.add_argument("--format", choices=["csv", "text"], default="text")
    summ.add_argument("--out", default=None)
    summ.set_defaults(func=cmd_summary)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    settings = Settings.from_env(args.env_file)
    configure_logging(args.log_level or settings.log_level)
    if getattr(args, "workers", 0) is None:
        args.workers = settings.workers
    return args.func(args, settings)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
