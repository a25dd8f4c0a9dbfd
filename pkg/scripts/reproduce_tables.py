#!/usr/local/bin/python

import argparse
import sys
from pathlib import Path

from loguru import logger
from snarkforge import Mode, Settings, build_table, compare_to_published
from snarkforge.pipeline import format_table

LOG_FORMAT = "{time:YYYY-MM-DD at HH:mm:ss} {level} {message}"

if __name__ == "__main__":

    parser = argparse.ArgumentParser(
        "Script to rebuild the girth 4 and girth 5 snark count tables and compare them with the published ones."
    )
    parser.add_argument(
        "-e", "--env", type=str, default=".env", help="Path to your .env file."
    )
    parser.add_argument(
        "-m",
        "--max-order",
        type=int,
        default=20,
        help="Last order to count. Orders above SNARKFORGE_MAX_ORDER are refused.",
    )
    parser.add_argument(
        "-o",
        "--outdir",
        type=str,
        default=".",
        help="Directory for table_girth4.csv and table_girth5.csv.",
    )
    parser.add_argument(
        "-w", "--workers", type=int, default=None, help="Worker processes."
    )
    parser.add_argument(
        "-l", "--log", type=str, default="./tables.log", help="Log file."
    )

    args = parser.parse_args()
    settings = Settings.from_env(args.env)
    workers = args.workers or settings.workers

    logger.remove()
    logger.add(sys.stderr, format=LOG_FORMAT, level=settings.log_level)
    logger.add(args.log, format=LOG_FORMAT, level="INFO", rotation="100 MB")
    logger.enable("snarkforge")

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    mismatches = 0
    for min_girth in (5, 4):
        table = build_table(
            min_girth,
            args.max_order,
            workers=workers,
            mode=Mode.FAST,
            ceiling=settings.max_order,
            split_depth=settings.split_depth,
        )
        out = outdir / f"table_girth{min_girth}.csv"
        out.write_text(format_table(table, "csv"))
        logger.info("Wrote {f}", f=out)

        for problem in compare_to_published(table):
            logger.error("girth {g}: {p}", g=min_girth, p=problem)
            mismatches += 1

    if mismatches:
        sys.exit(4)
    logger.info("Both tables match the published counts.")
