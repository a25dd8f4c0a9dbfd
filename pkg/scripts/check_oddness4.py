#!/usr/local/bin/python

import argparse
import sys
import tempfile
from collections import Counter
from pathlib import Path

from loguru import logger
from snarkforge import (
    FetchError,
    Mode,
    Settings,
    fetch_dataset,
    invariant_records,
    read_graphs,
)

LOG_FORMAT = "{time:YYYY-MM-DD at HH:mm:ss} {level} {message}"

# The three oddness-4 snarks on 28 vertices: two with cyclic connectivity 2, one with 3.
EXPECTED_CYCLIC = Counter({2: 2, 3: 1})

if __name__ == "__main__":

    parser = argparse.ArgumentParser(
        "Script to check the invariants of the 28-vertex oddness-4 snarks and the most symmetric 32-vertex one."
    )
    parser.add_argument(
        "-e", "--env", type=str, default=".env", help="Path to your .env file."
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--url", type=str, help="graph6 export of the order 28 snarks.")
    source.add_argument("--input", type=str, help="Local graph6 file of the order 28 snarks.")
    parser.add_argument(
        "--symmetric",
        type=str,
        default=None,
        help="Optional graph6 file holding the 32-vertex snark with 768 automorphisms.",
    )
    parser.add_argument(
        "-l", "--log", type=str, default="./oddness4.log", help="Log file."
    )

    args = parser.parse_args()
    settings = Settings.from_env(args.env)

    logger.remove()
    logger.add(sys.stderr, format=LOG_FORMAT, level=settings.log_level)
    logger.add(args.log, format=LOG_FORMAT, level="INFO", rotation="100 MB")
    logger.enable("snarkforge")

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(args.input) if args.input else Path(tmp) / "oddness4.g6"
        try:
            fetch_dataset(out=path if args.url else None, url=args.url, input=args.input)
        except FetchError as e:
            logger.error(e.message)
            sys.exit(5)

        records = list(
            invariant_records(read_graphs(path), mode=Mode.CROSS_CHECKED, workers=settings.workers)
        )

    ok = True
    odd = [r.oddness for r in records]
    cyclic = Counter(r.cyclic_lambda for r in records)
    logger.info("oddness {o}, cyclic connectivity {c}", o=odd, c=dict(cyclic))
    if len(records) != 3 or any(o != 4 for o in odd):
        logger.error("Expected three graphs of oddness 4.")
        ok = False
    if cyclic != EXPECTED_CYCLIC:
        logger.error("Expected cyclic connectivities {e}.", e=dict(EXPECTED_CYCLIC))
        ok = False

    if args.symmetric:
        (sym,) = invariant_records(read_graphs(args.symmetric), mode=Mode.FAST)
        logger.info("Automorphism order {a}", a=sym.aut_order)
        if sym.aut_order != 768:
            logger.error("Expected 768 automorphisms.")
            ok = False

    sys.exit(0 if ok else 4)
