# typecheck.py
# Command-line driver: typecheck a macro tree transducer against input and output types

import argparse
import logging
import sys
from dotenv import load_dotenv

# Load environment variables before config reads them
load_dotenv()

from pydantic import ValidationError

from config import ALGORITHMS, EXIT_CODES, LOG_LEVEL
from frontend import TypecheckOptions, run_typecheck
from utils.errors import CapExceeded, WitnessError

logger = logging.getLogger("typecheck")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="typecheck",
        description="Decide whether every output of a macro tree transducer on the input type lies in the output type.",
    )
    parser.add_argument("mtt", help="transducer file (.mtt)")
    parser.add_argument("in_type", help="input type (.bta, .rtg or .dtd)")
    parser.add_argument("out_type", help="output type (.bta, .rtg or .dtd)")
    parser.add_argument("--algo", choices=ALGORITHMS, default="ours", help="typechecking algorithm")
    parser.add_argument("--basic", action="store_true", help="one output state per inferred state")
    parser.add_argument("--no-cartesian", action="store_true", help="disable Cartesian factorization")
    parser.add_argument("--no-partition", action="store_true", help="disable parameter state partitioning")
    parser.add_argument("--no-complement-output", action="store_true", help="disable output-set complementation")
    parser.add_argument("--no-preprocess", action="store_true", help="skip trivial-emptiness simplification")
    parser.add_argument("--witness", action="store_true", help="also print the decoded counterexample")
    parser.add_argument("--stats", action="store_true", help="print sizes and phase times")
    parser.add_argument("--json", action="store_true", help="print the report as one JSON record")
    parser.add_argument("--oracle-depth", type=int, metavar="N", help="cross-check by enumerating inputs up to N nodes")
    parser.add_argument("--max-subsets", type=int, metavar="N", help="cap on implication-system heads")
    parser.add_argument("--log-level", default=LOG_LEVEL, help="logging level (default from MTT_LOG_LEVEL)")
    return parser


def options_from_args(args: argparse.Namespace) -> TypecheckOptions:
    return TypecheckOptions(
        algo=args.algo,
        basic=args.basic,
        cartesian=not args.no_cartesian,
        partition=not args.no_partition,
        complement_output=not args.no_complement_output,
        preprocess=not args.no_preprocess,
        witness=args.witness,
        stats=args.stats,
        oracle_depth=args.oracle_depth,
        max_subsets=args.max_subsets,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")

    try:
        options = options_from_args(args)
        report = run_typecheck(args.mtt, args.in_type, args.out_type, options)
    except (ValueError, ValidationError, CapExceeded, WitnessError, OSError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CODES['ERROR']

    if args.json:
        print(report.model_dump_json())
    else:
        print(report.summary(witness=options.witness, stats=options.stats))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
