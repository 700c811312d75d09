"""Entry point of the `eigenshape` executable.

    eigenshape <command> --config <file> [--out <dir>] [--seed <n>] [--threads <n>]

Exit codes: 0 on success, 2 for an invalid configuration or parameter triple,
3 for a numeric failure.
"""
import argparse
import logging
from pathlib import Path
from typing import List, Optional

from eigenshape import __version__
from eigenshape.config import settings
from eigenshape.errors import AssemblyError, NumericFailureError

from .commands import COMMANDS
from .models import RunConfig

logger = logging.getLogger(__name__)

EXIT_INVALID = 2
EXIT_NUMERIC = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigenshape",
        description="Principal eigenvalues of indefinite weights with Robin "
        "boundary conditions and their optimal favourable sets.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument("command", choices=list(COMMANDS), help="Experiment to run.")
    parser.add_argument(
        "--config", type=Path, required=True, help="JSON run configuration."
    )
    parser.add_argument("--out", type=Path, help="Overrides output_dir.")
    parser.add_argument("--seed", type=int, help="Overrides seed.")
    parser.add_argument("--threads", type=int, help="Overrides threads.")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="-v logs progress, -vv every eigensolve.",
    )
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    """Read the configuration file and apply the command-line overrides."""
    config = RunConfig(filepath=args.config)
    overrides = dict(output_dir=args.out, seed=args.seed, threads=args.threads)
    for name, value in overrides.items():
        if value is not None:
            setattr(config, name, value)
    return config


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    if args.verbose > 1:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = settings.LOG_LEVEL
    logging.basicConfig(
        level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )

    try:
        config = load_config(args)
        report = COMMANDS[args.command](config)
    except (NumericFailureError, AssemblyError) as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_NUMERIC
    except ValueError as e:
        # Also covers pydantic.ValidationError and InvalidArgumentError.
        logger.error(f"{args.command} rejected its input: {e}")
        return EXIT_INVALID

    print(report.json(by_alias=True, indent=2))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
