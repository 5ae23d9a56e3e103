"""Command-line entry point.

Resolves settings (flags > config file > environment > defaults), configures
logging and dispatches to the subcommand. Library errors end the run with
status 2; a failing ``verify`` suite ends it with status 1.
"""

import logging
import sys
from collections.abc import Sequence

from .cli.commands import CommandRunner
from .cli.parser import build_parser
from .config.settings import load_settings
from .utils.errors import XorDualError
from .utils.logging import log_duration, setup_logging

logger = logging.getLogger(__name__)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` and run the subcommand.

    Returns:
        The exit status.
    """
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings(
            args.config,
            {"workers": args.workers, "seed": args.seed, "log_level": args.log_level},
        )
    except XorDualError as e:
        setup_logging("INFO")
        logger.error("[CLI] %s: %s", e.code, e.message)
        return 2

    setup_logging(settings.log_level)
    logger.info("[CLI] %s (seed=%d, workers=%d)", args.command, settings.seed, settings.workers)
    try:
        with log_duration(logger, f"[CLI] {args.command}"):
            return CommandRunner(settings).run(args)
    except XorDualError as e:
        logger.error("[CLI] %s: %s", e.code, e.message)
        return 2


def main() -> None:
    """Run the command line on ``sys.argv`` and exit with its status."""
    sys.exit(run())


if __name__ == "__main__":
    main()
