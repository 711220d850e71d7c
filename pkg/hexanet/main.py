import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from .cli.commands import build_parser
from .core.config import settings
from .core.exceptions import HexanetError, NonGeneric

logger = logging.getLogger("hexanet")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NON_GENERIC = 3


def configure_logging(level: Optional[str] = None) -> None:
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except NonGeneric as e:
        logger.error(f"{args.command}: non-generic input: {e}")
        return EXIT_NON_GENERIC
    except (HexanetError, ValidationError, ValueError, KeyError, OSError) as e:
        logger.error(f"{args.command}: {type(e).__name__}: {e}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
