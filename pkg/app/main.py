"""Command-line entry point: ``python -m app.main <command> ...``.

Exit codes: 0 all checks passed, 1 usage or validation error, 2 a cross-check
failed, 3 the matrix budget was exceeded.
"""
import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from app.core.errors import EXIT_INVALID, CrossCheckFailed, InvalidInput, KodairaError
from app.core.logs import configure_logging
from app.modules.cohomology_tables import router as cohomology_router
from app.modules.frobenius_map import router as frobenius_router
from app.modules.pipeline import router as pipeline_router
from app.schemas.cli import CliConfig

logger = logging.getLogger(__name__)

ROUTERS = (pipeline_router, cohomology_router, frobenius_router)


class ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; route it to exit code 1 instead."""

    def error(self, message):
        raise InvalidInput(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="kodaira-check",
        description="Exact verifier for counterexamples to Kodaira vanishing in characteristic p",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for router in ROUTERS:
        router.register_commands(sub)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = CliConfig(**{k: v for k, v in vars(args).items() if v is not None})
        configure_logging("DEBUG" if config.verbose else None)
        for router in ROUTERS:
            code = router.handle(config)
            if code is not None:
                return code
        raise InvalidInput(f"unknown command {config.command!r}")
    except ValidationError as exc:
        messages = "; ".join(error["msg"] for error in exc.errors())
        print(f"invalid arguments: {messages}", file=sys.stderr)
        return EXIT_INVALID
    except CrossCheckFailed as exc:
        print(exc.detail, file=sys.stderr)
        if exc.report is not None:
            print(pipeline_router.report_to_json(exc.report), file=sys.stderr)
        return exc.exit_code
    except KodairaError as exc:
        print(exc.detail, file=sys.stderr)
        return exc.exit_code
    except Exception:
        logger.exception("Unexpected error while running %s", list(argv or sys.argv[1:]))
        raise


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
