import argparse
import logging
import sys

from pydantic import ValidationError

# Imports da aplicação
from app.commands import bench, demo, transforms
from app.config import settings
from app.exceptions import TransformError

logger = logging.getLogger("riemannft")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riemannft",
        description="Transformada de Fourier contínua aproximada por soma de Riemann via FFT",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v para INFO, -vv para DEBUG")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Incluir comandos
    transforms.register(subparsers)
    bench.register(subparsers)
    demo.register(subparsers)
    return parser


def configure_logging(verbosity: int) -> None:
    level = settings.LOG_LEVEL
    if verbosity == 1:
        level = "INFO"
    elif verbosity >= 2:
        level = "DEBUG"
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger().setLevel(level)


def _one_line(error: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(p) for p in e['loc']) or 'valor'}: {e['msg']}" for e in error.errors()
    )


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse: 2 para uso inválido, 0 para --help
        return e.code if isinstance(e.code, int) else 2

    configure_logging(args.verbose)
    logger.debug("comando %s", args.command)

    try:
        return args.handler(args)
    except TransformError as e:
        print(f"erro: {e.name}: {e.detail}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        print(f"erro: ValidationError: {_one_line(e)}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"erro: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(cli_main())
