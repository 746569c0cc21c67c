"""
Quantum Number Theory Toolkit - CLI application
"""

import logging
import sys
from typing import Optional, Sequence

import click
import numpy as np
from pydantic import ValidationError

from app.commands.charpoly import charpoly
from app.commands.check import check
from app.commands.dist import dist
from app.commands.entropy import entropy
from app.commands.prime_qunit import prime_qunit
from app.commands.qmap import qmap
from app.commands.rep import rep
from app.config.settings import configure_logging, settings
from app.exceptions import DomainError, IdentityViolationError, NumericalFailure, QNTError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 3


@click.group(name="qnt", help=settings.PROJECT_NAME)
@click.option("--debug/--no-debug", default=None, help="Log debug diagnostics to stderr.")
def cli(debug: Optional[bool]) -> None:
    configure_logging(debug)


cli.add_command(rep)
cli.add_command(dist)
cli.add_command(check)
cli.add_command(charpoly)
cli.add_command(qmap)
cli.add_command(prime_qunit)
cli.add_command(entropy)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point: run the CLI and map outcomes onto exit codes.

    0 success, 1 usage or domain error, 2 suite failure, 3 internal
    numerical failure.
    """
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        result = cli.main(args=args, prog_name="qnt", standalone_mode=False)
    except click.exceptions.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except (DomainError, ValidationError) as exc:
        click.echo(f"Error: {exc}", err=True)
        return EXIT_USAGE
    except (IdentityViolationError, NumericalFailure) as exc:
        click.echo(f"Internal failure: {exc}", err=True)
        return EXIT_INTERNAL
    except QNTError as exc:
        logger.exception("unexpected toolkit error")
        click.echo(f"Internal failure: {exc}", err=True)
        return EXIT_INTERNAL
    except (ArithmeticError, MemoryError, np.linalg.LinAlgError) as exc:
        logger.exception("numerical failure")
        click.echo(f"Internal failure: {type(exc).__name__}: {exc}", err=True)
        return EXIT_INTERNAL
    except click.exceptions.ClickException as exc:
        exc.show()
        return exc.exit_code
    # --help returns 0 from click.main without a command result
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
