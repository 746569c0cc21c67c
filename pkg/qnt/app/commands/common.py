"""
Options and emission shared by every subcommand
"""

import logging
from typing import Any

import click

from app.models.report import CommandRequest, OutputFormat, Subcommand

logger = logging.getLogger(__name__)

FORMAT_CHOICE = click.Choice([f.value for f in OutputFormat])


def format_option(func):
    return click.option(
        "--format",
        "output_format",
        type=FORMAT_CHOICE,
        default=OutputFormat.CSV.value,
        show_default=True,
        help="Emission format.",
    )(func)


def make_request(
    subcommand: Subcommand,
    output_format: str,
    tolerance: float | None = None,
    **parameters: Any,
) -> CommandRequest:
    """Validate the invocation as a CommandRequest"""
    fields: dict[str, Any] = {
        "subcommand": subcommand,
        "parameters": parameters,
        "output_format": output_format,
    }
    if tolerance is not None:
        fields["tolerance"] = tolerance
    request = CommandRequest(**fields)
    logger.debug("request: %s", request.model_dump_json())
    return request


def emit(text: str) -> None:
    """Write an artifact to stdout; diagnostics go to stderr via logging"""
    click.echo(text, nl=False)
