"""
entropy: Omega, Shannon bits and purity of a described product density
"""

import json

import click

from app.commands.common import emit, format_option, make_request
from app.exceptions import DomainError
from app.models.report import OutputFormat, Subcommand
from app.services import ensemble_density
from app.utils.helpers import dump_json, rows_to_csv


@click.command("entropy")
@click.option(
    "--spec",
    "spec_path",
    type=click.Path(exists=True, dir_okay=False),
    required=True,
    help="JSON density description.",
)
@format_option
def entropy(spec_path: str, output_format: str) -> int:
    """Emit dimension, omega, shannon_bits and purity."""
    request = make_request(Subcommand.ENTROPY, output_format, spec=spec_path)
    try:
        with open(spec_path, encoding="utf-8") as handle:
            spec = json.load(handle)
    except json.JSONDecodeError as exc:
        raise DomainError(f"{spec_path}: invalid JSON ({exc})") from exc

    rho = ensemble_density.density_from_spec(spec)
    result = {
        "dimension": rho.dimension,
        "omega": ensemble_density.omega_entropy(rho),
        "shannon_bits": ensemble_density.shannon_bits(rho.dimension),
        "purity": ensemble_density.purity(rho),
    }
    if request.output_format is OutputFormat.JSON:
        emit(dump_json(result))
    elif request.output_format is OutputFormat.PRETTY:
        emit("".join(f"{key}: {value}\n" for key, value in result.items()))
    else:
        emit(rows_to_csv(list(result), [list(result.values())]))
    return 0
