"""
rep: emit a representation matrix
"""

import click
import numpy as np

from app.commands.common import emit, format_option, make_request
from app.exceptions import DomainError
from app.models.report import OutputFormat, Subcommand
from app.models.representation import Direction, NaturalRepSpec, Parity, RepSpec, Space
from app.services import integer_rep, natural_rep
from app.utils.helpers import dump_json, matrix_to_csv, matrix_to_json, pretty_matrix

COMPONENTS = ["1", "2", "3", "raise", "lower", "number", "nstar"]


def build_matrix(space: Space, parity: Parity, dim: int, component: str) -> np.ndarray:
    if space is Space.INTEGER:
        spec = RepSpec(space=space, dim=dim)
        if component in ("1", "2", "3"):
            return integer_rep.build_Z(int(component), spec.dim)
        if component in (Direction.RAISE.value, Direction.LOWER.value):
            return integer_rep.ladder_Z(component, spec.dim)
        raise DomainError(f"integer space has no {component!r} component")

    spec = NaturalRepSpec(parity=parity, dim=dim)
    if component in ("1", "2"):
        if parity is Parity.FULL:
            raise DomainError("Hermitian components are built per parity block")
        return natural_rep.heisenberg_components(parity, dim)[int(component) - 1]
    if component == "3":
        raise DomainError("the natural q-number has components 1 and 2 only")
    return natural_rep.representation_matrix(spec, component)


@click.command("rep")
@click.option("--space", type=click.Choice([s.value for s in Space]), required=True)
@click.option(
    "--parity",
    type=click.Choice([p.value for p in Parity]),
    default=Parity.EVEN.value,
    show_default=True,
    help="Natural space only.",
)
@click.option("--dim", type=int, required=True, help="Matrix dimension.")
@click.option("--component", type=click.Choice(COMPONENTS), required=True)
@format_option
def rep(space: str, parity: str, dim: int, component: str, output_format: str) -> int:
    """Build and emit a natural or integer representation matrix."""
    request = make_request(
        Subcommand.REP, output_format, space=space, parity=parity, dim=dim, component=component
    )
    matrix = build_matrix(Space(space), Parity(parity), dim, component)
    if request.output_format is OutputFormat.JSON:
        payload = {
            "space": space,
            "parity": parity if space == Space.NATURAL.value else None,
            "dim": dim,
            "component": component,
            "matrix": matrix_to_json(matrix),
        }
        emit(dump_json(payload))
    elif request.output_format is OutputFormat.PRETTY:
        emit(pretty_matrix(matrix))
    else:
        emit(matrix_to_csv(matrix))
    return 0
