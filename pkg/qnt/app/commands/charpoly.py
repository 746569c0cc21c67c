"""
charpoly: exact characteristic polynomial D(x) of Z3 at label n
"""

import click

from app.commands.common import emit, format_option, make_request
from app.exceptions import DomainError
from app.models.report import OutputFormat, Subcommand
from app.services import integer_rep
from app.services.matrix_core import char_poly_exact
from app.utils.helpers import dump_json, format_rational, parse_rational, rows_to_csv


@click.command("charpoly")
@click.option("--n", "n_text", required=True, help="Label n, integer or half-integer (e.g. 3/2).")
@click.option(
    "--method",
    type=click.Choice(["product", "matrix"]),
    default="product",
    show_default=True,
    help="Expand prod(k - x) or run Faddeev-LeVerrier on Z3.",
)
@format_option
def charpoly(n_text: str, method: str, output_format: str) -> int:
    """Emit the coefficients of det(Z3 - xI), ascending degree."""
    try:
        n = parse_rational(n_text)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    d = integer_rep.dim_for_label(n)
    request = make_request(Subcommand.CHARPOLY, output_format, n=n_text, method=method)
    if method == "matrix":
        poly = char_poly_exact(integer_rep.build_Z(3, d, exact=True))
    else:
        poly = integer_rep.char_poly_D(n)

    if request.output_format is OutputFormat.JSON:
        emit(dump_json({"n": format_rational(n), "coefficients": poly.as_strings()}))
    elif request.output_format is OutputFormat.PRETTY:
        emit(f"D(x) = {poly}\n")
    else:
        emit(rows_to_csv(["degree", "coefficient"], enumerate(poly.coefficients)))
    return 0
