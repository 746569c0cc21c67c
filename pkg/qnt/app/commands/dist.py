"""
dist: even/odd number distributions of an N+ eigenstate
"""

import cmath

import click

from app.commands.common import emit, format_option, make_request
from app.exceptions import DomainError
from app.models.report import OutputFormat, Subcommand
from app.models.representation import Parity
from app.services import qunit_states
from app.utils.helpers import dump_json, format_float, parse_complex, rows_to_csv

SECTORS = {
    "even": (Parity.EVEN,),
    "odd": (Parity.ODD,),
    "both": (Parity.EVEN, Parity.ODD),
}


@click.command("dist")
@click.option("--q", "q_text", required=True, help="N+ eigenvalue, e.g. 2 or 1+1j.")
@click.option("--sector", type=click.Choice(list(SECTORS)), default="both", show_default=True)
@click.option("--nmax", type=click.IntRange(min=0), default=None, help="Last sector index n.")
@format_option
def dist(q_text: str, sector: str, nmax: int | None, output_format: str) -> int:
    """Emit rows n, p_even, p_odd."""
    try:
        q = parse_complex(q_text)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    if not cmath.isfinite(q):
        raise DomainError(f"q must be finite, got {q_text!r}")
    nmax = qunit_states.default_truncation(q) if nmax is None else nmax
    request = make_request(Subcommand.DIST, output_format, q=q_text, sector=sector, nmax=nmax)
    rows = qunit_states.distribution_table(q, nmax, SECTORS[sector])

    if request.output_format is OutputFormat.JSON:
        payload = {
            "q": [q.real, q.imag],
            "sector": sector,
            "rows": [{"n": n, "p_even": even, "p_odd": odd} for n, even, odd in rows],
        }
        emit(dump_json(payload))
    elif request.output_format is OutputFormat.PRETTY:
        lines = [f"{'n':>5}  {'p_even':>24}  {'p_odd':>24}"]
        for n, even, odd in rows:
            lines.append(
                f"{n:>5}  {'' if even is None else format_float(even):>24}"
                f"  {'' if odd is None else format_float(odd):>24}"
            )
        emit("\n".join(lines) + "\n")
    else:
        emit(
            rows_to_csv(
                ["n", "p_even", "p_odd"],
                ([n, "" if even is None else even, "" if odd is None else odd] for n, even, odd in rows),
            )
        )
    return 0
