"""
prime-qunit: equal superposition over primes up to 2^n
"""

import click

from app.commands.common import emit, format_option, make_request
from app.models.report import OutputFormat, Subcommand
from app.services import qunit_states
from app.utils.helpers import dump_json, format_float, rows_to_csv


@click.command("prime-qunit")
@click.option(
    "--n",
    type=click.IntRange(2, qunit_states.PRIME_QUNIT_MAX_EXPONENT),
    required=True,
    help="Exponent n; primes p <= 2^n.",
)
@format_option
def prime_qunit(n: int, output_format: str) -> int:
    """Emit prime labels with their amplitudes and probabilities."""
    request = make_request(Subcommand.PRIME_QUNIT, output_format, n=n)
    state = qunit_states.prime_qunit(n)
    rows = [
        (int(p), state.amplitude(p).real, qunit_states.projection_probability(state, p))
        for p in qunit_states.primes_up_to(2**n)
    ]
    if request.output_format is OutputFormat.JSON:
        emit(
            dump_json(
                {
                    "n": n,
                    "prime_count": len(rows),
                    "labels": [p for p, _, _ in rows],
                    "amplitudes": [a for _, a, _ in rows],
                }
            )
        )
    elif request.output_format is OutputFormat.PRETTY:
        lines = [f"pi(2^{n}) = {len(rows)}"]
        lines += [f"|{p}>  {format_float(a, 8)}" for p, a, _ in rows]
        emit("\n".join(lines) + "\n")
    else:
        emit(rows_to_csv(["label", "amplitude", "probability"], rows))
    return 0
