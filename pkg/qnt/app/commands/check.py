"""
check: run identity suites and emit a SuiteReport
"""

import asyncio
import logging

import click

from app.commands.common import emit, format_option, make_request
from app.config.settings import settings
from app.models.report import OutputFormat, Subcommand, SuiteReport
from app.services.suites import SUITES, run_all, run_suite
from app.utils.helpers import dump_json, format_float, rows_to_csv

logger = logging.getLogger(__name__)

SUITE_FAILED = 2


def render_report(report: SuiteReport, output_format: OutputFormat) -> str:
    if output_format is OutputFormat.JSON:
        return dump_json(report.model_dump(mode="json"))
    if output_format is OutputFormat.PRETTY:
        lines = []
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            line = f"[{status}] {check.name}: {format_float(check.residual, 3)} <= {format_float(check.threshold, 3)}"
            if check.note:
                line += f"  ({check.note})"
            lines.append(line)
        lines.append(f"overall: {'PASS' if report.overall else 'FAIL'}")
        return "\n".join(lines) + "\n"
    return rows_to_csv(
        ["name", "residual", "threshold", "passed", "note"],
        (
            [c.name, c.residual, c.threshold, str(c.passed).lower(), c.note or ""]
            for c in report.checks
        ),
    )


@click.command("check")
@click.option(
    "--suite",
    type=click.Choice([*SUITES, "all"]),
    default="all",
    show_default=True,
)
@click.option(
    "--tol",
    type=float,
    default=None,
    help="Identity tolerance (defaults to QNT_TOL, 1e-10).",
)
@click.option(
    "--dim-max",
    type=click.IntRange(min=2),
    default=None,
    help="Largest dimension of the integer suite.",
)
@format_option
def check(suite: str, tol: float | None, dim_max: int | None, output_format: str) -> int:
    """Run invariant suites; exit 2 when any check fails."""
    tol = settings.QNT_TOL if tol is None else tol
    request = make_request(
        Subcommand.CHECK, output_format, tolerance=tol, suite=suite, dim_max=dim_max
    )
    if suite == "all":
        report = asyncio.run(run_all(request.tolerance, dim_max))
    else:
        report = run_suite(suite, request.tolerance, dim_max)
    emit(render_report(report, request.output_format))
    for failure in report.failures():
        logger.warning(
            "check failed: %s residual %.3e > %.3e",
            failure.name,
            failure.residual,
            failure.threshold,
        )
    return 0 if report.overall else SUITE_FAILED
