"""
qmap: emit T_p, R_p and the r(m) table
"""

import click

from app.commands.common import emit, format_option, make_request
from app.models.report import OutputFormat, Subcommand
from app.services import qmap as qmap_service
from app.utils.helpers import (
    dump_json,
    format_rational,
    matrix_to_csv,
    matrix_to_json,
    pretty_matrix,
    rows_to_csv,
)


@click.command("qmap")
@click.option("--d", "d", type=int, required=True, help="Source dimension.")
@click.option("--component", type=click.IntRange(1, 3), required=True)
@format_option
def qmap(d: int, component: int, output_format: str) -> int:
    """Emit the mapping d -> d+2, its retraction and r(m)."""
    request = make_request(Subcommand.QMAP, output_format, d=d, component=component)
    t = qmap_service.build_T(component, d).matrix
    r = qmap_service.build_R(component, d)
    table = qmap_service.r_table(component, d)

    if request.output_format is OutputFormat.JSON:
        payload = {
            "d": d,
            "component": component,
            "T": matrix_to_json(t),
            "R": matrix_to_json(r),
            "r_table": [
                {
                    "m": format_rational(row.m),
                    "r_formula": format_rational(row.formula),
                    "r_oracle": format_rational(row.oracle),
                    "r_numeric": row.numeric,
                }
                for row in table
            ],
        }
        emit(dump_json(payload))
        return 0

    table_rows = [[row.m, row.formula, row.oracle, row.numeric] for row in table]
    header = ["m", "r_formula", "r_oracle", "r_numeric"]
    if request.output_format is OutputFormat.PRETTY:
        emit(f"T{component} ({d + 2}x{d}):\n" + pretty_matrix(t))
        emit(f"R{component} ({d}x{d}):\n" + pretty_matrix(r))
        emit(rows_to_csv(header, table_rows))
    else:
        # three CSV blocks separated by blank lines
        emit(matrix_to_csv(t) + "\n" + matrix_to_csv(r) + "\n" + rows_to_csv(header, table_rows))
    return 0
