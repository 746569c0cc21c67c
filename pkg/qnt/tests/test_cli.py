"""
Tests for the qnt command line
"""

import csv
import io
import json
import math

import numpy as np
import pytest
from pydantic import ValidationError

from app.commands import check as check_command
from app.config.settings import Settings
from app.exceptions import NumericalFailure
from app.main import cli
from app.models.report import SuiteReport
from app.services import integer_rep, qunit_states
from app.utils.helpers import matrix_from_json


def _rows(text: str) -> list[list[str]]:
    return list(csv.reader(io.StringIO(text)))


@pytest.mark.cli
class TestRep:
    """rep subcommand"""

    def test_integer_z3_csv(self, invoke):
        code, out, _ = invoke("rep", "--space", "integer", "--dim", "3", "--component", "3")
        assert code == 0
        rows = _rows(out)
        assert rows[0] == ["c1_re", "c1_im", "c2_re", "c2_im", "c3_re", "c3_im"]
        assert [float(v) for v in rows[1]] == [1, 0, 0, 0, 0, 0]
        assert [float(v) for v in rows[3]] == [0, 0, 0, 0, -1, 0]

    def test_json_round_trip(self, invoke):
        code, out, _ = invoke(
            "rep", "--space", "integer", "--dim", "5", "--component", "2", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["parity"] is None
        assert np.array_equal(matrix_from_json(payload["matrix"]), integer_rep.build_Z(2, 5))

    def test_natural_odd_number(self, invoke):
        code, out, _ = invoke(
            "rep", "--space", "natural", "--parity", "odd", "--dim", "3", "--component", "number"
        )
        assert code == 0
        diagonal = [float(row[2 * i]) for i, row in enumerate(_rows(out)[1:])]
        assert diagonal == [0, 3, 5]

    def test_full_parity_number(self, invoke):
        code, out, _ = invoke(
            "rep", "--space", "natural", "--parity", "full", "--dim", "6",
            "--component", "number", "--format", "json",
        )
        assert code == 0
        matrix = matrix_from_json(json.loads(out)["matrix"])
        assert np.array_equal(matrix, np.diag(np.arange(6)))

    def test_output_is_deterministic(self, invoke):
        args = ("rep", "--space", "integer", "--dim", "7", "--component", "1")
        assert invoke(*args)[1] == invoke(*args)[1]

    @pytest.mark.parametrize(
        "args",
        [
            ("rep", "--space", "integer", "--dim", "1", "--component", "1"),
            ("rep", "--space", "natural", "--dim", "3", "--component", "3"),
            ("rep", "--space", "natural", "--parity", "full", "--dim", "5", "--component", "number"),
            ("rep", "--space", "integer", "--dim", "3", "--component", "number"),
        ],
    )
    def test_domain_errors_exit_one(self, invoke, args):
        code, out, err = invoke(*args)
        assert code == 1
        assert out == ""
        assert "Error" in err

    def test_usage_error(self, invoke):
        code, _, err = invoke("rep", "--space", "complex", "--dim", "3", "--component", "1")
        assert code == 1
        assert "complex" in err


@pytest.mark.cli
class TestDist:
    """dist subcommand"""

    def test_both_sectors(self, invoke):
        code, out, _ = invoke("dist", "--q", "2", "--nmax", "3")
        assert code == 0
        rows = _rows(out)
        assert rows[0] == ["n", "p_even", "p_odd"]
        assert len(rows) == 5
        assert float(rows[1][1]) == pytest.approx(math.exp(-2))
        assert float(rows[2][2]) > float(rows[1][2])

    def test_single_sector_leaves_column_empty(self, invoke):
        code, out, _ = invoke("dist", "--q", "1+1i", "--sector", "even", "--nmax", "2")
        assert code == 0
        assert all(row[2] == "" for row in _rows(out)[1:])

    def test_default_truncation(self, invoke):
        code, out, _ = invoke("dist", "--q", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["rows"]) == 57
        assert payload["q"] == [2.0, 0.0]

    def test_columns_sum_to_one(self, invoke):
        code, out, _ = invoke("dist", "--q", "2", "--sector", "both", "--nmax", "20")
        assert code == 0
        rows = _rows(out)[1:]
        assert sum(float(r[1]) for r in rows) == pytest.approx(1.0, abs=1e-9)
        assert sum(float(r[2]) for r in rows) == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("q", ["abc", "0"])
    def test_bad_q(self, invoke, q):
        code, _, _ = invoke("dist", "--q", q, "--sector", "odd", "--nmax", "2")
        assert code == 1

    @pytest.mark.parametrize("q", ["nan", "1e400"])
    def test_non_finite_q(self, invoke, q):
        code, _, err = invoke("dist", "--q", q, "--nmax", "2")
        assert code == 1
        assert "finite" in err

    def test_overflow_exits_three(self, invoke):
        code, out, err = invoke("dist", "--q", "1e200", "--sector", "both", "--nmax", "3")
        assert code == 3
        assert out == ""
        assert "OverflowError" in err

    @pytest.mark.parametrize("error", [np.linalg.LinAlgError, MemoryError, ZeroDivisionError])
    def test_internal_errors_exit_three(self, invoke, monkeypatch, error):
        def broken(*args, **kwargs):
            raise error("simulated")

        monkeypatch.setattr(qunit_states, "distribution_table", broken)
        code, _, err = invoke("dist", "--q", "2", "--nmax", "3")
        assert code == 3
        assert "simulated" in err


@pytest.mark.cli
class TestCharpoly:
    """charpoly subcommand"""

    def test_csv(self, invoke):
        code, out, _ = invoke("charpoly", "--n", "1")
        assert code == 0
        assert out == "degree,coefficient\n0,0/1\n1,1/1\n2,0/1\n3,-1/1\n"

    def test_quintic(self, invoke):
        code, out, _ = invoke("charpoly", "--n", "2", "--format", "pretty")
        assert code == 0
        assert out == "D(x) = -x^5 + (5)*x^3 - (4)*x\n"

    def test_methods_agree(self, invoke):
        product = invoke("charpoly", "--n", "5/2")[1]
        matrix = invoke("charpoly", "--n", "5/2", "--method", "matrix")[1]
        assert product == matrix

    def test_json(self, invoke):
        code, out, _ = invoke("charpoly", "--n", "3/2", "--format", "json")
        assert code == 0
        assert json.loads(out) == {
            "n": "3/2",
            "coefficients": ["9/16", "0/1", "-5/2", "0/1", "1/1"],
        }

    @pytest.mark.parametrize("n", ["1/3", "0", "-1", "x"])
    def test_invalid_label(self, invoke, n):
        assert invoke("charpoly", "--n", n)[0] == 1

    def test_numerical_failure_exits_three(self, invoke, monkeypatch):
        def broken(n):
            raise NumericalFailure("simulated")

        monkeypatch.setattr(integer_rep, "char_poly_D", broken)
        code, out, err = invoke("charpoly", "--n", "1")
        assert code == 3
        assert out == ""
        assert "simulated" in err


@pytest.mark.cli
class TestQmap:
    """qmap subcommand"""

    def test_three_csv_blocks(self, invoke):
        code, out, _ = invoke("qmap", "--d", "3", "--component", "1")
        assert code == 0
        blocks = out.split("\n\n")
        assert len(blocks) == 3
        assert len(_rows(blocks[0])) == 1 + 5
        assert len(_rows(blocks[1])) == 1 + 3
        table = _rows(blocks[2])
        assert table[0] == ["m", "r_formula", "r_oracle", "r_numeric"]
        assert table[1][:3] == ["1/1", "1/1", "1/1"]
        assert table[2][:3] == ["0/1", "4/3", "4/3"]
        assert float(table[2][3]) == pytest.approx(4 / 3)

    def test_json(self, invoke):
        code, out, _ = invoke("qmap", "--d", "4", "--component", "3", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert np.array_equal(matrix_from_json(payload["R"]), np.eye(4))
        assert [row["r_formula"] for row in payload["r_table"]] == ["1/1"] * 4

    def test_bad_component(self, invoke):
        assert invoke("qmap", "--d", "3", "--component", "4")[0] == 1


@pytest.mark.cli
class TestPrimeQunit:
    """prime-qunit subcommand"""

    def test_csv(self, invoke):
        code, out, _ = invoke("prime-qunit", "--n", "4")
        assert code == 0
        rows = _rows(out)
        assert rows[0] == ["label", "amplitude", "probability"]
        assert [int(r[0]) for r in rows[1:]] == [2, 3, 5, 7, 11, 13]
        assert sum(float(r[2]) for r in rows[1:]) == pytest.approx(1.0)

    def test_json(self, invoke):
        payload = json.loads(invoke("prime-qunit", "--n", "10", "--format", "json")[1])
        assert payload["prime_count"] == 172
        assert payload["amplitudes"][0] == pytest.approx(1 / math.sqrt(172))

    @pytest.mark.parametrize("n", ["1", "21", "40"])
    def test_exponent_out_of_range(self, invoke, n):
        code, out, _ = invoke("prime-qunit", "--n", n)
        assert code == 1
        assert out == ""

    def test_largest_exponent(self, invoke):
        payload = json.loads(invoke("prime-qunit", "--n", "20", "--format", "json")[1])
        assert payload["prime_count"] == 82025


@pytest.mark.cli
class TestEntropy:
    """entropy subcommand"""

    def test_csv(self, invoke, entropy_spec_file):
        code, out, _ = invoke("entropy", "--spec", str(entropy_spec_file))
        assert code == 0
        header, values = _rows(out)
        assert header == ["dimension", "omega", "shannon_bits", "purity"]
        assert values[0] == "6"
        assert float(values[1]) == pytest.approx(math.log(2))
        assert float(values[2]) == pytest.approx(math.log2(6))
        assert float(values[3]) == pytest.approx(0.5)

    def test_json(self, invoke, entropy_spec_file):
        code, out, _ = invoke("entropy", "--spec", str(entropy_spec_file), "--format", "json")
        assert code == 0
        assert json.loads(out)["dimension"] == 6

    def test_invalid_json(self, invoke, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        assert invoke("entropy", "--spec", str(path))[0] == 1

    def test_not_a_state(self, invoke, tmp_path):
        path = tmp_path / "heavy.json"
        path.write_text(
            json.dumps({"factors": [{"members": [[1, 1]], "weights": [1]}]}), encoding="utf-8"
        )
        assert invoke("entropy", "--spec", str(path))[0] == 1

    def test_missing_file(self, invoke, tmp_path):
        assert invoke("entropy", "--spec", str(tmp_path / "absent.json"))[0] == 1


@pytest.mark.cli
class TestCheck:
    """check subcommand and exit codes"""

    def test_single_suite_passes(self, invoke):
        code, out, _ = invoke("check", "--suite", "charpoly")
        assert code == 0
        rows = _rows(out)
        assert rows[0] == ["name", "residual", "threshold", "passed", "note"]
        assert all(row[3] == "true" for row in rows[1:])

    def test_integer_suite(self, invoke):
        code, out, _ = invoke("check", "--suite", "integer", "--dim-max", "9")
        assert code == 0
        names = [row[0] for row in _rows(out)[1:]]
        assert "Z^2 = n(n+1)I (d=9)" in names

    def test_pretty(self, invoke):
        code, out, _ = invoke("check", "--suite", "sun", "--format", "pretty")
        assert code == 0
        assert out.endswith("overall: PASS\n")

    def test_failure_exits_two(self, invoke, monkeypatch):
        def failing(name, tol, dim_max):
            report = SuiteReport(suite=name)
            report.add("always fails", 1.0, 0.0)
            return report

        monkeypatch.setattr(check_command, "run_suite", failing)
        code, out, err = invoke("check", "--suite", "natural", "--format", "json")
        assert code == 2
        assert json.loads(out)["overall"] is False
        assert "always fails" in err

    def test_bad_tolerance(self, invoke):
        assert invoke("check", "--suite", "natural", "--tol", "-1")[0] == 1

    @pytest.mark.slow
    def test_all_suites(self, invoke):
        code, out, _ = invoke("check", "--dim-max", "4", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["suite"] == "all" and payload["overall"] is True


@pytest.mark.cli
class TestApplication:
    """Group-level behaviour"""

    def test_help_lists_commands(self, runner):
        result = runner.invoke(cli, ["--help"])
        assert result.exit_code == 0
        for name in ("rep", "dist", "check", "charpoly", "qmap", "prime-qunit", "entropy"):
            assert name in result.output

    def test_runner_matches_entry_point(self, runner, invoke):
        result = runner.invoke(cli, ["charpoly", "--n", "2"])
        assert result.exit_code == 0
        assert result.output == invoke("charpoly", "--n", "2")[1]

    def test_debug_logs_to_stderr(self, invoke):
        code, out, err = invoke("--debug", "charpoly", "--n", "1")
        assert code == 0
        assert out.startswith("degree,coefficient")
        assert "DEBUG" in err

    def test_tolerance_from_environment(self, monkeypatch):
        monkeypatch.setenv("QNT_TOL", "1e-8")
        assert Settings().QNT_TOL == 1e-8
        monkeypatch.setenv("QNT_TOL", "-1")
        with pytest.raises(ValidationError):
            Settings()
