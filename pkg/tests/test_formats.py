import json

import numpy as np
import pytest

from schatten_lab.errors import ParseError
from schatten_lab.formats import (
    REPORT_COLUMNS,
    fmt_float,
    format_matrix,
    parse_matrix,
    read_matrix,
    reports_to_csv,
    reports_to_json,
    write_matrix,
)
from schatten_lab.gen import GenConfig, random_matrix, sum_zero_tuple
from schatten_lab.ineq import Case, Sign, run_case


def test_parse_with_comments():
    m = parse_matrix("# a matrix\n2 1\n1 0  # first\n\n0 -2.5\n")
    np.testing.assert_array_equal(m, [[1], [-2.5j]])


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("2\n", 1),
    ("2 x\n", 1),
    ("1 1\n1\n", 2),
    ("1 1\n1 nan\n", 2),
    ("1 1\n1 inf\n", 2),
    ("1 2\n1 0\n", 3),
    ("2 1\n1 0\n0 0\n0 0\n", 4),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_matrix(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_roundtrip_exact(tmp_path):
    m = random_matrix(GenConfig(seed=4, d=3))
    path = tmp_path / "m.txt"
    write_matrix(path, m)
    assert read_matrix(path).tobytes() == m.tobytes()
    assert parse_matrix(format_matrix(m)).tobytes() == m.tobytes()


def test_fmt_float_round_trips():
    for x in (0.1, 1 / 3, 2.0**-1074, 1e300, 7.0):
        assert float(fmt_float(x)) == x
    assert fmt_float(7.0) == "7"


def test_report_csv_columns():
    t = sum_zero_tuple(GenConfig(seed=1))
    reports = [r.with_seed(5) for r in run_case(Case.COR2, t, 1.0, sign=Sign.PLUS)]
    lines = reports_to_csv(reports).splitlines()
    assert lines[0] == ",".join(REPORT_COLUMNS)
    cells = lines[1].split(",")
    assert cells[0] == "Cor2" and cells[4] == "plus" and cells[-1] == "5"
    assert float(cells[5]) == reports[0].lhs


def test_report_json_mirrors_csv():
    t = sum_zero_tuple(GenConfig(seed=1))
    reports = run_case(Case.TRIANGLE, t, 0.5)
    (record,) = json.loads(reports_to_json(reports))
    assert record["verdict"] == "Inapplicable" and record["lhs"] is None
