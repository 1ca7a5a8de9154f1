"""Text formats: the matrix file format and CSV/JSON report serialization.

Matrix files::

    rows cols
    re im          # rows*cols lines, row-major

Blank lines and ``#`` comments are ignored.  NaN and Inf are rejected.
"""

import csv
import io
import json
import math

import numpy as np

from .errors import ParseError

__all__ = [
    "read_matrix",
    "parse_matrix",
    "format_matrix",
    "write_matrix",
    "fmt_float",
    "REPORT_COLUMNS",
    "SEARCH_COLUMNS",
    "reports_to_csv",
    "reports_to_json",
    "rows_to_csv",
]

REPORT_COLUMNS = (
    "case", "p", "n", "d", "sign", "lhs", "rhs", "orientation",
    "slack", "rel_slack", "tolerance", "verdict", "seed",
)
SEARCH_COLUMNS = ("case", "p", "n", "d", "sign", "restart", "step", "ratio", "seed", "best")


def _number(token, lineno):
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"not a number: {token!r}", lineno) from None
    if not math.isfinite(value):
        raise ParseError(f"non-finite value: {token!r}", lineno)
    return value


def parse_matrix(text):
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise ParseError("empty matrix file", 1)
    lineno, head = lines[0]
    if len(head) != 2:
        raise ParseError("header must be 'rows cols'", lineno)
    try:
        rows, cols = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must hold two integers", lineno) from None
    if rows < 1 or cols < 1:
        raise ParseError("rows and cols must be positive", lineno)
    body = lines[1:]
    if len(body) != rows * cols:
        if len(body) > rows * cols:
            where = body[rows * cols][0]
        else:
            where = body[-1][0] + 1 if body else lineno + 1
        raise ParseError(f"expected {rows * cols} entries, found {len(body)}", where)
    out = np.empty(rows * cols, dtype=np.complex128)
    for k, (lineno, parts) in enumerate(body):
        if len(parts) != 2:
            raise ParseError("entry must be 're im'", lineno)
        out[k] = complex(_number(parts[0], lineno), _number(parts[1], lineno))
    return out.reshape(rows, cols)


def read_matrix(path):
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def fmt_float(x):
    """17 significant digits, enough to round-trip a 64-bit float."""
    return "%.17g" % x


def format_matrix(m):
    m = np.asarray(m, dtype=np.complex128)
    rows, cols = m.shape
    out = [f"{rows} {cols}"]
    for z in m.ravel():
        out.append(f"{fmt_float(z.real)} {fmt_float(z.imag)}")
    return "\n".join(out) + "\n"


def write_matrix(path, m):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(m))


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return fmt_float(value)
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


def rows_to_csv(columns, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows([_cell(row.get(c)) for c in columns] for row in rows)
    return buf.getvalue()


def reports_to_csv(reports):
    return rows_to_csv(REPORT_COLUMNS, (r.to_dict() for r in reports))


def _jsonable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if hasattr(value, "value"):
        return value.value
    return value


def reports_to_json(reports):
    records = [{k: _jsonable(v) for k, v in r.to_dict().items()} for r in reports]
    return json.dumps(records, indent=1) + "\n"
