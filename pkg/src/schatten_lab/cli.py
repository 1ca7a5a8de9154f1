"""Command-line front end.

Exit codes: 0 success, 1 an inequality was violated (or a selftest example
failed), 2 usage, parse or precondition error.
"""

import argparse
import json
import sys
import time

import numpy as np

from .campaign import DEFAULT_DS, DEFAULT_NS, DEFAULT_P_GRID, summarize, verify
from .errors import InequalityViolation, ParseError, SchattenLabError
from .formats import (
    SEARCH_COLUMNS,
    fmt_float,
    read_matrix,
    reports_to_csv,
    reports_to_json,
    rows_to_csv,
)
from .ineq import Case, Constraint, OperatorTuple, Verdict, run_case
from .schatten import PExponent, schatten_norm, schatten_norm_psd
from .selftest import MUTABLE_CONSTANTS, mutated, run_selftest
from .tightness import SearchConfig, optimize_ratio, search_rows, sweep

SWEEP_VERIFY_COLUMNS = (
    "case", "p", "n", "d", "sign", "trials", "holds", "equalityholds", "violated",
    "inapplicable", "min_rel_slack", "seed",
)

_TUPLE_CONSTRAINT = {
    Case.REVERSE_TRIANGLE_POSITIVE: Constraint.POSITIVE_EACH,
    Case.LEMMA_A: Constraint.POSITIVE_EACH,
    Case.LEMMA_B: Constraint.POSITIVE_EACH,
    Case.LORCH_IDENTITY: Constraint.SUM_ZERO,
    Case.COR1: Constraint.SUM_ZERO,
    Case.COR2: Constraint.SUM_ZERO,
    Case.ORTH_TH1: Constraint.ORTHOGONAL_RANGES,
    Case.ORTH_TH2: Constraint.ORTHOGONAL_RANGES,
}


class UsageError(SchattenLabError):
    pass


# ---------------------------------------------------------------------------
# argument types


def _p_value(text):
    try:
        return PExponent(float(text)).p
    except (ValueError, SchattenLabError):
        raise argparse.ArgumentTypeError(f"p must be a positive finite number, got {text!r}")


def _float_list(text):
    try:
        return [_p_value(t) for t in text.split(",") if t.strip()]
    except argparse.ArgumentTypeError:
        raise argparse.ArgumentTypeError(f"invalid p grid {text!r}")


def _int_list(text):
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer list {text!r}")
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return values


def _seed(text):
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}")
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _case(text):
    try:
        return Case.parse(text)
    except SchattenLabError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _case_list(text):
    if text.strip().lower() == "all":
        return list(Case)
    return [_case(t) for t in text.split(",") if t.strip()]


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _add_output(sub):
    sub.add_argument("--out", help="output file (default: stdout)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")


def _add_search(sub, single_p=True):
    sub.add_argument("--case", type=_case, required=True)
    if single_p:
        sub.add_argument("--p", type=_p_value, required=True)
    else:
        sub.add_argument("--p-grid", type=_float_list, required=True)
    sub.add_argument("--n", type=_positive_int, default=3)
    sub.add_argument("--dim", type=_positive_int, default=4)
    sub.add_argument("--sign", choices=("plus", "minus"), default="minus")
    sub.add_argument("--restarts", type=_positive_int, default=16)
    sub.add_argument("--steps", type=_positive_int, default=400)
    sub.add_argument("--step-size", type=float, default=0.5)
    sub.add_argument("--decay", type=float, default=0.95)
    sub.add_argument("--seed", type=_seed, default=0)
    sub.add_argument("--tol", type=float, default=1e-8)
    _add_output(sub)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="schatten-lab",
        description="Schatten p-norms and executable checks of Schatten-norm inequalities.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("norm", help="Schatten p-norm of a matrix file")
    sub.add_argument("matrix")
    sub.add_argument("--p", type=_p_value, required=True)
    sub.add_argument("--psd", action="store_true", help="use the eigenvalue path for PSD input")

    sub = subs.add_parser("check", help="check one inequality on matrices read from files")
    sub.add_argument("--case", type=_case, required=True)
    sub.add_argument("--p", type=_p_value, default=2.0)
    sub.add_argument("--sign", choices=("plus", "minus"))
    sub.add_argument("--a", nargs="+", metavar="FILE", help="matrix files A_1 .. A_n")
    sub.add_argument("--b", nargs="+", metavar="FILE", help="matrix files B_1 .. B_n (Th1, Th2)")
    sub.add_argument("--scalars", help="comma-separated numbers (ScalarPower)")
    sub.add_argument("--tol", type=float, default=1e-8)
    _add_output(sub)

    sub = subs.add_parser("verify", help="seeded verification campaign")
    sub.add_argument("--case", type=_case_list, default=list(Case), help="'all' or comma-separated ids")
    sub.add_argument("--p-grid", type=_float_list, default=list(DEFAULT_P_GRID))
    sub.add_argument("--n", type=_int_list, default=list(DEFAULT_NS))
    sub.add_argument("--dim", type=_int_list, default=list(DEFAULT_DS))
    sub.add_argument("--trials", type=_positive_int, default=100)
    sub.add_argument("--seed", type=_seed, default=0)
    sub.add_argument("--tol", type=float, default=1e-8)
    _add_output(sub)

    sub = subs.add_parser("sweep", help="tightness search or verification over a p grid")
    _add_search(sub, single_p=False)
    sub.add_argument("--mode", choices=("search", "verify"), default="search")
    sub.add_argument("--trials", type=_positive_int, default=100)

    sub = subs.add_parser("tighten", help="hill-climb the tightness ratio of one bound")
    _add_search(sub)

    sub = subs.add_parser("selftest", help="run the table of hand-computed examples")
    sub.add_argument("--mutate", choices=MUTABLE_CONSTANTS, help=argparse.SUPPRESS)
    return parser


# ---------------------------------------------------------------------------
# output


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _note(message):
    print(message, file=sys.stderr)


def _records_json(rows):
    def clean(v):
        if isinstance(v, float) and not np.isfinite(v):
            return None
        return getattr(v, "value", v)

    return json.dumps([{k: clean(v) for k, v in row.items()} for row in rows], indent=1) + "\n"


def _write_reports(reports, args):
    text = reports_to_json(reports) if args.format == "json" else reports_to_csv(reports)
    _emit(text, args.out)


# ---------------------------------------------------------------------------
# commands


def cmd_norm(args):
    m = read_matrix(args.matrix)
    value = schatten_norm_psd(m, args.p) if args.psd else schatten_norm(m, args.p)
    print(fmt_float(value))
    return 0


def _load_tuple(paths, constraint):
    if not paths:
        raise UsageError("missing matrix files")
    return OperatorTuple(np.stack([read_matrix(p) for p in paths]), constraint)


def cmd_check(args):
    case = args.case
    if case.signed and args.sign is None:
        raise UsageError(f"{case.value} needs --sign plus|minus")
    if case is Case.SCALAR_POWER:
        if not args.scalars:
            raise UsageError("ScalarPower needs --scalars")
        try:
            instance = np.array([float(t) for t in args.scalars.split(",")])
        except ValueError:
            raise UsageError(f"invalid --scalars {args.scalars!r}") from None
    elif case.paired:
        instance = (_load_tuple(args.a, Constraint.FREE), _load_tuple(args.b, Constraint.FREE))
    else:
        instance = _load_tuple(args.a, _TUPLE_CONSTRAINT.get(case, Constraint.FREE))
    reports = run_case(case, instance, args.p, args.tol, args.sign)
    _write_reports(reports, args)
    return 1 if any(r.violated for r in reports) else 0


def cmd_verify(args):
    start = time.perf_counter()
    reports = verify(args.case, args.p_grid, args.n, args.dim, args.trials, args.seed, args.tol)
    _write_reports(reports, args)
    counts = summarize(reports)
    _note(
        f"verify: {len(reports)} reports, {counts[Verdict.VIOLATED.value]} violated, "
        f"{counts[Verdict.INAPPLICABLE.value]} inapplicable "
        f"({time.perf_counter() - start:.1f} s)"
    )
    return 1 if counts[Verdict.VIOLATED.value] else 0


def _search_config(args, p):
    return SearchConfig(
        case=args.case, p=p, n=args.n, d=args.dim, sign=args.sign, restarts=args.restarts,
        steps=args.steps, step_size=args.step_size, decay=args.decay, seed=args.seed,
        tol=args.tol,
    )


def _write_search_rows(rows, args, columns=SEARCH_COLUMNS):
    text = _records_json(rows) if args.format == "json" else rows_to_csv(columns, rows)
    _emit(text, args.out)


def cmd_tighten(args):
    result = optimize_ratio(_search_config(args, args.p))
    if result.note:
        _note(f"note: {result.note}")
    _write_search_rows(search_rows(result), args)
    _note(f"tighten: best ratio {fmt_float(result.best_ratio)} "
          f"(restart {result.best_restart}, step {result.best_step})")
    return 0


def cmd_sweep(args):
    base = _search_config(args, args.p_grid[0] if args.p_grid else 1.0)
    result = sweep(args.case, args.p_grid, base, mode=args.mode, trials=args.trials)
    if args.mode == "verify":
        _write_search_rows(list(result.rows), args, SWEEP_VERIFY_COLUMNS)
        return 1 if any(row["violated"] for row in result.rows) else 0
    rows = []
    for res in result.rows:
        if res.note:
            _note(f"p={fmt_float(res.config.p)}: {res.note}")
        rows.extend(search_rows(res, include_trace=False))
    _write_search_rows(rows, args)
    return 0


def cmd_selftest(args):
    start = time.perf_counter()
    if args.mutate:
        with mutated(args.mutate):
            results = run_selftest()
    else:
        results = run_selftest()
    failed = [(name, detail) for name, ok, detail in results if not ok]
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}" + (f"  ({detail})" if detail and not ok else ""))
    elapsed = time.perf_counter() - start
    print(f"selftest: {len(results) - len(failed)}/{len(results)} passed in {elapsed:.2f} s")
    return 1 if failed else 0


COMMANDS = {
    "norm": cmd_norm,
    "check": cmd_check,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "tighten": cmd_tighten,
    "selftest": cmd_selftest,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InequalityViolation as exc:
        _note(f"violation: {exc}")
        return 1
    except ParseError as exc:
        _note(f"parse error: {exc}")
        return 2
    except (SchattenLabError, OSError) as exc:
        _note(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
