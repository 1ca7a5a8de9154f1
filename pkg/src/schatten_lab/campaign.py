"""Batch verification: many seeded instances, every case, a grid of exponents.

Trial ``t`` of a case draws its ``(n, d)`` from the admissible combinations
of the requested sizes in round-robin order, and its instance from the seed
``derive_seed(seed, case_index, t)``.  The same instance is checked at every
``p`` in the grid and under both signs.  Rows come back sorted by
``(case, p, sign, trial)`` so worker scheduling never changes the output.
"""

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from .errors import ParameterError
from .gen import (
    GenConfig,
    cross_orthogonal_pair,
    derive_seed,
    free_tuple,
    orthogonal_ranges_tuple,
    positive_tuple,
    random_nonnegative,
    sum_zero_tuple,
)
from .ineq import VERDICT_TOL, Case, OperatorTuple, Sign, Verdict, run_case
from .schatten import PExponent

__all__ = [
    "DEFAULT_P_GRID",
    "DEFAULT_NS",
    "DEFAULT_DS",
    "admissible_dims",
    "make_instance",
    "verify",
    "summarize",
    "worker_count",
]

DEFAULT_P_GRID = (0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 10.0)
DEFAULT_NS = (2, 3, 5)
DEFAULT_DS = (2, 4, 8)

_CASE_INDEX = {case: k for k, case in enumerate(Case)}
_SIGN_INDEX = {None: 0, Sign.PLUS: 0, Sign.MINUS: 1}
_PART_INDEX = {None: 0, "lower": 0, "upper": 1}


def worker_count():
    """Worker cap from ``SCHATTEN_LAB_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("SCHATTEN_LAB_THREADS", "1")))
    except ValueError:
        return 1


def admissible_dims(case, ns=DEFAULT_NS, ds=DEFAULT_DS):
    case = Case.parse(case)
    if case is Case.SCALAR_POWER:
        dims = [(n, 1) for n in ns]
    elif case is Case.PARALLELOGRAM:
        dims = [(2, d) for d in ds]
    else:
        dims = [(n, d) for d in ds for n in ns]
        if case is Case.LORCH_IDENTITY:
            dims = [(n, d) for n, d in dims if n >= 3]
        elif case in (Case.COR1, Case.COR2):
            dims = [(n, d) for n, d in dims if n >= 2]
        elif case in (Case.ORTH_TH1, Case.ORTH_TH2):
            dims = [(n, d) for n, d in dims if d >= n]
        elif case.paired:
            dims = [(n, d) for n, d in dims if d >= 2]
    if not dims:
        raise ParameterError(f"no admissible (n, d) for {case.value} among n={ns}, d={ds}")
    return dims


def make_instance(case, n, d, seed):
    """A random instance satisfying ``case``'s hypothesis."""
    case = Case.parse(case)
    cfg = GenConfig(seed=seed, n=n, d=d)
    if case is Case.TRIANGLE:
        return OperatorTuple(free_tuple(cfg))
    if case in (Case.REVERSE_TRIANGLE_POSITIVE, Case.LEMMA_A, Case.LEMMA_B):
        return positive_tuple(cfg)
    if case is Case.SCALAR_POWER:
        return random_nonnegative(cfg)
    if case is Case.PARALLELOGRAM:
        return OperatorTuple(free_tuple(cfg))
    if case.paired:
        return cross_orthogonal_pair(cfg)
    if case in (Case.ORTH_TH1, Case.ORTH_TH2):
        return orthogonal_ranges_tuple(cfg)
    return sum_zero_tuple(cfg)


def _signs(case):
    return (Sign.PLUS, Sign.MINUS) if case.signed else (None,)


def _trial(case, trial, dims, seed, p_grid, tol):
    n, d = dims[trial % len(dims)]
    inst_seed = derive_seed(seed, _CASE_INDEX[case], trial)
    instance = make_instance(case, n, d, inst_seed)
    out = []
    for p in p_grid:
        for sign in _signs(case):
            for report in run_case(case, instance, p, tol, sign):
                key = (_CASE_INDEX[case], report.p, _SIGN_INDEX[sign], trial,
                       _PART_INDEX[report.part])
                out.append((key, report.with_seed(inst_seed)))
    return out


def verify(cases=None, p_grid=DEFAULT_P_GRID, ns=DEFAULT_NS, ds=DEFAULT_DS,
           trials=100, seed=0, tol=VERDICT_TOL, workers=None):
    """Run ``trials`` seeded instances per case over ``p_grid``.

    Exponents outside a case's regime produce ``Inapplicable`` rows.
    Returns the list of :class:`~schatten_lab.ineq.CheckReport`.
    """
    cases = list(Case) if cases is None else [Case.parse(c) for c in cases]
    p_grid = [PExponent.of(p).p for p in p_grid]
    if not p_grid:
        raise ParameterError("empty p grid")
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    jobs = []
    for case in cases:
        dims = admissible_dims(case, ns, ds)
        jobs.extend((case, t, dims) for t in range(trials))

    workers = worker_count() if workers is None else workers
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda job: _trial(*job, seed, p_grid, tol), jobs))
    else:
        chunks = [_trial(*job, seed, p_grid, tol) for job in jobs]
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=lambda kv: kv[0])
    return [report for _, report in rows]


def summarize(reports):
    counts = Counter(r.verdict for r in reports)
    return {v.value: counts.get(v, 0) for v in Verdict}
