"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the summary lines appear even
without ``-s``.
"""

import os
import subprocess
import sys
import time

import mpmath
import pytest

from schatten_lab.campaign import DEFAULT_DS, DEFAULT_NS, DEFAULT_P_GRID, make_instance, verify
from schatten_lab.formats import SEARCH_COLUMNS, rows_to_csv
from schatten_lab.gen import (
    GenConfig,
    derive_seed,
    positive_tuple,
    random_matrix,
    random_psd,
    sum_zero_tuple,
)
from schatten_lab.ineq import (
    Case,
    Constraint,
    OperatorTuple,
    Sign,
    Verdict,
    check_lemma,
    check_lorch_identity,
    run_case,
)
from schatten_lab.schatten import schatten_norm
from schatten_lab.tightness import SearchConfig, optimize_ratio, search_rows


@pytest.fixture
def report(capsys):
    def emit(criterion, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
        assert ok, detail
    return emit


def cli(*argv, env=None):
    proc = subprocess.run(
        [sys.executable, "-m", "schatten_lab", *map(str, argv)],
        capture_output=True, env=env, check=False,
    )
    return proc.returncode, proc.stdout


def test_1_lorch_identity(report):
    start = time.perf_counter()
    worst = 0.0
    for k in range(200):
        n, d = [(3, 2), (3, 8), (5, 2), (5, 8)][k % 4]
        t = sum_zero_tuple(GenConfig(seed=derive_seed(1, k), n=n, d=d))
        r = check_lorch_identity(t)
        worst = max(worst, abs(r.lhs - r.rhs) / max(r.lhs, 1.0))
    elapsed = time.perf_counter() - start
    report(1, worst <= 1e-9 and elapsed < 5,
           f"Lorch identity, 200 trials, max rel gap {worst:.2e} (<= 1e-9), {elapsed:.2f} s")


def test_2_soundness_sweep(report):
    start = time.perf_counter()
    reports = verify(list(Case), DEFAULT_P_GRID, DEFAULT_NS, DEFAULT_DS, trials=100, seed=0,
                     tol=1e-8)
    elapsed = time.perf_counter() - start
    violated = [r for r in reports if r.verdict is Verdict.VIOLATED]
    checked = sum(r.verdict is not Verdict.INAPPLICABLE for r in reports)
    signs = {(r.case, r.sign) for r in reports if r.sign is not None}
    both = all((c, s) in signs for c in Case if c.signed for s in Sign)
    report(2, not violated and both and elapsed < 60,
           f"soundness sweep, {checked} in-regime reports, {len(violated)} violated, "
           f"{elapsed:.1f} s")


def test_3_p2_collapse(report):
    cases = [Case.TH1, Case.COR1, Case.TH2, Case.COR2, Case.ORTH_TH1, Case.ORTH_TH2]
    worst, bad = 0.0, 0
    for case in cases:
        for k in range(100):
            n, d = [(2, 2), (3, 4), (5, 8), (2, 8)][k % 4]
            inst = make_instance(case, n, d, derive_seed(3, k))
            for sign in Sign:
                (r,) = run_case(case, inst, 2.0, sign=sign)
                worst = max(worst, abs(r.rel_slack))
                bad += r.verdict is not Verdict.EQUALITY_HOLDS or abs(r.rel_slack) > 1e-8
    report(3, bad == 0, f"p=2 collapse, 6 cases x 100 x 2 signs, max |rel_slack| {worst:.2e}, "
                        f"{bad} failures")


def _oracle_norm(a, p):
    """Schatten norm from the characteristic polynomial of A*A in 50 digits."""
    with mpmath.workdps(50):
        m = mpmath.matrix([[mpmath.mpc(complex(z)) for z in row] for row in a])
        g = m.H * m
        tr = g[0, 0] + g[1, 1] + g[2, 2]
        minors = (g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]
                  + g[0, 0] * g[2, 2] - g[0, 2] * g[2, 0]
                  + g[1, 1] * g[2, 2] - g[1, 2] * g[2, 1])
        det = mpmath.det(g)
        roots = mpmath.polyroots([1, -tr, minors, -det], maxsteps=200, extraprec=200)
        sig = [mpmath.sqrt(max(mpmath.re(r), 0)) for r in roots]
        pp = mpmath.mpf(p)
        return float(mpmath.fsum(s**pp for s in sig) ** (1 / pp))


def test_4_norm_oracle(report):
    worst = 0.0
    for k in range(50):
        a = random_matrix(GenConfig(seed=derive_seed(4, k), d=3))
        for p in (0.5, 1.0, 2.0, 3.0):
            ref = _oracle_norm(a, p)
            worst = max(worst, abs(schatten_norm(a, p) - ref) / ref)
    report(4, worst <= 1e-10, f"norm vs 50-digit characteristic-polynomial oracle, "
                              f"max rel err {worst:.2e}")


def test_5_selftest(report):
    start = time.perf_counter()
    code, out = cli("selftest")
    elapsed = time.perf_counter() - start
    summary = out.decode().strip().splitlines()[-1]
    report(5, code == 0 and elapsed < 10, f"{summary} (exit {code}, wall {elapsed:.1f} s)")


def test_6_lemma_equality(report):
    worst = 0.0
    for k in range(20):
        h = random_psd(GenConfig(seed=derive_seed(6, k), d=4))
        for n in (2, 3, 5):
            t = OperatorTuple([h] * n, Constraint.POSITIVE_EACH)
            for p in (0.25, 0.5, 0.8, 1.5, 3.0, 10.0):
                lower, upper = check_lemma(t, p)
                # the bound carrying n^{p-1} is the tight one for identical operators
                tight = lower if p <= 1 else upper
                worst = max(worst, abs(tight.lhs - tight.rhs) / max(tight.lhs, tight.rhs))
        for r in check_lemma(positive_tuple(GenConfig(seed=derive_seed(6, k), n=4, d=3)), 1.0):
            worst = max(worst, abs(r.lhs - r.rhs) / max(r.lhs, r.rhs))
    report(6, worst <= 1e-10, f"lemma equality cases, max rel gap {worst:.2e}")


def test_7_tightness_contract(report):
    lines, ok = [], True
    for case in (Case.COR1, Case.COR2):
        for p in (1.0, 4.0):
            for sign in Sign:
                cfg = SearchConfig(case=case, p=p, sign=sign)
                first = optimize_ratio(cfg)
                again = optimize_ratio(cfg)
                ratios = [v for _, _, v in first.trace]
                same = (rows_to_csv(SEARCH_COLUMNS, search_rows(first))
                        == rows_to_csv(SEARCH_COLUMNS, search_rows(again)))
                good = first.best_ratio <= 1 + 1e-8 and ratios == sorted(ratios) and same
                ok &= good
                lines.append(f"{case.value} p={p:g} {sign.value}: {first.best_ratio:.6f}")
    report(7, ok, "best ratios " + "; ".join(lines))


def test_8_cli_determinism(report):
    env = dict(os.environ, SCHATTEN_LAB_THREADS="1")
    threaded = dict(os.environ, SCHATTEN_LAB_THREADS="4")
    verify_argv = ("verify", "--case", "all", "--trials", 10, "--seed", 11)
    tighten_argv = ("tighten", "--case", "Cor1", "--p", 4, "--sign", "minus", "--seed", 1)
    outputs = {}
    for label, argv in (("verify", verify_argv), ("tighten", tighten_argv)):
        runs = [cli(*argv, env=env), cli(*argv, env=env), cli(*argv, env=threaded)]
        outputs[label] = all(code == 0 for code, _ in runs) and len({o for _, o in runs}) == 1
    report(8, all(outputs.values()),
           f"byte-identical reruns: verify {outputs['verify']}, tighten {outputs['tighten']}")
