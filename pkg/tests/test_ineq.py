import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schatten_lab import ineq
from schatten_lab.campaign import make_instance
from schatten_lab.errors import ParameterError, PreconditionError
from schatten_lab.gen import GenConfig, cross_orthogonal_pair, positive_tuple, sum_zero_tuple
from schatten_lab.ineq import (
    Case,
    Constraint,
    OperatorTuple,
    Orientation,
    Sign,
    Verdict,
    check_cor1,
    check_cor2,
    check_lemma,
    check_lorch_identity,
    check_orth_th1,
    check_orth_th2,
    check_parallelogram,
    check_reverse_triangle_positive,
    check_scalar_power,
    check_th1,
    check_th2,
    check_triangle,
    make_report,
    run_case,
)
from schatten_lab.linalg import gram

DIAG3 = OperatorTuple(
    [np.diag([1.0, 0.0]), np.diag([0.0, 1.0]), np.diag([-1.0, -1.0])], Constraint.SUM_ZERO
)
PROJ2 = OperatorTuple([np.diag([1.0, 0.0]), np.diag([0.0, 1.0])], Constraint.ORTHOGONAL_RANGES)
ZERO3 = OperatorTuple(np.zeros((3, 2, 2)), Constraint.SUM_ZERO)
I2 = np.eye(2)

seeds = st.integers(min_value=0, max_value=2**32)
signs = st.sampled_from(list(Sign))
grid = st.sampled_from([0.25, 0.5, 1.0, 1.5, 3.0, 4.0, 10.0])


def sides(report):
    return report.lhs, report.rhs


# --- tuples and validators


def test_tuple_is_read_only():
    with pytest.raises(ValueError):
        DIAG3.matrices[0, 0, 0] = 5


def test_sum_zero_validator_rejects():
    with pytest.raises(PreconditionError, match="SumZero"):
        OperatorTuple([I2, I2], Constraint.SUM_ZERO)


def test_orthogonal_ranges_validator_rejects():
    with pytest.raises(PreconditionError, match="OrthogonalRanges"):
        OperatorTuple([I2, I2], Constraint.ORTHOGONAL_RANGES)


def test_positive_validator_rejects():
    with pytest.raises(PreconditionError):
        OperatorTuple([np.diag([1.0, -1.0])], Constraint.POSITIVE_EACH)


def test_sign_parse():
    assert Sign.parse("+") is Sign.PLUS and Sign.parse("minus") is Sign.MINUS
    with pytest.raises(ParameterError):
        Sign.parse("times")


# --- hand-computed examples


def test_triangle_examples():
    assert check_triangle(OperatorTuple(np.zeros((3, 2, 2))), 1.5).verdict is Verdict.EQUALITY_HOLDS
    assert sides(check_triangle(OperatorTuple([I2, I2]), 1)) == pytest.approx((4.0, 4.0))
    assert check_triangle(OperatorTuple([I2, I2]), 0.5).verdict is Verdict.INAPPLICABLE


def test_reverse_triangle_examples():
    pair = OperatorTuple([np.diag([1.0, 0.0]), np.diag([0.0, 1.0])], Constraint.POSITIVE_EACH)
    r = check_reverse_triangle_positive(pair, 0.5)
    assert sides(r) == pytest.approx((2.0, 4.0))
    assert r.verdict is Verdict.HOLDS
    p1 = check_reverse_triangle_positive(positive_tuple(GenConfig(seed=9)), 1)
    assert p1.verdict is Verdict.EQUALITY_HOLDS


def test_lemma_identical_operators():
    a = np.diag([1.0, 0.0])
    lower, upper = check_lemma(OperatorTuple([a, a], Constraint.POSITIVE_EACH), 0.5)
    assert sides(lower) == pytest.approx((math.sqrt(2), math.sqrt(2)))
    assert lower.verdict is Verdict.EQUALITY_HOLDS
    assert upper.verdict is Verdict.HOLDS


def test_lemma_p1_is_trace_additivity():
    reports = check_lemma(positive_tuple(GenConfig(seed=11)), 1)
    assert [r.verdict for r in reports] == [Verdict.EQUALITY_HOLDS] * 2
    assert all(r.orientation is Orientation.EQUALITY for r in reports)


def test_scalar_power():
    lower, upper = check_scalar_power([1, 1], 0.5)
    assert sides(lower) == pytest.approx((math.sqrt(2), math.sqrt(2)))
    assert sides(upper) == pytest.approx((math.sqrt(2), 2.0))
    with pytest.raises(PreconditionError):
        check_scalar_power([-1, 2], 1.5)


def test_parallelogram_and_lorch():
    a = np.array([[1, 2j], [0, -1]])
    b = np.array([[0, 1], [3, 1j]])
    assert check_parallelogram(a, b).verdict is Verdict.EQUALITY_HOLDS
    r = check_lorch_identity(DIAG3)
    assert sides(r) == pytest.approx((24.0, 24.0))
    with pytest.raises(PreconditionError):
        check_lorch_identity(OperatorTuple([I2, -I2], Constraint.SUM_ZERO))


def test_cor1_diag_tuple():
    r = check_cor1(DIAG3, 4, Sign.MINUS)
    # p >= 2: the double sum is the claimed-smaller side
    assert sides(r) == pytest.approx((72.0, 432.0), rel=1e-12)
    assert r.verdict is Verdict.HOLDS
    assert check_cor1(DIAG3, 2, Sign.MINUS).verdict is Verdict.EQUALITY_HOLDS


def test_cor2_diag_tuple():
    r = check_cor2(DIAG3, 1, Sign.MINUS)
    assert sides(r) == pytest.approx((44.0, 108.0), rel=1e-12)
    assert sides(check_cor2(DIAG3, 2, Sign.MINUS)) == pytest.approx((24.0, 24.0))


def test_th2_diag_tuple_at_p2():
    r = check_th2(DIAG3, DIAG3, 2, Sign.MINUS)
    assert sides(r) == pytest.approx((24.0, 24.0))


@pytest.mark.parametrize("check", [check_orth_th1, check_orth_th2])
@pytest.mark.parametrize("sign, value", [(Sign.MINUS, 4.0), (Sign.PLUS, 12.0)])
def test_orthogonal_projection_pair(check, sign, value):
    r = check(PROJ2, 2, sign)
    assert sides(r) == pytest.approx((value, value))
    assert r.verdict is Verdict.EQUALITY_HOLDS


@pytest.mark.parametrize("case", [c for c in Case if c.signed])
@pytest.mark.parametrize("p", [0.5, 2.0, 3.0])
def test_all_zero_is_zero_vs_zero(case, p):
    inst = (ZERO3, ZERO3) if case.paired else OperatorTuple(
        np.zeros((3, 3, 3)),
        Constraint.ORTHOGONAL_RANGES if case in (Case.ORTH_TH1, Case.ORTH_TH2) else Constraint.SUM_ZERO,
    )
    (r,) = run_case(case, inst, p, sign=Sign.MINUS)
    assert (r.lhs, r.rhs, r.rel_slack) == (0.0, 0.0, 0.0)
    assert r.verdict is Verdict.EQUALITY_HOLDS


# --- dispatch


def test_run_case_gates():
    assert run_case(Case.LORCH_IDENTITY, DIAG3, 2)[0].verdict is Verdict.EQUALITY_HOLDS
    (r,) = run_case(Case.TRIANGLE, OperatorTuple([I2, I2]), 0.5)
    assert r.verdict is Verdict.INAPPLICABLE
    with pytest.raises(PreconditionError, match="SumZero"):
        run_case(Case.COR1, OperatorTuple([I2, I2]), 1, sign=Sign.PLUS)
    with pytest.raises(ParameterError):
        run_case(Case.COR1, DIAG3, 1)


def test_run_case_records_tolerance():
    (r,) = run_case(Case.COR2, DIAG3, 1.5, tolerance=1e-6, sign="plus")
    assert r.tolerance == 1e-6


def test_cross_hypothesis_enforced():
    a = OperatorTuple([I2, I2])
    with pytest.raises(PreconditionError):
        check_th1(a, a, 1.0, Sign.PLUS)


def test_report_verdict_thresholds():
    r = make_report(Case.TRIANGLE, 1, 2, 2, None, 1.0 + 5e-9, 1.0, Orientation.LHS_LEQ_RHS)
    assert r.verdict is Verdict.EQUALITY_HOLDS
    r = make_report(Case.TRIANGLE, 1, 2, 2, None, 1.0 + 1e-7, 1.0, Orientation.LHS_LEQ_RHS)
    assert r.violated
    r = make_report(Case.PARALLELOGRAM, 2, 2, 2, None, 2.0, 1.0, Orientation.EQUALITY)
    assert r.violated and r.slack == -1.0


# --- properties


def th1_instance(seed, n=3, d=4):
    return cross_orthogonal_pair(GenConfig(seed=seed, n=n, d=d))


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(2, 5), st.integers(2, 6), signs)
def test_proof_chain_identity(seed, n, d, sign):
    # sum_ij |A_i +/- B_j|^2 = n (sum |A_i|^2 + sum |B_i|^2) when sum_ij A_i* B_j = 0
    a, b = th1_instance(seed, n, d)
    pairs = a.matrices[:, None] + sign.factor * b.matrices[None, :]
    lhs = np.sum(gram(pairs), axis=(0, 1))
    rhs = n * (np.sum(gram(a.matrices), axis=0) + np.sum(gram(b.matrices), axis=0))
    assert np.linalg.norm(lhs - rhs) <= 1e-9 * np.linalg.norm(rhs)


@settings(max_examples=25, deadline=None)
@given(seeds, grid, signs, st.sampled_from([-3.0, 1e-3, 2.5j, 7e2]))
def test_scale_invariance(seed, p, sign, c):
    t = sum_zero_tuple(GenConfig(seed=seed, n=3, d=3))
    scaled = OperatorTuple(c * t.matrices, Constraint.SUM_ZERO)
    for case in (Case.COR1, Case.COR2):
        (r,) = run_case(case, t, p, sign=sign)
        (s,) = run_case(case, scaled, p, sign=sign)
        assert s.rel_slack == pytest.approx(r.rel_slack, abs=1e-9)


@settings(max_examples=25, deadline=None)
@given(seeds, grid)
def test_both_signs_checked_independently(seed, p):
    a, b = th1_instance(seed)
    plus = check_th1(a, b, p, Sign.PLUS)
    minus = check_th1(a, b, p, Sign.MINUS)
    assert not plus.violated and not minus.violated
    assert plus.sign is Sign.PLUS and minus.sign is Sign.MINUS


@pytest.mark.parametrize("case", [c for c in Case if c.signed])
@pytest.mark.parametrize("sign", list(Sign))
@pytest.mark.parametrize("p", [0.25, 0.5, 1.0, 1.5, 3.0, 4.0, 10.0])
def test_signed_cases_hold(case, sign, p):
    for k in range(5):
        inst = make_instance(case, 3, 4, seed=1000 + k)
        for r in run_case(case, inst, p, sign=sign):
            assert r.verdict in (Verdict.HOLDS, Verdict.EQUALITY_HOLDS), r


def test_constants_match_formulas():
    assert ineq.th1_constant(4, 3) == pytest.approx(2 * 27)
    assert ineq.orth_th1_constant(2, 2, Sign.MINUS) == pytest.approx(2.0)
    assert ineq.cor2_constant(1, 3) == pytest.approx(18.0)
    assert ineq.orth_th2_constant(2, 2, Sign.PLUS) == pytest.approx(6.0)
