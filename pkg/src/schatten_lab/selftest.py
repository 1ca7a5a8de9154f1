"""Table of hand-computed examples, runnable as ``schatten-lab selftest``.

Each entry returns either ``(got, expected)`` numbers or arrays, compared at
relative error 1e-12, or a bool.  Entries that expect an exception use
:func:`_raises`.
"""

import math
from contextlib import contextmanager

import numpy as np

from . import ineq
from .errors import DomainError, ParameterError, PreconditionError, ShapeError
from .gen import (
    GenConfig,
    cross_orthogonal_pair,
    mean_center,
    orthogonal_ranges_tuple,
    positive_tuple,
    random_matrix,
    random_psd,
    random_unitary,
    sum_zero_tuple,
)
from .ineq import (
    Case,
    Constraint,
    OperatorTuple,
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
    cross_residual,
    run_case,
)
from .linalg import (
    adjoint,
    gram,
    hermitian_eigenvalues,
    matmul,
    psd_eigenvalues,
    psd_sqrt,
    singular_values,
    trace_inner,
)
from .schatten import hilbert_schmidt_norm, schatten_norm, schatten_norm_psd
from .tightness import SearchConfig, optimize_ratio, ratio

__all__ = ["EXAMPLES", "run_selftest", "mutated", "MUTABLE_CONSTANTS"]

REL_TOL = 1e-12
MUTABLE_CONSTANTS = (
    "th1_constant", "orth_th1_constant", "th2_constant", "cor2_constant", "orth_th2_constant",
)

SQ3 = math.sqrt(3.0)
DIAG3 = np.array([np.diag([1.0, 0.0]), np.diag([0.0, 1.0]), np.diag([-1.0, -1.0])], dtype=complex)
PAIR2 = np.array([np.diag([1.0, 0.0]), np.diag([0.0, 1.0])], dtype=complex)
I2 = np.eye(2, dtype=complex)


def _raises(exc, fn, *args, **kwargs):
    try:
        fn(*args, **kwargs)
    except exc:
        return True
    return False


def _sides(report):
    return np.array([report.lhs, report.rhs])


def _rand(seed, d=3):
    return random_matrix(GenConfig(seed=seed, d=d))


def _sumzero(seed, n=3, d=3):
    return sum_zero_tuple(GenConfig(seed=seed, n=n, d=d))


def _verdict(report, *verdicts):
    return report.verdict in verdicts


def _both_equal(reports):
    return all(r.verdict is Verdict.EQUALITY_HOLDS for r in reports)


_ZERO3 = np.zeros((3, 2, 2), dtype=complex)

EXAMPLES = [
    # linalg
    ("adjoint/conjugate-1x1", lambda: (adjoint([[1j]]), np.array([[-1j]]))),
    ("adjoint/real-transpose", lambda: (adjoint([[1, 2], [3, 4]]), np.array([[1, 3], [2, 4]]))),
    ("adjoint/involution", lambda: (adjoint(adjoint(_rand(1))), _rand(1))),
    ("matmul/identity", lambda: (matmul(np.eye(3), _rand(2)), _rand(2))),
    ("matmul/nilpotent", lambda: (matmul([[0, 1], [0, 0]], [[0, 1], [0, 0]]), np.zeros((2, 2)))),
    ("matmul/ones-squared", lambda: (matmul([[1, 1], [1, 1]], [[1, 1], [1, 1]]), np.full((2, 2), 2.0))),
    ("matmul/shape-error", lambda: _raises(ShapeError, matmul, np.eye(2), np.eye(3))),
    ("gram/diagonal", lambda: (gram(np.diag([3.0, -4.0])), np.diag([9.0, 16.0]))),
    ("gram/shift", lambda: (gram([[0, 1], [0, 0]]), np.diag([0.0, 1.0]))),
    ("gram/unitary", lambda: (gram(random_unitary(GenConfig(seed=3, d=4))), np.eye(4))),
    ("eig/diagonal", lambda: (hermitian_eigenvalues(np.diag([4.0, 0.0])), np.array([4.0, 0.0]))),
    ("eig/2112", lambda: (hermitian_eigenvalues([[2, 1], [1, 2]]), np.array([3.0, 1.0]))),
    ("eig/2222", lambda: (hermitian_eigenvalues([[2, 2], [2, 2]]), np.array([4.0, 0.0]))),
    ("eig/non-square", lambda: _raises(ShapeError, hermitian_eigenvalues, np.ones((2, 3)))),
    ("eig/asymmetric", lambda: _raises(DomainError, hermitian_eigenvalues, [[1, 2], [0, 1]])),
    ("sv/diagonal", lambda: (singular_values(np.diag([3.0, -4.0])), np.array([4.0, 3.0]))),
    ("sv/shift", lambda: (singular_values([[0, 1], [0, 0]]), np.array([1.0, 0.0]))),
    ("sv/ones", lambda: (singular_values([[1, 1], [1, 1]]), np.array([2.0, 0.0]))),
    ("sqrt/diagonal", lambda: (psd_sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]))),
    ("sqrt/2112", lambda: (psd_sqrt([[2, 1], [1, 2]]),
                           np.array([[SQ3 + 1, SQ3 - 1], [SQ3 - 1, SQ3 + 1]]) / 2)),
    ("sqrt/zero", lambda: (psd_sqrt(np.zeros((3, 3))), np.zeros((3, 3)))),
    ("sqrt/not-psd", lambda: _raises(DomainError, psd_sqrt, np.diag([1.0, -1.0]))),
    ("inner/identity", lambda: (trace_inner(I2, I2), 2.0)),
    ("inner/diagonal", lambda: (trace_inner(np.diag([1.0, 2.0]), np.diag([3.0, 4.0])), 11.0)),
    ("inner/hermitian-symmetry", lambda: (trace_inner(_rand(4), _rand(5)),
                                          np.conj(trace_inner(_rand(5), _rand(4))))),
    # schatten
    ("norm/identity-p0.5", lambda: (schatten_norm(np.eye(5), 0.5), 5.0**2)),
    ("norm/identity-p3", lambda: (schatten_norm(np.eye(5), 3), 5.0 ** (1 / 3))),
    ("norm/diag34-p1", lambda: (schatten_norm(np.diag([3.0, -4.0]), 1), 7.0)),
    ("norm/diag34-p2", lambda: (schatten_norm(np.diag([3.0, -4.0]), 2), 5.0)),
    ("norm/diag34-p0.5", lambda: (schatten_norm(np.diag([3.0, -4.0]), 0.5), (2 + SQ3) ** 2)),
    ("norm-psd/diag11-p0.5", lambda: (schatten_norm_psd(I2, 0.5), 4.0)),
    ("norm-psd/gram-identity", lambda: (schatten_norm_psd(gram(_rand(6)), 1.5),
                                        schatten_norm(_rand(6), 3.0) ** 2)),
    ("norm-psd/zero", lambda: (schatten_norm_psd(np.zeros((2, 2)), 0.7), 0.0)),
    ("hs/entrywise", lambda: (hilbert_schmidt_norm([[3, 4], [0, 0]]), 5.0)),
    ("hs/identity", lambda: (hilbert_schmidt_norm(np.eye(7)), math.sqrt(7))),
    ("hs/agrees-p2", lambda: (hilbert_schmidt_norm(_rand(7)), schatten_norm(_rand(7), 2))),
    # ineq
    ("triangle/zero", lambda: _verdict(check_triangle(OperatorTuple(_ZERO3), 1.5),
                                       Verdict.EQUALITY_HOLDS)),
    ("triangle/identity-pair-p1", lambda: (_sides(check_triangle(OperatorTuple([I2, I2]), 1)),
                                           np.array([4.0, 4.0]))),
    ("triangle/p0.5-inapplicable", lambda: _verdict(check_triangle(OperatorTuple([I2, I2]), 0.5),
                                                    Verdict.INAPPLICABLE)),
    ("reverse/diag-p0.5", lambda: (_sides(check_reverse_triangle_positive(
        OperatorTuple(PAIR2, Constraint.POSITIVE_EACH), 0.5)), np.array([2.0, 4.0]))),
    ("reverse/single", lambda: _verdict(check_reverse_triangle_positive(
        OperatorTuple([random_psd(GenConfig(seed=8))], Constraint.POSITIVE_EACH), 0.3),
        Verdict.EQUALITY_HOLDS)),
    ("reverse/p1-equality", lambda: _verdict(check_reverse_triangle_positive(
        positive_tuple(GenConfig(seed=9)), 1), Verdict.EQUALITY_HOLDS)),
    ("lemma/identical-p0.5", lambda: (_sides(check_lemma(OperatorTuple(
        [np.diag([1.0, 0.0])] * 2, Constraint.POSITIVE_EACH), 0.5)[0]),
        np.array([math.sqrt(2), math.sqrt(2)]))),
    # the bound carrying n^{p-1} is tight for identical operators: the lower
    # report in part (a), the upper one in part (b)
    ("lemma/identical-p3-scaled-side", lambda: _verdict(check_lemma(OperatorTuple(
        [random_psd(GenConfig(seed=10))] * 3, Constraint.POSITIVE_EACH), 3)[1],
        Verdict.EQUALITY_HOLDS)),
    ("lemma/p1-both", lambda: _both_equal(check_lemma(positive_tuple(GenConfig(seed=11)), 1))),
    ("scalar/ones-p0.5", lambda: (np.concatenate([_sides(r) for r in check_scalar_power([1, 1], 0.5)]),
                                  np.array([math.sqrt(2), math.sqrt(2), math.sqrt(2), 2.0]))),
    ("scalar/single", lambda: _both_equal(check_scalar_power([2.5], 0.7))),
    ("scalar/ones-p2", lambda: (np.concatenate([_sides(r) for r in check_scalar_power([1, 1], 2)]),
                                np.array([2.0, 4.0, 4.0, 4.0]))),
    ("parallelogram/identical", lambda: (_sides(check_parallelogram(I2, I2)), np.array([8.0, 8.0]))),
    ("parallelogram/projections", lambda: (_sides(check_parallelogram(*PAIR2)), np.array([4.0, 4.0]))),
    ("parallelogram/zero-partner", lambda: _verdict(check_parallelogram(_rand(12), np.zeros((3, 3))),
                                                    Verdict.EQUALITY_HOLDS)),
    ("lorch/diag", lambda: (_sides(check_lorch_identity(OperatorTuple(DIAG3, Constraint.SUM_ZERO))),
                            np.array([24.0, 24.0]))),
    ("lorch/zero", lambda: (_sides(check_lorch_identity(OperatorTuple(_ZERO3, Constraint.SUM_ZERO))),
                            np.array([0.0, 0.0]))),
    ("lorch/random", lambda: _verdict(check_lorch_identity(_sumzero(13, n=5)), Verdict.EQUALITY_HOLDS)),
    ("th1/zero", lambda: (_sides(check_th1(OperatorTuple(_ZERO3), OperatorTuple(_ZERO3), 1.5, "plus")),
                          np.array([0.0, 0.0]))),
    ("th1/p2-equality", lambda: _verdict(check_th1(*cross_orthogonal_pair(GenConfig(seed=14)), 2, "minus"),
                                         Verdict.EQUALITY_HOLDS)),
    ("th1/diag-p4-minus", lambda: (_sides(check_th1(OperatorTuple(DIAG3), OperatorTuple(DIAG3), 4, "minus")),
                                   np.array([72.0, 432.0]))),
    ("cor1/diag-p4-minus", lambda: (_sides(check_cor1(OperatorTuple(DIAG3, Constraint.SUM_ZERO), 4, "minus")),
                                    np.array([72.0, 432.0]))),
    ("cor1/diag-p2-plus", lambda: (_sides(check_cor1(OperatorTuple(DIAG3, Constraint.SUM_ZERO), 2, "plus")),
                                   np.array([24.0, 24.0]))),
    ("cor1/p1-random", lambda: _verdict(check_cor1(_sumzero(15), 1, "plus"), Verdict.HOLDS)),
    ("orth-th1/n2-p2-minus", lambda: (_sides(check_orth_th1(
        OperatorTuple(PAIR2, Constraint.ORTHOGONAL_RANGES), 2, "minus")), np.array([4.0, 4.0]))),
    ("orth-th1/n2-p2-plus", lambda: (_sides(check_orth_th1(
        OperatorTuple(PAIR2, Constraint.ORTHOGONAL_RANGES), 2, "plus")), np.array([12.0, 12.0]))),
    ("orth-th1/zero", lambda: (_sides(check_orth_th1(
        OperatorTuple(_ZERO3, Constraint.ORTHOGONAL_RANGES), 3, "plus")), np.array([0.0, 0.0]))),
    ("th2/p2-equality", lambda: _verdict(check_th2(*cross_orthogonal_pair(GenConfig(seed=16)), 2, "plus"),
                                         Verdict.EQUALITY_HOLDS)),
    ("th2/diag-p2-minus", lambda: (_sides(check_th2(OperatorTuple(DIAG3), OperatorTuple(DIAG3), 2, "minus")),
                                   np.array([24.0, 24.0]))),
    ("th2/zero", lambda: (_sides(check_th2(OperatorTuple(_ZERO3), OperatorTuple(_ZERO3), 0.5, "minus")),
                          np.array([0.0, 0.0]))),
    ("cor2/diag-p1-minus", lambda: (_sides(check_cor2(OperatorTuple(DIAG3, Constraint.SUM_ZERO), 1, "minus")),
                                    np.array([44.0, 108.0]))),
    ("cor2/diag-p2-minus", lambda: (_sides(check_cor2(OperatorTuple(DIAG3, Constraint.SUM_ZERO), 2, "minus")),
                                    np.array([24.0, 24.0]))),
    ("cor2/zero", lambda: (_sides(check_cor2(OperatorTuple(_ZERO3, Constraint.SUM_ZERO), 3, "plus")),
                           np.array([0.0, 0.0]))),
    ("orth-th2/n2-p2-minus", lambda: (_sides(check_orth_th2(
        OperatorTuple(PAIR2, Constraint.ORTHOGONAL_RANGES), 2, "minus")), np.array([4.0, 4.0]))),
    ("orth-th2/n2-p2-plus", lambda: (_sides(check_orth_th2(
        OperatorTuple(PAIR2, Constraint.ORTHOGONAL_RANGES), 2, "plus")), np.array([12.0, 12.0]))),
    ("orth-th2/zero", lambda: (_sides(check_orth_th2(
        OperatorTuple(_ZERO3, Constraint.ORTHOGONAL_RANGES), 1, "minus")), np.array([0.0, 0.0]))),
    ("run-case/lorch", lambda: _verdict(run_case(Case.LORCH_IDENTITY, _sumzero(17), 2)[0],
                                        Verdict.EQUALITY_HOLDS)),
    ("run-case/triangle-p0.5", lambda: _verdict(run_case(Case.TRIANGLE, OperatorTuple([I2, I2]), 0.5)[0],
                                                Verdict.INAPPLICABLE)),
    ("run-case/cor1-free", lambda: _raises(PreconditionError, run_case, Case.COR1,
                                           OperatorTuple(DIAG3), 1, sign="plus")),
    # gen
    ("gen/deterministic", lambda: (random_matrix(GenConfig(seed=5)), random_matrix(GenConfig(seed=5)))),
    ("gen/seeds-differ", lambda: not np.array_equal(random_matrix(GenConfig(seed=5)),
                                                    random_matrix(GenConfig(seed=6)))),
    ("gen/scale-zero", lambda: _raises(ParameterError, GenConfig, scale=0.0)),
    ("gen/psd-valid", lambda: bool(np.all(psd_eigenvalues(random_psd(GenConfig(seed=18))) >= 0))),
    ("gen/sum-zero-n2", lambda: (lambda t: (t.matrices[1], -t.matrices[0]))(_sumzero(19, n=2))),
    ("gen/sum-zero-n1", lambda: _raises(ParameterError, sum_zero_tuple, GenConfig(n=1))),
    ("gen/mean-center", lambda: OperatorTuple(mean_center(np.stack([_rand(s) for s in range(4)])),
                                              Constraint.SUM_ZERO) is not None),
    ("gen/cross-pair", lambda: cross_residual(*cross_orthogonal_pair(GenConfig(seed=20, n=3, d=5))) <= 1e-10),
    ("gen/cross-self-sumzero", lambda: cross_residual(_sumzero(21), _sumzero(21)) <= 1e-10),
    ("gen/orth-n2-d2", lambda: orthogonal_ranges_tuple(GenConfig(seed=22, n=2, d=2)).n == 2),
    ("gen/orth-n3-d2", lambda: _raises(ParameterError, orthogonal_ranges_tuple, GenConfig(n=3, d=2))),
    ("gen/positive-distinct", lambda: (lambda t: not np.array_equal(t.matrices[0], t.matrices[1]))(
        positive_tuple(GenConfig(seed=23)))),
    # tightness
    ("ratio/zero", lambda: ratio(Case.COR1, OperatorTuple(_ZERO3, Constraint.SUM_ZERO), 4, "minus") == 0.0),
    ("ratio/p2-rejected", lambda: _raises(DomainError, ratio, Case.COR1, _sumzero(24), 2, "minus")),
    ("ratio/cor1-diag-p4", lambda: (ratio(Case.COR1, OperatorTuple(DIAG3, Constraint.SUM_ZERO), 4, "minus"),
                                    1.0 / 6.0)),
    ("search/deterministic-bounded", lambda: _search_contract()),
]


def _search_contract():
    cfg = SearchConfig(Case.COR2, 4, restarts=2, steps=30, seed=3)
    first, second = optimize_ratio(cfg), optimize_ratio(cfg)
    ratios = [v for _, _, v in first.trace]
    return (first.trace == second.trace and first.best_ratio <= 1 + 1e-8
            and all(b >= a for a, b in zip(ratios, ratios[1:])))


def _compare(got, expected):
    got = np.asarray(got, dtype=complex)
    expected = np.asarray(expected, dtype=complex)
    if got.shape != expected.shape:
        return False, f"shape {got.shape} != {expected.shape}"
    scale = max(float(np.max(np.abs(expected), initial=0.0)), 1e-300)
    err = float(np.max(np.abs(got - expected), initial=0.0))
    rel = err / scale if np.any(expected != 0) else err
    return rel <= REL_TOL, f"rel err {rel:.2e}"


def evaluate(fn):
    try:
        out = fn()
    except Exception as exc:  # a crash is a failing example
        return False, f"{type(exc).__name__}: {exc}"
    if isinstance(out, tuple):
        return _compare(*out)
    return bool(out), ""


@contextmanager
def mutated(name, factor=1.0 + 1e-6):
    """Temporarily scale one bound constant (mutation testing)."""
    if name not in MUTABLE_CONSTANTS:
        raise ParameterError(f"unknown constant {name!r}; choose from {MUTABLE_CONSTANTS}")
    original = getattr(ineq, name)
    setattr(ineq, name, lambda *args: factor * original(*args))
    try:
        yield
    finally:
        setattr(ineq, name, original)


def run_selftest(examples=EXAMPLES):
    """Evaluate every example; returns a list of ``(id, passed, detail)``."""
    return [(name, *evaluate(fn)) for name, fn in examples]
