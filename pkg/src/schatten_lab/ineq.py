"""Every inequality as a predicate that produces an oriented report.

A check never raises because a bound fails.  It returns a :class:`CheckReport`
whose ``verdict`` says whether the claimed-smaller side (``lhs``) stays below
the claimed-larger side (``rhs``) within tolerance.  Hypothesis failures
(wrong constraint tag, constraint residual too large) raise
:class:`~schatten_lab.errors.PreconditionError`; an exponent outside a
statement's regime yields an ``Inapplicable`` report.

Double sums over ``(i, j)`` run over all ``n**2`` ordered pairs, including
``i == j``, with one sign applied to every pair.
"""

import enum
from dataclasses import asdict, dataclass, replace

import numpy as np

from .errors import DomainError, ParameterError, PreconditionError
from .linalg import adjoint, as_matrix, frobenius, gram, psd_eigenvalues, psd_sqrt
from .schatten import PExponent, hilbert_schmidt_norm, lp_of_spectrum, schatten_norm

__all__ = [
    "Constraint",
    "Sign",
    "Case",
    "Orientation",
    "Verdict",
    "OperatorTuple",
    "CheckReport",
    "CONSTRAINT_TOL",
    "VERDICT_TOL",
    "ABS_FLOOR",
    "check_triangle",
    "check_reverse_triangle_positive",
    "check_lemma",
    "check_scalar_power",
    "check_parallelogram",
    "check_lorch_identity",
    "check_th1",
    "check_cor1",
    "check_orth_th1",
    "check_th2",
    "check_cor2",
    "check_orth_th2",
    "run_case",
    "in_regime",
    "equality_at",
    "cross_residual",
]

CONSTRAINT_TOL = 1e-10
VERDICT_TOL = 1e-8
ABS_FLOOR = 1e-12


class Constraint(str, enum.Enum):
    FREE = "Free"
    SUM_ZERO = "SumZero"
    ORTHOGONAL_RANGES = "OrthogonalRanges"
    POSITIVE_EACH = "PositiveEach"


class Sign(str, enum.Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def factor(self):
        return 1.0 if self is Sign.PLUS else -1.0

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        text = str(value).strip().lower()
        if text in ("+", "plus"):
            return cls.PLUS
        if text in ("-", "minus"):
            return cls.MINUS
        raise ParameterError(f"unknown sign {value!r}")


class Case(str, enum.Enum):
    TRIANGLE = "Triangle"
    REVERSE_TRIANGLE_POSITIVE = "ReverseTrianglePositive"
    LEMMA_A = "LemmaA"
    LEMMA_B = "LemmaB"
    SCALAR_POWER = "ScalarPower"
    PARALLELOGRAM = "Parallelogram"
    LORCH_IDENTITY = "LorchIdentity"
    TH1 = "Th1"
    COR1 = "Cor1"
    ORTH_TH1 = "OrthTh1"
    TH2 = "Th2"
    COR2 = "Cor2"
    ORTH_TH2 = "OrthTh2"

    @property
    def signed(self):
        return self in _SIGNED

    @property
    def paired(self):
        """True for the statements about two tuples ``A`` and ``B``."""
        return self in (Case.TH1, Case.TH2)

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        text = str(value).strip().lower()
        for case in cls:
            if case.value.lower() == text or case.name.lower() == text:
                return case
        raise ParameterError(f"unknown case {value!r}")


_SIGNED = frozenset({Case.TH1, Case.COR1, Case.ORTH_TH1, Case.TH2, Case.COR2, Case.ORTH_TH2})


class Orientation(str, enum.Enum):
    LHS_LEQ_RHS = "LhsLeqRhs"
    EQUALITY = "Equality"


class Verdict(str, enum.Enum):
    HOLDS = "Holds"
    EQUALITY_HOLDS = "EqualityHolds"
    VIOLATED = "Violated"
    INAPPLICABLE = "Inapplicable"


# ---------------------------------------------------------------------------
# operator tuples


def sum_zero_residual(matrices):
    scale = float(np.sum(frobenius(matrices)))
    res = float(frobenius(np.sum(matrices, axis=0)))
    return res / scale if scale > 0 else 0.0


def orthogonal_ranges_residual(matrices):
    """Largest ``||A_i* A_j||_F / (||A_i||_F ||A_j||_F)`` over ``i != j``."""
    n = matrices.shape[0]
    norms = frobenius(matrices)
    worst = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            denom = norms[i] * norms[j]
            if denom > 0:
                res = frobenius(adjoint(matrices[i]) @ matrices[j]) / denom
                worst = max(worst, float(res))
    return worst


def cross_residual(a, b):
    """``||(sum A_i)* (sum B_j)||_F`` relative to the sums of Frobenius norms.

    Zero exactly when ``sum_{i,j} A_i* B_j = 0``.
    """
    a = a.matrices if isinstance(a, OperatorTuple) else as_matrix(a)
    b = b.matrices if isinstance(b, OperatorTuple) else as_matrix(b)
    scale = float(np.sum(frobenius(a)) * np.sum(frobenius(b)))
    res = float(frobenius(adjoint(np.sum(a, axis=0)) @ np.sum(b, axis=0)))
    return res / scale if scale > 0 else 0.0


def _check_positive(matrices):
    if matrices.shape[-1] != matrices.shape[-2]:
        raise PreconditionError("PositiveEach requires square matrices")
    try:
        psd_eigenvalues(matrices)
    except DomainError as exc:
        raise PreconditionError(f"PositiveEach violated: {exc}") from None


@dataclass(frozen=True, eq=False)
class OperatorTuple:
    """Same-shape matrices ``A_1 .. A_n`` with a declared hypothesis.

    The constraint is validated on construction; the stored stack is
    read-only.
    """

    matrices: np.ndarray
    constraint: Constraint = Constraint.FREE
    tol: float = CONSTRAINT_TOL

    def __post_init__(self):
        m = as_matrix(self.matrices, "tuple")
        if m.ndim == 2:
            m = m[None]
        if m.ndim != 3:
            raise PreconditionError(f"expected a stack of matrices, got shape {m.shape}")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrices", m)
        object.__setattr__(self, "constraint", Constraint(self.constraint))
        self.validate()

    def validate(self):
        c = self.constraint
        if c is Constraint.SUM_ZERO:
            res = sum_zero_residual(self.matrices)
            if res > self.tol:
                raise PreconditionError(f"SumZero violated: relative residual {res:.3g}")
        elif c is Constraint.ORTHOGONAL_RANGES:
            res = orthogonal_ranges_residual(self.matrices)
            if res > self.tol:
                raise PreconditionError(f"OrthogonalRanges violated: relative residual {res:.3g}")
        elif c is Constraint.POSITIVE_EACH:
            _check_positive(self.matrices)

    @property
    def n(self):
        return self.matrices.shape[0]

    @property
    def d(self):
        return self.matrices.shape[-1]

    @property
    def shape(self):
        return self.matrices.shape[1:]

    def total(self):
        return np.sum(self.matrices, axis=0)

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.matrices)

    def __repr__(self):
        return f"OperatorTuple(n={self.n}, shape={self.shape}, constraint={self.constraint.value})"


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CheckReport:
    case: Case
    p: float
    n: int
    d: int
    sign: Sign | None
    lhs: float
    rhs: float
    orientation: Orientation
    slack: float
    rel_slack: float
    tolerance: float
    verdict: Verdict
    seed: int | None = None
    part: str | None = None

    @property
    def violated(self):
        return self.verdict is Verdict.VIOLATED

    def with_seed(self, seed):
        return replace(self, seed=seed)

    def to_dict(self):
        out = asdict(self)
        for key in ("case", "sign", "orientation", "verdict"):
            if out[key] is not None:
                out[key] = out[key].value
        return out


def make_report(case, p, n, d, sign, lhs, rhs, orientation, tol=VERDICT_TOL, part=None):
    lhs = float(lhs)
    rhs = float(rhs)
    scale = max(abs(lhs), abs(rhs), 1.0)
    threshold = max(tol * scale, ABS_FLOOR)
    gap = rhs - lhs
    slack = -abs(gap) if orientation is Orientation.EQUALITY else gap
    m = max(abs(lhs), abs(rhs))
    rel_slack = slack / m if m > 0 else 0.0
    if slack < -threshold:
        verdict = Verdict.VIOLATED
    elif abs(gap) <= threshold:
        verdict = Verdict.EQUALITY_HOLDS
    else:
        verdict = Verdict.HOLDS
    return CheckReport(
        case=case, p=float(p), n=int(n), d=int(d), sign=sign, lhs=lhs, rhs=rhs,
        orientation=orientation, slack=slack, rel_slack=rel_slack,
        tolerance=float(tol), verdict=verdict, part=part,
    )


def inapplicable(case, p, n, d, sign=None, tol=VERDICT_TOL, part=None):
    nan = float("nan")
    return CheckReport(
        case=case, p=float(p), n=int(n), d=int(d), sign=sign, lhs=nan, rhs=nan,
        orientation=Orientation.LHS_LEQ_RHS, slack=nan, rel_slack=nan,
        tolerance=float(tol), verdict=Verdict.INAPPLICABLE, part=part,
    )


def _oriented(small, large, orientation, p_le_two):
    """Put the claimed-smaller side first; flip when the regime reverses."""
    if orientation is Orientation.EQUALITY or p_le_two:
        return small, large
    return large, small


# ---------------------------------------------------------------------------
# constants of the bounds


def th1_constant(p, n):
    return 2.0 ** (p / 2 - 1) * float(n) ** (p - 1)


def orth_th1_constant(p, n, sign):
    return max(2.0 * n + 2.0 * sign.factor, 0.0) ** (p / 2) * float(n) ** (p / 2 - 1)


def th2_constant(p, n):
    return float(n) ** (2.0 / p)


def cor2_constant(p, n):
    return 2.0 * float(n) ** (2.0 / p)


def orth_th2_constant(p, n, sign):
    return 2.0 * float(n) ** (2.0 / p - 1) * (n + sign.factor)


# ---------------------------------------------------------------------------
# helpers


def _require(t, constraint):
    if not isinstance(t, OperatorTuple):
        raise PreconditionError(f"expected an OperatorTuple tagged {constraint.value}")
    if t.constraint is not constraint:
        raise PreconditionError(
            f"tuple is tagged {t.constraint.value}, case requires {constraint.value}"
        )
    t.validate()


def _as_tuple(t):
    return t if isinstance(t, OperatorTuple) else OperatorTuple(t)


def _pairs(a, b, sign):
    """Stack of ``A_i +/- B_j`` over all ordered pairs, shape ``(n*n, r, c)``."""
    x = a[:, None] + sign.factor * b[None, :]
    return x.reshape((-1,) + a.shape[1:])


def _norms(stack, p):
    return np.asarray(schatten_norm(stack, p), dtype=float)


def _norms_many(p, *stacks):
    """Norms of several same-shape stacks with one eigensolver call."""
    sizes = [len(s) for s in stacks]
    flat = _norms(np.concatenate(stacks), p)
    return np.split(flat, np.cumsum(sizes)[:-1])


def _norms_psd(stack, p):
    return np.asarray(lp_of_spectrum(psd_eigenvalues(stack), p), dtype=float)


def _two_sided(case, p, n, d, s_each, s_sum, tol):
    """Reports for ``n^{p-1} S <= T <= S`` (``p <= 1``) or its mirror (``p >= 1``).

    ``s_each`` is the sum of p-th powers, ``s_sum`` the p-th power of the sum.
    """
    c = float(n) ** (p - 1)
    orient = Orientation.EQUALITY if p == 1 else Orientation.LHS_LEQ_RHS
    if p <= 1:
        lower = (c * s_each, s_sum)
        upper = (s_sum, s_each)
    else:
        lower = (s_each, s_sum)
        upper = (s_sum, c * s_each)
    return (
        make_report(case, p, n, d, None, *lower, orient, tol, part="lower"),
        make_report(case, p, n, d, None, *upper, orient, tol, part="upper"),
    )


# ---------------------------------------------------------------------------
# checks


def check_triangle(t, p, tol=VERDICT_TOL):
    """``||sum A_i||_p <= sum ||A_i||_p`` for ``p >= 1``."""
    t = _as_tuple(t)
    p = PExponent.of(p).p
    if p < 1:
        return inapplicable(Case.TRIANGLE, p, t.n, t.d, tol=tol)
    total, own = _norms_many(p, t.total()[None], t.matrices)
    lhs = float(total[0])
    rhs = float(np.sum(own))
    return make_report(Case.TRIANGLE, p, t.n, t.d, None, lhs, rhs, Orientation.LHS_LEQ_RHS, tol)


def check_reverse_triangle_positive(t, p, tol=VERDICT_TOL):
    """``sum ||A_i||_p <= ||sum A_i||_p`` for positive ``A_i`` and ``p <= 1``."""
    _require(t, Constraint.POSITIVE_EACH)
    p = PExponent.of(p).p
    if p > 1:
        return inapplicable(Case.REVERSE_TRIANGLE_POSITIVE, p, t.n, t.d, tol=tol)
    lhs = float(np.sum(_norms_psd(t.matrices, p)))
    rhs = float(_norms_psd(t.total(), p))
    orient = Orientation.EQUALITY if p == 1 else Orientation.LHS_LEQ_RHS
    return make_report(Case.REVERSE_TRIANGLE_POSITIVE, p, t.n, t.d, None, lhs, rhs, orient, tol)


def _lemma(t, p, case, tol):
    s_each = float(np.sum(_norms_psd(t.matrices, p) ** p))
    s_sum = float(_norms_psd(t.total(), p)) ** p
    return _two_sided(case, p, t.n, t.d, s_each, s_sum, tol)


def check_lemma(t, p, tol=VERDICT_TOL):
    """Two-sided power-sum bounds for positive tuples.

    Returns ``(lower, upper)``.  Part (a) applies for ``p <= 1`` and part (b)
    for ``p >= 1``; at ``p = 1`` both sides are equalities.
    """
    _require(t, Constraint.POSITIVE_EACH)
    p = PExponent.of(p).p
    return _lemma(t, p, Case.LEMMA_A if p <= 1 else Case.LEMMA_B, tol)


def check_scalar_power(a, p, tol=VERDICT_TOL):
    """Commutative version of the lemma for nonnegative reals."""
    a = np.asarray(a, dtype=float).ravel()
    if a.size == 0:
        raise PreconditionError("need at least one number")
    if not np.all(np.isfinite(a)) or np.any(a < 0):
        raise PreconditionError("ScalarPower requires finite nonnegative numbers")
    p = PExponent.of(p).p
    s_each = float(np.sum(a**p))
    s_sum = float(np.sum(a)) ** p
    return _two_sided(Case.SCALAR_POWER, p, a.size, 1, s_each, s_sum, tol)


def check_parallelogram(a, b, tol=VERDICT_TOL):
    """``||A+B||_2^2 + ||A-B||_2^2 = 2(||A||_2^2 + ||B||_2^2)``."""
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    if a.shape != b.shape:
        raise PreconditionError(f"shape mismatch: {a.shape} vs {b.shape}")
    lhs = hilbert_schmidt_norm(a + b) ** 2 + hilbert_schmidt_norm(a - b) ** 2
    rhs = 2.0 * (hilbert_schmidt_norm(a) ** 2 + hilbert_schmidt_norm(b) ** 2)
    return make_report(Case.PARALLELOGRAM, 2.0, 2, a.shape[-1], None, lhs, rhs,
                       Orientation.EQUALITY, tol)


def check_lorch_identity(t, tol=VERDICT_TOL):
    """``sum_{i,j} ||A_i - A_j||_2^2 = 2n sum ||A_i||_2^2`` when ``sum A_i = 0``."""
    _require(t, Constraint.SUM_ZERO)
    if t.n < 3:
        raise PreconditionError(f"LorchIdentity needs n >= 3, got n={t.n}")
    m = t.matrices
    lhs = float(np.sum(hilbert_schmidt_norm(_pairs(m, m, Sign.MINUS)) ** 2))
    rhs = 2.0 * t.n * float(np.sum(hilbert_schmidt_norm(m) ** 2))
    return make_report(Case.LORCH_IDENTITY, 2.0, t.n, t.d, None, lhs, rhs,
                       Orientation.EQUALITY, tol)


def _pair_hypothesis(a, b):
    if a.n != b.n or a.shape != b.shape:
        raise PreconditionError(
            f"A and B tuples differ: n={a.n} vs {b.n}, shape={a.shape} vs {b.shape}"
        )
    res = cross_residual(a, b)
    tol = max(a.tol, b.tol)
    if res > tol:
        raise PreconditionError(f"sum_ij A_i* B_j = 0 violated: relative residual {res:.3g}")


def _regime_orientation(p):
    return Orientation.EQUALITY if p == 2 else Orientation.LHS_LEQ_RHS


def check_th1(a, b, p, s, tol=VERDICT_TOL, case=Case.TH1):
    """``c (sum ||A_i||^p + sum ||B_i||^p)`` vs ``sum_{i,j} ||A_i +/- B_j||^p``.

    ``c = 2^{p/2-1} n^{p-1}``; the bound is below the double sum for
    ``p <= 2`` and above it for ``p >= 2``.
    """
    a, b = _as_tuple(a), _as_tuple(b)
    _pair_hypothesis(a, b)
    p = PExponent.of(p).p
    s = Sign.parse(s)
    n = a.n
    pair, na, nb = _norms_many(p, _pairs(a.matrices, b.matrices, s), a.matrices, b.matrices)
    total = float(np.sum(pair**p))
    own = float(np.sum(na**p) + np.sum(nb**p))
    bound = th1_constant(p, n) * own
    orient = _regime_orientation(p)
    lhs, rhs = _oriented(bound, total, orient, p <= 2)
    return make_report(case, p, n, a.d, s, lhs, rhs, orient, tol)


def check_cor1(t, p, s, tol=VERDICT_TOL):
    """Sum-zero specialization of :func:`check_th1` with ``B = A``.

    The bound becomes ``2^{p/2} n^{p-1} sum ||A_i||_p^p``.
    """
    _require(t, Constraint.SUM_ZERO)
    return check_th1(t, t, p, s, tol, case=Case.COR1)


def check_orth_th1(t, p, s, tol=VERDICT_TOL):
    _require(t, Constraint.ORTHOGONAL_RANGES)
    p = PExponent.of(p).p
    s = Sign.parse(s)
    m = t.matrices
    pair, own = _norms_many(p, _pairs(m, m, s), m)
    total = float(np.sum(pair**p))
    bound = orth_th1_constant(p, t.n, s) * float(np.sum(own**p))
    orient = _regime_orientation(p)
    lhs, rhs = _oriented(bound, total, orient, p <= 2)
    return make_report(Case.ORTH_TH1, p, t.n, t.d, s, lhs, rhs, orient, tol)


def check_th2(a, b, p, s, tol=VERDICT_TOL):
    """``sum_{i,j} ||A_i +/- B_j||_p^2`` vs ``n^{2/p} sum ||(|A_i|^2+|B_i|^2)^{1/2}||_p^2``.

    The double sum is the smaller side for ``p <= 2``.
    """
    a, b = _as_tuple(a), _as_tuple(b)
    _pair_hypothesis(a, b)
    p = PExponent.of(p).p
    s = Sign.parse(s)
    n = a.n
    roots = psd_sqrt(gram(a.matrices) + gram(b.matrices))
    pair, own = _norms_many(p, _pairs(a.matrices, b.matrices, s), roots)
    total = float(np.sum(pair**2))
    bound = th2_constant(p, n) * float(np.sum(own**2))
    orient = _regime_orientation(p)
    lhs, rhs = _oriented(total, bound, orient, p <= 2)
    return make_report(Case.TH2, p, n, a.d, s, lhs, rhs, orient, tol)


def check_cor2(t, p, s, tol=VERDICT_TOL):
    _require(t, Constraint.SUM_ZERO)
    p = PExponent.of(p).p
    s = Sign.parse(s)
    m = t.matrices
    pair, own = _norms_many(p, _pairs(m, m, s), m)
    total = float(np.sum(pair**2))
    bound = cor2_constant(p, t.n) * float(np.sum(own**2))
    orient = _regime_orientation(p)
    lhs, rhs = _oriented(total, bound, orient, p <= 2)
    return make_report(Case.COR2, p, t.n, t.d, s, lhs, rhs, orient, tol)


def check_orth_th2(t, p, s, tol=VERDICT_TOL):
    _require(t, Constraint.ORTHOGONAL_RANGES)
    p = PExponent.of(p).p
    s = Sign.parse(s)
    m = t.matrices
    pair, own = _norms_many(p, _pairs(m, m, s), m)
    total = float(np.sum(pair**2))
    bound = orth_th2_constant(p, t.n, s) * float(np.sum(own**2))
    orient = _regime_orientation(p)
    lhs, rhs = _oriented(total, bound, orient, p <= 2)
    return make_report(Case.ORTH_TH2, p, t.n, t.d, s, lhs, rhs, orient, tol)


# ---------------------------------------------------------------------------
# dispatch


def _instance_dims(case, instance):
    if case is Case.SCALAR_POWER:
        return int(np.asarray(instance).size), 1
    if case.paired:
        a = instance[0]
        return a.n, a.d
    if case is Case.PARALLELOGRAM and not isinstance(instance, OperatorTuple):
        return 2, as_matrix(instance[0]).shape[-1]
    return instance.n, instance.d


def _check_hypothesis(case, instance):
    """Raise PreconditionError naming the failed hypothesis."""
    if case is Case.SCALAR_POWER:
        a = np.asarray(instance, dtype=float)
        if a.size == 0 or np.any(a < 0) or not np.all(np.isfinite(a)):
            raise PreconditionError("ScalarPower requires finite nonnegative numbers")
    elif case.paired:
        if not (isinstance(instance, (tuple, list)) and len(instance) == 2):
            raise PreconditionError(f"{case.value} needs a pair of OperatorTuples (A, B)")
        _pair_hypothesis(_as_tuple(instance[0]), _as_tuple(instance[1]))
    elif case is Case.PARALLELOGRAM:
        if len(instance) != 2:
            raise PreconditionError("Parallelogram needs exactly two matrices")
    elif case is Case.TRIANGLE:
        if not isinstance(instance, OperatorTuple):
            raise PreconditionError("Triangle needs an OperatorTuple")
    elif case in (Case.REVERSE_TRIANGLE_POSITIVE, Case.LEMMA_A, Case.LEMMA_B):
        _require(instance, Constraint.POSITIVE_EACH)
    elif case in (Case.LORCH_IDENTITY, Case.COR1, Case.COR2):
        _require(instance, Constraint.SUM_ZERO)
        if case is Case.LORCH_IDENTITY and instance.n < 3:
            raise PreconditionError(f"LorchIdentity needs n >= 3, got n={instance.n}")
    elif case in (Case.ORTH_TH1, Case.ORTH_TH2):
        _require(instance, Constraint.ORTHOGONAL_RANGES)


def in_regime(case, p):
    p = PExponent.of(p).p
    if case is Case.TRIANGLE or case is Case.LEMMA_B:
        return p >= 1
    if case in (Case.REVERSE_TRIANGLE_POSITIVE, Case.LEMMA_A):
        return p <= 1
    if case in (Case.PARALLELOGRAM, Case.LORCH_IDENTITY):
        return p == 2
    return True


def equality_at(case, p):
    """True where the statement is an identity at exponent ``p``."""
    case = Case.parse(case)
    p = PExponent.of(p).p
    if case in (Case.PARALLELOGRAM, Case.LORCH_IDENTITY):
        return True
    if case.signed:
        return p == 2
    if case in (Case.REVERSE_TRIANGLE_POSITIVE, Case.LEMMA_A, Case.LEMMA_B, Case.SCALAR_POWER):
        return p == 1
    return False


def run_case(case, instance, p, tolerance=VERDICT_TOL, sign=None):
    """Evaluate one case on one instance; returns a tuple of reports.

    ``LemmaA``, ``LemmaB`` and ``ScalarPower`` produce a (lower, upper) pair,
    every other case a single report.  ``sign`` is required for the cases
    whose statement carries a ``+/-``.
    """
    case = Case.parse(case)
    p = PExponent.of(p).p
    if case.signed:
        if sign is None:
            raise ParameterError(f"{case.value} needs a sign (plus or minus)")
        sign = Sign.parse(sign)
    else:
        sign = None
    _check_hypothesis(case, instance)
    if not in_regime(case, p):
        n, d = _instance_dims(case, instance)
        return (inapplicable(case, p, n, d, sign, tolerance),)

    tol = tolerance
    if case is Case.TRIANGLE:
        return (check_triangle(instance, p, tol),)
    if case is Case.REVERSE_TRIANGLE_POSITIVE:
        return (check_reverse_triangle_positive(instance, p, tol),)
    if case in (Case.LEMMA_A, Case.LEMMA_B):
        return _lemma(instance, p, case, tol)
    if case is Case.SCALAR_POWER:
        return check_scalar_power(instance, p, tol)
    if case is Case.PARALLELOGRAM:
        a, b = instance
        return (check_parallelogram(a, b, tol),)
    if case is Case.LORCH_IDENTITY:
        return (check_lorch_identity(instance, tol),)
    if case is Case.TH1:
        return (check_th1(instance[0], instance[1], p, sign, tol),)
    if case is Case.COR1:
        return (check_cor1(instance, p, sign, tol),)
    if case is Case.ORTH_TH1:
        return (check_orth_th1(instance, p, sign, tol),)
    if case is Case.TH2:
        return (check_th2(instance[0], instance[1], p, sign, tol),)
    if case is Case.COR2:
        return (check_cor2(instance, p, sign, tol),)
    return (check_orth_th2(instance, p, sign, tol),)
