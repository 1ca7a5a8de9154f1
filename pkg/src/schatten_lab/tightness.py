"""Derivative-free search for instances that push a bound toward equality.

The objective is the tightness ratio ``lhs / rhs`` of an oriented report,
i.e. claimed-smaller side over claimed-larger side.  A ratio above
``1 + tolerance`` means the instance violates the bound; the search raises
:class:`~schatten_lab.errors.InequalityViolation` immediately if it ever
visits one, so every run doubles as a fuzzer.

The search is plain hill climbing.  Each restart draws a fresh admissible
instance, perturbs it with complex Gaussian noise, projects back onto the
constraint set, and keeps the candidate only if the ratio strictly improves.
The step shrinks by ``decay`` after every rejected candidate.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .campaign import make_instance, summarize, verify, worker_count
from .errors import DomainError, InequalityViolation, ParameterError
from .gen import (
    GenConfig,
    cross_rank,
    derive_seed,
    free_tuple,
    make_rng,
    mean_center,
    orthonormalize,
    random_matrix,
    random_nonnegative,
)
from .ineq import (
    VERDICT_TOL,
    Case,
    Constraint,
    OperatorTuple,
    Orientation,
    Sign,
    Verdict,
    equality_at,
    in_regime,
    run_case,
)
from .linalg import gram, hermitian_eigh
from .schatten import PExponent

__all__ = [
    "SearchConfig",
    "SearchResult",
    "SweepResult",
    "ratio",
    "optimize_ratio",
    "sweep",
    "search_rows",
]

ILL_CONDITIONED_BELOW = 0.5


def _report_ratio(report):
    lhs, rhs = report.lhs, report.rhs
    if rhs == 0:
        return 0.0 if lhs == 0 else float("inf")
    return lhs / rhs


def ratio(case, instance, p, sign=None, tol=VERDICT_TOL):
    """Weak side over strong side; 0 when both sides vanish.

    For the two-sided statements (lemma, scalar powers) the larger of the two
    ratios is returned.  Raises DomainError where the statement is an
    equality (``p = 2`` for the signed statements) or does not apply.
    """
    return _evaluate(case, instance, p, sign, tol)[0]


def _evaluate(case, instance, p, sign, tol):
    reports = run_case(case, instance, p, tol, sign)
    for r in reports:
        if r.verdict is Verdict.INAPPLICABLE:
            raise DomainError(f"{r.case.value} does not apply at p={r.p}")
        if r.orientation is Orientation.EQUALITY:
            raise DomainError(f"{r.case.value} is an equality at p={r.p}; ratio is degenerate")
    return max(_report_ratio(r) for r in reports), reports


# ---------------------------------------------------------------------------
# search spaces: start state, perturb + project, build instance


def _noise(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def _rms(*arrays):
    total = sum(float(np.sum(np.abs(a) ** 2)) for a in arrays)
    count = sum(a.size for a in arrays)
    return np.sqrt(total / count) if count else 0.0


def _jitter(rng, step, *arrays):
    scale = step * (_rms(*arrays) or 1.0)
    return [a + scale * _noise(rng, a.shape) for a in arrays]


def _normalized(*arrays):
    s = _rms(*arrays)
    return [a / s for a in arrays] if s > 0 else list(arrays)


class _FreeSpace:
    constraint = Constraint.FREE

    def start(self, cfg):
        return (free_tuple(cfg),)

    def perturb(self, state, step, rng):
        return tuple(_normalized(*self.project(_jitter(rng, step, *state))))

    def project(self, arrays):
        return arrays

    def build(self, state):
        return OperatorTuple(state[0], self.constraint)


class _SumZeroSpace(_FreeSpace):
    constraint = Constraint.SUM_ZERO

    def start(self, cfg):
        return (make_instance(Case.COR1, cfg.n, cfg.d, cfg.seed).matrices.copy(),)

    def project(self, arrays):
        return [mean_center(arrays[0])]


class _PositiveSpace(_FreeSpace):
    """State is a stack of factors ``X_i``; the instance is ``X_i* X_i``."""

    constraint = Constraint.POSITIVE_EACH

    def build(self, state):
        return OperatorTuple(gram(state[0]), self.constraint)


class _OrthogonalRangesSpace:
    """State ``(U, G)``: a unitary and per-element factors; ``A_i = U_i G_i*``."""

    def start(self, cfg):
        if cfg.d < cfg.n:
            raise ParameterError(f"orthogonal ranges need d >= n, got n={cfg.n}, d={cfg.d}")
        r = cfg.d // cfg.n
        u = orthonormalize(random_matrix(cfg.child(2, 0)))
        g = np.stack([random_matrix(cfg.child(1, i), (cfg.d, r)) for i in range(cfg.n)])
        return (u, g)

    def perturb(self, state, step, rng):
        u, g = _jitter(rng, step, *state)
        (g,) = _normalized(g)
        return orthonormalize(u), g

    def build(self, state):
        u, g = state
        n, _, r = g.shape
        blocks = np.stack([u[:, i * r:(i + 1) * r] for i in range(n)])
        return OperatorTuple(blocks @ np.conj(np.swapaxes(g, -1, -2)),
                             Constraint.ORTHOGONAL_RANGES)


class _CrossSpace:
    """State ``(A, B, k)``; projection keeps ``sum A`` at rank ``k`` and
    ``sum B`` orthogonal to its range."""

    def start(self, cfg):
        a, b = make_instance(Case.TH1, cfg.n, cfg.d, cfg.seed)
        return a.matrices.copy(), b.matrices.copy(), cross_rank(cfg)

    def perturb(self, state, step, rng):
        a, b, k = state
        a, b = _jitter(rng, step, a, b)
        sa = np.sum(a, axis=0)
        _, vecs = hermitian_eigh(sa @ np.conj(sa.T))
        q = vecs[:, :k]
        proj = q @ np.conj(q.T)
        a[-1] += proj @ sa - sa
        b[-1] -= proj @ np.sum(b, axis=0)
        a, b = _normalized(a, b)
        return a, b, k

    def build(self, state):
        a, b, _ = state
        return OperatorTuple(a), OperatorTuple(b)


class _ScalarSpace:
    def start(self, cfg):
        return random_nonnegative(cfg)

    def perturb(self, state, step, rng):
        x = np.abs(state + step * (_rms(state) or 1.0) * rng.standard_normal(state.shape))
        s = _rms(x)
        return x / s if s > 0 else x

    def build(self, state):
        return state


def _space(case):
    if case is Case.TRIANGLE:
        return _FreeSpace()
    if case in (Case.COR1, Case.COR2):
        return _SumZeroSpace()
    if case in (Case.REVERSE_TRIANGLE_POSITIVE, Case.LEMMA_A, Case.LEMMA_B):
        return _PositiveSpace()
    if case in (Case.ORTH_TH1, Case.ORTH_TH2):
        return _OrthogonalRangesSpace()
    if case.paired:
        return _CrossSpace()
    if case is Case.SCALAR_POWER:
        return _ScalarSpace()
    raise DomainError(f"{case.value} is an identity; there is nothing to tighten")


# ---------------------------------------------------------------------------
# search


@dataclass(frozen=True)
class SearchConfig:
    case: Case
    p: float
    n: int = 3
    d: int = 4
    sign: Sign | None = Sign.MINUS
    restarts: int = 16
    steps: int = 400
    step_size: float = 0.5
    decay: float = 0.95
    seed: int = 0
    tol: float = VERDICT_TOL

    def __post_init__(self):
        case = Case.parse(self.case)
        object.__setattr__(self, "case", case)
        object.__setattr__(self, "p", PExponent.of(self.p).p)
        object.__setattr__(self, "sign", Sign.parse(self.sign) if case.signed else None)
        if case.signed and self.sign is None:
            raise ParameterError(f"{case.value} needs a sign")
        if self.restarts < 1 or self.steps < 1:
            raise ParameterError("restarts and steps must be >= 1")
        if not self.step_size > 0:
            raise ParameterError(f"step size must be positive, got {self.step_size}")
        if not 0 < self.decay < 1:
            raise ParameterError(f"decay must lie in (0, 1), got {self.decay}")
        if self.n < 1 or self.d < 1:
            raise ParameterError("n and d must be >= 1")
        if not 0 <= int(self.seed) < 2**64:
            raise ParameterError("seed must be a 64-bit unsigned integer")

    @property
    def ill_conditioned(self):
        return self.p < ILL_CONDITIONED_BELOW


@dataclass(frozen=True)
class SearchResult:
    config: SearchConfig
    best_ratio: float
    best_instance: object
    best_restart: int
    best_step: int
    trace: tuple  # (restart, step, ratio), strictly increasing in ratio
    evaluations: int
    note: str = ""


def _run_restart(cfg, space, restart):
    gcfg = GenConfig(seed=derive_seed(cfg.seed, restart, 0), n=cfg.n, d=cfg.d)
    rng = make_rng(derive_seed(cfg.seed, restart, 1))

    def score(state):
        instance = space.build(state)
        value, reports = _evaluate(cfg.case, instance, cfg.p, cfg.sign, cfg.tol)
        bad = [r for r in reports if r.verdict is Verdict.VIOLATED]
        if bad:
            raise InequalityViolation(
                f"{cfg.case.value} violated at p={cfg.p} (restart {restart})",
                report=bad[0], instance=instance,
            )
        return value

    state = space.start(gcfg)
    current = score(state)
    best_state, trace = state, [(0, current)]
    step = cfg.step_size
    for k in range(1, cfg.steps + 1):
        candidate = space.perturb(state, step, rng)
        value = score(candidate)
        if value > current:
            state, current = candidate, value
            best_state = state
            trace.append((k, value))
        else:
            step *= cfg.decay
    return current, best_state, trace


def optimize_ratio(cfg, workers=None):
    """Hill-climb the tightness ratio of ``cfg.case`` at ``cfg.p``.

    Deterministic in ``cfg``.  Restarts are independent; the best one wins,
    with ties going to the lowest restart index.
    """
    if not in_regime(cfg.case, cfg.p):
        raise DomainError(f"{cfg.case.value} does not apply at p={cfg.p}")
    if equality_at(cfg.case, cfg.p):
        raise DomainError(
            f"{cfg.case.value} is an equality at p={cfg.p}; the ratio is identically 1"
        )
    space = _space(cfg.case)
    workers = worker_count() if workers is None else workers
    restarts = range(cfg.restarts)
    if workers > 1 and cfg.restarts > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(lambda r: _run_restart(cfg, space, r), restarts))
    else:
        runs = [_run_restart(cfg, space, r) for r in restarts]

    best, best_restart, best_step, best_state = -1.0, 0, 0, None
    trace = []
    for r, (value, state, local) in enumerate(runs):
        for step, v in local:
            if v > best:
                best, best_restart, best_step, best_state = v, r, step, state
                trace.append((r, step, v))
    if best > 1 + cfg.tol:
        raise InequalityViolation(f"best ratio {best!r} exceeds 1 + {cfg.tol}")
    note = "ill-conditioned regime" if cfg.ill_conditioned else ""
    return SearchResult(
        config=cfg, best_ratio=best, best_instance=space.build(best_state),
        best_restart=best_restart, best_step=best_step, trace=tuple(trace),
        evaluations=cfg.restarts * (cfg.steps + 1), note=note,
    )


def search_rows(result, include_trace=True):
    """CSV records for a search: the trace, then the best line flagged ``best=1``."""
    cfg = result.config
    base = dict(case=cfg.case, p=cfg.p, n=cfg.n, d=cfg.d, sign=cfg.sign, seed=cfg.seed)
    rows = []
    if include_trace:
        rows = [dict(base, restart=r, step=s, ratio=v, best=False) for r, s, v in result.trace]
    rows.append(dict(base, restart=result.best_restart, step=result.best_step,
                     ratio=result.best_ratio, best=True))
    return rows


@dataclass(frozen=True)
class SweepResult:
    case: Case
    mode: str
    grid: tuple
    rows: tuple  # SearchResult per grid point (search) or summary dicts (verify)


def _equality_point(cfg):
    """Search mode at an equality exponent: one seeded instance, no search."""
    instance = make_instance(cfg.case, cfg.n, cfg.d, derive_seed(cfg.seed, 0, 0))
    reports = run_case(cfg.case, instance, cfg.p, cfg.tol, cfg.sign)
    value = max(min(r.lhs, r.rhs) / max(r.lhs, r.rhs) if max(r.lhs, r.rhs) > 0 else 0.0
                for r in reports)
    return SearchResult(
        config=cfg, best_ratio=value, best_instance=instance, best_restart=0,
        best_step=0, trace=((0, 0, value),), evaluations=1,
        note="equality regime (not searched)",
    )


def sweep(case, p_grid, base, mode="search", trials=100, workers=None):
    """One row per exponent in ``p_grid``.

    ``base`` is a :class:`SearchConfig` whose ``p`` is overridden per grid
    point.  ``mode="search"`` runs :func:`optimize_ratio`; ``mode="verify"``
    runs ``trials`` seeded checks and summarizes the verdicts.
    """
    case = Case.parse(case)
    grid = tuple(PExponent.of(p).p for p in p_grid)
    if not grid:
        raise ParameterError("empty p grid")
    if mode not in ("search", "verify"):
        raise ParameterError(f"unknown sweep mode {mode!r}")
    for p in grid:
        if not in_regime(case, p):
            raise ParameterError(f"p={p} lies outside the regime of {case.value}")
    rows = []
    for p in grid:
        cfg = replace(base, case=case, p=p)
        if mode == "verify":
            reports = verify([case], [p], ns=[cfg.n], ds=[cfg.d], trials=trials,
                             seed=cfg.seed, tol=cfg.tol, workers=workers)
            if cfg.sign is not None:
                reports = [r for r in reports if r.sign is cfg.sign]
            applicable = [r.rel_slack for r in reports if r.verdict is not Verdict.INAPPLICABLE]
            rows.append(dict(
                case=case, p=p, n=cfg.n, d=cfg.d, sign=cfg.sign, trials=trials,
                **{k.lower(): v for k, v in summarize(reports).items()},
                min_rel_slack=min(applicable) if applicable else float("nan"),
                seed=cfg.seed,
            ))
            continue
        if equality_at(case, p):
            rows.append(_equality_point(cfg))
        else:
            rows.append(optimize_ratio(cfg, workers))
    return SweepResult(case=case, mode=mode, grid=grid, rows=tuple(rows))
