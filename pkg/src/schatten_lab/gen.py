"""Seeded generators for matrices and hypothesis-satisfying tuples.

Every generator is a pure function of its :class:`GenConfig`.  Bit streams
come from numpy's ``Philox`` counter-based generator keyed by a 64-bit seed.

Seed splitting
--------------
Element ``k`` of a tuple never shares a stream with element ``k + 1``.  Its
sub-seed is ``derive_seed(seed, role, k)``, where ``derive_seed`` folds each
key into the running state with the SplitMix64 finalizer::

    h = seed
    for key in keys:
        h = splitmix64(h ^ splitmix64(key + 0x9E3779B97F4A7C15))

All arithmetic is modulo 2**64.  ``role`` separates the parts of one
construction (0 for the ``A`` tuple, 1 for ``B``, 2 for shared factors,
3 for the free matrix ``D``).
"""

import enum
from dataclasses import dataclass, replace

import numpy as np

from .errors import ParameterError
from .ineq import Constraint, OperatorTuple
from .linalg import gram

__all__ = [
    "Distribution",
    "GenConfig",
    "splitmix64",
    "derive_seed",
    "make_rng",
    "random_matrix",
    "random_unitary",
    "orthonormalize",
    "random_psd",
    "sum_zero_tuple",
    "mean_center",
    "cross_orthogonal_pair",
    "cross_rank",
    "orthogonal_ranges_tuple",
    "positive_tuple",
    "free_tuple",
    "random_nonnegative",
]

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(x):
    x = (x + _GOLDEN) & _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def derive_seed(seed, *keys):
    h = int(seed) & _MASK
    for key in keys:
        h = splitmix64(h ^ splitmix64((int(key) + _GOLDEN) & _MASK))
    return h


def make_rng(seed):
    return np.random.Generator(np.random.Philox(int(seed) & _MASK))


class Distribution(str, enum.Enum):
    COMPLEX_GAUSSIAN = "gaussian"
    COMPLEX_UNIFORM = "uniform"


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    n: int = 3
    d: int = 4
    distribution: Distribution = Distribution.COMPLEX_GAUSSIAN
    scale: float = 1.0

    def __post_init__(self):
        if not 0 <= int(self.seed) <= _MASK:
            raise ParameterError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.n < 1 or self.d < 1:
            raise ParameterError(f"need n >= 1 and d >= 1, got n={self.n}, d={self.d}")
        if not self.scale > 0:
            raise ParameterError(f"scale must be positive, got {self.scale}")
        object.__setattr__(self, "distribution", Distribution(self.distribution))

    def child(self, *keys):
        return replace(self, seed=derive_seed(self.seed, *keys))


def _entries(rng, shape, cfg):
    if cfg.distribution is Distribution.COMPLEX_GAUSSIAN:
        z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        return cfg.scale * z / np.sqrt(2.0)
    z = rng.uniform(-1.0, 1.0, shape) + 1j * rng.uniform(-1.0, 1.0, shape)
    return cfg.scale * z


def random_matrix(cfg, shape=None):
    """``d x d`` (or ``shape``) matrix with i.i.d. entries, deterministic in the seed."""
    shape = (cfg.d, cfg.d) if shape is None else tuple(shape)
    return _entries(make_rng(cfg.seed), shape, cfg)


def orthonormalize(m):
    """Orthonormal columns spanning ``m``'s column space (QR, phase-fixed).

    The diagonal of ``R`` is rotated to the positive reals so the result is
    unique for full-rank input.
    """
    q, r = np.linalg.qr(m)
    diag = np.diagonal(r, axis1=-2, axis2=-1)
    mag = np.abs(diag)
    phase = np.where(mag > 0, diag / np.where(mag > 0, mag, 1.0), 1.0)
    return q * phase[..., None, :]


def random_unitary(cfg):
    cfg = replace(cfg, distribution=Distribution.COMPLEX_GAUSSIAN)
    return orthonormalize(random_matrix(cfg))


def random_psd(cfg):
    return gram(random_matrix(cfg))


def free_tuple(cfg, role=0):
    return np.stack([random_matrix(cfg.child(role, k)) for k in range(cfg.n)])


def mean_center(matrices):
    """``A_i - (1/n) sum_j A_j``; the result sums to zero."""
    m = np.asarray(matrices, dtype=np.complex128)
    return m - m.mean(axis=0, keepdims=True)


def sum_zero_tuple(cfg):
    """``A_1 .. A_{n-1}`` random, ``A_n = -sum_{i<n} A_i``."""
    if cfg.n < 2:
        raise ParameterError(f"sum-zero tuples need n >= 2, got n={cfg.n}")
    m = free_tuple(replace(cfg, n=cfg.n - 1))
    m = np.concatenate([m, -np.sum(m, axis=0, keepdims=True)])
    return OperatorTuple(m, Constraint.SUM_ZERO)


def cross_rank(cfg):
    """Rank of ``sum A_i`` in :func:`cross_orthogonal_pair`, drawn from ``[1, d-1]``."""
    return int(make_rng(derive_seed(cfg.seed, 2, 0)).integers(1, cfg.d))


def cross_orthogonal_pair(cfg):
    """Tuples ``(A, B)`` with ``(sum A_i)* (sum B_j) = 0``.

    ``sum A_i`` is a random matrix ``C`` of rank ``k`` in ``[1, d-1]`` and
    ``sum B_j = (I - P) D`` with ``P`` the projection onto the range of ``C``
    and ``D`` random, so both sums are generically nonzero.
    """
    d = cfg.d
    if d < 2:
        raise ParameterError(f"cross-orthogonal pairs need d >= 2, got d={d}")
    k = cross_rank(cfg)
    left = random_matrix(cfg.child(2, 1), (d, k))
    right = random_matrix(cfg.child(2, 2), (d, k))
    c = left @ np.conj(right.T)
    q = orthonormalize(left)
    proj = q @ np.conj(q.T)
    dfree = random_matrix(cfg.child(3, 0))
    sb = dfree - proj @ dfree

    a = free_tuple(cfg, role=0)
    b = free_tuple(cfg, role=1)
    a[-1] = c - np.sum(a[:-1], axis=0)
    b[-1] = sb - np.sum(b[:-1], axis=0)
    return OperatorTuple(a), OperatorTuple(b)


def orthogonal_ranges_tuple(cfg):
    """``A_i = U_i G_i*`` with ``U_i`` disjoint column blocks of a unitary.

    Each block has ``r = d // n`` columns; leftover columns are unused.
    """
    n, d = cfg.n, cfg.d
    if d < n:
        raise ParameterError(f"orthogonal ranges need d >= n, got n={n}, d={d}")
    r = d // n
    u = random_unitary(cfg.child(2, 0))
    g = np.stack([random_matrix(cfg.child(1, i), (d, r)) for i in range(n)])
    blocks = np.stack([u[:, i * r:(i + 1) * r] for i in range(n)])
    return OperatorTuple(blocks @ np.conj(np.swapaxes(g, -1, -2)), Constraint.ORTHOGONAL_RANGES)


def positive_tuple(cfg):
    m = np.stack([random_psd(cfg.child(0, k)) for k in range(cfg.n)])
    return OperatorTuple(m, Constraint.POSITIVE_EACH)


def random_nonnegative(cfg):
    """``n`` nonnegative reals uniform on ``[0, scale)``."""
    return cfg.scale * make_rng(cfg.seed).uniform(0.0, 1.0, cfg.n)
