"""Schatten p-norms and quasi-norms of finite complex matrices."""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .linalg import as_matrix, frobenius, psd_eigenvalues, singular_values

__all__ = [
    "Regime",
    "PExponent",
    "schatten_norm",
    "schatten_norm_psd",
    "hilbert_schmidt_norm",
    "lp_of_spectrum",
]


class Regime(str, enum.Enum):
    QUASI_NORM = "QuasiNorm"
    NORM = "Norm"


@dataclass(frozen=True)
class PExponent:
    """A validated exponent ``0 < p < inf``."""

    p: float

    def __post_init__(self):
        p = float(self.p)
        if not math.isfinite(p) or p <= 0:
            raise DomainError(f"p must be finite and positive, got {self.p!r}")
        object.__setattr__(self, "p", p)

    @classmethod
    def of(cls, p):
        return p if isinstance(p, cls) else cls(p)

    @property
    def regime(self):
        return Regime.QUASI_NORM if self.p < 1 else Regime.NORM

    @property
    def is_two(self):
        return self.p == 2.0

    @property
    def is_le_two(self):
        return self.p <= 2.0

    @property
    def is_ge_two(self):
        return self.p >= 2.0

    def __float__(self):
        return self.p


def lp_of_spectrum(values, p):
    """``(sum v_k^p)^(1/p)`` along the last axis, scaled by the max entry.

    Exact zeros contribute nothing.  Scaling by the largest value keeps extreme
    ``p`` away from overflow and underflow.
    """
    p = float(PExponent.of(p))
    v = np.asarray(values, dtype=float)
    top = np.max(v, axis=-1, keepdims=True) if v.shape[-1] else np.zeros(v.shape[:-1] + (1,))
    safe = np.where(top > 0, top, 1.0)
    ratio = v / safe
    powered = np.zeros_like(ratio)
    np.power(ratio, p, out=powered, where=ratio > 0)
    out = top[..., 0] * np.power(np.sum(powered, axis=-1), 1.0 / p)
    return out if out.ndim else float(out)


def schatten_norm(a, p):
    """Schatten p-norm (a quasi-norm for ``0 < p < 1``) of a matrix or stack.

    >>> schatten_norm(np.diag([3.0, -4.0]), 1)
    7.0
    """
    return lp_of_spectrum(singular_values(a), p)


def schatten_norm_psd(h, p):
    """Schatten p-norm of a Hermitian PSD matrix, read off its eigenvalues.

    This is the path behind ``|| |A|^2 ||_{p/2} = ||A||_p^2``.
    """
    return lp_of_spectrum(psd_eigenvalues(h), p)


def hilbert_schmidt_norm(a):
    """The p = 2 norm, computed entrywise."""
    out = frobenius(as_matrix(a))
    return out if np.ndim(out) else float(out)
