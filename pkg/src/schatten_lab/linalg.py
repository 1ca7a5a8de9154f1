"""Dense complex linear algebra used by the norm and inequality code.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  Every function
accepts a single ``(rows, cols)`` matrix or a stack ``(..., rows, cols)`` and
never mutates its arguments.

Hermitian eigenvalues come from a cyclic complex Jacobi iteration compiled
with numba; singular values and the PSD square root are built on top of it.
"""

import numpy as np
from numba import njit

from .errors import ConvergenceError, DomainError, ShapeError

__all__ = [
    "as_matrix",
    "adjoint",
    "matmul",
    "gram",
    "hermitian_eigenvalues",
    "hermitian_eigh",
    "singular_values",
    "psd_eigenvalues",
    "psd_sqrt",
    "trace_inner",
    "frobenius",
    "JACOBI_TOL",
    "JACOBI_MAX_SWEEPS",
    "SYMMETRY_TOL",
    "CLAMP_TOL",
]

# off-diagonal Frobenius mass <= JACOBI_TOL * diagonal mass
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100
# ||H - H*||_F <= SYMMETRY_TOL * ||H||_F is symmetrized, larger is rejected
SYMMETRY_TOL = 1e-10
# eigenvalues with |lam| <= CLAMP_TOL * lam_max are roundoff and become 0
CLAMP_TOL = 1e-12


def as_matrix(a, name="matrix"):
    """Coerce ``a`` to a finite complex128 array with at least two axes."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim < 2:
        raise ShapeError(f"{name} must have at least 2 dimensions, got shape {m.shape}")
    if m.shape[-1] == 0 or m.shape[-2] == 0:
        raise ShapeError(f"{name} has an empty dimension: {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DomainError(f"{name} contains NaN or Inf entries")
    return m


def adjoint(m):
    """Conjugate transpose over the last two axes."""
    m = as_matrix(m)
    return np.conj(np.swapaxes(m, -1, -2))


def matmul(a, b):
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    if a.shape[-1] != b.shape[-2]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def gram(a):
    """Return ``A* A``, i.e. ``|A|^2``."""
    a = as_matrix(a)
    return np.conj(np.swapaxes(a, -1, -2)) @ a


def frobenius(a):
    """Frobenius norm over the last two axes (direct entrywise sum)."""
    a = np.asarray(a, dtype=np.complex128)
    return np.sqrt(np.sum(a.real**2 + a.imag**2, axis=(-2, -1)))


def trace_inner(a, b):
    """Hilbert-Schmidt inner product ``<A, B> = tr(B* A)``."""
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")
    # tr(B* A) = sum_ij conj(B_ij) A_ij
    return np.sum(np.conj(b) * a, axis=(-2, -1))


# ---------------------------------------------------------------------------
# Jacobi eigensolver


@njit(cache=True, nogil=True)
def _jacobi_inplace(a, v, tol, max_sweeps):
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        diag = 0.0
        for i in range(n):
            diag += a[i, i].real * a[i, i].real
            for j in range(n):
                if i != j:
                    off += a[i, j].real * a[i, j].real + a[i, j].imag * a[i, j].imag
        if off <= tol * tol * diag or off == 0.0:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                # phase rotation makes the (p, q) entry real, then a real
                # Jacobi rotation annihilates it
                ph = np.conj(apq) / r
                theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                u00 = c + 0j
                u01 = s + 0j
                u10 = -s * ph
                u11 = c * ph
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = akp * u00 + akq * u10
                    a[k, q] = akp * u01 + akq * u11
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = np.conj(u00) * apk + np.conj(u10) * aqk
                    a[q, k] = np.conj(u01) * apk + np.conj(u11) * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = vkp * u00 + vkq * u10
                    v[k, q] = vkp * u01 + vkq * u11
    return -1


@njit(cache=True, nogil=True)
def _jacobi_batch(h, tol, max_sweeps):
    b, n, _ = h.shape
    w = np.empty((b, n))
    vecs = np.empty((b, n, n), dtype=np.complex128)
    ok = True
    for idx in range(b):
        a = h[idx].copy()
        v = np.eye(n, dtype=np.complex128)
        if _jacobi_inplace(a, v, tol, max_sweeps) < 0:
            ok = False
        d = np.empty(n)
        for i in range(n):
            d[i] = a[i, i].real
        order = np.argsort(-d)
        for i in range(n):
            w[idx, i] = d[order[i]]
            for k in range(n):
                vecs[idx, k, i] = v[k, order[i]]
    return w, vecs, ok


def _symmetrized(h):
    h = as_matrix(h)
    if h.shape[-1] != h.shape[-2]:
        raise ShapeError(f"expected a square matrix, got shape {h.shape}")
    hh = adjoint(h)
    asym = frobenius(h - hh)
    scale = frobenius(h)
    if np.any(asym > SYMMETRY_TOL * scale):
        raise DomainError(
            f"matrix is not Hermitian: ||H - H*||_F = {float(np.max(asym)):.3g}"
        )
    return 0.5 * (h + hh)


def hermitian_eigh(h):
    """Eigenvalues (nonincreasing) and eigenvectors of a Hermitian matrix.

    Works on stacks.  Returns ``(w, V)`` with ``H = V diag(w) V*``.
    """
    h = _symmetrized(h)
    lead = h.shape[:-2]
    n = h.shape[-1]
    flat = np.ascontiguousarray(h.reshape(-1, n, n))
    w, v, ok = _jacobi_batch(flat, JACOBI_TOL, JACOBI_MAX_SWEEPS)
    if not ok:
        raise ConvergenceError(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")
    return w.reshape(lead + (n,)), v.reshape(lead + (n, n))


def hermitian_eigenvalues(h):
    """Real eigenvalues of a Hermitian matrix, sorted nonincreasing."""
    return hermitian_eigh(h)[0]


def _clamp(w):
    """Zero out eigenvalues within the roundoff band of a PSD spectrum.

    Raises DomainError for eigenvalues below ``-CLAMP_TOL * lam_max``.
    """
    top = np.max(np.abs(w), axis=-1, keepdims=True)
    band = CLAMP_TOL * top
    if np.any(w < -band):
        raise DomainError(
            f"matrix is not positive semidefinite: min eigenvalue {float(np.min(w)):.3g}"
        )
    return np.where(np.abs(w) <= band, 0.0, w)


def singular_values(a):
    """Singular values, nonincreasing, length ``min(rows, cols)``.

    Computed as square roots of the clamped eigenvalues of ``gram(a)``.  The
    input is first divided by its largest entry modulus so the gram matrix
    neither overflows nor underflows.
    """
    a = as_matrix(a)
    k = min(a.shape[-2], a.shape[-1])
    scale = np.max(np.abs(a), axis=(-2, -1), keepdims=True) if a.size else np.ones((1, 1))
    safe = np.where(scale > 0, scale, 1.0)
    w = _clamp(hermitian_eigenvalues(gram(a / safe)))
    return np.sqrt(w[..., :k]) * safe[..., 0]


def psd_eigenvalues(h):
    """Clamped eigenvalues of a Hermitian PSD matrix, nonincreasing."""
    return _clamp(hermitian_eigenvalues(h))


def psd_sqrt(h):
    """The unique Hermitian PSD square root of a PSD matrix."""
    w, v = hermitian_eigh(h)
    w = _clamp(w)
    s = (v * np.sqrt(w)[..., None, :]) @ np.conj(np.swapaxes(v, -1, -2))
    return 0.5 * (s + np.conj(np.swapaxes(s, -1, -2)))
