import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schatten_lab.errors import DomainError, ShapeError
from schatten_lab.gen import GenConfig, random_matrix, random_psd, random_unitary
from schatten_lab.linalg import (
    adjoint,
    gram,
    hermitian_eigh,
    hermitian_eigenvalues,
    matmul,
    psd_sqrt,
    singular_values,
    trace_inner,
)

SQ3 = math.sqrt(3.0)
seeds = st.integers(min_value=0, max_value=2**64 - 1)
dims = st.integers(min_value=1, max_value=7)


def test_adjoint_conjugates():
    assert adjoint([[1j]])[0, 0] == -1j
    np.testing.assert_array_equal(adjoint([[1, 2], [3, 4]]), [[1, 3], [2, 4]])


def test_matmul_shape_error():
    with pytest.raises(ShapeError):
        matmul(np.eye(2), np.eye(3))


def test_matmul_nilpotent():
    np.testing.assert_array_equal(matmul([[0, 1], [0, 0]], [[0, 1], [0, 0]]), np.zeros((2, 2)))


def test_gram_of_diagonal():
    np.testing.assert_allclose(gram(np.diag([3.0, -4.0])), np.diag([9.0, 16.0]))


@pytest.mark.parametrize("h, expected", [
    (np.diag([4.0, 0.0]), [4.0, 0.0]),
    ([[2, 1], [1, 2]], [3.0, 1.0]),
    ([[2, 2], [2, 2]], [4.0, 0.0]),
    ([[2, 1j], [-1j, 2]], [3.0, 1.0]),
])
def test_eigenvalues_small(h, expected):
    np.testing.assert_allclose(hermitian_eigenvalues(h), expected, atol=1e-14)


def test_eigenvalues_rejects_bad_input():
    with pytest.raises(ShapeError):
        hermitian_eigenvalues(np.ones((2, 3)))
    with pytest.raises(DomainError):
        hermitian_eigenvalues([[1, 2], [0, 1]])


@settings(max_examples=40, deadline=None)
@given(seeds, dims)
def test_eigh_reconstructs(seed, d):
    a = random_matrix(GenConfig(seed=seed, d=d))
    h = a + adjoint(a)
    w, v = hermitian_eigh(h)
    assert np.all(np.diff(w) <= 0)
    np.testing.assert_allclose(v @ np.diag(w) @ adjoint(v), h, atol=1e-12 * max(1, abs(w).max()))
    np.testing.assert_allclose(adjoint(v) @ v, np.eye(d), atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(seeds, dims)
def test_singular_values_match_lapack(seed, d):
    a = random_matrix(GenConfig(seed=seed, d=d))
    ref = np.linalg.svd(a, compute_uv=False)
    np.testing.assert_allclose(singular_values(a), ref, rtol=1e-10, atol=1e-12 * ref[0])


def test_singular_values_nonsquare():
    a = np.arange(6.0).reshape(2, 3)
    ref = np.linalg.svd(a, compute_uv=False)
    got = singular_values(a)
    np.testing.assert_allclose(got[: ref.size], ref, atol=1e-12)


def test_singular_values_of_stack():
    stack = np.stack([np.diag([3.0, -4.0]), np.array([[0, 1], [0, 0]])])
    np.testing.assert_allclose(singular_values(stack), [[4.0, 3.0], [1.0, 0.0]], atol=1e-14)


def test_unitary_gram_is_identity():
    u = random_unitary(GenConfig(seed=3, d=5))
    np.testing.assert_allclose(gram(u), np.eye(5), atol=1e-13)


def test_psd_sqrt_2112():
    expected = np.array([[SQ3 + 1, SQ3 - 1], [SQ3 - 1, SQ3 + 1]]) / 2
    np.testing.assert_allclose(psd_sqrt([[2, 1], [1, 2]]), expected, rtol=1e-14)


def test_psd_sqrt_rejects_indefinite():
    with pytest.raises(DomainError):
        psd_sqrt(np.diag([1.0, -1.0]))


@settings(max_examples=30, deadline=None)
@given(seeds, dims)
def test_psd_sqrt_squares_back(seed, d):
    h = random_psd(GenConfig(seed=seed, d=d))
    r = psd_sqrt(h)
    np.testing.assert_allclose(r, adjoint(r), atol=1e-12)
    np.testing.assert_allclose(r @ r, h, atol=1e-10 * max(1.0, np.abs(h).max()))


def test_trace_inner():
    assert trace_inner(np.eye(2), np.eye(2)) == pytest.approx(2.0)
    assert trace_inner(np.diag([1.0, 2.0]), np.diag([3.0, 4.0])) == pytest.approx(11.0)
    a = random_matrix(GenConfig(seed=4))
    b = random_matrix(GenConfig(seed=5))
    assert trace_inner(a, b) == pytest.approx(np.conj(trace_inner(b, a)), rel=1e-13)
