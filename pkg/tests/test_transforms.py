import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from helpers import maxabs
from sctransforms.errors import DimensionMismatch
from sctransforms.transforms import (
    apply_dft,
    dct_class_sizes,
    dct_matrix,
    dct_size,
    delta,
    dft_matrix,
    dst_matrix,
    dst_size,
    embed_even,
    embed_odd,
    epsilon,
    parity_matrix,
    restrict_even,
    restrict_odd,
    tau,
)

floats = st.floats(-1e3, 1e3, allow_nan=False)


@pytest.mark.parametrize("n, dct_n, dst_n", [(1, 1, 0), (2, 2, 0), (3, 2, 1), (4, 3, 1), (7, 4, 3), (8, 5, 3), (11, 6, 5)])
def test_sizes(n, dct_n, dst_n):
    assert dct_size(n) == dct_n
    assert dst_size(n) == dst_n
    assert dst_size(n) == math.floor((n - 0.25) / 2)


def test_dft_small_values():
    r = 1 / math.sqrt(2)
    np.testing.assert_allclose(dft_matrix(2).entries, [[r, r], [r, -r]], atol=1e-15)
    assert abs(dft_matrix(4).entries[1, 1] - (-0.5j)) < 1e-15


def test_dft_trace_is_gauss_sum():
    assert abs(math.sqrt(5) * np.trace(dft_matrix(5).entries) - math.sqrt(5)) < 1e-12


def test_dft_symmetric_and_read_only():
    f = dft_matrix(9).entries
    np.testing.assert_array_equal(f, f.T)
    with pytest.raises(ValueError):
        f[0, 0] = 0


@pytest.mark.parametrize("n", [1, 2, 3, 7, 16, 31, 64, 127, 256])
def test_unitarity_and_powers(n):
    f = dft_matrix(n).entries
    assert maxabs(f @ f.conj().T - np.eye(n)) <= 1e-10
    f2 = f @ f
    assert maxabs(f2 - parity_matrix(n)) <= 1e-10
    assert maxabs(f2 @ f2 - np.eye(n)) <= 1e-10
    for m in (dct_matrix(n).entries, dst_matrix(n).entries):
        assert maxabs(m @ m.T - np.eye(len(m))) <= 1e-10
        assert maxabs(m - m.T) == 0.0


def test_dft_square_is_not_minus_identity():
    assert maxabs(np.linalg.matrix_power(dft_matrix(5).entries, 2) + np.eye(5)) > 0.5


def test_dct_examples():
    r = math.sqrt(2)
    np.testing.assert_allclose(dct_matrix(2).entries, np.array([[1, 1], [1, -1]]) / r, atol=1e-15)
    np.testing.assert_allclose(dct_matrix(7).entries[0], np.array([1, r, r, r]) / math.sqrt(7), atol=1e-15)
    for n in (4, 6, 10, 12):
        u = dct_matrix(n).entries
        half = n // 2
        assert u[0, 0] == pytest.approx(1 / math.sqrt(n))
        assert u[half, half] == pytest.approx((-1) ** half / math.sqrt(n))


@pytest.mark.parametrize("n", [1, 5, 8, 13])
def test_dct_direct_entries(n):
    u = dct_matrix(n).entries
    sizes = dct_class_sizes(n)
    for j in range(dct_size(n)):
        for k in range(dct_size(n)):
            want = math.sqrt(sizes[j] * sizes[k]) / math.sqrt(n) * math.cos(2 * math.pi * j * k / n)
            assert abs(u[j, k] - want) <= 1e-14


def test_dst_examples():
    assert dst_matrix(2).entries.shape == (0, 0)
    assert dst_matrix(1).entries.shape == (0, 0)
    np.testing.assert_allclose(dst_matrix(3).entries, [[1.0]], atol=1e-15)
    np.testing.assert_allclose(dst_matrix(4).entries, [[1.0]], atol=1e-15)
    w = dst_matrix(11).entries
    assert w.shape == (5, 5)
    for j in range(1, 6):
        for k in range(1, 6):
            assert abs(w[j - 1, k - 1] - 2 / math.sqrt(11) * math.sin(2 * math.pi * j * k / 11)) <= 1e-14


def test_invalid_modulus():
    with pytest.raises(ValueError):
        dft_matrix(0)


@pytest.mark.parametrize("n", [1, 4, 9])
def test_apply_dft_basic(n):
    for j in range(n):
        assert maxabs(apply_dft(epsilon(n, j)) - delta(n, j)) <= 1e-12
        assert maxabs(apply_dft(delta(n, j)) - epsilon(n, j).conj()) <= 1e-12
    assert maxabs(apply_dft(np.ones(n)) - math.sqrt(n) * delta(n, 0)) <= 1e-12
    with pytest.raises(DimensionMismatch):
        apply_dft(np.zeros(0))


@given(st.integers(1, 64), st.data())
def test_apply_dft_preserves_norm(n, data):
    f = data.draw(arrays(float, n, elements=floats))
    assert abs(np.linalg.norm(apply_dft(f)) - np.linalg.norm(f)) <= 1e-10 * max(1.0, np.linalg.norm(f))


def test_embed_examples():
    np.testing.assert_allclose(embed_even(np.eye(4)[0], 7), delta(7, 0).real)
    np.testing.assert_allclose(embed_even(np.eye(4)[1], 7), (delta(7, 1) + delta(7, 6)).real / math.sqrt(2))
    np.testing.assert_allclose(embed_odd(np.zeros(2), 5), np.zeros(5))
    np.testing.assert_allclose(embed_odd(np.eye(2)[0], 5), (delta(5, 1) - delta(5, 4)).real / math.sqrt(2))
    with pytest.raises(DimensionMismatch):
        embed_even(np.zeros(3), 7)
    with pytest.raises(DimensionMismatch):
        embed_odd(np.zeros(3), 5)


@given(st.integers(1, 64), st.data())
def test_restriction_commutes(n, data):
    t = data.draw(arrays(float, dct_size(n), elements=floats))
    s = data.draw(arrays(float, dst_size(n), elements=floats))
    scale = max(1.0, maxabs(t), maxabs(s))
    u, w = dct_matrix(n).entries, dst_matrix(n).entries
    assert maxabs(apply_dft(embed_even(t, n)) - embed_even(u @ t, n)) <= 1e-10 * scale * n
    assert maxabs(apply_dft(embed_odd(s, n)) - embed_odd(-1j * (w @ s), n)) <= 1e-10 * scale * n
    np.testing.assert_allclose(restrict_even(embed_even(t, n), n), t, atol=1e-12 * scale)
    np.testing.assert_allclose(restrict_odd(embed_odd(s, n), n), s, atol=1e-12 * scale)


@given(st.integers(1, 48), st.data())
def test_parity_preserved(n, data):
    g = data.draw(arrays(float, n, elements=floats))
    neg = (-np.arange(n)) % n
    even, odd = apply_dft(g + g[neg]), apply_dft(g - g[neg])
    assert maxabs(even - even[neg]) <= 1e-9
    assert maxabs(odd + odd[neg]) <= 1e-9


@pytest.mark.parametrize("n", [3, 8, 17])
def test_tau_definition(n):
    zeta = cmath.exp(-2j * cmath.pi / n)
    for j in range(n):
        t = tau(n, j)
        for k in range(n):
            assert abs(t[k] - (zeta ** (-j * k) - zeta ** (j * k))) <= 1e-12
            assert abs(t[k] - 2j * math.sin(2 * math.pi * j * k / n)) <= 1e-12
    assert maxabs(tau(n, 0)) == 0.0
