"""Dense DFT, DCT and DST matrices and the even/odd embeddings.

The cosine matrix acts on class coordinates of even functions on Z/nZ
(classes ``{0}, {±1}, …``, 0-based); the sine matrix acts on the odd
coordinates ``1..N`` (1-based). The sine transform is carried by the real
orthogonal matrix ``W``; the unitary restriction of the DFT to odd functions
is ``-1j * W``.

All matrices are evaluated entry by entry from exactly reduced angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatch

DFT, DCT, DST = "DFT", "DCT", "DST"


def dct_size(n: int) -> int:
    return n // 2 + 1


def dst_size(n: int) -> int:
    # floor((n - 1/4) / 2)
    return (n - 1) // 2 if n >= 1 else 0


def dct_class_sizes(n: int) -> np.ndarray:
    j = np.arange(dct_size(n))
    return np.where((2 * j) % n == 0, 1, 2)


@dataclass(frozen=True, eq=False)
class TransformMatrix:
    kind: str
    n: int
    size: int
    entries: np.ndarray

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)


def _check_n(n):
    if int(n) != n or n < 1:
        raise ValueError(f"modulus must be a positive integer, got {n!r}")


def _frozen(a):
    a.setflags(write=False)
    return a


@lru_cache(maxsize=128)
def _dft(n):
    k = np.arange(n, dtype=np.int64)
    return _frozen(np.exp(-2j * np.pi * (np.outer(k, k) % n) / n) / math.sqrt(n))


@lru_cache(maxsize=128)
def _dct(n):
    k = np.arange(dct_size(n), dtype=np.int64)
    sizes = dct_class_sizes(n)
    scale = np.sqrt(np.outer(sizes, sizes)) / math.sqrt(n)
    return _frozen(scale * np.cos(2 * np.pi * (np.outer(k, k) % n) / n))


@lru_cache(maxsize=128)
def _dst(n):
    k = np.arange(1, dst_size(n) + 1, dtype=np.int64)
    return _frozen(2.0 / math.sqrt(n) * np.sin(2 * np.pi * (np.outer(k, k) % n) / n))


def dft_matrix(n: int) -> TransformMatrix:
    """``F[j, k] = zeta**(j*k) / sqrt(n)`` with ``zeta = exp(-2πi/n)``."""
    _check_n(n)
    return TransformMatrix(DFT, n, n, _dft(n))


def dct_matrix(n: int) -> TransformMatrix:
    """Real symmetric orthogonal cosine matrix of size ``n//2 + 1``."""
    _check_n(n)
    return TransformMatrix(DCT, n, dct_size(n), _dct(n))


def dst_matrix(n: int) -> TransformMatrix:
    """Real carrier ``W[j, k] = (2/sqrt(n)) sin(2πjk/n)``, ``j, k = 1..N``.

    Empty for ``n <= 2``.
    """
    _check_n(n)
    return TransformMatrix(DST, n, dst_size(n), _dst(n))


def parity_matrix(n: int) -> np.ndarray:
    """Permutation matrix of ``f(x) -> f(-x)``."""
    p = np.zeros((n, n))
    x = np.arange(n)
    p[x, (-x) % n] = 1.0
    return p


def delta(n: int, j: int) -> np.ndarray:
    f = np.zeros(n, dtype=complex)
    f[j % n] = 1.0
    return f


def epsilon(n: int, j: int) -> np.ndarray:
    """Exponential basis vector ``exp(2πijξ/n) / sqrt(n)``."""
    xi = np.arange(n, dtype=np.int64)
    return np.exp(2j * np.pi * ((j * xi) % n) / n) / math.sqrt(n)


def tau(n: int, j: int, x=None) -> np.ndarray:
    """``zeta**(-j x) - zeta**(j x)``, which equals ``2i sin(2πjx/n)``."""
    x = np.arange(n, dtype=np.int64) if x is None else np.asarray(x, dtype=np.int64)
    r = (j * x) % n
    return np.exp(2j * np.pi * r / n) - np.exp(-2j * np.pi * r / n)


def apply_dft(f) -> np.ndarray:
    """Naive O(n²) unitary DFT of a length-n signal."""
    f = np.asarray(f)
    if f.ndim != 1 or f.size == 0:
        raise DimensionMismatch("signal must be a non-empty vector")
    return _dft(f.size) @ f


def embed_even(t, n: int) -> np.ndarray:
    """Even signal with coordinate ``t[c]`` on the normalized indicator of class c."""
    t = np.asarray(t)
    if t.shape != (dct_size(n),):
        raise DimensionMismatch(f"expected {dct_size(n)} cosine coordinates for n={n}, got {t.shape}")
    x = np.arange(n)
    cls = np.minimum(x, n - x) % n
    return t[cls] / np.sqrt(dct_class_sizes(n)[cls])


def embed_odd(s, n: int) -> np.ndarray:
    t = np.asarray(s)
    size = dst_size(n)
    if t.shape != (size,):
        raise DimensionMismatch(f"expected {size} sine coordinates for n={n}, got {t.shape}")
    f = np.zeros(n, dtype=np.result_type(t.dtype, float))
    j = np.arange(1, size + 1)
    f[j] = t / math.sqrt(2.0)
    f[n - j] = -t / math.sqrt(2.0)
    return f


def restrict_even(f, n: int) -> np.ndarray:
    """Inverse of :func:`embed_even` on even signals."""
    f = np.asarray(f)
    k = np.arange(dct_size(n))
    return f[k] * np.sqrt(dct_class_sizes(n))


def restrict_odd(f, n: int) -> np.ndarray:
    f = np.asarray(f)
    return f[1 : dst_size(n) + 1] * math.sqrt(2.0)
