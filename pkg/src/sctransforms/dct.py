"""The algebra of matrices diagonalized by the cosine matrix.

An element is stored as its parameter vector ``t_0..t_N`` (``N = n // 2``),
the coefficients on the basis ``T_0..T_N``. ``T_i`` has ``(j, k)`` entry
``c[i, j, k] * sqrt(|X_k| / |X_j|)``, where ``c`` counts solutions of
``x + y = k`` in ``X_i × X_j`` under Γ = {±1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import groups
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    ModulusMismatch,
    NotInAlgebra,
    SingularElement,
)
from .exact import ExactQuadratic, exact_zeros
from .transforms import _dct, dct_class_sizes, dct_size


@dataclass(frozen=True, eq=False)
class DctElement:
    n: int
    params: np.ndarray

    def __post_init__(self):
        params = np.asarray(self.params)
        if params.dtype == object or params.dtype.kind not in "iufc":
            raise TypeError(f"parameters must be numeric, got dtype {params.dtype}")
        if params.shape != (dct_size(self.n),):
            raise DimensionMismatch(
                f"n={self.n} needs {dct_size(self.n)} parameters, got shape {params.shape}"
            )
        object.__setattr__(self, "params", params)

    @classmethod
    def basis(cls, n: int, i: int) -> DctElement:
        t = np.zeros(dct_size(n), dtype=np.int64)
        t[i] = 1
        return cls(n, t)


@lru_cache(maxsize=128)
def _constants(n):
    return groups.structure_constants(groups.plus_minus_partition(n))


@lru_cache(maxsize=128)
def _dense_constants(n):
    c = _constants(n).dense()
    c.setflags(write=False)
    return c


def _check_index(n, i):
    if not 0 <= i <= n // 2:
        raise IndexOutOfRange(f"basis index {i} outside 0..{n // 2} for n={n}")


def dct_basis(n: int, i: int) -> np.ndarray:
    """Exact basis matrix ``T_i`` as an object array of :class:`ExactQuadratic`."""
    _check_index(n, i)
    c = _constants(n)
    sizes = dct_class_sizes(n)
    out = exact_zeros((dct_size(n), dct_size(n)))
    for (a, j, k), count in c.counts.items():
        if a != i:
            continue
        if sizes[j] == sizes[k]:
            out[j, k] = ExactQuadratic(count)
        elif sizes[k] > sizes[j]:
            out[j, k] = ExactQuadratic(0, count)
        else:
            # count / sqrt(2) stays in the ring only for even counts
            out[j, k] = ExactQuadratic(0, count).exact_div(2)
    return out


def dct_basis_float(n: int, i: int) -> np.ndarray:
    _check_index(n, i)
    sizes = np.sqrt(dct_class_sizes(n))
    return _dense_constants(n)[i] * (sizes[None, :] / sizes[:, None])


def dct_general(e: DctElement, exact: bool = False) -> np.ndarray:
    """Matrix of ``sum_i t_i T_i`` built from the closed-form entry pattern.

    Border rows and columns carry ``sqrt(|X_a| |X_b|) * t_max``; the
    interior is a Toeplitz part plus a Hankel part. With ``exact=True`` the
    parameters must be integers and the result is an exact object array.
    """
    n = e.n
    t = e.params
    size = dct_size(n)
    sizes = dct_class_sizes(n)
    if exact:
        if t.dtype.kind not in "iu":
            raise TypeError("exact evaluation needs integer parameters")
        t = [ExactQuadratic(int(v)) for v in t]
        root = lambda a, b: ExactQuadratic.sqrt_of(int(a * b))
        out = exact_zeros((size, size))
    else:
        root = lambda a, b: math.sqrt(a * b)
        out = np.zeros((size, size), dtype=np.result_type(t.dtype, float))
    even = n % 2 == 0
    half = n // 2
    for j in range(1, size + 1):
        for k in range(1, size + 1):
            if j == 1 or k == 1:
                out[j - 1, k - 1] = root(sizes[j - 1], sizes[k - 1]) * t[max(j - 1, k - 1)]
            elif even and (j == half + 1 or k == half + 1):
                a, b = half + 1 - j, half + 1 - k
                out[j - 1, k - 1] = root(sizes[a], sizes[b]) * t[max(a, b)]
            else:
                d = abs(k - j)
                out[j - 1, k - 1] = t[min(n - d, d)] + t[min(n - k - j + 2, k + j - 2)]
    return out


def _eigen_matrix(n):
    k = np.arange(dct_size(n), dtype=np.int64)
    return dct_class_sizes(n)[None, :] * np.cos(2 * np.pi * (np.outer(k, k) % n) / n)


def dct_eigenvalues(e: DctElement) -> np.ndarray:
    """``lambda_k = sum_i t_i |X_i| cos(2πik/n)`` for ``k = 0..N``."""
    return _eigen_matrix(e.n) @ e.params


def _as_square(m, size):
    m = np.asarray(m)
    if m.dtype == object:
        m = np.vectorize(complex, otypes=[complex])(m)
        if not np.iscomplexobj(m) or not np.any(m.imag):
            m = m.real
    if m.shape != (size, size):
        raise DimensionMismatch(f"expected a {size}x{size} matrix, got shape {m.shape}")
    return m


def _offdiag_max(h):
    if h.shape[0] < 2:
        return 0.0
    return float(np.max(np.abs(h - np.diag(np.diag(h)))))


def dct_membership(m, n: int, tol: float | None = None) -> DctElement:
    """Recover the parameters of ``m`` or raise :class:`NotInAlgebra`.

    The default tolerance is ``1e-9 * max(1, max|m|)``.
    """
    m = _as_square(m, dct_size(n))
    if tol is None:
        tol = 1e-9 * max(1.0, float(np.max(np.abs(m))) if m.size else 1.0)
    u = _dct(n)
    residual = _offdiag_max(u @ m @ u)
    if residual > tol:
        raise NotInAlgebra(residual, tol)
    element = DctElement(n, m[0] / np.sqrt(dct_class_sizes(n)))
    rebuilt = float(np.max(np.abs(dct_general(element) - m)))
    if rebuilt > tol:
        raise NotInAlgebra(rebuilt, tol)
    return element


def dct_multiply(a: DctElement, b: DctElement) -> DctElement:
    """Product in parameter form, ``sum_ij a_i b_j c[i, j, k]``."""
    if a.n != b.n:
        raise ModulusMismatch(f"cannot multiply elements for n={a.n} and n={b.n}")
    params = np.einsum("i,j,ijk->k", a.params, b.params, _dense_constants(a.n))
    return DctElement(a.n, params)


def dct_solve(e: DctElement, rhs, singular_tol: float = 1e-12) -> np.ndarray:
    """Solve ``T x = rhs`` through the diagonalization ``T = U diag(lambda) U``."""
    rhs = np.asarray(rhs)
    if rhs.shape != (dct_size(e.n),):
        raise DimensionMismatch(f"rhs must have length {dct_size(e.n)}, got shape {rhs.shape}")
    lam = dct_eigenvalues(e)
    bad = np.flatnonzero(np.abs(lam) <= singular_tol)
    if bad.size:
        raise SingularElement(bad, singular_tol)
    u = _dct(e.n)
    return u @ ((u @ rhs) / lam)


def dct_is_generator(n: int, i: int) -> bool:
    """Whether ``T_i`` alone generates the algebra."""
    _check_index(n, i)
    return math.gcd(i, n) == 1
