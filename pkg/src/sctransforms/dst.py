"""The algebra of matrices diagonalized by the sine matrix.

Two parametrizations are supported. The S-form stores the first row
``s_1..s_N`` of the matrix; it exists for every n. The T-form (odd n only)
stores coefficients ``t_1..t_N`` with matrix entries
``t[j+k] - t[j-k]`` after folding indices into ``1..N`` with ``t_0 = 0``.
That matrix equals ``sum_i (-t_i) T_i`` for the combinatorial basis
``T_i[j, k] = x(i, j-k) - x(i, j+k)``, where ``x(i, m)`` is 1 exactly when
``m ≡ ±i (mod n)``.

Everything is computed with the real carrier ``W``; ``W M W`` is diagonal
exactly when ``M`` is in the algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    DimensionMismatch,
    EvenModulus,
    IndexOutOfRange,
    NotInAlgebra,
    SingularConversion,
    SingularElement,
)
from .transforms import _dst, dst_size


def _vector(values, n, what):
    values = np.asarray(values)
    if values.dtype == object or values.dtype.kind not in "iufc":
        raise TypeError(f"{what} must be numeric, got dtype {values.dtype}")
    if values.shape != (dst_size(n),):
        raise DimensionMismatch(f"n={n} needs {dst_size(n)} {what}, got shape {values.shape}")
    return values


@dataclass(frozen=True, eq=False)
class DstElementS:
    """Element given by its first row ``s_1..s_N``."""

    n: int
    s: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "s", _vector(self.s, self.n, "first-row parameters"))

    @classmethod
    def basis(cls, n: int, i: int) -> DstElementS:
        _check_index(n, i)
        s = np.zeros(dst_size(n), dtype=np.int64)
        s[i - 1] = 1
        return cls(n, s)


@dataclass(frozen=True, eq=False)
class DstElementT:
    """Element ``[t[j+k] - t[j-k]]`` for odd n."""

    n: int
    t: np.ndarray

    def __post_init__(self):
        if self.n % 2 == 0:
            raise EvenModulus(f"the T-form needs odd n, got {self.n}")
        object.__setattr__(self, "t", _vector(self.t, self.n, "T-form parameters"))


def _check_index(n, i):
    if not 1 <= i <= dst_size(n):
        raise IndexOutOfRange(f"basis index {i} outside 1..{dst_size(n)} for n={n}")


def _fold(a, n):
    a = np.mod(a, n)
    return np.minimum(a, n - a)


def _residue_indexed(values, n):
    """Lay out ``v_1..v_N`` by residue with zeros at 0 and n/2."""
    out = np.zeros(n // 2 + 1, dtype=np.result_type(values.dtype, float))
    out[1 : dst_size(n) + 1] = values
    return out


def dst_s_general(e: DstElementS) -> np.ndarray:
    """Dense matrix with first row ``s``.

    Entry ``(j, k)`` is ``sum_{l=1}^{min(j,k)} sgn(n/2 - a) s_{min(a, n-a)}``
    with ``a = |k-j| + 2l - 1``. Integer parameters give an integer matrix.
    """
    n = e.n
    if dst_size(n) == 0:
        return np.zeros((0, 0), dtype=e.s.dtype)
    s = _residue_indexed(e.s, n)
    if np.iscomplexobj(s):
        return kernels.dst_s_matrix(n, s.real) + 1j * kernels.dst_s_matrix(n, s.imag)
    out = kernels.dst_s_matrix(n, s)
    if e.s.dtype.kind in "iu":
        return np.rint(out).astype(np.int64)
    return out


def dst_s_basis(n: int, i: int) -> np.ndarray:
    return dst_s_general(DstElementS.basis(n, i))


def dst_t_basis(n: int, i: int) -> np.ndarray:
    """``T_i[j, k] = x(i, j-k) - x(i, j+k)``, 1-based, entries in {-1, 0, 1}."""
    _check_index(n, i)
    j = np.arange(1, dst_size(n) + 1)
    member = lambda m: (_fold(m, n) == i).astype(np.int64)
    return member(j[:, None] - j[None, :]) - member(j[:, None] + j[None, :])


def dst_t_general(e: DstElementT) -> np.ndarray:
    """``t[fold(j+k)] - t[fold(j-k)]`` with ``t[0] = 0``."""
    n = e.n
    t = np.concatenate([np.zeros(1, dtype=e.t.dtype), e.t])
    j = np.arange(1, dst_size(n) + 1)
    return t[_fold(j[:, None] + j[None, :], n)] - t[_fold(j[:, None] - j[None, :], n)]


def _t_to_first_row(n):
    size = dst_size(n)
    a = np.zeros((size, size))
    for i in range(size):
        a[:, i] = dst_t_general(DstElementT(n, np.eye(size)[i]))[0]
    return a


def dst_convert(e):
    """Switch between the S-form and T-form of the same matrix (odd n)."""
    if not isinstance(e, (DstElementS, DstElementT)):
        raise TypeError(f"expected DstElementS or DstElementT, got {type(e).__name__}")
    if e.n % 2 == 0:
        raise EvenModulus(f"the T-form needs odd n, got {e.n}")
    if isinstance(e, DstElementT):
        return DstElementS(e.n, dst_t_general(e)[0] if dst_size(e.n) else e.t)
    if dst_size(e.n) == 0:
        return DstElementT(e.n, e.s)
    try:
        t = np.linalg.solve(_t_to_first_row(e.n), e.s)
    except np.linalg.LinAlgError as exc:
        raise SingularConversion(f"first-row system is singular for n={e.n}") from exc
    return DstElementT(e.n, t)


def dst_eigenvalues(e) -> np.ndarray:
    """Eigenvalues on the columns of ``W``, ``k = 1..N``."""
    n = e.n
    k = np.arange(1, dst_size(n) + 1, dtype=np.int64)
    if isinstance(e, DstElementT):
        return -2.0 * np.cos(2 * np.pi * (np.outer(k, k) % n) / n) @ e.t
    ratio = np.sin(2 * np.pi * (np.outer(k, k) % n) / n) / np.sin(2 * np.pi * k / n)[:, None]
    return ratio @ e.s


def dst_t_basis_eigenvalues(n: int, i: int) -> np.ndarray:
    _check_index(n, i)
    k = np.arange(1, dst_size(n) + 1, dtype=np.int64)
    return 2.0 * np.cos(2 * np.pi * ((i * k) % n) / n)


def dst_t_is_generator(n: int, i: int) -> bool:
    _check_index(n, i)
    return math.gcd(i, n) == 1


def dst_membership(m, n: int, tol: float | None = None) -> DstElementS:
    m = np.asarray(m)
    size = dst_size(n)
    if m.shape != (size, size):
        raise DimensionMismatch(f"expected a {size}x{size} matrix, got shape {m.shape}")
    if tol is None:
        tol = 1e-9 * max(1.0, float(np.max(np.abs(m))) if m.size else 1.0)
    w = _dst(n)
    h = w @ m @ w
    residual = float(np.max(np.abs(h - np.diag(np.diag(h))))) if size > 1 else 0.0
    if residual > tol:
        raise NotInAlgebra(residual, tol)
    element = DstElementS(n, m[0].copy() if size else np.zeros(0))
    if size:
        rebuilt = float(np.max(np.abs(dst_s_general(element) - m)))
        if rebuilt > tol:
            raise NotInAlgebra(rebuilt, tol)
    return element


def dst_solve(e: DstElementS, rhs, singular_tol: float = 1e-12) -> np.ndarray:
    """Solve ``S x = rhs`` as ``x = W ((W rhs) / lambda)``."""
    rhs = np.asarray(rhs)
    if rhs.shape != (dst_size(e.n),):
        raise DimensionMismatch(f"rhs must have length {dst_size(e.n)}, got shape {rhs.shape}")
    lam = dst_eigenvalues(e)
    bad = np.flatnonzero(np.abs(lam) <= singular_tol)
    if bad.size:
        raise SingularElement(bad + 1, singular_tol)
    w = _dst(e.n)
    return w @ ((w @ rhs) / lam)


def cross_sum_check(m, tol: float = 0.0) -> list[tuple[int, int]]:
    """Cells ``(i, j)`` (1-based) where the cross-sum rule fails.

    The rule is ``a[i-1, j] + a[i+1, j] == a[i, j-1] + a[i, j+1]`` with
    zero padding outside the matrix. An empty list means the matrix passes.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"cross-sum check needs a square matrix, got shape {m.shape}")
    p = np.pad(m, 1)
    gap = (p[:-2, 1:-1] + p[2:, 1:-1]) - (p[1:-1, :-2] + p[1:-1, 2:])
    rows, cols = np.nonzero(np.abs(gap) > tol)
    return [(int(i) + 1, int(j) + 1) for i, j in zip(rows, cols)]
