"""Circulant matrices, the algebra diagonalized by the DFT matrix.

An element is stored as its coefficients ``c_0..c_{n-1}`` on the shifts
``T_i``, which have ones where ``k - j ≡ i (mod n)``. The matrix
``sum_i c_i T_i`` therefore has first row ``c``; the familiar picture with
``c`` running down the first column is its transpose, ``sum_i c_i T_{-i}``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    ModulusMismatch,
    NotInAlgebra,
    SingularElement,
)
from .transforms import _dft


@dataclass(frozen=True, eq=False)
class CirculantElement:
    n: int
    c: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.c)
        if c.dtype == object or c.dtype.kind not in "iufc":
            raise TypeError(f"coefficients must be numeric, got dtype {c.dtype}")
        if c.shape != (self.n,):
            raise DimensionMismatch(f"n={self.n} needs {self.n} coefficients, got shape {c.shape}")
        object.__setattr__(self, "c", c)


def circulant_shift_basis(n: int, i: int) -> np.ndarray:
    if not 0 <= i < n:
        raise IndexOutOfRange(f"shift index {i} outside 0..{n - 1}")
    j = np.arange(n)
    return ((j[None, :] - j[:, None]) % n == i).astype(np.int64)


def circulant_matrix(e: CirculantElement) -> np.ndarray:
    """``M[j, k] = c[(k - j) mod n]``."""
    j = np.arange(e.n)
    return e.c[(j[None, :] - j[:, None]) % e.n]


def circulant_eigenvalues(e: CirculantElement) -> np.ndarray:
    """``lambda_k = sum_i c_i zeta**(i k)``."""
    k = np.arange(e.n, dtype=np.int64)
    zeta = np.exp(-2j * np.pi * (np.outer(k, k) % e.n) / e.n)
    return zeta @ e.c


def circulant_multiply(a: CirculantElement, b: CirculantElement) -> CirculantElement:
    """Cyclic convolution of the coefficient vectors."""
    if a.n != b.n:
        raise ModulusMismatch(f"cannot multiply elements for n={a.n} and n={b.n}")
    n = a.n
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return CirculantElement(n, b.c[idx] @ a.c)


def circulant_solve(e: CirculantElement, rhs, singular_tol: float = 1e-12) -> np.ndarray:
    """Solve ``M x = rhs`` using ``M = F diag(lambda) F*``."""
    rhs = np.asarray(rhs)
    if rhs.shape != (e.n,):
        raise DimensionMismatch(f"rhs must have length {e.n}, got shape {rhs.shape}")
    lam = circulant_eigenvalues(e)
    bad = np.flatnonzero(np.abs(lam) <= singular_tol)
    if bad.size:
        raise SingularElement(bad, singular_tol)
    f = _dft(e.n)
    x = f @ ((f.conj().T @ rhs) / lam)
    if not np.iscomplexobj(rhs) and not np.iscomplexobj(e.c):
        x = x.real
    return x


def circulant_membership(m, n: int, tol: float | None = None) -> CirculantElement:
    """Read back the coefficients of a circulant matrix or raise NotInAlgebra."""
    m = np.asarray(m)
    if m.shape != (n, n):
        raise DimensionMismatch(f"expected a {n}x{n} matrix, got shape {m.shape}")
    if tol is None:
        tol = 1e-9 * max(1.0, float(np.max(np.abs(m))))
    f = _dft(n)
    h = f.conj().T @ m @ f
    residual = float(np.max(np.abs(h - np.diag(np.diag(h))))) if n > 1 else 0.0
    if residual > tol:
        raise NotInAlgebra(residual, tol)
    return CirculantElement(n, m[0].copy())
