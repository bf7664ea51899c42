"""Exact arithmetic in the ring Z[√2].

Entries of the cosine basis matrices are always among 0, 1, 2 and √2, so
the basis can be produced and compared without any rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Integral

import numpy as np

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True, slots=True)
class ExactQuadratic:
    """The number ``a + b√2`` with integer ``a`` and ``b``."""

    a: int = 0
    b: int = 0

    def __post_init__(self):
        if not isinstance(self.a, Integral) or not isinstance(self.b, Integral):
            raise TypeError(f"coefficients must be integers, got {self.a!r}, {self.b!r}")
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "b", int(self.b))

    @classmethod
    def coerce(cls, value) -> ExactQuadratic:
        if isinstance(value, ExactQuadratic):
            return value
        if isinstance(value, Integral):
            return cls(int(value), 0)
        raise TypeError(f"cannot represent {value!r} exactly in Z[sqrt2]")

    @classmethod
    def sqrt_of(cls, k: int) -> ExactQuadratic:
        """√k for k in {0, 1, 2, 4}."""
        table = {0: cls(0, 0), 1: cls(1, 0), 2: cls(0, 1), 4: cls(2, 0)}
        try:
            return table[k]
        except KeyError:
            raise ValueError(f"sqrt({k}) is not in Z[sqrt2]") from None

    def __repr__(self) -> str:
        return f"ExactQuadratic({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = {1: "√2", -1: "-√2"}.get(self.b, f"{self.b}√2")
        if self.a == 0:
            return root
        return f"{self.a}{'+' if self.b > 0 else ''}{root}"

    def __float__(self) -> float:
        return math.fsum((float(self.a), self.b * SQRT2))

    def __complex__(self) -> complex:
        return complex(float(self))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactQuadratic):
            return self.a == other.a and self.b == other.b
        if isinstance(other, Integral):
            return self.b == 0 and self.a == int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __neg__(self) -> ExactQuadratic:
        return ExactQuadratic(-self.a, -self.b)

    def __pos__(self) -> ExactQuadratic:
        return self

    def __add__(self, other):
        try:
            other = ExactQuadratic.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactQuadratic(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = ExactQuadratic.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactQuadratic(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = ExactQuadratic.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactQuadratic(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def conj(self) -> ExactQuadratic:
        """Galois conjugate ``a - b√2``."""
        return ExactQuadratic(self.a, -self.b)

    @property
    def norm(self) -> int:
        return self.a * self.a - 2 * self.b * self.b

    def exact_div(self, d: int) -> ExactQuadratic:
        """Divide by an integer, raising if the quotient leaves the ring."""
        if d == 0:
            raise ZeroDivisionError("division by zero")
        if self.a % d or self.b % d:
            raise ArithmeticError(f"{self} is not divisible by {d} in Z[sqrt2]")
        return ExactQuadratic(self.a // d, self.b // d)


ZERO = ExactQuadratic(0, 0)
ONE = ExactQuadratic(1, 0)
ROOT2 = ExactQuadratic(0, 1)


def exact_array(rows) -> np.ndarray:
    """Object array of :class:`ExactQuadratic` from nested ints or pairs."""
    src = np.asarray(rows, dtype=object)
    out = np.empty(src.shape, dtype=object)
    for idx, value in np.ndenumerate(src):
        out[idx] = ExactQuadratic.coerce(value)
    return out


def exact_zeros(shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(ZERO)
    return out


def to_float(matrix: np.ndarray) -> np.ndarray:
    """Float view of an exact object array; numeric arrays pass through."""
    matrix = np.asarray(matrix)
    if matrix.dtype != object:
        return matrix
    return np.vectorize(float, otypes=[float])(matrix) if matrix.size else matrix.astype(float)


def is_exact(matrix) -> bool:
    matrix = np.asarray(matrix)
    return matrix.dtype == object and all(isinstance(v, ExactQuadratic) for v in matrix.flat)
