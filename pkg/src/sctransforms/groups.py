"""Supercharacter theories on Z/nZ induced by subgroups of the unit group.

A subgroup Γ of (Z/nZ)^× acts on Z/nZ by multiplication. Its orbits are the
superclasses; summing the exponential characters over an orbit gives a
supercharacter. This module builds the orbit partition, the supercharacter
table, the structure constants, and the unitary matrix and basis matrices
they determine.

Classes are always indexed by least representative, so class 0 is ``{0}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import IndexOutOfRange, ModulusMismatch, NonUnitGenerator


def _readonly(a):
    a = np.asarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class CyclicGroup:
    """The additive group Z/nZ with root of unity ``zeta = exp(-2πi/n)``."""

    n: int

    def __post_init__(self):
        if int(self.n) < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")

    def zeta_power(self, e):
        """``zeta**e`` evaluated from the reduced angle (no repeated products)."""
        r = np.mod(np.asarray(e, dtype=np.int64), self.n)
        return np.exp(-2j * np.pi * r / self.n)


@dataclass(frozen=True)
class UnitSubgroup:
    n: int
    generators: tuple[int, ...]
    elements: tuple[int, ...]

    def __contains__(self, x) -> bool:
        return int(x) % self.n in self.elements

    def __len__(self) -> int:
        return len(self.elements)


def make_unit_subgroup(n: int, generators=()) -> UnitSubgroup:
    """Multiplicative closure of ``{1} ∪ generators`` modulo ``n``."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    generators = list(generators)
    gens = tuple(int(g) % n for g in generators)
    for g, raw in zip(gens, generators):
        if math.gcd(g, n) != 1:
            raise NonUnitGenerator(n, raw)
    elements = {1 % n}
    frontier = list(elements)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = (x * g) % n
            if y not in elements:
                elements.add(y)
                frontier.append(y)
    return UnitSubgroup(n, gens, tuple(sorted(elements)))


def unit_group(n: int) -> tuple[int, ...]:
    return tuple(x for x in range(n) if math.gcd(x, n) == 1) if n > 1 else (0,)


def all_unit_subgroups(n: int) -> list[UnitSubgroup]:
    """Every subgroup of (Z/nZ)^×, smallest first."""
    units = unit_group(n)
    seen = {}
    trivial = make_unit_subgroup(n, ())
    seen[trivial.elements] = trivial
    frontier = [trivial]
    while frontier:
        nxt = []
        for sub in frontier:
            for u in units:
                if u in sub.elements:
                    continue
                bigger = make_unit_subgroup(n, sub.generators + (u,))
                if bigger.elements not in seen:
                    seen[bigger.elements] = bigger
                    nxt.append(bigger)
        frontier = nxt
    return sorted(seen.values(), key=lambda s: (len(s.elements), s.elements))


@dataclass(frozen=True)
class OrbitPartition:
    n: int
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    class_sizes: tuple[int, ...]
    gamma: UnitSubgroup | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    @property
    def class_of_array(self) -> np.ndarray:
        return np.asarray(self.class_of, dtype=np.int64)


def orbit_partition(n: int, gamma: UnitSubgroup) -> OrbitPartition:
    """Partition Z/nZ into Γ-orbits, ordered by least element."""
    if gamma.n != n:
        raise ModulusMismatch(f"subgroup lives mod {gamma.n}, partition requested mod {n}")
    labels = kernels.orbit_labels(n, np.asarray(gamma.elements, dtype=np.int64))
    m = int(labels.max()) + 1
    classes = [[] for _ in range(m)]
    for x, lab in enumerate(labels):
        classes[lab].append(x)
    classes = tuple(tuple(c) for c in classes)
    return OrbitPartition(
        n=n,
        classes=classes,
        class_of=tuple(int(v) for v in labels),
        class_sizes=tuple(len(c) for c in classes),
        gamma=gamma,
    )


@lru_cache(maxsize=256)
def plus_minus_partition(n: int) -> OrbitPartition:
    """Orbits of Γ = {±1}: ``{0}, {±1}, …``."""
    return orbit_partition(n, make_unit_subgroup(n, [n - 1]))


@lru_cache(maxsize=256)
def singleton_partition(n: int) -> OrbitPartition:
    return orbit_partition(n, make_unit_subgroup(n, []))


@dataclass(frozen=True, eq=False)
class SupercharacterTable:
    """``values[i, j]`` is σ_i on the class X_j."""

    partition: OrbitPartition
    values: np.ndarray


def supercharacter_table(p: OrbitPartition) -> SupercharacterTable:
    n = p.n
    reps = np.asarray(p.representatives, dtype=np.int64)
    x = np.arange(n, dtype=np.int64)
    # characters of every residue at each class representative, exponent reduced exactly
    chars = CyclicGroup(n).zeta_power(np.outer(x, reps) % n)
    indicator = np.zeros((len(p), n))
    indicator[p.class_of_array, x] = 1.0
    return SupercharacterTable(p, _readonly(indicator @ chars))


@dataclass(frozen=True, eq=False)
class StructureConstants:
    """Nonzero counts ``c[i, j, k]`` of solutions to ``x + y = z``.

    ``x`` ranges over X_i, ``y`` over X_j, and ``z`` is the least element
    of X_k.
    """

    partition: OrbitPartition
    counts: dict

    def __getitem__(self, key) -> int:
        return self.counts.get(tuple(int(v) for v in key), 0)

    def dense(self) -> np.ndarray:
        m = len(self.partition)
        out = np.zeros((m, m, m), dtype=np.int64)
        for (i, j, k), c in self.counts.items():
            out[i, j, k] = c
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return self.partition == other.partition and self.counts == other.counts


def structure_constants(p: OrbitPartition) -> StructureConstants:
    oi, oj, ok, oc = kernels.structure_counts(
        p.n, p.class_of_array, np.asarray(p.representatives, dtype=np.int64)
    )
    counts = {(int(i), int(j), int(k)): int(c) for i, j, k, c in zip(oi, oj, ok, oc)}
    return StructureConstants(p, counts)


def unitary_matrix(t: SupercharacterTable) -> np.ndarray:
    """Normalized supercharacter table; unitary with fourth power I."""
    sizes = np.sqrt(np.asarray(t.partition.class_sizes, dtype=float))
    return t.values * sizes[None, :] / (sizes[:, None] * math.sqrt(t.partition.n))


def generic_basis_matrix(c: StructureConstants, i: int) -> np.ndarray:
    """Basis matrix with ``(j, k)`` entry ``c[i, j, k] * sqrt(|X_k| / |X_j|)``."""
    m = len(c.partition)
    if not 0 <= i < m:
        raise IndexOutOfRange(f"class index {i} outside 0..{m - 1}")
    sizes = np.sqrt(np.asarray(c.partition.class_sizes, dtype=float))
    out = np.zeros((m, m))
    for (a, j, k), count in c.counts.items():
        if a == i:
            out[j, k] = count * sizes[k] / sizes[j]
    return out


def generic_basis_matrices(c: StructureConstants) -> np.ndarray:
    """All basis matrices stacked along axis 0."""
    sizes = np.sqrt(np.asarray(c.partition.class_sizes, dtype=float))
    return c.dense() * (sizes[None, None, :] / sizes[None, :, None])
