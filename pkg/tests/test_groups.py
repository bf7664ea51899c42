import cmath
import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sctransforms.errors import IndexOutOfRange, ModulusMismatch, NonUnitGenerator
from sctransforms.groups import (
    CyclicGroup,
    all_unit_subgroups,
    generic_basis_matrices,
    generic_basis_matrix,
    make_unit_subgroup,
    orbit_partition,
    plus_minus_partition,
    singleton_partition,
    structure_constants,
    supercharacter_table,
    unit_group,
    unitary_matrix,
)
from sctransforms.transforms import dft_matrix

from helpers import maxabs


def brute_closure(n, gens):
    """Closure by repeated multiplication until nothing new appears."""
    out = {1 % n}
    while True:
        new = {(x * g) % n for x in out for g in gens} | out
        if new == out:
            return sorted(out)
        out = new


def brute_counts(n, classes, i, j, z):
    return sum(1 for x in classes[i] for y in classes[j] if (x + y) % n == z)


# --- unit subgroups

@pytest.mark.parametrize(
    "n, gens, expect",
    [(10, [9], (1, 9)), (7, [], (1,)), (8, [3, 5], (1, 3, 5, 7)), (1, [], (0,))],
)
def test_make_unit_subgroup(n, gens, expect):
    assert make_unit_subgroup(n, gens).elements == expect


def test_non_unit_generator():
    with pytest.raises(NonUnitGenerator) as info:
        make_unit_subgroup(12, [5, 4])
    assert info.value.generator == 4


def test_generators_may_be_iterators():
    assert make_unit_subgroup(10, iter([3])).elements == (1, 3, 7, 9)


@given(st.integers(2, 60), st.data())
def test_subgroup_is_closure(n, data):
    units = unit_group(n)
    gens = data.draw(st.lists(st.sampled_from(units), max_size=3))
    sub = make_unit_subgroup(n, gens)
    assert list(sub.elements) == brute_closure(n, gens)
    assert all(math.gcd(x, n) == 1 for x in sub.elements)
    s = set(sub.elements)
    assert all((a * b) % n in s for a in s for b in s)
    assert all(pow(a, -1, n) in s for a in s)


@pytest.mark.parametrize("n", [8, 12, 15, 16, 21])
def test_all_unit_subgroups_are_distinct_and_complete(n):
    subs = all_unit_subgroups(n)
    assert len({s.elements for s in subs}) == len(subs)
    # every cyclic subgroup appears
    for u in unit_group(n):
        assert tuple(brute_closure(n, [u])) in {s.elements for s in subs}


# --- partitions

@pytest.mark.parametrize(
    "n, gens, classes",
    [
        (7, [6], ((0,), (1, 6), (2, 5), (3, 4))),
        (8, [7], ((0,), (1, 7), (2, 6), (3, 5), (4,))),
        (5, [], ((0,), (1,), (2,), (3,), (4,))),
    ],
)
def test_orbit_partition_examples(n, gens, classes):
    assert orbit_partition(n, make_unit_subgroup(n, gens)).classes == classes


def test_partition_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        orbit_partition(8, make_unit_subgroup(7, []))


@pytest.mark.parametrize("n", [1, 2, 9, 12, 30, 64])
def test_partition_invariants_all_subgroups(n):
    for gamma in all_unit_subgroups(n):
        p = orbit_partition(n, gamma)
        assert p.classes[0] == (0,)
        assert sorted(x for c in p.classes for x in c) == list(range(n))
        assert sum(p.class_sizes) == n
        assert [c[0] for c in p.classes] == sorted(c[0] for c in p.classes)
        for k, cls in enumerate(p.classes):
            assert all(p.class_of[x] == k for x in cls)
            assert {(x * g) % n for x in cls for g in gamma.elements} == set(cls)


# --- supercharacters

@pytest.mark.parametrize("n", [1, 2, 5, 8, 13, 32])
def test_plus_minus_supercharacters_are_cosines(n):
    p = plus_minus_partition(n)
    t = supercharacter_table(p)
    for i, j in itertools.product(range(len(p)), repeat=2):
        assert abs(t.values[i, j] - p.class_sizes[i] * math.cos(2 * math.pi * i * j / n)) <= 1e-12


@pytest.mark.parametrize("n", [1, 6, 11])
def test_sigma_zero_is_one(n):
    t = supercharacter_table(plus_minus_partition(n))
    np.testing.assert_allclose(t.values[0], 1.0, atol=1e-15)


@pytest.mark.parametrize("n", [5, 12])
def test_singleton_supercharacters_are_exponentials(n):
    t = supercharacter_table(singleton_partition(n))
    for j, k in itertools.product(range(n), repeat=2):
        assert abs(t.values[j, k] - cmath.exp(-2j * cmath.pi * j * k / n)) <= 1e-12


@pytest.mark.parametrize("n, gens", [(12, [5, 7]), (15, [2]), (16, [3]), (21, [4, 20]), (20, [3])])
def test_constancy_and_orthogonality(n, gens):
    p = orbit_partition(n, make_unit_subgroup(n, gens))
    t = supercharacter_table(p)
    for i, cls_i in enumerate(p.classes):
        for j, cls_j in enumerate(p.classes):
            for y in cls_j:
                direct = sum(cmath.exp(-2j * cmath.pi * x * y / n) for x in cls_i)
                assert abs(direct - t.values[i, j]) <= 1e-9
    sizes = np.array(p.class_sizes)
    gram = (t.values * sizes) @ t.values.conj().T
    np.testing.assert_allclose(gram, np.diag(n * sizes), atol=1e-9)


def test_table_is_read_only():
    t = supercharacter_table(plus_minus_partition(7))
    with pytest.raises(ValueError):
        t.values[0, 0] = 3


def test_zeta_power_reduces_exponent():
    g = CyclicGroup(7)
    assert abs(g.zeta_power(7 * 10**12 + 1) - cmath.exp(-2j * cmath.pi / 7)) < 1e-14
    with pytest.raises(ValueError):
        CyclicGroup(0)


# --- structure constants

def test_structure_constants_n7():
    c = structure_constants(plus_minus_partition(7))
    assert c[3, 1, 3] == 1
    assert c[3, 3, 0] == 2


@pytest.mark.parametrize("n", [1, 6, 7, 12])
def test_identity_class_constants(n):
    p = plus_minus_partition(n)
    c = structure_constants(p)
    for j, k in itertools.product(range(len(p)), repeat=2):
        assert c[0, j, k] == (j == k)


@pytest.mark.parametrize("n", [5, 9])
def test_singleton_constants(n):
    c = structure_constants(singleton_partition(n))
    for i, j, k in itertools.product(range(n), repeat=3):
        assert c[i, j, k] == ((i + j) % n == k)


@pytest.mark.parametrize("n, gens", [(7, [6]), (12, [5, 7]), (16, [3]), (18, [5]), (25, [7])])
def test_structure_constants_against_brute_force(n, gens, backend):
    p = orbit_partition(n, make_unit_subgroup(n, gens))
    c = structure_constants(p)
    m = len(p)
    for i, j, k in itertools.product(range(m), repeat=3):
        counts = {brute_counts(n, p.classes, i, j, z) for z in p.classes[k]}
        assert counts == {c[i, j, k]}  # also representative independence
    sizes = np.array(p.class_sizes)
    np.testing.assert_array_equal(c.dense() @ sizes, np.outer(sizes, sizes))


@pytest.mark.parametrize("n", [8, 15, 24])
def test_product_rule(n):
    for gamma in all_unit_subgroups(n):
        p = orbit_partition(n, gamma)
        v = supercharacter_table(p).values
        c = structure_constants(p).dense()
        lhs = v[:, None, :] * v[None, :, :]
        assert maxabs(lhs - np.einsum("ijk,kl->ijl", c, v)) <= 1e-8


# --- U and T_i

def test_unitary_matches_dft_for_trivial_gamma():
    for n in (1, 2, 5, 8):
        u = unitary_matrix(supercharacter_table(singleton_partition(n)))
        np.testing.assert_allclose(u, dft_matrix(n).entries, atol=1e-12)


def test_unitary_n4_plus_minus():
    r = math.sqrt(2)
    u = unitary_matrix(supercharacter_table(plus_minus_partition(4)))
    np.testing.assert_allclose(u, 0.5 * np.array([[1, r, 1], [r, 0, -r], [1, -r, 1]]), atol=1e-12)


@pytest.mark.parametrize("n", [6, 10, 16])
def test_even_first_row(n):
    u = unitary_matrix(supercharacter_table(plus_minus_partition(n)))
    expect = np.r_[1, np.full(n // 2 - 1, math.sqrt(2)), 1] / math.sqrt(n)
    np.testing.assert_allclose(u[0], expect, atol=1e-12)


@pytest.mark.parametrize("n", [1, 7, 12, 20, 33])
def test_unitary_and_fourth_power(n):
    for gamma in all_unit_subgroups(n):
        u = unitary_matrix(supercharacter_table(orbit_partition(n, gamma)))
        eye = np.eye(len(u))
        assert maxabs(u @ u.conj().T - eye) <= 1e-10
        assert maxabs(np.linalg.matrix_power(u, 4) - eye) <= 1e-10


def test_basis_matrix_examples():
    c7 = structure_constants(plus_minus_partition(7))
    r = math.sqrt(2)
    np.testing.assert_allclose(
        generic_basis_matrix(c7, 3),
        [[0, 0, 0, r], [0, 0, 1, 1], [0, 1, 1, 0], [r, 1, 0, 0]],
        atol=1e-12,
    )
    np.testing.assert_array_equal(generic_basis_matrix(c7, 0), np.eye(4))
    t = generic_basis_matrix(structure_constants(singleton_partition(5)), 2)
    j = np.arange(5)
    np.testing.assert_array_equal(t, ((j[None, :] - j[:, None]) % 5 == 2).astype(float))
    with pytest.raises(IndexOutOfRange):
        generic_basis_matrix(c7, 4)


@pytest.mark.parametrize("n, gens", [(9, [8]), (12, [5]), (13, [3]), (16, [7, 9]), (1, [])])
def test_basis_intertwines_normal_and_closed(n, gens):
    p = orbit_partition(n, make_unit_subgroup(n, gens))
    table = supercharacter_table(p)
    u = unitary_matrix(table)
    c = structure_constants(p)
    dense = c.dense()
    basis = generic_basis_matrices(c)
    m = len(p)
    for i in range(m):
        np.testing.assert_allclose(basis[i], generic_basis_matrix(c, i), atol=1e-15)
        assert maxabs(basis[i] @ u - u @ np.diag(table.values[i])) <= 1e-10
        assert maxabs(basis[i] @ basis[i].T - basis[i].T @ basis[i]) <= 1e-10
        for j in range(m):
            assert maxabs(basis[i] @ basis[j] - np.tensordot(dense[i, j], basis, axes=1)) <= 1e-9
    assert np.linalg.matrix_rank(basis.reshape(m, -1)) == m
