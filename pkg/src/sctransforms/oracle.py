"""Brute-force checks that arbitrate the closed forms, and the suite runner.

Everything here recomputes from first principles: dense conjugation by the
transform, full ``n × n`` enumeration of sums, direct evaluation of
characters. ``run_suite`` applies every check to each modulus in a range
and collects one report line per (check, n).
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import circulant, dct, dst, groups, reference, transforms
from .errors import DimensionMismatch, NotInAlgebra
from .exact import ExactQuadratic, to_float

DEFAULT_SEED = 20140123

# every report line names one of these
TOLERANCES = {
    "exact": 0.0,
    "unitary": 1e-10,
    "diagonal": 1e-10,
    "closed-form": 1e-9,
    "product-rule": 1e-8,
    "constancy": 1e-9,
    "closure": 1e-9,
    "restriction": 1e-10,
    "trig": 1e-10,
    "roundtrip": 1e-10,
    "solve": 1e-8,
}

GENERATOR_SEPARATION = 1e-8
NONMEMBER_RESIDUAL = 1e-3
GENERATOR_MAX_N = 24
TRIG_MAX_N = 32


def diagonalization_residual(q, m) -> float:
    """Largest off-diagonal magnitude of ``Q* M Q``."""
    q = np.asarray(transforms_entries(q))
    m = to_float(np.asarray(m))
    if q.ndim != 2 or q.shape[0] != q.shape[1] or m.shape != q.shape:
        raise DimensionMismatch(f"need conformable square matrices, got {q.shape} and {m.shape}")
    if q.size and np.max(np.abs(q @ q.conj().T - np.eye(q.shape[0]))) > 1e-8:
        raise ValueError("conjugating matrix is not unitary")
    h = q.conj().T @ m @ q
    if h.shape[0] < 2:
        return 0.0
    return float(np.max(np.abs(h - np.diag(np.diag(h)))))


def transforms_entries(q):
    return q.entries if isinstance(q, transforms.TransformMatrix) else q


def _pair_counts(p: groups.OrbitPartition):
    """Counts keyed by ``(i, j, z)`` from every pair ``(x, y)`` in Z/n × Z/n."""
    n, m = p.n, len(p)
    cls = p.class_of_array
    x = np.arange(n)
    i = np.repeat(cls, n)
    j = np.tile(cls, n)
    z = (np.repeat(x, n) + np.tile(x, n)) % n
    keys, counts = np.unique((i * m + j) * n + z, return_counts=True)
    return keys // (m * n), (keys // n) % m, keys % n, counts


def exhaustive_structure_constants(n: int, gamma: groups.UnitSubgroup) -> groups.StructureConstants:
    """Structure constants by classifying all ``n²`` pairs, read at least representatives."""
    p = groups.orbit_partition(n, gamma)
    i, j, z, c = _pair_counts(p)
    reps = {r: k for k, r in enumerate(p.representatives)}
    counts = {}
    for a, b, zz, cc in zip(i, j, z, c):
        k = reps.get(int(zz))
        if k is not None:
            counts[(int(a), int(b), k)] = int(cc)
    return groups.StructureConstants(p, counts)


def representative_defects(p: groups.OrbitPartition) -> int:
    """Number of ``(k, z)`` where counting at ``z ∈ X_k`` differs from the least representative."""
    i, j, z, c = _pair_counts(p)
    by_z: dict[int, dict] = {}
    for a, b, zz, cc in zip(i, j, z, c):
        by_z.setdefault(int(zz), {})[(int(a), int(b))] = int(cc)
    defects = 0
    for cls in p.classes:
        ref = by_z.get(cls[0], {})
        defects += sum(by_z.get(zz, {}) != ref for zz in cls[1:])
    return defects


@dataclass
class Check:
    name: str
    n: int
    max_residual: float
    tolerance: float
    tolerance_name: str
    passed: bool = field(init=False)

    def __post_init__(self):
        self.max_residual = float(self.max_residual)
        self.passed = bool(self.max_residual <= self.tolerance)


@dataclass
class SuiteReport:
    n_range: tuple[int, int]
    seed: int
    checks: list[Check]
    elapsed: float = 0.0

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "n_range": list(self.n_range),
            "seed": self.seed,
            "elapsed": self.elapsed,
            "ok": self.ok,
            "tolerances": dict(TOLERANCES),
            "checks": [asdict(c) for c in self.checks],
            "failures": [asdict(c) for c in self.failures],
        }

    def to_text(self) -> str:
        labels = [f"{c.name} n={c.n}" for c in self.checks]
        width = max((len(s) for s in labels), default=10)
        lines = [f"{'check':<{width}}  {'residual':>10}  {'tol':>8}  result"]
        for label, c in zip(labels, self.checks):
            lines.append(
                f"{label:<{width}}  {c.max_residual:>10.3e}  {c.tolerance:>8.1e}  "
                f"{'pass' if c.passed else 'FAIL'}"
            )
        lines.append(
            f"{len(self.checks) - len(self.failures)}/{len(self.checks)} checks passed "
            f"for n in {self.n_range[0]}..{self.n_range[1]} (seed {self.seed}, {self.elapsed:.1f}s)"
        )
        return "\n".join(lines)


# ---------------------------------------------------------------- group core


def product_rule_residual(table, consts) -> float:
    v = table.values
    c = consts.dense().astype(float)
    lhs = v[:, None, :] * v[None, :, :]
    rhs = np.einsum("ijk,kl->ijl", c, v)
    return float(np.max(np.abs(lhs - rhs)))


def constancy_residual(table) -> float:
    p = table.partition
    n = p.n
    x = np.arange(n)
    chars = np.exp(-2j * np.pi * (np.outer(x, x) % n) / n)
    worst = 0.0
    for i, cls in enumerate(p.classes):
        sums = chars[list(cls)].sum(axis=0)
        worst = max(worst, float(np.max(np.abs(sums - table.values[i][p.class_of_array]))))
    return worst


def orthogonality_residual(table) -> float:
    p = table.partition
    sizes = np.asarray(p.class_sizes, dtype=float)
    gram = (table.values * sizes[None, :]) @ table.values.conj().T
    return float(np.max(np.abs(gram - np.diag(p.n * sizes)))) / p.n


def partition_defects(p: groups.OrbitPartition, gamma: groups.UnitSubgroup) -> int:
    members = [x for cls in p.classes for x in cls]
    defects = int(sorted(members) != list(range(p.n)))
    defects += int(p.classes[0] != (0,)) + int(sum(p.class_sizes) != p.n)
    for cls in p.classes:
        s = set(cls)
        defects += sum((x * g) % p.n not in s for x in cls for g in gamma.elements)
    return defects


def _group_checks(n, rng, subgroups):
    out = {k: 0.0 for k in (
        "partition-invariants", "supercharacter-constancy", "supercharacter-orthogonality",
        "structure-dual-methods", "structure-representatives", "structure-size-sum",
        "product-rule", "generic-U-unitary", "generic-U-fourth-power", "generic-T-intertwine",
        "generic-T-normal", "generic-T-rank", "generic-T-closure",
    )}
    for gamma in subgroups:
        p = groups.orbit_partition(n, gamma)
        table = groups.supercharacter_table(p)
        consts = groups.structure_constants(p)
        m = len(p)
        sizes = np.asarray(p.class_sizes)
        c = consts.dense()
        exhaustive = exhaustive_structure_constants(n, gamma)
        out["partition-invariants"] += partition_defects(p, gamma)
        out["supercharacter-constancy"] = max(out["supercharacter-constancy"], constancy_residual(table))
        out["supercharacter-orthogonality"] = max(out["supercharacter-orthogonality"], orthogonality_residual(table))
        out["structure-dual-methods"] += int(exhaustive.counts != consts.counts)
        out["structure-representatives"] += representative_defects(p)
        out["structure-size-sum"] += int(np.count_nonzero(c @ sizes - np.outer(sizes, sizes)))
        out["product-rule"] = max(out["product-rule"], product_rule_residual(table, consts))
        u = groups.unitary_matrix(table)
        eye = np.eye(m)
        out["generic-U-unitary"] = max(out["generic-U-unitary"], float(np.max(np.abs(u @ u.conj().T - eye))))
        u4 = np.linalg.matrix_power(u, 4)
        out["generic-U-fourth-power"] = max(out["generic-U-fourth-power"], float(np.max(np.abs(u4 - eye))))
        basis = groups.generic_basis_matrices(consts)
        inter = basis @ u - u[None, :, :] * table.values[:, None, :]
        out["generic-T-intertwine"] = max(out["generic-T-intertwine"], float(np.max(np.abs(inter))))
        bt = np.transpose(basis, (0, 2, 1))
        out["generic-T-normal"] = max(out["generic-T-normal"], float(np.max(np.abs(basis @ bt - bt @ basis))))
        out["generic-T-rank"] += m - int(np.linalg.matrix_rank(basis.reshape(m, m * m)))
        pairs = [(i, j) for i in range(m) for j in range(m)]
        if len(pairs) > 64:
            pairs = [pairs[k] for k in rng.choice(len(pairs), 64, replace=False)]
        for i, j in pairs:
            prod = basis[i] @ basis[j] - np.tensordot(c[i, j], basis, axes=1)
            out["generic-T-closure"] = max(out["generic-T-closure"], float(np.max(np.abs(prod))))
    tol = {
        "supercharacter-constancy": "constancy", "supercharacter-orthogonality": "constancy",
        "product-rule": "product-rule", "generic-U-unitary": "unitary",
        "generic-U-fourth-power": "unitary", "generic-T-intertwine": "diagonal",
        "generic-T-normal": "diagonal", "generic-T-closure": "closure",
    }
    return [(name, value, tol.get(name, "exact")) for name, value in out.items()]


# ---------------------------------------------------------------- transforms


def _offdiag(h):
    return float(np.max(np.abs(h - np.diag(np.diag(h))))) if h.shape[0] > 1 else 0.0


def _maxabs(a):
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def _transform_checks(n, rng):
    f = transforms.dft_matrix(n).entries
    u = transforms.dct_matrix(n).entries
    w = transforms.dst_matrix(n).entries
    eye = lambda k: np.eye(k)
    res = []
    res.append(("dft-unitary", _maxabs(f @ f.conj().T - eye(n)), "unitary"))
    f2 = f @ f
    res.append(("dft-square-parity", _maxabs(f2 - transforms.parity_matrix(n)), "unitary"))
    res.append(("dft-fourth-power", _maxabs(f2 @ f2 - eye(n)), "unitary"))
    res.append(("dct-orthogonal-symmetric", max(_maxabs(u @ u.T - eye(len(u))), _maxabs(u - u.T)), "unitary"))
    res.append(("dst-orthogonal-symmetric", max(_maxabs(w @ w.T - eye(len(w))), _maxabs(w - w.T)), "unitary"))
    gen_u = groups.unitary_matrix(groups.supercharacter_table(groups.plus_minus_partition(n)))
    res.append(("dct-matches-generic-U", _maxabs(gen_u - u), "unitary"))
    gen_f = groups.unitary_matrix(groups.supercharacter_table(groups.singleton_partition(n)))
    res.append(("dft-matches-generic-U", _maxabs(gen_f - f), "unitary"))
    worst_even = worst_odd = worst_parity = 0.0
    for _ in range(20):
        t = rng.normal(size=len(u)) + 1j * rng.normal(size=len(u))
        worst_even = max(worst_even, _maxabs(transforms.apply_dft(transforms.embed_even(t, n)) - transforms.embed_even(u @ t, n)))
        s = rng.normal(size=len(w)) + 1j * rng.normal(size=len(w))
        worst_odd = max(worst_odd, _maxabs(transforms.apply_dft(transforms.embed_odd(s, n)) - transforms.embed_odd(-1j * (w @ s), n)))
        g = rng.normal(size=n) + 1j * rng.normal(size=n)
        neg = (-np.arange(n)) % n
        ev, od = (g + g[neg]) / 2, (g - g[neg]) / 2
        fe, fo = transforms.apply_dft(ev), transforms.apply_dft(od)
        worst_parity = max(worst_parity, _maxabs(fe - fe[neg]), _maxabs(fo + fo[neg]))
    res.append(("restriction-even", worst_even, "restriction"))
    res.append(("restriction-odd", worst_odd, "restriction"))
    res.append(("parity-preservation", worst_parity, "restriction"))
    x = np.arange(n)
    tau_err = max(
        (_maxabs(transforms.tau(n, j) - 2j * np.sin(2 * np.pi * j * x / n)) for j in range(n)),
        default=0.0,
    )
    res.append(("tau-sine-form", tau_err, "trig"))
    return res


# ---------------------------------------------------------------- cosine algebra


def toeplitz_hankel_defects(n, t) -> int:
    """Compare interior entries of the exact basis sum with the two-term formula."""
    size = transforms.dct_size(n)
    total = sum((dct.dct_basis(n, i) * ExactQuadratic(int(t[i])) for i in range(size)), start=dct.dct_basis(n, 0) * 0)
    defects = 0
    for j in range(2, size + 1):
        for k in range(2, size + 1):
            if not (j < n / 2 + 1 and k < n / 2 + 1):
                continue
            d = abs(k - j)
            expect = int(t[min(n - d, d)]) + int(t[min(n - k - j + 2, k + j - 2)])
            defects += total[j - 1, k - 1] != expect
    return defects


def _eigen_distinct(values) -> bool:
    values = np.sort(np.asarray(values, dtype=float))
    return values.size < 2 or float(np.min(np.diff(values))) > GENERATOR_SEPARATION


def _dct_checks(n, rng):
    size = transforms.dct_size(n)
    u = transforms.dct_matrix(n).entries
    sizes = transforms.dct_class_sizes(n)
    k = np.arange(size)
    res = []
    off = eig = udu = 0.0
    grammar = 0
    for i in range(size):
        exact = dct.dct_basis(n, i)
        tb = to_float(exact)
        h = u @ tb @ u
        closed = sizes[i] * np.cos(2 * np.pi * ((i * k) % n) / n)
        off = max(off, _offdiag(h))
        eig = max(eig, _maxabs(np.diag(h) - closed))
        udu = max(udu, _maxabs(u @ np.diag(closed) @ u - tb))
        grammar += sum(not (v.a in (0, 1, 2) and v.b in (0, 1) and v.a * v.b == 0) for v in exact.flat)
        grammar += int(np.any(exact != exact.T))
    res += [("dct-basis-offdiagonal", off, "diagonal"), ("dct-basis-eigenvalues", eig, "closed-form"),
            ("dct-basis-UDU", udu, "diagonal"), ("dct-entry-grammar", grammar, "exact")]

    t_int = rng.integers(-9, 10, size=size)
    exact_general = dct.dct_general(dct.DctElement(n, t_int), exact=True)
    summed = sum((dct.dct_basis(n, i) * ExactQuadratic(int(t_int[i])) for i in range(size)), start=dct.dct_basis(n, 0) * 0)
    res.append(("dct-general-vs-basis-sum", int(np.sum(exact_general != summed)), "exact"))
    res.append(("dct-inner-toeplitz-hankel", toeplitz_hankel_defects(n, t_int), "exact"))

    rt = mult = law = eig_oracle = solve = 0.0
    accepted = 0
    for _ in range(10):
        a = dct.DctElement(n, rng.normal(size=size))
        b = dct.DctElement(n, rng.normal(size=size))
        ma, mb = dct.dct_general(a), dct.dct_general(b)
        rt = max(rt, _maxabs(dct.dct_membership(ma, n).params - a.params))
        ab = dct.dct_multiply(a, b)
        mult = max(mult, _maxabs(dct.dct_general(ab) - ma @ mb))
        law = max(law, _maxabs(dct.dct_eigenvalues(ab) - dct.dct_eigenvalues(a) * dct.dct_eigenvalues(b)))
        eig_oracle = max(eig_oracle, _maxabs(np.diag(u @ ma @ u) - dct.dct_eigenvalues(a)))
        well = dct.DctElement(n, a.params + np.eye(size)[0] * (np.sum(np.abs(a.params) * sizes) + 1))
        rhs = rng.normal(size=size)
        x = dct.dct_solve(well, rhs)
        solve = max(solve, _maxabs(dct.dct_general(well) @ x - rhs) / max(_maxabs(rhs), 1e-300))
        if size > 1:
            accepted += _accepts_nonmember(lambda m: dct.dct_membership(m, n), size, rng)
    res += [("dct-membership-roundtrip", rt, "roundtrip"), ("dct-multiply-dense", mult, "closed-form"),
            ("dct-eigen-product-law", law, "closed-form"), ("dct-eigenvalues-oracle", eig_oracle, "closed-form"),
            ("dct-solve-residual", solve, "solve"), ("dct-nonmember-accepted", accepted, "exact")]

    if n <= GENERATOR_MAX_N:
        bad = 0
        for i in range(size):
            lam = sizes[i] * np.cos(2 * np.pi * ((i * k) % n) / n)
            bad += _eigen_distinct(lam) != dct.dct_is_generator(n, i)
        res.append(("dct-generator-criterion", bad, "exact"))

    golden = [(i, rows) for (nn, i), rows in reference.DCT_BASIS.items() if nn == n]
    if golden:
        defects = sum(int(np.sum(dct.dct_basis(n, i) != reference.parse_matrix(rows))) for i, rows in golden)
        res.append(("dct-basis-golden", defects, "exact"))
    if n in reference.DCT_GENERAL:
        want = reference.parse_parametrized(reference.DCT_GENERAL[n], 0, size)
        got = np.stack([dct.dct_general(dct.DctElement.basis(n, p), exact=True) for p in range(size)], axis=-1)
        res.append(("dct-general-golden", int(np.sum(got != want)), "exact"))
    return res


def _accepts_nonmember(member_fn, size, rng) -> int:
    """1 if a random single-entry perturbation is accepted or rejected too weakly."""
    m = np.zeros((size, size))
    j, k = rng.integers(0, size, size=2)
    if j == k:
        k = (j + 1) % size
    m[j, k] = 1.0
    try:
        member_fn(m)
    except NotInAlgebra as exc:
        return int(exc.residual <= NONMEMBER_RESIDUAL)
    return 1


# ---------------------------------------------------------------- sine algebra


def cross_sum_band_defects(n, m) -> int:
    """Cross-sum violations off the last row/column for odd n, any at all for even n."""
    size = m.shape[0]
    violations = dst.cross_sum_check(m, tol=1e-9 * max(1.0, _maxabs(m)))
    if n % 2 == 0:
        return len(violations)
    return sum(1 for i, j in violations if i != size and j != size)


def _dst_checks(n, rng):
    size = transforms.dst_size(n)
    if size == 0:
        return []
    w = transforms.dst_matrix(n).entries
    k = np.arange(1, size + 1)
    res = []
    off_s = first_row = 0.0
    for i in range(1, size + 1):
        sb = dst.dst_s_basis(n, i)
        off_s = max(off_s, _offdiag(w @ sb @ w))
        first_row += int(np.any(sb[0] != np.eye(size, dtype=int)[i - 1]))
    off_t = eig_t = 0.0
    for i in range(1, size + 1):
        tb = dst.dst_t_basis(n, i)
        h = w @ tb @ w
        off_t = max(off_t, _offdiag(h))
        eig_t = max(eig_t, _maxabs(np.diag(h) - 2 * np.cos(2 * np.pi * ((i * k) % n) / n)))
    res += [("dst-s-basis-diagonalization", off_s, "diagonal"), ("dst-s-first-row", first_row, "exact"),
            ("dst-t-basis-offdiagonal", off_t, "diagonal"), ("dst-t-basis-eigenvalues", eig_t, "closed-form")]

    if n % 2 == 1:
        stack = np.stack([dst.dst_t_basis(n, i) for i in range(1, size + 1)])
        res.append(("dst-t-basis-rank", size - int(np.linalg.matrix_rank(stack.reshape(size, -1).astype(float))), "exact"))
        inv2 = pow(2, -1, n)
        pos_bad = 0
        for i in range(1, size + 1):
            pos = (i * inv2) % n
            pos = min(pos, n - pos)
            nonzero = set(np.flatnonzero(np.diag(stack[i - 1])) + 1)
            pos_bad += nonzero != {pos}
        res.append(("dst-t-diagonal-position", pos_bad, "exact"))
        t_int = rng.integers(-9, 10, size=size)
        gen = dst.dst_t_general(dst.DstElementT(n, t_int))
        combo = -np.tensordot(t_int, stack, axes=1)
        res.append(("dst-t-general-vs-basis", int(np.sum(gen != combo)), "exact"))

    off = rt = eig_s = eig_tf = conv = solve = 0.0
    accepted = 0
    for _ in range(10):
        s = rng.normal(size=size)
        e = dst.DstElementS(n, s)
        m = dst.dst_s_general(e)
        h = w @ m @ w
        off = max(off, _offdiag(h))
        eig_s = max(eig_s, _maxabs(np.diag(h) - dst.dst_eigenvalues(e)))
        rt = max(rt, _maxabs(dst.dst_membership(m, n).s - s))
        if n % 2 == 1:
            te = dst.dst_convert(e)
            back = dst.dst_convert(te)
            conv = max(conv, _maxabs(back.s - s), _maxabs(dst.dst_t_general(te) - m))
            mt = dst.dst_t_general(te)
            eig_tf = max(eig_tf, _maxabs(np.diag(w @ mt @ w) - dst.dst_eigenvalues(te)))
        well = dst.DstElementS(n, s + np.eye(size)[0] * (np.sum(np.abs(m)) + 1))
        rhs = rng.normal(size=size)
        x = dst.dst_solve(well, rhs)
        solve = max(solve, _maxabs(dst.dst_s_general(well) @ x - rhs) / max(_maxabs(rhs), 1e-300))
        if size > 1:
            accepted += _accepts_nonmember(lambda mm: dst.dst_membership(mm, n), size, rng)
    res += [("dst-s-general-diagonalization", off, "diagonal"), ("dst-eigenvalues-oracle", max(eig_s, eig_tf), "closed-form"),
            ("dst-membership-roundtrip", rt, "roundtrip"), ("dst-solve-residual", solve, "solve"),
            ("dst-nonmember-accepted", accepted, "exact")]
    if n % 2 == 1:
        res.append(("dst-convert-roundtrip", conv, "roundtrip"))

    band = sum(cross_sum_band_defects(n, dst.dst_s_general(dst.DstElementS(n, rng.normal(size=size)))) for _ in range(5))
    res.append(("dst-cross-sum", band, "exact"))

    if n <= GENERATOR_MAX_N:
        bad = sum(_eigen_distinct(dst.dst_t_basis_eigenvalues(n, i)) != dst.dst_t_is_generator(n, i) for i in range(1, size + 1))
        res.append(("dst-generator-criterion", bad, "exact"))

    if n == 11:
        res.append(("dst-s-basis-golden", sum(int(np.sum(to_float(reference.parse_matrix(r)) != dst.dst_s_basis(11, i)))
                                              for i, r in reference.DST_S_BASIS_11.items()), "exact"))
        want = reference.parse_parametrized(reference.DST_S_GENERAL_11, 1, 5)
        got = np.stack([dst.dst_s_basis(11, p) for p in range(1, 6)], axis=-1)
        res.append(("dst-s-general-golden", int(np.sum(to_float(want) != got)), "exact"))
        stack = np.stack([dst.dst_t_basis(11, i) for i in range(1, 6)])
        shown = np.stack([to_float(reference.parse_matrix(r)) for r in reference.DST_T_BASIS_11_DISPLAYED.values()])
        res.append(("dst-t-basis-golden", int(min(np.sum(shown != stack), np.sum(shown != -stack))), "exact"))
        want = reference.parse_parametrized(reference.DST_T_GENERAL_11, 1, 5)
        got = np.stack([dst.dst_t_general(dst.DstElementT(11, np.eye(5, dtype=int)[p])) for p in range(5)], axis=-1)
        res.append(("dst-t-general-golden", int(np.sum(to_float(want) != got)), "exact"))
    return res


def trig_identity_residual(n) -> float:
    """Residual of ``τ_j conj(τ_k) + τ_1 conj(τ_{j+k+1}) = τ_{j+1} conj(τ_{k+1})``."""
    taus = np.stack([transforms.tau(n, j) for j in range(n)])
    j = np.arange(n)
    lhs = taus[:, None, :] * taus[None, :, :].conj() + taus[1 % n][None, None, :] * taus[(j[:, None] + j[None, :] + 1) % n].conj()
    rhs = taus[(j + 1) % n][:, None, :] * taus[(j + 1) % n][None, :, :].conj()
    return _maxabs(lhs - rhs)


def tau_product_residual(n) -> float:
    """Residual of ``τ_j conj(τ_k) = (2/|X_{j-k}|) σ_{j-k} - (2/|X_{j+k}|) σ_{j+k}``."""
    table = groups.supercharacter_table(groups.plus_minus_partition(n))
    p = table.partition
    sig = table.values[:, p.class_of_array]  # sig[c, x]
    sizes = np.asarray(p.class_sizes, dtype=float)
    taus = np.stack([transforms.tau(n, j) for j in range(n)])
    j = np.arange(n)
    cls = p.class_of_array
    dif, tot = cls[(j[:, None] - j[None, :]) % n], cls[(j[:, None] + j[None, :]) % n]
    rhs = 2 / sizes[dif][..., None] * sig[dif] - 2 / sizes[tot][..., None] * sig[tot]
    return _maxabs(taus[:, None, :] * taus[None, :, :].conj() - rhs)


def _trig_checks(n):
    if n > TRIG_MAX_N:
        return []
    return [("dst-trig-identity", trig_identity_residual(n), "trig"),
            ("dst-tau-product-expansion", tau_product_residual(n), "trig")]


# ---------------------------------------------------------------- circulant


def _circulant_checks(n, rng):
    f = transforms.dft_matrix(n).entries
    fh = f.conj().T
    k = np.arange(n)
    off = eig = 0.0
    for i in range(n):
        h = fh @ circulant.circulant_shift_basis(n, i) @ f
        off = max(off, _offdiag(h))
        eig = max(eig, _maxabs(np.diag(h) - np.exp(-2j * np.pi * ((i * k) % n) / n)))
    res = [("circulant-basis-offdiagonal", off, "diagonal"), ("circulant-basis-eigenvalues", eig, "closed-form")]
    wrap = oracle = law = solve = 0.0
    for _ in range(10):
        c = rng.normal(size=n) + 1j * rng.normal(size=n)
        e = circulant.CirculantElement(n, c)
        m = circulant.circulant_matrix(e)
        wrap += int(np.any(m != np.roll(np.roll(m, 1, axis=0), 1, axis=1)))
        oracle = max(oracle, _maxabs(np.diag(fh @ m @ f) - circulant.circulant_eigenvalues(e)))
        b = circulant.CirculantElement(n, rng.normal(size=n))
        ab = circulant.circulant_multiply(e, b)
        law = max(law, _maxabs(circulant.circulant_matrix(ab) - m @ circulant.circulant_matrix(b)),
                  _maxabs(circulant.circulant_eigenvalues(ab) - circulant.circulant_eigenvalues(e) * circulant.circulant_eigenvalues(b)))
        well = circulant.CirculantElement(n, c + np.eye(n)[0] * (np.sum(np.abs(c)) + 1))
        rhs = rng.normal(size=n)
        x = circulant.circulant_solve(well, rhs)
        solve = max(solve, _maxabs(circulant.circulant_matrix(well) @ x - rhs) / max(_maxabs(rhs), 1e-300))
    res += [("circulant-wrapped-diagonals", wrap, "exact"), ("circulant-eigenvalues-oracle", oracle, "closed-form"),
            ("circulant-convolution-law", law, "closed-form"), ("circulant-solve-residual", solve, "solve")]
    return res


# ---------------------------------------------------------------- runner


def checks_for_modulus(n: int, seed: int = DEFAULT_SEED) -> list[Check]:
    rng = np.random.default_rng([seed, n])
    raw = []
    raw += _group_checks(n, rng, groups.all_unit_subgroups(n))
    raw += _transform_checks(n, rng)
    raw += _dct_checks(n, rng)
    raw += _dst_checks(n, rng)
    raw += _trig_checks(n)
    raw += _circulant_checks(n, rng)
    return [Check(name, n, value, TOLERANCES[tol], tol) for name, value, tol in raw]


def _cell(args):
    return checks_for_modulus(*args)


def run_suite(n_min: int, n_max: int, seed: int = DEFAULT_SEED, jobs: int = 1) -> SuiteReport:
    """Run every check for each ``n`` in ``n_min..n_max`` (inclusive)."""
    if not 1 <= n_min <= n_max:
        raise ValueError(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")
    start = time.perf_counter()
    cells = [(n, seed) for n in range(n_min, n_max + 1)]
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_n = list(pool.map(_cell, cells))
    else:
        per_n = [_cell(c) for c in cells]
    checks = [c for block in per_n for c in block]
    return SuiteReport((n_min, n_max), seed, checks, time.perf_counter() - start)
