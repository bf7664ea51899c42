"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--n 64 128 256] [--repeat 5]

Each kernel is run on identical inputs under both backends; outputs are
compared before timing so a speedup never hides a wrong answer.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from sctransforms import kernels
from sctransforms.groups import make_unit_subgroup, orbit_partition, plus_minus_partition, unit_group


def _cases(n):
    pm = plus_minus_partition(n)
    full = orbit_partition(n, make_unit_subgroup(n, unit_group(n)))
    gens = [n - 1] if n > 2 else []
    s = np.random.default_rng(n).normal(size=n // 2 + 1)
    s[0] = 0.0
    return {
        "orbit_labels": lambda b: b.orbit_labels(n, gens),
        "structure_counts(±1)": lambda b: b.structure_counts(n, pm.class_of_array, np.asarray(pm.representatives)),
        "structure_counts(units)": lambda b: b.structure_counts(n, full.class_of_array, np.asarray(full.representatives)),
        "dst_s_matrix": lambda b: b.dst_s_matrix(n, s),
    }


def _same(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(np.asarray(x), np.asarray(y)) for x, y in zip(a, b))
    return np.allclose(np.asarray(a), np.asarray(b), atol=1e-12)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[64, 128, 256])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    names = kernels.available_backends()
    if "compiled" not in names:
        print("compiled extension not built; only the python backend is available")
    backends = {name: kernels.get_backend(name) for name in names}

    print(f"{'kernel':<26}{'n':>6}" + "".join(f"{b + ' (ms)':>16}" for b in names) + f"{'speedup':>10}")
    for n in args.n:
        for label, run in _cases(n).items():
            outputs = {b: run(mod) for b, mod in backends.items()}
            if len(outputs) == 2 and not _same(outputs["compiled"], outputs["python"]):
                raise SystemExit(f"backends disagree on {label} at n={n}")
            times = {b: min(timeit.repeat(lambda: run(mod), number=1, repeat=args.repeat)) * 1e3
                     for b, mod in backends.items()}
            speed = f"{times['python'] / times['compiled']:>9.1f}x" if len(times) == 2 else ""
            print(f"{label:<26}{n:>6}" + "".join(f"{times[b]:>16.3f}" for b in names) + speed)


if __name__ == "__main__":
    main()
