"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``.

Same signatures and return types; used when the extension is not built.
"""

import numpy as np


def orbit_labels(n, gens):
    """Label residues mod ``n`` by orbit under multiplication by ``gens``.

    Labels are assigned in order of each orbit's least element.
    """
    gens = [int(g) for g in gens]
    labels = [-1] * n
    nxt = 0
    for x in range(n):
        if labels[x] >= 0:
            continue
        labels[x] = nxt
        stack = [x]
        while stack:
            y = stack.pop()
            for g in gens:
                z = (y * g) % n
                if labels[z] < 0:
                    labels[z] = nxt
                    stack.append(z)
        nxt += 1
    return np.array(labels, dtype=np.int64)


def structure_counts(n, class_of, reps):
    """Count decompositions ``x + y = reps[k]`` by the classes of x and y.

    Returns parallel arrays ``(i, j, k, count)`` of the nonzero cells.
    """
    cls = [int(c) for c in class_of]
    oi, oj, ok, oc = [], [], [], []
    for k, z in enumerate(int(r) for r in reps):
        cell = {}
        for x in range(n):
            key = (cls[x], cls[(z - x) % n])
            cell[key] = cell.get(key, 0) + 1
        for (i, j), c in cell.items():
            oi.append(i)
            oj.append(j)
            ok.append(k)
            oc.append(c)
    as_arr = lambda v: np.array(v, dtype=np.int64)
    return as_arr(oi), as_arr(oj), as_arr(ok), as_arr(oc)


def dst_s_matrix(n, s):
    """Direct-sum assembly of the general sine-algebra matrix.

    ``s`` is indexed by residue (``s[0]`` unused) and must have length at
    least ``n // 2 + 1``.
    """
    size = (n - 1) // 2 if n >= 1 else 0
    half = n / 2.0
    out = np.zeros((size, size), dtype=np.float64)
    for j in range(1, size + 1):
        for k in range(1, size + 1):
            d = abs(k - j)
            acc = 0.0
            for l in range(1, min(j, k) + 1):
                a = d + 2 * l - 1
                idx = min(a, n - a)
                if a < half:
                    acc += s[idx]
                elif a > half:
                    acc -= s[idx]
            out[j - 1, k - 1] = acc
    return out
