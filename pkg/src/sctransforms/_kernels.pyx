# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops. Signatures mirror ``_kernels_py``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def orbit_labels(long n, gens):
    cdef cnp.int64_t[::1] g = np.ascontiguousarray(gens, dtype=np.int64)
    cdef cnp.int64_t[::1] labels = np.full(n, -1, dtype=np.int64)
    cdef cnp.int64_t[::1] stack = np.empty(max(n, 1), dtype=np.int64)
    cdef long ng = g.shape[0]
    cdef long x, y, z, top, a, nxt = 0
    for x in range(n):
        if labels[x] >= 0:
            continue
        labels[x] = nxt
        stack[0] = x
        top = 1
        while top > 0:
            top -= 1
            y = stack[top]
            for a in range(ng):
                z = (y * g[a]) % n
                if labels[z] < 0:
                    labels[z] = nxt
                    stack[top] = z
                    top += 1
        nxt += 1
    return np.asarray(labels)


def structure_counts(long n, class_of, reps):
    cdef cnp.int64_t[::1] cls = np.ascontiguousarray(class_of, dtype=np.int64)
    cdef cnp.int64_t[::1] rep = np.ascontiguousarray(reps, dtype=np.int64)
    cdef long m = rep.shape[0]
    cdef cnp.int64_t[::1] scratch = np.zeros(m * m, dtype=np.int64)
    cdef cnp.int64_t[::1] touched = np.empty(max(n, 1), dtype=np.int64)
    cdef long cap = n * m if n * m > 0 else 1
    cdef cnp.int64_t[::1] oi = np.empty(cap, dtype=np.int64)
    cdef cnp.int64_t[::1] oj = np.empty(cap, dtype=np.int64)
    cdef cnp.int64_t[::1] ok = np.empty(cap, dtype=np.int64)
    cdef cnp.int64_t[::1] oc = np.empty(cap, dtype=np.int64)
    cdef long k, x, y, z, cell, t, nt, out = 0
    for k in range(m):
        z = rep[k]
        nt = 0
        for x in range(n):
            y = (z - x + n) % n
            cell = cls[x] * m + cls[y]
            if scratch[cell] == 0:
                touched[nt] = cell
                nt += 1
            scratch[cell] += 1
        for t in range(nt):
            cell = touched[t]
            oi[out] = cell // m
            oj[out] = cell % m
            ok[out] = k
            oc[out] = scratch[cell]
            scratch[cell] = 0
            out += 1
    return (np.asarray(oi)[:out].copy(), np.asarray(oj)[:out].copy(),
            np.asarray(ok)[:out].copy(), np.asarray(oc)[:out].copy())


def dst_s_matrix(long n, s):
    cdef cnp.float64_t[::1] sp = np.ascontiguousarray(s, dtype=np.float64)
    cdef long size = (n - 1) // 2 if n >= 1 else 0
    cdef cnp.float64_t[:, ::1] out = np.zeros((size, size), dtype=np.float64)
    cdef long j, k, l, d, a, idx, lo
    cdef double acc, half = n / 2.0
    for j in range(1, size + 1):
        for k in range(1, size + 1):
            d = k - j if k >= j else j - k
            lo = j if j < k else k
            acc = 0.0
            for l in range(1, lo + 1):
                a = d + 2 * l - 1
                idx = a if a < n - a else n - a
                if a < half:
                    acc += sp[idx]
                elif a > half:
                    acc -= sp[idx]
            out[j - 1, k - 1] = acc
    return np.asarray(out)
