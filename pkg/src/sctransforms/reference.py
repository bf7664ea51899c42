"""Hand-transcribed reference matrices for small moduli.

Entries are strings: integers, ``r2`` for √2, or linear forms in the
parameters such as ``r2t1``, ``t0+t2`` or ``s2+s4-s5``. :func:`parse_matrix`
turns a table into an exact coefficient tensor so it can be compared with
computed matrices without rounding.
"""

from __future__ import annotations

import re

import numpy as np

from .exact import ExactQuadratic, exact_zeros

_TERM = re.compile(r"([+-]?)(\d*)(r2)?([a-z])(\d+)")
_CONST = re.compile(r"^(-?)(\d*)(r2)?$")


def _rows(text):
    return [line.split() for line in text.strip().splitlines()]


DCT_BASIS = {
    (7, 3): _rows("""
        0  0  0  r2
        0  0  1  1
        0  1  1  0
        r2 1  0  0
    """),
    (8, 3): _rows("""
        0  0  0  r2 0
        0  0  1  0  r2
        0  1  0  1  0
        r2 0  1  0  0
        0  r2 0  0  0
    """),
    (10, 0): _rows("""
        1 0 0 0 0 0
        0 1 0 0 0 0
        0 0 1 0 0 0
        0 0 0 1 0 0
        0 0 0 0 1 0
        0 0 0 0 0 1
    """),
    (10, 1): _rows("""
        0  r2 0  0  0  0
        r2 0  1  0  0  0
        0  1  0  1  0  0
        0  0  1  0  1  0
        0  0  0  1  0  r2
        0  0  0  0  r2 0
    """),
    (10, 2): _rows("""
        0  0  r2 0  0  0
        0  1  0  1  0  0
        r2 0  0  0  1  0
        0  1  0  0  0  r2
        0  0  1  0  1  0
        0  0  0  r2 0  0
    """),
    (10, 3): _rows("""
        0  0  0  r2 0  0
        0  0  1  0  1  0
        0  1  0  0  0  r2
        r2 0  0  0  1  0
        0  1  0  1  0  0
        0  0  r2 0  0  0
    """),
    (10, 4): _rows("""
        0  0  0  0  r2 0
        0  0  0  1  0  r2
        0  0  1  0  1  0
        0  1  0  1  0  0
        r2 0  1  0  0  0
        0  r2 0  0  0  0
    """),
    (10, 5): _rows("""
        0 0 0 0 0 1
        0 0 0 0 1 0
        0 0 0 1 0 0
        0 0 1 0 0 0
        0 1 0 0 0 0
        1 0 0 0 0 0
    """),
    (11, 0): _rows("""
        1 0 0 0 0 0
        0 1 0 0 0 0
        0 0 1 0 0 0
        0 0 0 1 0 0
        0 0 0 0 1 0
        0 0 0 0 0 1
    """),
    (11, 1): _rows("""
        0  r2 0  0  0  0
        r2 0  1  0  0  0
        0  1  0  1  0  0
        0  0  1  0  1  0
        0  0  0  1  0  1
        0  0  0  0  1  1
    """),
    (11, 2): _rows("""
        0  0  r2 0  0  0
        0  1  0  1  0  0
        r2 0  0  0  1  0
        0  1  0  0  0  1
        0  0  1  0  0  1
        0  0  0  1  1  0
    """),
    (11, 3): _rows("""
        0  0  0  r2 0  0
        0  0  1  0  1  0
        0  1  0  0  0  1
        r2 0  0  0  0  1
        0  1  0  0  1  0
        0  0  1  1  0  0
    """),
    (11, 4): _rows("""
        0  0  0  0  r2 0
        0  0  0  1  0  1
        0  0  1  0  0  1
        0  1  0  0  1  0
        r2 0  0  1  0  0
        0  1  1  0  0  0
    """),
    (11, 5): _rows("""
        0  0  0  0  0  r2
        0  0  0  0  1  1
        0  0  0  1  1  0
        0  0  1  1  0  0
        0  1  1  0  0  0
        r2 1  0  0  0  0
    """),
}

DCT_GENERAL = {
    10: _rows("""
        t0    r2t1  r2t2  r2t3  r2t4  t5
        r2t1  t0+t2 t1+t3 t2+t4 t3+t5 r2t4
        r2t2  t1+t3 t0+t4 t1+t5 t2+t4 r2t3
        r2t3  t2+t4 t1+t5 t0+t4 t1+t3 r2t2
        r2t4  t3+t5 t2+t4 t1+t3 t0+t2 r2t1
        t5    r2t4  r2t3  r2t2  r2t1  t0
    """),
    11: _rows("""
        t0    r2t1  r2t2  r2t3  r2t4  r2t5
        r2t1  t0+t2 t1+t3 t2+t4 t3+t5 t4+t5
        r2t2  t1+t3 t0+t4 t1+t5 t2+t5 t3+t4
        r2t3  t2+t4 t1+t5 t0+t5 t1+t4 t2+t3
        r2t4  t3+t5 t2+t5 t1+t4 t0+t3 t1+t2
        r2t5  t4+t5 t3+t4 t2+t3 t1+t2 t0+t1
    """),
}

DST_S_BASIS_11 = {
    1: _rows("""
        1 0 0 0 0
        0 1 0 0 0
        0 0 1 0 0
        0 0 0 1 0
        0 0 0 0 1
    """),
    2: _rows("""
        0 1 0 0 0
        1 0 1 0 0
        0 1 0 1 0
        0 0 1 0 1
        0 0 0 1 -1
    """),
    3: _rows("""
        0 0 1 0 0
        0 1 0 1 0
        1 0 1 0 1
        0 1 0 1 -1
        0 0 1 -1 1
    """),
    4: _rows("""
        0 0 0 1 0
        0 0 1 0 1
        0 1 0 1 -1
        1 0 1 -1 1
        0 1 -1 1 -1
    """),
    5: _rows("""
        0 0 0 0 1
        0 0 0 1 -1
        0 0 1 -1 1
        0 1 -1 1 -1
        1 -1 1 -1 1
    """),
}

DST_S_GENERAL_11 = _rows("""
    s1 s2       s3          s4             s5
    s2 s1+s3    s2+s4       s3+s5          s4-s5
    s3 s2+s4    s1+s3+s5    s2+s4-s5       s3+s5-s4
    s4 s3+s5    s2+s4-s5    s1+s3+s5-s4    s2+s4-s5-s3
    s5 s4-s5    s3+s5-s4    s2+s4-s5-s3    s1+s3+s5-s4-s2
""")

# As tabulated these are the negatives of x(i, j-k) - x(i, j+k).
DST_T_BASIS_11_DISPLAYED = {
    1: _rows("""
        0 -1 0 0 0
        -1 0 -1 0 0
        0 -1 0 -1 0
        0 0 -1 0 -1
        0 0 0 -1 1
    """),
    2: _rows("""
        1 0 -1 0 0
        0 0 0 -1 0
        -1 0 0 0 -1
        0 -1 0 0 1
        0 0 -1 1 0
    """),
    3: _rows("""
        0 1 0 -1 0
        1 0 0 0 -1
        0 0 0 0 1
        -1 0 0 1 0
        0 -1 1 0 0
    """),
    4: _rows("""
        0 0 1 0 -1
        0 1 0 0 1
        1 0 0 1 0
        0 0 1 0 0
        -1 1 0 0 0
    """),
    5: _rows("""
        0 0 0 1 1
        0 0 1 1 0
        0 1 1 0 0
        1 1 0 0 0
        1 0 0 0 0
    """),
}

DST_T_GENERAL_11 = _rows("""
    t2    t3-t1 t4-t2 t5-t3 t5-t4
    t3-t1 t4    t5-t1 t5-t2 t4-t3
    t4-t2 t5-t1 t5    t4-t1 t3-t2
    t5-t3 t5-t2 t4-t1 t3    t2-t1
    t5-t4 t4-t3 t3-t2 t2-t1 t1
""")


def parse_constant(entry: str) -> ExactQuadratic:
    m = _CONST.match(entry)
    if not m:
        raise ValueError(f"not a constant entry: {entry!r}")
    sign = -1 if m.group(1) else 1
    mult = int(m.group(2)) if m.group(2) else 1
    if m.group(3):
        return ExactQuadratic(0, sign * mult)
    return ExactQuadratic(sign * int(m.group(2)), 0)


def parse_linear(entry: str) -> dict[int, ExactQuadratic]:
    """``'r2t1+t3-t0'`` -> ``{1: √2, 3: 1, 0: -1}``."""
    out: dict[int, ExactQuadratic] = {}
    pos = 0
    for m in _TERM.finditer(entry):
        if m.start() != pos:
            raise ValueError(f"cannot parse {entry!r} at offset {pos}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        mult = int(m.group(2)) if m.group(2) else 1
        coef = ExactQuadratic(0, sign * mult) if m.group(3) else ExactQuadratic(sign * mult, 0)
        idx = int(m.group(5))
        out[idx] = out.get(idx, ExactQuadratic()) + coef
    if pos != len(entry):
        raise ValueError(f"cannot parse {entry!r} at offset {pos}")
    return out


def parse_matrix(rows) -> np.ndarray:
    """Exact object array from a table of constant entries."""
    out = exact_zeros((len(rows), len(rows[0])))
    for j, row in enumerate(rows):
        for k, entry in enumerate(row):
            out[j, k] = parse_constant(entry)
    return out


def parse_parametrized(rows, first_index: int, count: int) -> np.ndarray:
    """Coefficient tensor ``out[j, k, p]`` of parameter ``first_index + p``."""
    out = exact_zeros((len(rows), len(rows[0]), count))
    for j, row in enumerate(rows):
        for k, entry in enumerate(row):
            for idx, coef in parse_linear(entry).items():
                p = idx - first_index
                if not 0 <= p < count:
                    raise ValueError(f"parameter index {idx} out of range in {entry!r}")
                out[j, k, p] = out[j, k, p] + coef
    return out
