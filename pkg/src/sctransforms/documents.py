"""Matrix documents: the JSON/CSV wire format used by the command line.

A document is self-describing::

    {"n": 7, "kind": "dct-basis", "rows": 4, "cols": 4,
     "entry_mode": "exact", "entries": [{"a": 0, "b": 1}, ...]}

Entries are row-major. Exact entries are ``a + b√2``; complex entries are
``{"re": .., "im": ..}``; float entries are bare numbers. Vectors are
documents with a single row.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from numbers import Integral

import numpy as np

from .exact import ExactQuadratic, is_exact

EXACT, FLOAT, COMPLEX = "exact", "float", "complex"
ENTRY_MODES = (EXACT, FLOAT, COMPLEX)


class DocumentError(ValueError):
    """Malformed or inconsistent document."""


@dataclass(frozen=True)
class MatrixDocument:
    n: int
    kind: str
    rows: int
    cols: int
    entry_mode: str
    entries: tuple

    def __post_init__(self):
        if self.entry_mode not in ENTRY_MODES:
            raise DocumentError(f"entry_mode must be one of {ENTRY_MODES}, got {self.entry_mode!r}")
        if self.rows < 0 or self.cols < 0 or self.rows * self.cols != len(self.entries):
            raise DocumentError(
                f"{self.rows}x{self.cols} needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        want = {EXACT: ExactQuadratic, FLOAT: float, COMPLEX: complex}[self.entry_mode]
        if not all(type(v) is want for v in self.entries):
            raise DocumentError(f"all entries must be {want.__name__} in {self.entry_mode} mode")

    @classmethod
    def from_array(cls, a, n: int, kind: str, exact: bool = False) -> MatrixDocument:
        a = np.asarray(a)
        if a.ndim == 1:
            a = a[None, :]
        if a.ndim != 2:
            raise DocumentError(f"expected a vector or matrix, got {a.ndim} dimensions")
        flat = a.ravel()
        if exact or (a.dtype == object and a.size and is_exact(a)):
            if a.dtype.kind in "iub":
                entries = tuple(ExactQuadratic(int(v)) for v in flat)
            elif a.dtype == object:
                entries = tuple(ExactQuadratic.coerce(v) for v in flat)
            else:
                raise DocumentError(f"exact mode needs integer or exact entries, got dtype {a.dtype}")
            mode = EXACT
        elif np.iscomplexobj(a):
            entries, mode = tuple(complex(v) for v in flat), COMPLEX
        else:
            entries, mode = tuple(float(v) for v in flat), FLOAT
        return cls(int(n), str(kind), a.shape[0], a.shape[1], mode, entries)

    def to_array(self) -> np.ndarray:
        """Numeric array; exact documents give an object array of :class:`ExactQuadratic`."""
        if self.entry_mode == EXACT:
            out = np.empty(len(self.entries), dtype=object)
            out[:] = list(self.entries)
        else:
            out = np.array(self.entries, dtype=float if self.entry_mode == FLOAT else complex)
        return out.reshape(self.rows, self.cols)

    def to_float_array(self) -> np.ndarray:
        if self.entry_mode == EXACT:
            return np.array([float(v) for v in self.entries], dtype=float).reshape(self.rows, self.cols)
        return self.to_array()

    def to_vector(self) -> np.ndarray:
        if self.rows != 1 and self.cols != 1:
            raise DocumentError(f"expected a vector document, got {self.rows}x{self.cols}")
        return self.to_float_array().ravel()

    # --- JSON

    def to_dict(self) -> dict:
        if self.entry_mode == EXACT:
            entries = [{"a": v.a, "b": v.b} for v in self.entries]
        elif self.entry_mode == COMPLEX:
            entries = [{"re": v.real, "im": v.imag} for v in self.entries]
        else:
            entries = list(self.entries)
        return {
            "n": self.n,
            "kind": self.kind,
            "rows": self.rows,
            "cols": self.cols,
            "entry_mode": self.entry_mode,
            "entries": entries,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d) -> MatrixDocument:
        if not isinstance(d, dict):
            raise DocumentError("document must be a JSON object")
        missing = {"n", "kind", "rows", "cols", "entry_mode", "entries"} - d.keys()
        if missing:
            raise DocumentError(f"document is missing fields {sorted(missing)}")
        mode, raw = d["entry_mode"], d["entries"]
        if not isinstance(raw, list):
            raise DocumentError("entries must be a list")
        for key in ("n", "rows", "cols"):
            if not isinstance(d[key], Integral) or isinstance(d[key], bool):
                raise DocumentError(f"{key} must be an integer")
        try:
            if mode == EXACT:
                entries = tuple(_exact_entry(v) for v in raw)
            elif mode == COMPLEX:
                entries = tuple(complex(_number(v["re"]), _number(v["im"])) for v in raw)
            elif mode == FLOAT:
                entries = tuple(float(_number(v)) for v in raw)
            else:
                raise DocumentError(f"unknown entry_mode {mode!r}")
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"malformed {mode} entry: {exc}") from exc
        return cls(d["n"], str(d["kind"]), d["rows"], d["cols"], mode, entries)

    @classmethod
    def from_json(cls, text: str) -> MatrixDocument:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc

    # --- CSV

    def to_csv(self) -> str:
        """One line per row; exact entries become 17-significant-digit decimals."""
        a = self.to_float_array()
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in a:
            writer.writerow([_format_number(v) for v in row])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, n: int, kind: str = "matrix") -> MatrixDocument:
        rows = [r for r in csv.reader(io.StringIO(text)) if r]
        if rows and len({len(r) for r in rows}) != 1:
            raise DocumentError("CSV rows have different lengths")
        try:
            values = [[complex(v.strip().replace(" ", "")) for v in r] for r in rows]
        except ValueError as exc:
            raise DocumentError(f"bad CSV entry: {exc}") from exc
        a = np.array(values, dtype=complex).reshape(len(rows), len(rows[0]) if rows else 0)
        if not np.any(a.imag):
            a = a.real
        return cls.from_array(a, n, kind)


def _number(v):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise TypeError(f"expected a number, got {v!r}")
    return v


def _exact_entry(v):
    if not isinstance(v, dict):
        raise TypeError(f"expected {{a, b}}, got {v!r}")
    a, b = v["a"], v["b"]
    if not all(isinstance(x, Integral) and not isinstance(x, bool) for x in (a, b)):
        raise TypeError(f"exact entry needs integer a and b, got {v!r}")
    return ExactQuadratic(a, b)


def _format_number(v) -> str:
    if isinstance(v, complex) or np.iscomplexobj(v):
        v = complex(v)
        if v.imag == 0:
            return format(v.real, ".17g")
        return f"{v.real:.17g}{v.imag:+.17g}j"
    return format(float(v), ".17g")


def parse_document(text: str, n: int | None = None) -> MatrixDocument:
    """Accept either a JSON document or bare CSV (which needs ``n``)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return MatrixDocument.from_json(text)
    if n is None:
        raise DocumentError("CSV input needs the modulus")
    return MatrixDocument.from_csv(text, n)
