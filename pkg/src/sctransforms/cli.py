"""Command line: ``sctransforms {gen,check,solve,verify}``.

Exit status is 0 on success, 1 on a domain failure (not in the algebra,
singular system, failed verification) and 2 on bad arguments or input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import circulant, dct, dst, oracle, transforms
from .documents import DocumentError, MatrixDocument, parse_document
from .errors import NotInAlgebra, SingularElement, TransformAlgebraError
from .exact import to_float

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2

GEN_KINDS = ("dft", "dct", "dst", "dct-basis", "dst-basis-s", "dst-basis-t", "circulant-basis")
BASIS_KINDS = GEN_KINDS[3:]
ALGEBRAS = ("dct", "dst", "circulant")


class UsageError(Exception):
    pass


def _generate(kind, n, index, exact):
    if kind in BASIS_KINDS and index is None:
        raise UsageError(f"{kind} needs --index")
    if kind not in BASIS_KINDS and index is not None:
        raise UsageError(f"{kind} takes no --index")
    if exact and kind not in BASIS_KINDS:
        raise UsageError(f"--exact is only available for {', '.join(BASIS_KINDS)}")
    if kind == "dft":
        return transforms.dft_matrix(n).entries
    if kind == "dct":
        return transforms.dct_matrix(n).entries
    if kind == "dst":
        return transforms.dst_matrix(n).entries
    if kind == "dct-basis":
        return dct.dct_basis(n, index) if exact else dct.dct_basis_float(n, index)
    if kind == "dst-basis-s":
        return dst.dst_s_basis(n, index)
    if kind == "dst-basis-t":
        return dst.dst_t_basis(n, index)
    return circulant.circulant_shift_basis(n, index)


def _emit(doc: MatrixDocument, fmt: str, out) -> None:
    out.write(doc.to_csv() if fmt == "csv" else doc.to_json() + "\n")


def _read_document(path: str, n: int | None) -> MatrixDocument:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_document(text, n)


def _modulus(args, doc):
    n = args.n if args.n is not None else doc.n
    if args.n is not None and doc.n != args.n and doc.kind != "matrix":
        raise UsageError(f"--n {args.n} disagrees with document modulus {doc.n}")
    return n


def _plain(doc: MatrixDocument) -> np.ndarray:
    return to_float(doc.to_array()) if doc.entry_mode == "exact" else doc.to_array()


def _element(algebra, n, params):
    if algebra == "dct":
        return dct.DctElement(n, params)
    if algebra == "dst":
        return dst.DstElementS(n, params)
    return circulant.CirculantElement(n, params)


def cmd_gen(args, out, err) -> int:
    entries = _generate(args.kind, args.n, args.index, args.exact)
    doc = MatrixDocument.from_array(np.atleast_2d(entries) if entries.size else entries.reshape(0, 0),
                                    args.n, args.kind, exact=args.exact)
    _emit(doc, args.format, out)
    return EXIT_OK


def cmd_check(args, out, err) -> int:
    doc = _read_document(args.input, args.n)
    n = _modulus(args, doc)
    m = _plain(doc)
    try:
        if args.algebra == "dct":
            params = dct.dct_membership(m, n, args.tol).params
        elif args.algebra == "dst":
            params = dst.dst_membership(m, n, args.tol).s
        else:
            params = circulant.circulant_membership(m, n, args.tol).c
    except NotInAlgebra as exc:
        print(f"not in the {args.algebra} algebra: residual {exc.residual:.6e} > tol {exc.tol:.1e}", file=err)
        return EXIT_DOMAIN
    _emit(MatrixDocument.from_array(params, n, f"{args.algebra}-params"), args.format, out)
    return EXIT_OK


def cmd_solve(args, out, err) -> int:
    pdoc = _read_document(args.params, args.n)
    rdoc = _read_document(args.rhs, args.n)
    n = _modulus(args, pdoc)
    params, rhs = pdoc.to_vector(), rdoc.to_vector()
    if not np.any(np.imag(params)):
        params = np.real(params)
    if not np.any(np.imag(rhs)):
        rhs = np.real(rhs)
    e = _element(args.algebra, n, params)
    solver = {"dct": dct.dct_solve, "dst": dst.dst_solve, "circulant": circulant.circulant_solve}[args.algebra]
    try:
        x = solver(e, rhs, args.singular_tol)
    except SingularElement as exc:
        print(f"singular: eigenvalues at indices {list(exc.indices)} are within {args.singular_tol:.1e} of zero", file=err)
        return EXIT_DOMAIN
    dense = {"dct": dct.dct_general, "dst": dst.dst_s_general, "circulant": circulant.circulant_matrix}[args.algebra](e)
    residual = float(np.max(np.abs(dense @ x - rhs))) if x.size else 0.0
    print(f"residual {residual:.6e}", file=err)
    _emit(MatrixDocument.from_array(x, n, f"{args.algebra}-solution"), args.format, out)
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    if args.n_min < 1 or args.n_min > args.n_max:
        raise UsageError(f"need 1 <= --n-min <= --n-max, got {args.n_min}..{args.n_max}")
    report = oracle.run_suite(args.n_min, args.n_max, seed=args.seed)
    if args.format == "json":
        out.write(json.dumps(report.to_dict()) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "n", "max_residual", "tolerance", "tolerance_name", "passed"])
        for c in report.checks:
            writer.writerow([c.name, c.n, format(c.max_residual, ".17g"), c.tolerance, c.tolerance_name, c.passed])
        out.write(buf.getvalue())
    else:
        out.write(report.to_text() + "\n")
    if not report.ok:
        print(f"{len(report.failures)} check(s) failed", file=err)
        return EXIT_DOMAIN
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sctransforms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("json", "csv")):
        p.add_argument("--format", choices=choices, default=choices[0])

    g = sub.add_parser("gen", help="emit a transform or basis matrix")
    g.add_argument("kind", choices=GEN_KINDS)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--index", type=int)
    g.add_argument("--exact", action="store_true", help="exact a + b√2 entries (basis kinds only)")
    fmt(g)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="test membership and recover parameters")
    c.add_argument("input", help="matrix document (JSON or CSV), '-' for stdin")
    c.add_argument("--algebra", choices=ALGEBRAS, required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--tol", type=float)
    fmt(c)
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("solve", help="solve M x = rhs for an algebra element M")
    s.add_argument("params", help="parameter vector document")
    s.add_argument("rhs", help="right-hand side vector document")
    s.add_argument("--algebra", choices=ALGEBRAS, required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--singular-tol", type=float, default=1e-12)
    fmt(s)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--n-min", type=int, default=2)
    v.add_argument("--n-max", type=int, default=32)
    v.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED)
    fmt(v, ("text", "json", "csv"))
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "n", None) is not None and args.n < 1:
        print(f"sctransforms: --n must be positive, got {args.n}", file=err)
        return EXIT_USAGE
    try:
        return args.func(args, out, err)
    except (UsageError, DocumentError, TransformAlgebraError, TypeError, ValueError) as exc:
        print(f"sctransforms {args.command}: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
