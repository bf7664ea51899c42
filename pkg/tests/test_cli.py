import io
import json
import math

import numpy as np
import pytest

from sctransforms.cli import main
from sctransforms.dct import DctElement, dct_general
from sctransforms.documents import MatrixDocument


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc.to_json() if isinstance(doc, MatrixDocument) else doc)
    return str(p)


def test_gen_exact_dct_basis():
    code, out, _ = run("gen", "dct-basis", "--n", "7", "--index", "3", "--exact")
    assert code == 0
    d = json.loads(out)
    assert d["entry_mode"] == "exact"
    assert d["entries"][3] == {"a": 0, "b": 1}
    assert d["entries"][6] == {"a": 1, "b": 0}


def test_gen_identity_and_dst():
    code, out, _ = run("gen", "dct-basis", "--n", "5", "--index", "0")
    np.testing.assert_array_equal(MatrixDocument.from_json(out).to_array(), np.eye(3))
    code, out, _ = run("gen", "dst", "--n", "11", "--format", "csv")
    a = np.array([[float(v) for v in line.split(",")] for line in out.splitlines()])
    j = np.arange(1, 6)
    np.testing.assert_allclose(a, 2 / math.sqrt(11) * np.sin(2 * np.pi * np.outer(j, j) / 11), atol=1e-15)


@pytest.mark.parametrize("kind", ["dst-basis-s", "dst-basis-t", "circulant-basis"])
def test_gen_exact_integer_kinds(kind):
    code, out, _ = run("gen", kind, "--n", "9", "--index", "2", "--exact")
    assert code == 0 and json.loads(out)["entry_mode"] == "exact"


def test_gen_dft_is_complex():
    d = json.loads(run("gen", "dft", "--n", "4")[1])
    assert d["entry_mode"] == "complex" and d["entries"][5] == {"re": pytest.approx(0, abs=1e-15), "im": -0.5}


@pytest.mark.parametrize(
    "argv",
    [
        ("gen", "dct-basis", "--n", "7"),
        ("gen", "dct", "--n", "7", "--exact"),
        ("gen", "dct", "--n", "7", "--index", "1"),
        ("gen", "dct-basis", "--n", "7", "--index", "9"),
        ("gen", "nope", "--n", "7"),
        ("gen", "dct", "--n", "0"),
        ("gen", "dct", "--n", "x"),
        (),
    ],
)
def test_usage_errors(argv, capsys):
    code, _, _ = run(*argv)
    assert code == 2


def test_check_membership(tmp_path):
    path = write(tmp_path, "id.json", MatrixDocument.from_array(np.eye(6), 10, "matrix"))
    code, out, _ = run("check", path, "--algebra", "dct")
    assert code == 0
    np.testing.assert_allclose(MatrixDocument.from_json(out).to_vector(), np.eye(6)[0])

    m = dct_general(DctElement(10, np.arange(1, 7)), exact=True)
    path = write(tmp_path, "ex.json", MatrixDocument.from_array(m, 10, "matrix"))
    code, out, _ = run("check", path, "--algebra", "dct", "--n", "10")
    assert code == 0
    np.testing.assert_allclose(MatrixDocument.from_json(out).to_vector(), np.arange(1, 7), atol=1e-12)


def test_check_nonmember_and_csv(tmp_path):
    path = write(tmp_path, "ones.csv", "\n".join([",".join(["1"] * 5)] * 5) + "\n")
    code, out, err = run("check", path, "--algebra", "dst", "--n", "11")
    assert code == 1 and out == ""
    residual = float(err.split("residual")[1].split()[0])
    assert residual > 0.1


def test_check_circulant(tmp_path):
    c = np.arange(4.0)
    m = c[(np.arange(4)[None, :] - np.arange(4)[:, None]) % 4]
    path = write(tmp_path, "c.json", MatrixDocument.from_array(m, 4, "matrix"))
    code, out, _ = run("check", path, "--algebra", "circulant", "--format", "csv")
    assert code == 0 and out.strip() == "0,1,2,3"


def test_check_malformed(tmp_path):
    assert run("check", write(tmp_path, "bad.json", "{nope"), "--algebra", "dct")[0] == 2
    assert run("check", str(tmp_path / "missing.json"), "--algebra", "dct")[0] == 2
    wrong = write(tmp_path, "w.json", MatrixDocument.from_array(np.eye(3), 10, "matrix"))
    assert run("check", wrong, "--algebra", "dct")[0] == 2


def test_solve(tmp_path):
    b = MatrixDocument.from_array(np.arange(1.0, 7.0), 10, "rhs")
    rhs = write(tmp_path, "b.json", b)
    e0 = write(tmp_path, "e0.json", MatrixDocument.from_array(np.eye(6)[0], 10, "params"))
    code, out, err = run("solve", e0, rhs, "--algebra", "dct")
    assert code == 0 and "residual" in err
    np.testing.assert_allclose(MatrixDocument.from_json(out).to_vector(), np.arange(1, 7), atol=1e-12)

    b10 = write(tmp_path, "b10.json", MatrixDocument.from_array(np.arange(1.0, 11.0), 10, "rhs"))
    two = write(tmp_path, "two.json", MatrixDocument.from_array(2 * np.eye(10)[0], 10, "params"))
    code, out, _ = run("solve", two, b10, "--algebra", "circulant")
    np.testing.assert_allclose(MatrixDocument.from_json(out).to_vector(), np.arange(1, 11) / 2, atol=1e-12)


def test_solve_dst_residual(tmp_path):
    rng = np.random.default_rng(16)
    s = rng.normal(size=7)
    s[0] += 4 * np.sum(np.abs(s))
    p = write(tmp_path, "s.json", MatrixDocument.from_array(s, 16, "params"))
    b = write(tmp_path, "b.json", MatrixDocument.from_array(rng.normal(size=7), 16, "rhs"))
    code, _, err = run("solve", p, b, "--algebra", "dst")
    assert code == 0
    assert float(err.split()[1]) <= 1e-8


def test_solve_singular(tmp_path):
    z = write(tmp_path, "z.json", MatrixDocument.from_array(np.zeros(7), 16, "params"))
    b = write(tmp_path, "b.json", MatrixDocument.from_array(np.ones(7), 16, "rhs"))
    code, _, err = run("solve", z, b, "--algebra", "dst")
    assert code == 1 and "singular" in err


def test_verify():
    code, out, _ = run("verify", "--n-min", "7", "--n-max", "7")
    assert code == 0
    assert any(line.startswith("dct-basis-golden n=7") and line.endswith("pass") for line in out.splitlines())
    code, out, _ = run("verify", "--n-min", "2", "--n-max", "5", "--format", "json", "--seed", "9")
    d = json.loads(out)
    assert code == 0 and d["ok"] and d["seed"] == 9 and d["n_range"] == [2, 5]
    assert run("verify", "--n-min", "3", "--n-max", "4", "--format", "csv")[1].startswith("name,n,")


def test_verify_bad_range():
    assert run("verify", "--n-min", "9", "--n-max", "3")[0] == 2
    assert run("verify", "--n-min", "0", "--n-max", "3")[0] == 2


def test_verify_failure_exit(monkeypatch):
    from sctransforms import oracle

    def fake(n_min, n_max, seed):
        return oracle.SuiteReport((n_min, n_max), seed, [oracle.Check("x", n_min, 1.0, 0.0, "exact")])

    monkeypatch.setattr(oracle, "run_suite", fake)
    code, out, err = run("verify", "--n-min", "3", "--n-max", "3")
    assert code == 1 and "FAIL" in out


@pytest.mark.slow
def test_verify_2_to_32():
    assert run("verify", "--n-min", "2", "--n-max", "32")[0] == 0
