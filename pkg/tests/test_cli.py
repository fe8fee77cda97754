import io
import json
import subprocess
import sys

import pytest

from supertropical.cli import VERBS, build_parser, run


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_every_verb_is_registered():
    sub = next(a for a in build_parser()._actions if a.dest == "verb")
    assert set(sub.choices) == set(VERBS)


def test_det(files):
    a = files("a.stm", "0 0\n1 2\n")
    assert call("det", a) == (0, "2 (nonsingular)\n")
    code, out = call("det", a, "--oracle")
    assert code == 0 and "oracle: 2 (agree)" in out


def test_det_requires_square(files, capsys):
    code, _ = call("det", files("c.stm", "0\n1\n"))
    assert code == 1
    assert "determinant requires square matrix" in capsys.readouterr().err


def test_parse_error_exit(files, capsys):
    code, _ = call("det", files("bad.stm", "0 1\n2 zz\n"))
    assert code == 2
    assert "line 2, column 3" in capsys.readouterr().err
    assert call("det", "/nonexistent/file.stm")[0] == 2


def test_domain_error_exit(files):
    assert call("qinv", files("s.stm", "0 -inf\n1 -inf\n"))[0] == 1


def test_eigen(files):
    code, out = call("eigen", files("e.stm", "-inf 14 8\n0 -inf -inf\n0 1 -inf\n"))
    assert code == 0
    assert out.splitlines() == ["7 (7, 0, 0) exact", "-5 (0, 5, 11)"]


def test_matrix_verbs(files):
    a = files("a.stm", "0 0\n1 2\n")
    v = files("v.stm", "0 1\n")
    assert call("adj", a)[1].split() == ["2", "0", "1", "0"]
    assert call("qinv", a)[1].split() == ["0", "-2", "-1", "-2"]
    assert call("pow", a, "4")[1].split() == ["5", "6", "7", "8"]
    assert call("mul", a, a)[1].split() == ["1", "2", "3", "4"]
    assert call("add", a, a)[1].split() == ["0g", "0g", "1g", "2g"]
    assert call("classify", a)[1] == "nonsingular\n"
    assert call("solve", a, v)[1].splitlines() == ["w = (0, -1g)", "A w = (0, 1g)"]
    assert call("dep", a)[1] == "independent\n"
    assert "0g" in call("qid", a)[1]


def test_polynomial_verbs(files):
    e = files("e.stm", "-inf -inf 7\n4 -inf -inf\n3 5 -inf\n")
    assert call("charpoly", e, "--oracle")[1].splitlines() == ["l^3 + 10 l + 16", "oracle: l^3 + 10 l + 16 (agree)"]
    assert call("essential", e)[1] == "l^3 + 16\n"
    assert call("roots", e)[1] == "corners: 16/3\n"


def test_vnreg(files):
    code, out = call("vnreg", files("a.stm", "10 0 10\n0 10 0\n0 10 1\n"))
    assert (code, out) == (0, "not regular at (1,2)\n")


def test_graph_and_diag(files):
    code, out = call("graph", files("g.stm", "0 1\n-inf 0\n"), "--json")
    doc = json.loads(out)
    assert doc["cyclic_cover"] == [1, 2]
    assert [e["on_cycle"] for e in doc["edges"]] == [True, False, True]
    code, out = call("diag", files("d.stm", "4 0\n0 1\n"))
    assert "4 0g" in out


def test_check(capsys):
    code, out = call("check", "laplace", "--cases", "40", "--seed", "5")
    assert code == 0
    assert out.startswith("laplace: 40/40 passed")


def test_json_element_encoding(files):
    code, out = call("det", files("a.stm", "1 2\n3 4\n"), "--json")
    doc = json.loads(out)
    assert doc["value"] == {"layer": "ghost", "value": "5"}
    assert doc["classification"] == "singular"
    assert doc["attaining"] == [[1, 2], [2, 1]]
    code, out = call("adj", files("z.stm", "-inf -inf\n-inf -inf\n"), "--json")
    assert json.loads(out)["matrix"][0][0] == {"layer": "tangible", "value": "-inf"}


def test_console_entry_point(files):
    a = files("a.stm", "0 0\n1 2\n")
    proc = subprocess.run([sys.executable, "-m", "supertropical.cli", "det", a], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2 (nonsingular)\n"


@pytest.mark.parametrize("verb, text", [
    ("eigen", "4 0\n0 1\n"),
    ("eigen", "-inf 14 8\n0 -inf -inf\n0 1 -inf\n"),
    ("roots", "-inf -inf 7\n4 -inf -inf\n3 5 -inf\n"),
    ("qid", "0 0\n1 2\n"),
    ("adj", "10 0 10\n0 10 0\n0 10 1\n"),
])
def test_json_is_byte_stable(files, verb, text):
    path = files("m.stm", text)
    runs = [subprocess.run([sys.executable, "-m", "supertropical.cli", verb, path, "--json"],
                           capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1]
    json.loads(runs[0])
