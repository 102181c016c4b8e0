import json
import subprocess
import sys

import pytest

from mvfusion.cli import main, read_polynomial_file
from mvfusion.corpus import default_corpus_path
from mvfusion.idealkit import Ideal
from mvfusion.polyring import ring_new


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_fuse_human(capsys):
    assert run(capsys, "fuse", "22", "11/33", "--m", "3")[:2] == (0, "33:1  22/33:1  23/3:2")
    assert run(capsys, "fuse", "-", "-", "--m", "3")[:2] == (0, "-:1")


def test_fuse_json(capsys):
    code, out, _ = run(capsys, "fuse", "2", "1/3", "--m", "4", "--json")
    d = json.loads(out)
    assert code == 0
    assert [c["multiplicity"] for c in d["components"]] == [1, 1]
    assert set(d) == {"input", "mode", "mu", "lambda", "components", "degree_J"}
    assert run(capsys, "fuse", "2", "1/3", "--m", "4", "--json")[1] == out


def test_small_commands(capsys):
    assert run(capsys, "lusztig", "1112/23", "--m", "3")[:2] == (0, "1,0,1")
    assert run(capsys, "sigma", "0,0,0,0,0,0", "--m", "4")[:2] == (0, "-")
    assert run(capsys, "sigma", "1,0,0,0,0,0", "--m", "4")[:2] == (0, "12")
    assert run(capsys, "tabs", "4,2", "3,2,1")[1].split() == ["1112/23", "1113/22"]


def test_govar_output(capsys):
    code, out, _ = run(capsys, "govar", "13/2/4", "--m", "4")
    assert code == 0
    ring = ring_new((1, 1, 1, 1), with_parameter=False, upper_only=True)
    got = Ideal.parse(ring, out.split(";"))
    want = Ideal.parse(ring, ["A[1,2,1]", "A[3,4,1]", "A[1,3,1]*A[2,4,1] - A[2,3,1]*A[1,4,1]"])
    assert got == want
    assert out.split("; ")[:2] == ["A[1,2,1]", "A[3,4,1]"]


def test_gb(tmp_path, capsys):
    f = tmp_path / "sys.txt"
    f.write_text("vars: x, y\nx^2 + 2*x*y^2\nx*y + 2*y^3 - 1\n")
    code, out, _ = run(capsys, "gb", str(f), "--order", "lex")
    assert code == 0 and out.splitlines() == ["x", "y^3 - 1/2"]
    ring, polys = read_polynomial_file("a*b - c; b^2\n")
    assert ring.names == ("a", "b", "c") and len(polys) == 2


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "fuse", "21", "1", "--m", "2")[0] == 1
    assert run(capsys, "sigma", "1,2", "--m", "4")[0] == 1
    assert run(capsys, "gb", str(tmp_path / "missing.txt"))[0] == 1
    assert run(capsys, "fuse", "22", "11/33", "--m", "3", "--budget", "2")[0] == 3
    assert run(capsys, "corpus", str(tmp_path / "none.txt"))[0] == 1


def test_corpus_runner(capsys, tmp_path):
    code, out, _ = run(capsys, "corpus", "--jobs", "1")
    assert code == 0 and out.endswith("16/16 pass")
    text = default_corpus_path().read_text().replace("expect: 13/2:1  12/3:1", "expect: 13/2:1  12/3:2")
    bad = tmp_path / "bad.txt"
    bad.write_text(text)
    code, out, _ = run(capsys, "corpus", str(bad), "--jobs", "2")
    assert code == 2 and out.endswith("15/16 pass")
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    code, out, err = run(capsys, "corpus", str(empty))
    assert (code, out) == (0, "0/0 pass") and "warning" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mvfusion", "lusztig", "2/4", "--m", "4"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "1,0,0,0,1,0"


def test_requires_command():
    with pytest.raises(SystemExit):
        main([])
