import io
import re
import subprocess
import sys

import pytest

from strad.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_verify_main_pass():
    code, out = call("verify-main", "--n", "3", "--m", "2")
    assert code == 0
    assert out == "A(3,2): PASS depth 8 (expected 8)\n"


def test_strings_count():
    code, out = call("strings", "--family", "2,0")
    assert code == 0
    assert out.splitlines()[-1] == "7 strings"


def test_ar_quiver_dot(tmp_path):
    dot = tmp_path / "out.dot"
    code, out = call("ar-quiver", "--family", "3,2", "--dot", str(dot))
    assert code == 0
    text = dot.read_text()
    assert len(re.findall(r"^  n\d+ \[label=", text, re.M)) == 26
    code2, _ = call("ar-quiver", "--family", "3,2", "--dot", str(tmp_path / "again.dot"))
    assert (tmp_path / "again.dot").read_text() == text


def test_depth_expression():
    code, out = call("depth", "f1*g5*g4*g3*g2*g1*f2*f3", "--family", "3,2")
    assert code == 0 and out.endswith("depth=8\nin rad^8: yes\nin rad^9: no\n")
    code, out = call("depth", "f1*f2*f3", "--family", "3,2")
    assert out.endswith("depth=zero morphism\n")


def test_hom_and_module():
    code, out = call("hom", "e(2)", "beta1 ~alpha ~beta1", "--family", "3,2")
    assert code == 0 and out.startswith("dim Hom = 2\n")
    code, out = call("module", "beta1", "--family", "2,0")
    assert code == 0 and "dims 1:1 2:1" in out


def test_validate_and_bands(tmp_path):
    assert call("validate", "--family", "2,2")[0] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("vertex 1 2 3 4\narrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 2 -> 4\n")
    code, out = call("validate", "--input", str(bad))
    assert code == 1 and "condition 2" in out
    k = tmp_path / "kronecker.txt"
    k.write_text("vertex 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\n")
    code, out = call("bands", "--input", str(k))
    assert code == 0 and out.endswith("1 bands\n")
    code, _ = call("strings", "--input", str(k))
    assert code == 1


def test_report_file(tmp_path):
    rep = tmp_path / "r.txt"
    code, _ = call("verify-main", "--grid", "2:2,0:1", "--report", str(rep))
    assert code == 0
    text = rep.read_text()
    assert text.count("result = PASS") == 2


def test_lemma1_and_it_check():
    code, out = call("verify-lemma1", "--family", "3,2")
    assert code == 0 and "certified" in out
    code, out = call("it-check", "--n", "2", "--m", "0")
    assert code == 0 and "PASS" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["strings"],
        ["verify-main"],
        ["nonsense"],
        ["verify-main", "--grid", "4:2,0:1"],
        ["depth", "f1"],
    ],
)
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_domain_error_exit_one():
    assert call("module", "alpha alpha", "--family", "2,0")[0] == 1


def test_threads_do_not_change_output():
    a = call("verify-main", "--grid", "2:3,0:0", "--threads", "1")
    b = call("verify-main", "--grid", "2:3,0:0", "--threads", "2")
    assert a == b


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "strad.cli", "strings", "--family", "2,0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "7 strings" in res.stdout
