import json

import pytest

from quivertex import quiver as qv
from quivertex import serialize as sz
from quivertex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_schur_golden(capsys):
    code, out, _ = run(capsys, "schur", "2,2")
    assert code == 0
    assert out.strip() == "1/12*p1^4 + 1/4*p2^2 - 1/3*p1*p3"


def test_schur_bases(capsys):
    code, out, _ = run(capsys, "schur", "2,1", "--basis", "m")
    assert code == 0
    assert out.strip() == "2*m(1,1,1) + m(2,1)"
    code, out, _ = run(capsys, "schur", "2,1", "--basis", "schur")
    assert out.strip() == "s(2,1)"
    code, out, _ = run(capsys, "schur", "-", "--basis", "p")
    assert out.strip() == "1"


def test_hall(capsys):
    code, out, _ = run(capsys, "hall", "p2", "p2")
    assert code == 0 and out.strip() == "2"


def test_jack(capsys):
    code, out, _ = run(capsys, "jack", "2", "1/2")
    assert code == 0
    # P_(2) at alpha = 1/2: m_2 + 4/3 m_11 = 2/3 p1^2 + 1/3 p2
    assert out.strip() == "2/3*p1^2 + 1/3*p2"


def test_gr_integral_golden(capsys):
    code, out, _ = run(capsys, "gr-integral", "2", "4", "p1^4")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "gr-integral", "2", "4", "p1*p3")
    assert out.strip() == "-1"


def test_gr_class_both_routes_agree(capsys):
    code, out1, _ = run(capsys, "gr-class", "2", "4")
    code2, out2, _ = run(capsys, "gr-class", "2", "4", "--via", "wallcross")
    assert code == code2 == 0
    assert out1 == out2
    assert out1.strip().startswith("Q^4 q^2 (x) ")


def test_gr_class_json(capsys):
    code, out, _ = run(capsys, "--json", "gr-class", "1", "2")
    assert code == 0
    data = json.loads(out)
    assert data["N"] == 2 and data["k"] == 1
    assert data["f"] == [[[-1, 1], [1]]]


def test_euler_with_file(tmp_path, capsys):
    path = tmp_path / "beilinson.json"
    path.write_text(json.dumps(sz.quiver_to_json(qv.builtin("beilinson_p2"))))
    code, out, _ = run(capsys, "euler", str(path), "1,0,0", "0,1,0")
    assert code == 0 and out.strip() == "-3"
    code, out, _ = run(capsys, "euler", str(path), "1,0,0", "0,1,0", "--sym")
    assert code == 0 and out.strip() == "-3"


def test_virasoro_bracket_command(tmp_path, capsys):
    path = tmp_path / "q.json"
    path.write_text(json.dumps(sz.quiver_to_json(qv.builtin("beilinson_p2"))))
    code, out, _ = run(capsys, "virasoro-bracket", str(path), "--max-n", "2", "--max-deg", "4")
    assert code == 0
    assert "PASS overall" in out


def test_gr_constraints_command(capsys):
    code, out, _ = run(capsys, "gr-constraints", "2", "4", "--max-n", "3")
    assert code == 0
    assert "PASS overall" in out


def test_gr_recursion_command(capsys):
    code, out, _ = run(capsys, "gr-recursion", "2", "4", "--norm", "2")
    assert code == 0
    assert "p[2,2] = 2" in out and "p[3,1] = -1" in out


def test_hecke_command(capsys):
    code, out, _ = run(capsys, "hecke", "2", "1")
    assert code == 0 and out.strip() == "1/2*p1^2 + 1/2*p2"
    code, out, _ = run(capsys, "hecke", "0", "p2", "--sym")
    assert code == 0


def test_cs_command(capsys):
    code, out, _ = run(capsys, "cs", "p1")
    assert code == 0 and out.strip() == "0"


def test_singular_command(capsys):
    code, out, _ = run(capsys, "singular", "2", "1", "3")
    assert code == 0
    assert "PASS variant beta_sq/2" in out
    assert "FAIL variant 2/beta_sq" in out


def test_deterministic_output(capsys):
    _, out1, _ = run(capsys, "--json", "gr-class", "2", "4", "--via", "wallcross")
    _, out2, _ = run(capsys, "--json", "gr-class", "2", "4", "--via", "wallcross")
    assert out1 == out2


def test_input_error_exit_code(capsys):
    code, _, err = run(capsys, "gr-class", "3", "2")
    assert code == 2
    assert err.startswith("error:")
    code, _, err = run(capsys, "euler", "/nonexistent.json", "1", "1")
    assert code == 2


def test_quiver_error_carries_machine_code(tmp_path, capsys):
    path = tmp_path / "cyclic.json"
    path.write_text(
        json.dumps(
            {
                "vertices": ["a", "b"],
                "arrows": [{"src": "a", "tgt": "b", "deg": 0}, {"src": "b", "tgt": "a", "deg": 0}],
            }
        )
    )
    code, _, err = run(capsys, "euler", str(path), "1,1", "1,1")
    assert code == 2
    assert err.startswith("error[cycle]:")


def test_parse_error_exit_code(capsys):
    with pytest.raises(SystemExit) as e:
        main(["hall", "p2", "bogus$"])
    assert e.value.code == 2


def test_selftest_fast(capsys):
    code, out, _ = run(capsys, "selftest", "--suite", "fast")
    assert code == 0
    assert "PASS overall" in out
