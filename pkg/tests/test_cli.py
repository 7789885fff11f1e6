import json
import subprocess
import sys

_BASE = [sys.executable, "-m", "bracketdec.cli"]


def run_cli(*args):
    proc = subprocess.run(_BASE + list(args), capture_output=True, text=True)
    doc = json.loads(proc.stdout) if proc.stdout.strip() else None
    return proc.returncode, doc, proc.stderr


def test_check_plane_ok():
    code, doc, err = run_cli("check", "--curve", "plane y^2 - x^3 - x")
    assert code == 0 and doc["status"] == "ok"
    assert doc["curve"] == {"variant": "plane", "equation": "y^2 - x^3 - x",
                            "tau": ["2*y", "3*x^2 + 1"]}
    cert = doc["certificates"]["smoothness"]
    assert cert["target"] == "1" and len(cert["cofactors"]) == 3
    assert err.startswith("ok:")


def test_check_space_ok():
    code, doc, _ = run_cli("check", "--curve",
                           "space y - x^2; z - x^3 tau 1, 2x, 3x^2")
    assert code == 0
    assert doc["certificates"]["preserves_ideal"] is True
    assert doc["certificates"]["unit"]["target"] == "1"


def test_check_not_smooth_exits_3():
    code, doc, err = run_cli("check", "--curve", "plane y^2 - x^3")
    assert code == 3
    assert doc["status"] == "error" and doc["error"]["code"] == "not_smooth"
    assert err.startswith("error [not_smooth]")


def test_parse_error_exits_2():
    code, doc, _ = run_cli("decompose", "--curve", "plane y^2 - (", "--target", "1")
    assert code == 2 and doc["error"]["code"] == "parse_error"
    code, doc, _ = run_cli("check", "--curve", "circle x^2 + y^2 - 1")
    assert code == 2


def test_step_budget_exits_4():
    code, doc, _ = run_cli("decompose", "--curve", "plane y^2 - x^7 - x - 1",
                           "--target", "x^4 + y", "--max-steps", "5")
    assert code == 4 and doc["error"]["code"] == "step_budget_exceeded"


def test_decompose_plane():
    code, doc, _ = run_cli("decompose", "--curve", "plane y^2 - x^3 - x",
                           "--target", "1")
    assert code == 0
    assert doc["length"] <= 2 and doc["verification"] is True
    assert doc["target"] == "1"
    assert all(len(pair) == 2 for pair in doc["decomposition"])


def test_decompose_line_and_space():
    code, doc, _ = run_cli("decompose", "--curve", "line", "--target", "x^2")
    assert code == 0 and doc["length"] == 1 and doc["verification"] is True
    code, doc, _ = run_cli("decompose", "--curve",
                           "space y - x^2; z - x^3 tau 1, 2x, 3x^2",
                           "--target", "x")
    assert code == 0 and doc["length"] == 1
    assert doc["decomposition"] == [["1", "1/2*x^2"]]


def test_decompose_localized_line():
    code, doc, _ = run_cli("decompose", "--curve", "line minus x",
                           "--target", "1 / x^2")
    assert code == 0 and doc["length"] == 1 and doc["verification"] is True
    assert doc["target"] == "(1) / (x)^2"


def test_decompose_trace():
    code, doc, _ = run_cli("decompose", "--curve", "plane y^2 - x^3 - x",
                           "--target", "x + 1", "--trace")
    assert code == 0
    assert doc["trace"]["method"] == "plane"
    assert "membership_cofactors" in doc["trace"]


def test_decompose_grlex():
    code, doc, _ = run_cli("decompose", "--curve", "plane y^2 - x^3 - x",
                           "--target", "x^2 + 1", "--order", "grlex")
    assert code == 0 and doc["verification"] is True


def test_decompose_output_feeds_verify():
    code, doc, _ = run_cli("decompose", "--curve", "plane y^2 - x^3 - x",
                           "--target", "x^3 + 2x + 1")
    assert code == 0
    pairs = "; ".join(f"{a}, {b}" for a, b in doc["decomposition"])
    code2, doc2, _ = run_cli("verify", "--curve", "plane y^2 - x^3 - x",
                             "--target", "x^3 + 2x + 1", "--pairs", pairs)
    assert code2 == 0 and doc2["verification"] is True


def test_verify_rejects_wrong_pairs():
    code, doc, err = run_cli("verify", "--curve", "line", "--target", "x",
                             "--pairs", "x, 1")
    assert code == 1
    assert doc["status"] == "error"
    assert doc["error"]["code"] == "verification_failed"
    assert doc["verification"] is False


def test_verify_line_example():
    code, doc, _ = run_cli("verify", "--curve", "line", "--target", "x",
                           "--pairs", "-1/2x^2, 1")
    assert code == 0 and doc["verification"] is True


def test_localize_command():
    code, doc, _ = run_cli("localize", "--curve", "line minus x",
                           "--pairs", "-x, 1", "--k", "1")
    assert code == 0
    assert doc["k"] == 1 and doc["length"] == 1
    assert doc["decomposition"] == [["-1", "(1) / (x)"]]
    assert doc["verification"] is True
    assert doc["target"] == "(1) / (x)^2"


def test_localize_requires_localized_curve():
    code, doc, _ = run_cli("localize", "--curve", "line", "--pairs", "-x, 1",
                           "--k", "1")
    assert code == 3 and doc["error"]["code"] == "validation_error"


def test_localized_element_parse_error():
    code, doc, _ = run_cli("verify", "--curve", "line minus x", "--target",
                           "1 / (x + 1)", "--pairs", "1, 1")
    assert code == 2 and doc["error"]["code"] == "parse_error"


def test_json_output_deterministic():
    args = ("decompose", "--curve", "plane y^2 - x^5 - x", "--target", "x*y + 3")
    first = subprocess.run(_BASE + list(args), capture_output=True, text=True)
    second = subprocess.run(_BASE + list(args), capture_output=True, text=True)
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["verification"] is True
