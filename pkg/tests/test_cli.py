import io
import json
import subprocess
import sys

import pytest

from stci import fixtures
from stci.cli import main
from stci.scenarios import RunConfig, run_example, run_file


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_example_ex1_text():
    code, text = run("example", "ex1", "--order", "lex")
    assert code == 0
    assert "X5*X8^2 - 2*X6*X7*X8 + X7^3" in text
    assert "ideal J has 28 generators" in text
    assert text.strip().endswith("overall: PASS")


def test_example_json_bundle():
    code, text = run("example", "ex4prime", "--json")
    assert code == 0
    bundle = json.loads(text)
    assert bundle["schema"] == "stci.bundle/1"
    assert all(r["schema"] == "stci.report/1" for r in bundle["reports"])
    claims = [r["claim"] for r in bundle["reports"]]
    assert "certificate identities hold exactly" in claims


def test_selected_checks_and_caps():
    code, text = run("example", "ex3", "--check", "radical-equal", "--cap-spairs", "3")
    assert code == 2
    assert "INCONCLUSIVE" in text
    code, _ = run("example", "ex3", "--check", "points", "--points-budget", "10")
    assert code == 2


def test_scroll_c_and_fields():
    assert run("example", "scroll-c", "--c", "4")[0] == 0
    assert run("example", "ex4", "--field", "gf:32003", "--check", "radical-equal")[0] == 0


def test_input_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("verify", str(bad))[0] == 3
    assert run("verify", str(tmp_path / "missing.json"))[0] == 3
    assert run("example", "nope")[0] == 3
    assert run("example", "ex1", "--check", "bogus")[0] == 3
    assert run("example", "ex1", "--cap-spairs", "0")[0] == 3
    assert run("example", "ex1", "--field", "gf:4")[0] == 3


def test_verify_fixture_file_matches_example(tmp_path):
    path = tmp_path / "ex1.json"
    fixtures.load_matrix("ex1").dump(path)
    code, text = run("verify", str(path), "--json")
    assert code == 0
    reports = json.loads(text)["reports"]
    gens = next(r for r in reports if r["claim"].startswith("ideal J"))
    ref = run_example("ex1", RunConfig(checks=("generators",))).reports[0]
    assert [row["generator"] for row in gens["per_generator"]] == [row["generator"] for row in ref.per_generator]


def test_width_one_file_is_vacuous(tmp_path):
    path = tmp_path / "w1.json"
    path.write_text('{"variables": ["X1", "X2"], "big_blocks": [[[0, 1]]]}')
    code, text = run("verify", str(path), "--json")
    assert code == 0
    reports = json.loads(text)["reports"]
    assert reports[1]["details"]["count"] == 0 and reports[2]["details"]["count"] == 0


def test_invalid_sharing_file(tmp_path):
    path = tmp_path / "share.json"
    path.write_text('{"variables": ["X1", "X2", "X3"], "big_blocks": [[[0, 1]], [[2, 1]]]}')
    code, text = run("verify", str(path))
    assert code == 1
    assert "violation" in text


def test_sv_points_toric(tmp_path):
    assert run("sv", str(fixtures.data_path("ex3_partition.json")))[0] == 0
    out = tmp_path / "pts.txt"
    code, _ = run("points", str(fixtures.data_path("ex4prime_system.txt")), "-p", "2", "--out", str(out))
    assert code == 0 and out.read_text().count("\n") > 0
    assert run("points", str(fixtures.data_path("ex5_equations.txt")), "-p", "5", "--points-budget", "10")[0] == 2
    assert run("toric")[0] == 0
    assert run("toric", str(fixtures.data_path("ex4_curve.json")), "--json")[0] == 0


def test_run_file_generalized_matrix():
    bundle = run_file(fixtures.load_matrix("ex5"))
    # no system is known for a non-simple matrix, so only validation and J are reported
    assert bundle.exit_status == 0
    assert [r.claim for r in bundle.reports][:1] == ["barred matrix invariants"]


def test_run_config_rejects_bad_values():
    with pytest.raises(ValueError):
        RunConfig(max_spairs=0)
    with pytest.raises(ValueError):
        RunConfig(checks=("nope",))


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stci.cli", "example", "ex4", "--check", "toric"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "PASS" in proc.stdout
