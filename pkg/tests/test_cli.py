import json
import shutil
import subprocess
import sys

import pytest

from dblgpd.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def gen_file(capsys, tmp_path, expr, name="g.json", levels=None):
    extra = ["--levels", str(levels)] if levels is not None else []
    code, out, _ = run(capsys, "gen", *expr.split(), *extra)
    assert code == 0
    p = tmp_path / name
    p.write_text(out)
    return str(p)


def test_validate_generated_file(capsys, tmp_path):
    p = gen_file(capsys, tmp_path, "deloop Z3")
    code, out, _ = run(capsys, "validate", p, "--json")
    assert code == 0 and json.loads(out)["ok"]


def test_validate_rejects_a_double_category(capsys):
    code, _, _ = run(capsys, "validate", "gen:unitcell")
    assert code == 1
    code, _, _ = run(capsys, "validate", "gen:unitcell", "--allow-category")
    assert code == 0


def test_filling(capsys):
    assert run(capsys, "filling", "gen:Pair(0,1)")[0] == 0
    code, out, _ = run(capsys, "filling", "gen:nofill", "--json")
    assert code == 1 and json.loads(out)["filling"]["counterexamples"]


def test_pi(capsys):
    code, out, _ = run(capsys, "pi", "gen:Ab(Z2)", "--json")
    assert code == 0
    rep = json.loads(out)
    assert json.dumps(rep)  # plain JSON
    assert "pi2" in json.dumps(rep)


def test_nerve_and_dump(capsys):
    code, out, _ = run(capsys, "nerve", "gen:pair{0,1}", "--levels", "1,1", "--json")
    assert code == 0
    code, out, _ = run(capsys, "nerve", "gen:Ab(Z2)", "--dump", "1,1", "--json")
    assert code == 0 and "squares" in out


def test_diag_kan_witness(capsys):
    code, out, _ = run(capsys, "diag-kan", "gen:unitcell", "--dim", "2", "--json")
    assert code == 1
    assert json.loads(out)["failure"]["n"] == 2
    assert run(capsys, "diag-kan", "gen:Deloop(Z2)", "--dim", "3")[0] == 0


def test_extension(capsys):
    assert run(capsys, "extension", "gen:Pair(0,1)", "--levels", "2,2")[0] == 0
    assert run(capsys, "extension", "gen:nofill", "--levels", "2,2")[0] == 1


def test_simplicial_pipeline(capsys, tmp_path):
    p = gen_file(capsys, tmp_path, "nerve Z/2", levels=5)
    code, out, _ = run(capsys, "dec", p, "--levels", "2,2")
    assert code == 0
    d = tmp_path / "dec.json"
    d.write_text(out)
    assert run(capsys, "diag", str(d), "--levels", "2", "--kan", "2")[0] == 0
    code, _, err = run(capsys, "diag", p)
    assert code == 2 and "bisimplicial" in err
    short = gen_file(capsys, tmp_path, "nerve Z/2", name="short.json", levels=3)
    code, _, err = run(capsys, "dec", short, "--levels", "2,2")
    assert code == 2 and "truncation" in err


def test_wbar(capsys):
    assert run(capsys, "wbar", "gen:nn Ab(Z2)", "--levels", "3")[0] == 0


def test_reflect(capsys):
    code, out, _ = run(capsys, "reflect", "gen:dec nerve Z/2", "--json")
    assert code == 0
    assert run(capsys, "reflect", "gen:nn nofill")[0] == 1


def test_verify_formulas_single_map(capsys):
    code, out, _ = run(capsys, "verify", "formulas", "--only", "eta", "--grid", "16", "--json")
    assert code == 0
    assert json.loads(out)


def test_verify_formulas_reports_failures(capsys):
    code, out, _ = run(capsys, "verify", "formulas", "--only", "axiom2", "--grid", "8")
    assert code == 1 and "axiom2" in out


@pytest.mark.parametrize("argv, message", [
    (["validate", "/nonexistent.json"], "No such file"),
    (["validate", "gen:Frob(1)"], "unknown builder"),
    (["nerve", "gen:Pair(0,1)", "--levels", "x"], ""),
])
def test_usage_errors_exit_2(capsys, argv, message):
    code, _, err = run(capsys, *argv)
    assert code == 2 and message in err


def test_missing_field_on_stdin():
    r = subprocess.run([sys.executable, "-m", "dblgpd.cli", "validate", "-"],
                       input='{"objects": ["a"]}', capture_output=True, text=True)
    assert r.returncode == 2 and "missing field 'hmors'" in r.stderr


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


@pytest.mark.skipif(shutil.which("dblgpd") is None, reason="console script not installed")
def test_console_script_pipe():
    gen = subprocess.run(["dblgpd", "gen", "deloop", "Z3"], capture_output=True, text=True, check=True)
    r = subprocess.run(["dblgpd", "validate", "-"], input=gen.stdout, capture_output=True, text=True)
    assert r.returncode == 0
