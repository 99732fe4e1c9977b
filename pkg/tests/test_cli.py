import json

from typer.testing import CliRunner

from linear_form_bases.forms import IntSet, LinearForm
from linear_form_bases.gadic import GadicParams, gadic_set
from linear_form_bases.linformctl import app
from linear_form_bases.oracle import rep_table

runner = CliRunner()


def test_construct():
    result = runner.invoke(app, ["construct", "--form", "2,3", "--target", "const:1", "--window", "5"])
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["form"] == [2, 3]
    assert data["certificate"]["clean"] is True
    table = rep_table(IntSet.of(data["set"]), LinearForm(2, 3), -5, 5)
    assert all(table[n] == 1 for n in range(-5, 6))


def test_construct_is_deterministic():
    args = ["construct", "--form", "3,-5", "--window", "4", "--rounds", "2", "--target", "const:2"]
    first = runner.invoke(app, args)
    second = runner.invoke(app, args)
    assert first.exit_code == second.exit_code == 0
    assert first.output == second.output


def test_construct_rejects_excluded_form():
    for form in ("1,1", "1,-1", "1,-2", "2,-1", "2,4", "0,3", "2,x", "1,2,3"):
        result = runner.invoke(app, ["construct", "--form", form])
        assert result.exit_code == 2, (form, result.output)


def test_construct_search_exhausted(tmp_path):
    spec = tmp_path / "spec.json"
    values = [5 * t for t in range(-20, 21) if t != 0]
    spec.write_text(json.dumps({"default": 1, "zero_set": {"kind": "finite-list", "values": values}}))
    result = runner.invoke(
        app,
        ["construct", "--form", "2,3", "--target", f"@{spec}", "--window", "0", "--search-radius", "20"],
    )
    assert result.exit_code == 3


def test_construct_output_file_and_repfn(tmp_path):
    dump = tmp_path / "construction.json"
    result = runner.invoke(app, ["construct", "--form", "2,3", "--window", "3", "-o", str(dump)])
    assert result.exit_code == 0
    construction = json.loads(dump.read_text())
    lo, hi = construction["certificate"]["window"]
    result = runner.invoke(
        app, ["repfn", "--set", str(dump), "--form", "2,3", f"--lo={lo}", f"--hi={hi}"]
    )
    assert result.exit_code == 0
    assert json.loads(result.output)["counts"] == construction["certificate"]["counts"]


def test_repfn(tmp_path):
    path = tmp_path / "a.txt"
    path.write_text("-2\n3\n")
    result = runner.invoke(app, ["repfn", "--set", str(path), "--form", "2,3", "--lo=-20", "--hi=20"])
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        "lo": -20,
        "hi": 20,
        "counts": {"-10": 1, "0": 1, "5": 1, "15": 1},
    }


def test_repfn_empty_and_malformed(tmp_path):
    path = tmp_path / "a.txt"
    path.write_text("")
    result = runner.invoke(app, ["repfn", "--set", str(path), "--form", "2,3"])
    assert result.exit_code == 0
    assert json.loads(result.output)["counts"] == {}
    path.write_text("1\nx\n")
    result = runner.invoke(app, ["repfn", "--set", str(path), "--form", "2,3"])
    assert result.exit_code == 2
    assert "line 2" in result.output


def test_repfn_json_set(tmp_path):
    path = tmp_path / "a.json"
    path.write_text("[0, 1, 4, 5]")
    result = runner.invoke(app, ["repfn", "--set", str(path), "--form", "1,2"])
    assert result.exit_code == 0
    counts = json.loads(result.output)["counts"]
    assert counts == {str(n): 1 for n in range(16)}


def test_sidon(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps(gadic_set(GadicParams(2, 2), 100).to_list()))
    result = runner.invoke(
        app, ["sidon", "--set", str(good), "--form", "1,2", "--lo=0", "--hi=100"]
    )
    assert result.exit_code == 0
    assert json.loads(result.output)["holds"] is True

    bad = tmp_path / "bad.txt"
    bad.write_text("0\n1\n3\n")
    result = runner.invoke(app, ["sidon", "--set", str(bad), "--form", "1,2", "--lo=0", "--hi=9"])
    assert result.exit_code == 1
    data = json.loads(result.output)
    assert (data["holds"], data["witness"], data["count"]) == (False, 3, 2)

    result = runner.invoke(app, ["sidon", "--set", str(bad), "--form", "1,2", "--g", "0"])
    assert result.exit_code == 2


def test_gadic():
    result = runner.invoke(app, ["gadic", "--g", "2", "--m", "2", "--limit", "10", "--decode", "6"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["set"] == [0, 1, 4, 5]
    assert data["form"] == [1, 2]
    assert data["decode"] == {"6": [4, 1]}

    result = runner.invoke(app, ["gadic", "--g", "1", "--m", "2"])
    assert result.exit_code == 2


def test_density():
    result = runner.invoke(
        app, ["density", "--zero-set", "squares", "--radius", "10", "--radius", "100", "--format", "csv"]
    )
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "radius,count,ratio"
    assert lines[1].startswith("10,4,")
    assert lines[2].startswith("100,11,")

    result = runner.invoke(app, ["density", "--zero-set", "primes"])
    assert result.exit_code == 2


def test_explain_t():
    result = runner.invoke(app, ["explain-t", "--form", "2,3", "--b", "0", "--t", "0"])
    assert result.exit_code == 1
    assert json.loads(result.output)["case"] == "degenerate-pair"

    result = runner.invoke(app, ["explain-t", "--form", "2,3", "--b", "0", "--t", "1"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["pair"] == [3, -2]
    assert data["verdict"] == "admissible"

    result = runner.invoke(app, ["explain-t", "--form", "2,3", "--b", "3", "--scan", "100"])
    assert result.exit_code == 0
    assert json.loads(result.output)["fraction"] >= 0.9


def test_explain_t_search(tmp_path):
    path = tmp_path / "a.txt"
    path.write_text("-2\n3\n")
    result = runner.invoke(app, ["explain-t", "--form", "2,3", "--b", "0", "--set", str(path)])
    assert result.exit_code == 0
    assert json.loads(result.output)["t"] == -1

    result = runner.invoke(
        app,
        ["explain-t", "--form", "2,3", "--b", "0", "--zero-set", "finite:5,-5,10,-10", "--search-radius", "2"],
    )
    assert result.exit_code == 3
