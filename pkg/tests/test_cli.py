import json
import shutil
import subprocess

import pytest

from oclattice.cli import CheckReport, ConReport, DeriveReport, PhiReport, WordsReport, main
from oclattice.lattices import FiniteLattice, are_isomorphic, partition_lattice


@pytest.fixture
def pres(tmp_path):
    def make(*lines):
        path = tmp_path / f"p{len(list(tmp_path.iterdir()))}.txt"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return str(path)
    return make


@pytest.fixture
def run(capsys):
    def go(*argv):
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err
    return go


def test_words(run):
    code, out, _ = run("words", "--content", "x:2,y:1")
    assert code == 0 and out.splitlines() == ["xxy", "xyx", "yxx", "3 words"]
    code, out, _ = run("words", "--content", "x:1,y:1,z:1")
    assert code == 0 and out.splitlines()[-1] == "6 words"
    code, _, err = run("words", "--content", "")
    assert code == 2 and "parse error" in err


def test_words_partition_and_caps(run):
    code, out, _ = run("words", "--partition", "2,1")
    assert code == 0 and out.splitlines()[0] == "aab"
    assert run("words", "--content", "x:6,y:6,z:6")[0] == 3
    assert run("words", "--content", "x:3,y:3", "--cap-words", "5")[0] == 3
    assert run("words")[0] == 2
    assert run("words", "--content", "x:1", "--cap-words", "0")[0] == 2


def test_phi(run, pres):
    shuffle = pres("xxy = yxx", "xyz = xzy")
    code, out, _ = run("phi", "--presentation", shuffle, "--content", "x:1,y:1,z:1")
    assert code == 0
    assert out.splitlines() == ["xyz xzy", "yxz yzx", "zxy zyx", "3 classes"]
    code, out, _ = run("phi", "--content", "x:1,y:1,z:1")
    assert code == 0 and out.splitlines()[-1] == "6 classes"
    assert all(len(line.split()) == 1 for line in out.splitlines()[:-1])
    assert run("phi", "--presentation", pres("xy = x"), "--content", "x:1,y:1")[0] == 4
    assert run("phi", "--presentation", pres("xy yx"), "--content", "x:1,y:1")[0] == 2
    assert run("phi", "--presentation", "/nonexistent/file", "--content", "x:1")[0] == 2


def test_con(run, pres, tmp_path):
    code, out, _ = run("con", "--partition", "1,1,1")
    assert code == 0
    assert "quotient size   6" in out and "congruences     6" in out
    assert "modular         true" in out and "distributive    false" in out
    shuffle = pres("xxy = yxx", "xyz = xzy")
    code, out, _ = run("con", "--presentation", shuffle, "--partition", "1,1,1,1", "--json")
    rep = ConReport.from_json(out)
    assert (rep.quotient_size, rep.congruences) == (4, 2)
    export = tmp_path / "lattice.json"
    code, out, _ = run("con", "--presentation", pres("xyz = xzy"), "--partition", "3,2,1",
                       "--export-lattice", str(export))
    assert code == 0 and "congruences     5" in out
    assert are_isomorphic(FiniteLattice.from_json(export.read_text()), partition_lattice(3))


def test_con_errors(run, pres):
    assert run("con", "--content", "x:1")[0] == 2
    assert run("con", "--partition", "1,1,1,1", "--cap-congruences", "10")[0] == 5
    assert run("con", "--presentation", pres("xy = x"), "--partition", "1,1")[0] == 4


def test_check(run, pres):
    code, out, _ = run("check", "--presentation", pres("xy = yx"))
    assert code == 0 and out.startswith("satisfies_e     true")
    code, out, _ = run("check", "--presentation", pres("xyz = xzy"), "--json")
    rep = CheckReport.from_json(out)
    assert code == 0 and rep.satisfies_e == "false" and "contains_lz" in rep.verdict
    assert rep.contains_lz and not rep.contains_rz
    code, out, _ = run("check")
    assert code == 6 and "unknown" in out
    code, out, _ = run("check", "--presentation", pres("xxy = yxx", "xyz = xzy"), "--json")
    rep = CheckReport.from_json(out)
    assert (rep.satisfies_e, rep.k, rep.n, rep.N, rep.card_bound_log2) == ("true", 1, 2, 324, 104976)
    assert rep.witness == {"n": 3, "g": [1, 3, 2]}
    assert run("check", "--presentation", pres("xy = x"))[0] == 4
    assert run("check", "--n-max", "9")[0] == 3


def test_derive(run, pres):
    shuffle = pres("xxy = yxx", "xyz = xzy")
    code, out, _ = run("derive", "--presentation", shuffle, "xxyyzz = yyxxzz")
    assert code == 0 and out.strip() == "derivable"
    code, out, _ = run("derive", "xy = yx")
    assert code == 1 and out.strip() == "not derivable"
    assert run("derive", "--presentation", shuffle, "xy = x")[0] == 4
    assert run("derive", "xy = ")[0] == 2


def test_json_round_trip_all_reports(run, pres):
    shuffle = pres("xxy = yxx", "xyz = xzy")
    cases = [
        (WordsReport, ("words", "--content", "x:2,y:1")),
        (PhiReport, ("phi", "--presentation", shuffle, "--content", "x:2,y:1")),
        (ConReport, ("con", "--presentation", shuffle, "--partition", "2,1,1")),
        (CheckReport, ("check", "--presentation", shuffle)),
        (CheckReport, ("check",)),
        (DeriveReport, ("derive", "--presentation", shuffle, "xyz = xzy")),
    ]
    for cls, argv in cases:
        _, out, _ = run(*argv, "--json")
        rep = cls.from_json(out)
        assert rep.to_json() == out.strip()
        assert json.loads(rep.to_json()) == json.loads(out)


def test_con_json_embeds_lattice(run, tmp_path):
    export = tmp_path / "l.json"
    _, out, _ = run("con", "--partition", "1,1,1", "--json", "--export-lattice", str(export))
    rep = ConReport.from_json(out)
    assert rep.lattice["size"] == 6
    assert ConReport.from_json(rep.to_json()) == rep


@pytest.mark.parametrize("argv", [
    ("check", "--presentation", "XY"),
    ("check", "--presentation", "XYZ"),
    ("check",),
    ("derive", "xy = yx"),
    ("derive", "--presentation", "REM", "xxyyzz = yyxxzz"),
])
def test_text_and_json_verdicts_agree(run, pres, argv):
    files = {"XY": pres("xy = yx"), "XYZ": pres("xyz = xzy"), "REM": pres("xxy = yxx", "xyz = xzy")}
    argv = tuple(files.get(a, a) for a in argv)
    code_text, text, _ = run(*argv)
    code_json, out, _ = run(*argv, "--json")
    assert code_text == code_json
    data = json.loads(out)
    if argv[0] == "check":
        assert text.splitlines()[0].split()[-1] == data["satisfies_e"]
    else:
        assert (text.strip() == "derivable") == data["derivable"]


@pytest.mark.skipif(shutil.which("oclattice") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["oclattice", "words", "--content", "x:1,y:1"], capture_output=True,
                          text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.splitlines() == ["xy", "yx", "2 words"]
