import json

import pytest

from leibnizpy.cli import main
from leibnizpy.cyclic import CyclicAlgebra, cyclic
from leibnizpy.exact import GF, QQ, Matrix
from leibnizpy.leibniz import LeibnizAlgebra, check_left_leibniz
from leibnizpy.models.files import MapFile, SpecFile
from leibnizpy.settings import Settings
from leibnizpy.verify import SUITES, Suite

F2, F3 = GF(2), GF(3)


@pytest.fixture
def write(tmp_path):
    def _write(name, payload):
        path = tmp_path / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def type_one(write):
    return write("type1.json", {"field": {"kind": "prime", "p": 2}, "algebra": {"kind": "cyclic", "n": 3, "alpha": ["0", "0"]}})


@pytest.fixture
def type_two(write):
    return write("type2.json", {"field": {"kind": "prime", "p": 3}, "algebra": {"kind": "cyclic", "n": 2, "alpha": ["1"]}})


def test_classify(type_two, capsys):
    assert main(["classify", "-s", type_two]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "type II"
    assert "1 - X" in out, "annihilator polynomial missing"
    assert "a1 - a2" in out, "canonical c missing"


def test_classify_json(type_one, capsys):
    assert main(["classify", "-s", type_one, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["type"] == "I"
    assert report["nilpotent"] is True and report["nilpotency_class"] == 3


def test_classify_rejects_tables(write, capsys):
    path = write("abelian.json", {"field": {"kind": "rationals"}, "algebra": {"kind": "table", "dim": 2}})
    assert main(["classify", "-s", path]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_bracket_table(type_two, capsys):
    assert main(["bracket-table", "-s", type_two]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["[a1, a1]  =  a2", "[a1, a2]  =  a2"]


def test_series_and_centers(type_one, capsys):
    assert main(["series", "-s", type_one]) == 0
    assert "nilpotent: yes, class 3" in capsys.readouterr().out
    assert main(["centers", "-s", type_one, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["left"]["dim"] == 2
    assert report["right"]["dim"] == 1


def test_leib(type_two, capsys):
    assert main(["leib", "-s", type_two, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["leib"]["dim"] == 1 and report["lie"] is False


def test_aut_enumerate(type_one, capsys):
    assert main(["aut-enumerate", "-s", type_one]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "|Aut| = 4"
    assert lines[1] == "candidates tested: 512"
    assert main(["aut-enumerate", "-s", type_one, "--endos", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["count"] == 8 and len(report["maps"]) == 8


def test_endo_check(type_two, write, capsys):
    scaled = write("scaled.json", MapFile.from_matrix(Matrix(F3, [[2, 0], [0, 2]])).dumps())
    assert main(["endo-check", "-s", type_two, "-m", scaled]) == 0, "a failing map is a result, not an error"
    out = capsys.readouterr().out
    assert "endomorphism: no" in out and "fails on [a1, a1]" in out
    identity = write("identity.json", {"matrix": [["1", "0"], ["0", "1"]]})
    assert main(["endo-check", "-s", type_two, "-m", identity, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["endomorphism"] and report["automorphism"]
    assert report["violating_pair"] is None


def test_aut_describe(type_one, type_two, capsys):
    assert main(["aut-describe", "-s", type_one, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["counts"] == {"End": 8, "S": 4, "Aut": 4, "UC": 4, "DmC": 1}
    assert main(["aut-describe", "-s", type_two, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["counts"] == {"D": 3, "C": 2}


def test_units(capsys):
    assert main(["units", "-f", "GF:2", "-m", "0,0,0,1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "U(GF(2)[X]/(X^3)) has 4 elements"
    assert lines[-1] == "I has 4 elements"


def test_rebase(write, capsys):
    path = write("type3.json", {"field": {"kind": "rationals"}, "algebra": {"kind": "cyclic", "n": 3, "alpha": ["0", "1"]}})
    assert main(["rebase", "-s", path, "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["t"] == 3 and report["beta"] == ["-1"]
    assert report["transition"][0] == ["1", "-1", "0"]


def test_from_operator_round_trip(write, capsys):
    operator = write("op.json", {"matrix": [["0", "1"], ["1", "0"]]})
    assert main(["from-operator", "-f", "Q", "--matrix", operator]) == 0
    built = SpecFile.model_validate_json(capsys.readouterr().out).build()
    assert isinstance(built, LeibnizAlgebra) and built.dim == 3
    assert check_left_leibniz(built).holds


def test_verify(type_one, capsys):
    assert main(["verify", "-s", type_one]) == 0
    out = capsys.readouterr().out
    assert "structure: pass" in out
    assert "subdirect: skipped: wrong type" in out


def test_verify_failure_exit_code(type_one, monkeypatch, capsys):
    def broken(ctx, checks):
        checks.add("never", False, "by construction")

    monkeypatch.setitem(SUITES, "structure", Suite(broken, finite=False))
    assert main(["verify", "-s", type_one, "--suite", "structure"]) == 1
    assert "verification failed: structure/never: by construction" in capsys.readouterr().err


RERUN_COMMANDS = [
    ["aut-enumerate", "--json"],
    ["aut-enumerate", "--endos"],
    ["verify"],
    ["aut-describe"],
    ["aut-describe", "--json"],
]


@pytest.mark.parametrize("command", RERUN_COMMANDS)
def test_repeated_runs_are_byte_identical(command, type_one, monkeypatch, capsys):
    argv = [command[0], "-s", type_one, *command[1:]]
    outputs = []
    for settings in (Settings(), Settings(), Settings(workers=2)):
        monkeypatch.setattr("leibnizpy.cli.default_settings", lambda settings=settings: settings)
        assert main(argv) == 0
        outputs.append(capsys.readouterr().out.encode("utf-8"))
    assert outputs[0], "command printed nothing"
    assert outputs[0] == outputs[1], "two serial runs differ"
    assert outputs[0] == outputs[2], "parallel run differs from the serial one"


def test_guard_exit_code(type_one, monkeypatch, capsys):
    monkeypatch.setattr("leibnizpy.cli.default_settings", lambda: Settings(guard_bits=4))
    assert main(["aut-enumerate", "-s", type_one]) == 3
    captured = capsys.readouterr()
    assert captured.out == "", "no partial output on a guard trip"
    assert "512" in captured.err


@pytest.mark.parametrize(
    "payload",
    [
        "not json",
        {"field": {"kind": "prime", "p": 3}, "algebra": {"kind": "cyclic", "n": 0}},
        {"field": {"kind": "prime", "p": 4}, "algebra": {"kind": "cyclic", "n": 2, "alpha": ["1"]}},
        {"field": {"kind": "rationals"}, "algebra": {"kind": "cyclic", "n": 3, "alpha": ["1"]}},
        {"field": {"kind": "rationals"}, "algebra": {"kind": "table", "dim": 2, "brackets": [{"left": 3, "right": 1, "value": ["1", "0"]}]}},
        {"field": {"kind": "rationals"}, "algebra": {"kind": "sphere", "n": 2}},
    ],
)
def test_invalid_files_exit_two(write, payload, capsys):
    path = write("bad.json", payload)
    assert main(["centers", "-s", path]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_negative_residue_in_spec_file(write, capsys):
    path = write("minus.json", {"field": {"kind": "prime", "p": 3}, "algebra": {"kind": "cyclic", "n": 2, "alpha": ["-1"]}})
    assert main(["bracket-table", "-s", path]) == 0
    assert capsys.readouterr().out.splitlines() == ["[a1, a1]  =  a2", "[a1, a2]  =  -a2"]


def test_missing_file_exit_two(tmp_path, capsys):
    assert main(["centers", "-s", str(tmp_path / "absent.json")]) == 2
    assert "Cannot read" in capsys.readouterr().err


@pytest.mark.parametrize(
    "algebra",
    [cyclic(QQ, 4, 0, 2, 1), cyclic(F3, 2, 1), LeibnizAlgebra(F2, 2, {(0, 0): [0, 1]})],
)
def test_spec_file_round_trip(algebra, tmp_path):
    path = tmp_path / "spec.json"
    SpecFile.from_algebra(algebra).dump(path)
    built = SpecFile.load(path).build()
    assert type(built) is type(algebra)
    if isinstance(algebra, CyclicAlgebra):
        assert built.spec.alpha_strings() == algebra.spec.alpha_strings()
        assert built.algebra == algebra.algebra
    else:
        assert built == algebra
