import json

import pytest
from orbit_examples import TYPE_A_2_5, TYPE_B_3_7, HORSESHOE_10010, SEVEN_POINT_1_3

from startrack.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def data_file(tmp_path):
    def write(d, name="orbit.json"):
        path = tmp_path / name
        path.write_text(d.dumps(), encoding="utf-8")
        return str(path)

    return write


def test_height(capsys):
    assert run(capsys, "height", "10011011001011010") == (0, "3/10\n", "")


def test_enumerate_tt_only(capsys):
    code, out, _ = run(capsys, "enumerate", "1/3", "7", "--tt-only")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1
    assert lines[0].startswith(SEVEN_POINT_1_3.plain())
    assert "height 1/4, decoration (empty), code 1000100" in lines[0]


def test_enumerate_json_and_jobs(capsys):
    code, out, _ = run(capsys, "--format", "json", "enumerate", "2/5", "8", "--jobs", "2")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 5
    assert TYPE_A_2_5.to_json() in [r["data"] for r in records]


def test_prune_trace(capsys):
    code, out, _ = run(capsys, "prune", "3/10", "--trace")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "moves: L, tight, L, R, R, tight"
    assert lines[-10:] == [
        "e_0 -> e0 E1 e1 E2 e2 E3 e3",
        "e_1 -> e4",
        "e_2 -> e5",
        "e_3 -> e6",
        "e_4 -> e7",
        "e_5 -> e8",
        "e_6 -> e9",
        "e_7 -> e0",
        "e_8 -> e1",
        "e_9 -> e2",
    ]


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["cq", "3/10"], "10011011001"),
        (["wq", "2/5"], "11"),
        (["wq", "1/3"], "(empty)"),
        (["wq", "1/2"], "*"),
        (["qw", "11"], "2/5"),
        (["qw", "*"], "1/2"),
        (["farey", "parents", "3/8"], "(1/3, 2/5)"),
        (["farey", "lfs", "3/10"], "(0, 1/4, 2/7)"),
        (["farey", "admissible", "3/7"], "{0,1,2}"),
        (["xi", "0", "1/2", "1/3"], "1/4"),
        (["rotint", "code", "10010110"], "[1/3, 2/5]"),
        (["rotint", "code", "10"], "{1/2}"),
        (["parse", "10011011001011010"], "height 3/10, prefix 10011011001, decoration 1101, joints 0 0"),
    ],
)
def test_plain_outputs(capsys, argv, expected):
    assert run(capsys, *argv) == (0, expected + "\n", "")


def test_file_commands(capsys, data_file):
    path = data_file(HORSESHOE_10010)
    assert run(capsys, "hscode", path)[1] == "10010\n"
    assert run(capsys, "rotint", "data", data_file(TYPE_A_2_5, "d.json"))[1] == "[1/3, 2/5]\n"
    code, out, _ = run(capsys, "--format", "json", "phi", path, "2/5")
    assert code == 0 and json.loads(out)["N"] == [3, 3, 2, 3, 2]
    code, out, _ = run(capsys, "psi", data_file(SEVEN_POINT_1_3, "tt.json"))
    assert out.strip() == HORSESHOE_10010.plain()


def test_builds(capsys):
    assert run(capsys, "build-b", "3/7", "2", "1/3")[1].strip() == TYPE_B_3_7.plain()
    assert run(capsys, "build-a", "2/5", "2")[1].strip() == TYPE_A_2_5.plain()


def test_track(capsys, data_file):
    path = data_file(SEVEN_POINT_1_3)
    code, out, _ = run(capsys, "track", path, "--growth")
    assert code == 0
    assert "absorbed yes, efficient yes" in out
    assert "growth 1.465571231877, irreducible yes" in out
    code, out, _ = run(capsys, "track", path, "--dot")
    assert out.startswith("digraph bh {")


def test_domain_error_exit_code(capsys):
    code, out, err = run(capsys, "build-b", "3/7", "2", "2/4")
    assert code == 1 and out == "" and err.startswith("NotCoprime")
    code, _, err = run(capsys, "parse", "01001")
    assert code == 1 and err.startswith("NotMaximal")


def test_usage_error_exit_code(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "cq", "3/x")[0] == 2
    assert run(capsys, "hscode", "/nonexistent/file.json")[0] == 2


def test_output_is_stable(capsys):
    first = run(capsys, "enumerate", "2/5", "10")
    second = run(capsys, "enumerate", "2/5", "10", "--jobs", "3")
    assert first == second
