import pytest

from filterca.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, census_rows, main, render_rows
from filterca.evolution import evolve, read_trajectory
from filterca.lattice import parse_state


@pytest.fixture
def state_file(tmp_path):
    def make(text):
        p = tmp_path / "state.txt"
        p.write_text(text + "\n")
        return str(p)
    return make


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_evolve(capsys, state_file):
    code, out, _ = run(capsys, ["evolve", state_file("0:1101"), "--steps", "2"])
    assert code == EXIT_OK
    assert out.split() == ["0:1101", "0:1011", "0:1101"]


def test_evolve_to_file_and_forms(capsys, state_file, tmp_path):
    dest = tmp_path / "traj.txt"
    path = state_file("-2:10011")
    assert main(["evolve", path, "--steps", "6", "--output", str(dest)]) == EXIT_OK
    assert main(["evolve", path, "--steps", "6", "--form", "exact"]) == EXIT_OK
    out, _ = capsys.readouterr()
    assert dest.read_text() == out
    assert read_trajectory(out.splitlines()).states == evolve(parse_state("-2:10011"), 6).states


def test_render(capsys, state_file):
    code, out, _ = run(capsys, ["render", state_file("0:1101"), "--steps", "1"])
    assert code == EXIT_OK
    assert out.splitlines() == ["...##.#...", "...#.##..."]
    code, out, _ = run(capsys, ["render", state_file("0:1101"), "--steps", "1", "--glyphs", "01"])
    assert out.splitlines()[0] == "0001101000"
    assert run(capsys, ["render", state_file("0:1"), "--glyphs", "abc"])[0] == EXIT_USAGE


def test_render_matches_evolve():
    traj = evolve(parse_state("0:1000101"), 5)
    rows = render_rows(traj.states)
    for row, s in zip(rows, traj.states):
        assert [i - 3 for i, ch in enumerate(row) if ch == "#"] == [k for k in range(0, 7) if s[k]]
    assert render_rows([parse_state("0:0")]) == ["......."]


def test_jost(capsys, state_file):
    code, out, _ = run(capsys, ["jost", state_file("0:101"), "--site", "-1", "--mod2", "--measures"])
    assert code == EXIT_OK
    assert out.splitlines() == ["1 + 2*z + 2*z^2 + z^3", "1001", "f1=1 f2=1 f3=0 f4=0"]
    code, out, _ = run(capsys, ["jost", state_file("0:101"), "--site", "5"])
    assert out.strip() == "1"


def test_jost_errors(capsys, state_file):
    code, out, err = run(capsys, ["jost", state_file("0:1000101"), "--site", "0", "--mod2"])
    assert code == EXIT_USAGE and out == "" and "--mod2" in err
    assert run(capsys, ["jost", state_file("0:101")])[0] == EXIT_USAGE


def test_parse_errors(capsys, state_file, tmp_path):
    code, _, err = run(capsys, ["evolve", state_file("0:1x1")])
    assert code == EXIT_USAGE and "byte 3" in err
    assert run(capsys, ["evolve", str(tmp_path / "missing.txt")])[0] == EXIT_USAGE
    assert run(capsys, ["evolve"])[0] == EXIT_USAGE
    assert run(capsys, ["frobnicate"])[0] == EXIT_USAGE
    assert run(capsys, ["census", "--max-width", "0"])[0] == EXIT_USAGE


def test_census(capsys):
    code, out, _ = run(capsys, ["census", "--max-width", "4"])
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "pattern width period f2 parity xk1 orbit"
    rows = {ln.split()[0]: ln.split() for ln in lines[1:]}
    assert rows["1"][2] == "1"
    assert rows["1101"][2] == "2" and rows["1011"][2] == "2"
    assert rows["111"][2] == "1" and rows["101"][2] == "1"
    assert rows["1101"][6] == rows["1011"][6] == "1011"


def test_census_rows_classes():
    rows = census_rows(8)
    assert len(rows) == 1 + sum([1, 2, 4, 7, 13, 24, 44])
    for s, period, _, rec in rows:
        assert evolve(s, period).states[-1] == s


def test_verify(capsys):
    code, out, _ = run(capsys, ["verify", "--suite", "evolution", "--cases", "5", "--max-width", "6"])
    assert code == EXIT_OK and out.strip().endswith("all properties pass")
    again = run(capsys, ["verify", "--suite", "evolution", "--cases", "5", "--max-width", "6"])[1]
    assert again == out
    assert run(capsys, ["verify", "--cases", "0"])[0] == EXIT_USAGE


def test_manifest_round_trip(capsys, state_file, tmp_path):
    saved = tmp_path / "run.manifest"
    path = state_file("0:10011")
    code, first, _ = run(capsys, ["evolve", path, "--steps", "4", "--form", "exact", "--save-manifest", str(saved)])
    assert code == EXIT_OK
    text = saved.read_text()
    assert "steps=4" in text and "form=exact" in text
    code, second, _ = run(capsys, ["evolve", "--manifest", str(saved)])
    assert code == EXIT_OK and second == first
    # command-line flags override the manifest
    code, third, _ = run(capsys, ["evolve", "--manifest", str(saved), "--steps", "1"])
    assert len(third.splitlines()) == 2


def test_manifest_errors(capsys, tmp_path):
    bad = tmp_path / "bad.manifest"
    bad.write_text("colour=blue\n")
    assert run(capsys, ["census", "--manifest", str(bad)])[0] == EXIT_USAGE
    bad.write_text("max_width=eight\n")
    assert run(capsys, ["census", "--manifest", str(bad)])[0] == EXIT_USAGE
    bad.write_text("no equals sign\n")
    assert run(capsys, ["census", "--manifest", str(bad)])[0] == EXIT_USAGE


def test_failure_exit_code(monkeypatch, capsys, state_file):
    import filterca.cli as cli

    monkeypatch.setattr(cli, "jost_product", lambda s, m: cli.jost_closed(s, m) + cli.jost_closed(s, m))
    assert run(capsys, ["jost", state_file("0:101"), "--site", "0"])[0] == EXIT_FAIL
