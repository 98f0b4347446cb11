"""Tests for the command line."""

import pytest

from kvpoly import properties
from kvpoly.cli import EXIT_DEPTH, EXIT_NEGATIVE, EXIT_OK, EXIT_PARSE, build_parser, run
from kvpoly.topology.codec import parse


@pytest.fixture
def kvg_file(tmp_path):
    """Write .kvg text to a temporary file and return its path."""

    def _write(text: str) -> str:
        path = tmp_path / "diagram.kvg"
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


def test_eval_unknot(kvg_file, capsys):
    assert run(["eval", kvg_file("O 1\n")]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1"


def test_eval_planar_test(kvg_file, capsys):
    assert run(["eval", kvg_file("V 1 1 2 2\n"), "--spec", "planar-test"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "-1*A^1 + -1*A^-1"


def test_eval_with_threads(test_data_dir, capsys):
    path = str(test_data_dir / "trefoil.kvg")
    assert run(["eval", path]) == EXIT_OK
    single = capsys.readouterr().out
    assert run(["--threads", "3", "eval", path]) == EXIT_OK
    assert capsys.readouterr().out == single


def test_twist(test_data_dir, capsys):
    assert run(["twist", str(test_data_dir / "curl_positive.kvg")]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1"


def test_check_planar_not_planar(test_data_dir, capsys):
    assert run(["check-planar", str(test_data_dir / "one_crossing.kvg")]) == EXIT_NEGATIVE
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["NOT_PLANAR", "computed: 0", "expected: -1*A^1 + -1*A^-1"]


def test_check_planar_possibly_planar(test_data_dir, capsys):
    assert run(["check-planar", str(test_data_dir / "octahedron.kvg")]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "POSSIBLY_PLANAR"


def test_oracle_agrees(test_data_dir, capsys):
    assert run(["oracle", str(test_data_dir / "monogon.kvg")]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "AGREE"


def test_oracle_depth_exceeded(test_data_dir, capsys):
    assert run(["oracle", str(test_data_dir / "octahedron.kvg")]) == EXIT_DEPTH
    assert "bound exceeded" in capsys.readouterr().err


def test_parse_error(kvg_file, capsys):
    assert run(["eval", kvg_file("V 1 2 3\n")]) == EXIT_PARSE
    assert "line 1" in capsys.readouterr().err


def test_undecodable_file(tmp_path, capsys):
    path = tmp_path / "bad.kvg"
    path.write_bytes(b"\xff\xfe")
    assert run(["eval", str(path)]) == EXIT_PARSE
    assert "line 1" in capsys.readouterr().err


def test_missing_file(tmp_path, capsys):
    assert run(["twist", str(tmp_path / "absent.kvg")]) == EXIT_PARSE
    assert "absent.kvg" in capsys.readouterr().err


def test_invalid_threads(kvg_file, capsys):
    assert run(["--threads", "0", "eval", kvg_file("O 1\n")]) == EXIT_PARSE
    assert "Invalid settings" in capsys.readouterr().err


def test_random_prints_a_diagram(capsys):
    assert run(["random", "--vertices", "2", "--crossings", "3", "--seed", "5"]) == EXIT_OK
    d = parse(capsys.readouterr().out)
    assert (d.vertex_count(), d.crossing_count()) == (2, 3)


def test_selftest_prints_a_summary(capsys):
    code = run(["selftest", "--seed", "1", "--size", "2"])
    out = capsys.readouterr().out.splitlines()
    assert code in (EXIT_OK, EXIT_NEGATIVE)
    assert len(out) == 9
    assert out[-1].endswith("failed")
    assert all(line.startswith(("PASS ", "FAIL ")) for line in out[:-1])


def test_selftest_uses_settings(monkeypatch, capsys):
    seen = []

    def capture(seed: int, size: int, settings) -> int:
        seen.append(settings)
        return size

    monkeypatch.setattr(properties, "PROPERTIES", {"capture": capture})
    monkeypatch.setenv("KVPOLY_LENS_STRATEGY", "search")
    assert run(["--threads", "2", "selftest", "--size", "1"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["PASS capture (1 cases)", "1 passed, 0 failed"]
    assert (seen[0].threads, seen[0].lens_strategy) == (2, "search")


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
