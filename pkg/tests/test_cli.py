"""CLI: thin adapters, stable bytes, exit codes."""

import json

import pytest

from heappieces import (
    RandomSource,
    animal_to_json,
    build_graph,
    format_graph_literal,
    random_animal,
)
from heappieces.cli import cli_main


@pytest.fixture
def path3_file(tmp_path):
    g = build_graph("abc", [("a", "b"), ("b", "c")])
    path = tmp_path / "path3.graph"
    path.write_text(format_graph_literal(g))
    return str(path)


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_triangular_point_8(self, capsys):
        code, out, _ = run(capsys, "count", "--lattice", "triangular", "--size", "8")
        assert code == 0 and out.strip() == "6435"

    def test_compact(self, capsys):
        code, out, _ = run(
            capsys, "count", "--lattice", "square", "--size", "7", "--source", "compact"
        )
        assert code == 0 and out.strip() == "729"


class TestGenerate:
    def test_matches_library_bytes(self, capsys):
        code, out, _ = run(
            capsys, "generate", "--size", "40", "--seed", "42", "--samples", "2"
        )
        assert code == 0
        lines = out.strip().splitlines()
        src = RandomSource(42)
        expect = []
        total = 0
        for _ in range(2):
            an, rep = random_animal(40, "square", "point", src)
            expect.append(animal_to_json(an))
            total += rep.nb_tirages
        assert lines == expect + [f"nb_tirages_total={total}"]

    def test_pipe_into_render(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "generate", "--size", "12", "--seed", "1", "--lattice", "triangular"
        )
        assert code == 0
        stream = tmp_path / "animals.jsonl"
        stream.write_text(out)
        code, svg, _ = run(capsys, "render", "--input", str(stream))
        assert code == 0
        assert svg.count("<circle") == 12


class TestEnumerate:
    def test_animals(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--size", "3", "--lattice", "square")
        assert code == 0
        payloads = [json.loads(line) for line in out.strip().splitlines()]
        assert len(payloads) == 5
        assert all(len(p["cells"]) == 3 for p in payloads)

    def test_heaps(self, capsys, path3_file):
        code, out, _ = run(
            capsys, "enumerate", "--size", "2", "--graph", path3_file
        )
        assert code == 0
        assert len(out.strip().splitlines()) == 12


class TestSeries:
    def test_gamma_bar_dump(self, capsys, path3_file):
        code, out, _ = run(
            capsys, "series", "--graph", path3_file, "--kind", "gamma-bar",
            "--degree", "2",
        )
        assert code == 0
        assert out.splitlines() == ["1\t1", "-1\ta", "-1\tb", "-1\tc", "1\tac"]

    def test_projection(self, capsys, path3_file):
        code, out, _ = run(
            capsys, "series", "--graph", path3_file, "--kind", "theta",
            "--degree", "3", "--project",
        )
        assert code == 0 and out.strip() == "1 3 8 21"

    def test_based_pyramids(self, capsys, path3_file):
        code, out, _ = run(
            capsys, "series", "--graph", path3_file, "--kind", "pi",
            "--degree", "2", "--base", "a",
        )
        assert code == 0
        assert out.splitlines() == ["1\ta", "1\taa", "1\tab"]


class TestVerify:
    def test_micro_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "micro")
        assert code == 0
        assert out.count("PASS micro:") == 3

    def test_exact_suites_pass(self, capsys):
        for suite in ("inversion", "derivative", "substitution", "density", "colored"):
            code, out, _ = run(capsys, "verify", "--suite", suite)
            assert code == 0, out
            assert "FAIL" not in out

    def test_inversion_with_degree_prints_per_graph_lines(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "inversion", "--degree", "4")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 5
        assert all(l.startswith("PASS inversion:") for l in lines)


class TestGas:
    def test_graph_mode(self, capsys, path3_file):
        code, out, _ = run(capsys, "gas", "--graph", path3_file, "--degree", "4")
        assert code == 0
        assert out.startswith("Z: 1 3 1 0 0")
        assert "PASS mean-count identity" in out

    def test_linear_mode(self, capsys):
        code, out, _ = run(capsys, "gas", "--linear", "--degree", "4", "--at", "1")
        assert code == 0
        assert "0 1 -3 10 -35" in out
        assert "0.2763932" in out


class TestErrors:
    def test_unknown_flag_exits_2(self, capsys):
        code, _, _ = run(capsys, "count", "--nonsense")
        assert code == 2

    def test_unknown_command_exits_2(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 2

    def test_missing_graph_file(self, capsys):
        code, _, err = run(
            capsys, "series", "--graph", "/does/not/exist", "--kind", "theta",
            "--degree", "2",
        )
        assert code == 2 and "error" in err

    def test_render_empty_input_exits_2(self, capsys, tmp_path):
        empty = tmp_path / "empty"
        empty.write_text("")
        code, _, _ = run(capsys, "render", "--input", str(empty))
        assert code == 2
