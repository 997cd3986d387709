#!/usr/bin/env python3
"""
Tests for the text formats and the command line
"""

import json
import sys
from pathlib import Path

import pytest
from typer.testing import CliRunner

sys.path.insert(0, str(Path(__file__).parent.parent))
sys.path.insert(0, str(Path(__file__).parent))

import config
from cli import ParseError, format_entry, generate, load_entry, parse_fusion, parse_matrix, parse_morphism, parse_scheme
from cli.app import app
from fusion import gen_ising, validate_fusion
from models import SourceKind
from scheme import gen_group, gen_hamming
from transform import MatObject
from generate_corpus import CorpusGenerator

runner = CliRunner()


def report_lines(output: str):
    return [line for line in output.splitlines() if line.startswith(("CHECK", "SOURCE"))]


# -- formats --------------------------------------------------------------

def test_scheme_text_round_trip():
    cm = gen_hamming(2, 2)
    assert parse_scheme(format_entry(generate("gen:hamming:2,2"))) == cm


def test_fusion_text_round_trip():
    data = parse_fusion(format_entry(generate("gen:ising")))
    ring = validate_fusion(data)
    assert ring.tensor == gen_ising().tensor
    assert ring.names == ("1", "sigma", "psi")


def test_scheme_row_length_error_is_located():
    text = "scheme v1\npoints 2\nmatrix\n0 1\n1\n"
    with pytest.raises(ParseError) as info:
        parse_scheme(text)
    assert info.value.line == 5
    assert "expected 2" in str(info.value)


def test_scheme_comments_are_ignored():
    text = "# two points\nscheme v1\npoints 2  # n\nmatrix\n0 1\n1 0\n"
    assert parse_scheme(text).m == 2


def test_matrix_without_rows():
    with pytest.raises(ParseError) as info:
        parse_matrix("matrix v1\n# nothing\n")
    assert info.value.reason == "no rows"


def test_conflicting_multiplicity_points_at_the_value():
    text = "fusion v1\nobjects a\nunit a\nN a a a 1\nN a a a 2\n"
    with pytest.raises(ParseError) as info:
        parse_fusion(text)
    assert (info.value.line, info.value.column) == (5, 9)
    assert "line 4" in info.value.reason


def test_missing_unit():
    with pytest.raises(ParseError) as info:
        parse_fusion("fusion v1\nobjects a\nN a a a 1\n")
    assert "unit" in info.value.reason


def test_autofill_unit():
    data = parse_fusion("fusion v1\nobjects 1 x\nunit 1\nautofill_unit true\nN x x 1 1\n")
    ring = validate_fusion(data)
    assert ring.N(0, 1, 1) == ring.N(1, 0, 1) == 1
    assert ring.dual == (0, 1)


def test_morphism_blocks():
    grid = MatObject.from_rows([[1, 2], [0, 1]])
    alpha = parse_morphism("morphism v1\nM 0 1 2x2\n1 1/2\n0 1\n", grid, grid)
    assert alpha[(0, 1)].shape == (2, 2)
    assert alpha[(0, 0)].shape == (1, 1)
    with pytest.raises(ParseError):
        parse_morphism("morphism v1\nM 0 1 1x2\n1 1\n", grid, grid)


def test_unknown_generator():
    with pytest.raises(ParseError):
        load_entry("gen:petersen")
    with pytest.raises(ParseError):
        load_entry("gen:cyclic:a")
    with pytest.raises(ParseError):
        load_entry("gen:fibonacci:2")


# -- commands -------------------------------------------------------------

def test_check_passes_on_cyclic():
    result = runner.invoke(app, ["check", "gen:cyclic:3"])
    assert result.exit_code == 0
    lines = report_lines(result.output)
    assert lines[0] == "CHECK validate PASS 0ms"
    assert all(" PASS " in line for line in lines)


def test_check_only_and_structured():
    result = runner.invoke(app, ["check", "gen:fibonacci", "--only", "validate,closed", "--format", "structured"])
    assert result.exit_code == 0
    document = json.loads(result.stdout)
    names = [r["name"] for r in document["results"][0]["reports"]]
    assert names == ["validate", "closed"]


def test_unknown_check_exits_two():
    result = runner.invoke(app, ["check", "gen:cyclic:3", "--only", "nonsense"])
    assert result.exit_code == 2
    assert "CHECK nonsense ERROR 0ms" in report_lines(result.output)


def test_parse_error_exits_two(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("scheme v1\npoints 2\nmatrix\n0 1\n")
    result = runner.invoke(app, ["check", str(bad)])
    assert result.exit_code == 2
    assert report_lines(result.output) == ["CHECK parse ERROR 0ms"]


def test_undecodable_file_is_a_parse_error(tmp_path):
    bad = tmp_path / "latin1.txt"
    bad.write_bytes(b"scheme v1\npoints 1\nmatrix\n\xff\xfe\n")
    with pytest.raises(ParseError) as info:
        load_entry(str(bad))
    assert (info.value.line, info.value.column) == (4, 1)
    result = runner.invoke(app, ["check", str(bad)])
    assert result.exit_code == 2
    assert report_lines(result.output) == ["CHECK parse ERROR 0ms"]
    wiener = runner.invoke(app, ["wiener", "gen:cyclic:3", "--matrix", str(bad)])
    assert wiener.exit_code == 2


def test_validate_fails_with_witness(tmp_path):
    bad = tmp_path / "split.txt"
    bad.write_text("scheme v1\npoints 2\nmatrix\n0 1\n1 2\n")
    result = runner.invoke(app, ["validate", str(bad)])
    assert result.exit_code == 1
    assert report_lines(result.output)[0].startswith("CHECK validate FAIL witness=")


def test_numbers():
    result = runner.invoke(app, ["numbers", "gen:cyclic:3"])
    assert result.exit_code == 0
    lines = [line for line in result.output.splitlines() if line.startswith("N ")]
    assert len(lines) == 9
    assert "N 1 2 0 1" in lines
    fusion = runner.invoke(app, ["numbers", "gen:fibonacci"])
    assert "N tau tau tau 1" in fusion.output


def test_numbers_validates_fusion_data(tmp_path):
    broken = tmp_path / "no_unit_law.txt"
    broken.write_text("fusion v1\nobjects 1 x\nunit 1\nN x x 1 1\n")
    result = runner.invoke(app, ["numbers", str(broken)])
    assert result.exit_code == 2
    assert report_lines(result.output) == ["CHECK input ERROR 0ms"]
    assert not [line for line in result.output.splitlines() if line.startswith("N ")]


def test_transform_command():
    result = runner.invoke(app, ["transform", "gen:cyclic:3", "--vector", "1,2,0"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["1 2 0", "0 1 2", "2 0 1"]
    wrong = runner.invoke(app, ["transform", "gen:cyclic:3", "--vector", "1,2"])
    assert wrong.exit_code == 2


def test_wiener_command(tmp_path):
    grid = tmp_path / "grid.txt"
    grid.write_text("matrix v1\n1 1\n1 2\n")
    result = runner.invoke(app, ["wiener", "gen:fibonacci", "--matrix", str(grid)])
    assert result.exit_code == 0
    assert "f = (1,1)" in result.output
    grid.write_text("matrix v1\n1 2 1\n1 1 3\n1 1 1\n")
    rejected = runner.invoke(app, ["wiener", "gen:cyclic:3", "--matrix", str(grid)])
    assert rejected.exit_code == 1
    assert report_lines(rejected.output)[0].startswith("CHECK wiener FAIL witness=")


def test_regular_command(tmp_path):
    morphism = tmp_path / "alpha.txt"
    morphism.write_text("morphism v1\n")
    result = runner.invoke(app, ["regular", "gen:cyclic:3", "--morphism", str(morphism)])
    assert result.exit_code == 0
    assert report_lines(result.output) == ["CHECK regular PASS 0ms"]
    morphism.write_text("morphism v1\nM 0 1\n1\n")
    irregular = runner.invoke(app, ["regular", "gen:cyclic:3", "--morphism", str(morphism)])
    assert irregular.exit_code == 1
    assert report_lines(irregular.output)[0].startswith("CHECK regular FAIL")


def test_gen_writes_a_loadable_file(tmp_path):
    target = tmp_path / "h32.txt"
    result = runner.invoke(app, ["gen", "hamming:3,2", "-o", str(target)])
    assert result.exit_code == 0
    assert target.read_text().startswith("scheme v1\npoints 8\n")
    checked = runner.invoke(app, ["check", str(target), "--only", "validate,bose-mesner"])
    assert checked.exit_code == 0


def test_generated_corpus_loads_back(tmp_path):
    paths = CorpusGenerator(str(tmp_path)).generate_all()
    assert len(paths) == len(config.CORPUS["schemes"]) + len(config.CORPUS["fusion"]) + 1
    hamming = load_entry(str(tmp_path / "hamming_2_2.txt"))
    assert hamming.kind == SourceKind.SCHEME
    assert hamming.payload == gen_hamming(2, 2)
    assert load_entry(str(tmp_path / "fibonacci.txt")).kind == SourceKind.FUSION
    group = load_entry(f"gen:group:{tmp_path / 's3_cayley.txt'}")
    assert group.payload == gen_group(config.S3_CAYLEY_TABLE)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
