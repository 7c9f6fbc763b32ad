"""Matrix file formats: strict parsing, error positions, round trips."""

from fractions import Fraction

import pytest

from dihedrant.matrix import ExactMatrix
from dihedrant.matrix_io import (
    MatrixFormatError,
    format_scalar,
    load_matrix,
    matrix_to_json,
    matrix_to_obj,
    parse_matrix_csv,
    parse_matrix_json,
    parse_scalar,
)


def test_parse_scalar_accepts_integers_and_ratios():
    assert parse_scalar("7") == 7
    assert parse_scalar("-3") == -3
    assert parse_scalar("+3") == 3
    assert parse_scalar(" 6/4 ") == Fraction(3, 2)
    assert parse_scalar("-6/4") == Fraction(-3, 2)


@pytest.mark.parametrize("bad", ["1.5", "1e3", "", "a", "1/2/3", "1/-2", "0x10"])
def test_parse_scalar_rejects_everything_else(bad):
    with pytest.raises(MatrixFormatError):
        parse_scalar(bad)


def test_format_scalar():
    assert format_scalar(Fraction(-15)) == "-15"
    assert format_scalar(Fraction(3, 4)) == "3/4"


def test_json_round_trip():
    A = ExactMatrix([[1, "1/2"], ["-2/3", 4]])
    text = matrix_to_json(A)
    assert parse_matrix_json(text) == A
    assert matrix_to_obj(A) == [[1, "1/2"], ["-2/3", 4]]


def test_json_errors_name_the_position():
    with pytest.raises(MatrixFormatError, match="row 2, column 1"):
        parse_matrix_json('[[1, 2], ["x", 4]]')
    with pytest.raises(MatrixFormatError, match="row 1, column 2"):
        parse_matrix_json("[[1, 2.5], [3, 4]]")
    with pytest.raises(MatrixFormatError, match="row 1, column 1"):
        parse_matrix_json("[[true]]")


def test_json_structural_errors():
    with pytest.raises(MatrixFormatError):
        parse_matrix_json("{}")
    with pytest.raises(MatrixFormatError):
        parse_matrix_json("[[1, 2], [3]]")
    with pytest.raises(MatrixFormatError, match="invalid JSON"):
        parse_matrix_json("[[1, 2")


def test_csv_parsing():
    A = parse_matrix_csv("1,2\n3,4/5\n")
    assert A == ExactMatrix([[1, 2], [3, "4/5"]])


def test_csv_errors_name_the_position():
    with pytest.raises(MatrixFormatError, match="row 2, column 2"):
        parse_matrix_csv("1,2\n3,oops\n")


def test_csv_requires_square():
    with pytest.raises(MatrixFormatError):
        parse_matrix_csv("1,2,3\n4,5,6\n")


def test_load_matrix_detects_format(tmp_path):
    (tmp_path / "m.json").write_text("[[1, 2], [3, 4]]")
    (tmp_path / "m.csv").write_text("1,2\n3,4\n")
    expected = ExactMatrix([[1, 2], [3, 4]])
    assert load_matrix(tmp_path / "m.json") == expected
    assert load_matrix(tmp_path / "m.csv") == expected


def test_load_matrix_format_override(tmp_path):
    path = tmp_path / "matrix.txt"
    path.write_text("[[1, 2], [3, 4]]")
    with pytest.raises(MatrixFormatError, match="--format"):
        load_matrix(path)
    assert load_matrix(path, fmt="json") == ExactMatrix([[1, 2], [3, 4]])
    with pytest.raises(MatrixFormatError):
        load_matrix(path, fmt="yaml")


def test_shipped_fixture_files_parse(fixtures_dir):
    minus15 = load_matrix(fixtures_dir / "minus15.json")
    assert minus15 == load_matrix(fixtures_dir / "minus15.csv")
    assert minus15.entry(2, 2) == -3
    for name, order in [
        ("twos-ones.json", 4),
        ("rank2-counterexample.json", 6),
        ("rank3-counterexample.json", 4),
        ("identity4.json", 4),
        ("identity4-colswap.json", 4),
    ]:
        assert load_matrix(fixtures_dir / name).n == order
