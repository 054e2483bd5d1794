"""Fixture corpus loading and the corpus format itself."""

import dataclasses

import pytest

from helpers import F1
from oddpower.bipoly import BiPoly, X
from oddpower.engine import build_poly, derivative_sum
from oddpower.fixtures import Fixture, load_fixtures, parse_fixture_lines

EXPECTED_NAMES = [
    "f_1",
    "f_2",
    "f_3",
    "df1_dx",
    "df1_dz",
    "sum_1",
    "df2_dx",
    "df2_dz",
    "sum_2",
    "df3_dx",
    "df3_dz",
    "sum_3",
    "diag_sum_1",
    "diag_sum_2",
    "diag_sum_3",
]


def test_bundled_corpus_names_in_order():
    assert list(load_fixtures()) == EXPECTED_NAMES


def test_bundled_corpus_spot_checks():
    fixtures = load_fixtures()
    assert fixtures["f_1"].poly == F1
    assert fixtures["sum_2"].poly == derivative_sum(2)
    assert fixtures["diag_sum_3"].poly == 7 * X**6
    assert fixtures["df3_dx"].poly == build_poly(3).diff("x")


def test_fixture_fields():
    fixtures = load_fixtures()
    for fixture in fixtures.values():
        assert isinstance(fixture, Fixture)
        assert fixture.name
        assert fixture.source_ref
        assert isinstance(fixture.poly, BiPoly)


def test_parse_skips_blanks_and_comments():
    lines = [
        "# a comment",
        "",
        '"p" "somewhere" := x + z',
        "   ",
        "  # indented comment",
        '"q" "elsewhere" := 2 z^2',
    ]
    fixtures = parse_fixture_lines(lines)
    assert list(fixtures) == ["p", "q"]
    assert fixtures["p"].poly == BiPoly({(1, 0): 1, (0, 1): 1})
    assert fixtures["q"].source_ref == "elsewhere"


def test_parse_rejects_malformed_line():
    with pytest.raises(ValueError, match=r"corpus\.txt:2.*malformed"):
        parse_fixture_lines(['"ok" "ref" := x', "not a fixture"], origin="corpus.txt")


def test_parse_rejects_duplicate_names():
    lines = ['"p" "a" := x', '"p" "b" := z']
    with pytest.raises(ValueError, match="duplicate"):
        parse_fixture_lines(lines)


def test_parse_reports_bad_expression_with_location():
    with pytest.raises(ValueError, match=r"somefile:1.*'p'"):
        parse_fixture_lines(['"p" "ref" := x +'], origin="somefile")


def test_load_from_explicit_path(tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text('# local corpus\n"cube" "test data" := x^3\n', encoding="utf-8")
    fixtures = load_fixtures(corpus)
    assert list(fixtures) == ["cube"]
    assert fixtures["cube"].poly == X**3
    # a str path works as well as a Path
    assert load_fixtures(str(corpus)) == fixtures


def test_load_error_names_the_file(tmp_path):
    corpus = tmp_path / "bad.txt"
    corpus.write_text("garbage line\n", encoding="utf-8")
    with pytest.raises(ValueError, match="bad.txt:1"):
        load_fixtures(corpus)


def test_fixture_is_frozen():
    fixture = load_fixtures()["f_1"]
    with pytest.raises(dataclasses.FrozenInstanceError):
        fixture.name = "renamed"
