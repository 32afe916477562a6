from fractions import Fraction

import pytest

from algebra import UsageError
from utils import (InputValidator, complex_pairs, format_complex, format_seconds, parse_values,
                   resolve_system, truncate_text)


@pytest.mark.parametrize("alias,expected", [("d6", "D6"), ("B5", "B5"), ("d52", "D52"),
                                            ("D51", "D51"), ("a1d7", "A1_D7"), ("A1_D7", "A1_D7")])
def test_resolve_system(alias, expected):
    assert resolve_system(alias) == expected


def test_resolve_unknown_system():
    with pytest.raises(UsageError):
        resolve_system("e8")


def test_parse_complex_pairs():
    assert parse_values("[[1, 0], [0.5, -2], 3]") == [1 + 0j, 0.5 - 2j, 3 + 0j]
    assert parse_values('["1/4"]') == [0.25 + 0j]


def test_parse_rational():
    assert parse_values('["1/4", 0, [2, 0]]', rational=True) == [Fraction(1, 4), 0, 2]
    assert isinstance(parse_values('["1/4"]', rational=True)[0], Fraction)
    with pytest.raises(UsageError):
        parse_values("[[1, 1]]", rational=True)


@pytest.mark.parametrize("text", ["[1, 2", '{"a": 1}', "[[1, 2, 3]]", '["x"]', "[true]"])
def test_parse_rejects_malformed_input(text):
    with pytest.raises(UsageError):
        parse_values(text)


def test_formatting():
    assert format_seconds(2.5) == "2.50 s"
    assert format_seconds(0.0125) == "12.5 ms"
    assert format_seconds(float("nan")) == "N/A"
    assert format_complex(2 + 0j) == "2"
    assert format_complex(1 - 0.5j) == "1-0.5j"
    assert complex_pairs([1 + 2j]) == [[1.0, 2.0]]
    assert truncate_text("abcdef", 5) == "ab..."


def test_input_validator():
    validator = InputValidator("D6")
    ok, issues = validator.validate([0] * 7, [0] * 6, (1.0, 2.0))
    assert ok and issues == []
    ok, issues = validator.validate([0] * 6, [0] * 5, (-1.0, 2.0))
    assert not ok
    assert len(issues) == 3
    assert validator.validate_interval(0.0, 1.0) == ["t = 0 is a fixed singularity"]
    with pytest.raises(UsageError):
        validator.require([0] * 7, [float("nan")] * 6)
