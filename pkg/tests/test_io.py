import pytest
from hypothesis import given, strategies as st

from richlines import COORD_LIMIT, CanonicalLine, ParseError, gen_grid, parse_lines, parse_points, write_lines, write_points

from conftest import fuzz_corpus

coords = st.integers(-COORD_LIMIT, COORD_LIMIT)


def test_grid_round_trip():
    g = gen_grid(3, 3)
    text = write_points(g)
    assert parse_points(text) == g
    assert write_points(parse_points(text)) == text


def test_corpus_round_trip():
    for _, S, _ in fuzz_corpus()[:100]:
        text = write_points(S)
        assert parse_points(text) == S and write_points(parse_points(text)) == text


@given(st.lists(st.tuples(coords, coords), unique=True, max_size=40))
def test_points_round_trip_property(pts):
    text = write_points(pts)
    assert write_points(parse_points(text)) == text
    assert list(parse_points(text)) == pts


@given(st.lists(st.tuples(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(-10**9, 10**9)),
                max_size=30))
def test_lines_round_trip_property(triples):
    lines = [CanonicalLine(*t) for t in triples if t[:2] != (0, 0)]
    text = write_lines(lines)
    assert parse_lines(text) == lines
    assert write_lines(parse_lines(text)) == text


def test_duplicate_is_an_error_with_line_number():
    with pytest.raises(ParseError) as e:
        parse_points("1 2\n1 2")
    assert e.value.kind == "duplicate" and e.value.lineno == 2


def test_coordinate_bound():
    with pytest.raises(ParseError) as e:
        parse_points("2147483648 0")
    assert e.value.kind == "bound"
    assert len(parse_points(f"{COORD_LIMIT} -{COORD_LIMIT}\n")) == 1


@pytest.mark.parametrize("text", ["1.5 2", "1  2", "1 2 3", "a b", "+1 2", "-0 1", "01 2", "1\t2", " 1 2"])
def test_syntax_errors(text):
    with pytest.raises(ParseError) as e:
        parse_points("# header\n" + text + "\n")
    assert e.value.kind == "syntax" and e.value.lineno == 2


def test_comments_and_blank_lines_are_skipped():
    assert list(parse_points("# pts\n\n0 0\n# mid\n1 1\n")) == [(0, 0), (1, 1)]


def test_non_canonical_line_rejected():
    with pytest.raises(ParseError) as e:
        parse_lines("2 -2 0\n")
    assert e.value.kind == "canonical"
    with pytest.raises(ParseError):
        parse_lines("-1 1 0\n")
    with pytest.raises(ParseError):
        parse_lines("0 0 1\n")
    assert parse_lines("1 -1 0\n0 1 -3\n") == [(1, -1, 0), (0, 1, -3)]
