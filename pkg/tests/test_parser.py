import pytest

from core.errors import PolySyntaxError
from core.ring import parse_braid_letters, parse_poly, parse_poly1, parse_poly2


@pytest.mark.parametrize(
    "text, position",
    [
        ("t^1/2", 1),
        ("t + x", 4),
        ("t^", 2),
        ("2*", 2),
        ("t t1", 2),
    ],
)
def test_syntax_errors_carry_positions(text, position):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(text)
    assert info.value.position == position
    assert info.value.pointer().splitlines()[1] == " " * position + "^"


def test_empty_text_is_rejected():
    with pytest.raises(PolySyntaxError):
        parse_poly("   ")


def test_missing_operator_between_terms():
    with pytest.raises(PolySyntaxError, match="expected '\\+' or '-'"):
        parse_poly("t 2")


def test_variable_families_do_not_mix():
    with pytest.raises(PolySyntaxError, match="cannot mix"):
        parse_poly("t1 + t")


def test_whitespace_insensitive():
    assert parse_poly1("t ^ -2 +  3 * t") == parse_poly1("t^-2+3*t")


def test_repeated_terms_combine():
    assert str(parse_poly1("t + t - 1 + 1")) == "2*t"
    assert str(parse_poly1("t - t")) == "0"


def test_expected_ring_is_enforced():
    with pytest.raises(PolySyntaxError):
        parse_poly1("t1 - 1")
    with pytest.raises(PolySyntaxError):
        parse_poly2("t - 1")
    assert str(parse_poly2("5")) == "5"


def test_braid_letters_expand_powers():
    assert parse_braid_letters("s1^-2 s2") == [(1, -1), (1, -1), (2, 1)]
    assert parse_braid_letters("s2^(3)*s1") == [(2, 1)] * 3 + [(1, 1)]


@pytest.mark.parametrize("text", ["s1^1.5", "s0", "x1", "s1^1/2"])
def test_bad_braid_words(text):
    with pytest.raises(PolySyntaxError):
        parse_braid_letters(text)
