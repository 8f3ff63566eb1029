# tests/strategies.py
from __future__ import annotations

from math import gcd

from hypothesis import strategies as st

from core.braid import BraidWord
from core.ring import LaurentPoly1, LaurentPoly2

small_ints = st.integers(min_value=-6, max_value=6)


def poly1s(max_terms: int = 6):
    return st.dictionaries(st.integers(-5, 5), small_ints, max_size=max_terms).map(LaurentPoly1)


def poly2s(max_terms: int = 5):
    keys = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
    return st.dictionaries(keys, small_ints, max_size=max_terms).map(LaurentPoly2)


@st.composite
def braid_words(draw, strands: int | None = None, max_len: int = 8):
    n = strands if strands is not None else draw(st.integers(2, 4))
    letter = st.tuples(st.integers(1, n - 1), st.sampled_from((1, -1)))
    return BraidWord(n, tuple(draw(st.lists(letter, max_size=max_len))))


@st.composite
def coprime_pairs(draw, low: int = 2, high: int = 60):
    """(a, n) with n >= low and gcd(a, n) = 1."""
    n = draw(st.integers(low, high))
    a = draw(st.integers(1, 5 * high).filter(lambda a: gcd(a, n) == 1))
    return a, n


@st.composite
def torus_pairs(draw, high: int = 40):
    """Coprime (p, q) with p > q >= 2."""
    q = draw(st.integers(2, high - 1))
    p = draw(st.integers(q + 1, high).filter(lambda p: gcd(p, q) == 1))
    return p, q
