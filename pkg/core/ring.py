# core/ring.py
"""
Exact arithmetic: rationals, Laurent polynomials in t (or t1, t2) over the integers,
and the text parsers for polynomials and braid words.

Polynomials are immutable. Zero coefficients are never stored, so equality,
hashing and printing only ever see the canonical form.
"""
from __future__ import annotations

import re
from collections.abc import Iterator, Mapping
from fractions import Fraction
from types import MappingProxyType
from typing import NamedTuple

from core.errors import ConsistencyError, PolySyntaxError

ExactRational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" or "a" exactly; decimals are rejected."""
    raw = str(text)
    m = _RATIONAL_RE.match(raw)
    if not m:
        bad = next((i for i, c in enumerate(raw) if not (c.isdigit() or c in "+-/ ")), 0)
        raise PolySyntaxError(f"not an exact rational: {raw!r}", raw, bad)
    den = int(m.group(2) or 1)
    if den == 0:
        raise PolySyntaxError("zero denominator", raw, raw.index("/") + 1)
    return Fraction(int(m.group(1)), den)


def format_rational(value) -> str:
    x = Fraction(value)
    return f"{x.numerator}/{x.denominator}"


def format_plain(value) -> str:
    """Like `format_rational`, but integers print bare."""
    x = Fraction(value)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class _Laurent:
    """Shared arithmetic for the one- and two-variable rings."""

    __slots__ = ("_coeffs", "_hash")

    _zero_key: object = 0

    def __init__(self, coeffs: Mapping | None = None):
        clean: dict = {}
        for key, value in dict(coeffs or {}).items():
            value = int(value)
            if value:
                k = self._key(key)
                clean[k] = clean.get(k, 0) + value
                if not clean[k]:
                    del clean[k]
        self._coeffs = clean
        self._hash: int | None = None

    # --- key handling, specialised per ring
    @staticmethod
    def _key(key):
        raise NotImplementedError

    @staticmethod
    def _key_add(a, b):
        raise NotImplementedError

    @staticmethod
    def _monomial_text(key) -> str:
        raise NotImplementedError

    # --- construction
    @classmethod
    def constant(cls, c: int):
        return cls({cls._zero_key: c})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.constant(1)

    # --- queries
    @property
    def coeffs(self) -> Mapping:
        return MappingProxyType(self._coeffs)

    def coeff(self, key) -> int:
        return self._coeffs.get(self._key(key), 0)

    def items(self) -> list[tuple]:
        """Terms in canonical (decreasing) order."""
        return sorted(self._coeffs.items(), reverse=True)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def at_one(self) -> int:
        return sum(self._coeffs.values())

    def is_constant(self) -> bool:
        return not self._coeffs or set(self._coeffs) == {self._zero_key}

    # --- arithmetic
    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self).constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._coeffs)
        for k, v in o._coeffs.items():
            out[k] = out.get(k, 0) + v
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for ka, va in self._coeffs.items():
            for kb, vb in o._coeffs.items():
                k = self._key_add(ka, kb)
                out[k] = out.get(k, 0) + va * vb
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = type(self).one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._coeffs == o._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._coeffs.items())))
        return self._hash

    # --- printing
    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for key, c in self.items():
            mono = self._monomial_text(key)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class LaurentPoly1(_Laurent):
    """Integer Laurent polynomial in one variable t; houses Alexander polynomials."""

    __slots__ = ()
    _zero_key = 0

    @staticmethod
    def _key(key) -> int:
        return int(key)

    @staticmethod
    def _key_add(a: int, b: int) -> int:
        return a + b

    @staticmethod
    def _monomial_text(key: int) -> str:
        if key == 0:
            return ""
        return "t" if key == 1 else f"t^{key}"

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> LaurentPoly1:
        return cls({exponent: c})

    @classmethod
    def geometric(cls, n: int) -> LaurentPoly1:
        """1 + t + ... + t^(n-1)."""
        return cls({k: 1 for k in range(n)})

    @property
    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return max(self._coeffs)

    @property
    def low_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return min(self._coeffs)

    def shift(self, k: int) -> LaurentPoly1:
        """Multiply by t^k."""
        return LaurentPoly1({e + k: c for e, c in self._coeffs.items()})

    def mirror(self) -> LaurentPoly1:
        """Substitute t -> t^-1."""
        return LaurentPoly1({-e: c for e, c in self._coeffs.items()})

    def is_symmetric(self) -> bool:
        return all(self._coeffs.get(-e) == c for e, c in self._coeffs.items())

    def evaluate(self, t) -> Fraction:
        x = Fraction(t)
        return sum((c * x**e for e, c in self._coeffs.items()), Fraction(0))

    def exact_div(self, divisor: LaurentPoly1) -> LaurentPoly1:
        """Quotient in Z[t, t^-1]; a nonzero remainder raises ConsistencyError."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._coeffs:
            return LaurentPoly1()
        top_d, low_d = divisor.degree, divisor.low_degree
        lead = divisor.coeff(top_d)
        floor = self.low_degree - low_d
        rem = dict(self._coeffs)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            e = top - top_d
            if e < floor:
                break
            c = rem[top]
            if c % lead:
                break
            q = c // lead
            quot[e] = q
            for de, dc in divisor._coeffs.items():
                k = de + e
                v = rem.get(k, 0) - q * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        if rem:
            raise ConsistencyError(f"({self}) is not divisible by ({divisor})")
        return LaurentPoly1(quot)


class LaurentPoly2(_Laurent):
    """Integer Laurent polynomial in t1, t2; houses the shifted two-variable polynomial."""

    __slots__ = ()
    _zero_key = (0, 0)

    @staticmethod
    def _key(key) -> tuple[int, int]:
        j1, j2 = key
        return int(j1), int(j2)

    @staticmethod
    def _key_add(a, b):
        return a[0] + b[0], a[1] + b[1]

    @staticmethod
    def _monomial_text(key) -> str:
        factors = []
        for name, e in (("t1", key[0]), ("t2", key[1])):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        return "*".join(factors)

    @classmethod
    def monomial(cls, j1: int, j2: int, c: int = 1) -> LaurentPoly2:
        return cls({(j1, j2): c})

    @classmethod
    def from_product(cls, first: LaurentPoly1, second: LaurentPoly1) -> LaurentPoly2:
        """first(t1) * second(t2)."""
        return cls(
            {(a, b): ca * cb for a, ca in first.coeffs.items() for b, cb in second.coeffs.items()}
        )

    def swap(self) -> LaurentPoly2:
        return LaurentPoly2({(b, a): c for (a, b), c in self._coeffs.items()})

    def bounds(self) -> tuple[int, int, int, int]:
        """(min j1, max j1, min j2, max j2); zero polynomial gives all zeros."""
        if not self._coeffs:
            return 0, 0, 0, 0
        j1s = [k[0] for k in self._coeffs]
        j2s = [k[1] for k in self._coeffs]
        return min(j1s), max(j1s), min(j2s), max(j2s)


# ---- Parsers ----

class _Token(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(r"(?P<int>\d+)|(?P<var>t[12]?)|(?P<op>[-+*^()])")
_FRACTIONAL_EXP_RE = re.compile(r"\^\s*\(?\s*[+-]?\s*\d*\s*[./]")


def _tokenize(text: str) -> list[_Token]:
    bad = _FRACTIONAL_EXP_RE.search(text)
    if bad:
        raise PolySyntaxError("non-integer exponent", text, bad.start())
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        tokens.append(_Token(m.lastgroup or "", m.group(), pos))
        pos = m.end()
    return tokens


class _PolyParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.seen: dict[str, int] = {}

    def _peek(self) -> _Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _fail(self, message: str, tok: _Token | None = None):
        pos = tok.pos if tok else len(self.text)
        raise PolySyntaxError(message, self.text, pos)

    def _is_op(self, tok: _Token | None, ops: str) -> bool:
        return tok is not None and tok.kind == "op" and tok.text in ops

    def parse(self) -> dict[tuple[int, int, int], int]:
        if not self.tokens:
            self._fail("empty polynomial")
        terms: dict[tuple[int, int, int], int] = {}
        first = True
        while self._peek() is not None:
            tok = self._peek()
            sign = 1
            if self._is_op(tok, "+-"):
                sign = -1 if tok.text == "-" else 1
                self.i += 1
            elif not first:
                self._fail("expected '+' or '-'", tok)
            coeff, key = self._term()
            terms[key] = terms.get(key, 0) + sign * coeff
            first = False
        if "t" in self.seen and ("t1" in self.seen or "t2" in self.seen):
            later = max(self.seen["t"], self.seen.get("t1", 0), self.seen.get("t2", 0))
            raise PolySyntaxError("cannot mix t with t1/t2", self.text, later)
        return terms

    def _term(self) -> tuple[int, tuple[int, int, int]]:
        coeff = 1
        have = False
        exps = {"t": 0, "t1": 0, "t2": 0}
        tok = self._peek()
        if tok is not None and tok.kind == "int":
            coeff = int(tok.text)
            have = True
            self.i += 1
            if self._is_op(self._peek(), "*"):
                self.i += 1
                nxt = self._peek()
                if nxt is None or nxt.kind != "var":
                    self._fail("expected a variable after '*'", nxt)
        while (tok := self._peek()) is not None and tok.kind == "var":
            self.seen.setdefault(tok.text, tok.pos)
            self.i += 1
            e = 1
            if self._is_op(self._peek(), "^"):
                self.i += 1
                e = self._exponent()
            exps[tok.text] += e
            have = True
            if self._is_op(self._peek(), "*"):
                self.i += 1
                nxt = self._peek()
                if nxt is None or nxt.kind != "var":
                    self._fail("expected a variable after '*'", nxt)
        if not have:
            self._fail("expected a coefficient or a monomial", tok)
        return coeff, (exps["t"], exps["t1"], exps["t2"])

    def _exponent(self) -> int:
        paren = self._is_op(self._peek(), "(")
        if paren:
            self.i += 1
        sign = 1
        if self._is_op(self._peek(), "+-"):
            sign = -1 if self._peek().text == "-" else 1
            self.i += 1
        tok = self._peek()
        if tok is None or tok.kind != "int":
            self._fail("expected an integer exponent", tok)
        self.i += 1
        if paren:
            if not self._is_op(self._peek(), ")"):
                self._fail("expected ')'", self._peek())
            self.i += 1
        return sign * int(tok.text)


def parse_poly(text: str) -> LaurentPoly1 | LaurentPoly2:
    """Parse a polynomial in t, or in t1 and t2. Constants come back one-variable."""
    parser = _PolyParser(text)
    terms = parser.parse()
    if "t1" in parser.seen or "t2" in parser.seen:
        return LaurentPoly2({(k[1], k[2]): c for k, c in terms.items()})
    return LaurentPoly1({k[0]: c for k, c in terms.items()})


def parse_poly1(text: str) -> LaurentPoly1:
    poly = parse_poly(text)
    if isinstance(poly, LaurentPoly2):
        raise PolySyntaxError("expected a polynomial in t", text, 0)
    return poly


def parse_poly2(text: str) -> LaurentPoly2:
    poly = parse_poly(text)
    if isinstance(poly, LaurentPoly1):
        if not poly.is_constant():
            raise PolySyntaxError("expected a polynomial in t1, t2", text, 0)
        return LaurentPoly2.constant(poly.coeff(0))
    return poly


_BRAID_RE = re.compile(r"s(\d+)(?:\s*\^\s*(\(\s*[+-]?\d+\s*\)|[+-]?\d+))?")


def parse_braid_letters(text: str) -> list[tuple[int, int]]:
    """Expand `s1^-2 s2 s1^3` into signed letters [(1,-1), (1,-1), (2,1), ...]."""
    letters: list[tuple[int, int]] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace() or ch == "*":
            pos += 1
            continue
        m = _BRAID_RE.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {ch!r} in braid word", text, pos)
        if m.end() < len(text) and text[m.end()] in "./":
            raise PolySyntaxError("non-integer exponent", text, m.end())
        index = int(m.group(1))
        if index < 1:
            raise PolySyntaxError("generator indices start at 1", text, pos)
        power = int(m.group(2).strip("() ")) if m.group(2) else 1
        sign = 1 if power > 0 else -1
        letters.extend([(index, sign)] * abs(power))
        pos = m.end()
    return letters


__all__ = [
    "ExactRational",
    "LaurentPoly1",
    "LaurentPoly2",
    "parse_rational",
    "format_rational",
    "format_plain",
    "parse_poly",
    "parse_poly1",
    "parse_poly2",
    "parse_braid_letters",
]
