# core/braid.py
"""
Braid words, the reduced Burau representation and Alexander polynomials of closures.

Generator convention: psi(s_i^-1) is the identity except row i, which carries
t, -t, 1 in columns i-1, i, i+1 (entries falling outside the matrix are dropped).
On three strands this gives [[-t, 1], [0, 1]] and [[1, 0], [t, -t]].
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce

from core.errors import ConsistencyError, InvariantError, MultiComponentError
from core.ring import LaurentPoly1, parse_braid_letters

log = logging.getLogger(__name__)

_T = LaurentPoly1.monomial(1)
_T_INV = LaurentPoly1.monomial(-1)
_ZERO = LaurentPoly1()
_ONE = LaurentPoly1.one()


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise InvariantError("a braid needs at least two strands")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i < self.strands:
                raise InvariantError(f"generator s{i} does not exist on {self.strands} strands")
            if s not in (1, -1):
                raise InvariantError(f"letter sign must be +1 or -1, got {s}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> BraidWord:
        letters = parse_braid_letters(text)
        needed = max((i for i, _ in letters), default=1) + 1
        return cls(strands or needed, tuple(letters))

    @classmethod
    def from_powers(cls, strands: int, powers) -> BraidWord:
        """Build from (generator, exponent) pairs, e.g. [(1, -2), (2, 1)]."""
        letters: list[tuple[int, int]] = []
        for i, e in powers:
            letters.extend([(i, 1 if e > 0 else -1)] * abs(e))
        return cls(strands, tuple(letters))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise InvariantError("cannot concatenate braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def mirror(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -s) for i, s in self.letters))

    def connect(self, other: BraidWord) -> BraidWord:
        """Braid whose closure is the connected sum of the two closures."""
        shift = self.strands - 1
        moved = tuple((i + shift, s) for i, s in other.letters)
        return BraidWord(self.strands + other.strands - 1, self.letters + moved)

    def permutation(self) -> tuple[int, ...]:
        perm = list(range(self.strands))
        for i, _ in self.letters:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return tuple(perm)

    def component_count(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        cycles = 0
        for start in range(self.strands):
            if seen[start]:
                continue
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
        return cycles

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        runs: list[list[int]] = []
        for i, s in self.letters:
            if runs and runs[-1][0] == i and (runs[-1][1] > 0) == (s > 0):
                runs[-1][1] += s
            else:
                runs.append([i, s])
        return " ".join(f"s{i}" if e == 1 else f"s{i}^{e}" for i, e in runs)


@dataclass(frozen=True)
class BurauMatrix:
    strands: int
    rows: tuple[tuple[LaurentPoly1, ...], ...]

    @property
    def size(self) -> int:
        return self.strands - 1

    @classmethod
    def identity(cls, strands: int) -> BurauMatrix:
        n = strands - 1
        return cls(strands, tuple(
            tuple(_ONE if r == c else _ZERO for c in range(n)) for r in range(n)
        ))

    @classmethod
    def generator(cls, strands: int, index: int, sign: int) -> BurauMatrix:
        n = strands - 1
        r = index - 1
        rows = [[_ONE if a == b else _ZERO for b in range(n)] for a in range(n)]
        if sign < 0:
            cells = {r - 1: _T, r: -_T, r + 1: _ONE}
        else:
            cells = {r - 1: _ONE, r: -_T_INV, r + 1: _T_INV}
        for c, value in cells.items():
            if 0 <= c < n:
                rows[r][c] = value
        return cls(strands, tuple(tuple(row) for row in rows))

    def entry(self, r: int, c: int) -> LaurentPoly1:
        return self.rows[r][c]

    def __mul__(self, other: BurauMatrix) -> BurauMatrix:
        cols = list(zip(*other.rows))
        return BurauMatrix(self.strands, tuple(
            tuple(sum((a * b for a, b in zip(row, col)), _ZERO) for col in cols)
            for row in self.rows
        ))

    def minus_identity(self) -> BurauMatrix:
        return BurauMatrix(self.strands, tuple(
            tuple(v - 1 if r == c else v for c, v in enumerate(row))
            for r, row in enumerate(self.rows)
        ))

    def determinant(self) -> LaurentPoly1:
        """Fraction-free Bareiss elimination; every division is exact in Z[t, t^-1]."""
        m = [list(row) for row in self.rows]
        n = len(m)
        sign = 1
        prev = _ONE
        for k in range(n - 1):
            if not m[k][k]:
                swap = next((r for r in range(k + 1, n) if m[r][k]), None)
                if swap is None:
                    return _ZERO
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
            prev = m[k][k]
        return m[n - 1][n - 1] * sign

    def is_unit(self) -> bool:
        det = self.determinant()
        return len(det) == 1 and abs(next(iter(det.coeffs.values()))) == 1

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.rows) + "]"


def burau(word: BraidWord) -> BurauMatrix:
    """Reduced Burau image of the word, multiplied in word order."""
    cache: dict[tuple[int, int], BurauMatrix] = {}

    def image(letter: tuple[int, int]) -> BurauMatrix:
        if letter not in cache:
            cache[letter] = BurauMatrix.generator(word.strands, *letter)
        return cache[letter]

    return reduce(lambda acc, letter: acc * image(letter), word.letters,
                  BurauMatrix.identity(word.strands))


def normalize_alexander(raw: LaurentPoly1) -> LaurentPoly1:
    """Fix the unit ±t^k: centre the support at 0 and force the value at t=1 to +1."""
    if not raw:
        raise ConsistencyError("Alexander polynomial of a knot cannot vanish")
    span = raw.low_degree + raw.degree
    if span % 2:
        raise ConsistencyError(f"support of ({raw}) cannot be centred")
    centred = raw.shift(-span // 2)
    value = centred.at_one()
    if value not in (1, -1):
        raise ConsistencyError(f"({raw}) evaluates to {value} at t=1")
    result = centred * value
    if not result.is_symmetric():
        raise ConsistencyError(f"normalized polynomial ({result}) is not symmetric")
    return result


def alexander_of_closure(word: BraidWord) -> LaurentPoly1:
    components = word.component_count()
    if components != 1:
        raise MultiComponentError(
            f"closure of {word} has {components} components; "
            "use the two-variable link pipeline instead"
        )
    log.debug("Burau product for %d letters on %d strands", len(word), word.strands)
    det = burau(word).minus_identity().determinant()
    raw = det.exact_div(LaurentPoly1.geometric(word.strands))
    return normalize_alexander(raw)


__all__ = [
    "BraidWord",
    "BurauMatrix",
    "burau",
    "normalize_alexander",
    "alexander_of_closure",
]
